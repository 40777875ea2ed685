#include "mhg/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <string>
#include <unordered_set>

#include <omp.h>

#include "mhg/sumop.hpp"

namespace mhg {

namespace {

using Clock = std::chrono::steady_clock;

// Calls emit(space) for every one-point extension of `parent` in the age.
// The new point is the last one; only triangles and Henson embeddings through
// it are checked, since `parent` is already a member.
template <class Emit>
void for_each_extension(const ParameterSequence& p, const MetricSpace& parent, Emit&& emit) {
  const int base = parent.size();
  const int n = base + 1;
  const int delta = p.delta();
  std::vector<Distance> col(static_cast<std::size_t>(base), 0);

  auto finish = [&] {
    std::vector<Distance> upper(pair_count(static_cast<std::size_t>(n)));
    MetricSpace shape = MetricSpace::from_trusted(n, upper);
    for (Point x = 0; x < base; ++x)
      for (Point y = x + 1; y < base; ++y) upper[shape.index(x, y)] = parent.d(x, y);
    for (Point x = 0; x < base; ++x) upper[shape.index(x, base)] = col[x];
    MetricSpace s = MetricSpace::from_trusted(n, std::move(upper));
    for (const auto& h : p.henson().constraints())
      if (embeds(h, s, base)) return;
    emit(std::move(s));
  };

  auto assign = [&](auto& self, int i) -> void {
    if (i == base) {
      finish();
      return;
    }
    for (Distance v = 1; v <= delta; ++v) {
      bool ok = true;
      for (Point j = 0; j < i && ok; ++j) ok = triangle_allowed(p, TriangleType(parent.d(j, i), col[j], v));
      if (!ok) continue;
      col[i] = v;
      self(self, i + 1);
    }
  };
  assign(assign, 0);
}

TypeEntry make_entry(const MetricSpace& s) {
  CanonicalCode code = canonical_code(s);
  MetricSpace rep = code.representative();
  return {std::move(code), std::move(rep)};
}

void sort_unique(Level& level) {
  std::sort(level.begin(), level.end(), [](const TypeEntry& a, const TypeEntry& b) { return a.code < b.code; });
  level.erase(std::unique(level.begin(), level.end(),
                          [](const TypeEntry& a, const TypeEntry& b) { return a.code == b.code; }),
              level.end());
}

void check_budget(const Budget& budget, std::size_t count, int n, Clock::time_point start) {
  if (count > budget.max_types_per_size)
    throw ResourceLimit("type budget exceeded at size " + std::to_string(n) + ": " + std::to_string(count) +
                        " > " + std::to_string(budget.max_types_per_size));
  if (budget.max_time && Clock::now() - start > *budget.max_time)
    throw ResourceLimit("time budget of " + std::to_string(budget.max_time->count()) + "s exceeded at size " +
                        std::to_string(n));
}

Level level_zero() { return Level{make_entry(MetricSpace{})}; }

}  // namespace

Level extend_level_serial(const ParameterSequence& p, const Level& parents) {
  std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
  Level out;
  for (const auto& parent : parents) {
    for_each_extension(p, parent.rep, [&](MetricSpace s) {
      CanonicalCode code = canonical_code(s);
      if (seen.insert(code).second) out.push_back({code, code.representative()});
    });
  }
  sort_unique(out);
  return out;
}

Level extend_level(const ParameterSequence& p, const Level& parents, const EnumOptions& opt) {
  if (opt.jobs == 1) return extend_level_serial(p, parents);
  const int threads = opt.jobs > 1 ? opt.jobs : omp_get_max_threads();
  const auto start = Clock::now();
  std::vector<Level> partial(static_cast<std::size_t>(threads));
  std::atomic<bool> over_budget{false};
  const auto count = static_cast<std::int64_t>(parents.size());

#pragma omp parallel num_threads(threads)
  {
    const int tid = omp_get_thread_num();
    std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
    Level& local = partial[static_cast<std::size_t>(tid)];
#pragma omp for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
      if (over_budget.load(std::memory_order_relaxed)) continue;
      for_each_extension(p, parents[static_cast<std::size_t>(i)].rep, [&](MetricSpace s) {
        CanonicalCode code = canonical_code(s);
        if (seen.insert(code).second) local.push_back({code, code.representative()});
      });
      if (local.size() > opt.budget.max_types_per_size ||
          (opt.budget.max_time && Clock::now() - start > *opt.budget.max_time))
        over_budget.store(true, std::memory_order_relaxed);
    }
  }

  Level out;
  std::size_t total = 0;
  for (const auto& part : partial) total += part.size();
  out.reserve(total);
  for (auto& part : partial) std::move(part.begin(), part.end(), std::back_inserter(out));
  sort_unique(out);
  if (over_budget) {
    const int n = parents.empty() ? 0 : parents.front().code.size() + 1;
    check_budget(opt.budget, out.size(), n, start);
    throw ResourceLimit("budget exceeded at size " + std::to_string(n));
  }
  return out;
}

std::vector<Level> enumerate_levels_serial(const ParameterSequence& p, int n_max, const Budget& budget) {
  const auto start = Clock::now();
  std::vector<Level> levels{level_zero()};
  for (int n = 1; n <= n_max; ++n) {
    levels.push_back(extend_level_serial(p, levels.back()));
    check_budget(budget, levels.back().size(), n, start);
  }
  return levels;
}

std::vector<Level> enumerate_levels(const ParameterSequence& p, int n_max, const EnumOptions& opt) {
  if (n_max < 0) throw InvalidInput("size must be nonnegative");
  if (opt.jobs == 1) return enumerate_levels_serial(p, n_max, opt.budget);
  const auto start = Clock::now();
  std::vector<Level> levels{level_zero()};
  for (int n = 1; n <= n_max; ++n) {
    EnumOptions step = opt;
    if (opt.budget.max_time) {
      const auto used = std::chrono::duration_cast<std::chrono::seconds>(Clock::now() - start);
      step.budget.max_time = *opt.budget.max_time - used;
    }
    levels.push_back(extend_level(p, levels.back(), step));
    check_budget(opt.budget, levels.back().size(), n, start);
  }
  return levels;
}

Level enumerate_age(const ParameterSequence& p, int n, const EnumOptions& opt) {
  return std::move(enumerate_levels(p, n, opt).back());
}

Profile profile(const ParameterSequence& p, int n_max, const EnumOptions& opt) {
  Profile out;
  for (const auto& level : enumerate_levels(p, n_max, opt)) out.counts.emplace_back(static_cast<unsigned long>(level.size()));
  return out;
}

Census census_of(const std::vector<Level>& levels, Distance m) {
  Census c;
  c.counts.assign(levels.size(), mpz_class(0));
  for (std::size_t d = 1; d < levels.size(); ++d) {
    unsigned long k = 0;
    for (const auto& t : levels[d])
      if (indecomposable(t.rep, m)) ++k;
    c.counts[d] = k;
  }
  return c;
}

Census indecomposable_census(const ParameterSequence& p, Distance m, int n_max, const EnumOptions& opt) {
  return census_of(enumerate_levels(p, n_max, opt), m);
}

std::size_t oracle_enumerate(const ParameterSequence& p, int n, int bound) {
  if (n < 0) throw InvalidInput("size must be nonnegative");
  if (n > bound)
    throw ResourceLimit("oracle enumeration limited to n <= " + std::to_string(bound) + ", asked for " +
                        std::to_string(n));
  if (n <= 1) return 1;
  const std::size_t pairs = pair_count(static_cast<std::size_t>(n));
  const int delta = p.delta();
  std::vector<Distance> upper(pairs, 1);
  std::vector<MetricSpace> reps;
  for (;;) {
    std::optional<MetricSpace> space;
    try {
      space.emplace(n, upper);
    } catch (const TriangleViolation&) {
    }
    if (space && in_age(p, *space)) {
      const bool fresh = std::none_of(reps.begin(), reps.end(),
                                      [&](const MetricSpace& r) { return isometric_brute_force(r, *space); });
      if (fresh) reps.push_back(*space);
    }
    std::size_t i = 0;
    while (i < pairs && upper[i] == delta) upper[i++] = 1;
    if (i == pairs) break;
    ++upper[i];
  }
  return reps.size();
}

}  // namespace mhg
