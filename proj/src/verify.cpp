#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include <omp.h>

#include "mhg/algebra.hpp"
#include "mhg/enumerate.hpp"
#include "mhg/io.hpp"
#include "mhg/sumop.hpp"

namespace mhg {

namespace {

int thread_count(int jobs) { return jobs > 1 ? jobs : (jobs == 1 ? 1 : omp_get_max_threads()); }

// Smallest index in [0, count) for which fails(i) holds, or count. The scan is
// split across threads but the answer does not depend on the split.
template <class Pred>
std::int64_t first_failure(std::int64_t count, int jobs, Pred&& fails) {
  std::int64_t first = count;
  if (jobs == 1) {
    for (std::int64_t i = 0; i < count; ++i)
      if (fails(i)) return i;
    return count;
  }
#pragma omp parallel for schedule(dynamic, 8) reduction(min : first) num_threads(thread_count(jobs))
  for (std::int64_t i = 0; i < count; ++i) {
    if (i < first && fails(i)) first = i;
  }
  return first;
}

struct SumOutcome {
  std::optional<MetricSpace> sum;
  std::optional<std::string> violation;
};

SumOutcome try_sum(const ParameterSequence& p, const MetricSpace& a, const MetricSpace& b, Distance m) {
  SumOutcome out;
  try {
    out.sum = sum_m(a, b, m);
  } catch (const TriangleViolation& e) {
    out.violation = std::string("not a metric space: ") + e.what();
    return out;
  }
  out.violation = age_violation(p, *out.sum);
  return out;
}

}  // namespace

Report verify_closure(const ParameterSequence& p, Distance m, int max_total, int jobs) {
  Report r;
  r.check = "closure";
  r.degree = max_total;
  if (max_total < 2) {
    r.details["pairs"] = 0;
    return r;
  }
  EnumOptions opt;
  opt.jobs = jobs;
  const auto levels = enumerate_levels(p, max_total - 1, opt);

  // Canonical order: total size ascending, then |A| descending, then codes.
  std::vector<std::pair<const TypeEntry*, const TypeEntry*>> pairs;
  for (int total = 2; total <= max_total; ++total)
    for (int sa = total - 1; sa >= total - sa; --sa) {
      const Level& la = levels[static_cast<std::size_t>(sa)];
      const Level& lb = levels[static_cast<std::size_t>(total - sa)];
      for (std::size_t i = 0; i < la.size(); ++i)
        for (std::size_t j = (sa == total - sa ? i : 0); j < lb.size(); ++j) pairs.emplace_back(&la[i], &lb[j]);
    }

  const auto count = static_cast<std::int64_t>(pairs.size());
  const std::int64_t bad = first_failure(count, jobs, [&](std::int64_t i) {
    const auto& [a, b] = pairs[static_cast<std::size_t>(i)];
    return try_sum(p, a->rep, b->rep, m).violation.has_value();
  });
  r.details["pairs"] = count;
  if (bad == count) return r;

  const auto& [a, b] = pairs[static_cast<std::size_t>(bad)];
  const SumOutcome o = try_sum(p, a->rep, b->rep, m);
  r.pass = false;
  r.message = *o.violation;
  r.witness = json{{"a", to_json(a->rep)}, {"b", to_json(b->rep)}, {"m", m}, {"violation", *o.violation}};
  if (o.sum) {
    r.witness["sum"] = to_json(*o.sum);
    const Decomposition dec = decompose(*o.sum, m);
    json factors = json::array();
    bool all_members = true;
    for (const auto& f : dec.factors) {
      factors.push_back(to_json(f));
      all_members = all_members && in_age(p, f);
    }
    r.witness["sum_factors"] = factors;
    r.witness["factors_in_age"] = all_members;
  } else {
    r.witness["sum"] = nullptr;
  }
  return r;
}

namespace {

std::optional<std::string> freeness_violation(const ParameterSequence& p, const TypeEntry& t, Distance m,
                                              json& witness) {
  const MetricSpace& a = t.rep;
  const int n = a.size();
  for (const auto& partition : set_partitions(n)) {
    std::vector<MetricSpace> parts;
    for (const auto& block : partition) parts.push_back(induced(a, block));
    std::optional<std::string> bad;
    std::optional<MetricSpace> s;
    try {
      s = sum_all(parts, m);
      bad = age_violation(p, *s);
      if (!bad && !leq(*s, a, m)) bad = "sum of parts is not below A in the freeness order";
    } catch (const TriangleViolation& e) {
      bad = std::string("sum of parts is not metric: ") + e.what();
    }
    if (bad) {
      witness = json{{"a", to_json(a)}, {"partition", partition}, {"m", m}, {"violation", *bad}};
      if (s) witness["sum"] = to_json(*s);
      return bad;
    }
  }

  const Decomposition dec = decompose(a, m);
  if (canonical_code(sum_all(dec.factors, m)) != t.code) {
    witness = json{{"a", to_json(a)}, {"m", m}, {"violation", "factors do not recompose to A"}};
    return "factors do not recompose to A";
  }
  std::vector<Point> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (decompose(relabel(a, perm), m).codes != dec.codes) {
      witness = json{{"a", to_json(a)}, {"m", m}, {"relabeling", perm},
                     {"violation", "factor multiset changes under relabeling"}};
      return "factor multiset changes under relabeling";
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace

Report verify_freeness(const ParameterSequence& p, Distance m, int max_size, int jobs) {
  Report r;
  r.check = "freeness";
  r.degree = max_size;
  EnumOptions opt;
  opt.jobs = jobs;
  const auto levels = enumerate_levels(p, std::max(max_size, 0), opt);
  std::vector<const TypeEntry*> members;
  for (std::size_t n = 1; n < levels.size(); ++n)
    for (const auto& t : levels[n]) members.push_back(&t);

  const auto count = static_cast<std::int64_t>(members.size());
  const std::int64_t bad = first_failure(count, jobs, [&](std::int64_t i) {
    json ignored;
    return freeness_violation(p, *members[static_cast<std::size_t>(i)], m, ignored).has_value();
  });
  r.details["members"] = count;
  if (bad == count) return r;
  r.pass = false;
  r.message = *freeness_violation(p, *members[static_cast<std::size_t>(bad)], m, r.witness);
  return r;
}

Report verify_hilbert(const ParameterSequence& p, Distance m, int n_max, const EnumOptions& opt) {
  Report r;
  r.check = "hilbert";
  r.degree = n_max;
  const auto levels = enumerate_levels(p, n_max, opt);
  Profile prof;
  for (const auto& lvl : levels) prof.counts.emplace_back(static_cast<unsigned long>(lvl.size()));
  const Census census = census_of(levels, m);
  const Profile euler = euler_transform(census, n_max);
  r.details = json{{"m", m}, {"profile", to_json(prof)}, {"census", to_json(census)}, {"euler", to_json(euler)}};
  for (int d = 0; d <= n_max; ++d) {
    if (prof[d] != euler[d]) {
      r.pass = false;
      r.witness = json{{"degree", d}, {"profile", prof[d].get_str()}, {"euler", euler[d].get_str()}};
      r.message = "profile and Euler transform differ at degree " + std::to_string(d);
      break;
    }
  }
  return r;
}

Report verify_polynomial_rank(OrbitAlgebra& alg, Distance m, int degree) {
  Report r;
  r.check = "rank";
  r.degree = degree;
  if (degree < 0) throw InvalidInput("degree must be nonnegative");

  std::vector<CanonicalCode> generators;
  std::vector<int> sizes;
  for (int d = 1; d <= degree; ++d)
    for (const auto& t : alg.types(d))
      if (indecomposable(t.rep, m)) {
        generators.push_back(t.code);
        sizes.push_back(d);
      }
  const auto monomials = generator_monomials(sizes, degree);
  const std::size_t types = alg.types(degree).size();

  // Prefix products: a monomial minus its last factor is again a monomial.
  std::map<std::vector<std::size_t>, std::vector<mpq_class>> cache;
  cache[{}] = alg.dense(alg.unit());
  auto eval = [&](auto& self, const std::vector<std::size_t>& mono) -> const std::vector<mpq_class>& {
    auto it = cache.find(mono);
    if (it != cache.end()) return it->second;
    std::vector<std::size_t> head(mono.begin(), mono.end() - 1);
    int head_degree = 0;
    for (std::size_t g : head) head_degree += sizes[g];
    OrbitFunction f = alg.sparse(head_degree, self(self, head));
    OrbitFunction prod = alg.product(f, alg.indicator(generators[mono.back()]));
    return cache.emplace(mono, alg.dense(prod)).first->second;
  };

  std::vector<std::vector<mpq_class>> rows;
  rows.reserve(monomials.size());
  for (const auto& mono : monomials) rows.push_back(eval(eval, mono));
  const std::size_t rank = rational_rank(rows);

  r.details = json{{"m", m}, {"generators", generators.size()}, {"monomials", monomials.size()},
                   {"types", types}, {"rank", rank}};
  if (monomials.size() != types || rank != types) {
    r.pass = false;
    r.witness = json{{"degree", degree}, {"monomials", monomials.size()}, {"types", types}, {"rank", rank}};
    r.message = "monomial matrix is not square of full rank";
  }
  return r;
}

Report verify_polynomial_rank(const ParameterSequence& p, Distance m, int degree, const EnumOptions& opt) {
  OrbitAlgebra alg(p, opt);
  return verify_polynomial_rank(alg, m, degree);
}

}  // namespace mhg
