#include "mhg/algebra.hpp"

#include <algorithm>
#include <bit>

#include <omp.h>

namespace mhg {

mpq_class OrbitFunction::at(const CanonicalCode& c) const {
  auto it = values.find(c);
  return it == values.end() ? mpq_class(0) : it->second;
}

void OrbitFunction::normalize() { std::erase_if(values, [](const auto& kv) { return kv.second == 0; }); }

bool operator==(const OrbitFunction& a, const OrbitFunction& b) {
  if (a.degree != b.degree) return false;
  auto nonzero = [](const OrbitFunction& f) {
    OrbitFunction g = f;
    g.normalize();
    return g.values;
  };
  return nonzero(a) == nonzero(b);
}

OrbitAlgebra::OrbitAlgebra(ParameterSequence p, EnumOptions opt) : p_(std::move(p)), opt_(opt) {}

void OrbitAlgebra::ensure_levels(int n) {
  if (n < 0) throw InvalidInput("negative degree");
  if (levels_.empty()) levels_ = enumerate_levels(p_, 0, opt_);
  while (static_cast<int>(levels_.size()) <= n) {
    const int next = static_cast<int>(levels_.size());
    EnumOptions step = opt_;
    Level lvl = extend_level(p_, levels_.back(), step);
    if (lvl.size() > opt_.budget.max_types_per_size)
      throw ResourceLimit("type budget exceeded at size " + std::to_string(next));
    levels_.push_back(std::move(lvl));
  }
}

const Level& OrbitAlgebra::types(int n) {
  ensure_levels(n);
  return levels_[static_cast<std::size_t>(n)];
}

std::size_t OrbitAlgebra::index_of(const CanonicalCode& c) {
  const Level& lvl = types(c.size());
  auto it = std::lower_bound(lvl.begin(), lvl.end(), c, [](const TypeEntry& e, const CanonicalCode& k) {
    return e.code < k;
  });
  if (it == lvl.end() || it->code != c) throw InvalidInput("type " + c.to_string() + " is not in the age");
  return static_cast<std::size_t>(it - lvl.begin());
}

void OrbitAlgebra::ensure_subsets(int n) {
  ensure_levels(n);
  if (static_cast<int>(subsets_.size()) > n && !subsets_[static_cast<std::size_t>(n)].empty()) return;
  if (n > 24) throw ResourceLimit("subset tables limited to 24 points");
  if (subsets_.size() <= static_cast<std::size_t>(n)) subsets_.resize(static_cast<std::size_t>(n) + 1);
  const Level& lvl = levels_[static_cast<std::size_t>(n)];
  const std::size_t masks = std::size_t{1} << n;
  std::vector<std::uint32_t> table(lvl.size() * masks);
  const auto count = static_cast<std::int64_t>(lvl.size());
  const int threads = opt_.jobs == 1 ? 1 : (opt_.jobs > 1 ? opt_.jobs : omp_get_max_threads());
  // Induced subspaces of members are members, so every lookup succeeds.
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (std::int64_t t = 0; t < count; ++t) {
    const MetricSpace& rep = lvl[static_cast<std::size_t>(t)].rep;
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
      const CanonicalCode c = canonical_code(induced_mask(rep, mask));
      const Level& sub = levels_[static_cast<std::size_t>(std::popcount(mask))];
      auto it = std::lower_bound(sub.begin(), sub.end(), c, [](const TypeEntry& e, const CanonicalCode& k) {
        return e.code < k;
      });
      table[static_cast<std::size_t>(t) * masks + mask] = static_cast<std::uint32_t>(it - sub.begin());
    }
  }
  subsets_[static_cast<std::size_t>(n)] = std::move(table);
}

std::uint32_t OrbitAlgebra::subset_type(int n, std::size_t t, std::uint32_t mask) {
  ensure_subsets(n);
  return subsets_[static_cast<std::size_t>(n)][t * (std::size_t{1} << n) + mask];
}

OrbitFunction OrbitAlgebra::indicator(const CanonicalCode& c) {
  index_of(c);
  OrbitFunction f;
  f.degree = c.size();
  f.values[c] = 1;
  return f;
}

OrbitFunction OrbitAlgebra::unit() { return indicator(CanonicalCode{}); }

std::vector<mpq_class> OrbitAlgebra::dense(const OrbitFunction& f) {
  const Level& lvl = types(f.degree);
  std::vector<mpq_class> out(lvl.size(), mpq_class(0));
  for (const auto& [code, v] : f.values) {
    if (code.size() != f.degree) throw InvalidInput("orbit function key of the wrong size");
    out[index_of(code)] = v;
  }
  return out;
}

OrbitFunction OrbitAlgebra::sparse(int degree, const std::vector<mpq_class>& values) {
  const Level& lvl = types(degree);
  OrbitFunction f;
  f.degree = degree;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) f.values.emplace(lvl[i].code, values[i]);
  return f;
}

std::vector<mpq_class> OrbitAlgebra::product_dense(const std::vector<mpq_class>& f, int m,
                                                   const std::vector<mpq_class>& g, int k, bool serial) {
  const int n = m + k;
  ensure_subsets(n);
  const std::size_t masks = std::size_t{1} << n;
  const std::uint32_t full = static_cast<std::uint32_t>(masks - 1);
  const auto& table = subsets_[static_cast<std::size_t>(n)];
  const std::size_t types = levels_[static_cast<std::size_t>(n)].size();

  std::vector<std::uint32_t> split_masks;
  for (std::uint32_t mask = 0; mask < masks; ++mask)
    if (std::popcount(mask) == m) split_masks.push_back(mask);

  std::vector<mpq_class> out(types, mpq_class(0));
  auto evaluate = [&](std::size_t t) {
    const std::uint32_t* row = table.data() + t * masks;
    mpq_class acc = 0;
    for (std::uint32_t mask : split_masks) {
      const mpq_class& a = f[row[mask]];
      if (a == 0) continue;
      const mpq_class& b = g[row[full & ~mask]];
      if (b != 0) acc += a * b;
    }
    out[t] = acc;
  };
  if (serial || opt_.jobs == 1) {
    for (std::size_t t = 0; t < types; ++t) evaluate(t);
  } else {
    const int threads = opt_.jobs > 1 ? opt_.jobs : omp_get_max_threads();
    const auto count = static_cast<std::int64_t>(types);
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
    for (std::int64_t t = 0; t < count; ++t) evaluate(static_cast<std::size_t>(t));
  }
  return out;
}

OrbitFunction OrbitAlgebra::product(const OrbitFunction& f, const OrbitFunction& g) {
  return sparse(f.degree + g.degree, product_dense(dense(f), f.degree, dense(g), g.degree, false));
}

OrbitFunction OrbitAlgebra::product_serial(const OrbitFunction& f, const OrbitFunction& g) {
  return sparse(f.degree + g.degree, product_dense(dense(f), f.degree, dense(g), g.degree, true));
}

OrbitFunction orbit_product(const OrbitFunction& f, const OrbitFunction& g, const ParameterSequence& p) {
  OrbitAlgebra alg(p);
  return alg.product(f, g);
}

std::size_t rational_rank(const std::vector<std::vector<mpq_class>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<mpz_class>> a;
  a.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != cols) throw InvalidInput("ragged matrix");
    mpz_class l = 1;
    for (const auto& q : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> z(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class scaled = r[j] * l;
      z[j] = scaled.get_num();
    }
    a.push_back(std::move(z));
  }
  // Bareiss: after step k every entry is an exact (k+1)-minor, so the division
  // by the previous pivot is exact.
  const std::size_t m = a.size();
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        a[i][j] = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::size_t>> generator_monomials(const std::vector<int>& generator_sizes, int degree) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto& self, std::size_t from, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t g = from; g < generator_sizes.size(); ++g) {
      if (generator_sizes[g] > remaining || generator_sizes[g] <= 0) continue;
      cur.push_back(g);
      self(self, g, remaining - generator_sizes[g]);
      cur.pop_back();
    }
  };
  if (degree >= 0) rec(rec, 0, degree);
  return out;
}

}  // namespace mhg
