#ifndef MHG_ALGEBRA_HPP
#define MHG_ALGEBRA_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include <gmpxx.h>

#include "mhg/canonical.hpp"
#include "mhg/enumerate.hpp"
#include "mhg/params.hpp"
#include "mhg/report.hpp"

namespace mhg {

/// Power series truncated after x^order, exact rational coefficients.
class RationalSeries {
 public:
  explicit RationalSeries(int order);
  RationalSeries(int order, std::vector<mpq_class> coeffs);

  static RationalSeries one(int order);
  /// c * x^k truncated to `order`.
  static RationalSeries monomial(int order, int k, const mpq_class& c = 1);
  /// 1 / (1 - x^d), d >= 1.
  static RationalSeries geometric(int order, int d);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const mpq_class& operator[](std::size_t i) const { return coeffs_[i]; }
  mpq_class& operator[](std::size_t i) { return coeffs_[i]; }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  /// Results keep the smaller of the two truncation orders.
  friend RationalSeries operator+(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator-(const RationalSeries& a, const RationalSeries& b);
  friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

  /// Multiplicative inverse; requires a nonzero constant term.
  RationalSeries inverse() const;
  /// In-place division by (1 - x^d).
  RationalSeries& divide_one_minus_x_pow(int d);

 private:
  std::vector<mpq_class> coeffs_;
};

/// Coefficients of prod_{d=1}^{n_max} (1 - x^d)^(-c_d) up to x^n_max.
Profile euler_transform(const Census& c, int n_max);

/// A graded element of the orbit algebra: rational values on the isomorphism
/// types of one size. Missing keys are 0.
struct OrbitFunction {
  int degree = 0;
  std::map<CanonicalCode, mpq_class> values;

  mpq_class at(const CanonicalCode& c) const;
  /// Drops zero entries.
  void normalize();
  friend bool operator==(const OrbitFunction& a, const OrbitFunction& b);
};

/// Orbit algebra of the age of a parameter sequence, with the product
/// (fg)(A) = sum over ordered splits A = X1 + X2 (|X1| = deg f) of f(X1) g(X2).
///
/// Type lists are enumerated on demand. For every type and every point subset,
/// the index of the induced type is tabulated once per size, which makes each
/// product a sum over subset masks.
class OrbitAlgebra {
 public:
  explicit OrbitAlgebra(ParameterSequence p, EnumOptions opt = {});

  const ParameterSequence& params() const { return p_; }
  /// Types of size n, sorted by code.
  const Level& types(int n);
  /// Position of c inside types(c.size()). Throws InvalidInput if absent.
  std::size_t index_of(const CanonicalCode& c);

  OrbitFunction indicator(const CanonicalCode& c);
  /// Indicator of the empty type.
  OrbitFunction unit();

  OrbitFunction product(const OrbitFunction& f, const OrbitFunction& g);
  /// Same result via a single-threaded loop.
  OrbitFunction product_serial(const OrbitFunction& f, const OrbitFunction& g);

  /// Dense value vector of f over types(f.degree).
  std::vector<mpq_class> dense(const OrbitFunction& f);
  OrbitFunction sparse(int degree, const std::vector<mpq_class>& values);

  /// Index into types(popcount(mask)) of the subspace of type t picked by mask.
  std::uint32_t subset_type(int n, std::size_t t, std::uint32_t mask);

 private:
  void ensure_levels(int n);
  void ensure_subsets(int n);
  std::vector<mpq_class> product_dense(const std::vector<mpq_class>& f, int m, const std::vector<mpq_class>& g,
                                       int k, bool serial);

  ParameterSequence p_;
  EnumOptions opt_;
  std::vector<Level> levels_;
  // subsets_[n][t * 2^n + mask]
  std::vector<std::vector<std::uint32_t>> subsets_;
};

/// Convenience wrapper building a temporary algebra for p.
OrbitFunction orbit_product(const OrbitFunction& f, const OrbitFunction& g, const ParameterSequence& p);

/// Rank over Q by fraction-free (Bareiss) elimination after clearing
/// denominators row by row.
std::size_t rational_rank(const std::vector<std::vector<mpq_class>>& rows);

/// profile(p, n_max) against the Euler transform of the indecomposable census.
Report verify_hilbert(const ParameterSequence& p, Distance m, int n_max, const EnumOptions& opt = {});

/// Monomials in indecomposable indicators of total degree n, evaluated on the
/// size-n types. Passes iff the matrix is square and of full rank.
Report verify_polynomial_rank(const ParameterSequence& p, Distance m, int degree, const EnumOptions& opt = {});
Report verify_polynomial_rank(OrbitAlgebra& alg, Distance m, int degree);

/// Multisets of generator indices (nondecreasing) whose sizes sum to `degree`.
std::vector<std::vector<std::size_t>> generator_monomials(const std::vector<int>& generator_sizes, int degree);

}  // namespace mhg

#endif  // MHG_ALGEBRA_HPP
