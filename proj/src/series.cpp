#include "mhg/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace mhg {

RationalSeries::RationalSeries(int order) {
  if (order < 0) throw InvalidInput("series order must be nonnegative");
  coeffs_.assign(static_cast<std::size_t>(order) + 1, mpq_class(0));
}

RationalSeries::RationalSeries(int order, std::vector<mpq_class> coeffs) : RationalSeries(order) {
  for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
}

RationalSeries RationalSeries::one(int order) { return monomial(order, 0); }

RationalSeries RationalSeries::monomial(int order, int k, const mpq_class& c) {
  RationalSeries s(order);
  if (k >= 0 && k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
  return s;
}

RationalSeries RationalSeries::geometric(int order, int d) {
  if (d < 1) throw InvalidInput("geometric series needs d >= 1");
  RationalSeries s(order);
  for (int i = 0; i <= order; i += d) s.coeffs_[static_cast<std::size_t>(i)] = 1;
  return s;
}

RationalSeries operator+(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries r(std::min(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) r[i] = a[i] + b[i];
  return r;
}

RationalSeries operator-(const RationalSeries& a, const RationalSeries& b) {
  RationalSeries r(std::min(a.order(), b.order()));
  for (int i = 0; i <= r.order(); ++i) r[i] = a[i] - b[i];
  return r;
}

RationalSeries operator*(const RationalSeries& a, const RationalSeries& b) {
  const int n = std::min(a.order(), b.order());
  RationalSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

RationalSeries RationalSeries::inverse() const {
  if (coeffs_[0] == 0) throw std::domain_error("series with zero constant term has no inverse");
  const int n = order();
  RationalSeries r(n);
  r[0] = 1 / coeffs_[0];
  for (int i = 1; i <= n; ++i) {
    mpq_class acc = 0;
    for (int j = 1; j <= i; ++j) acc += coeffs_[j] * r[i - j];
    r[i] = -acc * r[0];
  }
  return r;
}

RationalSeries& RationalSeries::divide_one_minus_x_pow(int d) {
  if (d < 1) throw InvalidInput("divide_one_minus_x_pow needs d >= 1");
  // b = a / (1 - x^d)  <=>  b_i = a_i + b_{i-d}
  for (std::size_t i = static_cast<std::size_t>(d); i < coeffs_.size(); ++i) coeffs_[i] += coeffs_[i - d];
  return *this;
}

Profile euler_transform(const Census& c, int n_max) {
  RationalSeries s = RationalSeries::one(n_max);
  for (int d = 1; d <= n_max && static_cast<std::size_t>(d) < c.size(); ++d) {
    if (c[d] < 0) throw InvalidInput("negative generator count");
    for (mpz_class k = 0; k < c[d]; ++k) s.divide_one_minus_x_pow(d);
  }
  Profile out;
  for (const auto& q : s.coeffs()) out.counts.push_back(q.get_num());
  return out;
}

}  // namespace mhg
