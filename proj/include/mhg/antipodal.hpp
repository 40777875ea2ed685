#ifndef MHG_ANTIPODAL_HPP
#define MHG_ANTIPODAL_HPP

#include <compare>
#include <stdexcept>
#include <string>

#include "mhg/enumerate.hpp"
#include "mhg/metric_space.hpp"
#include "mhg/params.hpp"
#include "mhg/report.hpp"

namespace mhg {

/// Bipartite antipodal spaces of diameter 3: (k, m, n) with k antipodal pairs,
/// smaller part of size m and larger part of size n, k <= m <= n.
struct AntipodalSignature {
  int k = 0;
  int m = 0;
  int n = 0;

  bool valid() const { return 0 <= k && k <= m && m <= n; }
  int points() const { return m + n; }
  friend AntipodalSignature operator+(AntipodalSignature a, AntipodalSignature b) {
    return {a.k + b.k, a.m + b.m, a.n + b.n};
  }
  friend auto operator<=>(const AntipodalSignature&, const AntipodalSignature&) = default;
  std::string to_string() const;
};

class NotInClass : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (delta=3, K1=inf, K2=0, C0=8, C1=7, S={}).
ParameterSequence antipodal_parameters();

/// Generators x = (0,0,1), y = (0,1,1), z = (1,1,1).
inline constexpr AntipodalSignature kGenX{0, 0, 1};
inline constexpr AntipodalSignature kGenY{0, 1, 1};
inline constexpr AntipodalSignature kGenZ{1, 1, 1};

/// Throws NotInClass if A is not in the antipodal age or the parts cannot be
/// recovered from distance parity.
AntipodalSignature alpha(const MetricSpace& a);

/// Parts of sizes m and n; k matched cross pairs at 3, other cross pairs at 1,
/// distance 2 inside a part. Points 0..m-1 form the smaller part.
MetricSpace beta(const AntipodalSignature& s);

struct GeneratorMultiplicities {
  int z = 0;  // (1,1,1)
  int y = 0;  // (0,1,1)
  int x = 0;  // (0,0,1)
  friend bool operator==(const GeneratorMultiplicities&, const GeneratorMultiplicities&) = default;
};

/// s = z(1,1,1) + y(0,1,1) + x(0,0,1) with z = k, y = m - k, x = n - m.
GeneratorMultiplicities signature_decompose(const AntipodalSignature& s);
AntipodalSignature signature_compose(const GeneratorMultiplicities& g);

/// k1 <= k2, m1 <= m2 and m1 + n1 = m2 + n2.
bool signature_leq(const AntipodalSignature& s1, const AntipodalSignature& s2);

/// a_n = #{(k, m, n') : k <= m <= n', m + n' = n}.
Profile antipodal_profile(int n_max);

/// Three-way profile agreement (triples, Euler transform of c = (1,2), general
/// enumeration up to enum_max), alpha/beta bijection and the freeness order on
/// partitions up to order_max points.
Report verify_antipodal(int n_max, int enum_max, int order_max, const EnumOptions& opt = {});

}  // namespace mhg

#endif  // MHG_ANTIPODAL_HPP
