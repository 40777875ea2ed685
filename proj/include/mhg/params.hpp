#ifndef MHG_PARAMS_HPP
#define MHG_PARAMS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mhg/metric_space.hpp"

namespace mhg {

/// Nonnegative integer or infinity. Arithmetic saturates at infinity.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr ExtNat(std::int64_t v) : value_(v < 0 ? 0 : v), finite_(true) {}  // NOLINT: implicit by intent

  static constexpr ExtNat infinity() {
    ExtNat e;
    e.finite_ = false;
    return e;
  }

  constexpr bool is_finite() const { return finite_; }
  /// Finite value; throws std::logic_error on infinity.
  std::int64_t value() const;

  friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
    if (!a.finite_ || !b.finite_) return infinity();
    return ExtNat(a.value_ + b.value_);
  }
  friend constexpr ExtNat operator*(std::int64_t k, ExtNat a) {
    if (!a.finite_) return k == 0 ? ExtNat(0) : infinity();
    return ExtNat(k * a.value_);
  }

  friend constexpr bool operator==(ExtNat a, ExtNat b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
    if (a.finite_ != b.finite_) return a.finite_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (!a.finite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;
  /// Accepts a decimal integer or "inf".
  static ExtNat parse(const std::string& text);

 private:
  std::int64_t value_ = 0;
  bool finite_ = true;
};

ExtNat min(ExtNat a, ExtNat b);
ExtNat max(ExtNat a, ExtNat b);

class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Distance alphabet a Henson constraint may use.
enum class HensonAlphabet { OneDelta, OneDeltaMinusOne };

/// Forbidden spaces using only distances {1, delta}, or {1, delta-1} when C = 2delta+1.
class HensonSet {
 public:
  HensonSet() = default;
  explicit HensonSet(std::vector<MetricSpace> constraints) : constraints_(std::move(constraints)) {}

  const std::vector<MetricSpace>& constraints() const { return constraints_; }
  bool empty() const { return constraints_.empty(); }
  /// Some constraint has a pair at distance d.
  bool mentions(Distance d) const;

 private:
  std::vector<MetricSpace> constraints_;
};

/// (delta, K1, K2, C0, C1, S). C0 bounds even perimeters and C1 odd ones.
class ParameterSequence {
 public:
  /// Throws InvalidParameters if delta < 3, if K1 is finite and K1 > K2, or if
  /// a Henson constraint has the wrong shape.
  ParameterSequence(int delta, ExtNat k1, ExtNat k2, ExtNat c0, ExtNat c1, HensonSet henson = {});

  int delta() const { return delta_; }
  ExtNat k1() const { return k1_; }
  ExtNat k2() const { return k2_; }
  ExtNat c0() const { return c0_; }
  ExtNat c1() const { return c1_; }
  /// Perimeter bound for parity eps (0 even, 1 odd).
  ExtNat c_eps(int eps) const { return eps == 0 ? c0_ : c1_; }
  ExtNat c() const { return min(c0_, c1_); }
  ExtNat c_prime() const { return max(c0_, c1_); }
  const HensonSet& henson() const { return henson_; }
  HensonAlphabet henson_alphabet() const;

  std::string to_string() const;

 private:
  int delta_;
  ExtNat k1_, k2_, c0_, c1_;
  HensonSet henson_;
};

enum class AdmissibleCase { Bipartite, LowC, HighC, Rejected };

/// One row of the admissibility table.
enum class Condition {
  BipartiteK2Zero,       // (a) K2 = 0
  BipartiteC1,           // (a) C1 = 2delta+1
  LowCPerimeterForm,     // (b) C = 2K1+2K2+1
  LowCPerimeterFloor,    // (b) 2K1+2K2+1 >= 2delta+1
  LowCKSum,              // (b) K1+2K2 <= 2delta-1
  LowCWideGap,           // (b) C' > C+1 -> K1 = K2 and 3K2 = 2delta-1
  HighCKSum,             // (c) K1+2K2 >= 2delta-1
  HighCK2,               // (c) 3K2 >= 2delta
  HighCTight,            // (c) K1+2K2 = 2delta-1 -> C >= 2delta+K1+2
  HighCWideGap,          // (c) C' > C+1 -> C >= 2delta+K2
};

std::string condition_name(Condition c);
std::string condition_text(Condition c);

struct ConditionFailure {
  Condition condition;
  std::string detail;
};

struct AdmissibilityVerdict {
  AdmissibleCase tag = AdmissibleCase::Rejected;
  /// Case whose side conditions were evaluated (meaningful when rejected).
  AdmissibleCase attempted = AdmissibleCase::Rejected;
  std::vector<ConditionFailure> failures;

  bool admissible() const { return tag != AdmissibleCase::Rejected; }
  bool names(Condition c) const;
  /// "Bipartite(a)", "LowC(b)", "HighC(c)" or "Rejected".
  std::string label() const;
};

AdmissibilityVerdict classify_admissible(const ParameterSequence& p);

/// Evaluates a single table condition on p, independent of case selection.
bool condition_holds(const ParameterSequence& p, Condition c);

/// All three clauses: sides <= delta; odd perimeter within (2K1, 2K2 + 2 min);
/// perimeter below C_eps for its parity.
bool triangle_allowed(const ParameterSequence& p, const TriangleType& t);

/// Metric triples with sides <= delta that triangle_allowed rejects, sorted.
std::vector<TriangleType> forbidden_triangles(const ParameterSequence& p);

/// Every distance <= delta, every triangle allowed, no Henson constraint embeds.
bool in_age(const ParameterSequence& p, const MetricSpace& a);

/// in_age restricted to constraints involving point `fresh`, assuming the
/// space without `fresh` is already in the age.
bool in_age_with_new_point(const ParameterSequence& p, const MetricSpace& a, Point fresh);

/// Human-readable reason a space fails in_age, or nullopt when it is a member.
std::optional<std::string> age_violation(const ParameterSequence& p, const MetricSpace& a);

}  // namespace mhg

#endif  // MHG_PARAMS_HPP
