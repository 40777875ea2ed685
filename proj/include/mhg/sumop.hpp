#ifndef MHG_SUMOP_HPP
#define MHG_SUMOP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mhg/canonical.hpp"
#include "mhg/metric_space.hpp"
#include "mhg/params.hpp"
#include "mhg/report.hpp"

namespace mhg {

/// Admissible values of the sum parameter M for a parameter sequence.
struct MagicRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  /// Values in [lo, hi] removed because a Henson constraint uses distance delta.
  std::vector<int> excluded;
  std::vector<int> valid_set;
  /// max(K1, ceil(delta/2)).
  std::int64_t default_m = 0;

  bool contains(int m) const;
};

class EmptyRange : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// lo = max(K1, ceil(delta/2)), hi = min(K2, floor((C-delta-1)/2), delta), with
/// delta excluded when C > 2delta+1 and some Henson constraint mentions delta.
/// Throws EmptyRange naming the failed inequality when no M survives.
MagicRange magic_range(const ParameterSequence& p);

/// Disjoint union of A and B with every cross distance set to m.
/// Throws TriangleViolation when the result is not metric.
MetricSpace sum_m(const MetricSpace& a, const MetricSpace& b, Distance m);

/// +_m over a list of spaces, folded left; empty list gives the empty space.
MetricSpace sum_all(const std::vector<MetricSpace>& parts, Distance m);

/// Points of A grouped into the connected components of the graph whose edges
/// are the pairs at distance != m. Components are listed by least point.
std::vector<std::vector<Point>> components(const MetricSpace& a, Distance m);

/// Connected in the distance != m graph. The empty space is not indecomposable.
bool indecomposable(const MetricSpace& a, Distance m);

struct Decomposition {
  std::vector<MetricSpace> factors;  // sorted by canonical code
  std::vector<CanonicalCode> codes;  // codes[i] is the code of factors[i]
  Distance m = 0;
};

Decomposition decompose(const MetricSpace& a, Distance m);

/// B <= A: same size and some bijection phi has d_B(x,y) = d_A(phi x, phi y)
/// or d_B(x,y) = m for every pair.
bool leq(const MetricSpace& b, const MetricSpace& a, Distance m);

/// Exhaustive +_m closure check over age members with |A| >= |B| >= 1 and
/// |A| + |B| <= max_total. jobs == 1 selects the serial reference loop.
Report verify_closure(const ParameterSequence& p, Distance m, int max_total, int jobs = 0);

/// For each age member of size <= max_size: every set partition sums into the
/// age and below A; the factor multiset is relabeling-invariant and recomposes to A.
Report verify_freeness(const ParameterSequence& p, Distance m, int max_size, int jobs = 0);

/// All set partitions of {0..n-1}, blocks ascending by least element.
std::vector<std::vector<std::vector<Point>>> set_partitions(int n);

}  // namespace mhg

#endif  // MHG_SUMOP_HPP
