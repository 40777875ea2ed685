#ifndef MHG_METRIC_SPACE_HPP
#define MHG_METRIC_SPACE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mhg {

/// Index of a point inside a MetricSpace.
using Point = int;
/// Positive integer distance between two distinct points.
using Distance = int;

/// Number of unordered pairs on n points.
constexpr std::size_t pair_count(std::size_t n) { return n == 0 ? 0 : n * (n - 1) / 2; }

class TriangleViolation : public std::invalid_argument {
 public:
  TriangleViolation(Point x, Point y, Point z, Distance dxz, Distance dxy, Distance dyz);
  // d(x,z) > d(x,y) + d(y,z)
  Point x, y, z;
  Distance dxz, dxy, dyz;
};

class NonPositiveDistance : public std::invalid_argument {
 public:
  NonPositiveDistance(Point x, Point y, Distance d);
  Point x, y;
  Distance d;
};

class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite metric space with positive integer distances.
///
/// Points are 0..n-1. Distances are stored as the upper triangle in row-major
/// order d(0,1), d(0,2), ..., d(n-2,n-1); d(x,x) = 0 is implicit. Instances are
/// immutable once constructed and every instance satisfies the metric axioms.
class MetricSpace {
 public:
  /// Empty space (n = 0).
  MetricSpace() = default;

  /// Validating constructor. Throws NonPositiveDistance, TriangleViolation or
  /// InvalidInput (wrong list length).
  MetricSpace(int n, std::vector<Distance> upper);

  /// Skips validation. Caller guarantees the metric axioms.
  static MetricSpace from_trusted(int n, std::vector<Distance> upper);

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }

  Distance d(Point x, Point y) const {
    if (x == y) return 0;
    if (x > y) std::swap(x, y);
    return upper_[index(x, y)];
  }

  std::span<const Distance> upper() const { return upper_; }
  Distance max_distance() const;

  /// Row-major upper-triangle index of the pair x < y.
  std::size_t index(Point x, Point y) const {
    return static_cast<std::size_t>(x) * (2 * n_ - x - 1) / 2 + (y - x - 1);
  }

  friend bool operator==(const MetricSpace&, const MetricSpace&) = default;

 private:
  MetricSpace(int n, std::vector<Distance> upper, bool /*trusted*/)
      : n_(n), upper_(std::move(upper)) {}

  int n_ = 0;
  std::vector<Distance> upper_;
};

/// Validated construction from the row-major upper triangle.
MetricSpace make_space(int n, std::vector<Distance> upper);

/// Single point.
MetricSpace point_space();
/// Two points at distance d.
MetricSpace pair_space(Distance d);
/// n points pairwise at distance d (d >= 1).
MetricSpace uniform_space(int n, Distance d);

/// Sorted side lengths i <= j <= k of a triangle.
struct TriangleType {
  Distance i = 0, j = 0, k = 0;

  TriangleType() = default;
  /// Sorts its arguments. Does not check the metric inequality.
  TriangleType(Distance a, Distance b, Distance c);

  int perimeter() const { return i + j + k; }
  Distance min_side() const { return i; }
  bool is_metric() const { return i >= 1 && k <= i + j; }

  friend auto operator<=>(const TriangleType&, const TriangleType&) = default;
  std::string to_string() const;
};

/// One triangle type per 3-subset of points, in lexicographic subset order.
std::vector<TriangleType> triangle_types(const MetricSpace& a);

/// Restriction of A to the given points, relabeled in the order given.
MetricSpace induced(const MetricSpace& a, std::span<const Point> subset);
/// Restriction to the points whose bit is set in mask (points ascending).
MetricSpace induced_mask(const MetricSpace& a, std::uint32_t mask);

/// Relabels A so that new point i is old point perm[i].
MetricSpace relabel(const MetricSpace& a, std::span<const Point> perm);

/// True iff some injection of P's points into A preserves all distances.
/// When required_target >= 0, only injections whose image contains that
/// point are considered.
bool embeds(const MetricSpace& pattern, const MetricSpace& target, Point required_target = -1);

/// Isometry test by exhaustive search over bijections (no canonical forms).
bool isometric_brute_force(const MetricSpace& a, const MetricSpace& b);

std::string to_string(const MetricSpace& a);

}  // namespace mhg

#endif  // MHG_METRIC_SPACE_HPP
