#ifndef MHG_CANONICAL_HPP
#define MHG_CANONICAL_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "mhg/metric_space.hpp"

namespace mhg {

/// Complete isomorphism invariant of a MetricSpace.
///
/// tokens = [n, c(1), c(2), ...] where c(k) is the column d(0,k), ..., d(k-1,k)
/// of the canonically relabeled space. Codes order by size first, then
/// lexicographically.
class CanonicalCode {
 public:
  CanonicalCode() : tokens_{0} {}
  explicit CanonicalCode(std::vector<int> tokens);

  int size() const { return tokens_.front(); }
  const std::vector<int>& tokens() const { return tokens_; }

  /// The canonical representative encoded by this code.
  MetricSpace representative() const;

  std::string to_string() const;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend std::strong_ordering operator<=>(const CanonicalCode& a, const CanonicalCode& b) {
    return a.tokens_ <=> b.tokens_;
  }

 private:
  std::vector<int> tokens_;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept;
};

struct CanonicalForm {
  CanonicalCode code;
  /// New point i of the representative is old point order[i].
  std::vector<Point> order;
};

/// Colour refinement on sorted distance multisets followed by a backtracking
/// search for the lexicographically least column string over orderings that
/// respect the refined cells.
CanonicalForm canonical_form(const MetricSpace& a);

inline CanonicalCode canonical_code(const MetricSpace& a) { return canonical_form(a).code; }

/// Label-independent ordered partition of the points: cell[x] is the rank of
/// x's stable refinement colour.
std::vector<int> refine_cells(const MetricSpace& a);

}  // namespace mhg

#endif  // MHG_CANONICAL_HPP
