#include "mhg/metric_space.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace mhg {

namespace {

std::string triangle_message(Point x, Point y, Point z, Distance dxz, Distance dxy, Distance dyz) {
  std::ostringstream os;
  os << "triangle inequality fails: d(" << x << "," << z << ")=" << dxz << " > d(" << x << ","
     << y << ")+d(" << y << "," << z << ")=" << dxy << "+" << dyz;
  return os.str();
}

std::string distance_message(Point x, Point y, Distance d) {
  std::ostringstream os;
  os << "distance d(" << x << "," << y << ")=" << d << " is not positive";
  return os.str();
}

}  // namespace

TriangleViolation::TriangleViolation(Point x_, Point y_, Point z_, Distance dxz_, Distance dxy_,
                                     Distance dyz_)
    : std::invalid_argument(triangle_message(x_, y_, z_, dxz_, dxy_, dyz_)),
      x(x_), y(y_), z(z_), dxz(dxz_), dxy(dxy_), dyz(dyz_) {}

NonPositiveDistance::NonPositiveDistance(Point x_, Point y_, Distance d_)
    : std::invalid_argument(distance_message(x_, y_, d_)), x(x_), y(y_), d(d_) {}

MetricSpace::MetricSpace(int n, std::vector<Distance> upper) : n_(n), upper_(std::move(upper)) {
  if (n < 0) throw InvalidInput("point count must be nonnegative");
  if (upper_.size() != pair_count(static_cast<std::size_t>(n))) {
    std::ostringstream os;
    os << "expected " << pair_count(static_cast<std::size_t>(n)) << " distances for n=" << n
       << ", got " << upper_.size();
    throw InvalidInput(os.str());
  }
  for (Point x = 0; x < n; ++x)
    for (Point y = x + 1; y < n; ++y)
      if (d(x, y) < 1) throw NonPositiveDistance(x, y, d(x, y));
  // Every pair x < z against every third point y.
  for (Point x = 0; x < n; ++x)
    for (Point y = 0; y < n; ++y) {
      if (y == x) continue;
      for (Point z = x + 1; z < n; ++z) {
        if (z == y) continue;
        if (d(x, z) > d(x, y) + d(y, z)) throw TriangleViolation(x, y, z, d(x, z), d(x, y), d(y, z));
      }
    }
}

MetricSpace MetricSpace::from_trusted(int n, std::vector<Distance> upper) {
  return MetricSpace(n, std::move(upper), true);
}

Distance MetricSpace::max_distance() const {
  return upper_.empty() ? 0 : *std::max_element(upper_.begin(), upper_.end());
}

MetricSpace make_space(int n, std::vector<Distance> upper) { return MetricSpace(n, std::move(upper)); }

MetricSpace point_space() { return MetricSpace::from_trusted(1, {}); }

MetricSpace pair_space(Distance d) { return MetricSpace(2, {d}); }

MetricSpace uniform_space(int n, Distance d) {
  return MetricSpace(n, std::vector<Distance>(pair_count(static_cast<std::size_t>(n)), d));
}

TriangleType::TriangleType(Distance a, Distance b, Distance c) {
  std::array<Distance, 3> s{a, b, c};
  std::sort(s.begin(), s.end());
  i = s[0];
  j = s[1];
  k = s[2];
}

std::string TriangleType::to_string() const {
  std::ostringstream os;
  os << "(" << i << "," << j << "," << k << ")";
  return os.str();
}

std::vector<TriangleType> triangle_types(const MetricSpace& a) {
  std::vector<TriangleType> out;
  const int n = a.size();
  for (Point x = 0; x < n; ++x)
    for (Point y = x + 1; y < n; ++y)
      for (Point z = y + 1; z < n; ++z) out.emplace_back(a.d(x, y), a.d(x, z), a.d(y, z));
  return out;
}

MetricSpace induced(const MetricSpace& a, std::span<const Point> subset) {
  const int m = static_cast<int>(subset.size());
  std::vector<Distance> upper;
  upper.reserve(pair_count(subset.size()));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) upper.push_back(a.d(subset[i], subset[j]));
  return MetricSpace::from_trusted(m, std::move(upper));
}

MetricSpace induced_mask(const MetricSpace& a, std::uint32_t mask) {
  std::vector<Point> pts;
  for (Point x = 0; x < a.size(); ++x)
    if (mask >> x & 1u) pts.push_back(x);
  return induced(a, pts);
}

MetricSpace relabel(const MetricSpace& a, std::span<const Point> perm) {
  if (static_cast<int>(perm.size()) != a.size()) throw InvalidInput("relabel: permutation size mismatch");
  return induced(a, perm);
}

namespace {

struct EmbedSearch {
  const MetricSpace& pattern;
  const MetricSpace& target;
  Point required;
  std::vector<Point> image;
  std::vector<char> used;

  bool extend(int k, bool hit_required) {
    const int np = pattern.size();
    if (k == np) return hit_required || required < 0;
    for (Point t = 0; t < target.size(); ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) ok = target.d(image[i], t) == pattern.d(i, k);
      if (!ok) continue;
      used[t] = 1;
      image[k] = t;
      if (extend(k + 1, hit_required || t == required)) return true;
      used[t] = 0;
    }
    return false;
  }
};

}  // namespace

bool embeds(const MetricSpace& pattern, const MetricSpace& target, Point required_target) {
  if (pattern.size() > target.size()) return false;
  if (pattern.empty()) return required_target < 0;
  EmbedSearch s{pattern, target, required_target,
                std::vector<Point>(static_cast<std::size_t>(pattern.size())),
                std::vector<char>(static_cast<std::size_t>(target.size()), 0)};
  return s.extend(0, false);
}

bool isometric_brute_force(const MetricSpace& a, const MetricSpace& b) {
  if (a.size() != b.size()) return false;
  std::vector<Point> perm(static_cast<std::size_t>(a.size()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Point x = 0; x < a.size() && ok; ++x)
      for (Point y = x + 1; y < a.size() && ok; ++y) ok = a.d(x, y) == b.d(perm[x], perm[y]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

std::string to_string(const MetricSpace& a) {
  std::ostringstream os;
  os << "(" << a.size() << ",[";
  for (std::size_t i = 0; i < a.upper().size(); ++i) os << (i ? "," : "") << a.upper()[i];
  os << "])";
  return os.str();
}

}  // namespace mhg
