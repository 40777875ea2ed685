#include "mhg/sumop.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mhg {

bool MagicRange::contains(int m) const {
  return std::find(valid_set.begin(), valid_set.end(), m) != valid_set.end();
}

namespace {

std::int64_t floor_half(std::int64_t v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

}  // namespace

MagicRange magic_range(const ParameterSequence& p) {
  const std::int64_t delta = p.delta();
  if (!p.k1().is_finite())
    throw EmptyRange("K1 is infinite, so max(K1, ceil(delta/2)) <= M has no solution");
  MagicRange r;
  const std::int64_t half_up = (delta + 1) / 2;
  r.lo = std::max(p.k1().value(), half_up);
  r.default_m = r.lo;
  const ExtNat c = p.c();
  const std::int64_t perimeter_cap = c.is_finite() ? floor_half(c.value() - delta - 1) : delta;
  const std::int64_t k2_cap = p.k2().is_finite() ? p.k2().value() : delta;
  r.hi = std::min({k2_cap, perimeter_cap, delta});

  if (r.lo > r.hi) {
    std::ostringstream os;
    os << "empty window lo=" << r.lo << " > hi=" << r.hi << ":";
    if (r.lo > k2_cap) os << " max(K1, ceil(delta/2)) <= K2 fails;";
    if (r.lo > perimeter_cap) os << " 2M + delta < C fails for M=" << r.lo << ";";
    if (c == ExtNat(2 * delta + 1) && delta % 2 == 1) os << " C = 2delta+1 with delta odd;";
    throw EmptyRange(os.str());
  }
  const bool henson_uses_delta = p.henson().mentions(static_cast<Distance>(delta));
  for (std::int64_t m = r.lo; m <= r.hi; ++m) {
    if (m == delta && henson_uses_delta && c > ExtNat(2 * delta + 1))
      r.excluded.push_back(static_cast<int>(m));
    else
      r.valid_set.push_back(static_cast<int>(m));
  }
  if (r.valid_set.empty())
    throw EmptyRange("only M = delta fits the window and a Henson constraint uses distance delta");
  return r;
}

MetricSpace sum_m(const MetricSpace& a, const MetricSpace& b, Distance m) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const int na = a.size(), nb = b.size(), n = na + nb;
  std::vector<Distance> upper;
  upper.reserve(pair_count(static_cast<std::size_t>(n)));
  for (Point x = 0; x < n; ++x)
    for (Point y = x + 1; y < n; ++y) {
      if (y < na)
        upper.push_back(a.d(x, y));
      else if (x >= na)
        upper.push_back(b.d(x - na, y - na));
      else
        upper.push_back(m);
    }
  return MetricSpace(n, std::move(upper));
}

MetricSpace sum_all(const std::vector<MetricSpace>& parts, Distance m) {
  MetricSpace acc;
  for (const auto& part : parts) acc = sum_m(acc, part, m);
  return acc;
}

std::vector<std::vector<Point>> components(const MetricSpace& a, Distance m) {
  const int n = a.size();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<Point>> out;
  for (Point s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Point> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      Point x = stack.back();
      stack.pop_back();
      out[id].push_back(x);
      for (Point y = 0; y < n; ++y)
        if (comp[y] < 0 && y != x && a.d(x, y) != m) {
          comp[y] = id;
          stack.push_back(y);
        }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool indecomposable(const MetricSpace& a, Distance m) { return !a.empty() && components(a, m).size() == 1; }

Decomposition decompose(const MetricSpace& a, Distance m) {
  std::vector<std::pair<CanonicalCode, MetricSpace>> parts;
  for (const auto& comp : components(a, m)) {
    MetricSpace f = induced(a, comp);
    parts.emplace_back(canonical_code(f), std::move(f));
  }
  std::stable_sort(parts.begin(), parts.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  Decomposition d;
  d.m = m;
  for (auto& [code, f] : parts) {
    d.codes.push_back(std::move(code));
    d.factors.push_back(std::move(f));
  }
  return d;
}

namespace {

struct LeqSearch {
  const MetricSpace& b;
  const MetricSpace& a;
  Distance m;
  std::vector<Point> image;
  std::vector<char> used;

  bool extend(int k) {
    if (k == b.size()) return true;
    for (Point t = 0; t < a.size(); ++t) {
      if (used[t]) continue;
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        const Distance db = b.d(i, k);
        ok = db == m || db == a.d(image[i], t);
      }
      if (!ok) continue;
      used[t] = 1;
      image[k] = t;
      if (extend(k + 1)) return true;
      used[t] = 0;
    }
    return false;
  }
};

}  // namespace

bool leq(const MetricSpace& b, const MetricSpace& a, Distance m) {
  if (b.size() != a.size()) return false;
  LeqSearch s{b, a, m, std::vector<Point>(static_cast<std::size_t>(b.size())),
              std::vector<char>(static_cast<std::size_t>(a.size()), 0)};
  return s.extend(0);
}

std::vector<std::vector<std::vector<Point>>> set_partitions(int n) {
  std::vector<std::vector<std::vector<Point>>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // Restricted growth strings: block[0] = 0, block[i] <= 1 + max(block[0..i-1]).
  std::vector<int> block(static_cast<std::size_t>(n), 0);
  for (;;) {
    const int blocks = *std::max_element(block.begin(), block.end()) + 1;
    std::vector<std::vector<Point>> part(static_cast<std::size_t>(blocks));
    for (Point x = 0; x < n; ++x) part[block[x]].push_back(x);
    out.push_back(std::move(part));
    int i = n - 1;
    for (; i > 0; --i) {
      const int prefix_max = *std::max_element(block.begin(), block.begin() + i);
      if (block[i] <= prefix_max) {
        ++block[i];
        std::fill(block.begin() + i + 1, block.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }
  return out;
}

}  // namespace mhg
