#include "mhg/antipodal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mhg/algebra.hpp"
#include "mhg/canonical.hpp"
#include "mhg/io.hpp"
#include "mhg/sumop.hpp"

namespace mhg {

std::string AntipodalSignature::to_string() const {
  std::ostringstream os;
  os << "(" << k << "," << m << "," << n << ")";
  return os.str();
}

ParameterSequence antipodal_parameters() {
  return ParameterSequence(3, ExtNat::infinity(), ExtNat(0), ExtNat(8), ExtNat(7));
}

AntipodalSignature alpha(const MetricSpace& a) {
  static const ParameterSequence params = antipodal_parameters();
  if (auto why = age_violation(params, a)) throw NotInClass("not in the antipodal age: " + *why);
  const int n = a.size();
  // Parity 2-colouring: even distance means same part.
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  for (Point s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Point> stack{s};
    while (!stack.empty()) {
      const Point x = stack.back();
      stack.pop_back();
      for (Point y = 0; y < n; ++y) {
        if (y == x) continue;
        const int want = side[x] ^ (a.d(x, y) % 2);
        if (side[y] < 0) {
          side[y] = want;
          stack.push_back(y);
        } else if (side[y] != want) {
          throw NotInClass("distance parity does not define a bipartition");
        }
      }
    }
  }
  const int ones = static_cast<int>(std::count(side.begin(), side.end(), 1));
  AntipodalSignature sig;
  sig.m = std::min(ones, n - ones);
  sig.n = std::max(ones, n - ones);
  for (Point x = 0; x < n; ++x)
    for (Point y = x + 1; y < n; ++y)
      if (a.d(x, y) == 3) ++sig.k;
  return sig;
}

MetricSpace beta(const AntipodalSignature& s) {
  if (!s.valid()) throw InvalidInput("signature must satisfy 0 <= k <= m <= n: " + s.to_string());
  const int total = s.m + s.n;
  // Smaller part: 0..m-1. Larger part: m..m+n-1; point i is antipodal to m+i for i < k.
  std::vector<Distance> upper;
  upper.reserve(pair_count(static_cast<std::size_t>(total)));
  for (Point x = 0; x < total; ++x)
    for (Point y = x + 1; y < total; ++y) {
      const bool same = (x < s.m) == (y < s.m);
      if (same)
        upper.push_back(2);
      else
        upper.push_back(x < s.k && y == s.m + x ? 3 : 1);
    }
  return MetricSpace(total, std::move(upper));
}

GeneratorMultiplicities signature_decompose(const AntipodalSignature& s) {
  if (!s.valid()) throw InvalidInput("signature must satisfy 0 <= k <= m <= n: " + s.to_string());
  return {s.k, s.m - s.k, s.n - s.m};
}

AntipodalSignature signature_compose(const GeneratorMultiplicities& g) {
  return {g.z, g.z + g.y, g.z + g.y + g.x};
}

bool signature_leq(const AntipodalSignature& s1, const AntipodalSignature& s2) {
  return s1.k <= s2.k && s1.m <= s2.m && s1.m + s1.n == s2.m + s2.n;
}

Profile antipodal_profile(int n_max) {
  if (n_max < 0) throw InvalidInput("size must be nonnegative");
  Profile p;
  for (int total = 0; total <= n_max; ++total) {
    unsigned long count = 0;
    for (int m = 0; 2 * m <= total; ++m) count += static_cast<unsigned long>(m) + 1;  // k = 0..m
    p.counts.emplace_back(count);
  }
  return p;
}

Report verify_antipodal(int n_max, int enum_max, int order_max, const EnumOptions& opt) {
  Report r;
  r.check = "antipodal";
  r.degree = n_max;
  const ParameterSequence params = antipodal_parameters();
  const Profile triples = antipodal_profile(n_max);
  Census gens;
  gens.counts = {0, 1, 2};
  const Profile euler = euler_transform(gens, n_max);
  const auto levels = enumerate_levels(params, std::max({enum_max, order_max, 0}), opt);

  json general = json::array();
  for (int n = 0; n <= enum_max; ++n) general.push_back(levels[static_cast<std::size_t>(n)].size());
  r.details = json{{"triples", to_json(triples)}, {"euler", to_json(euler)}, {"enumerated", general}};

  auto fail = [&](std::string msg, json witness) {
    r.pass = false;
    r.message = std::move(msg);
    r.witness = std::move(witness);
    return r;
  };

  for (int n = 0; n <= n_max; ++n)
    if (triples[n] != euler[n])
      return fail("triple count differs from Euler transform", json{{"degree", n}});
  for (int n = 0; n <= enum_max && n <= n_max; ++n)
    if (triples[n] != static_cast<unsigned long>(levels[static_cast<std::size_t>(n)].size()))
      return fail("triple count differs from general enumeration", json{{"degree", n}});

  for (int n = 0; n <= std::max(enum_max, order_max); ++n) {
    std::set<AntipodalSignature> seen;
    for (const auto& t : levels[static_cast<std::size_t>(n)]) {
      const AntipodalSignature s = alpha(t.rep);
      if (canonical_code(beta(s)) != t.code)
        return fail("beta(alpha(A)) is not isometric to A", json{{"a", to_json(t.rep)}, {"alpha", {s.k, s.m, s.n}}});
      if (alpha(beta(s)) != s) return fail("alpha(beta(s)) != s", json{{"alpha", {s.k, s.m, s.n}}});
      if (!seen.insert(s).second)
        return fail("two isomorphism types share a signature", json{{"alpha", {s.k, s.m, s.n}}});
    }
  }

  for (int n = 1; n <= order_max; ++n)
    for (const auto& t : levels[static_cast<std::size_t>(n)]) {
      const AntipodalSignature whole = alpha(t.rep);
      for (const auto& partition : set_partitions(n)) {
        AntipodalSignature acc;
        for (const auto& block : partition) acc = acc + alpha(induced(t.rep, block));
        if (!signature_leq(acc, whole))
          return fail("sum of part signatures is not below the whole",
                      json{{"a", to_json(t.rep)}, {"partition", partition}});
      }
    }
  return r;
}

}  // namespace mhg
