#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mhg/algebra.hpp"
#include "mhg/antipodal.hpp"
#include "mhg/sumop.hpp"

using namespace mhg;

namespace {

std::vector<long> as_longs(const Profile& p) {
  std::vector<long> out;
  for (const auto& c : p.counts) out.push_back(c.get_si());
  return out;
}

}  // namespace

TEST_CASE("beta examples") {
  CHECK(beta({1, 1, 2}) == make_space(3, {3, 1, 2}));
  CHECK(beta({0, 0, 1}) == point_space());
  CHECK(beta({0, 1, 1}) == pair_space(1));
  CHECK(beta({1, 1, 1}) == pair_space(3));
  CHECK(beta({0, 0, 3}) == uniform_space(3, 2));
  CHECK_THROWS_AS(beta({2, 1, 3}), InvalidInput);
}

TEST_CASE("alpha examples") {
  CHECK(alpha(MetricSpace{}) == AntipodalSignature{0, 0, 0});
  CHECK(alpha(make_space(3, {3, 1, 2})) == AntipodalSignature{1, 1, 2});
  CHECK(alpha(make_space(3, {2, 1, 3})) == AntipodalSignature{1, 1, 2});
  CHECK_THROWS_AS(alpha(uniform_space(3, 1)), NotInClass);
  CHECK_THROWS_AS(alpha(make_space(3, {2, 3, 3})), NotInClass);
}

TEST_CASE("signature decomposition over generators") {
  const GeneratorMultiplicities g = signature_decompose({2, 3, 5});
  CHECK(g == GeneratorMultiplicities{2, 1, 2});
  CHECK(signature_compose(g) == AntipodalSignature{2, 3, 5});
  CHECK(kGenZ + kGenY + kGenX == AntipodalSignature{1, 2, 3});
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= n; ++m)
      for (int k = 0; k <= m; ++k) CHECK(signature_compose(signature_decompose({k, m, n})) == AntipodalSignature{k, m, n});
}

TEST_CASE("signature_leq examples") {
  CHECK(signature_leq({0, 1, 2}, {1, 1, 2}));
  CHECK(signature_leq({0, 0, 3}, {1, 1, 2}));
  CHECK_FALSE(signature_leq({1, 1, 2}, {0, 1, 2}));
  CHECK_FALSE(signature_leq({0, 1, 1}, {1, 1, 2}));
}

TEST_CASE("antipodal profile") {
  CHECK(as_longs(antipodal_profile(4)) == std::vector<long>{1, 1, 3, 3, 6});
  CHECK(as_longs(antipodal_profile(8)) == std::vector<long>{1, 1, 3, 3, 6, 6, 10, 10, 15});
  Census gens;
  gens.counts = {0, 1, 2};
  CHECK(euler_transform(gens, 10) == antipodal_profile(10));
  const auto levels = enumerate_levels(antipodal_parameters(), 6);
  const Profile p = antipodal_profile(6);
  for (int n = 0; n <= 6; ++n) CHECK(levels[n].size() == p[n].get_ui());
}

TEST_CASE("alpha and beta are inverse bijections up to 6 points") {
  const auto levels = enumerate_levels(antipodal_parameters(), 6);
  for (int n = 0; n <= 6; ++n) {
    std::set<AntipodalSignature> sigs;
    for (const auto& t : levels[n]) {
      const AntipodalSignature s = alpha(t.rep);
      CHECK(s.valid());
      CHECK(s.points() == n);
      CHECK(canonical_code(beta(s)) == t.code);
      sigs.insert(s);
    }
    CHECK(sigs.size() == levels[n].size());
    // Every triple is hit.
    for (int m = 0; 2 * m <= n; ++m)
      for (int k = 0; k <= m; ++k) CHECK(sigs.count({k, m, n - m}) == 1);
  }
}

TEST_CASE("distance-3 pairs form a matching because (2,3,3) is forbidden") {
  const auto p = antipodal_parameters();
  CHECK_FALSE(triangle_allowed(p, TriangleType(2, 3, 3)));
  const auto levels = enumerate_levels(p, 6);
  for (int n = 2; n <= 6; ++n)
    for (const auto& t : levels[n])
      for (Point x = 0; x < n; ++x) {
        int antipodes = 0;
        for (Point y = 0; y < n; ++y) antipodes += t.rep.d(x, y) == 3;
        CHECK(antipodes <= 1);
      }
}

TEST_CASE("part signatures sum below the whole") {
  const auto levels = enumerate_levels(antipodal_parameters(), 5);
  for (int n = 1; n <= 5; ++n)
    for (const auto& t : levels[n])
      for (const auto& part : set_partitions(n)) {
        AntipodalSignature acc;
        for (const auto& block : part) acc = acc + alpha(induced(t.rep, block));
        CHECK(signature_leq(acc, alpha(t.rep)));
      }
}

TEST_CASE("verify_antipodal") {
  const Report r = verify_antipodal(8, 6, 5);
  CHECK(r.pass);
  CHECK(r.details["triples"] == r.details["euler"]);
}
