#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mhg/canonical.hpp"
#include "mhg/params.hpp"
#include "test_support.hpp"

using namespace mhg;

namespace {

ExtNat inf() { return ExtNat::infinity(); }

}  // namespace

TEST_CASE("ExtNat ordering and saturation") {
  CHECK(inf() > ExtNat(1000000));
  CHECK(inf() + 5 == inf());
  CHECK(2 * inf() == inf());
  CHECK(0 * inf() == ExtNat(0));
  CHECK(ExtNat(3) + 4 == ExtNat(7));
  CHECK(ExtNat::parse("inf") == inf());
  CHECK(ExtNat::parse("12") == ExtNat(12));
  CHECK_THROWS_AS(ExtNat::parse("-1"), InvalidParameters);
  CHECK_THROWS_AS(ExtNat::parse("x"), InvalidParameters);
  CHECK(inf().to_string() == "inf");
}

TEST_CASE("ParameterSequence invariants") {
  CHECK_THROWS_AS(ParameterSequence(2, 1, 1, 10, 11), InvalidParameters);
  CHECK_THROWS_AS(ParameterSequence(3, 3, 2, 10, 11), InvalidParameters);
  CHECK_NOTHROW(ParameterSequence(3, inf(), 0, 8, 7));
  const ParameterSequence p(3, 1, 3, 10, 11);
  CHECK(p.c() == ExtNat(10));
  CHECK(p.c_prime() == ExtNat(11));
}

TEST_CASE("Henson constraint shape") {
  CHECK_NOTHROW(ParameterSequence(3, 1, 3, 10, 11, HensonSet({uniform_space(3, 3)})));
  CHECK_THROWS_AS(ParameterSequence(3, 1, 3, 10, 11, HensonSet({point_space()})), InvalidParameters);
  CHECK_THROWS_AS(ParameterSequence(3, 1, 3, 10, 11, HensonSet({uniform_space(3, 2)})), InvalidParameters);
  // C = 2delta+1: alphabet {1, delta-1}.
  const ParameterSequence low(4, 1, 3, 9, 10, HensonSet({uniform_space(3, 3)}));
  CHECK(low.henson_alphabet() == HensonAlphabet::OneDeltaMinusOne);
  CHECK_THROWS_AS(ParameterSequence(4, 1, 3, 9, 10, HensonSet({uniform_space(3, 4)})), InvalidParameters);
}

TEST_CASE("classify_admissible worked examples") {
  CHECK(classify_admissible(ParameterSequence(3, inf(), 0, 8, 7)).tag == AdmissibleCase::Bipartite);

  const auto high = classify_admissible(ParameterSequence(3, 1, 2, 10, 9));
  CHECK(high.tag == AdmissibleCase::HighC);
  CHECK(high.label() == "HighC(c)");

  const auto rejected = classify_admissible(ParameterSequence(3, 1, 1, 10, 9));
  CHECK(rejected.tag == AdmissibleCase::Rejected);
  CHECK(rejected.attempted == AdmissibleCase::HighC);
  CHECK(rejected.names(Condition::HighCK2));

  CHECK(classify_admissible(test::main_params()).tag == AdmissibleCase::HighC);
  CHECK(classify_admissible(test::henson_params()).tag == AdmissibleCase::HighC);
}

TEST_CASE("classify_admissible low-C case") {
  // delta=3, K1=1, K2=2: C = 2+4+1 = 7 = 2delta+1 <= 2delta+K1 = 7; K1+2K2 = 5 <= 5.
  CHECK(classify_admissible(ParameterSequence(3, 1, 2, 8, 7)).tag == AdmissibleCase::LowC);
  // Same but C' = 10 > C+1 needs K1 = K2.
  const auto wide = classify_admissible(ParameterSequence(3, 1, 2, 10, 7));
  CHECK(wide.tag == AdmissibleCase::Rejected);
  CHECK(wide.names(Condition::LowCWideGap));
  // Wide gap satisfied: K1 = K2 = 3 and 3K2 = 9 = 2delta-1.
  CHECK(classify_admissible(ParameterSequence(5, 3, 3, 20, 13)).tag == AdmissibleCase::LowC);
}

TEST_CASE("case tags follow K1") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> small(0, 12);
  for (int i = 0; i < 2000; ++i) {
    const int delta = 3 + small(rng) % 4;
    const bool k1_inf = small(rng) == 0;
    const ExtNat k1 = k1_inf ? inf() : ExtNat(small(rng) % (delta + 1));
    ExtNat k2 = ExtNat(small(rng) % (delta + 1));
    if (k1.is_finite() && k2 < k1) k2 = k1;
    const ParameterSequence p(delta, k1, k2, small(rng) + delta, small(rng) + delta);
    const auto v = classify_admissible(p);
    if (v.tag == AdmissibleCase::Bipartite) CHECK_FALSE(p.k1().is_finite());
    if (v.tag == AdmissibleCase::LowC || v.tag == AdmissibleCase::HighC) CHECK(p.k1().is_finite());
    if (v.tag == AdmissibleCase::Rejected) CHECK_FALSE(v.failures.empty());
    // Every named failure really fails.
    for (const auto& f : v.failures) CHECK_FALSE(condition_holds(p, f.condition));
  }
}

TEST_CASE("triangle_allowed examples") {
  CHECK_FALSE(triangle_allowed(ParameterSequence(3, inf(), 0, 8, 7), TriangleType(1, 1, 1)));
  CHECK(triangle_allowed(ParameterSequence(3, 1, 3, 10, 11), TriangleType(3, 3, 3)));
  CHECK_FALSE(triangle_allowed(ParameterSequence(3, 1, 2, 10, 9), TriangleType(3, 3, 3)));
  CHECK_FALSE(triangle_allowed(test::main_params(), TriangleType(1, 1, 3)));
  CHECK_FALSE(triangle_allowed(test::main_params(), TriangleType(1, 4, 4)));
}

TEST_CASE("triangle_allowed agrees with a direct clause evaluation") {
  // Independent re-statement of the three clauses with plain integers (large
  // sentinels stand in for infinity).
  const long long big = 1'000'000;
  auto direct = [&](int delta, long long k1, long long k2, long long c0, long long c1, int i, int j, int k) {
    if (std::max({i, j, k}) > delta) return false;
    if (std::max({i, j, k}) * 2 > i + j + k) return false;
    const long long per = i + j + k;
    if (per % 2 == 1 && !(2 * k1 < per && per < 2 * k2 + 2 * std::min({i, j, k}))) return false;
    return per < (per % 2 == 0 ? c0 : c1);
  };
  struct P {
    int delta;
    long long k1, k2, c0, c1;
  };
  const std::vector<P> cases{{3, 1, 3, 10, 11}, {3, big, 0, 8, 7}, {3, 1, 2, 10, 9}, {4, 2, 3, big, big}, {5, 1, 5, 16, 17}};
  auto ext = [&](long long v) { return v >= big ? inf() : ExtNat(v); };
  for (const auto& c : cases) {
    const ParameterSequence p(c.delta, ext(c.k1), ext(c.k2), ext(c.c0), ext(c.c1));
    for (int i = 1; i <= c.delta + 1; ++i)
      for (int j = i; j <= c.delta + 1; ++j)
        for (int k = j; k <= c.delta + 1; ++k)
          CHECK(triangle_allowed(p, TriangleType(i, j, k)) == direct(c.delta, c.k1, c.k2, c.c0, c.c1, i, j, k));
  }
}

TEST_CASE("forbidden_triangles") {
  // Main example: every metric triple with sides <= 3 is allowed.
  CHECK(forbidden_triangles(test::main_params()).empty());
  // Bipartite antipodal: odd perimeters and (2,3,3) at perimeter 8 are out.
  const auto bip = forbidden_triangles(test::bipartite_params());
  const std::vector<TriangleType> expected{TriangleType(1, 1, 1), TriangleType(1, 2, 2), TriangleType(1, 3, 3),
                                           TriangleType(2, 2, 3), TriangleType(2, 3, 3), TriangleType(3, 3, 3)};
  CHECK(bip == expected);
}

TEST_CASE("in_age examples") {
  for (const auto& p : {test::main_params(), test::bipartite_params(), test::henson_params()})
    CHECK(in_age(p, MetricSpace{}));
  CHECK_FALSE(in_age(test::bipartite_params(), uniform_space(3, 1)));
  const ParameterSequence with_h(3, 1, 3, 10, 11, HensonSet({uniform_space(3, 3)}));
  CHECK_FALSE(in_age(with_h, uniform_space(3, 3)));
  CHECK(in_age(with_h, pair_space(3)));
  CHECK_FALSE(in_age(test::main_params(), pair_space(4)));
}

TEST_CASE("in_age is hereditary and isomorphism invariant") {
  std::mt19937 rng(5);
  for (const auto& p : {test::main_params(), test::bipartite_params(), test::henson_params()}) {
    for (int n = 1; n <= 5; ++n)
      for (int rep = 0; rep < 60; ++rep) {
        const MetricSpace a = test::random_space(rng, n, 3);
        const bool member = in_age(p, a);
        CHECK(in_age(p, relabel(a, test::random_permutation(rng, n))) == member);
        CHECK(in_age(p, canonical_code(a).representative()) == member);
        if (!member) continue;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) REQUIRE(in_age(p, induced_mask(a, mask)));
      }
  }
}

TEST_CASE("in_age_with_new_point matches in_age on extensions of members") {
  std::mt19937 rng(8);
  const auto p = test::henson_params();
  for (int rep = 0; rep < 400; ++rep) {
    const MetricSpace a = test::random_space(rng, 5, 3);
    const std::vector<Point> first4{0, 1, 2, 3};
    if (!in_age(p, induced(a, first4))) continue;
    CHECK(in_age_with_new_point(p, a, 4) == in_age(p, a));
  }
}
