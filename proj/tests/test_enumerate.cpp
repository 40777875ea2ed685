#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "mhg/enumerate.hpp"
#include "mhg/sumop.hpp"
#include "test_support.hpp"

using namespace mhg;

namespace {

std::vector<long> as_longs(const Profile& p) {
  std::vector<long> out;
  for (const auto& c : p.counts) out.push_back(c.get_si());
  return out;
}

std::vector<long> as_longs(const Census& c) {
  std::vector<long> out;
  for (std::size_t i = 1; i < c.size(); ++i) out.push_back(c[i].get_si());
  return out;
}

}  // namespace

TEST_CASE("small profiles") {
  CHECK(as_longs(profile(test::main_params(), 3)) == std::vector<long>{1, 1, 3, 9});
  CHECK(as_longs(profile(test::bipartite_params(), 3)) == std::vector<long>{1, 1, 3, 3});
  CHECK(as_longs(profile(test::main_params(), 0)) == std::vector<long>{1});
  // K1 = 2 drops (1,1,1) and the constraint drops the anticlique.
  CHECK(as_longs(profile(test::henson_params(), 3))[3] == 7);
}

TEST_CASE("census examples") {
  const auto p = test::main_params();
  // Singleton, then pairs at the two distances other than M.
  CHECK(as_longs(indecomposable_census(p, 2, 3)) == std::vector<long>{1, 2, 6});
  CHECK(as_longs(indecomposable_census(p, 3, 3)) == std::vector<long>{1, 2, 6});
  const Census c = indecomposable_census(p, 2, 6);
  for (int d = 1; d <= 6; ++d) CHECK(c[d] >= 1);
}

TEST_CASE("census_of counts indecomposables independently") {
  const auto p = test::main_params();
  const auto levels = enumerate_levels(p, 4);
  for (Distance m : {2, 3}) {
    const Census c = census_of(levels, m);
    for (int n = 1; n <= 4; ++n) {
      long count = 0;
      for (const auto& t : levels[n])
        if (decompose(t.rep, m).factors.size() == 1) ++count;
      CHECK(c[n].get_si() == count);
    }
  }
}

TEST_CASE("enumeration agrees with the brute-force oracle up to 4 points") {
  const std::vector<ParameterSequence> params{
      test::main_params(), test::henson_params(), test::bipartite_params(), ParameterSequence(3, 1, 2, 10, 9),
      ParameterSequence(3, 1, 2, 8, 7), ParameterSequence(4, 1, 4, 13, 14)};
  for (const auto& p : params) {
    const auto levels = enumerate_levels(p, 4);
    for (int n = 0; n <= 4; ++n) CHECK(levels[n].size() == oracle_enumerate(p, n));
  }
  CHECK_THROWS_AS(oracle_enumerate(test::main_params(), 5), ResourceLimit);
}

TEST_CASE("levels are members, canonical, sorted and hereditary") {
  for (const auto& p : {test::main_params(), test::henson_params(), test::bipartite_params()}) {
    const auto levels = enumerate_levels(p, 5);
    for (int n = 0; n <= 5; ++n) {
      std::set<CanonicalCode> seen;
      for (std::size_t i = 0; i < levels[n].size(); ++i) {
        const auto& t = levels[n][i];
        CHECK(t.rep.size() == n);
        CHECK(in_age(p, t.rep));
        CHECK(canonical_code(t.rep) == t.code);
        if (i > 0) CHECK(levels[n][i - 1].code < t.code);
        seen.insert(t.code);
        // Every one-point deletion lands in the previous level.
        if (n == 0) continue;
        for (int drop = 0; drop < n; ++drop) {
          const std::uint32_t mask = ((1u << n) - 1) & ~(1u << drop);
          const CanonicalCode sub = canonical_code(induced_mask(t.rep, mask));
          bool found = false;
          for (const auto& s : levels[n - 1]) found = found || s.code == sub;
          REQUIRE(found);
        }
      }
      CHECK(seen.size() == levels[n].size());
    }
  }
}

TEST_CASE("serial and parallel enumeration agree") {
  const auto p = test::main_params();
  const auto serial = enumerate_levels_serial(p, 5);
  for (int jobs : {1, 2, 4}) {
    EnumOptions opt;
    opt.jobs = jobs;
    const auto par = enumerate_levels(p, 5, opt);
    REQUIRE(par.size() == serial.size());
    for (std::size_t n = 0; n < par.size(); ++n) {
      REQUIRE(par[n].size() == serial[n].size());
      for (std::size_t i = 0; i < par[n].size(); ++i) {
        CHECK(par[n][i].code == serial[n][i].code);
        CHECK(par[n][i].rep == serial[n][i].rep);
      }
    }
  }
  CHECK(extend_level(p, serial[3]).size() == extend_level_serial(p, serial[3]).size());
}

TEST_CASE("budget exhaustion raises ResourceLimit") {
  EnumOptions opt;
  opt.budget.max_types_per_size = 5;
  CHECK_THROWS_AS(enumerate_levels(test::main_params(), 4, opt), ResourceLimit);
  Budget b;
  b.max_types_per_size = 5;
  CHECK_THROWS_AS(enumerate_levels_serial(test::main_params(), 4, b), ResourceLimit);
  opt.budget.max_types_per_size = 9;
  CHECK_NOTHROW(enumerate_levels(test::main_params(), 3, opt));
}
