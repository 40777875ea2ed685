#ifndef MHG_ENUMERATE_HPP
#define MHG_ENUMERATE_HPP

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "mhg/canonical.hpp"
#include "mhg/metric_space.hpp"
#include "mhg/params.hpp"

namespace mhg {

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Budget {
  std::size_t max_types_per_size = 1'000'000;
  std::optional<std::chrono::seconds> max_time;
};

struct EnumOptions {
  Budget budget;
  /// 0: OpenMP default; 1: serial reference path; k > 1: k threads.
  int jobs = 0;
};

/// One isomorphism type: its code and the canonically labeled representative.
struct TypeEntry {
  CanonicalCode code;
  MetricSpace rep;
};

/// Types of one size, sorted by code.
using Level = std::vector<TypeEntry>;

/// Levels 0..n_max of the age: level n holds one representative per
/// isomorphism type of n-point members. Built by one-point extension of each
/// level n-1 representative with dedup by canonical code.
std::vector<Level> enumerate_levels(const ParameterSequence& p, int n_max, const EnumOptions& opt = {});

/// Serial reference for enumerate_levels. Same output, single thread.
std::vector<Level> enumerate_levels_serial(const ParameterSequence& p, int n_max, const Budget& budget = {});

/// Extends every parent by one point. Output sorted by code, duplicates removed.
Level extend_level(const ParameterSequence& p, const Level& parents, const EnumOptions& opt = {});
Level extend_level_serial(const ParameterSequence& p, const Level& parents);

Level enumerate_age(const ParameterSequence& p, int n, const EnumOptions& opt = {});

/// a_0..a_N, a_0 = 1 for the empty type.
struct Profile {
  std::vector<mpz_class> counts;

  std::size_t size() const { return counts.size(); }
  const mpz_class& operator[](std::size_t i) const { return counts[i]; }
  friend bool operator==(const Profile&, const Profile&) = default;
};

Profile profile(const ParameterSequence& p, int n_max, const EnumOptions& opt = {});

/// counts[d] = number of indecomposable types of size d (counts[0] = 0).
struct Census {
  std::vector<mpz_class> counts;
  std::size_t size() const { return counts.size(); }
  const mpz_class& operator[](std::size_t i) const { return counts[i]; }
};

Census indecomposable_census(const ParameterSequence& p, Distance m, int n_max, const EnumOptions& opt = {});
/// Census over already enumerated levels.
Census census_of(const std::vector<Level>& levels, Distance m);

/// Largest n oracle_enumerate accepts by default.
inline constexpr int kOracleBound = 4;

/// Type count of n-point members found by brute force: every labeled assignment
/// in [1, delta]^C(n,2), filtered by the metric axioms and in_age, deduplicated
/// by exhaustive permutation isometry tests. Throws ResourceLimit when n > bound.
std::size_t oracle_enumerate(const ParameterSequence& p, int n, int bound = kOracleBound);

}  // namespace mhg

#endif  // MHG_ENUMERATE_HPP
