#ifndef MHG_REPORT_HPP
#define MHG_REPORT_HPP

#include <string>

#include <json.hpp>

namespace mhg {

/// Outcome of a verification. Serialized as
/// {"check": ..., "status": "pass"|"fail", "degree": ..., "witness": ...}.
struct Report {
  std::string check;
  bool pass = true;
  /// Size or degree the check ran to.
  int degree = 0;
  /// Machine-readable counterexample; null on pass.
  nlohmann::json witness;
  std::string message;
  /// Extra summary data (counts, ranks).
  nlohmann::json details = nlohmann::json::object();

  nlohmann::json to_json() const {
    nlohmann::json j{{"check", check}, {"status", pass ? "pass" : "fail"}, {"degree", degree},
                     {"witness", witness}};
    if (!message.empty()) j["message"] = message;
    if (!details.empty()) j["details"] = details;
    return j;
  }
};

}  // namespace mhg

#endif  // MHG_REPORT_HPP
