#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "mhg/cli.hpp"
#include "mhg/io.hpp"
#include "mhg/sumop.hpp"

using namespace mhg;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

const std::vector<std::string> kMain{"--delta", "3", "--k1", "1", "--k2", "3", "--c0", "10", "--c1", "11"};

std::vector<std::string> with_main(std::vector<std::string> tail) {
  std::vector<std::string> args(kMain);
  args.insert(args.end(), tail.begin(), tail.end());
  return args;
}

}  // namespace

TEST_CASE("validate") {
  const Run high = run({"validate", "--delta", "3", "--k1", "1", "--k2", "2", "--c0", "10", "--c1", "9"});
  CHECK(high.status == cli::kOk);
  CHECK(high.out.find("HighC(c)") != std::string::npos);

  const Run rejected = run({"validate", "--delta", "3", "--k1", "1", "--k2", "1", "--c0", "10", "--c1", "9"});
  CHECK(rejected.status == cli::kViolated);
  CHECK(rejected.out.find("Rejected") != std::string::npos);

  const Run bip = run({"validate", "--delta", "3", "--k1", "inf", "--k2", "0", "--c0", "8", "--c1", "7"});
  CHECK(bip.status == cli::kOk);
  CHECK(bip.out.find("Bipartite(a)") != std::string::npos);
}

TEST_CASE("invalid input exits 2") {
  CHECK(run({"validate", "--delta", "2", "--k1", "1", "--k2", "1", "--c0", "10", "--c1", "9"}).status ==
        cli::kInvalidInput);
  CHECK(run({"validate", "--delta", "3", "--k1", "x", "--k2", "1", "--c0", "10", "--c1", "9"}).status ==
        cli::kInvalidInput);
  CHECK(run({"nonsense"}).status == cli::kInvalidInput);
  CHECK(run(with_main({"census", "--m", "1"})).status == cli::kInvalidInput);
  CHECK(run(with_main({"decompose", "--space", "{\"n\":3,\"upper\":[1,1,3]}"})).status == cli::kInvalidInput);
}

TEST_CASE("magic") {
  const Run r = run(with_main({"magic"}));
  CHECK(r.status == cli::kOk);
  CHECK(json::parse(r.out)["valid"] == json::array({2, 3}));
  CHECK(run({"magic", "--delta", "3", "--k1", "inf", "--k2", "0", "--c0", "8", "--c1", "7"}).status == cli::kViolated);
}

TEST_CASE("profile and census") {
  const Run empty = run(with_main({"profile", "--max-size", "0"}));
  CHECK(empty.status == cli::kOk);
  CHECK(json::parse(empty.out) == json::parse(R"({"profile":[1]})"));
  CHECK(json::parse(run(with_main({"profile", "--max-size", "3"})).out)["profile"] == json::array({1, 1, 3, 9}));
  CHECK(json::parse(run(with_main({"census", "--max-size", "3", "--m", "2"})).out)["census"] == json::array({1, 2, 6}));
  const Run csv = run(with_main({"profile", "--max-size", "2", "--format", "csv"}));
  CHECK(csv.out == "n,profile\n0,1\n1,1\n2,3\n");
}

TEST_CASE("closure at M = 1 fails with a replayable witness") {
  const Run r = run(with_main({"verify", "closure", "--m", "1", "--max-size", "3"}));
  CHECK(r.status == cli::kViolated);
  const json j = json::parse(r.out);
  CHECK(j["status"] == "fail");
  const MetricSpace a = space_from_json(j["witness"]["a"]);
  const MetricSpace b = space_from_json(j["witness"]["b"]);
  CHECK_THROWS_AS(sum_m(a, b, 1), TriangleViolation);
  CHECK(run(with_main({"verify", "closure", "--m", "2", "--max-size", "4"})).status == cli::kOk);
}

TEST_CASE("verification subcommands pass on the main example") {
  CHECK(run(with_main({"verify", "freeness", "--max-size", "3"})).status == cli::kOk);
  CHECK(run(with_main({"verify", "hilbert", "--max-size", "4", "--m", "3"})).status == cli::kOk);
  CHECK(run(with_main({"verify", "polynomial", "--max-size", "3"})).status == cli::kOk);
  CHECK(run(with_main({"verify", "oracle", "--max-size", "3"})).status == cli::kOk);
  CHECK(run({"antipodal", "verify", "--max-size", "4"}).status == cli::kOk);
  CHECK(json::parse(run({"antipodal", "profile", "--max-size", "4"}).out)["profile"] == json::array({1, 1, 3, 3, 6}));
}

TEST_CASE("sum and decompose") {
  const Run s = run(with_main({"sum", "--a", "{\"n\":2,\"upper\":[1]}", "--b", "{\"n\":1,\"upper\":[]}", "--m", "2"}));
  CHECK(s.status == cli::kOk);
  CHECK(json::parse(s.out)["sum"]["upper"] == json::array({1, 2, 2}));
  const Run bad = run(with_main({"sum", "--a", "{\"n\":2,\"upper\":[3]}", "--b", "{\"n\":1,\"upper\":[]}", "--m", "1"}));
  CHECK(bad.status == cli::kViolated);
  const Run d = run(with_main({"decompose", "--space", "{\"n\":3,\"upper\":[1,3,3]}", "--m", "3"}));
  CHECK(d.status == cli::kOk);
  CHECK(json::parse(d.out)["factors"].size() == 2);
}

TEST_CASE("budget exhaustion exits 3") {
  CHECK(run(with_main({"profile", "--max-size", "5", "--budget-types", "10"})).status == cli::kResourceLimit);
}

TEST_CASE("output does not depend on the thread count") {
  for (const auto& cmd : std::vector<std::vector<std::string>>{{"enumerate", "--max-size", "4"},
                                                             {"profile", "--max-size", "5"},
                                                             {"verify", "closure", "--m", "1", "--max-size", "4"}}) {
    auto serial = cmd, parallel = cmd;
    serial.insert(serial.end(), {"--jobs", "1"});
    parallel.insert(parallel.end(), {"--jobs", "2"});
    CHECK(run(with_main(serial)).out == run(with_main(parallel)).out);
  }
}

TEST_CASE("params from inline JSON") {
  const Run r = run({"profile", "--params", R"({"delta":3,"k1":"inf","k2":0,"c0":8,"c1":7})", "--max-size", "4"});
  CHECK(r.status == cli::kOk);
  CHECK(json::parse(r.out)["profile"] == json::array({1, 1, 3, 3, 6}));
}
