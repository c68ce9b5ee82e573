#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "skeinhom/cli.hpp"
#include "skeinhom/json_io.hpp"

using namespace skeinhom;

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int status = cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("gen example-t | certify") {
  Result g = run({"gen", "example-t"});
  REQUIRE(g.status == 0);
  Result c = run({"certify"}, g.out);
  REQUIRE(c.status == 0);
  json j = json::parse(c.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["verdict"] == "CycleNonBoundary");
  CHECK(j["epsilon_value"] == json::parse("[1,0]"));
}

TEST_CASE("epsilon of a skein relation is zero") {
  std::string chain = R"({"level":0,"terms":[{"coeff":[[-1,-1],[0,1],[1,-1]],
    "diagram":{"crossings":[[1,3,2,4],[3,1,4,2]],"balls":[],"loops":0}}]})";
  Result r = run({"epsilon"}, chain);
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["epsilon"] == json::parse("[0,0]"));
}

TEST_CASE("boundary of a level-0 chain") {
  Result r = run({"boundary"}, R"({"crossings":[[1,1,2,2]],"balls":[],"loops":0})");
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  CHECK(j["level"] == 0);
  CHECK(j["terms"].empty());
}

TEST_CASE("bracket") {
  Result r = run({"bracket"}, R"({"crossings":[[1,1,2,2]],"balls":[],"loops":0})");
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["value"] == json::parse("[[1,1],[5,1]]"));
}

TEST_CASE("malformed input names the validator") {
  Result a = run({"epsilon"}, R"({"crossings":[[1,2,1,3]],"balls":[],"loops":0})");
  CHECK(a.status == 1);
  CHECK(a.err.find("EdgeLabelCount") != std::string::npos);
  Result b = run({"boundary"}, "{not json");
  CHECK(b.status == 1);
  CHECK(b.err.find("[json]") != std::string::npos);
  Result c = run({"boundary"}, R"({"crossings":[[1,1,2,2]],"balls":[2],"loops":0})");
  CHECK(c.status == 1);
  CHECK(c.err.find("BadBallIndex") != std::string::npos);
  Result d = run({"boundary"}, R"({"crossings":[[1,2,3,4],[1,3,2,4]]})");
  CHECK(d.status == 1);
  CHECK(d.err.find("NonPlanar") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({"frobnicate"}).status == cli::kExitUsage);
  CHECK(run({"boundary", "--bogus"}).status == cli::kExitUsage);
  CHECK(run({}).status == cli::kExitUsage);
  CHECK(run({"gen", "no-such-family"}).status == cli::kExitUsage);
  CHECK(run({"boundary", "--format", "xml"}).status == cli::kExitUsage);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("unknown verdicts exit 2") {
  Result g = run({"gen", "framing-cycle"});
  Result v = run({"verify-cycle", "--budget", "0"}, g.out);
  CHECK(v.status == cli::kExitUnknown);
  CHECK(json::parse(v.out)["verdict"] == "Unknown");
  Result c = run({"certify", "--budget", "0"}, g.out);
  CHECK(c.status == cli::kExitUnknown);
  CHECK(run({"verify-cycle"}, g.out).status == 0);
}

TEST_CASE("budget from the environment") {
  Result g = run({"gen", "framing-cycle", "--sign", "-"});
  setenv("SKEINHOM_BUDGET", "0", 1);
  Result v = run({"verify-cycle"}, g.out);
  Result w = run({"verify-cycle", "--budget", "2"}, g.out);
  unsetenv("SKEINHOM_BUDGET");
  CHECK(v.status == cli::kExitUnknown);
  CHECK(w.status == 0);
}

TEST_CASE("round trip is the identity on canonical form") {
  for (auto args : std::vector<std::vector<std::string>>{{"gen", "example-t"},
                                                         {"gen", "kinked-annulus", "--n", "2"},
                                                         {"gen", "torus-link", "--n", "3"},
                                                         {"gen", "framing-cycle", "--sign", "-"}}) {
    json j = json::parse(run(args).out);
    Chain c = chain_from_json(j);
    json again = to_json(c);
    CHECK(again["level"] == j["level"]);
    CHECK(again["terms"] == j["terms"]);
    CHECK(chain_from_json(again) == c);
  }
}

TEST_CASE("big coefficients travel as strings") {
  std::string chain = R"({"level":0,"terms":[{"coeff":[[0,"123456789012345678901234567890"]],
    "diagram":{"crossings":[[1,1,2,2]]}}]})";
  Chain c = chain_from_json(json::parse(chain));
  json j = to_json(c);
  CHECK(j["terms"][0]["coeff"][0][1] == "123456789012345678901234567890");
}

TEST_CASE("output is deterministic and --out writes a file") {
  Result g = run({"gen", "kinked-annulus", "--n", "2"});
  Result a = run({"certify"}, g.out), b = run({"certify"}, g.out);
  CHECK(a.out == b.out);
  std::string path = "cli_test_out.json";
  Result f = run({"certify", "--out", path}, g.out);
  CHECK(f.status == 0);
  CHECK(f.out.empty());
  std::ifstream file(path);
  std::stringstream ss;
  ss << file.rdbuf();
  CHECK(ss.str() == a.out);
  std::remove(path.c_str());
}

TEST_CASE("input from a file path") {
  std::string path = "cli_test_in.json";
  {
    std::ofstream file(path);
    file << run({"gen", "example-t"}).out;
  }
  Result r = run({"epsilon", path});
  CHECK(r.status == 0);
  CHECK(json::parse(r.out)["epsilon"] == json::parse("[1,0]"));
  std::remove(path.c_str());
  CHECK(run({"epsilon", "no/such/file.json"}).status == 1);
}

TEST_CASE("text format") {
  Result r = run({"certify", "--format", "text"}, run({"gen", "example-t"}).out);
  CHECK(r.out.find("verdict: CycleNonBoundary") != std::string::npos);
}

TEST_CASE("selftest passes") {
  Result r = run({"selftest"});
  CHECK(r.status == 0);
  CHECK(json::parse(r.out)["pass"] == true);
}
