#include <doctest.h>

#include "capelli/bsat.hpp"
#include "capelli/cli.hpp"
#include "capelli/json_io.hpp"

#include <sstream>

using namespace capelli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("window parsing") {
  CHECK(parse_window("-4:4") == std::pair<int, int>{-4, 4});
  CHECK(parse_window("0:0") == std::pair<int, int>{0, 0});
  CHECK_THROWS_AS(parse_window("4:-4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_window("1-3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_window("a:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_window("1:3x"), std::invalid_argument);
}

TEST_CASE("bs compute") {
  const auto r = cli({"bs", "compute", "--case", "4", "--size", "2"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "b = (s+1)(s+2)\n"));
  CHECK(contains(r.out, "c = 1\n"));
  CHECK(contains(r.out, "verdict: match"));
  const auto disputed = cli({"bs", "compute", "--case", "6"});
  CHECK(disputed.code == kExitOk);
  CHECK(contains(disputed.out, "table b = (s+2)(s+4)"));
  CHECK(contains(disputed.out, "catalog b = (s+1)(s+4)"));
  CHECK(contains(disputed.err, "warning"));
}

TEST_CASE("certificate JSON is canonical") {
  const auto r = cli({"bs", "compute", "--case", "2", "--size", "2", "--json"});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j.at("b_monic") == Json::array({"3/2", "5/2", "1"}));
  CHECK(j.at("c") == "1");
  CHECK(j.at("verdict") == "match");
  CHECK(j.at("roots") == Json::array({"-3/2", "-1"}));
  CHECK(certificate_json(certificate_from_json(j)).dump(2) + "\n" == r.out);
}

TEST_CASE("module JSON round trip") {
  const auto r = cli({"module", "ladder", "--case", "1", "--size", "2", "--lambda", "1/2", "--window", "-2:2", "--json"});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j.at("valid") == true);
  const GradedModule t = module_from_json(j.at("module"));
  CHECK(module_json(t).dump() == j.at("module").dump());
  CHECK(validate(t).empty());
}

TEST_CASE("catalog JSON round trip") {
  const auto r = cli({"catalog", "list", "--json"});
  REQUIRE(r.code == kExitOk);
  const Json j = Json::parse(r.out);
  CHECK(j.size() == 8);
  CHECK(j.dump(2) + "\n" == r.out);
  CHECK(j[2].at("disputed") == true);
}

TEST_CASE("algebra commands") {
  const auto nf = cli({"algebra", "nf", "--case", "4", "--size", "2", "delta*f"});
  CHECK(nf.code == kExitOk);
  CHECK(nf.out == "1/4*theta^2 + 3/2*theta + 2\n");
  const auto fz = cli({"algebra", "fuzz", "--case", "1", "--size", "2", "--trials", "50", "--seed", "3"});
  CHECK(fz.code == kExitOk);
  CHECK(contains(fz.out, " 0 discrepancies"));
}

TEST_CASE("module commands") {
  const auto br = cli({"module", "breaks", "--case", "4", "--size", "2", "--lambda", "0", "--window", "-4:4"});
  CHECK(br.code == kExitOk);
  CHECK(contains(br.out, "break points: {-1, 0}"));
  const auto psi = cli({"module", "psi", "--case", "4", "--size", "2", "--lambda", "1/2", "--window", "-2:2"});
  CHECK(psi.code == kExitOk);
  CHECK(contains(psi.out, "equivalence witness: pass"));
  const auto lad = cli({"module", "ladder", "--case", "5", "--lambda", "-1", "--window", "0:3"});
  CHECK(lad.code == kExitOk);
  CHECK(contains(lad.out, "validate: ok"));
}

TEST_CASE("exit codes") {
  CHECK(cli({"--help"}).code == kExitOk);
  CHECK(cli({"bs", "compute", "--help"}).code == kExitOk);
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"bs", "compute"}).code == kExitUsage);
  CHECK(cli({"bs", "compute", "--case", "9"}).code == kExitUsage);
  CHECK(cli({"bs", "compute", "--case", "3", "--size", "5"}).code == kExitUsage);
  CHECK(cli({"bs", "compute", "--case", "x"}).code == kExitUsage);
  CHECK(cli({"bs", "verify-all", "--sizes", "huge"}).code == kExitUsage);
  CHECK(cli({"algebra", "nf", "--case", "4", "f*"}).code == kExitUsage);
  CHECK(cli({"module", "ladder", "--case", "4", "--lambda", "1/0", "--window", "0:1"}).code == kExitUsage);
  CHECK(cli({"module", "ladder", "--case", "4", "--lambda", "0", "--window", "2:1"}).code == kExitUsage);
  CHECK(cli({"module", "ladder", "--case", "4", "--lambda", "0"}).code == kExitUsage);
  CHECK(cli({"algebra", "fuzz", "--case", "4", "--trials", "0"}).code == kExitUsage);
}

TEST_CASE("verify-all exits cleanly with disputed rows") {
  const auto r = cli({"bs", "verify-all", "--sizes", "min"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "(8) n=4  b = (s+1)(s+2)(s+3)(s+4)"));
  CHECK(contains(r.out, "mismatch-disputed-row"));
  CHECK(contains(r.err, "warning: row (3)"));
  CHECK(contains(r.err, "warning: row (6)"));
}
