#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "polycrystal/cli.hpp"
#include "polycrystal/io.hpp"
#include "polycrystal/special.hpp"

using namespace polycrystal;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("inequalities for rank2:2,2 contain lambda_1 >= x_1 and are truncated") {
  auto r = run({"--family", "rank2:2,2", "--lambda", "1,1", "inequalities"});
  CHECK(r.out.find("λ_1 ≥ x_1\n") != std::string::npos);
  CHECK(r.out.find("truncated=true") != std::string::npos);
  CHECK(r.code == kExitInconclusive);
  CHECK(r.err.rfind("warning:", 0) == 0);
}

TEST_CASE("finite-type inequalities are exact") {
  auto r = run({"--family", "rank2:1,2", "inequalities"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("truncated=false") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("an:3 json inequalities have zero constants and round-trip") {
  auto r = run({"--family", "an:3", "--lambda", "0,0,0", "inequalities", "--format", "json"});
  REQUIRE(r.code == kExitOk);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.at("forms").is_array());
  CHECK(!j.at("forms").empty());
  for (const auto& f : j.at("forms")) CHECK(f.at("const").get<long long>() == 0);
  FormSet fs = formset_from_json(r.out);
  FormSet direct = an_system(3);
  CHECK(fs.forms == direct.forms);
  CHECK(fs.zero_beyond == direct.zero_beyond);
  CHECK(formset_to_json(fs) + "\n" == r.out);
}

TEST_CASE("affine inequalities report truncation") {
  auto r = run({"--family", "affine-a:3", "--lambda", "1,0,0", "inequalities", "--rows", "4"});
  CHECK(r.out.find("truncated=true") != std::string::npos);
  CHECK(r.code == kExitInconclusive);
}

TEST_CASE("enumerate B(Lambda_1 + Lambda_2) for A_2") {
  auto r = run({"--family", "rank2:1,1", "--lambda", "1,1", "enumerate"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("8 elements, complete\n", 0) == 0);
}

TEST_CASE("enumerate json round-trips and is deterministic") {
  std::vector<std::string> args{"--family", "an:3", "--lambda", "1,1,0", "enumerate", "--format", "json", "--threads", "3"};
  auto a = run(args);
  auto b = run(args);
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  auto r = realization_from_json(a.out);
  CHECK(r.size() == 20);
  CHECK(r.complete);
  CHECK(realization_to_json(r) + "\n" == a.out);
}

TEST_CASE("enumerate at a depth cap exits 2") {
  auto r = run({"--family", "affine-a:3", "--lambda", "1,0,0", "enumerate", "--depth", "3"});
  CHECK(r.code == kExitInconclusive);
  CHECK(r.out.find("depth-capped at 3") != std::string::npos);
}

TEST_CASE("dot output") {
  auto r = run({"--family", "rank2:1,1", "--lambda", "1,0", "enumerate", "--format", "dot"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("digraph", 0) == 0);
  CHECK(r.out.find("[label=\"1\"]") != std::string::npos);
}

TEST_CASE("lr and mult") {
  CHECK(run({"--family", "rank2:1,1", "--lambda", "1,0", "lr", "--mu", "1,0", "--nu", "0,1"}).out == "1\n");
  CHECK(run({"--family", "rank2:1,1", "--lambda", "1,0", "lr", "--mu", "1,0", "--nu", "2,0"}).out == "1\n");
  CHECK(run({"--family", "rank2:1,1", "--lambda", "1,0", "lr", "--mu", "1,0", "--nu", "1,1"}).out == "0\n");
  CHECK(run({"--family", "rank2:1,1", "--lambda", "1,1", "mult", "--nu", "0,0"}).out == "2\n");
  CHECK(run({"--family", "rank2:1,1", "--lambda", "1,1", "mult", "--weight", "1,1"}).out == "2\n");
  CHECK(run({"--family", "rank2:1,1", "--lambda", "1,1", "mult", "--weight", "1,1", "--format", "json"}).out ==
        "{\"multiplicity\":2}\n");
}

TEST_CASE("epsstar") {
  // A_3, position (2;1) = 4 and (1;2) = 2: eps*_2 = max(x_2 - x_1, x_4)
  auto r = run({"--family", "an:3", "epsstar", "--point", "1,0,1,0", "--index", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "1\n");
  CHECK(run({"--family", "an:3", "epsstar", "--point", "0,0,3,0", "--index", "2"}).out == "3\n");
  CHECK(run({"--family", "an:3", "epsstar", "--point", "1", "--index", "9"}).code == kExitUsage);
}

TEST_CASE("positivity and ampleness diagnostics") {
  auto ok = run({"--family", "rank2:1,2", "check-positivity"});
  CHECK(ok.code == kExitOk);
  auto bad = run({"--family", "an:3", "--iota", "2,3,2,1", "check-positivity", "--format", "json"});
  CHECK(bad.code == kExitVerifyFailed);
  auto rep = positivity_from_json(bad.out);
  CHECK(!rep.pass);
  CHECK(rep.violations.front().position == 2);
  CHECK(positivity_to_json(rep) + "\n" == bad.out);

  auto na = run({"--family", "an:3", "--iota", "2,3,2,1", "--lambda", "0,1,0", "check-ample", "--format", "json"});
  CHECK(na.code == kExitVerifyFailed);
  auto amp = ample_from_json(na.out);
  CHECK(!amp.ample);
  CHECK(amp.witness.has_value());
  CHECK(ample_to_json(amp) + "\n" == na.out);
  CHECK(run({"--family", "an:3", "--iota", "2,3,2,1", "--lambda", "1,0,1", "check-ample"}).code == kExitOk);
}

TEST_CASE("verify") {
  auto r = run({"--family", "an:3", "verify", "--max-weight", "2"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("all checks passed") != std::string::npos);
  CHECK(run({"--family", "rank2:1,3", "verify", "--max-weight", "1", "--threads", "2"}).code == kExitOk);
  CHECK(run({"--family", "affine-a:3", "verify"}).code == kExitUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--family", "an:3"}).code == kExitUsage);
  CHECK(run({"--family", "an:3", "frobnicate"}).code == kExitUsage);
  CHECK(run({"--family", "an:3", "--lambda", "1,0", "enumerate"}).code == kExitUsage);
  CHECK(run({"--family", "an:3", "--lambda", "-1,0,0", "enumerate"}).code == kExitUsage);
  CHECK(run({"--family", "an:3", "--iota", "1,1,2,3", "enumerate"}).code == kExitUsage);
  CHECK(run({"--family", "an:3", "inequalities", "--format", "dot"}).code == kExitUsage);
  CHECK(run({"--family", "custom:/nonexistent.json", "inequalities"}).code == kExitUsage);
  CHECK(run({"--family", "an:3", "--help"}).code == kExitOk);
}

TEST_CASE("custom Cartan data from a file") {
  const std::string path = "test_cli_custom_b2.json";
  {
    std::ofstream f(path);
    f << cartan_to_json(build_cartan(FamilySpec::rank2(1, 2)));
  }
  auto r = run({"--family", "custom:" + path, "--lambda", "1,0", "enumerate"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("5 elements, complete", 0) == 0);
  CHECK(r.out == run({"--family", "rank2:1,2", "--lambda", "1,0", "enumerate", "--generic"}).out);
  std::remove(path.c_str());
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(formset_from_json("{\"forms\": 3}"), Error);
  CHECK_THROWS_AS(realization_from_json("[]"), Error);
}
