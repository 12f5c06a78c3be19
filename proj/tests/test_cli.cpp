#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "kwsgp/cli.hpp"

#include "doctest.h"
#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = kwsgp::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("analyze --gens reports the exact invariants") {
  const auto r = run({"analyze", "--gens", "5,7,11,13"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["schema"] == "kwsgp/1");
  CHECK(doc["status"] == "ok");
  CHECK(doc["result"]["frobenius"] == 9);
  CHECK(doc["result"]["embdim"] == 4);
  CHECK(doc["result"]["type"] == 3);
  CHECK(doc["result"]["mu"] == 6);
  const json expected_matrix = json::array(
      {{-4, 1, 0, 1}, {2, -3, 1, 0}, {3, 1, -2, 0}, {1, 3, 0, -2}});
  CHECK(doc["result"]["principal_matrix"]["entries"] == expected_matrix);
  CHECK(doc["result"]["principal_matrix"]["diagonal"] ==
        json::array({-4, -3, -2, -2}));
}

TEST_CASE("analyze --gens tolerates a non-minimal list") {
  const auto r = run({"analyze", "--gens", "4,6,9,20"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["result"]["generators"] == json::array({4, 6, 9}));
  CHECK(doc["inputs"]["gens"] == json::array({4, 6, 9, 20}));
}

TEST_CASE("analyze --kw attaches the closed form") {
  const auto r = run({"analyze", "--kw", "5,7", "--corners", "2:2,3:1"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["result"]["generators"] == json::array({5, 7, 11, 13}));
  CHECK(doc["result"]["kw"]["alpha"] == json::array({3, 1}));
  CHECK(doc["result"]["kw"]["beta"] == json::array({1, 3}));
  CHECK(doc["result"]["kw"]["case"] == "i");
  CHECK(doc["result"]["kw"]["recovered"] == json::array({5, 7, 11, 13}));
}

TEST_CASE("analyze --kw3 attaches base data and type prediction") {
  const auto r =
      run({"analyze", "--kw3", "9,11,2,1,4", "--points", "1:2:2"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["result"]["generators"] == json::array({29, 36, 44, 221}));
  CHECK(doc["result"]["kw3"]["base"]["frobenius"] == 403);
  CHECK(doc["result"]["kw3"]["adjoined"] == json::array({221}));
  CHECK(doc["result"]["kw3"]["type3"]["applicable"] == true);
  CHECK(doc["result"]["kw3"]["type3"]["agrees"] == true);
  CHECK(doc["result"]["kw3"]["type3"]["actual_pf"] ==
        json::array({271, 316, 331}));
  CHECK(doc["result"]["kw3"]["apery_intersection"]["ok"] == true);
  CHECK(doc["result"]["pf"] == json::array({271, 316, 331}));
}

TEST_CASE("analyze --apery includes the requested set") {
  const auto r = run({"analyze", "--gens", "5,7", "--apery", "5"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["result"]["apery"]["modulus"] == 5);
  CHECK(doc["result"]["apery"]["elements"] ==
        json::array({0, 21, 7, 28, 14}));
}

TEST_CASE("analyze input errors exit 2 with a machine readable object") {
  const auto r = run({"analyze", "--gens", "4,6"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  const json doc = json::parse(r.err);
  CHECK(doc["schema"] == "kwsgp/1");
  CHECK(doc["error"]["code"] == "NonCoprime");

  CHECK(run({"analyze"}).code == 2);
  CHECK(run({"analyze", "--gens", "5,x"}).code == 2);
  CHECK(run({"analyze", "--kw", "5"}).code == 2);
  CHECK(run({"analyze", "--kw", "5,7", "--corners", "9:9"}).code == 2);
}

TEST_CASE("verify principal and presentation families") {
  for (const std::string theorem : {"principal", "presentation"}) {
    const auto r = run({"verify", "--kw", "5,7", "--theorem", theorem});
    REQUIRE(r.code == 0);
    const json doc = json::parse(r.out);
    CHECK(doc["status"] == "pass");
    CHECK(doc["result"]["failed"] == 0);
    // the trivial two-generator member is reported but not applicable
    CHECK(doc["result"]["passed"] == 9);
    CHECK(doc["result"]["not_applicable"] == 1);
  }
}

TEST_CASE("verify kw3 theorems over the class box") {
  const auto r = run({"verify", "--kw3", "5,7,2,1,3", "--theorem", "type3"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["status"] == "pass");
  CHECK(doc["result"]["failed"] == 0);
  CHECK(doc["result"]["passed"] == 4);

  const auto r2 = run({"verify", "--kw3", "5,7,2,1,3", "--theorem", "apery"});
  REQUIRE(r2.code == 0);
  CHECK(json::parse(r2.out)["result"]["failed"] == 0);
}

TEST_CASE("verify rejects unknown theorems and over-cap families") {
  CHECK(run({"verify", "--kw", "5,7", "--theorem", "bogus"}).code == 2);
  CHECK(run({"verify", "--kw3", "5,7,2,1,3", "--theorem", "principal"}).code ==
        2);
  const auto r = run({"verify", "--kw", "5,7", "--theorem", "principal",
                      "--cap", "3"});
  CHECK(r.code == 2);
  CHECK(json::parse(r.err)["error"]["code"] == "CapExceeded");
}

TEST_CASE("table output is byte identical to the golden files") {
  for (const std::string id : {"type-5-7", "mu-5-7", "mu2-5-7"}) {
    const auto r = run({"table", id});
    REQUIRE(r.code == 0);
    CHECK(r.out == slurp(std::string(GOLDEN_DIR) + "/" + id + ".csv"));
  }
  const auto bad = run({"table", "nope"});
  CHECK(bad.code == 2);
  CHECK(json::parse(bad.err)["error"]["code"] == "UnknownTable");
}

TEST_CASE("render --kw emits a staircase svg") {
  const auto r = run({"render", "--kw", "5,7", "--corners", "2:2,3:1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("<svg", 0) == 0);
  CHECK(r.out.find("<polyline") != std::string::npos);
  // one marker per corner
  std::size_t circles = 0, pos = 0;
  while ((pos = r.out.find("<circle", pos)) != std::string::npos) {
    ++circles;
    pos += 7;
  }
  CHECK(circles == 2);
}

TEST_CASE("render --kw3 emits the gap cloud") {
  const auto r = run({"render", "--kw3", "5,7,2,1,3"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["result"]["gaps"].size() == 52);
  CHECK(doc["result"]["plane"]["rhs"] == 103);
  CHECK(doc["result"]["plane"]["coefficients"] == json::array({15, 21, 17}));

  const auto r2 = run({"render", "--kw3", "9,11,2,1,4", "--points", "1:2:2"});
  REQUIRE(r2.code == 0);
  const json doc2 = json::parse(r2.out);
  CHECK(doc2["result"]["pf_points"].size() == 3);
  CHECK(doc2["result"]["apery_intersection"]["ok"] == true);
}

TEST_CASE("enumerate lists members with both encodings") {
  const auto r = run({"enumerate", "--kw", "5,7"});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["result"]["count"] == 10);
  CHECK(doc["result"]["members"].size() == 10);
  CHECK(doc["result"]["members"][0]["generators"] == json::array({5, 7}));

  const auto csv = run({"enumerate", "--kw", "5,7", "--csv"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("corners,gens,embdim,variant\n", 0) == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 11);

  const auto r3 = run({"enumerate", "--kw3", "5,7,2,1,3"});
  REQUIRE(r3.code == 0);
  CHECK(json::parse(r3.out)["result"]["count"] == 12);

  CHECK(run({"enumerate", "--kw", "5,7", "--cap", "3"}).code == 2);
}

TEST_CASE("--out writes the payload to a file") {
  const std::string path = "cli_out_test.json";
  const auto r = run({"analyze", "--gens", "5,7", "--out", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  const json doc = json::parse(slurp(path));
  CHECK(doc["result"]["frobenius"] == 23);
  std::remove(path.c_str());
}

TEST_CASE("help exits zero") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
}
