#include <cstdio>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "curvejac/cli/app.hpp"
#include "test_support.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = curvejac::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const char* name) { return std::string(CURVEJAC_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("jacobian") {
  const auto r = run({"jacobian", fx("lut.curve")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind(R"({"torus_rank":1,"unipotent_rank":0,"abelian_rank":0,)", 0) == 0);
  CHECK(r.err.empty());
  CHECK(run({"jacobian", fx("lut.curve")}).out == r.out);
}

TEST_CASE("contract") {
  const auto r = run({"contract", "--points", "0:2"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["generators"] == nlohmann::json::array({"t^2", "t^3"}));
  CHECK(j["config"]["singularities"][0]["branches"][0]["mult"] == 2);
  CHECK(j["config"]["singularities"][0]["branches"].size() == 1);

  const auto n = nlohmann::json::parse(run({"contract", "--points", "0:1,1:1"}).out);
  CHECK(n["generators"] == nlohmann::json::array({"t^2 - t", "t^3 - t^2"}));

  CHECK(run({"contract", "--points", "0:1"}).code == 1);
  CHECK(run({"contract", "--points", "0:x"}).code == 2);
  CHECK(run({"contract", "--points", "0:1,0:1"}).code == 2);
}

TEST_CASE("aj and probe") {
  const auto a = nlohmann::json::parse(run({"aj", fx("lut.curve"), "--point", "L1:2"}).out);
  const auto b = nlohmann::json::parse(run({"aj", fx("lut.curve"), "--point", "L2:-1"}).out);
  CHECK(a["torus_coords"] == b["torus_coords"]);
  CHECK(run({"aj", fx("nodal.curve"), "--point", "L:0"}).code == 1);
  CHECK(run({"aj", fx("nodal.curve"), "--point", "M:3"}).code == 2);
  CHECK(run({"aj", fx("nodal.curve"), "--point", "L"}).code == 2);

  const auto p1 = run({"probe", fx("lut.curve"), "--samples", "10", "--point", "L1:2", "--point", "L2:-1"});
  CHECK(p1.code == 0);
  const auto pj = nlohmann::json::parse(p1.out);
  CHECK(pj["collisions"][0] == nlohmann::json::array({"L1:2", "L2:-1"}));
  CHECK(run({"probe", fx("lut.curve"), "--samples", "10", "--point", "L1:2", "--point", "L2:-1"}).out == p1.out);
  CHECK(run({"probe", fx("lut.curve"), "--samples", "10", "--seed", "9"}).out !=
        run({"probe", fx("lut.curve"), "--samples", "10", "--seed", "10"}).out);
  const auto nodal = nlohmann::json::parse(run({"probe", fx("nodal.curve"), "--samples", "50"}).out);
  CHECK(nodal["collisions"].empty());
  CHECK(nodal["samples"] == 50);
}

TEST_CASE("modifiable and modify") {
  const auto s = nlohmann::json::parse(run({"modifiable", fx("two_lines.curve")}).out);
  CHECK(s["sites"].size() == 2);
  CHECK(nlohmann::json::parse(run({"modifiable", fx("lut.curve")}).out)["sites"].empty());

  const std::string out = "cli_modify_test.curve";
  const auto m = run({"modify", fx("triple_point.curve"), "--sing", "p", "--branch", "0", "-o", out});
  CHECK(m.code == 0);
  const auto text = testing::read_file(out);
  std::remove(out.c_str());
  const auto c = testing::parse_config(text);
  CHECK(c.singularities.size() == 1);
  CHECK(c.singularities[0].branches.size() == 2);

  CHECK(run({"modify", fx("lut.curve"), "--sing", "n1", "--branch", "0", "-o", out}).code == 1);
  CHECK(run({"modify", fx("lut.curve"), "--sing", "zz", "--branch", "0", "-o", out}).code == 2);
  CHECK(run({"modify", fx("lut.curve"), "--sing", "n1", "--branch", "0"}).code == 2);
}

TEST_CASE("witness") {
  const auto w = run({"witness", fx("lut.curve"), "--sing", "n1", "--branch", "0"});
  CHECK(w.code == 0);
  const auto j = nlohmann::json::parse(w.out);
  CHECK(j["status"] == "found");
  CHECK(j["case"] == "ConnectivityValue");
  CHECK(j["lambda"] == "2");
  CHECK(run({"witness", fx("two_lines.curve"), "--sing", "n", "--branch", "0"}).code == 1);
  CHECK(run({"witness", fx("lut.curve"), "--sing", "n1", "--branch", "7"}).code == 2);

  // A mixed-multiplicity bridge: the candidate germ lifts, reported as not found.
  const std::string path = "cli_witness_test.curve";
  {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    std::fputs("curve m\ncomponent A\ncomponent B\nsing p pinch (A at 0) (B at 0 mult 2)\n", f);
    std::fclose(f);
  }
  const auto nf = run({"witness", path, "--sing", "p", "--branch", "0"});
  std::remove(path.c_str());
  CHECK(nf.code == 1);
  CHECK(nlohmann::json::parse(nf.out)["status"] == "not_found");
}

TEST_CASE("usage and parse errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"jacobian"}).code == 2);
  CHECK(run({"jacobian", "/nonexistent/file.curve"}).code == 2);
  const std::string path = "cli_bad_test.curve";
  {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    std::fputs("curve x\ncomponent L\nsing n node (L at 0)\n", f);
    std::fclose(f);
  }
  const auto bad = run({"jacobian", path});
  std::remove(path.c_str());
  CHECK(bad.code == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.find(":3:") != std::string::npos);
  CHECK(bad.err.find("node requires exactly two branches") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify") {
  const auto v = run({"verify", "--fixtures", CURVEJAC_FIXTURE_DIR});
  CHECK(v.code == 0);
  const auto j = nlohmann::json::parse(v.out);
  CHECK(j["passed"] == true);
  CHECK(j["criteria"].size() == 8);
  CHECK(run({"verify", "--fixtures", "/nonexistent"}).code == 1);
}
