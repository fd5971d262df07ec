#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gainbalance/cli.hpp"

using namespace gainbalance;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("gainbalance-test-" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("classify W4 reports Bad with a witness") {
  auto r = call({"classify", "W4", "--class", "contains-z3", "--test", "circle", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "Bad");
  CHECK(j["rule"] == "Thm Validity of the Circle Test");
  CHECK(j["evidence"]["verified"] == true);
  CHECK(j["evidence"]["basis"].size() == 4);
}

TEST_CASE("witness files round-trip through the file commands") {
  auto dir = scratch("roundtrip");
  for (const char* family : {"2C4", "K4dd", "C3(3,3,2)", "W6"}) {
    CAPTURE(family);
    auto w = call({"witness", "--family", family, "--out-dir", dir.string()});
    REQUIRE(w.code == 0);
    auto g = (dir / "graph.txt").string(), a = (dir / "gains.txt").string(), b = (dir / "basis.txt").string();
    auto c = call({"circle-test", g, a, b, "--json"});
    REQUIRE(c.code == 0);
    auto j = nlohmann::json::parse(c.out);
    CHECK(j["passes"] == true);
    CHECK(j["balanced"] == false);
    CHECK(j["bad_witness"] == true);
    auto bal = nlohmann::json::parse(call({"balance", g, a, "--json"}).out);
    CHECK(bal["balanced"] == false);
  }
  auto w = call({"witness", "--family", "K1loop", "--out-dir", dir.string()});
  REQUIRE(w.code == 0);
  auto c = call({"cycle-test", (dir / "graph.txt").string(), (dir / "gains.txt").string(),
                 (dir / "basis.txt").string(), "--json"});
  auto j = nlohmann::json::parse(c.out);
  CHECK(j["passes"] == true);
  CHECK(j["balanced"] == false);
  CHECK(j["orientations"] == "given");
}

TEST_CASE("minor of 2C4 in itself has singleton branch sets") {
  auto dir = scratch("minor");
  REQUIRE(call({"witness", "--family", "2C4", "--out-dir", dir.string()}).code == 0);
  auto r = call({"minor", (dir / "graph.txt").string(), "--target", "2C4", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["found"] == true);
  for (auto& [name, set] : j["witness"]["branch_sets"].items()) {
    CHECK(set.size() == 1);
    CHECK(set[0] == name);
  }
  CHECK(call({"minor", "W4", "--target", "2C4", "--json"}).out.find("\"found\": false") != std::string::npos);
}

TEST_CASE("oracle on C3(3,3,2) over Z3 finds a counterexample") {
  auto r = call({"oracle", "C3-332", "--group", "Z3", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["good"] == false);
  CHECK(j["counterexample"]["verified"] == true);
}

TEST_CASE("exit codes") {
  auto dir = scratch("errors");
  auto bad = dir / "bad.txt";
  std::ofstream(bad) << "vertex a\nedge e1 a\n";
  auto r = call({"balance", bad.string(), bad.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2, column 1") != std::string::npos);
  CHECK(call({"classify", "NOPE"}).code == 2);
  CHECK(call({"classify", "W4", "--class", "weird"}).code == 2);
  CHECK(call({"classify", "W4", "--test", "other"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"witness", "--family", "W5"}).code == 2);
  CHECK(call({"oracle", "W4", "--group", "Z3", "--budget", "5"}).code == 3);
  CHECK(call({"minor", "W8", "--target", "2C4", "--budget", "2"}).code == 3);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("reports are deterministic") {
  auto a = call({"random", "--seed", "99", "--vertices", "5", "--edges", "9", "--group", "S3", "--json"});
  auto b = call({"random", "--seed", "99", "--vertices", "5", "--edges", "9", "--group", "S3", "--json"});
  auto c = call({"random", "--seed", "100", "--vertices", "5", "--edges", "9", "--group", "S3", "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(call({"classify", "K4dd", "--json"}).out == call({"classify", "K4dd", "--json"}).out);
  auto atlas = call({"atlas", "--max-edges", "5", "--group", "Z3", "--json"});
  REQUIRE(atlas.code == 0);
  auto j = nlohmann::json::parse(atlas.out);
  CHECK(j["disagree"] == 0);
}

TEST_CASE("abelian report from the command line") {
  auto dir = scratch("abelian");
  REQUIRE(call({"witness", "--family", "W4", "--out-dir", dir.string()}).code == 0);
  auto r = call({"abelian", (dir / "graph.txt").string(), (dir / "basis.txt").string(), "--query", "r1 r2 r3 r4",
                 "--witness", "3", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["torsion"] == nlohmann::json::array({"3"}));
  CHECK(j["queries"][0]["order"] == "3");
  CHECK(j["witness"]["gains"]["group"] == "Z 3");
}
