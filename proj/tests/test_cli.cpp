#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include <sstream>

#include <json.hpp>

#include "decat/cli.hpp"
#include "decat/partition.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = decat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("core") {
  const auto r = run({"core", "--modulus", "2", "--partition", "[2,1,1]"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"core\":\"[]\",\"p_weight\":2}\n");
}

TEST_CASE("usage errors exit with 2 and name the offending token") {
  auto r = run({"core", "--modulus", "2", "--partition", "[2,x]"});
  CHECK(r.code == 2);
  CHECK(r.err.find("'x'") != std::string::npos);

  r = run({"core", "--modulus", "1", "--partition", "[2]"});
  CHECK(r.code == 2);
  CHECK(r.err.find("invalid modulus 1") != std::string::npos);

  r = run({"core", "--modulus", "2", "--partition", "[2]", "--bogus"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--bogus") != std::string::npos);

  r = run({"frob", "--modulus", "2"});
  CHECK(r.code == 2);
  CHECK(r.err.find("'frob'") != std::string::npos);

  CHECK(run({}).code == 2);
  CHECK(run({"crystal", "--modulus", "2", "--max-size", "2", "--format", "svg"}).code == 2);
  CHECK(run({"hecke", "normal-form", "--rank", "2", "--expr", "y3"}).code == 2);
  CHECK(run({"branch", "--partition", "[2,1]", "--n", "2"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("blocks") {
  const auto r = run({"blocks", "--modulus", "3", "--degree", "3"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["blocks"].size() == 1);
  CHECK(j["blocks"][0]["core"] == "[]");
  CHECK(j["blocks"][0]["members"] == json::array({"[3]", "[2,1]", "[1,1,1]"}));
  CHECK(j["blocks"][0]["weight"] == json({{"0", 1}, {"1", 1}, {"2", 1}}));
  CHECK(j["blocks"][0]["p_weight"] == 1);
  CHECK(j["derived_equivalence_classes"].size() == 1);

  const json across = json::parse(run({"blocks", "--modulus", "3", "--degree", "4", "--cross-degree"}).out);
  CHECK(across["derived_equivalence_classes"].size() == 2);
}

TEST_CASE("crystal") {
  const auto r = run({"crystal", "--modulus", "3", "--max-size", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["modulus"] == 3);
  CHECK(j["nodes"].size() == 4);
  CHECK(j["nodes"][3] == json({{"partition", "[1,1]"}, {"size", 2}, {"weight", {{"0", 1}, {"2", 1}}}}));
  CHECK(j["edges"] == json::parse(R"([{"src":"[]","dst":"[1]","residue":0},
                                      {"src":"[1]","dst":"[2]","residue":1},
                                      {"src":"[1]","dst":"[1,1]","residue":2}])"));

  const auto dot = run({"crystal", "--modulus", "2", "--max-size", "1", "--format", "dot"});
  CHECK(dot.out.find("digraph crystal {") == 0);
  CHECK(dot.out.find("\"[]\" -> \"[1]\" [label=\"0\"];") != std::string::npos);

  // every partition printed re-parses
  const json big = json::parse(run({"crystal", "--modulus", "0", "--max-size", "6"}).out);
  for (const auto& node : big["nodes"]) {
    const std::string text = node["partition"];
    CHECK(decat::to_string(decat::parse_partition(text)) == text);
  }
}

TEST_CASE("fock op-matrix") {
  auto r = run({"fock", "op-matrix", "--op", "e", "--residue", "2", "--modulus", "3", "--degree", "3"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["rows"] == json::array({"[2]", "[1,1]"}));
  CHECK(j["cols"] == json::array({"[3]", "[2,1]", "[1,1,1]"}));
  CHECK(j["entries"] == json::parse("[[0,0,1],[0,1,1]]"));

  r = run({"fock", "op-matrix", "--op", "f", "--residue", "0", "--modulus", "2", "--degree", "0", "--format", "csv"});
  CHECK(r.out == "row,col,coeff\n\"[1]\",\"[]\",1\n");

  r = run({"fock", "op-matrix", "--op", "h", "--residue", "0", "--modulus", "2", "--degree", "1"});
  CHECK(json::parse(r.out)["entries"] == json::parse("[[0,0,-1]]"));
}

TEST_CASE("casimir, branch, pieri") {
  auto r = run({"casimir", "--partition", "[2,1]", "--n", "3"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["casimir"] == 2 * 2 + 4 + 0 * 1 + 1);
  CHECK(j["eigenvalues"].size() == 2);
  for (const auto& row : j["eigenvalues"]) CHECK(row["content"] == row["box"][1].get<int>() - row["box"][0].get<int>());

  r = run({"branch", "--partition", "[2,1]", "--n", "3"});
  CHECK(r.out == "[\"[2]\",\"[1,1]\"]\n");
  r = run({"pieri", "--partition", "[2,1]", "--n", "4"});
  CHECK(r.out == "[\"[3,1]\",\"[2,2]\",\"[2,1,1]\"]\n");
}

TEST_CASE("hecke normal-form") {
  const auto r = run({"hecke", "normal-form", "--rank", "2", "--expr", "t1*y2"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out) == json::parse(R"([{"exponents":[0,0],"permutation":[1,2],"coeff":1},
                                              {"exponents":[1,0],"permutation":[2,1],"coeff":1}])"));
}

TEST_CASE("verify is deterministic") {
  const std::vector<std::string> args{"verify", "--modulus", "2", "--max-size", "5", "--suite", "all", "--seed", "11"};
  const auto a = run(args);
  const auto b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const json j = json::parse(a.out);
  CHECK(j["passed"] == true);
  std::vector<std::string> names;
  for (const auto& s : j["suites"]) {
    names.push_back(s["name"]);
    CHECK_FALSE(s.contains("elapsed_ms"));
  }
  CHECK(std::is_sorted(names.begin(), names.end()));

  const auto timed = run({"verify", "--modulus", "3", "--max-size", "3", "--suite", "hecke", "--timing"});
  CHECK(json::parse(timed.out)["suites"][0].contains("elapsed_ms"));
  CHECK(run({"verify", "--modulus", "3", "--max-size", "3", "--suite", "nope"}).code == 2);
}
