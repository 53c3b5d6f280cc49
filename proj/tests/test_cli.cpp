#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qg/cli.hpp"
#include "qg/linear.hpp"
#include "qg/table_io.hpp"

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = qg::cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  nlohmann::json run_json(std::vector<std::string> args, int expected = 0) {
    args.insert(args.begin(), "--json");
    auto const r = run(args);
    REQUIRE(r.code == expected);
    return nlohmann::json::parse(r.out);
  }

  std::string temp_file(std::string const& name, std::string const& text) {
    std::string const path = std::string(P_tmpdir) + "/" + name;
    std::ofstream(path) << text;
    return path;
  }
}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("classify") {
    auto const j = run_json({"classify", "--n", "13", "--a", "3"});
    CHECK(j["classes"] == nlohmann::json{"quadratical", "c3"});
    CHECK(j["k"] == 8);
    CHECK(j["b"] == 11);
    CHECK(j["commutative"] == false);
    CHECK(run({"classify", "--n", "13", "--a", "3", "--b", "11"}).code == 0);
  }

  TEST_CASE("classify rejects even orders and a wrong b") {
    auto const even = run({"classify", "--n", "4", "--a", "3"});
    CHECK(even.code == 1);
    CHECK(even.err.find("even") != std::string::npos);
    CHECK(run({"classify", "--n", "13", "--a", "3", "--b", "3"}).code == 1);
    CHECK(run({"classify", "--n", "9", "--a", "3"}).code == 1);
    CHECK(run({"classify", "--n", "13", "--a", "13"}).code == 1);
  }

  TEST_CASE("usage errors and help") {
    CHECK(run({}).code == 1);
    CHECK(run({"frobnicate"}).code == 1);
    CHECK(run({"classify", "--n", "13"}).code == 1);
    CHECK(run({"classify", "--n", "x", "--a", "3"}).code == 1);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"survey", "--max-n", "10"}).code == 1);
  }

  TEST_CASE("output is deterministic") {
    for (auto const& args : std::vector<std::vector<std::string>>{
             {"--json", "classify", "--n", "13", "--a", "3"},
             {"--json", "survey", "--pairs", "--max-n", "60"},
             {"--json", "verify-tables", "--max-n", "40"},
             {"--json", "oracle", "--max-n", "6"},
             {"check"}}) {
      auto const first  = run(args);
      auto const second = run(args);
      CHECK(first.out == second.out);
      CHECK(first.code == second.code);
    }
  }

  TEST_CASE("construct") {
    auto const j = run_json({"construct", "--n", "13", "--k", "8"});
    CHECK(j["a"] == 3);
    CHECK(j["b"] == 11);
    CHECK(j["quasigroup"] == true);
    CHECK(j["rows"][1][0] == 3);
    auto const one = run_json({"--one-based", "construct", "--n", "13", "--k", "8"});
    CHECK(one["rows"][0][0] == 1);
    CHECK(one["rows"][0][1] == 12);
    auto const non = run_json({"construct", "--n", "8", "--k", "4"});
    CHECK(non["quasigroup"] == false);
    CHECK(run({"construct", "--n", "9", "--k", "4"}).code == 2);
    CHECK(run({"construct", "--n", "9", "--k", "9"}).code == 1);
  }

  TEST_CASE("parastrophe") {
    auto const j = run_json({"parastrophe", "--n", "11", "--a", "3", "--b", "9"});
    CHECK(j["equality_case"] == "all_distinct");
    CHECK(j["equality_case_holds"] == true);
    CHECK(j["parastrophes"].size() == 5);
    for (auto const& p : j["parastrophes"]) {
      CHECK(p["match"] == true);
    }
    auto const p1
        = run_json({"parastrophe", "--n", "13", "--a", "3", "--b", "11", "--which", "1"});
    CHECK(p1["parastrophes"][0]["a"] == 8);
    CHECK(p1["parastrophes"][0]["kstar"] == 3);
    CHECK(run({"parastrophe", "--n", "13", "--a", "3", "--b", "11", "--which", "6"}).code
          == 1);
    CHECK(run({"parastrophe", "--n", "13", "--a", "3", "--b", "3"}).code == 1);
  }

  TEST_CASE("enumerate and oracle") {
    auto const j = run_json({"enumerate", "--n", "5", "--all-k"});
    CHECK(j["results"].size() == 4);
    CHECK(j["results"][0]["survivors"] == 0);
    CHECK(j["results"][1]["tables"][0]["linear"]["a"] == 2);
    CHECK(run({"enumerate", "--n", "10", "--k", "3"}).code == 1);
    auto const o = run_json({"oracle", "--max-n", "7"});
    for (auto const& row : o["rows"]) {
      CHECK(row["matches"] == true);
    }
  }

  TEST_CASE("verification verbs") {
    CHECK(run_json({"verify-tables", "--max-n", "60"})["consistent"] == true);
    CHECK(run_json({"verify-tables", "--max-n", "60", "--table", "3"})
              .contains("table1")
          == false);
    CHECK(run({"verify-tables", "--table", "4"}).code == 1);
    auto const n = run_json({"nonexistence", "--max-n", "51"});
    CHECK(n["cheban_witnesses"] == 0);
    CHECK(n["schroeder_witnesses"] == 0);
    auto const o = run_json({"orders", "--class", "quadratical", "--limit", "30"});
    CHECK(o["orders"] == nlohmann::json{5, 13, 17, 25, 29});
    CHECK(o["agrees"] == true);
    CHECK(run({"orders", "--class", "triangle"}).code == 1);
  }

  TEST_CASE("survey reports the quadratical Stein witness") {
    auto const r = run({"--json", "survey", "--pairs", "--max-n", "30"});
    CHECK(r.code == 2);
    CHECK(r.err.find("quadratical and stein") != std::string::npos);
    CHECK(r.err.find("(5,4)") != std::string::npos);
    auto const j = nlohmann::json::parse(r.out);
    CHECK(j["consistent"] == false);
    CHECK(j["pairs"].size() == 28);
  }

  TEST_CASE("qq") {
    auto const bad = run({"qq", "--n", "5", "--l", "2", "--r", "2"});
    CHECK(bad.code == 2);
    auto const r = run({"--json", "qq", "--n", "13"});
    auto const j = nlohmann::json::parse(r.out);
    CHECK(j["structures"].size() == 2);
    for (auto const& s : j["structures"]) {
      CHECK(s["round_trip"] == true);
      CHECK(s["axioms"]["symmetric"] == true);
      CHECK(s["rotation_identity"] == false);
    }
    CHECK(r.code == 2);
    CHECK(run({"qq"}).code == 1);
    CHECK(run({"qq", "--n", "5", "--l", "2"}).code == 1);
  }

  TEST_CASE("qq and check on a table file") {
    auto const path = temp_file("qg_cli_test_5.json", qg::table_to_json(qg::build(5, 2, 4)));
    auto const q    = run_json({"qq", "--from-table", path, "--s", "3"});
    CHECK(q["companion"]["companion"] == 3);
    CHECK(q["cyclic"].is_object());
    auto const c = run_json({"check", "--table", path});
    CHECK(c["classes"] == nlohmann::json{"quadratical", "right_modular"});
    CHECK(c["translatability"] == nlohmann::json{2});

    auto const csv = temp_file("qg_cli_test_8.csv", qg::table_to_csv(qg::build(8, 4, 5)));
    auto const e   = run_json({"check", "--table", csv});
    CHECK(e["quasigroup"] == false);
    CHECK(e["classes"].empty());
    CHECK(run({"qq", "--from-table", csv, "--s", "0"}).code == 1);
    CHECK(run({"check", "--table", "/nonexistent/table.json"}).code == 1);
    std::remove(path.c_str());
    std::remove(csv.c_str());
  }

  TEST_CASE("catalogue verb") {
    auto const j = run_json({"check"});
    CHECK(j["all_pass"] == true);
    CHECK(j["instances"].size() == 11);
  }

  TEST_CASE("human output") {
    auto const r = run({"classify", "--n", "13", "--a", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("classes: [quadratical, c3]") != std::string::npos);
    CHECK(r.out.find("k: 8") != std::string::npos);
  }
}
