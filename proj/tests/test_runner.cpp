#include <doctest.h>

#include <fstream>

#include "runner.hpp"

using namespace windmill;

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

RunResult run(const std::string& sub, std::map<std::string, std::string> opts) {
  RunConfig cfg;
  cfg.subcommand = sub;
  cfg.options = std::move(opts);
  return execute(cfg);
}

}  // namespace

TEST_CASE("axioms subcommand on a tree file") {
  write_file("tmp-tree.json", R"({ "tree": { "edges": [[0,1],[1,2],[2,3]] } })");
  auto res = run("axioms", {{"in", "tmp-tree.json"}});
  CHECK(res.exit_code == 0);
  CHECK(res.report.find("\"symmetry_ok\": true") != std::string::npos);
}

TEST_CASE("axioms subcommand flags violations with exit two") {
  write_file("tmp-bad.json", R"({
    "vertices": 3, "theta": "1",
    "entries": [[1,0,2,"5"],[2,0,1,"5"]]
  })");
  auto res = run("axioms", {{"in", "tmp-bad.json"}});
  CHECK(res.exit_code == 2);
}

TEST_CASE("missing input file is an input error") {
  auto res = run("axioms", {{"in", "does-not-exist.json"}});
  CHECK(res.exit_code == 1);
  CHECK(!res.error.empty());
}

TEST_CASE("axioms subcommand on a summed system") {
  write_file("tmp-sum.json", R"({
    "sum": {
      "systems": [ { "tree": { "edges": [[0,1],[1,2],[2,3]] } },
                   { "tree": { "edges": [[0,2],[2,1],[1,3]] } } ],
      "grouping": [[0,1],[0,1],[0,1],[0,1]]
    }
  })");
  auto res = run("axioms", {{"in", "tmp-sum.json"}});
  CHECK(res.exit_code == 0);
  CHECK(res.report.find("\"theta\": \"24\"") != std::string::npos);
}

TEST_CASE("constants subcommand reports the threshold") {
  write_file("tmp-tree2.json", R"({ "tree": { "edges": [[0,1],[1,2]] } })");
  auto res = run("constants", {{"in", "tmp-tree2.json"}, {"K", "1/2"}});
  CHECK(res.exit_code == 0);
  CHECK(res.report.find("spinning_threshold") != std::string::npos);
}

TEST_CASE("spin-check fails an unreachable level") {
  auto res = run("spin-check", {{"in", std::string(WINDMILL_INSTANCE_DIR) + "/f2-axes.json"}, {"L", "9999"}});
  CHECK(res.exit_code == 2);
}

TEST_CASE("spin-check passes at the automatic level") {
  auto res = run("spin-check", {{"in", std::string(WINDMILL_INSTANCE_DIR) + "/f2-axes.json"}, {"L", "auto"}});
  CHECK(res.exit_code == 0);
}

TEST_CASE("windmill subcommand summarizes levels") {
  auto res = run("windmill", {{"in", std::string(WINDMILL_INSTANCE_DIR) + "/z3z3.json"}, {"depth", "2"}});
  // orbit closures clip at the ball boundary, so the level data is flagged
  CHECK(res.exit_code == 3);
  CHECK(res.report.find("\"levels\"") != std::string::npos);
  CHECK(res.report.find("\"truncated\": true") != std::string::npos);
}

TEST_CASE("certify a generic table instance") {
  auto res = run("certify", {{"in", std::string(WINDMILL_INSTANCE_DIR) + "/tripod.json"}});
  CHECK(res.exit_code == 0);
  CHECK(res.report.find("\"pass\": true") != std::string::npos);
  CHECK(res.report.find("1 x Z/3") != std::string::npos);
}

TEST_CASE("identical configs give byte-identical reports") {
  std::map<std::string, std::string> opts{{"in", std::string(WINDMILL_INSTANCE_DIR) + "/z3z3.json"}};
  auto a = run("certify", opts);
  auto b = run("certify", opts);
  CHECK(a.exit_code == 0);
  CHECK(a.report == b.report);
}

TEST_CASE("thurston subcommands") {
  SUBCASE("classify") {
    auto res = run("thurston-classify", {{"word", "c d"}, {"n", "1"}});
    CHECK(res.exit_code == 0);
    CHECK(res.report.find("periodic") != std::string::npos);
  }
  SUBCASE("stretch rejects reducible words") {
    auto res = run("thurston-stretch", {{"word", "c"}, {"n", "1"}});
    CHECK(res.exit_code == 1);
  }
  SUBCASE("independence") {
    auto res = run("thurston-independence", {{"f1", "c d^-1"}, {"f2", "c d^-2"}, {"n", "1"}});
    CHECK(res.exit_code == 0);
    auto same = run("thurston-independence", {{"f1", "c d^-1"}, {"f2", "c d^-1"}, {"n", "1"}});
    CHECK(same.exit_code == 3);  // inconclusive, never a false certificate
  }
  SUBCASE("congruence") {
    auto res = run("thurston-congruence",
                   {{"p1", "5"}, {"p2", "7"}, {"genus", "2"}, {"m-range", "2..100"}});
    CHECK(res.exit_code == 0);
    CHECK(res.report.find("no proper level-m congruence subgroup") != std::string::npos);
  }
  SUBCASE("dihedral") {
    auto res = run("thurston-dihedral", {{"g-range", "3..5"}, {"n-range", "1..6"}});
    CHECK(res.exit_code == 0);
  }
  SUBCASE("partition") {
    auto res = run("thurston-partition", {{"in", std::string(WINDMILL_INSTANCE_DIR) + "/partitions-braid.json"}});
    CHECK(res.exit_code == 2);  // verified incompatibility
    CHECK(res.report.find("\"compatible\": false") != std::string::npos);
  }
}

TEST_CASE("unknown subcommand is an input error") {
  auto res = run("frobnicate", {});
  CHECK(res.exit_code == 1);
}
