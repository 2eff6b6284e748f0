#include <unistd.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "whm/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = whm::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string ex1 = WHM_DATA_DIR "/example1.json";
const std::string ex2 = WHM_DATA_DIR "/example2.json";

struct TempDir {
  std::filesystem::path path;
  TempDir() : path(std::filesystem::temp_directory_path() / ("whm_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("bounds") {
  auto r = run({"bounds", "--q", "2", "--blocks", "7:1,7:2", "--d", "1..21", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 22);
  CHECK(rows[0] == "d,singleton,hamming,gv,plotkin,lp");
  CHECK(rows[5] == "5,10,8,6,,8");
  CHECK(rows[12] == "12,5,4,1,3,3");

  r = run({"bounds", "--q", "7", "--blocks", "7:1,7:2", "--d", "5", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 1);
  CHECK(j[0]["hamming_k"] == 10);
}

TEST_CASE("ball") {
  CHECK(run({"ball", "--q", "2", "--blocks", "7:1,7:2", "--radius", "2"}).out == "36\n");
  CHECK(run({"ball", "--q", "2", "--blocks", "7:1,7:2", "--radius", "2", "--per-sphere"}).out == "0,1\n1,7\n2,28\n");
}

TEST_CASE("code analysis") {
  CHECK(run({"min-distance", "--code", ex1}).out == "5\n");
  CHECK(run({"min-distance", "--code", ex1, "--method", "support-enum"}).out == "5\n");
  CHECK(run({"min-distance", "--code", ex2, "--method", "codebook"}).out == "7\n");
  CHECK(run({"tau", "--code", ex1}).out == "2\n");
  CHECK(run({"tau", "--code", ex2, "--oracle"}).out == "6\n");
  CHECK(run({"enumerator", "--code", ex1}).out == "w1,w2,count\n0,0,1\n1,3,4\n2,2,6\n3,1,4\n4,4,1\n");
  CHECK(run({"coverage", "--code", ex1, "--rho", "0.125,0.02", "--threshold", "0.011"}).out == "true\n");
  CHECK(run({"coverage", "--code", ex1, "--rho", "0.125,0.02", "--threshold", "0.001"}).out.rfind("false\n", 0) == 0);
  const auto s = nlohmann::json::parse(run({"scalings", "--q", "2", "--rho", "0.125,0.02"}).out);
  CHECK(s["integer_weights"] == std::vector<int>{1, 2});
}

TEST_CASE("dual writes a code file") {
  TempDir tmp;
  const auto path = (tmp.path / "dual.json").string();
  auto r = run({"dual", "--code", ex2, "--code-out", path});
  CHECK(r.code == 0);
  CHECK(r.out == "w1,w2,count\n0,0,1\n1,0,4\n2,0,6\n3,0,4\n4,0,1\n");
  CHECK(run({"min-distance", "--code", path}).out == "2\n");
}

TEST_CASE("construct round trip") {
  TempDir tmp;
  const auto path = (tmp.path / "c.json").string();
  CHECK(run({"construct", "--family", "binary", "--q", "2", "--n1", "7", "--n2", "7", "--out", path}).code == 0);
  CHECK(run({"min-distance", "--code", path}).out == "5\n");
  CHECK(run({"tau", "--code", path}).out == "2\n");
  // codeword (0 | 1110000) plus an error in position 0
  CHECK(run({"decode", "--code", path, "--received", "1,0,0,0,0,0,0,1,1,1,0,0,0,0"}).out ==
        "0,0,0,0,0,0,0,1,1,1,0,0,0,0\n");
  CHECK(run({"decode", "--code", path, "--received", "1,1,1,1,1,1,1,1,1,1,1,1,1,1"}).code == 0);

  const auto mds = (tmp.path / "m.json").string();
  CHECK(run({"construct", "--family", "mds", "--q", "7", "--n1", "7", "--n2", "7", "--out", mds}).code == 0);
  CHECK(run({"min-distance", "--code", mds, "--method", "support-enum"}).out == "5\n");
  CHECK(run({"decode", "--code", mds, "--received", "0,0,0,0,0,0,0,0,0,0,0,0,0,3"}).out ==
        "0,0,0,0,0,0,0,0,0,0,0,0,0,0\n");

  // plain code file: falls back to minimum-distance decoding
  CHECK(run({"decode", "--code", ex1, "--received", "1,0,0,0,0,1,1,0"}).out == "1,0,0,0,0,1,1,1\n");
}

TEST_CASE("simulate and gv experiment") {
  auto r = run({"simulate", "--code", ex1, "--rho", "0.125,0.02", "--decoder", "wh-int", "--trials", "500",
                "--seed", "3", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["trials"] == 500);
  CHECK(j["seed"] == 3);
  CHECK(j["per_block_symbol_error_rate"].size() == 2);
  CHECK(run({"simulate", "--code", ex1, "--rho", "0.125,0.02", "--decoder", "wh-int", "--trials", "500",
             "--seed", "3", "--format", "json"})
            .out == r.out);
  r = run({"simulate", "--code", ex1, "--rho", "0.125,0.02", "--decoder", "ml", "--trials", "10", "--format", "text"});
  CHECK(r.out.rfind("trials=10\n", 0) == 0);

  r = run({"gv-experiment", "--q", "2", "--blocks", "7:1,7:2", "--k", "1", "--d", "1", "--trials", "5"});
  CHECK(nlohmann::json::parse(r.out)["success_fraction"] == 1.0);
}

TEST_CASE("figure1 and --out") {
  TempDir tmp;
  CHECK(run({"figure1", "--out-dir", tmp.path.string()}).code == 0);
  CHECK(slurp(tmp.path / "fig1a_q2.csv") == slurp(WHM_FIXTURE_DIR "/fig1a_q2.csv"));
  CHECK(slurp(tmp.path / "fig1b_q7.csv") == slurp(WHM_FIXTURE_DIR "/fig1b_q7.csv"));
  const auto out = (tmp.path / "ball.txt").string();
  const auto r = run({"--out", out, "ball", "--q", "2", "--blocks", "7:1,7:2", "--radius", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(out) == "323\n");
}

TEST_CASE("error paths") {
  struct Case {
    std::vector<std::string> args;
    int code;
    std::string name;
  };
  TempDir tmp;
  const auto garbage = (tmp.path / "g.json").string();
  std::ofstream(garbage) << "{\"q\": 2";
  const std::vector<Case> cases = {
      {{}, 2, "UsageError"},
      {{"frobnicate"}, 2, "UsageError"},
      {{"ball", "--q", "2", "--blocks", "7:1,7:2"}, 2, "UsageError"},
      {{"ball", "--q", "2", "--blocks", "7:1,7:2", "--radius", "2", "--bogus"}, 2, "UsageError"},
      {{"ball", "--q", "2", "--blocks", "7-1", "--radius", "2"}, 2, "MalformedInput"},
      {{"bounds", "--q", "2", "--blocks", "7:1,7:2", "--d", "x..3"}, 2, "UsageError"},
      {{"min-distance", "--code", garbage}, 2, "MalformedInput"},
      {{"min-distance", "--code", "/nonexistent.json"}, 2, "MalformedInput"},
      {{"ball", "--q", "6", "--blocks", "7:1", "--radius", "2"}, 1, "CompositeModulus"},
      {{"bounds", "--q", "2", "--blocks", "7:1,7:2", "--d", "0..3"}, 1, "InvalidDistance"},
      {{"construct", "--family", "mds", "--q", "7", "--n1", "4", "--n2", "7"}, 1, "InvalidParameter"},
      {{"construct", "--family", "binary", "--q", "2", "--n1", "9", "--n2", "7"}, 0, ""},
      {{"coverage", "--code", ex1, "--rho", "0.6,0.02", "--threshold", "0.1"}, 1, "InvalidCrossover"},
      {{"simulate", "--code", ex1, "--rho", "0.1", "--trials", "3"}, 1, "LengthMismatch"},
      {{"decode", "--code", ex1, "--received", "1,0,1"}, 1, "LengthMismatch"},
      {{"decode", "--code", ex1, "--received", "1,0,1,0,0,0,0,5"}, 2, "UsageError"},
      {{"scalings", "--q", "2", "--rho", "0.5"}, 1, "InvalidCrossover"},
  };
  for (const auto& c : cases) {
    CAPTURE(c.args);
    const auto r = run(c.args);
    CHECK(r.code == c.code);
    if (c.code == 0) continue;
    CHECK(r.out.empty());
    CHECK(r.err.rfind(c.name + ": ", 0) == 0);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  }
}
