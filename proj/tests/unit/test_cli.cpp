#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "freeimm/cli.hpp"
#include "freeimm/json_io.hpp"

using namespace freeimm;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const CommandRequest& req) {
  std::ostringstream out, err;
  const int code = run(req, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(FREEIMM_FIXTURE_DIR) + "/" + name + ".json"; }

}  // namespace

TEST(Cli, ReproT2) {
  CommandRequest req;
  req.subcommand = Subcommand::Repro;
  req.cases = {"t2"};
  const Result r = run_cli(req);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("D(pi) = -31/1"), std::string::npos) << r.out;
}

TEST(Cli, ReproUnknownCase) {
  CommandRequest req;
  req.subcommand = Subcommand::Repro;
  req.cases = {"t9"};
  EXPECT_EQ(run_cli(req).code, 2);
}

TEST(Cli, ReproMismatchIsVerdictFailure) {
  Json doc = load_json_argument(fixture("t2"));
  doc["published"]["D_at_pi"] = "31/1";
  CommandRequest req;
  req.subcommand = Subcommand::Repro;
  req.input = doc.dump();
  const Result r = run_cli(req);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, ReproWritesPerCaseJson) {
  const auto dir = std::filesystem::temp_directory_path() / "freeimm_cli_repro";
  std::filesystem::remove_all(dir);
  CommandRequest req;
  req.subcommand = Subcommand::Repro;
  req.cases = {"circle", "t2"};
  req.output_path = dir.string();
  EXPECT_EQ(run_cli(req).code, 0);
  EXPECT_TRUE(std::filesystem::exists(dir / "t2.json"));
  EXPECT_TRUE(std::filesystem::exists(dir / "circle.json"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, SturmRootCount) {
  CommandRequest req;
  req.subcommand = Subcommand::Sturm;
  req.input = R"(["-1","0","1"])";
  const Result r = run_cli(req);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("root count = 2"), std::string::npos);
  req.json = true;
  const Json j = Json::parse(run_cli(req).out);
  EXPECT_EQ(j.at("root_count"), 2);
  EXPECT_EQ(j.at("schema_version"), 1);
}

TEST(Cli, SturmEndpointRootIsComputationError) {
  CommandRequest req;
  req.subcommand = Subcommand::Sturm;
  req.input = R"(["-1","0","1"])";
  req.interval = "1,2";
  EXPECT_EQ(run_cli(req).code, 3);
  req.interval = "1;2";
  EXPECT_EQ(run_cli(req).code, 2);
}

TEST(Cli, Obstruct) {
  CommandRequest req;
  req.subcommand = Subcommand::Obstruct;
  req.m = 6;
  const Result r = run_cli(req);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("fails: floor(q_m/2)=13 < 15"), std::string::npos);
  for (int m = 2; m <= 5; ++m) {
    req.m = m;
    EXPECT_EQ(run_cli(req).code, 0) << m;
  }
  req.m = 3;
  req.weights = "[[1,0],[2,0],[3,0]]";
  EXPECT_EQ(run_cli(req).code, 1);
  req.weights = "[[1],[2]]";
  EXPECT_EQ(run_cli(req).code, 2);
}

TEST(Cli, VerifyOutputs) {
  CommandRequest req;
  req.subcommand = Subcommand::Verify;
  req.input = fixture("t2");
  req.json = true;
  const Result a = run_cli(req);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(Json::parse(a.out).at("verdict"), "FREE");
  EXPECT_EQ(a.out, run_cli(req).out);  // byte-stable
  req.input = R"({"k": 1, "weights": [[1],[2]], "fixed": true, "order": 2, "label": "flat",
                  "loop": ["2/1", "1/1", "0/1", "1/1", "0/1"]})";
  EXPECT_EQ(run_cli(req).code, 1);
  req.input = R"({"k": 1, "weights": [[1],[1]], "fixed": true, "order": 2, "loop": []})";
  const Result bad = run_cli(req);
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("weights pairwise distinct violated"), std::string::npos);
  req.input = "";
  EXPECT_EQ(run_cli(req).code, 2);
}

TEST(Cli, Collar) {
  CommandRequest req;
  req.subcommand = Subcommand::Collar;
  const Result r = run_cli(req);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("FREE_ON_COLLAR"), std::string::npos);
  req.input = R"({"a": ["1/1"], "c": ["0/1", "0/1", "-1/2"]})";
  EXPECT_EQ(run_cli(req).code, 1);
  req.input = R"({"a": ["0/1", "1/1"], "c": ["0/1", "0/1", "-1/2"]})";
  EXPECT_EQ(run_cli(req).code, 3);
}

TEST(Cli, SearchStream) {
  CommandRequest req;
  req.subcommand = Subcommand::Search;
  req.input = std::string(FREEIMM_FIXTURE_DIR) + "/search/t2_two_consts.json";
  const Result a = run_cli(req);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, run_cli(req).out);
  std::istringstream lines(a.out);
  std::string line;
  int n = 0;
  while (std::getline(lines, line)) {
    EXPECT_TRUE(Json::parse(line).contains("float_score"));
    ++n;
  }
  EXPECT_GE(n, 1);
}

TEST(Cli, ExitCodesAreExhaustive) {
  for (auto sub : {Subcommand::Verify, Subcommand::Repro, Subcommand::Search, Subcommand::Sturm, Subcommand::Collar,
                   Subcommand::Obstruct}) {
    for (const char* input : {"", "{}", "[]", "{broken", "/missing.json"}) {
      CommandRequest req;
      req.subcommand = sub;
      req.input = input;
      req.cases = {"circle"};
      const int code = run_cli(req).code;
      EXPECT_GE(code, 0);
      EXPECT_LE(code, 3);
    }
  }
}
