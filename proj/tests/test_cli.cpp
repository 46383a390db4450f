#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Invocation {
  int code;
  json summary;
};

class CliTest : public testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("ppcolor_cli_" + std::string(testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  Invocation call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = ppc::cli::run_cli(args, out, err);
    json summary;
    if (!out.str().empty() && out.str().front() == '{') summary = json::parse(out.str());
    return {code, summary};
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, PlaneGenThenValidate) {
  EXPECT_EQ(call({"plane", "gen", "--q", "3", "-o", path("p.json")}).code, 0);
  const auto v = call({"plane", "validate", path("p.json")});
  EXPECT_EQ(v.code, 0);
  EXPECT_TRUE(v.summary["pass"].get<bool>());
}

TEST_F(CliTest, InvalidPlaneIsDomainFailure) {
  std::ofstream(path("bad.json")) << R"({"order": 2, "points": ["a","b","c"], "lines": [[0,1],[1,2]]})";
  EXPECT_EQ(call({"plane", "validate", path("bad.json")}).code, 1);
  EXPECT_EQ(call({"solve", "full", "--plane", path("bad.json"), "--colors", "4"}).code, 1);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"plane", "gen", "--q", "6", "-o", path("p.json")}).code, 2);
  EXPECT_EQ(call({"plane", "gen", "-o", path("p.json")}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"plane", "validate", path("missing.json")}).code, 2);
  std::ofstream(path("junk.json")) << "not json";
  EXPECT_EQ(call({"plane", "validate", path("junk.json")}).code, 2);
}

TEST_F(CliTest, OneColorExhausts) {
  call({"plane", "gen", "--q", "3", "-o", path("p.json")});
  const auto r =
      call({"solve", "full", "--plane", path("p.json"), "--colors", "1", "--seed", "7", "--max-steps", "20000"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.summary["status"], "Exhausted");
  EXPECT_EQ(r.summary["seed"], 7);
  EXPECT_EQ(r.summary["steps"], 20000);
}

TEST_F(CliTest, SolveDecodeRoundTrip) {
  call({"plane", "gen", "--q", "3", "-o", path("p.json")});
  for (const char* d : {"42", "4"}) {
    const auto s = call({"solve", "full", "--plane", path("p.json"), "--colors", d, "--seed", "7", "--register",
                         path("r.jsonl"), "-o", path("c.json")});
    ASSERT_EQ(s.code, 0) << d;
    EXPECT_EQ(s.summary["status"], "Success");
    EXPECT_TRUE(s.summary["verified"].get<bool>());
    for (const char* key : {"steps", "violations", "wall_time_s", "seed"}) EXPECT_TRUE(s.summary.contains(key));
    EXPECT_EQ(call({"color", "verify", "--plane", path("p.json"), "--coloring", path("c.json")}).code, 0);
    const auto dec =
        call({"decode", "--register", path("r.jsonl"), "--final", path("c.json"), "--plane", path("p.json")});
    EXPECT_EQ(dec.code, 0);
    EXPECT_TRUE(dec.summary["round_trip"].get<bool>());
    EXPECT_EQ(dec.summary["steps"], s.summary["steps"]);
  }
}

TEST_F(CliTest, DecodeRejectsTamperedRegister) {
  call({"plane", "gen", "--q", "3", "-o", path("p.json")});
  call({"solve", "full", "--plane", path("p.json"), "--colors", "4", "--seed", "3", "--register", path("r.jsonl"), "-o",
        path("c.json")});
  std::string reg = slurp(path("r.jsonl"));
  const auto at = reg.find("\"gamma\": ");
  ASSERT_NE(at, std::string::npos);
  reg.replace(at, 10, "\"gamma\": 99");
  std::ofstream(path("r.jsonl"), std::ios::binary) << reg;
  const auto dec =
      call({"decode", "--register", path("r.jsonl"), "--final", path("c.json"), "--plane", path("p.json")});
  EXPECT_EQ(dec.code, 1);
  EXPECT_EQ(dec.summary["status"], "DecodeError");
}

TEST_F(CliTest, ByteIdenticalOutputs) {
  call({"plane", "gen", "--q", "4", "-o", path("p.json")});
  for (const char* tag : {"a", "b"}) {
    call({"solve", "full", "--plane", path("p.json"), "--colors", "6", "--seed", "12", "--register",
          path(std::string("r_") + tag + ".jsonl"), "-o", path(std::string("c_") + tag + ".json")});
    call({"region", "--d-min", "8", "--d-max", "12", "-o", path(std::string("region_") + tag + ".csv")});
    call({"color", "sample", "--plane", path("p.json"), "--colors", "3", "--seed", "5", "-o",
          path(std::string("s_") + tag + ".json"), "--s-out", path(std::string("S_") + tag + ".json")});
  }
  for (const char* base : {"r_", "c_", "region_", "s_", "S_"}) {
    const std::string ext = std::string(base) == "r_" ? ".jsonl" : (std::string(base) == "region_" ? ".csv" : ".json");
    EXPECT_EQ(slurp(path(base + std::string("a") + ext)), slurp(path(base + std::string("b") + ext))) << base;
  }
  EXPECT_EQ(slurp(path("region_a.svg")), slurp(path("region_b.svg")));
  EXPECT_FALSE(slurp(path("region_a.svg")).empty());
}

TEST_F(CliTest, BoundsSummary) {
  const auto r = call({"bounds", "--a", "1", "--b", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.summary["m_opt"], 3);
  EXPECT_EQ(r.summary["colors"], 6);
  EXPECT_NEAR(r.summary["value"].get<double>(), 5.4514, 1e-3);
  EXPECT_NEAR(r.summary["tau"].get<double>(), std::pow(2.0, -1.0 / 3), 1e-10);
  EXPECT_TRUE(r.summary.contains("gamma"));
}

TEST_F(CliTest, RegionCsv) {
  const auto r = call({"region", "--d-min", "7", "--d-max", "9", "--tol", "0.05", "-o", path("region.csv")});
  EXPECT_EQ(r.code, 0);
  const std::string csv = slurp(path("region.csv"));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "d,a,b,m,log10_n_min");
  EXPECT_TRUE(fs::exists(path("region.svg")));
}

TEST_F(CliTest, ExtendAtSmallOrderRecommendsFullMode) {
  call({"plane", "gen", "--q", "5", "-o", path("p.json")});
  const auto s = call({"color", "sample", "--plane", path("p.json"), "--colors", "6", "--seed", "1", "-o",
                       path("partial.json"), "--s-out", path("s.json")});
  ASSERT_EQ(s.code, 0);
  EXPECT_TRUE(s.summary.contains("recommendation"));
  const auto e = call({"solve", "extend", "--plane", path("p.json"), "--s", path("s.json"), "--partial",
                       path("partial.json"), "--seed", "1"});
  EXPECT_EQ(e.code, 1);
  EXPECT_EQ(e.summary["status"], "Infeasible");
  EXPECT_TRUE(e.summary.contains("recommendation"));
}

TEST_F(CliTest, ExtendWithLooseCapsSolvesAndDecodes) {
  call({"plane", "gen", "--q", "3", "-o", path("p.json")});
  // With S = every point the extension is the full problem; caps a = 12, b = 4 hold trivially.
  std::ofstream(path("s.json")) << R"({"members": [0,1,2,3,4,5,6,7,8,9,10,11,12]})";
  std::ofstream(path("partial.json"))
      << R"({"d": 5, "assignment": [null,null,null,null,null,null,null,null,null,null,null,null,null]})";
  const std::vector<std::string> common{
      "--plane", path("p.json"), "--s", path("s.json"), "--partial", path("partial.json"), "--a", "12", "--b", "4"};
  std::vector<std::string> solve{"solve", "extend", "--seed", "2", "--register", path("r.jsonl"), "-o", path("c.json")};
  solve.insert(solve.end(), common.begin(), common.end());
  const auto r = call(solve);
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.summary["verified"].get<bool>());
  std::vector<std::string> dec{"decode", "--mode", "extend", "--register", path("r.jsonl"), "--final", path("c.json")};
  dec.insert(dec.end(), common.begin(), common.end());
  EXPECT_EQ(call(dec).code, 0);
}

TEST_F(CliTest, MultipleRunsReportStepsPerSuccess) {
  call({"plane", "gen", "--q", "2", "-o", path("p.json")});
  const auto r = call({"solve", "full", "--plane", path("p.json"), "--colors", "4", "--runs", "5", "--seed", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.summary["runs"].size(), 5u);
  EXPECT_EQ(r.summary["successes"], 5);
  EXPECT_TRUE(r.summary["steps_per_success"].is_number());
}

TEST_F(CliTest, SolveWithoutOutputWritesNothing) {
  call({"plane", "gen", "--q", "2", "-o", path("p.json")});
  const auto cwd = fs::current_path();
  fs::current_path(dir_);
  const auto r = call({"solve", "full", "--plane", "p.json", "--colors", "5", "--seed", "1"});
  fs::current_path(cwd);
  EXPECT_EQ(r.code, 0);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& entry : fs::directory_iterator(dir_)) ++files;
  EXPECT_EQ(files, 1u);
}
