// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string Slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("submod_cli_" + std::string(::testing::UnitTest::GetInstance()
                                            ->current_test_info()
                                            ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  RunResult Run(const std::string& args) {
    const fs::path out = dir_ / "stdout.txt", err = dir_ / "stderr.txt";
    const std::string cmd = std::string(SUBMOD_CLI_PATH) + " " + args + " > " +
                            out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = Slurp(out);
    r.err = Slurp(err);
    return r;
  }

  std::string Out() const { return " --out " + dir_.string(); }

  json Manifest(const std::string& name) const {
    return json::parse(Slurp(dir_ / (name + ".manifest.json")));
  }

  fs::path dir_;
};

TEST_F(CliTest, DescribeListsSampleFormula) {
  const RunResult r = Run("describe learn");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("48n/ε ln(9n/(δε))"), std::string::npos) << r.out;
}

TEST_F(CliTest, DescribeGenMatroidNamesBaseTwoLog) {
  const RunResult r = Run("describe gen-matroid");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ceil(8 log2 k)"), std::string::npos);
}

TEST_F(CliTest, DescribeUnknownIsUsageError) {
  EXPECT_EQ(Run("describe bogus").code, 2);
}

TEST_F(CliTest, CheckMatroidOnPartition) {
  const fs::path inst = dir_ / "partition.json";
  std::ofstream(inst) << R"({"kind": "partition", "n": 6, "A": [[0, 1, 2], [3, 4, 5]], "b": [1, 2]})";
  const RunResult r = Run("check-matroid --instance " + inst.string() + Out());
  ASSERT_EQ(r.code, 0) << r.err;
  const json m = Manifest("check-matroid_seed1");
  EXPECT_EQ(m["verdicts"]["axioms"], true);
  EXPECT_EQ(m["verdicts"]["rank_oracle"], true);
  EXPECT_EQ(m["all_passed"], true);
}

TEST_F(CliTest, GenMatroidLargenessViolationExitsOne) {
  const RunResult r = Run(
      "gen-matroid --k 8 --n 12 --d 4 --b 1 --tau 2 --L 1 --epsilon 0.9 "
      "--marked all" + Out());
  EXPECT_EQ(r.code, 1);
  const json m = Manifest("gen-matroid_seed1");
  EXPECT_EQ(m["verdicts"]["largeness"], false);
  EXPECT_EQ(m["results"]["largeness"]["violating_set"].size(), 2u);
}

TEST_F(CliTest, GenMatroidWritesCheckableInstance) {
  ASSERT_EQ(Run("gen-matroid --k 3 --n 12 --d 3 --b 2 --tau 2 --L 1 --epsilon 0.9 "
                "--marked 0,2 --seed 5" + Out())
                .code,
            0);
  const RunResult r = Run("check-matroid --instance " +
                          (dir_ / "gen-matroid_seed5_instance.json").string() + Out());
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST_F(CliTest, LearnThenEvaluateReproducesCoverage) {
  ASSERT_EQ(Run("learn general --n 12 --test_size 2000 --seed 4" + Out()).code, 0);
  const json learned = Manifest("learn-general_seed4");
  const RunResult r = Run("evaluate --hypothesis " +
                          (dir_ / "learn-general_seed4_hypothesis.json").string() +
                          " --test_size 2000 --seed 4" + Out());
  ASSERT_EQ(r.code, 0) << r.err;
  const json evaluated = Manifest("evaluate_seed4");
  EXPECT_EQ(learned["results"]["coverage"].get<double>(),
            evaluated["results"]["coverage"].get<double>());
  EXPECT_EQ(learned["results"]["alpha"].get<double>(),
            evaluated["results"]["alpha"].get<double>());
}

TEST_F(CliTest, CsvBodiesAreByteIdentical) {
  ASSERT_EQ(Run("concentration --n 40 --trials 500 --seed 9" + Out()).code, 0);
  const std::string first = Slurp(dir_ / "concentration_seed9_values.csv");
  ASSERT_EQ(Run("concentration --n 40 --trials 500 --seed 9" + Out()).code, 0);
  EXPECT_EQ(first, Slurp(dir_ / "concentration_seed9_values.csv"));
  EXPECT_FALSE(first.empty());
}

TEST_F(CliTest, ManifestListsTablesWithRowCounts) {
  ASSERT_EQ(Run("concentration --n 20 --trials 300 --seed 2" + Out()).code, 0);
  const json m = Manifest("concentration_seed2");
  EXPECT_EQ(m["seed"], 2);
  ASSERT_EQ(m["tables"].size(), 1u);
  EXPECT_EQ(m["tables"][0]["rows"], 300);
  const std::string csv = Slurp(dir_ / m["tables"][0]["file"].get<std::string>());
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 301);
}

TEST_F(CliTest, UnknownConfigKeyIsNamed) {
  const fs::path cfg = dir_ / "cfg.json";
  std::ofstream(cfg) << R"({"n": 12, "bogus_key": 1})";
  const RunResult r = Run("learn general --config " + cfg.string() + Out());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("bogus_key"), std::string::npos);
}

TEST_F(CliTest, FlagsOverrideConfig) {
  const fs::path cfg = dir_ / "cfg.json";
  std::ofstream(cfg) << R"({"n": 12, "trials": 100, "seed": 3})";
  ASSERT_EQ(Run("concentration --config " + cfg.string() + " --trials 50" + Out()).code, 0);
  const json m = Manifest("concentration_seed3");
  EXPECT_EQ(m["params"]["trials"], 50);
  EXPECT_EQ(m["params"]["n"], 12);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Run("learn general --n abc" + Out()).code, 2);
  EXPECT_EQ(Run("learn --n 12" + Out()).code, 2);
  EXPECT_EQ(Run("learn general --target nothing --n 12" + Out()).code, 2);
  EXPECT_EQ(Run("hardness stcut --n 25 --d 4" + Out()).code, 2);
  EXPECT_EQ(Run("frobnicate").code, 2);
  EXPECT_EQ(Run("learn general --seed -1" + Out()).code, 2);
}

TEST_F(CliTest, HardnessModes) {
  for (const char* mode : {"sfmcc", "stcut", "vertexcover"}) {
    const RunResult r = Run(std::string("hardness ") + mode + Out());
    EXPECT_EQ(r.code, 0) << mode << ": " << r.err;
    const json m = Manifest(std::string("hardness-") + mode + "_seed1");
    EXPECT_EQ(m["verdicts"]["dichotomy"], true) << mode;
  }
}

TEST_F(CliTest, GenExpanderSuccessRate) {
  const RunResult r = Run("gen-expander --trials 100" + Out());
  EXPECT_EQ(r.code, 0) << r.err;
  const json m = Manifest("gen-expander_seed1");
  EXPECT_EQ(m["results"]["success_rate"]["trials"], 100);
  EXPECT_TRUE(fs::exists(dir_ / "gen-expander_seed1_graph.json"));
}

}  // namespace
