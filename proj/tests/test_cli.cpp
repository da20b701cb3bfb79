// Copyright 2026 The spreadlab Authors
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

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"

namespace spreadlab::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "spreadlab");
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string tmp_path(const std::string& name) {
  return (std::filesystem::path(SPREADLAB_TEST_TMP) / name).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(CliTest, GenerateWritesEdgeListAndSidecar) {
  const auto path = tmp_path("n4.edges");
  auto r = run_cli({"generate", "--family", "N", "--k", "4", "-o", path});
  ASSERT_EQ(r.code, 0) << r.err;
  auto meta = nlohmann::json::parse(slurp(path + ".json"));
  EXPECT_EQ(meta["n"], 16);
  EXPECT_EQ(meta["name"], "N_4");
  EXPECT_EQ(meta["labels"]["a_1"], 0);
  EXPECT_FALSE(slurp(path).empty());
}

TEST(CliTest, SolvePrintsSigma) {
  const auto path = tmp_path("n4_solve.edges");
  ASSERT_EQ(run_cli({"generate", "--family", "N", "--k", "4", "-o", path}).code, 0);
  auto r = run_cli({"solve", "--graph", path, "--p", "2", "--q", "inf"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("sigma=5\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("witness={"), std::string::npos);
}

TEST(CliTest, SolveJsonHasSchema) {
  auto r = run_cli({"solve", "--family", "fig6", "--p", "2", "--q", "3", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["graph"]["n"], 18);
  EXPECT_EQ(j["query"]["q"], 3);
  EXPECT_FALSE(j.contains("seconds"));
}

TEST(CliTest, VerifyRandomIsConsistentAndDeterministic) {
  std::vector<std::string> args{"verify", "--family", "random", "--triangles", "4", "--diamonds",
                                "2", "--seed", "7", "--cells", "2,2", "--json", "-", "--threads", "2"};
  auto a = run_cli(args);
  auto b = run_cli(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["violations"], 0);
  EXPECT_EQ(j["instances"][0]["cells"][0]["verdict"], "consistent");
}

TEST(CliTest, SimulateReportsVerdict) {
  auto r = run_cli({"simulate", "--family", "N", "--k", "2", "--p", "2", "--infinity", "--blue", "0,1,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("verdict:"), std::string::npos);
}

TEST(CliTest, AnalyzeAndConstruct) {
  auto a = run_cli({"analyze", "--family", "H", "--k", "2"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_NE(a.out.find("family: H_4"), std::string::npos);
  EXPECT_NE(a.out.find("u=6"), std::string::npos);
  auto c = run_cli({"construct", "--family", "F", "--k", "3", "--method", "s22"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find("validated=yes"), std::string::npos);
  auto d = run_cli({"construct", "--family", "F", "--k", "3", "--method", "perc2", "--dot"});
  EXPECT_NE(d.out.find("graph G {"), std::string::npos);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"bogus"}).code, 2);
  EXPECT_EQ(run_cli({"solve", "--family", "N", "--k", "3"}).code, 2);  // missing --p
  EXPECT_EQ(run_cli({"solve", "--family", "N", "--k", "3", "--p", "2", "--q", "zero"}).code, 1);
  EXPECT_EQ(run_cli({"construct", "--family", "N", "--k", "3", "--method", "nope"}).code, 2);

  const auto bad = tmp_path("bad.edges");
  std::ofstream(bad) << "0 1\n1 x\n";
  auto r = run_cli({"analyze", "--graph", bad});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);

  const auto c5 = tmp_path("c5.edges");
  std::ofstream(c5) << "0 1\n1 2\n2 3\n3 4\n4 0\n";
  EXPECT_EQ(run_cli({"construct", "--graph", c5, "--method", "perc2"}).code, 1);
  EXPECT_EQ(run_cli({"generate", "--family", "random", "--triangles", "3", "--diamonds", "1"}).code, 1);
}

}  // namespace
}  // namespace spreadlab::cli
