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

#include "spreadlab/decomposition.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/families.hpp"
#include "spreadlab/solvers.hpp"
#include "spreadlab/theory.hpp"

namespace spreadlab {
namespace {

TEST(PredictionTest, AdmitsAndPrints) {
  Prediction exact{PredictionKind::Exact, 5, 0, "x"};
  EXPECT_TRUE(exact.admits(5));
  EXPECT_FALSE(exact.admits(6));
  EXPECT_EQ(exact.to_string(), "5");
  Prediction two{PredictionKind::TwoValues, 5, 6, "x"};
  EXPECT_TRUE(two.admits(6));
  EXPECT_FALSE(two.admits(7));
  EXPECT_EQ(two.to_string(), "{5,6}");
  Prediction up{PredictionKind::UpperBound, 7, 0, "x"};
  EXPECT_TRUE(up.admits(3));
  EXPECT_FALSE(up.admits(8));
  EXPECT_EQ(up.to_string(), "<=7");
}

TEST(PredictionTest, StandardTableOnNecklace) {
  Graph g = diamond_necklace(4).graph;  // n = 16, u = 4, beta = 10
  auto at = [&](SpreadParams p) { return predict(g, p); };
  EXPECT_EQ(at(SpreadParams(1, 2)).to_string(), "2");
  EXPECT_EQ(at(SpreadParams(1, 3)).to_string(), "1");
  EXPECT_EQ(at(SpreadParams(2, 1)).to_string(), "{5,6}");
  EXPECT_EQ(at(SpreadParams(2, 2)).to_string(), "{4,5}");
  EXPECT_EQ(at(SpreadParams(2, WhiteLimit::infinity())).to_string(), "5");
  EXPECT_EQ(at(SpreadParams(3, 1)).to_string(), "{10,11}");
  EXPECT_EQ(at(SpreadParams(3, 2)).to_string(), "10");
  EXPECT_EQ(at(SpreadParams(4, 1)).to_string(), "16");
  EXPECT_EQ(at(SpreadParams(1, 1)).kind, PredictionKind::UpperBound);
}

TEST(PredictionTest, PureAndIndependentOfLargeWhiteLimit) {
  for (const auto& lg : standard_fixtures()) {
    for (int p = 1; p <= 4; ++p) {
      auto base = predict(lg.graph, SpreadParams(p, WhiteLimit::infinity()));
      for (int q = 3; q <= 6; ++q) {
        auto other = predict(lg.graph, SpreadParams(p, q));
        EXPECT_EQ(other.to_string(), base.to_string()) << lg.display_name() << " p=" << p;
        EXPECT_EQ(other.kind, base.kind);
      }
      EXPECT_EQ(predict(lg.graph, SpreadParams(p, 2)).to_string(),
                predict(lg.graph, SpreadParams(p, 2)).to_string());
    }
  }
}

TEST(PredictionTest, RejectsGraphsOutsideTheClass) {
  EXPECT_THROW(predict(cycle_graph(5).graph, SpreadParams(2, 2)), GraphClassError);
  EXPECT_NO_THROW(predict(complete_graph(4).graph, SpreadParams(2, 2)));
}

TEST(VerifyTest, FixturesAreConsistentOnEveryCell) {
  std::vector<SurveyInstance> instances;
  for (const auto& lg : standard_fixtures()) instances.push_back({lg.display_name(), lg.display_name(), lg.graph});
  instances.push_back({"K4", "K4", complete_graph(4).graph});
  auto cells = standard_cells();
  cells.push_back(SpreadParams(1, 1));
  auto report = survey(instances, cells, {}, 2);
  EXPECT_EQ(report.violations(), 0);
  ASSERT_EQ(report.instances.size(), instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    EXPECT_EQ(report.instances[i].id, instances[i].id);
    ASSERT_EQ(report.instances[i].cells.size(), cells.size());
    for (const auto& cell : report.instances[i].cells) {
      EXPECT_EQ(cell.verdict, Verdict::Consistent) << instances[i].name << " " << cell.params.to_string();
      if (cell.prediction.kind == PredictionKind::TwoValues) {
        EXPECT_TRUE(cell.attained == "low" || cell.attained == "high");
      }
    }
  }
}

TEST(VerifyTest, SurveyIsThreadCountIndependent) {
  std::vector<SurveyInstance> instances;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    instances.push_back({std::to_string(seed), "r", random_claw_free_cubic(4, 1, seed).graph});
  }
  auto cells = parse_cells("2,1;2,2;3,1");
  auto one = survey(instances, cells, {}, 1);
  auto many = survey(instances, cells, {}, 4);
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      EXPECT_EQ(one.instances[i].cells[c].value, many.instances[i].cells[c].value);
      EXPECT_EQ(one.instances[i].cells[c].witness, many.instances[i].cells[c].witness);
    }
  }
  EXPECT_EQ(one.stats.size(), 3u);
}

TEST(VerifyTest, ExhaustedBudgetIsSkipped) {
  SolveOptions o;
  o.node_budget = 1;
  auto r = verify(triangle_diamond_necklace(3).graph, SpreadParams(2, 1), o);
  EXPECT_EQ(r.verdict, Verdict::Skipped);
  EXPECT_FALSE(r.value.has_value());
}

TEST(CellsTest, Parsing) {
  auto cells = parse_cells("2,2;2,inf 3,1");
  ASSERT_EQ(cells.size(), 3u);
  EXPECT_EQ(cells[1], SpreadParams(2, WhiteLimit::infinity()));
  EXPECT_EQ(standard_cells().size(), 9u);
  EXPECT_THROW(parse_cells("2"), InvalidArgument);
  EXPECT_THROW(parse_cells("0,1"), InvalidArgument);
}

}  // namespace
}  // namespace spreadlab
