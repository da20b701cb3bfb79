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

#include "oracles.hpp"
#include "spreadlab/decomposition.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/families.hpp"

namespace spreadlab {
namespace {

void expect_claw_free_cubic(const LabeledGraph& lg) {
  EXPECT_TRUE(is_cubic(lg.graph)) << lg.display_name();
  EXPECT_TRUE(is_connected(lg.graph)) << lg.display_name();
  EXPECT_TRUE(is_claw_free(lg.graph)) << lg.display_name();
}

TEST(NecklaceTest, DiamondNecklaceShape) {
  for (int k = 2; k <= 6; ++k) {
    auto lg = diamond_necklace(k);
    EXPECT_EQ(lg.graph.order(), 4 * k);
    EXPECT_EQ(lg.display_name(), "N_" + std::to_string(k));
    expect_claw_free_cubic(lg);
    EXPECT_EQ(unit_count(lg.graph), k);
    EXPECT_FALSE(lg.graph.adjacent(lg.at("a_1"), lg.at("b_1")));
    EXPECT_TRUE(lg.graph.adjacent(lg.at("a_1"), lg.at("b_2")));
    EXPECT_TRUE(lg.graph.adjacent(lg.at("a_" + std::to_string(k)), lg.at("b_1")));
  }
  EXPECT_THROW(diamond_necklace(1), InvalidArgument);
}

TEST(NecklaceTest, TriangleNecklaceShape) {
  for (int k = 1; k <= 4; ++k) {
    auto lg = triangle_necklace(k);
    EXPECT_EQ(lg.graph.order(), 6 * k);
    EXPECT_EQ(lg.display_name(), "F_" + std::to_string(2 * k));
    expect_claw_free_cubic(lg);
    EXPECT_EQ(unit_count(lg.graph), 2 * k);
    EXPECT_TRUE(lg.graph.adjacent(lg.at("x_1"), lg.at("x_2")));
    EXPECT_TRUE(lg.graph.adjacent(lg.at("y_1"), lg.at("y_2")));
  }
  auto f6 = triangle_necklace(3);
  EXPECT_TRUE(f6.graph.adjacent(f6.at("z_2"), f6.at("z_3")));
  EXPECT_TRUE(f6.graph.adjacent(f6.at("z_6"), f6.at("z_1")));
  EXPECT_THROW(triangle_necklace(0), InvalidArgument);
}

TEST(NecklaceTest, TriangleDiamondNecklaceShape) {
  for (int k = 2; k <= 4; ++k) {
    auto lg = triangle_diamond_necklace(k);
    EXPECT_EQ(lg.graph.order(), 10 * k);
    EXPECT_EQ(lg.display_name(), "H_" + std::to_string(2 * k));
    expect_claw_free_cubic(lg);
    auto p = delta_d_partition(lg.graph);
    EXPECT_EQ(p.triangle_count(), 2 * k);
    EXPECT_EQ(p.diamond_count(), k);
  }
  EXPECT_THROW(triangle_diamond_necklace(1), InvalidArgument);
}

TEST(FixtureTest, FigureSixGraph) {
  auto lg = figure6_graph();
  EXPECT_EQ(lg.graph.order(), 18);
  expect_claw_free_cubic(lg);
  auto p = delta_d_partition(lg.graph);
  EXPECT_EQ(p.triangle_count(), 2);
  EXPECT_EQ(p.diamond_count(), 3);
  auto marked = figure6_marked_set(lg);
  EXPECT_EQ(marked, lg.set_of({"c_1", "c_2", "c_3", "y_1", "z_2"}));
  for (int i = 1; i <= 3; ++i) {
    std::string s = std::to_string(i);
    EXPECT_EQ(p.unit_of(lg.at("a_" + s)), p.unit_of(lg.at("c_" + s)));
  }
}

TEST(FixtureTest, MarkedSetOnFourDiamondNecklace) {
  auto n4 = diamond_necklace(4);
  auto s = n4_marked_set(n4);
  EXPECT_EQ(s.size(), 5);
  EXPECT_TRUE(s.contains(n4.at("c_1")));
  EXPECT_TRUE(s.contains(n4.at("d_1")));
}

TEST(FixtureTest, StandardFixturesAreClawFreeCubic) {
  auto fx = standard_fixtures();
  EXPECT_EQ(fx.size(), 10u);
  for (const auto& lg : fx) {
    expect_claw_free_cubic(lg);
    EXPECT_TRUE(oracle::claw_free(lg.graph) || lg.graph.order() > 20) << lg.display_name();
    for (const auto& [name, v] : lg.labels) EXPECT_TRUE(lg.graph.has_vertex(v)) << name;
    EXPECT_EQ(static_cast<int>(lg.names_by_vertex().size()), lg.graph.order());
  }
}

TEST(SmallGraphTest, Basics) {
  EXPECT_EQ(complete_graph(5).graph.size(), 10);
  EXPECT_EQ(path_graph(5).graph.size(), 4);
  EXPECT_EQ(cycle_graph(6).graph.size(), 6);
  auto star = star_graph(3);
  EXPECT_EQ(star.graph.degree(0), 3);
}

TEST(RandomCubicTest, HitsRequestedUnitCounts) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int t = 2 * static_cast<int>(seed % 4);
    int d = (t == 0 ? 2 : 1) + static_cast<int>(seed % 3);
    auto lg = random_claw_free_cubic(t, d, seed);
    expect_claw_free_cubic(lg);
    auto p = delta_d_partition(lg.graph);
    EXPECT_EQ(p.triangle_count(), t);
    EXPECT_EQ(p.diamond_count(), d);
    EXPECT_EQ(lg.graph.order(), 3 * t + 4 * d);
  }
}

TEST(RandomCubicTest, DeterministicPerSeed) {
  EXPECT_EQ(random_claw_free_cubic(4, 2, 7).graph, random_claw_free_cubic(4, 2, 7).graph);
}

TEST(RandomCubicTest, RejectsInfeasibleRequests) {
  EXPECT_THROW(random_claw_free_cubic(3, 1, 0), InvalidArgument);
  EXPECT_THROW(random_claw_free_cubic(-2, 1, 0), InvalidArgument);
  EXPECT_THROW(random_claw_free_cubic(0, 1, 0), InvalidArgument);
}

TEST(LabelTest, UnknownNameThrows) {
  EXPECT_THROW(diamond_necklace(2).at("q_9"), InvalidArgument);
}

}  // namespace
}  // namespace spreadlab
