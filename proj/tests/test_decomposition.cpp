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

#include <algorithm>
#include <random>
#include <set>

#include "spreadlab/decomposition.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/families.hpp"

namespace spreadlab {
namespace {

std::vector<LabeledGraph> sample_graphs() {
  auto out = standard_fixtures();
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    int t = 2 * static_cast<int>(seed % 5);
    out.push_back(random_claw_free_cubic(t, (t == 0 ? 2 : 1) + static_cast<int>(seed % 4), seed));
  }
  return out;
}

void expect_partition_invariants(const Graph& g, const DeltaDPartition& p) {
  std::vector<int> seen(g.order(), 0);
  for (int i = 0; i < p.size(); ++i) {
    const Unit& u = p.unit(i);
    for (Vertex v : u.vertices) {
      ++seen[v];
      EXPECT_EQ(p.unit_of(v), i);
    }
    if (u.is_triangle()) {
      ASSERT_EQ(u.vertices.size(), 3);
      EXPECT_TRUE(u.dominating.empty());
      for (Vertex a : u.vertices)
        for (Vertex b : u.vertices)
          if (a < b) EXPECT_TRUE(g.adjacent(a, b));
    } else {
      ASSERT_EQ(u.vertices.size(), 4);
      ASSERT_EQ(u.dominating.size(), 2);
      auto ends = u.ends();
      ASSERT_EQ(ends.size(), 2);
      EXPECT_FALSE(g.adjacent(ends.front(), ends.back()));
      for (Vertex d : u.dominating)
        for (Vertex w : u.vertices)
          if (w != d) EXPECT_TRUE(g.adjacent(d, w));
    }
    if (i > 0) EXPECT_LT(p.unit(i - 1).vertices.front(), u.vertices.front());
  }
  for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ(seen[v], 1) << v;
  int crossing = 0;
  for (const auto& [a, b] : g.edges()) crossing += p.unit_of(a) != p.unit_of(b);
  EXPECT_EQ(static_cast<int>(p.unit_edges().size()), crossing);
  EXPECT_EQ(g.order(), 3 * p.triangle_count() + 4 * p.diamond_count());
}

TEST(PartitionTest, InvariantsOnFixturesAndRandomGraphs) {
  for (const auto& lg : sample_graphs()) {
    SCOPED_TRACE(lg.display_name());
    expect_partition_invariants(lg.graph, delta_d_partition(lg.graph));
  }
}

TEST(PartitionTest, UniqueUnderRelabeling) {
  std::mt19937_64 rng(5);
  for (const auto& lg : sample_graphs()) {
    const Graph& g = lg.graph;
    std::vector<Vertex> perm(g.order());
    for (int i = 0; i < g.order(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = relabel(g, perm);
    auto pg = delta_d_partition(g);
    auto ph = delta_d_partition(h);
    std::set<std::pair<UnitKind, std::vector<Vertex>>> mapped, direct;
    for (const auto& u : pg.units()) {
      std::vector<Vertex> vs;
      for (Vertex v : u.vertices) vs.push_back(perm[v]);
      std::sort(vs.begin(), vs.end());
      mapped.emplace(u.kind, vs);
    }
    for (const auto& u : ph.units()) direct.emplace(u.kind, u.vertices.members());
    EXPECT_EQ(mapped, direct) << lg.display_name();
  }
}

TEST(PartitionTest, BondsBetweenUnits) {
  auto f2 = triangle_necklace(1);
  auto p = delta_d_partition(f2.graph);
  ASSERT_EQ(p.size(), 2);
  EXPECT_EQ(p.bond_count(0, 1), 3);
  EXPECT_TRUE(p.double_bonded(0, 1));
  auto n3 = delta_d_partition(diamond_necklace(3).graph);
  EXPECT_EQ(n3.bond_count(0, 1), 1);
  EXPECT_EQ(n3.adjacent_units(0), (std::vector<int>{1, 2}));
}

TEST(ClassCheckTest, NamesFirstFailedRequirement) {
  auto message = [](const Graph& g) {
    try {
      require_claw_free_cubic(g);
    } catch (const GraphClassError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_EQ(message(Graph()), "graph is empty");
  EXPECT_EQ(message(Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                          {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}})),
            "graph is not connected");
  EXPECT_EQ(message(cycle_graph(5).graph), "graph is not cubic");
  // K_{3,3} is cubic and full of claws.
  Graph k33 = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  EXPECT_EQ(message(k33), "graph is not claw-free");
  EXPECT_EQ(message(complete_graph(4).graph), "K_4 has no triangle-diamond partition");
  EXPECT_NO_THROW(require_claw_free_cubic(complete_graph(4).graph, true));
  EXPECT_THROW(delta_d_partition(k33), GraphClassError);
}

TEST(ClassifyTest, RecognisesFamiliesUpToRelabeling) {
  std::mt19937_64 rng(9);
  auto shuffled = [&](const Graph& g) {
    std::vector<Vertex> perm(g.order());
    for (int i = 0; i < g.order(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(g, perm);
  };
  EXPECT_EQ(classify_family(shuffled(diamond_necklace(4).graph)).name(), "N_4");
  EXPECT_TRUE(classify_family(diamond_necklace(3).graph).is_diamond_necklace());
  EXPECT_EQ(classify_family(shuffled(triangle_necklace(3).graph)).name(), "F_6");
  EXPECT_EQ(classify_family(shuffled(triangle_diamond_necklace(2).graph)).name(), "H_4");
  EXPECT_EQ(classify_family(complete_graph(4).graph).name(), "K_4");
  EXPECT_EQ(classify_family(figure6_graph().graph).name(), "generic");
}

TEST(SpecialTriangleTest, RemovalLeavesAtMostTwoComponents) {
  for (const auto& lg : sample_graphs()) {
    auto p = delta_d_partition(lg.graph);
    if (p.triangle_count() == 0) {
      EXPECT_THROW(find_special_triangle_unit(lg.graph, p), GraphClassError);
      continue;
    }
    int t = find_special_triangle_unit(lg.graph, p);
    ASSERT_TRUE(p.unit(t).is_triangle());
    auto rest = delete_vertices(lg.graph, p.unit(t).vertices);
    EXPECT_LE(connected_components(rest.graph).size(), 2u) << lg.display_name();
  }
}

TEST(StartPairTest, ResolvesPartnerKinds) {
  auto f2 = triangle_necklace(1);
  auto p = delta_d_partition(f2.graph);
  auto sp = partner_unit_for_start(f2.graph, p, 0);
  EXPECT_EQ(sp.kind, PartnerKind::DoubleBond);
  EXPECT_EQ(sp.partner_unit, 1);
  EXPECT_NE(sp.t2, -1);

  auto f6 = triangle_necklace(3);
  auto p6 = delta_d_partition(f6.graph);
  auto s6 = partner_unit_for_start(f6.graph, p6, 0);
  EXPECT_EQ(s6.kind, PartnerKind::DoubleBond);

  auto h4 = triangle_diamond_necklace(2);
  auto ph = delta_d_partition(h4.graph);
  int t = find_special_triangle_unit(h4.graph, ph);
  auto sh = partner_unit_for_start(h4.graph, ph, t);
  EXPECT_TRUE(ph.unit(sh.start_unit).is_triangle());
  EXPECT_TRUE(ph.unit(sh.start_unit).vertices.contains(sh.t1));
  EXPECT_TRUE(ph.unit(sh.partner_unit).vertices.contains(sh.partner_seed));
}

TEST(StartPairTest, SeedsShareBondVertex) {
  for (const auto& lg : sample_graphs()) {
    auto p = delta_d_partition(lg.graph);
    if (p.triangle_count() == 0) continue;
    int t = find_special_triangle_unit(lg.graph, p);
    auto sp = partner_unit_for_start(lg.graph, p, t);
    SCOPED_TRACE(lg.display_name() + " " + to_string(sp.kind));
    EXPECT_EQ(sp.start_unit, t);
    EXPECT_TRUE(p.unit(sp.partner_unit).vertices.contains(sp.bond_vertex));
    if (sp.kind != PartnerKind::DoubleBond) {
      EXPECT_TRUE(lg.graph.adjacent(sp.t1, sp.bond_vertex));
      EXPECT_EQ(p.bond_count(sp.start_unit, sp.partner_unit), 1);
    } else {
      EXPECT_TRUE(p.double_bonded(sp.start_unit, sp.partner_unit));
    }
  }
}

}  // namespace
}  // namespace spreadlab
