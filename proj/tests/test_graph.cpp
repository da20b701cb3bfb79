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

#include "oracles.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/families.hpp"
#include "spreadlab/graph.hpp"

namespace spreadlab {
namespace {

Graph random_graph(int n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

TEST(VertexSetTest, KeepsMembersSortedAndUnique) {
  VertexSet s{5, 1, 3, 1};
  EXPECT_EQ(s.members(), (std::vector<Vertex>{1, 3, 5}));
  s.insert(2);
  s.erase(5);
  EXPECT_EQ(s.to_string(), "{1, 2, 3}");
  EXPECT_TRUE(VertexSet({1, 3}).is_subset_of(s));
  EXPECT_EQ(s.set_difference({2}), VertexSet({1, 3}));
  EXPECT_EQ(s.set_union({7}), VertexSet({1, 2, 3, 7}));
  EXPECT_EQ(s.set_intersection({3, 4}), VertexSet({3}));
}

TEST(GraphTest, RejectsMalformedEdges) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), InvalidArgument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), InvalidArgument);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), InvalidArgument);
}

TEST(GraphTest, AdjacencyQueries) {
  Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 3);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.max_degree(), 2);
  EXPECT_THROW(g.check({4}), InvalidArgument);
}

TEST(ParseTest, ReadsCommentsAndBlankLines) {
  Graph g = parse_edge_list("# a path\n0 1\n\n1 2   # trailing\n");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(ParseTest, OrderDirectiveKeepsIsolatedVertices) {
  Graph g = parse_edge_list("# order: 5\n0 1\n");
  EXPECT_EQ(g.order(), 5);
}

TEST(ParseTest, ReportsLineNumbers) {
  auto line_of = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("0 1\n1 x\n"), 2);
  EXPECT_EQ(line_of("0 1\n\n2 2\n"), 3);
  EXPECT_EQ(line_of("0 1\n1 0\n"), 2);
  EXPECT_EQ(line_of("0 1 2\n"), 1);
  EXPECT_EQ(line_of("-1 2\n"), 1);
}

TEST(ParseTest, RoundTripsEveryFixture) {
  for (const auto& lg : standard_fixtures()) {
    EXPECT_EQ(parse_edge_list(to_edge_list(lg.graph)), lg.graph) << lg.display_name();
  }
}

TEST(PredicateTest, ClawDetectionMatchesSubsetOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 4 + trial % 9;
    Graph g = random_graph(n, 0.3 + 0.05 * (trial % 8), rng);
    EXPECT_EQ(is_claw_free(g), oracle::claw_free(g)) << to_edge_list(g);
  }
  EXPECT_FALSE(is_claw_free(star_graph(3).graph));
  EXPECT_TRUE(is_claw_free(complete_graph(4).graph));
}

TEST(PredicateTest, TrianglesMatchSubsetOracle) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(4 + trial % 8, 0.5, rng);
    std::vector<std::vector<Vertex>> got;
    for (const auto& t : triangles(g)) got.push_back(t.members());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, oracle::triangles(g));
  }
}

TEST(PredicateTest, CubicConnectedComplete) {
  EXPECT_TRUE(is_cubic(complete_graph(4).graph));
  EXPECT_TRUE(is_complete(complete_graph(4).graph));
  EXPECT_FALSE(is_cubic(cycle_graph(5).graph));
  EXPECT_TRUE(is_connected(path_graph(4).graph));
  EXPECT_FALSE(is_connected(Graph(2)));
  Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(connected_components(two).size(), 2u);
}

TEST(PredicateTest, IndependenceAndCover) {
  Graph c5 = cycle_graph(5).graph;
  EXPECT_TRUE(is_independent(c5, {0, 2}));
  EXPECT_FALSE(is_independent(c5, {0, 1}));
  EXPECT_TRUE(is_vertex_cover(c5, {0, 1, 3}));
  EXPECT_FALSE(is_vertex_cover(c5, {0, 2}));
}

TEST(DeletionTest, MapsSurvivingVertices) {
  Graph g = cycle_graph(5).graph;
  auto d = delete_vertices(g, {1, 3});
  EXPECT_EQ(d.graph.order(), 3);
  EXPECT_EQ(d.new_to_old, (std::vector<Vertex>{0, 2, 4}));
  EXPECT_EQ(d.old_to_new[1], -1);
  EXPECT_EQ(d.old_to_new[4], 2);
  EXPECT_EQ(d.graph.size(), 1);  // only 4-0 survives
  EXPECT_TRUE(d.graph.adjacent(0, 2));
}

TEST(IsomorphismTest, RelabelPreservesIsomorphismClass) {
  std::mt19937_64 rng(3);
  Graph g = diamond_necklace(3).graph;
  std::vector<Vertex> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  Graph h = relabel(g, perm);
  EXPECT_TRUE(are_isomorphic(g, h));
  EXPECT_FALSE(are_isomorphic(g, triangle_necklace(2).graph));
}

TEST(DotTest, HighlightsAndLabels) {
  Graph g = path_graph(3).graph;
  std::string dot = to_dot(g, {1}, {{0, "a"}});
  EXPECT_NE(dot.find("graph G {"), std::string::npos);
  EXPECT_NE(dot.find("0 [label=\"a\"]"), std::string::npos);
  EXPECT_NE(dot.find("1 [style=filled"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2;"), std::string::npos);
  EXPECT_THROW(to_dot(g, {9}), InvalidArgument);
}

}  // namespace
}  // namespace spreadlab
