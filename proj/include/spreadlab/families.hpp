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

#ifndef SPREADLAB_FAMILIES_HPP_
#define SPREADLAB_FAMILIES_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "spreadlab/graph.hpp"

namespace spreadlab {

// A generated graph together with the conventional vertex names used in the
// literature for that family (a_i, b_i, c_i, d_i for diamond D_i with a_i b_i
// the missing edge; x_i, y_i, z_i for triangle T_i).
struct LabeledGraph {
  Graph graph;
  std::map<std::string, Vertex> labels;
  std::string family;  // "N", "F", "H", "fig6", "random", "K4", ...
  int parameter = 0;   // k for N_k; 2k for F_2k and H_2k; 0 otherwise

  Vertex at(const std::string& name) const;
  VertexSet set_of(std::initializer_list<std::string> names) const;
  std::map<Vertex, std::string> names_by_vertex() const;
  // "N_4", "F_6", "H_6", "fig6", ...
  std::string display_name() const;
};

// Diamond-necklace N_k: k diamonds in a cycle, a_i joined to b_{i+1} and a_k
// to b_1. Vertices of D_i are 4(i-1) + {a:0, b:1, c:2, d:3}. Requires k >= 2.
LabeledGraph diamond_necklace(int k);

// Triangle-necklace F_{2k} on 6k vertices: triangles T_1..T_{2k} joined by
// x_{2i-1}x_{2i}, y_{2i-1}y_{2i} and z_{2i}z_{2i+1} (indices mod 2k).
// Vertices of T_i are 3(i-1) + {x:0, y:1, z:2}. Requires k >= 1.
LabeledGraph triangle_necklace(int k);

// Triangle-diamond-necklace H_{2k} on 10k vertices: triangles occupy
// 0..6k-1 as in triangle_necklace, diamonds follow at 6k + 4(j-1).
// Requires k >= 2.
LabeledGraph triangle_diamond_necklace(int k);

// The 18-vertex graph with three diamonds D_1..D_3 and two triangles: T_1
// is joined to a_1, a_2, a_3 and T_2 to b_1, b_2, b_3. Diamonds occupy
// 0..11, T_1 = {12, 13, 14}, T_2 = {15, 16, 17}.
LabeledGraph figure6_graph();

// The shaded 5-set drawn on figure6_graph: {c_1, c_2, c_3, y_1, z_2}.
VertexSet figure6_marked_set(const LabeledGraph& g);

// The shaded 5-set drawn on N_4: both dominating vertices of D_1 plus d_2,
// d_3, d_4.
VertexSet n4_marked_set(const LabeledGraph& n4);

LabeledGraph complete_graph(int n);
LabeledGraph path_graph(int n);
LabeledGraph cycle_graph(int n);
LabeledGraph star_graph(int leaves);  // K_{1,leaves}, centre is vertex 0

struct RandomCubicOptions {
  int max_attempts = 10'000;
};

// Connected claw-free cubic graph whose triangle-diamond partition has
// exactly the requested unit counts, built by uniform stub matching over the
// units and rejection. Triangle T_i occupies 3(i-1) + {x,y,z}; diamonds
// follow. Deterministic for a fixed seed.
//
// Requirements: num_triangles even, both counts nonnegative, and
// num_triangles + num_diamonds >= 2. Throws InvalidArgument otherwise, or
// when every attempt is rejected.
LabeledGraph random_claw_free_cubic(int num_triangles, int num_diamonds,
                                    std::uint64_t seed,
                                    const RandomCubicOptions& options = {});

// The named claw-free cubic test fixtures: N_2..N_5, F_2, F_4, F_6, H_4,
// H_6 and figure6_graph. K_4 is not included.
std::vector<LabeledGraph> standard_fixtures();

}  // namespace spreadlab

#endif  // SPREADLAB_FAMILIES_HPP_
