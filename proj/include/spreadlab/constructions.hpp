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

#ifndef SPREADLAB_CONSTRUCTIONS_HPP_
#define SPREADLAB_CONSTRUCTIONS_HPP_

#include <string>
#include <vector>

#include "spreadlab/graph.hpp"
#include "spreadlab/spreading.hpp"

namespace spreadlab {

struct ConstructionResult {
  VertexSet set;
  std::string claimed_size_formula;  // "u(G)", "u(G)+1", "beta(G)", ...
  int claimed_size = 0;              // the formula evaluated on G
  SpreadParams target;               // params the set is validated against
  bool validated = false;            // closure under `target` is V(G)
  std::vector<std::string> log;
};

// Independent set meeting every triangle: one dominating vertex per
// diamond-unit, then repeatedly the least vertex of degree 2 in the residual
// graph with its triangle deleted. Without diamond-units a maximum
// independent set is returned. Requires connected claw-free cubic G != K_4.
VertexSet triangle_hitting_independent_set(const Graph& g);

// Complement of triangle_hitting_independent_set: a vertex cover with
// exactly two vertices in every triangle.
VertexSet vertex_cover_two_per_triangle(const Graph& g);

// Minimum vertex cover, validated under (3,inf) and (3,2).
ConstructionResult percolating_set_3(const Graph& g);

// Minimum vertex cover with two vertices per triangle, plus the missing
// vertex of the first triangle; validated under (3,1).
ConstructionResult spreading_set_31(const Graph& g);

// One vertex per unit by the unit traversal (u(G) + 1 on diamond
// necklaces, 2 on K_4); validated under (2,inf).
ConstructionResult percolating_set_2(const Graph& g);

// percolating_set_2 plus at most one vertex; validated under (2,2).
ConstructionResult spreading_set_22(const Graph& g);

// The first triangle of G plus one vertex per remaining unit; validated
// under (2,1). Requires G != K_4.
ConstructionResult spreading_set_21(const Graph& g);

// Dispatch by CLI method name: ind-set, cover, perc3, s31, perc2, s22, s21.
// ind-set and cover are reported with target (1,inf) and validated for
// independence/cover and the triangle property instead of spreading.
ConstructionResult construct(const Graph& g, const std::string& method);

const std::vector<std::string>& construction_methods();

}  // namespace spreadlab

#endif  // SPREADLAB_CONSTRUCTIONS_HPP_
