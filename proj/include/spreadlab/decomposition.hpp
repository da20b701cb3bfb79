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

#ifndef SPREADLAB_DECOMPOSITION_HPP_
#define SPREADLAB_DECOMPOSITION_HPP_

#include <string>
#include <vector>

#include "spreadlab/graph.hpp"

namespace spreadlab {

enum class UnitKind { Triangle, Diamond };

std::string to_string(UnitKind kind);

struct Unit {
  UnitKind kind;
  VertexSet vertices;    // 3 or 4 vertices
  VertexSet dominating;  // diamonds: the two vertices adjacent to the rest

  // Diamond vertices of degree two inside the unit (the ends of the missing
  // edge); empty for triangles.
  VertexSet ends() const { return vertices.set_difference(dominating); }
  bool is_triangle() const { return kind == UnitKind::Triangle; }
  bool is_diamond() const { return kind == UnitKind::Diamond; }
};

// An edge of G joining two different units; `u` lies in `unit_a`, `v` in
// `unit_b`, and unit_a < unit_b.
struct UnitEdge {
  int unit_a;
  int unit_b;
  Vertex u;
  Vertex v;
};

// The triangle-diamond partition of a connected claw-free cubic graph other
// than K_4. Units are sorted by smallest vertex.
class DeltaDPartition {
 public:
  DeltaDPartition(std::vector<Unit> units, int order, std::vector<UnitEdge> unit_edges);

  const std::vector<Unit>& units() const { return units_; }
  const Unit& unit(int i) const { return units_[i]; }
  int size() const { return static_cast<int>(units_.size()); }  // u(G)
  int triangle_count() const;
  int diamond_count() const;
  int unit_of(Vertex v) const { return unit_of_[v]; }
  const std::vector<UnitEdge>& unit_edges() const { return unit_edges_; }

  // Number of edges of G joining units i and j.
  int bond_count(int i, int j) const;
  bool double_bonded(int i, int j) const { return bond_count(i, j) >= 2; }
  // Distinct units adjacent to unit i, ascending.
  std::vector<int> adjacent_units(int i) const;

 private:
  std::vector<Unit> units_;
  std::vector<int> unit_of_;
  std::vector<UnitEdge> unit_edges_;
};

// Throws GraphClassError naming the first failed requirement unless g is
// connected, cubic, claw-free and (when !allow_k4) different from K_4.
void require_claw_free_cubic(const Graph& g, bool allow_k4 = false);

// Diamonds are found first as pairs of triangles sharing an edge whose
// off-edge vertices are non-adjacent; the remaining vertices fall into
// vertex-disjoint triangles. Throws GraphClassError outside the class.
DeltaDPartition delta_d_partition(const Graph& g);

int unit_count(const Graph& g);

struct FamilyClass {
  enum class Tag { DiamondNecklace, TriangleNecklace, TriangleDiamondNecklace, K4, Generic };
  Tag tag = Tag::Generic;
  // N_k: k.  F_{2k}, H_{2k}: 2k.  Otherwise 0.
  int index = 0;

  bool is_diamond_necklace() const { return tag == Tag::DiamondNecklace; }
  std::string name() const;  // "N_4", "F_6", "H_6", "K_4", "generic"
  friend bool operator==(const FamilyClass&, const FamilyClass&) = default;
};

// Membership is decided by an isomorphism test against the generator output
// for the candidate family suggested by the unit counts.
FamilyClass classify_family(const Graph& g);

// First triangle-unit T (in unit order) such that G - T has at most two
// components. Returns its unit index. Throws GraphClassError when g has no
// triangle-unit.
int find_special_triangle_unit(const Graph& g, const DeltaDPartition& p);

// How the starting triangle-unit is attached to its partner unit.
enum class PartnerKind {
  SingleBondTriangle,  // partner is a triangle joined by one non-bridge edge
  SingleBondDiamond,   // partner is a diamond joined by one non-bridge edge
  DoubleBond,          // the two units are joined by at least two edges
};

std::string to_string(PartnerKind kind);

// Resolved start configuration for the one-vertex-per-unit traversal.
struct StartPair {
  int start_unit;    // the triangle-unit T_1
  int partner_unit;  // U_1
  PartnerKind kind;
  Vertex t1;         // vertex of T_1 seeded into the set
  Vertex partner_seed;  // vertex of U_1 seeded into the set
  // Vertex of U_1 adjacent to t1 (the common neighbour of t1 and
  // partner_seed). Adding it upgrades the start to q = 2.
  Vertex bond_vertex;
  // DoubleBond only: the other vertex of T_1 bonded to U_1, else -1.
  Vertex t2;
};

// Picks the partner U_1 of the start triangle-unit: the first adjacent unit
// (unit order) that is double-bonded to it or joined by a non-bridge edge.
// t1 and the other resolved vertices are least-index choices.
StartPair partner_unit_for_start(const Graph& g, const DeltaDPartition& p, int start_unit);

}  // namespace spreadlab

#endif  // SPREADLAB_DECOMPOSITION_HPP_
