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

#include "spreadlab/decomposition.hpp"

#include <algorithm>
#include <queue>

#include "spreadlab/errors.hpp"
#include "spreadlab/families.hpp"

namespace spreadlab {

std::string to_string(UnitKind kind) {
  return kind == UnitKind::Triangle ? "triangle" : "diamond";
}

std::string to_string(PartnerKind kind) {
  switch (kind) {
    case PartnerKind::SingleBondTriangle:
      return "single-bond-triangle";
    case PartnerKind::SingleBondDiamond:
      return "single-bond-diamond";
    case PartnerKind::DoubleBond:
      return "double-bond";
  }
  return "?";
}

DeltaDPartition::DeltaDPartition(std::vector<Unit> units, int order,
                                 std::vector<UnitEdge> unit_edges)
    : units_(std::move(units)), unit_of_(order, -1), unit_edges_(std::move(unit_edges)) {
  for (int i = 0; i < size(); ++i)
    for (Vertex v : units_[i].vertices) unit_of_[v] = i;
}

int DeltaDPartition::triangle_count() const {
  return static_cast<int>(
      std::count_if(units_.begin(), units_.end(), [](const Unit& u) { return u.is_triangle(); }));
}

int DeltaDPartition::diamond_count() const { return size() - triangle_count(); }

int DeltaDPartition::bond_count(int i, int j) const {
  if (i > j) std::swap(i, j);
  return static_cast<int>(std::count_if(unit_edges_.begin(), unit_edges_.end(),
                                        [&](const UnitEdge& e) {
                                          return e.unit_a == i && e.unit_b == j;
                                        }));
}

std::vector<int> DeltaDPartition::adjacent_units(int i) const {
  std::vector<int> out;
  for (const auto& e : unit_edges_) {
    if (e.unit_a == i) out.push_back(e.unit_b);
    if (e.unit_b == i) out.push_back(e.unit_a);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void require_claw_free_cubic(const Graph& g, bool allow_k4) {
  if (g.order() == 0) throw GraphClassError("graph is empty");
  if (!is_connected(g)) throw GraphClassError("graph is not connected");
  if (!is_cubic(g)) throw GraphClassError("graph is not cubic");
  if (!is_claw_free(g)) throw GraphClassError("graph is not claw-free");
  if (!allow_k4 && g.order() == 4) {
    throw GraphClassError("K_4 has no triangle-diamond partition");
  }
}

namespace {

std::vector<Vertex> common_neighbors(const Graph& g, Vertex u, Vertex v) {
  std::vector<Vertex> out;
  auto a = g.neighbors(u), b = g.neighbors(v);
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

DeltaDPartition delta_d_partition(const Graph& g) {
  require_claw_free_cubic(g);
  const int n = g.order();
  std::vector<int> assigned(n, 0);
  std::vector<Unit> units;

  for (const auto& [u, v] : g.edges()) {
    if (assigned[u] || assigned[v]) continue;
    auto c = common_neighbors(g, u, v);
    if (c.size() != 2 || g.adjacent(c[0], c[1])) continue;
    if (assigned[c[0]] || assigned[c[1]]) {
      throw GraphClassError("overlapping diamonds; input is not a valid claw-free cubic graph");
    }
    Unit d{UnitKind::Diamond, VertexSet{u, v, c[0], c[1]}, VertexSet{u, v}};
    for (Vertex w : d.vertices) assigned[w] = 1;
    units.push_back(std::move(d));
  }

  for (Vertex v = 0; v < n; ++v) {
    if (assigned[v]) continue;
    auto nb = g.neighbors(v);
    bool found = false;
    for (std::size_t i = 0; i < nb.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < nb.size() && !found; ++j) {
        if (!g.adjacent(nb[i], nb[j])) continue;
        if (assigned[nb[i]] || assigned[nb[j]]) {
          throw GraphClassError("vertex " + std::to_string(v) +
                                " shares a triangle with a diamond-unit");
        }
        Unit t{UnitKind::Triangle, VertexSet{v, nb[i], nb[j]}, {}};
        for (Vertex w : t.vertices) assigned[w] = 1;
        units.push_back(std::move(t));
        found = true;
      }
    }
    if (!found) throw GraphClassError("vertex " + std::to_string(v) + " lies in no triangle");
  }

  std::sort(units.begin(), units.end(),
            [](const Unit& a, const Unit& b) { return a.vertices.front() < b.vertices.front(); });

  std::vector<int> unit_of(n);
  for (int i = 0; i < static_cast<int>(units.size()); ++i)
    for (Vertex w : units[i].vertices) unit_of[w] = i;

  std::vector<UnitEdge> unit_edges;
  for (const auto& [u, v] : g.edges()) {
    int a = unit_of[u], b = unit_of[v];
    if (a == b) continue;
    if (a < b) {
      unit_edges.push_back({a, b, u, v});
    } else {
      unit_edges.push_back({b, a, v, u});
    }
  }
  std::sort(unit_edges.begin(), unit_edges.end(), [](const UnitEdge& x, const UnitEdge& y) {
    return std::tie(x.unit_a, x.unit_b, x.u, x.v) < std::tie(y.unit_a, y.unit_b, y.u, y.v);
  });
  return DeltaDPartition(std::move(units), n, std::move(unit_edges));
}

int unit_count(const Graph& g) { return delta_d_partition(g).size(); }

std::string FamilyClass::name() const {
  switch (tag) {
    case Tag::DiamondNecklace:
      return "N_" + std::to_string(index);
    case Tag::TriangleNecklace:
      return "F_" + std::to_string(index);
    case Tag::TriangleDiamondNecklace:
      return "H_" + std::to_string(index);
    case Tag::K4:
      return "K_4";
    case Tag::Generic:
      return "generic";
  }
  return "generic";
}

FamilyClass classify_family(const Graph& g) {
  require_claw_free_cubic(g, /*allow_k4=*/true);
  if (g.order() == 4) return {FamilyClass::Tag::K4, 0};
  const auto p = delta_d_partition(g);
  const int t = p.triangle_count(), d = p.diamond_count();
  if (t == 0 && d >= 2 && are_isomorphic(g, diamond_necklace(d).graph)) {
    return {FamilyClass::Tag::DiamondNecklace, d};
  }
  if (d == 0 && t >= 2 && t % 2 == 0 && are_isomorphic(g, triangle_necklace(t / 2).graph)) {
    return {FamilyClass::Tag::TriangleNecklace, t};
  }
  if (d >= 2 && t == 2 * d && are_isomorphic(g, triangle_diamond_necklace(d).graph)) {
    return {FamilyClass::Tag::TriangleDiamondNecklace, t};
  }
  return {};
}

int find_special_triangle_unit(const Graph& g, const DeltaDPartition& p) {
  for (int i = 0; i < p.size(); ++i) {
    if (!p.unit(i).is_triangle()) continue;
    if (connected_components(delete_vertices(g, p.unit(i).vertices).graph).size() <= 2) return i;
  }
  throw GraphClassError("graph has no triangle-unit with at most two components after removal");
}

namespace {

bool is_bridge(const Graph& g, Vertex u, Vertex v) {
  std::vector<char> seen(g.order(), 0);
  std::queue<Vertex> q;
  q.push(u);
  seen[u] = 1;
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for (Vertex y : g.neighbors(x)) {
      if ((x == u && y == v) || (x == v && y == u) || seen[y]) continue;
      if (y == v) return false;
      seen[y] = 1;
      q.push(y);
    }
  }
  return true;
}

}  // namespace

StartPair partner_unit_for_start(const Graph& g, const DeltaDPartition& p, int start_unit) {
  const Unit& t_unit = p.unit(start_unit);
  if (!t_unit.is_triangle()) throw InvalidArgument("start unit must be a triangle-unit");

  for (int j : p.adjacent_units(start_unit)) {
    // Bond edges oriented (vertex in T_1, vertex in U_1), sorted.
    std::vector<Edge> bonds;
    for (const auto& e : p.unit_edges()) {
      if (e.unit_a == start_unit && e.unit_b == j) bonds.emplace_back(e.u, e.v);
      if (e.unit_b == start_unit && e.unit_a == j) bonds.emplace_back(e.v, e.u);
    }
    std::sort(bonds.begin(), bonds.end());
    const Unit& partner = p.unit(j);

    if (bonds.size() >= 2) {
      StartPair s{start_unit, j, PartnerKind::DoubleBond, bonds[0].first, -1, bonds[0].second,
                  bonds[1].first};
      if (partner.is_triangle()) {
        s.partner_seed = bonds[1].second;  // the U_1 vertex bonded to t2
      } else {
        s.partner_seed = partner.dominating.front();
      }
      return s;
    }

    const auto [t1, w] = bonds.front();
    if (is_bridge(g, t1, w)) continue;
    if (partner.is_triangle()) {
      Vertex a1 = partner.vertices.set_difference(VertexSet{w}).front();
      return {start_unit, j, PartnerKind::SingleBondTriangle, t1, a1, w, -1};
    }
    return {start_unit, j, PartnerKind::SingleBondDiamond, t1, partner.dominating.front(), w, -1};
  }
  throw GraphClassError("start triangle-unit has no admissible partner unit");
}

}  // namespace spreadlab
