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

#include "spreadlab/constructions.hpp"

#include <algorithm>

#include "spreadlab/decomposition.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/solvers.hpp"

namespace spreadlab {

namespace {

std::string vname(Vertex v) { return "v" + std::to_string(v); }

std::string unit_name(const DeltaDPartition& p, int i) {
  return to_string(p.unit(i).kind) + " unit " + std::to_string(i) + " " +
         p.unit(i).vertices.to_string();
}

bool hits_every_triangle(const Graph& g, const VertexSet& s) {
  for (const auto& t : triangles(g))
    if (t.set_intersection(s).empty()) return false;
  return true;
}

// Grows an infected region one unit at a time, adding one vertex per unit.
class UnitTraversal {
 public:
  UnitTraversal(const DeltaDPartition& p, VertexSet& set, std::vector<std::string>& log)
      : p_(p), set_(set), log_(log), infected_(p.size(), 0) {}

  void mark(int unit) { infected_[unit] = 1; }

  // `unit` may not be entered through `vertex`, and receives no new vertex.
  void guard(int unit, Vertex vertex) {
    guarded_unit_ = unit;
    guarded_vertex_ = vertex;
  }

  void run() {
    for (;;) {
      int target = -1;
      Vertex from = -1, entry = -1;
      for (int j = 0; j < p_.size() && target < 0; ++j) {
        if (infected_[j]) continue;
        for (const auto& e : p_.unit_edges()) {
          Vertex u, v;
          if (e.unit_b == j && infected_[e.unit_a]) {
            u = e.u, v = e.v;
          } else if (e.unit_a == j && infected_[e.unit_b]) {
            u = e.v, v = e.u;
          } else {
            continue;
          }
          if (j == guarded_unit_ && v == guarded_vertex_) continue;
          target = j, from = u, entry = v;
          break;
        }
      }
      if (target < 0) break;
      const Unit& unit = p_.unit(target);
      if (target == guarded_unit_) {
        log_.push_back("enter start " + unit_name(p_, target) + " via edge " + vname(from) + "-" +
                       vname(entry) + "; no vertex added");
      } else {
        Vertex add = unit.is_triangle() ? unit.vertices.set_difference(VertexSet{entry}).front()
                                        : unit.dominating.front();
        set_.insert(add);
        log_.push_back("enter " + unit_name(p_, target) + " via edge " + vname(from) + "-" +
                       vname(entry) + "; add " + vname(add));
      }
      infected_[target] = 1;
    }
    const auto missing = std::count(infected_.begin(), infected_.end(), 0);
    if (missing > 0) {
      log_.push_back("traversal stalled with " + std::to_string(missing) + " units uninfected");
    }
  }

 private:
  const DeltaDPartition& p_;
  VertexSet& set_;
  std::vector<std::string>& log_;
  std::vector<char> infected_;
  int guarded_unit_ = -1;
  Vertex guarded_vertex_ = -1;
};

void finish(const Graph& g, ConstructionResult& r) {
  r.validated = is_spreading_set(g, r.set, r.target);
  r.log.push_back(std::string("validation under ") + r.target.to_string() + ": " +
                  (r.validated ? "spreading" : "NOT spreading"));
  if (r.set.size() != r.claimed_size) {
    r.log.push_back("size " + std::to_string(r.set.size()) + " differs from claimed " +
                    r.claimed_size_formula + " = " + std::to_string(r.claimed_size));
  }
}

// Shared by percolating_set_2 and spreading_set_22; `start` is filled for
// graphs handled by the general traversal.
ConstructionResult perc2_impl(const Graph& g, std::optional<StartPair>& start) {
  require_claw_free_cubic(g, /*allow_k4=*/true);
  ConstructionResult r;
  r.target = SpreadParams(2, WhiteLimit::infinity());
  if (g.order() == 4) {
    r.set = VertexSet{0, 1};
    r.claimed_size_formula = "2";
    r.claimed_size = 2;
    r.log.push_back("K_4: any two vertices");
    return r;
  }
  const auto p = delta_d_partition(g);
  const auto family = classify_family(g);
  if (family.is_diamond_necklace()) {
    const Unit& d1 = p.unit(0);
    r.set = d1.dominating;
    r.log.push_back("diamond necklace " + family.name() + ": both dominating vertices of " +
                    unit_name(p, 0));
    for (int i = 1; i < p.size(); ++i) {
      r.set.insert(p.unit(i).dominating.front());
      r.log.push_back("add dominating vertex " + vname(p.unit(i).dominating.front()) + " of " +
                      unit_name(p, i));
    }
    r.claimed_size_formula = "u(G)+1";
    r.claimed_size = p.size() + 1;
    return r;
  }

  const int t = find_special_triangle_unit(g, p);
  const StartPair s = partner_unit_for_start(g, p, t);
  start = s;
  r.log.push_back("start " + unit_name(p, t) + " (removal leaves at most two components)");
  r.log.push_back("partner " + unit_name(p, s.partner_unit) + ", " + to_string(s.kind));
  r.set = VertexSet{s.t1, s.partner_seed};
  r.log.push_back("seed " + vname(s.t1) + " and " + vname(s.partner_seed));

  UnitTraversal tr(p, r.set, r.log);
  tr.mark(s.partner_unit);
  if (s.kind == PartnerKind::DoubleBond) {
    tr.mark(t);
  } else {
    tr.guard(t, s.t1);
  }
  tr.run();
  r.claimed_size_formula = "u(G)";
  r.claimed_size = p.size();
  return r;
}

}  // namespace

VertexSet triangle_hitting_independent_set(const Graph& g) {
  const auto p = delta_d_partition(g);
  if (p.diamond_count() == 0) return independence_number(g).witness;

  const int n = g.order();
  VertexSet out;
  std::vector<char> alive(n, 1);
  for (const auto& u : p.units()) {
    if (!u.is_diamond()) continue;
    out.insert(u.dominating.front());
    for (Vertex v : u.vertices) alive[v] = 0;
  }
  for (;;) {
    Vertex pick = -1, first_alive = -1;
    for (Vertex v = 0; v < n && pick < 0; ++v) {
      if (!alive[v]) continue;
      if (first_alive < 0) first_alive = v;
      int d = 0;
      for (Vertex w : g.neighbors(v)) d += alive[w];
      if (d == 2) pick = v;
    }
    if (pick < 0) pick = first_alive;
    if (pick < 0) break;
    out.insert(pick);
    for (Vertex v : p.unit(p.unit_of(pick)).vertices) alive[v] = 0;
  }
  return out;
}

VertexSet vertex_cover_two_per_triangle(const Graph& g) {
  return VertexSet::all(g.order()).set_difference(triangle_hitting_independent_set(g));
}

ConstructionResult percolating_set_3(const Graph& g) {
  require_claw_free_cubic(g, /*allow_k4=*/true);
  ConstructionResult r;
  r.target = SpreadParams(3, WhiteLimit::infinity());
  const auto cover = vertex_cover_number(g);
  r.set = cover.witness;
  r.claimed_size_formula = "beta(G)";
  r.claimed_size = cover.value;
  r.log.push_back("minimum vertex cover of size " + std::to_string(cover.value));
  finish(g, r);
  const bool also32 = is_spreading_set(g, r.set, SpreadParams(3, 2));
  r.log.push_back(std::string("validation under (3,2): ") + (also32 ? "spreading" : "NOT spreading"));
  r.validated = r.validated && also32;
  return r;
}

ConstructionResult spreading_set_31(const Graph& g) {
  require_claw_free_cubic(g, /*allow_k4=*/true);
  ConstructionResult r;
  r.target = SpreadParams(3, 1);
  const int beta = vertex_cover_number(g).value;
  const auto hit = max_triangle_hitting_independent_set(g);
  const auto tris = triangles(g);
  if (!hit) {
    // Only K_4 lacks such a set in this class.
    const auto cover = vertex_cover_number(g);
    r.set = cover.witness;
    const Vertex v = VertexSet::all(g.order()).set_difference(r.set).front();
    r.set.insert(v);
    r.log.push_back("no independent set meets every triangle; minimum cover " +
                    cover.witness.to_string() + " plus " + vname(v));
    r.claimed_size_formula = "beta(G)+1";
    r.claimed_size = beta + 1;
    finish(g, r);
    return r;
  }
  const VertexSet cover = VertexSet::all(g.order()).set_difference(hit->witness);
  r.log.push_back("minimum cover with two vertices per triangle: " + cover.to_string());
  const VertexSet& t = tris.front();
  const Vertex v = t.set_difference(cover).front();
  r.set = cover;
  r.set.insert(v);
  r.log.push_back("complete triangle " + t.to_string() + " with " + vname(v));
  if (cover.size() == beta) {
    r.claimed_size_formula = "beta(G)+1";
  } else {
    r.claimed_size_formula = "beta'(G)+1";
    r.log.push_back("restricted cover size " + std::to_string(cover.size()) + " exceeds beta(G) = " +
                    std::to_string(beta));
  }
  r.claimed_size = cover.size() + 1;
  finish(g, r);
  return r;
}

ConstructionResult percolating_set_2(const Graph& g) {
  std::optional<StartPair> start;
  auto r = perc2_impl(g, start);
  finish(g, r);
  return r;
}

ConstructionResult spreading_set_22(const Graph& g) {
  std::optional<StartPair> start;
  auto r = perc2_impl(g, start);
  r.target = SpreadParams(2, 2);
  if (!start) {
    r.log.push_back("no extra vertex needed");
    finish(g, r);
    return r;
  }
  const int u = r.claimed_size;
  if (start->kind != PartnerKind::DoubleBond) {
    r.set.insert(start->bond_vertex);
    r.log.push_back("add the common neighbour " + vname(start->bond_vertex) + " of " +
                    vname(start->t1) + " and " + vname(start->partner_seed));
  } else if (is_spreading_set(g, r.set, r.target)) {
    r.log.push_back("double bond: no extra vertex needed");
  } else {
    const auto p = delta_d_partition(g);
    std::vector<Vertex> candidates{start->bond_vertex};
    for (Vertex v : p.unit(start->start_unit).vertices) candidates.push_back(v);
    for (Vertex v : p.unit(start->partner_unit).vertices) candidates.push_back(v);
    for (Vertex v = 0; v < g.order(); ++v) candidates.push_back(v);
    for (Vertex v : candidates) {
      if (r.set.contains(v)) continue;
      VertexSet trial = r.set;
      trial.insert(v);
      if (is_spreading_set(g, trial, r.target)) {
        r.set = std::move(trial);
        r.log.push_back("double bond: fallback vertex " + vname(v));
        break;
      }
    }
  }
  const bool extra = r.set.size() > u;
  r.claimed_size_formula = extra ? "u(G)+1" : "u(G)";
  r.claimed_size = extra ? u + 1 : u;
  finish(g, r);
  return r;
}

ConstructionResult spreading_set_21(const Graph& g) {
  require_claw_free_cubic(g);
  const auto p = delta_d_partition(g);
  ConstructionResult r;
  r.target = SpreadParams(2, 1);
  const VertexSet t = triangles(g).front();
  r.set = t;
  const int home = p.unit_of(t.front());
  r.log.push_back("seed triangle " + t.to_string() + " inside " + unit_name(p, home));
  UnitTraversal tr(p, r.set, r.log);
  tr.mark(home);
  tr.run();
  r.claimed_size_formula = "u(G)+2";
  r.claimed_size = p.size() + 2;
  finish(g, r);
  return r;
}

const std::vector<std::string>& construction_methods() {
  static const std::vector<std::string> methods{"ind-set", "cover", "perc3", "s31",
                                                "perc2",   "s22",   "s21"};
  return methods;
}

ConstructionResult construct(const Graph& g, const std::string& method) {
  if (method == "perc3") return percolating_set_3(g);
  if (method == "s31") return spreading_set_31(g);
  if (method == "perc2") return percolating_set_2(g);
  if (method == "s22") return spreading_set_22(g);
  if (method == "s21") return spreading_set_21(g);
  if (method == "ind-set" || method == "cover") {
    ConstructionResult r;
    const auto ind = triangle_hitting_independent_set(g);
    const int u = unit_count(g);
    if (method == "ind-set") {
      r.set = ind;
      r.validated = is_independent(g, ind) && hits_every_triangle(g, ind);
      r.claimed_size_formula = "u(G)";
      r.claimed_size = u;
      r.log.push_back("independent and meets every triangle: " +
                      std::string(r.validated ? "yes" : "no"));
    } else {
      r.set = VertexSet::all(g.order()).set_difference(ind);
      bool two = true;
      for (const auto& t : triangles(g)) two = two && t.set_intersection(r.set).size() == 2;
      r.validated = is_vertex_cover(g, r.set) && two;
      r.claimed_size_formula = "n-u(G)";
      r.claimed_size = g.order() - u;
      r.log.push_back("vertex cover with two vertices per triangle: " +
                      std::string(r.validated ? "yes" : "no"));
    }
    return r;
  }
  throw InvalidArgument("unknown construction method '" + method + "'");
}

}  // namespace spreadlab
