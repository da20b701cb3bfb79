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

#include "spreadlab/families.hpp"

#include <random>
#include <utility>

#include "spreadlab/errors.hpp"

namespace spreadlab {

Vertex LabeledGraph::at(const std::string& name) const {
  auto it = labels.find(name);
  if (it == labels.end()) throw InvalidArgument("unknown vertex label '" + name + "'");
  return it->second;
}

VertexSet LabeledGraph::set_of(std::initializer_list<std::string> names) const {
  std::vector<Vertex> out;
  for (const auto& n : names) out.push_back(at(n));
  return VertexSet(std::move(out));
}

std::map<Vertex, std::string> LabeledGraph::names_by_vertex() const {
  std::map<Vertex, std::string> out;
  for (const auto& [name, v] : labels) out[v] = name;
  return out;
}

std::string LabeledGraph::display_name() const {
  if (family == "N" || family == "F" || family == "H" || family == "K" ||
      family == "P" || family == "C") {
    return family + "_" + std::to_string(parameter);
  }
  return family;
}

namespace {

std::string idx(const char* base, int i) { return std::string(base) + "_" + std::to_string(i); }

// Diamond on {a, b, c, d} with a b missing.
void add_diamond(std::vector<Edge>& edges, Vertex a, Vertex b, Vertex c, Vertex d) {
  edges.insert(edges.end(), {{a, c}, {a, d}, {b, c}, {b, d}, {c, d}});
}

void add_triangle(std::vector<Edge>& edges, Vertex x, Vertex y, Vertex z) {
  edges.insert(edges.end(), {{x, y}, {x, z}, {y, z}});
}

void label_triangles(LabeledGraph& g, int count, Vertex base) {
  for (int i = 1; i <= count; ++i) {
    const Vertex o = base + 3 * (i - 1);
    g.labels[idx("x", i)] = o;
    g.labels[idx("y", i)] = o + 1;
    g.labels[idx("z", i)] = o + 2;
  }
}

void label_diamonds(LabeledGraph& g, int count, Vertex base) {
  for (int i = 1; i <= count; ++i) {
    const Vertex o = base + 4 * (i - 1);
    g.labels[idx("a", i)] = o;
    g.labels[idx("b", i)] = o + 1;
    g.labels[idx("c", i)] = o + 2;
    g.labels[idx("d", i)] = o + 3;
  }
}

}  // namespace

LabeledGraph diamond_necklace(int k) {
  if (k < 2) throw InvalidArgument("diamond necklace needs k >= 2");
  auto a = [](int i) { return 4 * (i - 1); };
  auto b = [](int i) { return 4 * (i - 1) + 1; };
  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) add_diamond(edges, a(i), b(i), a(i) + 2, a(i) + 3);
  for (int i = 1; i < k; ++i) edges.emplace_back(a(i), b(i + 1));
  edges.emplace_back(a(k), b(1));

  LabeledGraph out{Graph::from_edges(4 * k, edges), {}, "N", k};
  label_diamonds(out, k, 0);
  return out;
}

LabeledGraph triangle_necklace(int k) {
  if (k < 1) throw InvalidArgument("triangle necklace needs k >= 1");
  const int t = 2 * k;
  auto x = [](int i) { return 3 * (i - 1); };
  auto y = [](int i) { return 3 * (i - 1) + 1; };
  auto z = [](int i) { return 3 * (i - 1) + 2; };
  auto wrap = [t](int i) { return (i - 1) % t + 1; };
  std::vector<Edge> edges;
  for (int i = 1; i <= t; ++i) add_triangle(edges, x(i), y(i), z(i));
  for (int i = 1; i <= k; ++i) {
    edges.emplace_back(x(2 * i - 1), x(2 * i));
    edges.emplace_back(y(2 * i - 1), y(2 * i));
    // For k = 1 this is z_2 z_1, closing the prism.
    edges.emplace_back(z(2 * i), z(wrap(2 * i + 1)));
  }
  LabeledGraph out{Graph::from_edges(6 * k, edges), {}, "F", t};
  label_triangles(out, t, 0);
  return out;
}

LabeledGraph triangle_diamond_necklace(int k) {
  if (k < 2) throw InvalidArgument("triangle-diamond necklace needs k >= 2");
  const int t = 2 * k;
  auto x = [](int i) { return 3 * (i - 1); };
  auto y = [](int i) { return 3 * (i - 1) + 1; };
  auto z = [](int i) { return 3 * (i - 1) + 2; };
  const Vertex dbase = 3 * t;
  auto a = [dbase](int j) { return dbase + 4 * (j - 1); };
  auto b = [dbase](int j) { return dbase + 4 * (j - 1) + 1; };

  std::vector<Edge> edges;
  for (int i = 1; i <= t; ++i) add_triangle(edges, x(i), y(i), z(i));
  for (int j = 1; j <= k; ++j) add_diamond(edges, a(j), b(j), a(j) + 2, a(j) + 3);
  for (int i = 1; i <= k; ++i) {
    edges.emplace_back(x(2 * i - 1), a(i));
    edges.emplace_back(x(2 * i), b(i));
  }
  for (int i = 1; i < k; ++i) {
    edges.emplace_back(y(2 * i - 1), z(2 * i + 1));
    edges.emplace_back(y(2 * i), z(2 * i + 2));
  }
  edges.emplace_back(y(2 * k - 1), z(1));
  edges.emplace_back(y(2 * k), z(2));

  LabeledGraph out{Graph::from_edges(10 * k, edges), {}, "H", t};
  label_triangles(out, t, 0);
  label_diamonds(out, k, dbase);
  return out;
}

LabeledGraph figure6_graph() {
  std::vector<Edge> edges;
  for (int j = 0; j < 3; ++j) add_diamond(edges, 4 * j, 4 * j + 1, 4 * j + 2, 4 * j + 3);
  const Vertex t1 = 12, t2 = 15;
  add_triangle(edges, t1, t1 + 1, t1 + 2);
  add_triangle(edges, t2, t2 + 1, t2 + 2);
  for (int j = 0; j < 3; ++j) {
    edges.emplace_back(t1 + j, 4 * j);      // x_1 a_1, y_1 a_2, z_1 a_3
    edges.emplace_back(t2 + j, 4 * j + 1);  // x_2 b_1, y_2 b_2, z_2 b_3
  }
  LabeledGraph out{Graph::from_edges(18, edges), {}, "fig6", 0};
  label_diamonds(out, 3, 0);
  label_triangles(out, 2, 12);
  return out;
}

VertexSet figure6_marked_set(const LabeledGraph& g) {
  return g.set_of({"c_1", "c_2", "c_3", "y_1", "z_2"});
}

VertexSet n4_marked_set(const LabeledGraph& n4) {
  return n4.set_of({"c_1", "d_1", "d_2", "d_3", "d_4"});
}

LabeledGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return {Graph::from_edges(n, edges), {}, "K", n};
}

LabeledGraph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return {Graph::from_edges(n, edges), {}, "P", n};
}

LabeledGraph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return {Graph::from_edges(n, edges), {}, "C", n};
}

LabeledGraph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return {Graph::from_edges(leaves + 1, edges), {}, "star", leaves};
}

LabeledGraph random_claw_free_cubic(int num_triangles, int num_diamonds,
                                    std::uint64_t seed,
                                    const RandomCubicOptions& options) {
  if (num_triangles < 0 || num_diamonds < 0) {
    throw InvalidArgument("unit counts must be nonnegative");
  }
  if (num_triangles % 2 != 0) {
    throw InvalidArgument("number of triangle-units must be even (stub parity)");
  }
  if (num_triangles + num_diamonds < 2) {
    throw InvalidArgument("need at least two units");
  }

  const Vertex dbase = 3 * num_triangles;
  const int n = dbase + 4 * num_diamonds;
  std::vector<Edge> inner;
  // stub vertex -> owning unit
  std::vector<std::pair<Vertex, int>> stubs;
  for (int i = 0; i < num_triangles; ++i) {
    const Vertex o = 3 * i;
    add_triangle(inner, o, o + 1, o + 2);
    for (int j = 0; j < 3; ++j) stubs.emplace_back(o + j, i);
  }
  for (int i = 0; i < num_diamonds; ++i) {
    const Vertex o = dbase + 4 * i;
    add_diamond(inner, o, o + 1, o + 2, o + 3);
    stubs.emplace_back(o, num_triangles + i);
    stubs.emplace_back(o + 1, num_triangles + i);
  }

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
    // Fisher-Yates, then pair consecutive stubs: a uniform perfect matching.
    for (std::size_t i = stubs.size() - 1; i > 0; --i) {
      std::uniform_int_distribution<std::size_t> pick(0, i);
      std::swap(stubs[i], stubs[pick(rng)]);
    }
    bool ok = true;
    std::vector<Edge> edges = inner;
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      // Two stubs of one unit would duplicate a triangle edge or close a
      // diamond into K_4.
      if (stubs[i].second == stubs[i + 1].second) {
        ok = false;
        break;
      }
      edges.emplace_back(stubs[i].first, stubs[i + 1].first);
    }
    if (!ok) continue;
    Graph g = Graph::from_edges(n, edges);
    if (!is_connected(g)) continue;

    LabeledGraph out{std::move(g), {}, "random", 0};
    label_triangles(out, num_triangles, 0);
    label_diamonds(out, num_diamonds, dbase);
    return out;
  }
  throw InvalidArgument("random_claw_free_cubic: no valid stub matching in " +
                        std::to_string(options.max_attempts) + " attempts for (" +
                        std::to_string(num_triangles) + " triangles, " +
                        std::to_string(num_diamonds) + " diamonds, seed " +
                        std::to_string(seed) + ")");
}

std::vector<LabeledGraph> standard_fixtures() {
  std::vector<LabeledGraph> out;
  for (int k = 2; k <= 5; ++k) out.push_back(diamond_necklace(k));
  for (int k = 1; k <= 3; ++k) out.push_back(triangle_necklace(k));
  out.push_back(triangle_diamond_necklace(2));
  out.push_back(triangle_diamond_necklace(3));
  out.push_back(figure6_graph());
  return out;
}

}  // namespace spreadlab
