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

#include "spreadlab/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <queue>
#include <set>
#include <sstream>

#include "spreadlab/errors.hpp"

namespace spreadlab {

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::all(int n) {
  VertexSet s;
  s.members_.resize(n);
  for (int i = 0; i < n; ++i) s.members_[i] = i;
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

void VertexSet::erase(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it != members_.end() && *it == v) members_.erase(it);
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
  VertexSet out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(),
                 other.members_.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::set_difference(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(),
                      other.members_.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::set_intersection(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(members_.begin(), members_.end(),
                        other.members_.begin(), other.members_.end(),
                        std::back_inserter(out.members_));
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(members_[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(int n) : adj_(n) {
  if (n < 0) throw InvalidArgument("negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) {
      throw InvalidArgument("edge (" + std::to_string(u) + ", " +
                            std::to_string(v) + ") out of range for n=" +
                            std::to_string(n));
    }
    if (u == v) {
      throw InvalidArgument("self-loop at vertex " + std::to_string(u));
    }
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    auto& list = g.adj_[v];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      throw InvalidArgument("duplicate edge (" + std::to_string(v) + ", " +
                            std::to_string(*dup) + ")");
    }
  }
  g.edge_count_ = static_cast<int>(edges.size());
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::check(const VertexSet& s) const {
  if (!s.empty() && (s.front() < 0 || s.back() >= order())) {
    throw InvalidArgument("vertex set " + s.to_string() +
                          " not contained in 0.." + std::to_string(order() - 1));
  }
}

// ---------------------------------------------------------------------------
// Edge-list I/O

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\v\f";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool parse_int(std::string_view token, long long& out) {
  auto res = std::from_chars(token.data(), token.data() + token.size(), out);
  return res.ec == std::errc() && res.ptr == token.data() + token.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::vector<std::pair<Edge, int>> seen;  // normalized edge, line
  long long declared_order = 0;
  Vertex max_index = -1;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    auto hash = line.find('#');
    if (hash != std::string_view::npos) {
      std::string_view comment = trim(line.substr(hash + 1));
      constexpr std::string_view kOrder = "order:";
      if (comment.substr(0, kOrder.size()) == kOrder) {
        long long n = 0;
        if (!parse_int(trim(comment.substr(kOrder.size())), n) || n < 0) {
          throw ParseError("malformed order directive", line_no);
        }
        declared_order = std::max(declared_order, n);
      }
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      if (nl == text.size()) break;
      continue;
    }
    auto tokens = split_ws(line);
    if (tokens.size() != 2) {
      throw ParseError("expected two vertex indices, got " +
                           std::to_string(tokens.size()) + " tokens",
                       line_no);
    }
    long long a = 0, b = 0;
    if (!parse_int(tokens[0], a) || !parse_int(tokens[1], b)) {
      throw ParseError("malformed token in '" + std::string(line) + "'", line_no);
    }
    if (a < 0 || b < 0 || a > 1'000'000'000 || b > 1'000'000'000) {
      throw ParseError("vertex index out of range", line_no);
    }
    if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a), line_no);
    Edge e{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
    edges.push_back(e);
    seen.emplace_back(e, line_no);
    max_index = std::max(max_index, e.second);
    if (nl == text.size()) break;
  }
  std::sort(seen.begin(), seen.end());
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first) {
      throw ParseError("duplicate edge " + std::to_string(seen[i].first.first) +
                           " " + std::to_string(seen[i].first.second),
                       seen[i].second);
    }
  }
  int n = std::max<long long>(declared_order, max_index + 1);
  return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "# order: " << g.order() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Predicates

bool is_cubic(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

bool is_claw_free(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    const std::size_t d = nb.size();
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = i + 1; j < d; ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < d; ++k) {
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return false;
        }
      }
    }
  }
  return true;
}

bool is_complete(const Graph& g) {
  const long long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (s.contains(w)) return false;
    }
  }
  return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  for (const auto& [u, v] : g.edges()) {
    if (!s.contains(u) && !s.contains(v)) return false;
  }
  return true;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  for (Vertex root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Vertex> members;
    std::vector<Vertex> stack{root};
    comp[root] = id;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

std::vector<VertexSet> triangles(const Graph& g) {
  std::vector<VertexSet> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    auto nb = g.neighbors(a);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] < a) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) out.push_back(VertexSet{a, nb[i], nb[j]});
      }
    }
  }
  return out;
}

VertexDeletion delete_vertices(const Graph& g, const VertexSet& s) {
  g.check(s);
  VertexDeletion out;
  out.old_to_new.assign(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!s.contains(v)) {
      out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
      out.new_to_old.push_back(v);
    }
  }
  std::vector<Edge> kept;
  for (const auto& [u, v] : g.edges()) {
    if (out.old_to_new[u] >= 0 && out.old_to_new[v] >= 0) {
      kept.emplace_back(out.old_to_new[u], out.old_to_new[v]);
    }
  }
  out.graph = Graph::from_edges(static_cast<int>(out.new_to_old.size()), kept);
  return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw InvalidArgument("permutation size does not match graph order");
  }
  std::vector<char> hit(g.order(), 0);
  for (Vertex p : perm) {
    if (p < 0 || p >= g.order() || hit[p]) throw InvalidArgument("not a permutation");
    hit[p] = 1;
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.order(), edges);
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

// 1-WL colour refinement run on the disjoint union so colours are comparable
// across both graphs.
std::vector<int> refine_colors(const Graph& a, const Graph& b) {
  const int na = a.order();
  const int n = na + b.order();
  auto neighbors = [&](int v) {
    return v < na ? a.neighbors(v) : b.neighbors(v - na);
  };
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = static_cast<int>(neighbors(v).size());
  for (int round = 0; round < n; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> palette;
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nc;
      for (Vertex w : neighbors(v)) nc.push_back(color[v < na ? w : w + na]);
      std::sort(nc.begin(), nc.end());
      sig[v] = {color[v], std::move(nc)};
      palette.emplace(sig[v], 0);
    }
    int next = 0;
    for (auto& [key, id] : palette) id = next++;
    std::vector<int> fresh(n);
    for (int v = 0; v < n; ++v) fresh[v] = palette[sig[v]];
    const bool stable =
        static_cast<int>(palette.size()) ==
        static_cast<int>(std::set<int>(color.begin(), color.end()).size());
    color = std::move(fresh);
    if (stable) break;
  }
  return color;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b, std::vector<int> color)
      : a_(a), b_(b), color_(std::move(color)), map_(a.order(), -1),
        used_(b.order(), 0) {
    // BFS order per component so that most vertices have a mapped neighbour.
    std::vector<char> seen(a.order(), 0);
    for (Vertex r = 0; r < a.order(); ++r) {
      if (seen[r]) continue;
      std::queue<Vertex> q;
      q.push(r);
      seen[r] = 1;
      while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        order_.push_back(v);
        for (Vertex w : a.neighbors(v)) {
          if (!seen[w]) {
            seen[w] = 1;
            q.push(w);
          }
        }
      }
    }
  }

  bool run() { return extend(0); }

 private:
  bool consistent(Vertex v, Vertex image) const {
    if (color_[v] != color_[a_.order() + image]) return false;
    for (Vertex w : a_.neighbors(v)) {
      if (map_[w] >= 0 && !b_.adjacent(image, map_[w])) return false;
    }
    // Non-edges must map to non-edges: compare mapped-neighbour counts.
    int mapped_nb = 0;
    for (Vertex w : a_.neighbors(v)) mapped_nb += map_[w] >= 0;
    int image_nb = 0;
    for (Vertex w : b_.neighbors(image)) image_nb += used_[w] != 0;
    return mapped_nb == image_nb;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    Vertex anchor = -1;
    for (Vertex w : a_.neighbors(v)) {
      if (map_[w] >= 0) {
        anchor = map_[w];
        break;
      }
    }
    std::vector<Vertex> candidates;
    if (anchor >= 0) {
      candidates.assign(b_.neighbors(anchor).begin(), b_.neighbors(anchor).end());
    } else {
      candidates.resize(b_.order());
      for (Vertex i = 0; i < b_.order(); ++i) candidates[i] = i;
    }
    for (Vertex image : candidates) {
      if (used_[image] || !consistent(v, image)) continue;
      map_[v] = image;
      used_[image] = 1;
      if (extend(depth + 1)) return true;
      map_[v] = -1;
      used_[image] = 0;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<int> color_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto color = refine_colors(a, b);
  const int na = a.order();
  std::vector<int> ha(color.begin(), color.begin() + na);
  std::vector<int> hb(color.begin() + na, color.end());
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return false;
  return IsoSearch(a, b, std::move(color)).run();
}

// ---------------------------------------------------------------------------
// DOT

std::string to_dot(const Graph& g, const VertexSet& highlight,
                   const std::map<Vertex, std::string>& labels) {
  g.check(highlight);
  std::ostringstream out;
  out << "graph G {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    std::vector<std::string> attrs;
    if (auto it = labels.find(v); it != labels.end()) {
      attrs.push_back("label=\"" + it->second + "\"");
    }
    if (highlight.contains(v)) {
      attrs.push_back("style=filled");
      attrs.push_back("fillcolor=black");
      attrs.push_back("fontcolor=white");
    }
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) {
        out << (i ? ", " : "") << attrs[i];
      }
      out << "]";
    }
    out << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace spreadlab
