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

#ifndef SPREADLAB_GRAPH_HPP_
#define SPREADLAB_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spreadlab {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// A sorted, duplicate-free set of vertex indices. Ordering is lexicographic
// on the sorted member sequence, which is the order used for canonical
// witnesses.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::vector<Vertex> members);

  // {0, 1, ..., n-1}
  static VertexSet all(int n);

  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);
  bool is_subset_of(const VertexSet& other) const;

  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<Vertex>& members() const { return members_; }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  Vertex front() const { return members_.front(); }
  Vertex back() const { return members_.back(); }

  VertexSet set_union(const VertexSet& other) const;
  VertexSet set_difference(const VertexSet& other) const;
  VertexSet set_intersection(const VertexSet& other) const;

  std::string to_string() const;  // "{0, 3, 7}"

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Vertex> members_;
};

// Immutable simple undirected graph on vertices 0..n-1. Adjacency lists are
// sorted. Construction validates symmetry, loops and parallel edges, so every
// Graph value satisfies the simple-graph invariants.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);  // edgeless

  // Throws InvalidArgument on self-loops, duplicate edges or indices
  // outside [0, n).
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;
  bool has_vertex(Vertex v) const { return v >= 0 && v < order(); }

  // All edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  // Throws InvalidArgument if some member is not a vertex of this graph.
  void check(const VertexSet& s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  int edge_count_ = 0;
};

// Edge-list text: one "u v" pair per line, '#' starts a comment, blank lines
// are ignored. n = 1 + max index, unless a "# order: N" comment raises it
// (the serializer emits one so isolated trailing vertices survive).
// Throws ParseError carrying the offending line number.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

bool is_cubic(const Graph& g);
bool is_connected(const Graph& g);
// No vertex has three pairwise non-adjacent neighbors.
bool is_claw_free(const Graph& g);
bool is_complete(const Graph& g);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_vertex_cover(const Graph& g, const VertexSet& s);

// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

// Every triangle {a < b < c} of g, lexicographically sorted.
std::vector<VertexSet> triangles(const Graph& g);

struct VertexDeletion {
  Graph graph;
  std::vector<Vertex> old_to_new;  // -1 for deleted vertices
  std::vector<Vertex> new_to_old;
};

// G - S with the index remapping (survivors keep their relative order).
VertexDeletion delete_vertices(const Graph& g, const VertexSet& s);

// Graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

// Backtracking isomorphism test with colour-refinement pruning. Intended for
// the structured graphs in this library; worst case is exponential.
bool are_isomorphic(const Graph& a, const Graph& b);

// DOT rendering; highlighted vertices are filled. `labels` (vertex index to
// display name) is optional.
std::string to_dot(const Graph& g, const VertexSet& highlight = {},
                   const std::map<Vertex, std::string>& labels = {});

}  // namespace spreadlab

#endif  // SPREADLAB_GRAPH_HPP_
