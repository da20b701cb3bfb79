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

#ifndef SPREADLAB_SOLVERS_HPP_
#define SPREADLAB_SOLVERS_HPP_

#include <chrono>
#include <cstdint>
#include <optional>

#include "spreadlab/graph.hpp"
#include "spreadlab/spreading.hpp"

namespace spreadlab {

struct IndependentSetResult {
  int value = 0;
  VertexSet witness;
};

// Exact maximum independent set by branch and bound (branch on a
// maximum-degree vertex, greedy clique-cover bound).
IndependentSetResult independence_number(const Graph& g);

// beta(G) = n - alpha(G), witnessed by the complement of a maximum
// independent set.
IndependentSetResult vertex_cover_number(const Graph& g);

// Maximum independent set among those meeting every triangle of g, or
// nullopt when no independent set meets every triangle (e.g. K_4).
std::optional<IndependentSetResult> max_triangle_hitting_independent_set(const Graph& g);

struct SolveOptions {
  std::int64_t node_budget = 100'000'000;
  // Start the size search at lower_bound() (the closed-form bounds) instead
  // of structural_lower_bound().
  bool start_from_theorem_bounds = false;
};

struct SolveResult {
  int value = 0;  // exact value, or the best upper bound when !exact
  VertexSet witness;
  std::int64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
  bool exact = true;
  int lower = 0;  // proven lower bound (== value when exact)
  int upper = 0;  // size of the best known spreading set
};

// Vertex limit for sigma_exact and zero_forcing_number.
inline constexpr int kMaxSolverOrder = 64;

// Minimum (p,q)-spreading set by iterative deepening on the set size. Within
// a size, a depth-first search over vertices in index order (include before
// exclude) returns the lexicographically least minimum witness. The (1,1)
// case is delegated to zero_forcing_number. Throws InvalidArgument when
// n > kMaxSolverOrder.
SolveResult sigma_exact(const Graph& g, const SpreadParams& params, const SolveOptions& options = {});

// m(G, r) = sigma_(r, inf)(G).
SolveResult percolation_number(const Graph& g, int r, const SolveOptions& options = {});

// Z(G) by a shortest-path search over forcing-closed vertex sets. The
// witness is deterministic but need not be lexicographically least.
SolveResult zero_forcing_number(const Graph& g, const SolveOptions& options = {});

// Bound from closed-form results: min(p, n); the number of vertices of
// degree below p; on connected claw-free cubic G != K_4 additionally u(G)
// for p >= 2, u(G) + 1 for (2,1), beta(G) for p = 3 with q >= 3, and n for
// p >= 4.
int lower_bound(const Graph& g, const SpreadParams& params);

// Bound from trapped subsets only: a set H in which every vertex has fewer
// than p neighbours outside H must meet every spreading set. Combines a sum
// over disjoint blocks with a vertex cover of the trapped edges.
int structural_lower_bound(const Graph& g, const SpreadParams& params);

// A minimal (inclusion-wise) spreading set found by deleting vertices from
// V(G) in decreasing index order while the rest still spreads.
VertexSet greedy_spreading_set(const Graph& g, const SpreadParams& params);

}  // namespace spreadlab

#endif  // SPREADLAB_SOLVERS_HPP_
