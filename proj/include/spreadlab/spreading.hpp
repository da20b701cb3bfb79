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

#ifndef SPREADLAB_SPREADING_HPP_
#define SPREADLAB_SPREADING_HPP_

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spreadlab/graph.hpp"

namespace spreadlab {

// Bound on the number of white neighbours a witness may have. Infinity is a
// distinct state, not a large number.
class WhiteLimit {
 public:
  static WhiteLimit finite(int q);
  static WhiteLimit infinity() { return WhiteLimit(); }

  bool is_infinite() const { return !value_.has_value(); }
  int value() const;  // throws InvalidArgument when infinite
  bool admits(int white_count) const { return is_infinite() || white_count <= *value_; }
  // Parses a positive integer or "inf".
  static WhiteLimit parse(const std::string& text);
  std::string to_string() const;  // "3" or "inf"

  friend bool operator==(const WhiteLimit&, const WhiteLimit&) = default;

 private:
  WhiteLimit() = default;
  explicit WhiteLimit(int q) : value_(q) {}
  std::optional<int> value_;
};

struct SpreadParams {
  int p = 1;
  WhiteLimit q = WhiteLimit::infinity();

  SpreadParams() = default;
  // Throws InvalidArgument when p < 1.
  SpreadParams(int p, WhiteLimit q);
  SpreadParams(int p, int q) : SpreadParams(p, WhiteLimit::finite(q)) {}

  std::string to_string() const;  // "(2,inf)"
  friend bool operator==(const SpreadParams&, const SpreadParams&) = default;
};

struct ColorState {
  VertexSet blue;
};

struct TraceEntry {
  Vertex vertex;
  Vertex witness;      // blue neighbour with at most q white neighbours
  int blue_neighbors;  // at firing time
  int round;           // 1-based; synchronous rounds or sequential steps
};

struct SpreadTrace {
  std::vector<TraceEntry> entries;
  int rounds = 0;
};

enum class Schedule {
  Sequential,   // fire the least-index eligible vertex, one per step
  Synchronous,  // fire every eligible vertex at once, one round per layer
};

struct ClosureResult {
  VertexSet blue;
  SpreadTrace trace;
};

// Whether white vertex w may turn blue; on success returns the least-index
// witness. Throws InvalidArgument when w is already blue.
std::optional<Vertex> eligible(const Graph& g, const ColorState& state, const SpreadParams& params,
                               Vertex w);

ClosureResult closure(const Graph& g, const VertexSet& s, const SpreadParams& params,
                      Schedule schedule = Schedule::Sequential);

// Closure set reached when eligible vertices fire in the order given by a
// random permutation each step. For confluence testing.
VertexSet closure_random_order(const Graph& g, const VertexSet& s, const SpreadParams& params,
                               std::mt19937_64& rng);

bool is_spreading_set(const Graph& g, const VertexSet& s, const SpreadParams& params);

ClosureResult zero_forcing_closure(const Graph& g, const VertexSet& s);
ClosureResult k_forcing_closure(const Graph& g, const VertexSet& s, int k);
ClosureResult r_percolation_closure(const Graph& g, const VertexSet& s, int r);

// Re-applies a trace from s, checking every entry's firing conditions.
// Returns the final blue set; throws InvalidArgument on an invalid entry.
VertexSet replay(const Graph& g, const VertexSet& s, const SpreadParams& params,
                 const SpreadTrace& trace);

}  // namespace spreadlab

#endif  // SPREADLAB_SPREADING_HPP_
