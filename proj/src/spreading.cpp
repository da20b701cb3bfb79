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

#include "spreadlab/spreading.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "spreadlab/errors.hpp"

namespace spreadlab {

WhiteLimit WhiteLimit::finite(int q) {
  if (q < 1) throw InvalidArgument("q must be a positive integer or inf, got " + std::to_string(q));
  return WhiteLimit(q);
}

int WhiteLimit::value() const {
  if (!value_) throw InvalidArgument("q is infinite");
  return *value_;
}

WhiteLimit WhiteLimit::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "Infinity") return infinity();
  int q = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), q);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidArgument("q must be a positive integer or 'inf', got '" + text + "'");
  }
  return finite(q);
}

std::string WhiteLimit::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("inf");
}

SpreadParams::SpreadParams(int p_, WhiteLimit q_) : p(p_), q(q_) {
  if (p < 1) throw InvalidArgument("p must be at least 1, got " + std::to_string(p));
}

std::string SpreadParams::to_string() const {
  return "(" + std::to_string(p) + "," + q.to_string() + ")";
}

namespace {

// Incremental colouring state: per-vertex blue-neighbour counters.
class Engine {
 public:
  Engine(const Graph& g, const VertexSet& s, const SpreadParams& params)
      : g_(g), params_(params), blue_(g.order(), 0), blue_nb_(g.order(), 0) {
    g.check(s);
    for (Vertex v : s) paint(v);
  }

  bool is_blue(Vertex v) const { return blue_[v] != 0; }
  int blue_neighbors(Vertex v) const { return blue_nb_[v]; }
  int white_neighbors(Vertex v) const { return g_.degree(v) - blue_nb_[v]; }

  std::optional<Vertex> witness(Vertex w) const {
    if (blue_nb_[w] < params_.p) return std::nullopt;
    for (Vertex u : g_.neighbors(w)) {
      if (blue_[u] && params_.q.admits(white_neighbors(u))) return u;
    }
    return std::nullopt;
  }

  void paint(Vertex v) {
    if (blue_[v]) return;
    blue_[v] = 1;
    for (Vertex u : g_.neighbors(v)) {
      if (++blue_nb_[u] >= params_.p && !blue_[u]) candidates_.insert(u);
    }
    candidates_.erase(v);
  }

  const std::set<Vertex>& candidates() const { return candidates_; }

  VertexSet blue_set() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (blue_[v]) out.push_back(v);
    return VertexSet(std::move(out));
  }

 private:
  const Graph& g_;
  SpreadParams params_;
  std::vector<char> blue_;
  std::vector<int> blue_nb_;
  // White vertices with at least p blue neighbours.
  std::set<Vertex> candidates_;
};

}  // namespace

std::optional<Vertex> eligible(const Graph& g, const ColorState& state, const SpreadParams& params,
                               Vertex w) {
  if (!g.has_vertex(w)) throw InvalidArgument("vertex " + std::to_string(w) + " out of range");
  if (state.blue.contains(w)) {
    throw InvalidArgument("vertex " + std::to_string(w) + " is already blue");
  }
  Engine e(g, state.blue, params);
  return e.witness(w);
}

ClosureResult closure(const Graph& g, const VertexSet& s, const SpreadParams& params,
                      Schedule schedule) {
  Engine e(g, s, params);
  ClosureResult out;
  if (schedule == Schedule::Sequential) {
    int step = 0;
    for (;;) {
      bool fired = false;
      for (Vertex w : e.candidates()) {
        if (auto u = e.witness(w)) {
          out.trace.entries.push_back({w, *u, e.blue_neighbors(w), ++step});
          e.paint(w);
          fired = true;
          break;
        }
      }
      if (!fired) break;
    }
    out.trace.rounds = step;
  } else {
    int round = 0;
    for (;;) {
      std::vector<TraceEntry> layer;
      for (Vertex w : e.candidates()) {
        if (auto u = e.witness(w)) layer.push_back({w, *u, e.blue_neighbors(w), round + 1});
      }
      if (layer.empty()) break;
      ++round;
      for (const auto& t : layer) e.paint(t.vertex);
      out.trace.entries.insert(out.trace.entries.end(), layer.begin(), layer.end());
    }
    out.trace.rounds = round;
  }
  out.blue = e.blue_set();
  return out;
}

VertexSet closure_random_order(const Graph& g, const VertexSet& s, const SpreadParams& params,
                               std::mt19937_64& rng) {
  Engine e(g, s, params);
  std::vector<Vertex> order(g.order());
  for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
  for (;;) {
    std::shuffle(order.begin(), order.end(), rng);
    bool fired = false;
    for (Vertex w : order) {
      if (!e.is_blue(w) && e.witness(w)) {
        e.paint(w);
        fired = true;
        break;
      }
    }
    if (!fired) break;
  }
  return e.blue_set();
}

bool is_spreading_set(const Graph& g, const VertexSet& s, const SpreadParams& params) {
  return closure(g, s, params).blue.size() == g.order();
}

ClosureResult zero_forcing_closure(const Graph& g, const VertexSet& s) {
  return closure(g, s, SpreadParams(1, 1));
}

ClosureResult k_forcing_closure(const Graph& g, const VertexSet& s, int k) {
  return closure(g, s, SpreadParams(1, k));
}

ClosureResult r_percolation_closure(const Graph& g, const VertexSet& s, int r) {
  return closure(g, s, SpreadParams(r, WhiteLimit::infinity()));
}

VertexSet replay(const Graph& g, const VertexSet& s, const SpreadParams& params,
                 const SpreadTrace& trace) {
  Engine e(g, s, params);
  // Entries sharing a round are checked against the state at the start of
  // that round, then painted together.
  const auto& entries = trace.entries;
  std::size_t i = 0;
  while (i < entries.size()) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].round == entries[i].round) ++j;
    for (std::size_t k = i; k < j; ++k) {
      const auto& t = entries[k];
      if (!g.has_vertex(t.vertex) || !g.has_vertex(t.witness)) {
        throw InvalidArgument("trace entry names a vertex outside the graph");
      }
      if (e.is_blue(t.vertex)) {
        throw InvalidArgument("trace recolors vertex " + std::to_string(t.vertex) + " twice");
      }
      const bool ok = e.blue_neighbors(t.vertex) >= params.p && e.is_blue(t.witness) &&
                      g.adjacent(t.vertex, t.witness) &&
                      params.q.admits(e.white_neighbors(t.witness));
      if (!ok) {
        throw InvalidArgument("trace entry for vertex " + std::to_string(t.vertex) +
                              " violates the spreading rule");
      }
    }
    for (std::size_t k = i; k < j; ++k) e.paint(entries[k].vertex);
    i = j;
  }
  return e.blue_set();
}

}  // namespace spreadlab
