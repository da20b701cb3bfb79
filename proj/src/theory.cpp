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

#include "spreadlab/theory.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "spreadlab/decomposition.hpp"
#include "spreadlab/errors.hpp"

namespace spreadlab {

std::string to_string(PredictionKind kind) {
  switch (kind) {
    case PredictionKind::Exact:
      return "exact";
    case PredictionKind::TwoValues:
      return "two-values";
    case PredictionKind::UpperBound:
      return "upper-bound";
    case PredictionKind::Trivial:
      return "trivial";
    case PredictionKind::Derived:
      return "derived";
  }
  return "?";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Consistent:
      return "consistent";
    case Verdict::Violated:
      return "violated";
    case Verdict::Skipped:
      return "skipped";
  }
  return "?";
}

bool Prediction::admits(int value) const {
  switch (kind) {
    case PredictionKind::Exact:
    case PredictionKind::Trivial:
      return value == v1;
    case PredictionKind::TwoValues:
      return value == v1 || value == v2;
    case PredictionKind::UpperBound:
      return value <= v1;
    case PredictionKind::Derived:
      return true;
  }
  return false;
}

std::string Prediction::to_string() const {
  switch (kind) {
    case PredictionKind::Exact:
    case PredictionKind::Trivial:
      return std::to_string(v1);
    case PredictionKind::TwoValues:
      return "{" + std::to_string(v1) + "," + std::to_string(v2) + "}";
    case PredictionKind::UpperBound:
      return "<=" + std::to_string(v1);
    case PredictionKind::Derived:
      return "derived";
  }
  return "?";
}

namespace {

Prediction exact(int v, std::string why) { return {PredictionKind::Exact, v, 0, std::move(why)}; }
Prediction trivial(int v, std::string why) {
  return {PredictionKind::Trivial, v, 0, std::move(why)};
}
Prediction two(int a, int b, std::string why) {
  return {PredictionKind::TwoValues, a, b, std::move(why)};
}

// q >= 3 behaves as q = inf on cubic graphs.
int q_class(const SpreadParams& params) {
  if (params.q.is_infinite()) return 3;
  return std::min(params.q.value(), 3);
}

Prediction predict_k4(const SpreadParams& params) {
  const int q = q_class(params);
  if (params.p >= 4) return exact(4, "degree-below-p");
  if (params.p == 3) {
    if (q == 1) return two(3, 4, "cover-plus-triangle");
    return exact(3, "vertex-cover-percolation");
  }
  if (params.p == 2) {
    if (q == 1) return {PredictionKind::Derived, 0, 0, "k4-solver"};
    return exact(2, "k4-two-percolation");
  }
  if (q == 1) return {PredictionKind::Derived, 0, 0, "k4-solver"};
  if (q == 2) return exact(2, "adjacent-pair");
  return trivial(1, "single-vertex-forcing");
}

}  // namespace

Prediction predict(const Graph& g, const SpreadParams& params) {
  require_claw_free_cubic(g, /*allow_k4=*/true);
  if (g.order() == 4) return predict_k4(params);
  const int n = g.order();
  const int q = q_class(params);
  if (params.p >= 4) return exact(n, "degree-below-p");
  if (params.p == 1) {
    if (q >= 3) return trivial(1, "single-vertex-forcing");
    if (q == 2) return exact(2, "adjacent-pair");
    const int a = independence_number(g).value;
    if (n >= 14) return {PredictionKind::UpperBound, a, 0, "zero-forcing-alpha-bound-order-14"};
    return {PredictionKind::UpperBound, a + 1, 0, "zero-forcing-alpha-bound"};
  }
  if (params.p == 3) {
    const int beta = vertex_cover_number(g).value;
    if (q == 1) return two(beta, beta + 1, "cover-plus-triangle");
    return exact(beta, "vertex-cover-percolation");
  }
  const int u = unit_count(g);
  if (q == 1) return two(u + 1, u + 2, "triangle-seeded-traversal");
  if (q == 2) return two(u, u + 1, "traversal-plus-common-neighbour");
  if (classify_family(g).is_diamond_necklace()) return exact(u + 1, "diamond-necklace-percolation");
  return exact(u, "unit-traversal-percolation");
}

CellReport verify(const Graph& g, const SpreadParams& params, const SolveOptions& options) {
  CellReport r;
  r.params = params;
  r.prediction = predict(g, params);
  SolveResult s;
  try {
    s = sigma_exact(g, params, options);
  } catch (const InvalidArgument& e) {
    r.verdict = Verdict::Skipped;
    r.note = e.what();
    return r;
  }
  r.lower = s.lower;
  r.upper = s.upper;
  r.witness = s.witness;
  r.nodes_explored = s.nodes_explored;
  if (!s.exact) {
    r.verdict = Verdict::Skipped;
    r.note = "node budget exhausted";
    return r;
  }
  r.value = s.value;
  r.verdict = r.prediction.admits(s.value) ? Verdict::Consistent : Verdict::Violated;
  if (r.prediction.kind == PredictionKind::TwoValues && r.verdict == Verdict::Consistent) {
    r.attained = s.value == r.prediction.v1 ? "low" : "high";
  }
  if (r.prediction.kind == PredictionKind::Derived) r.note = "value derived by the exact solver";
  return r;
}

int SurveyReport::violations() const {
  int v = 0;
  for (const auto& [_, s] : stats) v += s.violated;
  return v;
}

int default_thread_count() {
  if (const char* env = std::getenv("SPREADLAB_THREADS")) {
    const int t = std::atoi(env);
    if (t > 0) return t;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SurveyReport survey(const std::vector<SurveyInstance>& instances,
                    const std::vector<SpreadParams>& cells, const SolveOptions& options,
                    int threads) {
  SurveyReport out;
  out.instances.resize(instances.size());
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& inst = instances[i];
    auto& rep = out.instances[i];
    rep.id = inst.id;
    rep.name = inst.name;
    rep.order = inst.graph.order();
    rep.family = classify_family(inst.graph).name();
    rep.units = inst.graph.order() == 4 ? 0 : unit_count(inst.graph);
    rep.cells.resize(cells.size());
  }

  const std::size_t tasks = instances.size() * cells.size();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next++) < tasks;) {
      const std::size_t i = t / cells.size(), c = t % cells.size();
      out.instances[i].cells[c] = verify(instances[i].graph, cells[c], options);
    }
  };
  if (threads <= 0) threads = default_thread_count();
  threads = static_cast<int>(std::min<std::size_t>(threads, std::max<std::size_t>(tasks, 1)));
  std::vector<std::jthread> pool;
  for (int k = 1; k < threads; ++k) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (const auto& rep : out.instances) {
    for (const auto& cell : rep.cells) {
      auto& s = out.stats[cell.params.to_string()];
      switch (cell.verdict) {
        case Verdict::Consistent:
          ++s.consistent;
          break;
        case Verdict::Violated:
          ++s.violated;
          break;
        case Verdict::Skipped:
          ++s.skipped;
          break;
      }
      if (cell.attained == "low") ++s.attained_low;
      if (cell.attained == "high") ++s.attained_high;
    }
  }
  return out;
}

std::vector<SpreadParams> parse_cells(const std::string& text) {
  std::vector<SpreadParams> out;
  std::string norm = text;
  for (char& c : norm)
    if (c == ';') c = ' ';
  std::istringstream in(norm);
  std::string tok;
  while (in >> tok) {
    const auto comma = tok.find(',');
    if (comma == std::string::npos) {
      throw InvalidArgument("cell '" + tok + "' must have the form p,q");
    }
    const std::string ps = tok.substr(0, comma);
    int p = 0;
    try {
      std::size_t used = 0;
      p = std::stoi(ps, &used);
      if (used != ps.size()) throw std::invalid_argument(ps);
    } catch (const std::exception&) {
      throw InvalidArgument("cell '" + tok + "': p must be a positive integer");
    }
    out.emplace_back(p, WhiteLimit::parse(tok.substr(comma + 1)));
  }
  if (out.empty()) throw InvalidArgument("no cells given");
  return out;
}

std::vector<SpreadParams> standard_cells() {
  return {SpreadParams(1, 2), SpreadParams(1, 3), SpreadParams(2, 1),
          SpreadParams(2, 2), SpreadParams(2, 3), SpreadParams(3, 1),
          SpreadParams(3, 2), SpreadParams(3, 3), SpreadParams(4, 1)};
}

}  // namespace spreadlab
