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

#ifndef SPREADLAB_THEORY_HPP_
#define SPREADLAB_THEORY_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spreadlab/graph.hpp"
#include "spreadlab/solvers.hpp"
#include "spreadlab/spreading.hpp"

namespace spreadlab {

enum class PredictionKind {
  Exact,       // value == v1
  TwoValues,   // value in {v1, v2}, v1 < v2
  UpperBound,  // value <= v1
  Trivial,     // value == v1, immediate from the definitions
  Derived,     // no closed form; the exact solver supplies the value
};

std::string to_string(PredictionKind kind);

struct Prediction {
  PredictionKind kind = PredictionKind::Derived;
  int v1 = 0;
  int v2 = 0;
  std::string provenance;

  bool admits(int value) const;
  std::string to_string() const;  // "5", "{5,6}", "<=7", "derived"
};

// Closed-form spreading number for a connected claw-free cubic graph,
// including K_4 (own table). Throws GraphClassError outside the class.
Prediction predict(const Graph& g, const SpreadParams& params);

enum class Verdict { Consistent, Violated, Skipped };

std::string to_string(Verdict v);

struct CellReport {
  SpreadParams params;
  Prediction prediction;
  Verdict verdict = Verdict::Skipped;
  std::optional<int> value;  // exact value when the solver finished
  int lower = 0;
  int upper = 0;
  VertexSet witness;
  std::int64_t nodes_explored = 0;
  // TwoValues cells: "low" or "high"; empty otherwise.
  std::string attained;
  std::string note;
};

// Runs the exact solver and checks the value against predict().
CellReport verify(const Graph& g, const SpreadParams& params, const SolveOptions& options = {});

struct SurveyInstance {
  std::string id;
  std::string name;
  Graph graph;
};

struct InstanceReport {
  std::string id;
  std::string name;
  int order = 0;
  int units = 0;  // 0 for K_4
  std::string family;
  std::vector<CellReport> cells;
};

struct CellStats {
  int consistent = 0;
  int violated = 0;
  int skipped = 0;
  int attained_low = 0;
  int attained_high = 0;
};

struct SurveyReport {
  std::vector<InstanceReport> instances;  // input order
  std::map<std::string, CellStats> stats;  // keyed by SpreadParams::to_string()
  int violations() const;
};

// Worker count: SPREADLAB_THREADS if set and positive, else the hardware
// concurrency (at least 1).
int default_thread_count();

// Verifies every (instance, cell) pair; tasks run on up to `threads`
// workers (0 selects default_thread_count()). Output order is canonical.
SurveyReport survey(const std::vector<SurveyInstance>& instances,
                    const std::vector<SpreadParams>& cells, const SolveOptions& options = {},
                    int threads = 0);

// Parses "2,2" or "2,inf"; several cells separated by ';' or whitespace.
std::vector<SpreadParams> parse_cells(const std::string& text);

// The nine cells (1,2) (1,3) (2,1) (2,2) (2,3) (3,1) (3,2) (3,3) (4,1).
std::vector<SpreadParams> standard_cells();

}  // namespace spreadlab

#endif  // SPREADLAB_THEORY_HPP_
