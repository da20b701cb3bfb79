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

#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spreadlab/constructions.hpp"
#include "spreadlab/decomposition.hpp"
#include "spreadlab/errors.hpp"
#include "spreadlab/families.hpp"
#include "spreadlab/solvers.hpp"
#include "spreadlab/spreading.hpp"
#include "spreadlab/theory.hpp"

namespace spreadlab::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string path;
  std::string family;
  int k = 0;
  int triangles = -1;
  int diamonds = -1;
  std::uint64_t seed = 0;
};

void add_source_options(CLI::App* sub, GraphSource& src, bool with_path = true) {
  if (with_path) sub->add_option("--graph,-g", src.path, "Edge-list file");
  sub->add_option("--family,-f", src.family, "Family: N, F, H, fig6, K4 or random");
  sub->add_option("--k,-k", src.k, "Family parameter (N_k, F_2k, H_2k)");
  sub->add_option("--triangles", src.triangles, "Triangle-units (random family)");
  sub->add_option("--diamonds", src.diamonds, "Diamond-units (random family)");
  sub->add_option("--seed", src.seed, "Seed (random family)");
}

LabeledGraph generate_family(const GraphSource& src) {
  const std::string& f = src.family;
  if (f == "N") return diamond_necklace(src.k);
  if (f == "F") return triangle_necklace(src.k);
  if (f == "H") return triangle_diamond_necklace(src.k);
  if (f == "fig6") return figure6_graph();
  if (f == "K4") {
    auto g = complete_graph(4);
    g.family = "K";
    return g;
  }
  if (f == "random") {
    if (src.triangles < 0 || src.diamonds < 0) {
      throw UsageError("--family random needs --triangles and --diamonds");
    }
    return random_claw_free_cubic(src.triangles, src.diamonds, src.seed);
  }
  throw UsageError("unknown family '" + f + "' (expected N, F, H, fig6, K4 or random)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

struct Loaded {
  Graph graph;
  std::string name;
  std::map<Vertex, std::string> labels;
};

Loaded load(const GraphSource& src) {
  const bool has_path = !src.path.empty(), has_family = !src.family.empty();
  if (has_path == has_family) throw UsageError("give exactly one of --graph or --family");
  if (has_path) return {parse_edge_list(read_file(src.path)), src.path, {}};
  auto lg = generate_family(src);
  return {lg.graph, lg.display_name(), lg.names_by_vertex()};
}

Json graph_json(const Graph& g) {
  Json j;
  j["n"] = g.order();
  j["m"] = g.size();
  try {
    const auto fam = classify_family(g);
    j["family"] = fam.name();
    j["units"] = g.order() == 4 ? Json(nullptr) : Json(unit_count(g));
  } catch (const GraphClassError&) {
    j["family"] = "outside-class";
    j["units"] = nullptr;
  }
  return j;
}

Json query_json(const SpreadParams& params) {
  Json j;
  j["p"] = params.p;
  j["q"] = params.q.is_infinite() ? Json(nullptr) : Json(params.q.value());
  j["q_infinite"] = params.q.is_infinite();
  return j;
}

Json set_json(const VertexSet& s) { return Json(s.members()); }

Json prediction_json(const Prediction& p) {
  Json j;
  j["kind"] = to_string(p.kind);
  switch (p.kind) {
    case PredictionKind::Exact:
    case PredictionKind::Trivial:
      j["value"] = p.v1;
      break;
    case PredictionKind::TwoValues:
      j["values"] = {p.v1, p.v2};
      break;
    case PredictionKind::UpperBound:
      j["bound"] = p.v1;
      break;
    case PredictionKind::Derived:
      break;
  }
  j["provenance"] = p.provenance;
  j["display"] = p.to_string();
  return j;
}

std::optional<Prediction> try_predict(const Graph& g, const SpreadParams& params) {
  try {
    return predict(g, params);
  } catch (const GraphClassError&) {
    return std::nullopt;
  }
}

SpreadParams read_params(int p, const std::string& q, bool infinity) {
  if (infinity) return SpreadParams(p, WhiteLimit::infinity());
  if (q.empty()) throw UsageError("give --q (a positive integer or 'inf') or --infinity");
  return SpreadParams(p, WhiteLimit::parse(q));
}

VertexSet parse_vertex_list(const std::string& spec, const Graph& g) {
  std::string text = spec;
  if (!text.empty() && text[0] == '@') text = read_file(text.substr(1));
  for (char& c : text)
    if (c == ',' || c == '{' || c == '}' || c == '[' || c == ']') c = ' ';
  std::istringstream in(text);
  std::vector<Vertex> vs;
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') {
      std::getline(in, tok);
      continue;
    }
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      vs.push_back(v);
    } catch (const std::exception&) {
      throw InvalidArgument("bad vertex '" + tok + "' in blue set");
    }
  }
  VertexSet s(std::move(vs));
  g.check(s);
  return s;
}

void emit_json(const Json& j, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << j.dump(2) << "\n";
  } else {
    write_file(path, j.dump(2) + "\n");
  }
}

double seconds(std::chrono::nanoseconds d) { return std::chrono::duration<double>(d).count(); }

// ---------------------------------------------------------------------------

struct GenerateCmd {
  GraphSource src;
  std::string output;
};

int do_generate(const GenerateCmd& c, std::ostream& out) {
  if (c.src.family.empty()) throw UsageError("generate needs --family");
  const auto lg = generate_family(c.src);
  const std::string edges = to_edge_list(lg.graph);
  Json side;
  side["schema"] = 1;
  side["family"] = lg.family;
  side["parameter"] = lg.parameter;
  side["name"] = lg.display_name();
  if (lg.family == "random") {
    side["triangles"] = c.src.triangles;
    side["diamonds"] = c.src.diamonds;
    side["seed"] = c.src.seed;
  }
  side["n"] = lg.graph.order();
  side["m"] = lg.graph.size();
  Json labels = Json::object();
  for (const auto& [v, name] : lg.names_by_vertex()) labels[name] = v;
  side["labels"] = labels;
  if (c.output.empty() || c.output == "-") {
    out << edges;
  } else {
    write_file(c.output, edges);
    write_file(c.output + ".json", side.dump(2) + "\n");
    out << "wrote " << c.output << " and " << c.output << ".json (n=" << lg.graph.order()
        << ", m=" << lg.graph.size() << ")\n";
  }
  return kExitOk;
}

struct AnalyzeCmd {
  GraphSource src;
  bool json = false;
  bool dot = false;
};

int do_analyze(const AnalyzeCmd& c, std::ostream& out) {
  const auto loaded = load(c.src);
  const Graph& g = loaded.graph;
  if (c.dot) {
    out << to_dot(g, {}, loaded.labels);
    return kExitOk;
  }
  require_claw_free_cubic(g, /*allow_k4=*/true);
  const auto fam = classify_family(g);
  const auto alpha = independence_number(g);
  Json j;
  j["schema"] = 1;
  j["graph"] = graph_json(g);
  j["cubic"] = is_cubic(g);
  j["claw_free"] = is_claw_free(g);
  j["connected"] = is_connected(g);
  j["alpha"] = alpha.value;
  j["beta"] = g.order() - alpha.value;
  Json units = Json::array(), adjacency = Json::array();
  if (g.order() != 4) {
    const auto p = delta_d_partition(g);
    for (int i = 0; i < p.size(); ++i) {
      Json u;
      u["index"] = i;
      u["kind"] = to_string(p.unit(i).kind);
      u["vertices"] = set_json(p.unit(i).vertices);
      u["dominating"] = set_json(p.unit(i).dominating);
      units.push_back(u);
    }
    for (int i = 0; i < p.size(); ++i) {
      for (int k : p.adjacent_units(i)) {
        if (k < i) continue;
        Json a;
        a["units"] = {i, k};
        a["multiplicity"] = p.bond_count(i, k);
        adjacency.push_back(a);
      }
    }
  }
  j["units"] = units;
  j["unit_adjacency"] = adjacency;
  if (c.json) {
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "graph: " << loaded.name << " n=" << g.order() << " m=" << g.size() << "\n";
  out << "family: " << fam.name() << "\n";
  out << "alpha=" << alpha.value << " beta=" << g.order() - alpha.value << "\n";
  out << "u=" << units.size() << "\n";
  for (const auto& u : units) {
    out << "  unit " << u["index"].get<int>() << " " << u["kind"].get<std::string>() << " "
        << VertexSet(u["vertices"].get<std::vector<Vertex>>()).to_string() << "\n";
  }
  for (const auto& a : adjacency) {
    out << "  bond " << a["units"][0].get<int>() << "-" << a["units"][1].get<int>() << " x"
        << a["multiplicity"].get<int>() << "\n";
  }
  return kExitOk;
}

struct SimulateCmd {
  GraphSource src;
  int p = 1;
  std::string q;
  bool infinity = false;
  std::string blue;
  bool json = false;
  bool sync = false;
};

int do_simulate(const SimulateCmd& c, std::ostream& out) {
  const auto loaded = load(c.src);
  const Graph& g = loaded.graph;
  const auto params = read_params(c.p, c.q, c.infinity);
  const VertexSet s = parse_vertex_list(c.blue, g);
  const auto res = closure(g, s, params, c.sync ? Schedule::Synchronous : Schedule::Sequential);
  const bool spreading = res.blue.size() == g.order();
  if (c.json) {
    Json j;
    j["schema"] = 1;
    j["graph"] = graph_json(g);
    j["query"] = query_json(params);
    j["initial"] = set_json(s);
    j["schedule"] = c.sync ? "synchronous" : "sequential";
    Json trace = Json::array();
    for (const auto& t : res.trace.entries) {
      trace.push_back({{"round", t.round},
                       {"vertex", t.vertex},
                       {"witness", t.witness},
                       {"blue_neighbors", t.blue_neighbors}});
    }
    j["trace"] = trace;
    j["rounds"] = res.trace.rounds;
    j["final"] = set_json(res.blue);
    j["spreading"] = spreading;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "initial " << s.to_string() << " under " << params.to_string() << "\n";
  for (const auto& t : res.trace.entries) {
    out << "round " << t.round << ": " << t.vertex << " <- witness " << t.witness << " ("
        << t.blue_neighbors << " blue neighbours)\n";
  }
  out << "verdict: " << (spreading ? "spreading" : "not spreading") << " (" << res.blue.size()
      << "/" << g.order() << " blue)\n";
  return kExitOk;
}

struct SolveCmd {
  GraphSource src;
  int p = 1;
  std::string q;
  bool infinity = false;
  std::int64_t budget = SolveOptions{}.node_budget;
  bool json = false;
  bool timing = false;
};

int do_solve(const SolveCmd& c, std::ostream& out) {
  const auto loaded = load(c.src);
  const Graph& g = loaded.graph;
  const auto params = read_params(c.p, c.q, c.infinity);
  SolveOptions opt;
  opt.node_budget = c.budget;
  const auto res = sigma_exact(g, params, opt);
  const auto pred = try_predict(g, params);
  if (c.json) {
    Json j;
    j["schema"] = 1;
    j["graph"] = graph_json(g);
    j["query"] = query_json(params);
    Json r;
    if (res.exact) {
      r["value"] = res.value;
    } else {
      r["interval"] = {res.lower, res.upper};
    }
    r["exact"] = res.exact;
    r["witness"] = set_json(res.witness);
    r["nodes_explored"] = res.nodes_explored;
    if (pred) {
      r["prediction"] = prediction_json(*pred);
      r["verdict"] = !res.exact ? "skipped" : pred->admits(res.value) ? "consistent" : "violated";
    }
    j["result"] = r;
    if (c.timing) j["timing"] = {{"seconds", seconds(res.elapsed)}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (res.exact) {
    out << "sigma=" << res.value << "\n";
  } else {
    out << "sigma in [" << res.lower << ", " << res.upper << "] (node budget exhausted)\n";
  }
  out << "witness=" << res.witness.to_string() << "\n";
  out << "nodes=" << res.nodes_explored << "\n";
  if (pred) out << "prediction=" << pred->to_string() << " (" << pred->provenance << ")\n";
  if (c.timing) out << "seconds=" << seconds(res.elapsed) << "\n";
  return kExitOk;
}

struct ConstructCmd {
  GraphSource src;
  std::string method;
  bool json = false;
  bool dot = false;
};

int do_construct(const ConstructCmd& c, std::ostream& out) {
  const auto loaded = load(c.src);
  const Graph& g = loaded.graph;
  const auto r = construct(g, c.method);
  if (c.dot) {
    out << to_dot(g, r.set, loaded.labels);
    return kExitOk;
  }
  const bool spreading_method = c.method != "ind-set" && c.method != "cover";
  if (c.json) {
    Json j;
    j["schema"] = 1;
    j["graph"] = graph_json(g);
    j["method"] = c.method;
    if (spreading_method) j["query"] = query_json(r.target);
    j["set"] = set_json(r.set);
    j["size"] = r.set.size();
    j["claimed_size_formula"] = r.claimed_size_formula;
    j["claimed_size"] = r.claimed_size;
    j["validated"] = r.validated;
    j["log"] = r.log;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "method=" << c.method << "\n";
  out << "set=" << r.set.to_string() << "\n";
  out << "size=" << r.set.size() << " (" << r.claimed_size_formula << " = " << r.claimed_size
      << ")\n";
  if (spreading_method) out << "target=" << r.target.to_string() << "\n";
  out << "validated=" << (r.validated ? "yes" : "no") << "\n";
  for (const auto& line : r.log) out << "  " << line << "\n";
  return kExitOk;
}

struct VerifyCmd {
  GraphSource src;
  int count = 1;
  std::string cells;
  std::int64_t budget = SolveOptions{}.node_budget;
  std::string json;
  int threads = 0;
};

int do_verify(const VerifyCmd& c, std::ostream& out) {
  std::vector<SurveyInstance> instances;
  if (!c.src.path.empty()) {
    if (!c.src.family.empty()) throw UsageError("give exactly one of --graph or --family");
    instances.push_back({"0", c.src.path, parse_edge_list(read_file(c.src.path))});
  } else if (c.src.family == "fixtures") {
    int id = 0;
    for (auto& lg : standard_fixtures()) {
      instances.push_back({std::to_string(id++), lg.display_name(), lg.graph});
    }
  } else if (c.src.family == "random") {
    if (c.count < 1) throw UsageError("--count must be positive");
    for (int i = 0; i < c.count; ++i) {
      GraphSource s = c.src;
      s.seed = c.src.seed + static_cast<std::uint64_t>(i);
      auto lg = generate_family(s);
      instances.push_back({std::to_string(i),
                           "random(" + std::to_string(s.triangles) + "," +
                               std::to_string(s.diamonds) + ",seed=" + std::to_string(s.seed) + ")",
                           lg.graph});
    }
  } else if (!c.src.family.empty()) {
    auto lg = generate_family(c.src);
    instances.push_back({"0", lg.display_name(), lg.graph});
  } else {
    throw UsageError("give exactly one of --graph or --family");
  }
  const auto cells = c.cells.empty() ? standard_cells() : parse_cells(c.cells);
  SolveOptions opt;
  opt.node_budget = c.budget;
  const auto report = survey(instances, cells, opt, c.threads);

  Json j;
  j["schema"] = 1;
  Json insts = Json::array();
  for (std::size_t i = 0; i < report.instances.size(); ++i) {
    const auto& rep = report.instances[i];
    Json ij;
    ij["id"] = rep.id;
    ij["name"] = rep.name;
    Json gj = graph_json(instances[i].graph);
    ij["graph"] = gj;
    Json cj = Json::array();
    for (const auto& cell : rep.cells) {
      Json x;
      x["query"] = query_json(cell.params);
      x["prediction"] = prediction_json(cell.prediction);
      if (cell.value) {
        x["value"] = *cell.value;
      } else {
        x["interval"] = {cell.lower, cell.upper};
      }
      x["witness"] = set_json(cell.witness);
      x["verdict"] = to_string(cell.verdict);
      if (!cell.attained.empty()) x["attained"] = cell.attained;
      if (!cell.note.empty()) x["note"] = cell.note;
      cj.push_back(x);
    }
    ij["cells"] = cj;
    insts.push_back(ij);
  }
  j["instances"] = insts;
  Json stats = Json::object();
  for (const auto& [key, s] : report.stats) {
    stats[key] = {{"consistent", s.consistent},
                  {"violated", s.violated},
                  {"skipped", s.skipped},
                  {"attained_low", s.attained_low},
                  {"attained_high", s.attained_high}};
  }
  j["stats"] = stats;
  j["violations"] = report.violations();

  if (!c.json.empty()) {
    emit_json(j, c.json, out);
    if (c.json != "-") {
      out << "instances=" << report.instances.size() << " cells=" << cells.size()
          << " violations=" << report.violations() << "\n";
    }
  } else {
    for (const auto& rep : report.instances) {
      out << rep.name << " (n=" << rep.order << ", u=" << rep.units << ", " << rep.family << ")\n";
      for (const auto& cell : rep.cells) {
        out << "  " << cell.params.to_string() << " predicted " << cell.prediction.to_string()
            << " got " << (cell.value ? std::to_string(*cell.value) : std::string("?")) << " -> "
            << to_string(cell.verdict);
        if (!cell.attained.empty()) out << " (" << cell.attained << ")";
        out << "\n";
      }
    }
    out << "violations=" << report.violations() << "\n";
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"(p,q)-spreading toolkit for claw-free cubic graphs", "spreadlab"};
  app.require_subcommand(1);

  GenerateCmd gen;
  auto* g = app.add_subcommand("generate", "Write a family graph as an edge list");
  add_source_options(g, gen.src, /*with_path=*/false);
  g->add_option("--output,-o", gen.output, "Edge-list path (a .json sidecar is written beside it)");

  AnalyzeCmd ana;
  auto* a = app.add_subcommand("analyze", "Triangle-diamond partition and family report");
  add_source_options(a, ana.src);
  a->add_flag("--json", ana.json, "Emit JSON");
  a->add_flag("--dot", ana.dot, "Emit DOT");

  SimulateCmd sim;
  auto* s = app.add_subcommand("simulate", "Run the spreading rule from a blue set");
  add_source_options(s, sim.src);
  s->add_option("--p,-p", sim.p, "Blue-neighbour threshold")->required();
  s->add_option("--q,-q", sim.q, "White-neighbour limit: positive integer or 'inf'");
  s->add_flag("--infinity", sim.infinity, "Use q = inf");
  s->add_option("--blue,-b", sim.blue, "Blue vertices: '0,1,5' or @file")->required();
  s->add_flag("--json", sim.json, "Emit JSON");
  s->add_flag("--sync", sim.sync, "Synchronous rounds");

  SolveCmd sol;
  auto* so = app.add_subcommand("solve", "Exact minimum spreading set");
  add_source_options(so, sol.src);
  so->add_option("--p,-p", sol.p, "Blue-neighbour threshold")->required();
  so->add_option("--q,-q", sol.q, "White-neighbour limit: positive integer or 'inf'");
  so->add_flag("--infinity", sol.infinity, "Use q = inf");
  so->add_option("--budget", sol.budget, "Search node budget");
  so->add_flag("--json", sol.json, "Emit JSON");
  so->add_flag("--timing", sol.timing, "Report elapsed time");

  ConstructCmd con;
  auto* co = app.add_subcommand("construct", "Polynomial-time set constructions");
  add_source_options(co, con.src);
  co->add_option("--method,-m", con.method, "ind-set, cover, perc3, s31, perc2, s22 or s21")
      ->required()
      ->check(CLI::IsMember(construction_methods()));
  co->add_flag("--json", con.json, "Emit JSON");
  co->add_flag("--dot", con.dot, "Emit DOT with the set highlighted");

  VerifyCmd ver;
  auto* v = app.add_subcommand("verify", "Check closed-form predictions against the exact solver");
  add_source_options(v, ver.src);
  v->add_option("--count", ver.count, "Random instances (seeds seed..seed+count-1)");
  v->add_option("--cells", ver.cells, "Cells such as '2,2;3,1' (default: the nine standard cells)");
  v->add_option("--budget", ver.budget, "Search node budget per cell");
  v->add_option("--json", ver.json, "Write the JSON report here ('-' for stdout)");
  v->add_option("--threads", ver.threads, "Workers (default SPREADLAB_THREADS or all cores)");

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  try {
    if (*g) return do_generate(gen, out);
    if (*a) return do_analyze(ana, out);
    if (*s) return do_simulate(sim, out);
    if (*so) return do_solve(sol, out);
    if (*co) return do_construct(con, out);
    if (*v) return do_verify(ver, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return kExitUsageError;
}

}  // namespace spreadlab::cli
