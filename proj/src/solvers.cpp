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

#include "spreadlab/solvers.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <queue>
#include <tuple>
#include <unordered_map>

#include "spreadlab/decomposition.hpp"
#include "spreadlab/errors.hpp"

namespace spreadlab {

namespace {

using Clock = std::chrono::steady_clock;

// ---------------------------------------------------------------------------
// Independent sets over arbitrary order: word-vector bitsets.

class Bits {
 public:
  explicit Bits(int n = 0) : w_((n + 63) / 64, 0) {}
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  bool none() const {
    for (auto x : w_)
      if (x) return false;
    return true;
  }
  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  int count_and(const Bits& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bits& subtract(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      for (std::uint64_t x = w_[i]; x; x &= x - 1) f(static_cast<int>(i * 64 + std::countr_zero(x)));
    }
  }

 private:
  std::vector<std::uint64_t> w_;
};

class MisSolver {
 public:
  explicit MisSolver(const Graph& g) : g_(g), n_(g.order()), nb_(n_, Bits(n_)), closed_(n_, Bits(n_)) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex u : g.neighbors(v)) nb_[v].set(u);
      closed_[v] = nb_[v];
      closed_[v].set(v);
    }
  }

  Bits full() const {
    Bits b(n_);
    for (int i = 0; i < n_; ++i) b.set(i);
    return b;
  }

  // Largest independent set inside `pool`, or an empty vector when none is
  // larger than `floor`.
  std::vector<Vertex> solve(const Bits& pool, int floor) {
    best_size_ = floor;
    best_.clear();
    std::vector<Vertex> cur;
    rec(pool, cur);
    return best_;
  }

  int clique_cover(const Bits& pool) const {
    std::vector<Bits> common;
    pool.for_each([&](int v) {
      for (auto& c : common) {
        if (c.test(v)) {
          c &= nb_[v];
          return;
        }
      }
      Bits c = nb_[v];
      c &= pool;
      common.push_back(std::move(c));
    });
    return static_cast<int>(common.size());
  }

  const Bits& closed(Vertex v) const { return closed_[v]; }

 private:
  void rec(Bits pool, std::vector<Vertex>& cur) {
    const std::size_t mark = cur.size();
    for (bool again = true; again;) {
      again = false;
      int pick = -1;
      pool.for_each([&](int v) {
        if (pick < 0 && nb_[v].count_and(pool) <= 1) pick = v;
      });
      if (pick >= 0) {
        cur.push_back(pick);
        pool.subtract(closed_[pick]);
        again = true;
      }
    }
    if (pool.none()) {
      if (static_cast<int>(cur.size()) > best_size_) {
        best_size_ = static_cast<int>(cur.size());
        best_ = cur;
      }
    } else if (static_cast<int>(cur.size()) + clique_cover(pool) > best_size_) {
      int v = -1, dv = -1;
      pool.for_each([&](int x) {
        int d = nb_[x].count_and(pool);
        if (d > dv) dv = d, v = x;
      });
      Bits in = pool;
      in.subtract(closed_[v]);
      cur.push_back(v);
      rec(in, cur);
      cur.pop_back();
      Bits out = pool;
      out.reset(v);
      rec(out, cur);
    }
    cur.resize(mark);
  }

  const Graph& g_;
  int n_;
  std::vector<Bits> nb_;
  std::vector<Bits> closed_;
  int best_size_ = 0;
  std::vector<Vertex> best_;
};

class TriangleHittingSolver {
 public:
  explicit TriangleHittingSolver(const Graph& g) : g_(g), mis_(g), tris_(triangles(g)) {}

  std::optional<std::vector<Vertex>> solve() {
    std::vector<Vertex> cur;
    std::vector<char> in(g_.order(), 0);
    rec(mis_.full(), cur, in);
    if (best_size_ < 0) return std::nullopt;
    return best_;
  }

 private:
  void rec(Bits pool, std::vector<Vertex>& cur, std::vector<char>& in) {
    const int size = static_cast<int>(cur.size());
    if (size + mis_.clique_cover(pool) <= best_size_) return;
    const VertexSet* open = nullptr;
    for (const auto& t : tris_) {
      if (!(in[t.members()[0]] || in[t.members()[1]] || in[t.members()[2]])) {
        open = &t;
        break;
      }
    }
    if (!open) {
      std::vector<Vertex> rest = mis_.solve(pool, best_size_ - size - 1);
      if (size + static_cast<int>(rest.size()) > best_size_) {
        best_ = cur;
        best_.insert(best_.end(), rest.begin(), rest.end());
        std::sort(best_.begin(), best_.end());
        best_size_ = static_cast<int>(best_.size());
      }
      return;
    }
    Bits branch_pool = pool;
    for (Vertex x : *open) {
      if (!branch_pool.test(x)) continue;
      Bits next = branch_pool;
      next.subtract(mis_.closed(x));
      cur.push_back(x);
      in[x] = 1;
      rec(next, cur, in);
      in[x] = 0;
      cur.pop_back();
      branch_pool.reset(x);
    }
  }

  const Graph& g_;
  MisSolver mis_;
  std::vector<VertexSet> tris_;
  int best_size_ = -1;
  std::vector<Vertex> best_;
};

// ---------------------------------------------------------------------------
// Spreading search on 64-bit masks.

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

// Vertices with index below i.
constexpr Mask below(int i) { return i >= 64 ? ~Mask{0} : bit(i) - 1; }

VertexSet from_mask(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return VertexSet(std::move(out));
}

struct BudgetExceeded {};

class MaskEngine {
 public:
  MaskEngine(const Graph& g, const SpreadParams& params)
      : n_(g.order()), p_(params.p), q_inf_(params.q.is_infinite()),
        q_(q_inf_ ? 0 : params.q.value()), adj_(n_, 0) {
    if (n_ > kMaxSolverOrder) {
      throw InvalidArgument("exact solver supports at most " + std::to_string(kMaxSolverOrder) +
                            " vertices, graph has " + std::to_string(n_));
    }
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex u : g.neighbors(v)) adj_[v] |= bit(u);
    all_ = below(n_);
  }

  Mask all() const { return all_; }
  Mask adj(Vertex v) const { return adj_[v]; }
  int n() const { return n_; }

  Mask closure(Mask blue) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (Mask white = all_ & ~blue; white; white &= white - 1) {
        const int w = std::countr_zero(white);
        Mask nb = adj_[w] & blue;
        if (std::popcount(nb) < p_) continue;
        for (; nb; nb &= nb - 1) {
          const int u = std::countr_zero(nb);
          if (q_inf_ || std::popcount(adj_[u] & ~blue) <= q_) {
            blue |= bit(w);
            changed = true;
            break;
          }
        }
      }
    }
    return blue;
  }

  bool spreads(Mask s) const { return closure(s) == all_; }

 private:
  int n_;
  int p_;
  bool q_inf_;
  int q_;
  std::vector<Mask> adj_;
  Mask all_ = 0;
};

// Per-block table of the fewest extra vertices needed to meet every trapped
// subset of the block.
struct Block {
  std::vector<Vertex> vertices;
  std::vector<std::uint8_t> need;  // index (chosen << s) | allowed
  static constexpr std::uint8_t kInf = 0xff;

  int local(Mask m) const {
    int x = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i)
      if (m & bit(vertices[i])) x |= 1 << i;
    return x;
  }
};

std::vector<std::vector<Vertex>> partition_blocks(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  try {
    const auto p = delta_d_partition(g);
    for (const auto& u : p.units()) out.push_back(u.vertices.members());
    return out;
  } catch (const GraphClassError&) {
  }
  std::vector<char> used(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (used[v]) continue;
    std::vector<Vertex> clique{v};
    used[v] = 1;
    for (Vertex u : g.neighbors(v)) {
      if (used[u] || clique.size() >= 6) continue;
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex w) { return g.adjacent(u, w); })) {
        clique.push_back(u);
        used[u] = 1;
      }
    }
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
  }
  return out;
}

Block make_block(const MaskEngine& e, int p, std::vector<Vertex> verts) {
  Block b;
  b.vertices = std::move(verts);
  const int s = static_cast<int>(b.vertices.size());
  const int full = 1 << s;
  std::vector<int> trapped;
  for (int h = 1; h < full; ++h) {
    Mask hg = 0;
    for (int i = 0; i < s; ++i)
      if (h & (1 << i)) hg |= bit(b.vertices[i]);
    bool ok = true;
    for (int i = 0; i < s && ok; ++i)
      if (h & (1 << i)) ok = std::popcount(e.adj(b.vertices[i]) & ~hg) < p;
    if (ok) trapped.push_back(h);
  }
  std::vector<char> hits(full, 1);
  for (int x = 0; x < full; ++x)
    for (int h : trapped)
      if (!(x & h)) hits[x] = 0;
  b.need.assign(static_cast<std::size_t>(full) * full, Block::kInf);
  for (int c = 0; c < full; ++c) {
    for (int a = 0; a < full; ++a) {
      int best = Block::kInf;
      // Enumerate subsets y of a.
      for (int y = a;; y = (y - 1) & a) {
        if (hits[c | y]) best = std::min(best, std::popcount(static_cast<unsigned>(y)));
        if (y == 0) break;
      }
      b.need[(static_cast<std::size_t>(c) << s) | a] = static_cast<std::uint8_t>(best);
    }
  }
  return b;
}

class SigmaSearch {
 public:
  SigmaSearch(const Graph& g, const SpreadParams& params, std::int64_t budget)
      : g_(g), e_(g, params), p_(params.p), budget_(budget), partner_(e_.n(), 0) {
    const int n = e_.n();
    for (Vertex v = 0; v < n; ++v)
      if (g.degree(v) < p_) forced_ |= bit(v);
    for (const auto& [u, v] : g.edges()) {
      if (g.degree(u) - 1 < p_ && g.degree(v) - 1 < p_) {
        partner_[u] |= bit(v);
        partner_[v] |= bit(u);
      }
    }
    for (auto& verts : partition_blocks(g)) blocks_.push_back(make_block(e_, p_, std::move(verts)));
  }

  int structural_bound() const {
    const int n = e_.n();
    if (n == 0) return 0;
    int lb = std::min(p_, n);
    lb = std::max(lb, std::popcount(forced_));
    int block_sum = 0;
    for (const auto& b : blocks_) {
      const int s = static_cast<int>(b.vertices.size());
      block_sum += b.need[(1 << s) - 1];
    }
    lb = std::max(lb, block_sum);
    // Vertex cover of the trapped edges not already covered by forced
    // vertices.
    std::vector<Edge> edges;
    std::vector<Vertex> index(n, -1);
    int m = 0;
    for (Vertex v = 0; v < n; ++v)
      if (!(forced_ & bit(v)) && (partner_[v] & ~forced_)) index[v] = m++;
    for (Vertex v = 0; v < n; ++v) {
      if (index[v] < 0) continue;
      for (Mask x = partner_[v] & ~forced_; x; x &= x - 1) {
        int u = std::countr_zero(x);
        if (u > v) edges.emplace_back(index[v], index[u]);
      }
    }
    if (!edges.empty()) {
      Graph h = Graph::from_edges(m, edges);
      lb = std::max(lb, std::popcount(forced_) + m - independence_number(h).value);
    }
    return lb;
  }

  // Lexicographically least spreading set of size k, if any.
  std::optional<Mask> search(int k) {
    k_ = k;
    found_.reset();
    dfs(0, 0, 0, forced_);
    return found_;
  }

  std::int64_t nodes() const { return nodes_; }
  const MaskEngine& engine() const { return e_; }

 private:
  bool dfs(int i, Mask chosen, int count, Mask forced) {
    if (++nodes_ > budget_) throw BudgetExceeded{};
    const int n = e_.n();
    if (count == k_) {
      if ((forced & ~chosen) == 0 && e_.spreads(chosen)) {
        found_ = chosen;
        return true;
      }
      return false;
    }
    if (n - i < k_ - count) return false;
    const Mask undecided = e_.all() & ~below(i);
    if (count + std::popcount(forced & undecided & ~chosen) > k_) return false;
    int need = 0;
    for (const auto& b : blocks_) {
      const int s = static_cast<int>(b.vertices.size());
      const auto r = b.need[(static_cast<std::size_t>(b.local(chosen)) << s) | b.local(undecided)];
      if (r == Block::kInf) return false;
      need += r;
    }
    if (count + need > k_) return false;
    if (!e_.spreads(chosen | undecided)) return false;

    if (dfs(i + 1, chosen | bit(i), count + 1, forced)) return true;
    if (forced & bit(i)) return false;
    // Excluding i forces its trapped partners; earlier ones must already be in.
    if (partner_[i] & below(i) & ~chosen) return false;
    return dfs(i + 1, chosen, count, forced | partner_[i]);
  }

  const Graph& g_;
  MaskEngine e_;
  int p_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  Mask forced_ = 0;
  std::vector<Mask> partner_;
  std::vector<Block> blocks_;
  int k_ = 0;
  std::optional<Mask> found_;
};

Mask greedy_mask(const MaskEngine& e) {
  Mask s = e.all();
  for (int v = e.n() - 1; v >= 0; --v)
    if (e.spreads(s & ~bit(v))) s &= ~bit(v);
  return s;
}

}  // namespace

IndependentSetResult independence_number(const Graph& g) {
  MisSolver s(g);
  auto best = s.solve(s.full(), -1);
  std::sort(best.begin(), best.end());
  return {static_cast<int>(best.size()), VertexSet(std::move(best))};
}

IndependentSetResult vertex_cover_number(const Graph& g) {
  auto a = independence_number(g);
  VertexSet cover = VertexSet::all(g.order()).set_difference(a.witness);
  return {cover.size(), std::move(cover)};
}

std::optional<IndependentSetResult> max_triangle_hitting_independent_set(const Graph& g) {
  TriangleHittingSolver s(g);
  auto best = s.solve();
  if (!best) return std::nullopt;
  return IndependentSetResult{static_cast<int>(best->size()), VertexSet(std::move(*best))};
}

int structural_lower_bound(const Graph& g, const SpreadParams& params) {
  return SigmaSearch(g, params, 0).structural_bound();
}

int lower_bound(const Graph& g, const SpreadParams& params) {
  const int n = g.order();
  if (n == 0) return 0;
  int lb = std::min(params.p, n);
  int low = 0;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) < params.p) ++low;
  lb = std::max(lb, low);
  if (n == 4 || !is_cubic(g) || !is_connected(g) || !is_claw_free(g)) return lb;
  if (params.p >= 4) return n;
  const int u = unit_count(g);
  if (params.p >= 2) lb = std::max(lb, u);
  if (params.p == 2 && !params.q.is_infinite() && params.q.value() == 1) lb = std::max(lb, u + 1);
  if (params.p == 3 && (params.q.is_infinite() || params.q.value() >= 3)) {
    lb = std::max(lb, vertex_cover_number(g).value);
  }
  return lb;
}

VertexSet greedy_spreading_set(const Graph& g, const SpreadParams& params) {
  if (g.order() > kMaxSolverOrder) {
    VertexSet s = VertexSet::all(g.order());
    for (Vertex v = g.order() - 1; v >= 0; --v) {
      VertexSet t = s;
      t.erase(v);
      if (is_spreading_set(g, t, params)) s = std::move(t);
    }
    return s;
  }
  MaskEngine e(g, params);
  return from_mask(greedy_mask(e));
}

SolveResult zero_forcing_number(const Graph& g, const SolveOptions& options) {
  const auto start = Clock::now();
  const SpreadParams zf(1, 1);
  MaskEngine e(g, zf);
  const int n = e.n();
  SolveResult out;

  struct Node {
    int cost;
    Mask state;
    bool operator>(const Node& o) const { return std::tie(cost, state) > std::tie(o.cost, o.state); }
  };
  std::unordered_map<Mask, int> dist;
  std::unordered_map<Mask, std::pair<Mask, Mask>> parent;  // state -> (prev, paid)
  std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;
  const Mask s0 = e.closure(0);
  dist[s0] = 0;
  pq.push({0, s0});
  std::int64_t nodes = 0;
  bool done = false;
  Mask goal = e.all();
  while (!pq.empty()) {
    auto [cost, s] = pq.top();
    pq.pop();
    if (dist[s] != cost) continue;
    if (s == goal) {
      done = true;
      break;
    }
    if (++nodes > options.node_budget) break;
    for (int v = 0; v < n; ++v) {
      const Mask closed_nb = e.adj(v) | bit(v);
      const Mask need = closed_nb & ~s;
      if (!need) continue;
      Mask paid;
      if ((e.adj(v) & ~s) == 0) {
        paid = bit(v);
      } else {
        // v forces its highest white neighbour once the rest are paid for.
        const Mask white_nb = e.adj(v) & ~s;
        paid = need & ~bit(63 - std::countl_zero(white_nb));
      }
      const Mask t = e.closure(s | closed_nb);
      const int c = cost + std::popcount(paid);
      auto it = dist.find(t);
      if (it == dist.end() || c < it->second) {
        dist[t] = c;
        parent[t] = {s, paid};
        pq.push({c, t});
      }
    }
  }
  out.nodes_explored = nodes;
  if (done) {
    Mask w = 0;
    for (Mask s = goal; s != s0;) {
      auto [prev, paid] = parent.at(s);
      w |= paid;
      s = prev;
    }
    out.value = std::popcount(w);
    out.witness = from_mask(w);
    out.lower = out.upper = out.value;
  } else {
    const Mask gm = greedy_mask(e);
    out.exact = false;
    out.value = out.upper = std::popcount(gm);
    out.witness = from_mask(gm);
    out.lower = pq.empty() ? out.value : pq.top().cost;
  }
  out.elapsed = Clock::now() - start;
  return out;
}

SolveResult sigma_exact(const Graph& g, const SpreadParams& params, const SolveOptions& options) {
  if (params.p == 1 && !params.q.is_infinite() && params.q.value() == 1) {
    return zero_forcing_number(g, options);
  }
  const auto start = Clock::now();
  SigmaSearch search(g, params, options.node_budget);
  SolveResult out;
  int k = search.structural_bound();
  if (options.start_from_theorem_bounds) k = std::max(k, lower_bound(g, params));
  try {
    for (; k <= g.order(); ++k) {
      if (auto m = search.search(k)) {
        out.value = out.lower = out.upper = k;
        out.witness = from_mask(*m);
        break;
      }
    }
  } catch (const BudgetExceeded&) {
    const Mask gm = greedy_mask(search.engine());
    out.exact = false;
    out.lower = k;
    out.value = out.upper = std::popcount(gm);
    out.witness = from_mask(gm);
  }
  out.nodes_explored = search.nodes();
  out.elapsed = Clock::now() - start;
  return out;
}

SolveResult percolation_number(const Graph& g, int r, const SolveOptions& options) {
  return sigma_exact(g, SpreadParams(r, WhiteLimit::infinity()), options);
}

}  // namespace spreadlab
