#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>

#include "bitset.hpp"
#include "pseudograph/oracles.hpp"

namespace pseudograph {

using detail::Bits;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct CliqueSearch {
  std::vector<Bits> adj;  // in search order
  std::vector<Vertex> label;
  std::uint64_t budget, nodes = 0;
  bool aborted = false;
  std::vector<std::size_t> R, best;
  std::size_t root_bound = 0;

  void expand(Bits P) {
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    // Sequential greedy coloring gives the bound.
    std::vector<std::size_t> order, color;
    Bits Q = P;
    std::size_t k = 0;
    while (Q.any()) {
      ++k;
      Bits Qk = Q;
      while (Qk.any()) {
        const std::size_t v = Qk.first();
        Qk.reset(v);
        Q.reset(v);
        Qk.and_not(adj[v]);
        order.push_back(v);
        color.push_back(k);
      }
    }
    if (R.empty()) root_bound = k;
    for (std::size_t i = order.size(); i-- > 0;) {
      if (R.size() + color[i] <= best.size()) return;
      const std::size_t v = order[i];
      R.push_back(v);
      Bits NP = P & adj[v];
      if (!NP.any()) {
        if (R.size() > best.size()) best = R;
      } else {
        expand(NP);
      }
      R.pop_back();
      if (aborted) return;
      P.reset(v);
    }
  }
};

// Maximum clique of the relation `adjacent` restricted to `allowed`.
OracleResult run_clique(std::size_t n, const std::function<bool(Vertex, Vertex)>& adjacent, const std::vector<Vertex>& allowed,
                        std::uint64_t budget, const char* name) {
  const auto t0 = Clock::now();
  OracleResult r;
  r.oracle = name;
  std::vector<Vertex> verts = allowed;
  std::vector<std::size_t> deg(n, 0);
  for (Vertex u : verts)
    for (Vertex v : verts)
      if (u != v && adjacent(u, v)) ++deg[u];
  std::stable_sort(verts.begin(), verts.end(), [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
  CliqueSearch cs;
  cs.budget = budget;
  cs.label = verts;
  const std::size_t k = verts.size();
  cs.adj.assign(k, Bits(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && adjacent(verts[i], verts[j])) cs.adj[i].set(j);
  if (k > 0) {
    Bits P(k);
    for (std::size_t i = 0; i < k; ++i) P.set(i);
    cs.expand(P);
  }
  for (auto i : cs.best) r.vertices.push_back(verts[i]);
  std::sort(r.vertices.begin(), r.vertices.end());
  r.nodes = cs.nodes;
  r.known = !cs.aborted;
  r.lower = static_cast<std::int64_t>(cs.best.size());
  r.upper = r.known ? r.lower : static_cast<std::int64_t>(std::max(cs.root_bound, cs.best.size()));
  r.value = r.lower;
  r.seconds = since(t0);
  if (!r.known) r.note = "node budget exhausted";
  return r;
}

}  // namespace

OracleResult exact_alpha(const Graph& g, std::uint64_t node_budget) {
  std::vector<Vertex> allowed;
  for (Vertex v = 0; v < g.n(); ++v)
    if (!g.has_loop(v)) allowed.push_back(v);
  return run_clique(g.n(), [&g](Vertex u, Vertex v) { return !g.has_edge(u, v); }, allowed, node_budget, "alpha");
}

OracleResult exact_clique(const Graph& g, std::uint64_t node_budget) {
  std::vector<Vertex> all(g.n());
  std::iota(all.begin(), all.end(), 0);
  return run_clique(g.n(), [&g](Vertex u, Vertex v) { return g.has_edge(u, v); }, all, node_budget, "clique");
}

namespace {

// Smallest-color DSATUR heuristic coloring.
std::vector<std::uint32_t> dsatur_greedy(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::int64_t> color(n, -1);
  std::vector<std::vector<std::uint8_t>> seen(n);
  std::vector<std::size_t> sat(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      if (best == n || sat[v] > sat[best] || (sat[v] == sat[best] && g.degree(v) > g.degree(best))) best = v;
    }
    std::uint32_t c = 0;
    while (c < seen[best].size() && seen[best][c]) ++c;
    color[best] = c;
    for (Vertex u : g.neighbors(best)) {
      if (seen[u].size() <= c) seen[u].resize(c + 1, 0);
      if (!seen[u][c]) {
        seen[u][c] = 1;
        ++sat[u];
      }
    }
  }
  return {color.begin(), color.end()};
}

struct KColor {
  const Graph& g;
  std::size_t k;
  std::uint64_t budget, nodes = 0;
  bool aborted = false;
  std::vector<std::int64_t> color;
  std::vector<std::vector<std::uint32_t>> forbid;  // forbid[v][c] = colored neighbors with color c

  bool solve(std::size_t colored, std::size_t used) {
    if (colored == g.n()) return true;
    if (++nodes > budget) {
      aborted = true;
      return false;
    }
    // Saturation-order branching: most distinct neighbor colors, then degree, then index.
    std::size_t best = g.n(), best_sat = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (color[v] >= 0) continue;
      std::size_t s = 0;
      for (std::size_t c = 0; c < k; ++c) s += forbid[v][c] > 0;
      if (best == g.n() || s > best_sat || (s == best_sat && g.degree(v) > g.degree(best))) {
        best = v;
        best_sat = s;
      }
    }
    if (best_sat == k) return false;
    const std::size_t lim = std::min(k, used + 1);
    for (std::size_t c = 0; c < lim; ++c) {
      if (forbid[best][c]) continue;
      color[best] = static_cast<std::int64_t>(c);
      for (Vertex u : g.neighbors(best)) ++forbid[u][c];
      if (solve(colored + 1, std::max(used, c + 1))) return true;
      for (Vertex u : g.neighbors(best)) --forbid[u][c];
      color[best] = -1;
      if (aborted) return false;
    }
    return false;
  }
};

}  // namespace

OracleResult exact_chi(const Graph& g, std::uint64_t node_budget) {
  if (g.loop_count() > 0) throw PreconditionError("graphs with loops have no proper coloring");
  const auto t0 = Clock::now();
  OracleResult r;
  r.oracle = "chi";
  const std::size_t n = g.n();
  if (n == 0) {
    r.known = true;
    r.seconds = since(t0);
    return r;
  }
  auto heur = dsatur_greedy(g);
  std::size_t ub = 0;
  for (auto c : heur) ub = std::max<std::size_t>(ub, c + 1);
  const auto cl = exact_clique(g, node_budget);
  r.nodes += cl.nodes;
  std::size_t lb = static_cast<std::size_t>(std::max<std::int64_t>(cl.lower, 1));
  r.labels = heur;
  for (std::size_t k = lb; k < ub; ++k) {
    KColor kc{g, k, node_budget, 0, false, std::vector<std::int64_t>(n, -1),
              std::vector<std::vector<std::uint32_t>>(n, std::vector<std::uint32_t>(k, 0))};
    const bool ok = kc.solve(0, 0);
    r.nodes += kc.nodes;
    if (ok) {
      r.labels.assign(kc.color.begin(), kc.color.end());
      ub = k;
      break;
    }
    if (kc.aborted) {
      r.known = false;
      r.lower = static_cast<std::int64_t>(k);
      r.upper = r.value = static_cast<std::int64_t>(ub);
      r.note = "node budget exhausted";
      r.seconds = since(t0);
      return r;
    }
    lb = k + 1;
  }
  r.known = true;
  r.value = r.lower = r.upper = static_cast<std::int64_t>(ub);
  r.seconds = since(t0);
  return r;
}

OracleResult exact_maxcut(const Graph& g) {
  const std::size_t n = g.n();
  if (n > 24) throw CapExceeded("exhaustive max-cut needs n <= 24");
  const auto t0 = Clock::now();
  OracleResult r;
  r.oracle = "maxcut";
  r.known = true;
  r.labels.assign(n, 0);
  if (n <= 1) {
    r.seconds = since(t0);
    return r;
  }
  // Vertex n-1 stays on side 0; Gray code walks the other 2^(n-1) splits.
  std::vector<std::uint32_t> side(n, 0);
  std::int64_t cut = 0, best = 0;
  std::uint32_t best_mask = 0, mask = 0;
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < total; ++i) {
    const std::size_t v = static_cast<std::size_t>(std::countr_zero(i));
    std::int64_t same = 0, other = 0;
    for (Vertex u : g.neighbors(static_cast<Vertex>(v))) {
      if (u == v) continue;
      (side[u] == side[v] ? same : other) += 1;
    }
    cut += same - other;
    side[v] ^= 1;
    mask ^= 1u << v;
    if (cut > best) {
      best = cut;
      best_mask = mask;
    }
  }
  for (std::size_t v = 0; v + 1 < n; ++v) r.labels[v] = best_mask >> v & 1;
  r.value = r.lower = r.upper = best;
  r.nodes = total;
  r.seconds = since(t0);
  return r;
}

OracleResult hamilton_search(const Graph& g, std::uint64_t node_budget, bool count) {
  const auto t0 = Clock::now();
  const std::size_t n = g.n();
  OracleResult r;
  r.oracle = count ? "hamilton_count" : "hamilton";
  r.known = true;
  if (n < 3) {
    r.seconds = since(t0);
    r.note = "fewer than 3 vertices";
    return r;
  }
  if (count) {
    if (n > 16) throw CapExceeded("Hamilton cycle counting needs n <= 16");
    // paths[mask][v]: paths from 0 through `mask` (vertex 0 implicit) ending at v.
    const std::size_t full = std::size_t{1} << (n - 1);
    std::vector<std::uint64_t> dp(full * n, 0);
    for (Vertex v : g.neighbors(0))
      if (v != 0) dp[(std::size_t{1} << (v - 1)) * n + v] = 1;
    for (std::size_t mask = 1; mask < full; ++mask)
      for (Vertex v = 1; v < n; ++v) {
        const std::uint64_t c = dp[mask * n + v];
        if (!c) continue;
        ++r.nodes;
        for (Vertex u : g.neighbors(v)) {
          if (u == 0 || u == v || (mask >> (u - 1) & 1)) continue;
          dp[(mask | (std::size_t{1} << (u - 1))) * n + u] += c;
        }
      }
    std::uint64_t directed = 0;
    for (Vertex v : g.neighbors(0))
      if (v != 0) directed += dp[(full - 1) * n + v];
    r.value = r.lower = r.upper = static_cast<std::int64_t>(directed / 2);
    r.seconds = since(t0);
    return r;
  }

  std::vector<std::uint8_t> used(n, 0);
  std::vector<std::size_t> free_deg(n);  // neighbors not yet interior to the path
  for (Vertex v = 0; v < n; ++v) free_deg[v] = g.degree(v) - (g.has_loop(v) ? 1 : 0);
  VertexSet path{0};
  used[0] = 1;
  bool aborted = false, found = false;
  std::function<void(Vertex)> dfs = [&](Vertex end) {
    if (found || aborted) return;
    if (++r.nodes > node_budget) {
      aborted = true;
      return;
    }
    if (path.size() == n) {
      if (g.has_edge(end, 0)) found = true;
      return;
    }
    // Every unused vertex still needs two usable neighbors.
    for (Vertex u = 0; u < n; ++u)
      if (!used[u] && free_deg[u] < 2) return;
    for (Vertex v : g.neighbors(end)) {
      if (used[v]) continue;
      used[v] = 1;
      path.push_back(v);
      // `end` becomes interior, except the start which still closes the cycle.
      if (end != 0)
        for (Vertex w : g.neighbors(end))
          if (w != end) --free_deg[w];
      dfs(v);
      if (found) return;
      if (end != 0)
        for (Vertex w : g.neighbors(end))
          if (w != end) ++free_deg[w];
      path.pop_back();
      used[v] = 0;
      if (aborted) return;
    }
  };
  dfs(0);
  r.seconds = since(t0);
  if (found) {
    r.value = r.lower = r.upper = 1;
    r.vertices = path;
  } else if (aborted) {
    r.known = false;
    r.lower = 0;
    r.upper = 1;
    r.note = "node budget exhausted";
  }
  return r;
}

OracleResult triangle_factor_exact(const Graph& g, std::uint64_t node_budget) {
  const std::size_t n = g.n();
  if (n % 3 != 0) throw PreconditionError("triangle factor needs 3 | n");
  if (n > 63) throw CapExceeded("triangle factor search needs n <= 63");
  const auto t0 = Clock::now();
  OracleResult r;
  r.oracle = "triangle_factor";
  std::vector<std::uint64_t> nb(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v))
      if (u != v) nb[v] |= std::uint64_t{1} << u;
  const std::uint64_t all = n == 64 ? ~0ull : (std::uint64_t{1} << n) - 1;
  VertexSet chosen;
  bool aborted = false;
  std::function<bool(std::uint64_t)> rec = [&](std::uint64_t covered) -> bool {
    if (covered == all) return true;
    if (++r.nodes > node_budget) {
      aborted = true;
      return false;
    }
    const Vertex v = static_cast<Vertex>(std::countr_zero(~covered));
    std::uint64_t cand = nb[v] & ~covered;
    while (cand) {
      const Vertex u = static_cast<Vertex>(std::countr_zero(cand));
      cand &= cand - 1;
      std::uint64_t third = nb[v] & nb[u] & ~covered & ~((std::uint64_t{2} << u) - 1);
      while (third) {
        const Vertex w = static_cast<Vertex>(std::countr_zero(third));
        third &= third - 1;
        chosen.insert(chosen.end(), {v, u, w});
        if (rec(covered | (std::uint64_t{1} << v) | (std::uint64_t{1} << u) | (std::uint64_t{1} << w))) return true;
        chosen.resize(chosen.size() - 3);
        if (aborted) return false;
      }
    }
    return false;
  };
  const bool ok = rec(0);
  r.known = ok || !aborted;
  r.value = r.lower = r.upper = ok ? 1 : 0;
  if (!r.known) r.upper = 1;
  if (ok) r.vertices = chosen;
  r.seconds = since(t0);
  return r;
}

namespace {

// All copies of K_t (t >= 2) as sorted vertex lists.
void enumerate_cliques(const Graph& g, std::size_t t, std::vector<VertexSet>& out) {
  VertexSet cur;
  std::function<void(const VertexSet&)> rec = [&](const VertexSet& cand) {
    if (cur.size() == t) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const Vertex v = cand[i];
      VertexSet next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (g.has_edge(v, cand[j])) next.push_back(cand[j]);
      if (cur.size() + 1 + next.size() < t) continue;
      cur.push_back(v);
      rec(next);
      cur.pop_back();
    }
  };
  VertexSet all(g.n());
  std::iota(all.begin(), all.end(), 0);
  rec(all);
}

}  // namespace

bool contains_clique(const Graph& g, std::size_t t) {
  if (t <= 1) return t == 0 || g.n() > 0;
  const auto c = exact_clique(g, ~0ull);
  return static_cast<std::size_t>(c.value) >= t;
}

bool contains_biclique(const Graph& g, std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  const std::size_t n = g.n();
  if (a == 0) return n >= b;
  std::vector<Bits> nb(n, Bits(n));
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v))
      if (u != v) nb[v].set(u);
  VertexSet side;
  std::function<bool(std::size_t, const Bits&)> rec = [&](std::size_t start, const Bits& common) -> bool {
    if (side.size() == a) {
      Bits c = common;
      for (Vertex s : side) c.reset(s);
      return c.count() >= b;
    }
    for (std::size_t v = start; v < n; ++v) {
      Bits c = side.empty() ? nb[v] : (common & nb[v]);
      if (c.count() < b) continue;
      side.push_back(static_cast<Vertex>(v));
      if (rec(v + 1, c)) return true;
      side.pop_back();
    }
    return false;
  };
  return rec(0, Bits(n));
}

namespace {

// Loops ignored.
bool two_colorable(const Graph& g) {
  std::vector<int> side(g.n(), -1);
  std::vector<Vertex> queue;
  for (Vertex r = 0; r < g.n(); ++r) {
    if (side[r] >= 0) continue;
    side[r] = 0;
    queue.assign(1, r);
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Vertex y : g.neighbors(queue[i])) {
        if (y == queue[i]) continue;
        if (side[y] < 0) {
          side[y] = 1 - side[queue[i]];
          queue.push_back(y);
        } else if (side[y] == side[queue[i]]) {
          return false;
        }
      }
  }
  return true;
}

}  // namespace

bool contains_cycle(const Graph& g, std::size_t len) {
  if (len < 3 || len > 8) throw PreconditionError("cycle length must be in [3, 8]");
  const std::size_t n = g.n();
  if (len % 2 == 1 && two_colorable(g)) return false;
  if (len == 3) return !is_triangle_free(g);
  if (len == 4) {
    std::vector<std::uint32_t> cnt(n, 0);
    for (Vertex x = 0; x < n; ++x) {
      std::vector<Vertex> touched;
      for (Vertex z : g.neighbors(x)) {
        if (z == x) continue;
        for (Vertex y : g.neighbors(z)) {
          if (y == z || y <= x) continue;
          if (cnt[y]++ == 0) touched.push_back(y);
          if (cnt[y] >= 2) return true;
        }
      }
      for (Vertex y : touched) cnt[y] = 0;
    }
    return false;
  }
  // Simple paths from the smallest vertex s through larger vertices.
  std::vector<std::uint8_t> on(n, 0);
  std::function<bool(Vertex, Vertex, std::size_t)> dfs = [&](Vertex s, Vertex v, std::size_t depth) -> bool {
    if (depth == len) return g.has_edge(v, s);
    for (Vertex u : g.neighbors(v)) {
      if (u <= s || on[u]) continue;
      on[u] = 1;
      const bool hit = dfs(s, u, depth + 1);
      on[u] = 0;
      if (hit) return true;
    }
    return false;
  };
  for (Vertex s = 0; s < n; ++s) {
    on[s] = 1;
    const bool hit = dfs(s, s, 1);
    on[s] = 0;
    if (hit) return true;
  }
  return false;
}

bool is_triangle_free(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::uint8_t> mark(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    auto nu = g.neighbors(u);
    for (Vertex v : nu)
      if (v > u) mark[v] = 1;
    bool hit = false;
    for (Vertex v : nu) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v))
        if (w > v && mark[w]) {
          hit = true;
          break;
        }
      if (hit) break;
    }
    for (Vertex v : nu) mark[v] = 0;
    if (hit) return false;
  }
  return true;
}

OracleResult turan_exact(const Graph& g, std::size_t t, std::uint64_t node_budget) {
  if (t < 2) throw PreconditionError("clique order must be at least 2");
  const auto t0 = Clock::now();
  OracleResult r;
  r.oracle = "turan";
  // Loops are never part of a clique; they always survive.
  std::vector<Edge> E;
  std::size_t loops = 0;
  for (auto e : g.edges()) {
    if (e.first == e.second)
      ++loops;
    else
      E.push_back(e);
  }
  const std::size_t m = E.size();
  auto edge_id = [&](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return static_cast<std::size_t>(std::lower_bound(E.begin(), E.end(), Edge{a, b}) - E.begin());
  };
  std::vector<VertexSet> cl;
  enumerate_cliques(g, t, cl);
  std::vector<std::vector<std::size_t>> C;
  for (const auto& c : cl) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) ids.push_back(edge_id(c[i], c[j]));
    C.push_back(std::move(ids));
  }

  std::vector<std::uint8_t> best_deleted(m, 0);
  std::size_t best_h = m;
  bool known = true;
  std::size_t root_lb = 0;

  if (m <= 20) {
    std::vector<std::uint32_t> masks;
    for (const auto& c : C) {
      std::uint32_t mk = 0;
      for (auto id : c) mk |= 1u << id;
      masks.push_back(mk);
    }
    std::uint32_t best_keep = 0;
    std::size_t best_pop = 0;
    for (std::uint32_t keep = 0; keep < (1u << m); ++keep) {
      ++r.nodes;
      const std::size_t pc = static_cast<std::size_t>(std::popcount(keep));
      if (pc <= best_pop && keep) continue;
      bool ok = true;
      for (auto mk : masks)
        if ((keep & mk) == mk) {
          ok = false;
          break;
        }
      if (ok && (pc > best_pop || keep == 0)) {
        best_pop = pc;
        best_keep = keep;
      }
    }
    best_h = m - best_pop;
    for (std::size_t i = 0; i < m; ++i) best_deleted[i] = !(best_keep >> i & 1);
    root_lb = best_h;
  } else {
    // Incumbent from the greedy partition: delete the internal edges.
    if (t >= 3) {
      const auto tp = greedy_turan_partition(g, t);
      std::size_t h = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (tp.part[E[i].first] == tp.part[E[i].second]) {
          best_deleted[i] = 1;
          ++h;
        }
      best_h = h;
    }
    std::vector<std::uint8_t> del(m, 0), fixed(m, 0);
    std::size_t ndel = 0;
    bool aborted = false;
    auto hit = [&](const std::vector<std::size_t>& c) {
      for (auto id : c)
        if (del[id]) return true;
      return false;
    };
    // Edge-disjoint packing of unhit cliques; each needs its own deletion.
    auto packing = [&]() -> std::size_t {
      std::vector<std::uint8_t> usedE(m, 0);
      std::size_t lb = 0;
      for (const auto& c : C) {
        if (hit(c)) continue;
        bool disjoint = true;
        for (auto id : c)
          if (usedE[id]) disjoint = false;
        if (!disjoint) continue;
        for (auto id : c) usedE[id] = 1;
        ++lb;
      }
      return lb;
    };
    root_lb = packing();
    std::function<void()> rec = [&]() {
      if (aborted) return;
      if (++r.nodes > node_budget) {
        aborted = true;
        return;
      }
      const std::vector<std::size_t>* open = nullptr;
      for (const auto& c : C)
        if (!hit(c)) {
          open = &c;
          break;
        }
      if (!open) {
        if (ndel < best_h) {
          best_h = ndel;
          best_deleted = del;
        }
        return;
      }
      if (ndel + packing() >= best_h) return;
      std::vector<std::size_t> newly_fixed;
      for (auto id : *open) {
        if (fixed[id]) continue;
        del[id] = 1;
        ++ndel;
        rec();
        --ndel;
        del[id] = 0;
        if (aborted) break;
        fixed[id] = 1;  // later branches keep this edge
        newly_fixed.push_back(id);
      }
      for (auto id : newly_fixed) fixed[id] = 0;
    };
    rec();
    known = !aborted;
  }
  for (std::size_t i = 0; i < m; ++i)
    if (!best_deleted[i]) r.edges.push_back(E[i]);
  r.known = known;
  r.lower = static_cast<std::int64_t>(m - best_h + loops);
  r.upper = known ? r.lower : static_cast<std::int64_t>(m - root_lb + loops);
  r.value = r.lower;
  if (!known) r.note = "node budget exhausted; value is a lower bound";
  r.seconds = since(t0);
  return r;
}

}  // namespace pseudograph
