#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pseudograph/oracles.hpp"

namespace pseudograph {

VertexSet greedy_independent(const Graph& g, const VertexSet& U) {
  const std::size_t n = g.n();
  std::vector<std::uint8_t> alive(n, 0);
  for (Vertex u : U) {
    if (u >= n) throw PreconditionError("vertex out of range");
    if (!g.has_loop(u)) alive[u] = 1;
  }
  std::vector<std::size_t> deg(n, 0);
  std::size_t left = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (!alive[u]) continue;
    ++left;
    for (Vertex x : g.neighbors(u)) deg[u] += alive[x];
  }
  auto kill = [&](Vertex v) {
    alive[v] = 0;
    --left;
    for (Vertex x : g.neighbors(v))
      if (alive[x]) --deg[x];
  };
  VertexSet out;
  while (left > 0) {
    Vertex best = 0;
    bool have = false;
    for (Vertex v = 0; v < n; ++v)
      if (alive[v] && (!have || deg[v] < deg[best])) {
        best = v;
        have = true;
      }
    out.push_back(best);
    kill(best);
    for (Vertex x : g.neighbors(best))
      if (alive[x]) kill(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

GreedyColoring greedy_coloring(const Graph& g, double d, double lambda) {
  if (g.loop_count() > 0) throw PreconditionError("graphs with loops have no proper coloring");
  const std::size_t n = g.n();
  GreedyColoring gc;
  gc.color.assign(n, 0);
  if (g.m() == 0) {
    gc.colors = n > 0 ? 1 : 0;
    gc.phase2_colors = gc.colors;
    return gc;
  }
  if (!(lambda < d)) throw PreconditionError("greedy coloring bound needs lambda < d");
  gc.threshold = double(n) / std::log((d - lambda) / (lambda + 1) + 1);

  std::vector<std::uint8_t> done(n, 0);
  VertexSet U(n);
  for (Vertex v = 0; v < n; ++v) U[v] = v;
  std::uint32_t next = 0;
  while (!U.empty() && double(U.size()) >= gc.threshold) {
    const VertexSet I = greedy_independent(g, U);
    for (Vertex v : I) {
      gc.color[v] = next;
      done[v] = 1;
    }
    ++next;
    ++gc.phase1_classes;
    VertexSet rest;
    std::set_difference(U.begin(), U.end(), I.begin(), I.end(), std::back_inserter(rest));
    U.swap(rest);
  }

  // Remainder: smallest-last order, then first fit.
  std::vector<std::size_t> deg(n, 0);
  std::vector<std::uint8_t> in(n, 0);
  for (Vertex v : U) in[v] = 1;
  for (Vertex v : U)
    for (Vertex x : g.neighbors(v)) deg[v] += in[x];
  std::vector<Vertex> removal;
  for (std::size_t step = 0; step < U.size(); ++step) {
    Vertex best = 0;
    bool have = false;
    for (Vertex v : U)
      if (in[v] && (!have || deg[v] < deg[best])) {
        best = v;
        have = true;
      }
    removal.push_back(best);
    in[best] = 0;
    for (Vertex x : g.neighbors(best))
      if (in[x]) --deg[x];
  }
  std::uint32_t phase2_max = 0;
  bool any2 = false;
  for (auto it = removal.rbegin(); it != removal.rend(); ++it) {
    const Vertex v = *it;
    std::vector<std::uint8_t> used;
    for (Vertex x : g.neighbors(v))
      if (done[x] && gc.color[x] >= next) {
        const std::uint32_t c = gc.color[x] - next;
        if (used.size() <= c) used.resize(c + 1, 0);
        used[c] = 1;
      }
    std::uint32_t c = 0;
    while (c < used.size() && used[c]) ++c;
    gc.color[v] = next + c;
    done[v] = 1;
    phase2_max = std::max(phase2_max, c);
    any2 = true;
  }
  gc.phase2_colors = any2 ? phase2_max + 1 : 0;
  gc.colors = gc.phase1_classes + gc.phase2_colors;
  return gc;
}

TuranPartition greedy_turan_partition(const Graph& g, std::size_t t) {
  if (t < 3) throw PreconditionError("partition needs t >= 3");
  const std::size_t n = g.n(), k = t - 1;
  TuranPartition tp;
  tp.parts = k;
  tp.part.resize(n);
  for (Vertex v = 0; v < n; ++v) tp.part[v] = static_cast<std::uint32_t>(v % k);
  std::vector<std::size_t> cnt(n * k, 0), deg(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v))
      if (u != v) {
        ++cnt[v * k + tp.part[u]];
        ++deg[v];
      }
  std::size_t internal = 0;
  for (Vertex v = 0; v < n; ++v) internal += cnt[v * k + tp.part[v]];
  internal /= 2;
  for (;;) {
    Vertex mover = static_cast<Vertex>(n);
    for (Vertex v = 0; v < n && mover == n; ++v)
      if (cnt[v * k + tp.part[v]] * k > deg[v]) mover = v;
    if (mover == n) break;
    const std::uint32_t from = tp.part[mover];
    std::uint32_t to = 0;
    for (std::uint32_t j = 1; j < k; ++j)
      if (cnt[mover * k + j] < cnt[mover * k + to]) to = j;
    const std::size_t before = internal;
    internal = internal - cnt[mover * k + from] + cnt[mover * k + to];
    if (internal >= before) throw std::logic_error("partition potential failed to decrease");
    tp.part[mover] = to;
    for (Vertex u : g.neighbors(mover))
      if (u != mover) {
        --cnt[u * k + from];
        ++cnt[u * k + to];
      }
    ++tp.moves;
  }
  std::size_t nonloop = 0;
  for (Vertex v = 0; v < n; ++v) nonloop += deg[v];
  tp.cross_edges = nonloop / 2 - internal;
  return tp;
}

bool is_independent_set(const Graph& g, const VertexSet& S) {
  for (Vertex a : S) {
    if (a >= g.n()) return false;
    for (Vertex b : S)
      if (g.has_edge(a, b)) return false;
  }
  return true;
}

bool is_proper_coloring(const Graph& g, const std::vector<std::uint32_t>& color) {
  if (color.size() != g.n()) return false;
  for (auto [u, v] : g.edges())
    if (color[u] == color[v]) return false;
  return true;
}

std::size_t cut_value(const Graph& g, const std::vector<std::uint32_t>& side) {
  if (side.size() != g.n()) throw PreconditionError("side vector has the wrong length");
  std::size_t c = 0;
  for (auto [u, v] : g.edges()) c += side[u] != side[v];
  return c;
}

bool is_hamilton_cycle(const Graph& g, const VertexSet& order) {
  const std::size_t n = g.n();
  if (n < 3 || order.size() != n) return false;
  std::vector<std::uint8_t> seen(n, 0);
  for (Vertex v : order) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!g.has_edge(order[i], order[(i + 1) % n])) return false;
  return true;
}

bool is_perfect_matching(const Graph& g, const std::vector<Edge>& m) {
  std::vector<std::uint8_t> seen(g.n(), 0);
  for (auto [u, v] : m) {
    if (u == v || u >= g.n() || v >= g.n() || !g.has_edge(u, v) || seen[u] || seen[v]) return false;
    seen[u] = seen[v] = 1;
  }
  return 2 * m.size() == g.n();
}

bool is_triangle_factor(const Graph& g, const VertexSet& triples) {
  if (triples.size() != g.n() || triples.size() % 3) return false;
  std::vector<std::uint8_t> seen(g.n(), 0);
  for (std::size_t i = 0; i < triples.size(); i += 3) {
    const Vertex a = triples[i], b = triples[i + 1], c = triples[i + 2];
    for (Vertex v : {a, b, c}) {
      if (v >= g.n() || seen[v]) return false;
      seen[v] = 1;
    }
    if (a == b || b == c || a == c || !g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c)) return false;
  }
  return true;
}

}  // namespace pseudograph
