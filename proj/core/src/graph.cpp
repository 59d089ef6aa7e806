#include "pseudograph/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

namespace pseudograph {

Graph Graph::from_neighbor_lists(std::vector<std::vector<Vertex>> lists) {
  Graph g;
  g.n_ = lists.size();
  g.offsets_.assign(g.n_ + 1, 0);
  std::size_t total = 0;
  for (std::size_t v = 0; v < g.n_; ++v) {
    auto& l = lists[v];
    std::sort(l.begin(), l.end());
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (l[i] >= g.n_) throw PreconditionError("neighbor " + std::to_string(l[i]) + " out of range");
      if (i > 0 && l[i] == l[i - 1])
        throw PreconditionError("duplicate edge {" + std::to_string(v) + "," + std::to_string(l[i]) + "}");
    }
    total += l.size();
    g.offsets_[v + 1] = total;
  }
  g.adj_.reserve(total);
  for (auto& l : lists) g.adj_.insert(g.adj_.end(), l.begin(), l.end());
  std::size_t twice = 0;
  for (Vertex v = 0; v < g.n_; ++v)
    for (Vertex u : g.neighbors(v)) {
      if (u == v) {
        ++g.loops_;
        continue;
      }
      if (!g.has_edge(u, v)) throw PreconditionError("neighbor lists are not symmetric");
      ++twice;
    }
  g.m_ = twice / 2 + g.loops_;
  return g;
}

Graph Graph::from_edge_list(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::vector<Vertex>> lists(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw PreconditionError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} out of range for n=" +
                              std::to_string(n));
    lists[u].push_back(v);
    if (u != v) lists[v].push_back(u);
  }
  return from_neighbor_lists(std::move(lists));
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= n_ || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u <= v) out.emplace_back(u, v);
  return out;
}

std::size_t Graph::min_degree() const noexcept {
  std::size_t r = n_ ? std::numeric_limits<std::size_t>::max() : 0;
  for (Vertex v = 0; v < n_; ++v) r = std::min(r, degree(v));
  return r;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t r = 0;
  for (Vertex v = 0; v < n_; ++v) r = std::max(r, degree(v));
  return r;
}

namespace {

void check_set(const Graph& g, const VertexSet& U) {
  for (Vertex u : U)
    if (u >= g.n()) throw PreconditionError("vertex " + std::to_string(u) + " out of range");
}

}  // namespace

std::uint64_t edge_count_between(const Graph& g, const VertexSet& U, const VertexSet& W) {
  check_set(g, U);
  check_set(g, W);
  std::vector<std::uint8_t> inW(g.n(), 0);
  for (Vertex w : W) inW[w] = 1;
  std::uint64_t c = 0;
  for (Vertex u : U)
    for (Vertex x : g.neighbors(u)) c += inW[x];
  return c;
}

std::uint64_t induced_edges(const Graph& g, const VertexSet& U) {
  check_set(g, U);
  std::vector<std::uint8_t> inU(g.n(), 0);
  for (Vertex u : U) inU[u] = 1;
  std::uint64_t s = 0, loops = 0;
  for (Vertex u : U)
    for (Vertex x : g.neighbors(u)) {
      if (x == u)
        ++loops;
      else
        s += inU[x];
    }
  return s / 2 + loops;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats st;
  const std::size_t n = g.n();
  if (n == 0) return st;
  st.min = g.min_degree();
  st.max = g.max_degree();
  __int128 sum = 0, sumsq = 0;
  for (Vertex v = 0; v < n; ++v) {
    const __int128 d = g.degree(v);
    sum += d;
    sumsq += d * d;
  }
  st.sum = static_cast<std::uint64_t>(sum);
  st.mean = static_cast<double>(sum) / static_cast<double>(n);
  // K = (n sumsq - sum^2) / n
  __int128 num = static_cast<__int128>(n) * sumsq - sum * sum;
  __int128 den = n;
  __int128 a = num, b = den;
  while (b) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a != 0) {
    num /= a;
    den /= a;
  } else {
    den = 1;
  }
  st.k_num = static_cast<std::int64_t>(num);
  st.k_den = static_cast<std::int64_t>(den);
  return st;
}

CodegreeStats codegree_stats(const Graph& g, double p, std::size_t cap) {
  const std::size_t n = g.n();
  if (n > cap) throw CapExceeded("codegree table needs n <= " + std::to_string(cap));
  CodegreeStats cs;
  cs.n = n;
  cs.p = p;
  cs.table.assign(n * n, 0);
  for (Vertex z = 0; z < n; ++z) {
    auto nb = g.neighbors(z);
    for (Vertex x : nb) {
      std::uint16_t* row = cs.table.data() + std::size_t{x} * n;
      for (Vertex y : nb) ++row[y];
    }
  }
  cs.s_of.assign(n * n, 0);
  const double target_c = p * p * double(n);
  const double target_s = (p * p + (1 - p) * (1 - p)) * double(n);
  cs.min_codeg = n > 1 ? std::numeric_limits<std::uint32_t>::max() : 0;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) {
      const std::int64_t c = cs.codeg(x, y);
      const std::int64_t s = std::int64_t(n) - std::int64_t(g.degree(x)) - std::int64_t(g.degree(y)) + 2 * c;
      cs.s_of[std::size_t{x} * n + y] = s;
      if (x >= y) continue;
      cs.max_codeg = std::max<std::uint32_t>(cs.max_codeg, c);
      cs.min_codeg = std::min<std::uint32_t>(cs.min_codeg, c);
      cs.codeg_dev_sum += std::abs(double(c) - target_c);
      cs.s_dev_sum += std::abs(double(s) - target_s);
    }
  return cs;
}

std::uint32_t codegree(const Graph& g, Vertex x, Vertex y) {
  if (x >= g.n() || y >= g.n()) throw PreconditionError("vertex out of range");
  auto a = g.neighbors(x), b = g.neighbors(y);
  std::uint32_t c = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (b[j] < a[i])
      ++j;
    else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

namespace {

// Unit-capacity max flow with BFS augmentation.
class FlowNet {
 public:
  explicit FlowNet(std::size_t nodes) : head_(nodes, -1) {}

  void arc(int u, int v, int cap, int back_cap = 0) {
    to_.push_back(v);
    cap_.push_back(cap);
    next_.push_back(head_[u]);
    head_[u] = static_cast<int>(to_.size()) - 1;
    to_.push_back(u);
    cap_.push_back(back_cap);
    next_.push_back(head_[v]);
    head_[v] = static_cast<int>(to_.size()) - 1;
  }

  std::size_t maxflow(int s, int t, std::size_t limit) {
    std::size_t flow = 0;
    std::vector<int> via(head_.size());
    std::vector<int> q;
    q.reserve(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -2);
      via[s] = -1;
      q.clear();
      q.push_back(s);
      for (std::size_t qi = 0; qi < q.size() && via[t] == -2; ++qi) {
        const int u = q[qi];
        for (int e = head_[u]; e != -1; e = next_[e])
          if (cap_[e] > 0 && via[to_[e]] == -2) {
            via[to_[e]] = e;
            q.push_back(to_[e]);
          }
      }
      if (via[t] == -2) break;
      for (int v = t; v != s;) {
        const int e = via[v];
        --cap_[e];
        ++cap_[e ^ 1];
        v = to_[e ^ 1];
      }
      ++flow;
    }
    return flow;
  }

 private:
  std::vector<int> head_, to_, cap_, next_;
};

}  // namespace

std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t limit) {
  const std::size_t n = g.n();
  const int big = static_cast<int>(n + 1);
  FlowNet f(2 * n);
  for (Vertex v = 0; v < n; ++v) f.arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u))
      if (u != v) f.arc(2 * u + 1, 2 * v, big);
  return f.maxflow(2 * s + 1, 2 * t, limit);
}

std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.n();
  if (n < 2) throw PreconditionError("connectivity needs at least two vertices");
  if (!is_connected(g)) return 0;
  std::size_t best = n - 1;
  Vertex v = 0;
  for (Vertex x = 0; x < n; ++x) {
    const std::size_t d = g.degree(x) - (g.has_loop(x) ? 1 : 0);
    if (d < best) {
      best = d;
      v = x;
    }
  }
  // Esfahanian-Hakimi: a minimum separator either avoids v, and then splits v
  // from some non-neighbour, or contains v, and then splits two neighbours of v.
  for (Vertex j = 0; j < n; ++j)
    if (j != v && !g.has_edge(v, j)) best = std::min(best, local_vertex_connectivity(g, v, j, best));
  std::vector<Vertex> nb;
  for (Vertex x : g.neighbors(v))
    if (x != v) nb.push_back(x);
  for (std::size_t a = 0; a < nb.size(); ++a)
    for (std::size_t b = a + 1; b < nb.size(); ++b)
      if (!g.has_edge(nb[a], nb[b])) best = std::min(best, local_vertex_connectivity(g, nb[a], nb[b], best));
  return best;
}

std::size_t edge_connectivity(const Graph& g) {
  const std::size_t n = g.n();
  if (n < 2) throw PreconditionError("connectivity needs at least two vertices");
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (Vertex v = 0; v < n; ++v) best = std::min(best, g.degree(v) - (g.has_loop(v) ? 1 : 0));
  for (Vertex t = 1; t < n && best > 0; ++t) {
    FlowNet f(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v : g.neighbors(u))
        if (u < v) f.arc(u, v, 1, 1);
    best = std::min(best, f.maxflow(0, t, best));
  }
  return best;
}

std::vector<VertexSet> components(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<VertexSet> out;
  for (Vertex r = 0; r < n; ++r) {
    if (seen[r]) continue;
    VertexSet comp{r};
    seen[r] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex x : g.neighbors(comp[i]))
        if (!seen[x]) {
          seen[x] = 1;
          comp.push_back(x);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return g.n() <= 1 || components(g).size() == 1; }

std::size_t girth(const Graph& g) {
  const std::size_t n = g.n();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<int> dist(n), parent(n);
  std::vector<Vertex> q;
  for (Vertex r = 0; r < n; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[r] = 0;
    parent[r] = -1;
    q.assign(1, r);
    for (std::size_t i = 0; i < q.size(); ++i) {
      const Vertex u = q[i];
      if (2 * std::size_t(dist[u]) + 1 >= best) break;
      for (Vertex v : g.neighbors(u)) {
        if (v == u) continue;
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = static_cast<int>(u);
          q.push_back(v);
        } else if (parent[u] != static_cast<int>(v)) {
          best = std::min<std::size_t>(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  return best == std::numeric_limits<std::size_t>::max() ? 0 : best;
}

Graph induced_subgraph(const Graph& g, const VertexSet& U) {
  check_set(g, U);
  std::vector<std::int64_t> pos(g.n(), -1);
  for (std::size_t i = 0; i < U.size(); ++i) pos[U[i]] = static_cast<std::int64_t>(i);
  std::vector<std::vector<Vertex>> lists(U.size());
  for (std::size_t i = 0; i < U.size(); ++i)
    for (Vertex x : g.neighbors(U[i]))
      if (pos[x] >= 0) lists[i].push_back(static_cast<Vertex>(pos[x]));
  return Graph::from_neighbor_lists(std::move(lists));
}

Graph complement(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::vector<Vertex>> lists(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && !g.has_edge(u, v)) lists[u].push_back(v);
  return Graph::from_neighbor_lists(std::move(lists));
}

std::vector<std::uint8_t> adjacency_matrix(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<std::uint8_t> a(n * n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) a[std::size_t{u} * n + v] = 1;
  return a;
}

}  // namespace pseudograph
