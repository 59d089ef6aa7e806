#pragma once

// Slow, obviously-correct reference computations used only by tests. None of
// them call into the library beyond reading a Graph's adjacency.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "pseudograph/graph.hpp"

namespace brute {

using pseudograph::Graph;
using pseudograph::Vertex;

using Matrix = std::vector<std::vector<int>>;

inline Matrix adjacency(const Graph& g) {
  Matrix a(g.n(), std::vector<int>(g.n(), 0));
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u)) a[u][v] = 1;
  return a;
}

/// Cyclic Jacobi eigenvalues of a symmetric matrix, ascending.
inline std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline std::vector<double> eigenvalues(const Graph& g) {
  const Matrix a = adjacency(g);
  std::vector<std::vector<double>> d(g.n(), std::vector<double>(g.n()));
  for (std::size_t i = 0; i < g.n(); ++i)
    for (std::size_t j = 0; j < g.n(); ++j) d[i][j] = a[i][j];
  return jacobi_eigenvalues(d);
}

/// 1_U^T A 1_W.
inline long long e_between(const Matrix& a, std::uint64_t U, std::uint64_t W) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (U >> i & 1)
      for (std::size_t j = 0; j < a.size(); ++j)
        if (W >> j & 1) s += a[i][j];
  return s;
}

inline int alpha(const Graph& g) {
  const Matrix a = adjacency(g);
  const std::size_t n = g.n();
  int best = 0;
  for (std::uint64_t S = 0; S < (std::uint64_t{1} << n); ++S) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if (S >> i & 1)
        for (std::size_t j = i; j < n && ok; ++j)
          if ((S >> j & 1) && a[i][j]) ok = false;
    if (ok) best = std::max(best, std::popcount(S));
  }
  return best;
}

inline bool colorable(const Matrix& a, int k) {
  const std::size_t n = a.size();
  std::vector<int> c(n, -1);
  std::function<bool(std::size_t)> go = [&](std::size_t v) {
    if (v == n) return true;
    for (int x = 0; x < k; ++x) {
      bool ok = true;
      for (std::size_t u = 0; u < v; ++u)
        if (a[u][v] && c[u] == x) ok = false;
      if (!ok) continue;
      c[v] = x;
      if (go(v + 1)) return true;
    }
    c[v] = -1;
    return false;
  };
  return go(0);
}

inline int chi(const Graph& g) {
  const Matrix a = adjacency(g);
  for (int k = 1;; ++k)
    if (colorable(a, k)) return k;
}

inline long long maxcut(const Graph& g) {
  const Matrix a = adjacency(g);
  const std::size_t n = g.n();
  long long best = 0;
  for (std::uint64_t S = 0; S < (std::uint64_t{1} << n); ++S) {
    long long c = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (a[i][j] && ((S >> i & 1) != (S >> j & 1))) ++c;
    best = std::max(best, c);
  }
  return best;
}

/// Undirected Hamilton cycles by permutations fixing vertex 0.
inline long long hamilton_cycles(const Graph& g) {
  const Matrix a = adjacency(g);
  const std::size_t n = g.n();
  if (n < 3) return 0;
  std::vector<std::size_t> p(n - 1);
  std::iota(p.begin(), p.end(), 1);
  long long cnt = 0;
  do {
    bool ok = a[0][p.front()] && a[p.back()][0];
    for (std::size_t i = 0; i + 1 < p.size() && ok; ++i) ok = a[p[i]][p[i + 1]];
    if (ok) ++cnt;
  } while (std::next_permutation(p.begin(), p.end()));
  return cnt / 2;
}

inline long long perfect_matchings(const Graph& g) {
  const Matrix a = adjacency(g);
  const std::size_t n = g.n();
  std::function<long long(std::uint64_t)> go = [&](std::uint64_t used) -> long long {
    std::size_t i = 0;
    while (i < n && (used >> i & 1)) ++i;
    if (i == n) return 1;
    long long s = 0;
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(used >> j & 1) && a[i][j]) s += go(used | (std::uint64_t{1} << i) | (std::uint64_t{1} << j));
    return s;
  };
  return n % 2 ? 0 : go(0);
}

/// Spanning trees by deletion-contraction on a loopless multigraph given as
/// an edge multiset.
inline long long spanning_trees_dc(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  edges.erase(std::remove_if(edges.begin(), edges.end(), [](auto e) { return e.first == e.second; }), edges.end());
  if (n == 1) return 1;
  if (edges.empty()) return 0;
  const auto [u, v] = edges.back();
  edges.pop_back();
  const long long del = spanning_trees_dc(n, edges);
  // contract v into u, relabel the last vertex as v
  std::vector<std::pair<std::size_t, std::size_t>> c;
  for (auto [x, y] : edges) {
    auto f = [&](std::size_t z) {
      if (z == v) z = u;
      if (z == n - 1) z = v == n - 1 ? u : v;
      return z;
    };
    c.emplace_back(f(x), f(y));
  }
  return del + spanning_trees_dc(n - 1, c);
}

inline long long spanning_trees(const Graph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (auto [u, v] : g.edges())
    if (u != v) e.emplace_back(u, v);
  return spanning_trees_dc(g.n(), e);
}

/// Minimum spanning tree weight by trying every (n-1)-subset of edges.
inline double mst_exhaustive(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                             const std::vector<double>& w) {
  const std::size_t m = edges.size();
  double best = INFINITY;
  std::vector<int> pick(m, 0);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(n - 1), pick.end(), 1);
  do {
    std::vector<std::size_t> root(n);
    std::iota(root.begin(), root.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return root[x] == x ? x : root[x] = find(root[x]); };
    bool tree = true;
    double s = 0;
    for (std::size_t i = 0; i < m && tree; ++i)
      if (pick[i]) {
        const std::size_t a = find(edges[i].first), b = find(edges[i].second);
        if (a == b) tree = false;
        root[a] = b;
        s += w[i];
      }
    if (tree) best = std::min(best, s);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

/// Vertex connectivity by removing every subset of size < n-1.
inline std::size_t vertex_connectivity(const Graph& g) {
  const Matrix a = adjacency(g);
  const std::size_t n = g.n();
  std::size_t best = n - 1;
  for (std::uint64_t S = 0; S < (std::uint64_t{1} << n); ++S) {
    const std::size_t k = static_cast<std::size_t>(std::popcount(S));
    if (k >= best || n - k < 2) continue;
    std::vector<int> seen(n, 0);
    std::size_t start = 0;
    while (S >> start & 1) ++start;
    std::vector<std::size_t> st{start};
    seen[start] = 1;
    std::size_t reached = 1;
    while (!st.empty()) {
      const std::size_t x = st.back();
      st.pop_back();
      for (std::size_t y = 0; y < n; ++y)
        if (a[x][y] && !seen[y] && !(S >> y & 1)) {
          seen[y] = 1;
          ++reached;
          st.push_back(y);
        }
    }
    if (reached < n - k) best = k;
  }
  return best;
}

/// Labeled copies of h in g (non-induced) by trying every injection.
inline long long labeled_copies(const Graph& g, const Graph& h) {
  const Matrix a = adjacency(g), b = adjacency(h);
  const std::size_t n = g.n(), k = h.n();
  std::vector<std::size_t> img(k);
  std::vector<int> used(n, 0);
  std::function<long long(std::size_t)> go = [&](std::size_t i) -> long long {
    if (i == k) return 1;
    long long s = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (used[x]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        if (b[i][j] && !a[x][img[j]]) ok = false;
      if (!ok) continue;
      used[x] = 1;
      img[i] = x;
      s += go(i + 1);
      used[x] = 0;
    }
    return s;
  };
  return go(0);
}

}  // namespace brute
