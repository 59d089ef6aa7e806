#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>

#include "pseudograph/oracles.hpp"
#include "pseudograph/rng.hpp"

namespace pseudograph {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  std::uint64_t r = static_cast<std::uint64_t>(z & kMersenne61) + static_cast<std::uint64_t>(z >> 61);
  if (r >= kMersenne61) r -= kMersenne61;
  return r;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::size_t tutte_rank(const Graph& g, std::uint64_t seed) {
  const std::size_t n = g.n();
  std::vector<std::vector<std::uint64_t>> T(n, std::vector<std::uint64_t>(n, 0));
  SplitMix64 rng(seed);
  for (auto [u, v] : g.edges()) {
    if (u == v) continue;
    const std::uint64_t x = 1 + rng.below(kMersenne61 - 1);
    T[u][v] = x;
    T[v][u] = kMersenne61 - x;
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < n; ++col) {
    std::size_t piv = rank;
    while (piv < n && T[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(T[piv], T[rank]);
    const std::uint64_t inv = powmod(T[rank][col], kMersenne61 - 2);
    for (std::size_t r = rank + 1; r < n; ++r) {
      if (T[r][col] == 0) continue;
      const std::uint64_t f = mulmod(T[r][col], inv);
      for (std::size_t c = col; c < n; ++c) {
        const std::uint64_t sub = mulmod(f, T[rank][c]);
        T[r][c] = T[r][c] >= sub ? T[r][c] - sub : T[r][c] + kMersenne61 - sub;
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<Edge> maximum_matching(const Graph& g) {
  // Edmonds' blossom algorithm with explicit base contraction.
  const int n = static_cast<int>(g.n());
  std::vector<int> match(n, -1), p(n), base(n);
  std::vector<char> used(n), blossom(n);
  auto lca = [&](int a, int b) {
    std::vector<char> seen(n, 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (match[a] == -1) break;
      a = p[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = p[match[b]];
    }
  };
  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[match[v]]] = 1;
      p[v] = child;
      child = match[v];
      v = p[match[v]];
    }
  };
  auto find_path = [&](int root) {
    std::fill(used.begin(), used.end(), 0);
    std::fill(p.begin(), p.end(), -1);
    std::iota(base.begin(), base.end(), 0);
    used[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (Vertex tv : g.neighbors(static_cast<Vertex>(v))) {
        const int to = static_cast<int>(tv);
        if (to == v || base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && p[match[to]] != -1)) {
          const int cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                q.push(i);
              }
            }
        } else if (p[to] == -1) {
          p[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = 1;
          q.push(match[to]);
        }
      }
    }
    return -1;
  };
  for (int v = 0; v < n; ++v) {
    if (match[v] != -1) continue;
    int u = find_path(v);
    while (u != -1) {
      const int pv = p[u], ppv = match[pv];
      match[u] = pv;
      match[pv] = u;
      u = ppv;
    }
  }
  std::vector<Edge> out;
  for (int v = 0; v < n; ++v)
    if (match[v] > v) out.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(match[v]));
  return out;
}

OracleResult matching(const Graph& g, MatchingMode mode, std::uint64_t seed) {
  const auto t0 = Clock::now();
  const std::size_t n = g.n();
  OracleResult r;
  r.oracle = mode == MatchingMode::exists_perfect ? "perfect_matching" : "perfect_matching_count";
  r.known = true;
  if (n % 2 == 1) {
    r.note = "odd number of vertices";
    r.seconds = since(t0);
    return r;
  }
  if (mode == MatchingMode::count_perfect) {
    if (n > 32) throw CapExceeded("perfect matching count needs n <= 32");
    std::vector<std::uint32_t> nb(n, 0);
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u : g.neighbors(v))
        if (u != v) nb[v] |= std::uint32_t{1} << u;
    std::unordered_map<std::uint32_t, std::uint64_t> memo;
    std::function<std::uint64_t(std::uint32_t)> rec = [&](std::uint32_t rest) -> std::uint64_t {
      if (rest == 0) return 1;
      if (auto it = memo.find(rest); it != memo.end()) return it->second;
      ++r.nodes;
      const int v = std::countr_zero(rest);
      std::uint32_t cand = nb[v] & rest;
      std::uint64_t total = 0;
      while (cand) {
        const int u = std::countr_zero(cand);
        cand &= cand - 1;
        total += rec(rest & ~(std::uint32_t{1} << v) & ~(std::uint32_t{1} << u));
      }
      memo.emplace(rest, total);
      return total;
    };
    const std::uint32_t all = n == 32 ? ~0u : (std::uint32_t{1} << n) - 1;
    r.value = r.lower = r.upper = static_cast<std::int64_t>(rec(all));
    r.seconds = since(t0);
    return r;
  }

  // Randomized: a full-rank evaluation proves existence; 8 failures make
  // absence overwhelmingly likely.
  bool random_says = false;
  int trials = 0;
  for (int i = 0; i < 8 && !random_says; ++i) {
    ++trials;
    random_says = tutte_rank(g, split_seed(seed, static_cast<std::uint64_t>(i))) == n;
  }
  r.edges = maximum_matching(g);
  const bool det_says = 2 * r.edges.size() == n;
  r.randomized = true;
  r.value = r.lower = r.upper = det_says ? 1 : 0;
  r.nodes = static_cast<std::uint64_t>(trials);
  r.note = std::string("tutte_rank:") + (random_says ? "full" : "deficient") + " trials=" + std::to_string(trials) +
           " blossom:" + (det_says ? "perfect" : "not_perfect");
  if (random_says != det_says) r.note += " DISAGREEMENT";
  if (!det_says) r.edges.clear();
  r.seconds = since(t0);
  return r;
}

BigInt count_subgraph_copies(const Graph& g, const Graph& h, bool induced) {
  const std::size_t k = h.n();
  if (k > 6) throw CapExceeded("pattern graphs are limited to 6 vertices");
  if (k == 0) return 1;
  // Order pattern vertices so each one after the first touches an earlier one when possible.
  std::vector<Vertex> order;
  std::vector<std::uint8_t> placed(k, 0);
  while (order.size() < k) {
    Vertex pick = static_cast<Vertex>(k);
    std::size_t best = 0;
    for (Vertex v = 0; v < k; ++v) {
      if (placed[v]) continue;
      std::size_t links = 0;
      for (Vertex u : order)
        if (h.has_edge(u, v)) ++links;
      if (pick == k || links > best || (links == best && h.degree(v) > h.degree(pick))) {
        pick = v;
        best = links;
      }
    }
    placed[pick] = 1;
    order.push_back(pick);
  }
  const std::size_t n = g.n();
  std::vector<Vertex> img(k);
  std::vector<std::uint8_t> taken(n, 0);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) {
      ++count;
      return;
    }
    const Vertex hv = order[i];
    auto ok = [&](Vertex x) {
      if (taken[x]) return false;
      for (std::size_t j = 0; j < i; ++j) {
        const bool he = h.has_edge(order[j], hv);
        const bool ge = g.has_edge(img[order[j]], x);
        if (he && !ge) return false;
        if (induced && !he && ge) return false;
      }
      return true;
    };
    auto take = [&](Vertex x) {
      img[hv] = x;
      taken[x] = 1;
      rec(i + 1);
      taken[x] = 0;
    };
    std::size_t anchor = i;
    for (std::size_t j = 0; j < i && anchor == i; ++j)
      if (h.has_edge(order[j], hv)) anchor = j;
    if (anchor < i) {
      for (Vertex x : g.neighbors(img[order[anchor]]))
        if (ok(x)) take(x);
    } else {
      for (Vertex x = 0; x < n; ++x)
        if (ok(x)) take(x);
    }
  };
  rec(0);
  return BigInt(count);
}

std::uint64_t automorphism_count(const Graph& h) {
  const std::size_t k = h.n();
  if (k > 9) throw CapExceeded("automorphism brute force needs n <= 9");
  std::vector<Vertex> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t c = 0;
  do {
    bool ok = true;
    for (Vertex u = 0; u < k && ok; ++u)
      for (Vertex v = 0; v < k && ok; ++v) ok = h.has_edge(u, v) == h.has_edge(perm[u], perm[v]);
    c += ok;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return c;
}

BigInt count_spanning_trees(const Graph& g) {
  const std::size_t n = g.n();
  if (n > 500) throw CapExceeded("spanning tree count needs n <= 500");
  if (n == 0) return 0;
  if (!is_connected(g)) return 0;
  if (n == 1) return 1;
  const std::size_t k = n - 1;
  std::vector<std::vector<BigInt>> M(k, std::vector<BigInt>(k, 0));
  for (Vertex u = 0; u < k; ++u)
    for (Vertex v : g.neighbors(u)) {
      if (v == u) continue;
      M[u][u] += 1;
      if (v < k) M[u][v] -= 1;
    }
  // Bareiss fraction-free elimination.
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (M[i][i] == 0) {
      std::size_t r = i + 1;
      while (r < k && M[r][i] == 0) ++r;
      if (r == k) return 0;
      std::swap(M[i], M[r]);
      sign = -sign;
    }
    for (std::size_t r = i + 1; r < k; ++r) {
      for (std::size_t c = i + 1; c < k; ++c) M[r][c] = (M[r][c] * M[i][i] - M[r][i] * M[i][c]) / prev;
      M[r][i] = 0;
    }
    prev = M[i][i];
  }
  BigInt det = M[k - 1][k - 1];
  return sign < 0 ? BigInt(-det) : det;
}

}  // namespace pseudograph
