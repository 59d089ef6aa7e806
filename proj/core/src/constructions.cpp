#include "pseudograph/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numeric>
#include <string>
#include <unordered_set>

#include "pseudograph/finite_field.hpp"
#include "pseudograph/rng.hpp"

namespace pseudograph {

bool SrgParams::feasible() const noexcept {
  if (n <= 0 || d < 0 || d >= n || eta < 0 || mu < 0 || eta > d || mu > d) return false;
  return d * (d - eta - 1) == (n - d - 1) * mu;
}

std::string ForbiddenClaim::name() const {
  switch (kind) {
    case Kind::clique: return "K" + std::to_string(a);
    case Kind::cycle: return "C" + std::to_string(a);
    case Kind::biclique: return "K" + std::to_string(a) + "," + std::to_string(b);
    case Kind::odd_cycles_upto: return "odd_cycles<=" + std::to_string(a);
  }
  return "?";
}

// ---------------------------------------------------------------- classic

Graph complete_graph(std::size_t n) {
  std::vector<std::vector<Vertex>> l(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) l[u].push_back(v);
  return Graph::from_neighbor_lists(std::move(l));
}

Graph empty_graph(std::size_t n) { return Graph::from_neighbor_lists(std::vector<std::vector<Vertex>>(n)); }

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edge_list(n, e);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, e);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph::from_edge_list(leaves + 1, e);
}

Graph complete_multipartite(const std::vector<std::size_t>& parts) {
  std::vector<std::size_t> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i) part_of.insert(part_of.end(), parts[i], i);
  const std::size_t n = part_of.size();
  std::vector<std::vector<Vertex>> l(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (part_of[u] != part_of[v]) l[u].push_back(v);
  return Graph::from_neighbor_lists(std::move(l));
}

Graph complete_bipartite(std::size_t a, std::size_t b) { return complete_multipartite({a, b}); }

Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  return Graph::from_edge_list(10, e);
}

Graph hypercube(std::size_t dim) {
  const std::size_t n = std::size_t{1} << dim;
  std::vector<std::vector<Vertex>> l(n);
  for (Vertex x = 0; x < n; ++x)
    for (std::size_t i = 0; i < dim; ++i) l[x].push_back(x ^ (Vertex{1} << i));
  return Graph::from_neighbor_lists(std::move(l));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::vector<Vertex>> l(a.n() + b.n());
  for (Vertex v = 0; v < a.n(); ++v)
    for (Vertex u : a.neighbors(v)) l[v].push_back(u);
  const Vertex off = static_cast<Vertex>(a.n());
  for (Vertex v = 0; v < b.n(); ++v)
    for (Vertex u : b.neighbors(v)) l[v + off].push_back(u + off);
  return Graph::from_neighbor_lists(std::move(l));
}

// ---------------------------------------------------------------- random

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("edge probability must lie in [0,1]");
  SplitMix64 rng(seed);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform() < p) e.emplace_back(u, v);
  return Graph::from_edge_list(n, e);
}

Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed, std::size_t restart_cap) {
  if ((n * d) % 2 != 0) throw PreconditionError("n*d must be even");
  if (d >= n && n > 0) throw PreconditionError("degree must be below n");
  SplitMix64 rng(seed);
  std::vector<Vertex> points(n * d);
  for (std::size_t attempt = 0; attempt < restart_cap; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / d);
    for (std::size_t i = points.size(); i > 1; --i) std::swap(points[i - 1], points[rng.below(i)]);
    std::vector<std::vector<Vertex>> l(n);
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      const Vertex u = points[i], v = points[i + 1];
      if (u == v || std::find(l[u].begin(), l[u].end(), v) != l[u].end()) {
        ok = false;
        break;
      }
      l[u].push_back(v);
      l[v].push_back(u);
    }
    if (ok) return Graph::from_neighbor_lists(std::move(l));
  }
  throw CapExceeded("configuration model: no simple pairing within " + std::to_string(restart_cap) + " restarts");
}

// ---------------------------------------------------------------- algebraic

namespace {

FiniteField field_of_order(std::uint32_t q) {
  auto pk = prime_power(q);
  if (!pk) throw PreconditionError(std::to_string(q) + " is not a prime power");
  return FiniteField(pk->first, pk->second);
}

}  // namespace

Graph paley(std::uint32_t q) {
  if (q % 4 != 1) throw PreconditionError("Paley graph needs q = 1 mod 4");
  const FiniteField F = field_of_order(q);
  std::vector<std::uint8_t> square(q, 0);
  for (std::uint32_t x = 1; x < q; ++x) square[x] = F.quad_char_i(x) == 1;
  std::vector<std::vector<Vertex>> l(q);
  for (Vertex a = 0; a < q; ++a)
    for (Vertex b = 0; b < q; ++b)
      if (square[F.sub_i(a, b)]) l[a].push_back(b);
  return Graph::from_neighbor_lists(std::move(l));
}

Graph inner_product_graph(std::uint32_t k) {
  if (k % 2 == 0) throw PreconditionError("inner product graph needs odd k");
  if (k < 3 || k > 25) throw PreconditionError("inner product graph needs 3 <= k <= 25");
  const std::uint32_t all = (1u << k) - 1;
  std::vector<std::uint32_t> verts;
  for (std::uint32_t x = 1; x < all; ++x)
    if (std::popcount(x) % 2 == 1) verts.push_back(x);
  std::vector<std::vector<Vertex>> l(verts.size());
  for (Vertex i = 0; i < verts.size(); ++i)
    for (Vertex j = 0; j < verts.size(); ++j)
      if (i != j && std::popcount(verts[i] & verts[j]) % 2 == 1) l[i].push_back(j);
  return Graph::from_neighbor_lists(std::move(l));
}

Graph dgt_graph(std::uint32_t q, std::uint32_t k, std::optional<std::vector<std::uint32_t>> directions) {
  const FiniteField F = field_of_order(q);
  std::vector<std::uint32_t> dirs;
  if (directions) {
    dirs = *directions;
    std::vector<std::uint32_t> s = dirs;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw PreconditionError("repeated direction");
    for (auto d : dirs)
      if (d > q) throw PreconditionError("direction index must be in [0, q]");
  } else {
    if (k < 1 || k > q + 1) throw PreconditionError("need 1 <= k <= q+1");
    for (std::uint32_t i = 0; i < k; ++i) dirs.push_back(i);
  }
  const std::size_t n = std::size_t{q} * q;
  std::vector<std::vector<Vertex>> l(n);
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = 0; y < q; ++y) {
      auto& row = l[std::size_t{x} * q + y];
      for (auto d : dirs) {
        const std::uint32_t dx = d < q ? 1 : 0, dy = d < q ? d : 1;
        for (std::uint32_t t = 1; t < q; ++t) {
          const std::uint32_t nx = F.add_i(x, F.mul_i(t, dx)), ny = F.add_i(y, F.mul_i(t, dy));
          row.push_back(static_cast<Vertex>(std::size_t{nx} * q + ny));
        }
      }
    }
  return Graph::from_neighbor_lists(std::move(l));
}

Graph pg_polarity(std::uint32_t q, std::uint32_t t) {
  if (t < 2) throw PreconditionError("projective dimension must be at least 2");
  const FiniteField F = field_of_order(q);
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i <= t; ++i) {
    total *= q;
    if (total > (1u << 24)) throw CapExceeded("projective space too large");
  }
  std::vector<std::vector<std::uint32_t>> pts;
  for (std::uint64_t r = 1; r < total; ++r) {
    std::vector<std::uint32_t> x(t + 1);
    std::uint64_t s = r;
    for (std::size_t i = t + 1; i-- > 0;) {
      x[i] = static_cast<std::uint32_t>(s % q);
      s /= q;
    }
    auto first = std::find_if(x.begin(), x.end(), [](std::uint32_t c) { return c != 0; });
    if (*first == 1) pts.push_back(std::move(x));
  }
  std::vector<std::vector<Vertex>> l(pts.size());
  for (Vertex a = 0; a < pts.size(); ++a)
    for (Vertex b = 0; b < pts.size(); ++b) {
      std::uint32_t dot = 0;
      for (std::size_t i = 0; i <= t; ++i) dot = F.add_i(dot, F.mul_i(pts[a][i], pts[b][i]));
      if (dot == 0) l[a].push_back(b);
    }
  return Graph::from_neighbor_lists(std::move(l));
}

CayleyResult cayley_abelian(const std::vector<std::uint64_t>& factors,
                            const std::vector<std::vector<std::uint64_t>>& S) {
  std::uint64_t n = 1;
  for (auto f : factors) {
    if (f == 0) throw PreconditionError("cyclic factor of order zero");
    n *= f;
    if (n > (1u << 22)) throw CapExceeded("group too large");
  }
  const std::size_t r = factors.size();
  auto encode = [&](const std::vector<std::uint64_t>& g) {
    std::uint64_t x = 0;
    for (std::size_t j = 0; j < r; ++j) x = x * factors[j] + g[j];
    return x;
  };
  auto decode = [&](std::uint64_t x) {
    std::vector<std::uint64_t> g(r);
    for (std::size_t j = r; j-- > 0;) {
      g[j] = x % factors[j];
      x /= factors[j];
    }
    return g;
  };
  std::vector<std::uint64_t> codes;
  for (const auto& s : S) {
    if (s.size() != r) throw PreconditionError("generator has the wrong rank");
    for (std::size_t j = 0; j < r; ++j)
      if (s[j] >= factors[j]) throw PreconditionError("generator coordinate out of range");
    codes.push_back(encode(s));
  }
  std::unordered_set<std::uint64_t> set(codes.begin(), codes.end());
  if (set.size() != codes.size()) throw PreconditionError("repeated generator");
  if (set.count(0)) throw PreconditionError("identity in connection set");
  for (const auto& s : S) {
    std::vector<std::uint64_t> neg(r);
    for (std::size_t j = 0; j < r; ++j) neg[j] = (factors[j] - s[j]) % factors[j];
    if (!set.count(encode(neg))) throw PreconditionError("connection set is not symmetric");
  }
  std::vector<std::vector<Vertex>> l(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    const auto g = decode(x);
    std::vector<std::uint64_t> h(r);
    for (const auto& s : S) {
      for (std::size_t j = 0; j < r; ++j) h[j] = (g[j] + s[j]) % factors[j];
      l[x].push_back(static_cast<Vertex>(encode(h)));
    }
  }
  CayleyResult res{Graph::from_neighbor_lists(std::move(l)), {}};
  res.predicted.reserve(n);
  for (std::uint64_t a = 0; a < n; ++a) {
    const auto idx = decode(a);
    std::complex<double> sum = 0;
    for (const auto& s : S) sum += char_eval(factors, idx, s);
    res.predicted.push_back(sum.real());
  }
  std::sort(res.predicted.begin(), res.predicted.end(), std::greater<>());
  return res;
}

Graph power_residue_cayley(std::uint32_t q, std::uint32_t k) {
  if (k == 0 || (q - 1) % k != 0) throw PreconditionError("k must divide q-1");
  const FiniteField F = field_of_order(q);
  std::vector<std::uint8_t> inS(q, 0);
  for (std::uint32_t y = 1; y < q; ++y) inS[F.pow_i(y, k)] = 1;
  if (!inS[F.neg_i(1)])
    throw PreconditionError("k-th powers in GF(" + std::to_string(q) + ") with k=" + std::to_string(k) +
                            " do not contain -1, so the connection set is not symmetric");
  std::vector<std::vector<Vertex>> l(q);
  for (Vertex a = 0; a < q; ++a)
    for (Vertex b = 0; b < q; ++b)
      if (inS[F.sub_i(a, b)]) l[a].push_back(b);
  return Graph::from_neighbor_lists(std::move(l));
}

std::vector<std::uint64_t> alon_generators(std::uint32_t k, std::uint32_t h) {
  if (h < 1) throw PreconditionError("h must be at least 1");
  if (k < 2 || (2 * h + 1) * k > 60) throw PreconditionError("need k >= 2 and (2h+1)k <= 60");
  const std::uint64_t m = (std::uint64_t{1} << k) - 1;
  if (m % (4 * h + 3) == 0)
    throw PreconditionError(std::to_string(4 * h + 3) + " divides 2^" + std::to_string(k) + "-1");
  const FiniteField F(2, k);
  auto vec = [&](std::uint32_t w) {
    std::uint64_t v = 0;
    for (std::uint32_t j = 0; j <= 2 * h; ++j) v |= std::uint64_t{F.pow_i(w, 2 * j + 1)} << (j * k);
    return v;
  };
  std::vector<std::uint64_t> u0, u1;
  for (std::uint32_t w = 1; w < F.q(); ++w) (F.leading_coeff_i(F.pow_i(w, 4 * h + 3)) ? u1 : u0).push_back(vec(w));
  std::vector<std::uint64_t> S;
  S.reserve(u0.size() * u1.size());
  for (auto a : u0)
    for (auto b : u1) S.push_back(a ^ b);
  std::sort(S.begin(), S.end());
  if (std::adjacent_find(S.begin(), S.end()) != S.end())
    throw PreconditionError("connection set has repeated sums");
  return S;
}

Graph cayley_z2(std::uint32_t bits, const std::vector<std::uint64_t>& S) {
  const std::size_t n = std::size_t{1} << bits;
  std::vector<std::vector<Vertex>> l(n);
  for (std::size_t x = 0; x < n; ++x) {
    l[x].reserve(S.size());
    for (auto s : S) l[x].push_back(static_cast<Vertex>(x ^ s));
  }
  return Graph::from_neighbor_lists(std::move(l));
}

bool z2_has_short_odd_cycle(std::uint32_t bits, const std::vector<std::uint64_t>& S, std::uint32_t max_len) {
  if (bits > 28) throw CapExceeded("group too large for sum-set search");
  const std::size_t n = std::size_t{1} << bits;
  // reach[x]: x is a sum of exactly l generators, for the current l.
  std::vector<std::uint8_t> reach(n, 0), next(n);
  reach[0] = 1;
  for (std::uint32_t len = 1; len <= max_len; ++len) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t x = 0; x < n; ++x)
      if (reach[x])
        for (auto s : S) next[x ^ s] = 1;
    reach.swap(next);
    if (len % 2 == 1 && reach[0]) return true;
  }
  return false;
}

Graph alon_triangle_free(std::uint32_t k) {
  if (k % 3 == 0) throw PreconditionError("k must not be divisible by 3");
  if (k < 4) throw PreconditionError("k must be at least 4");
  return cayley_z2(3 * k, alon_generators(k, 1));
}

Graph alon_general(std::uint32_t k, std::uint32_t h, std::size_t vertex_cap) {
  auto S = alon_generators(k, h);
  const std::uint32_t bits = (2 * h + 1) * k;
  if (bits >= 63 || (std::uint64_t{1} << bits) > vertex_cap)
    throw CapExceeded("2^" + std::to_string(bits) + " vertices exceeds the cap; use alon_generators");
  return cayley_z2(bits, S);
}

std::vector<std::array<std::int64_t, 4>> lps_vectors(std::uint32_t p) {
  std::vector<std::array<std::int64_t, 4>> out;
  const std::int64_t r = static_cast<std::int64_t>(std::sqrt(double(p))) + 1;
  for (std::int64_t a0 = 1; a0 <= r; a0 += 2)
    for (std::int64_t a1 = -r - (r % 2); a1 <= r; a1 += 2)
      for (std::int64_t a2 = -r - (r % 2); a2 <= r; a2 += 2)
        for (std::int64_t a3 = -r - (r % 2); a3 <= r; a3 += 2)
          if (a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 == std::int64_t{p}) out.push_back({a0, a1, a2, a3});
  return out;
}

Graph lps(std::uint32_t p, std::uint32_t q) {
  if (!is_prime(p)) throw PreconditionError("p=" + std::to_string(p) + " is not prime");
  if (!is_prime(q)) throw PreconditionError("q=" + std::to_string(q) + " is not prime");
  if (p % 4 != 1) throw PreconditionError("p must be 1 mod 4");
  if (q % 4 != 1) throw PreconditionError("q must be 1 mod 4");
  if (p == q) throw PreconditionError("p and q must differ");
  if (double(q) <= 2.0 * std::sqrt(double(p))) throw PreconditionError("q must exceed 2 sqrt(p)");
  if (q > 61) throw CapExceeded("q too large for the vertex table");
  const FiniteField F(q, 1);
  if (F.quad_char_i(p % q) != 1) throw PreconditionError("p must be a quadratic residue mod q");

  std::uint32_t iq = 0, sp = 0;
  for (std::uint32_t x = 1; x < q && !iq; ++x)
    if (F.mul_i(x, x) == q - 1) iq = x;
  for (std::uint32_t x = 1; x < q && !sp; ++x)
    if (F.mul_i(x, x) == p % q) sp = x;
  const std::uint32_t spinv = F.inv_i(sp);

  using Mat = std::array<std::uint32_t, 4>;
  const std::uint32_t half = (q - 1) / 2;
  auto canon = [&](Mat m) {
    const auto first = *std::find_if(m.begin(), m.end(), [](std::uint32_t c) { return c != 0; });
    if (first > half)
      for (auto& c : m) c = F.neg_i(c);
    return m;
  };
  auto code = [&](const Mat& m) { return ((std::size_t{m[0]} * q + m[1]) * q + m[2]) * q + m[3]; };
  auto mul = [&](const Mat& a, const Mat& b) {
    return Mat{F.add_i(F.mul_i(a[0], b[0]), F.mul_i(a[1], b[2])), F.add_i(F.mul_i(a[0], b[1]), F.mul_i(a[1], b[3])),
               F.add_i(F.mul_i(a[2], b[0]), F.mul_i(a[3], b[2])), F.add_i(F.mul_i(a[2], b[1]), F.mul_i(a[3], b[3]))};
  };
  auto res = [&](std::int64_t v) { return static_cast<std::uint32_t>(((v % q) + q) % q); };

  std::vector<Mat> gens;
  for (const auto& a : lps_vectors(p)) {
    const std::uint32_t ia1 = F.mul_i(iq, res(a[1])), ia3 = F.mul_i(iq, res(a[3]));
    Mat m{F.add_i(res(a[0]), ia1), F.add_i(res(a[2]), ia3), F.add_i(res(-a[2]), ia3), F.sub_i(res(a[0]), ia1)};
    for (auto& c : m) c = F.mul_i(c, spinv);
    gens.push_back(canon(m));
  }
  if (gens.size() != p + 1) throw PreconditionError("expected p+1 generator vectors");

  std::vector<Mat> verts;
  std::vector<std::int32_t> id(std::size_t{q} * q * q * q, -1);
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          Mat m{a, b, c, d};
          if (F.sub_i(F.mul_i(a, d), F.mul_i(b, c)) != 1 || canon(m) != m) continue;
          id[code(m)] = static_cast<std::int32_t>(verts.size());
          verts.push_back(m);
        }
  std::vector<std::vector<Vertex>> l(verts.size());
  for (Vertex v = 0; v < verts.size(); ++v)
    for (const auto& g : gens) l[v].push_back(static_cast<Vertex>(id[code(canon(mul(g, verts[v])))]));
  return Graph::from_neighbor_lists(std::move(l));
}

Graph norm_graph(std::uint32_t p, std::uint32_t t) {
  if (t < 3) throw PreconditionError("norm graph needs t >= 3");
  if (!is_prime(p)) throw PreconditionError("p must be prime");
  const FiniteField F(p, t - 1);
  const std::uint32_t q = F.q(), pm = p - 1;
  if (std::size_t{q} * pm > kDenseCap * 16) throw CapExceeded("norm graph too large");
  std::vector<std::vector<Vertex>> l(std::size_t{q} * pm);
  for (std::uint32_t X = 0; X < q; ++X)
    for (std::uint32_t a = 1; a <= pm; ++a) {
      const std::uint64_t ainv = F.inv_i(a);  // prime-subfield indices coincide with residues
      auto& row = l[std::size_t{X} * pm + (a - 1)];
      for (std::uint32_t Y = 0; Y < q; ++Y) {
        const std::uint32_t s = F.add_i(X, Y);
        if (s == 0) continue;
        const std::uint32_t b = static_cast<std::uint32_t>(F.norm_i(s) * ainv % p);
        row.push_back(static_cast<Vertex>(std::size_t{Y} * pm + (b - 1)));
      }
    }
  return Graph::from_neighbor_lists(std::move(l));
}

// ---------------------------------------------------------------- registry

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

template <class T>
T get(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) throw PreconditionError(std::string("missing parameter \"") + key + "\"");
  return j.at(key).get<T>();
}

template <class T>
T get_or(const nlohmann::json& j, const char* key, T def) {
  return j.contains(key) ? j.at(key).get<T>() : def;
}

LambdaClaim lam(LambdaClaim::Relation r, double v, std::string expr) { return LambdaClaim{r, v, std::move(expr)}; }

}  // namespace

std::vector<std::string> family_names() {
  return {"complete", "empty",  "cycle",          "path",          "star",  "complete_bipartite",
          "petersen", "hypercube", "gnp",         "random_regular", "paley", "inner_product",
          "dgt",      "pg_polarity", "cayley_abelian", "power_residue", "alon", "alon_general",
          "lps",      "norm"};
}

Construction build_family(const std::string& family, const nlohmann::json& params) {
  using R = LambdaClaim::Relation;
  Construction c;
  auto& d = c.desc;
  d.family = family;
  d.params = params.is_null() ? nlohmann::json::object() : params;
  const auto& P = d.params;

  if (family == "complete") {
    const auto n = get<std::size_t>(P, "n");
    c.graph = complete_graph(n);
    d.n = n;
    d.degree = n ? n - 1 : 0;
    if (n >= 2) d.lambda = lam(R::eq, 1.0, "1");
  } else if (family == "empty") {
    const auto n = get<std::size_t>(P, "n");
    c.graph = empty_graph(n);
    d.n = n;
    d.degree = 0;
  } else if (family == "cycle") {
    const auto n = get<std::size_t>(P, "n");
    c.graph = cycle_graph(n);
    d.n = n;
    d.degree = 2;
    d.connected = true;
  } else if (family == "path") {
    const auto n = get<std::size_t>(P, "n");
    c.graph = path_graph(n);
    d.n = n;
  } else if (family == "star") {
    const auto k = get<std::size_t>(P, "leaves");
    c.graph = star_graph(k);
    d.n = k + 1;
  } else if (family == "complete_bipartite") {
    const auto a = get<std::size_t>(P, "a"), b = get<std::size_t>(P, "b");
    c.graph = complete_bipartite(a, b);
    d.n = a + b;
    if (a == b) d.degree = a;
  } else if (family == "petersen") {
    c.graph = petersen_graph();
    d.n = 10;
    d.degree = 3;
    d.srg = SrgParams{10, 3, 0, 1};
  } else if (family == "hypercube") {
    const auto k = get<std::size_t>(P, "dim");
    c.graph = hypercube(k);
    d.n = std::size_t{1} << k;
    d.degree = k;
  } else if (family == "gnp") {
    const auto n = get<std::size_t>(P, "n");
    c.graph = gnp(n, get<double>(P, "p"), get<std::uint64_t>(P, "seed"));
    d.n = n;
  } else if (family == "random_regular") {
    const auto n = get<std::size_t>(P, "n"), deg = get<std::size_t>(P, "d");
    c.graph = random_regular(n, deg, get<std::uint64_t>(P, "seed"));
    d.n = n;
    d.degree = deg;
  } else if (family == "paley") {
    const auto q = get<std::uint32_t>(P, "q");
    c.graph = paley(q);
    d.n = q;
    d.degree = (q - 1) / 2;
    d.loops = 0;
    d.srg = SrgParams{q, (q - 1) / 2, (std::int64_t(q) - 5) / 4, (q - 1) / 4};
    d.lambda = lam(R::eq, (std::sqrt(double(q)) + 1) / 2, "(sqrt(q)+1)/2");
  } else if (family == "inner_product") {
    const auto k = get<std::uint32_t>(P, "k");
    c.graph = inner_product_graph(k);
    const std::int64_t n = (std::int64_t{1} << (k - 1)) - 1;
    d.n = static_cast<std::size_t>(n);
    d.degree = (std::size_t{1} << (k - 2)) - 2;
    d.srg = SrgParams{n, (std::int64_t{1} << (k - 2)) - 2, (std::int64_t{1} << (k - 3)) - 3, (std::int64_t{1} << (k - 3)) - 1};
    d.lambda = lam(R::eq, 1 + std::pow(2.0, (k - 3) / 2.0), "1+2^((k-3)/2)");
  } else if (family == "dgt") {
    const auto q = get<std::uint32_t>(P, "q");
    std::optional<std::vector<std::uint32_t>> dirs;
    if (P.contains("directions")) dirs = P.at("directions").get<std::vector<std::uint32_t>>();
    const auto k = dirs ? static_cast<std::uint32_t>(dirs->size()) : get<std::uint32_t>(P, "k");
    c.graph = dgt_graph(q, k, dirs);
    d.n = std::size_t{q} * q;
    d.degree = std::size_t{k} * (q - 1);
    d.nontrivial_eigenvalues = {-double(k), double(q) - double(k)};
    if (k <= q)
      d.srg = SrgParams{std::int64_t{q} * q, std::int64_t{k} * (q - 1), std::int64_t(k - 1) * (std::int64_t(k) - 2) + q - 2,
                        std::int64_t{k} * (k - 1)};
  } else if (family == "pg_polarity") {
    const auto q = get<std::uint32_t>(P, "q");
    const auto t = get_or<std::uint32_t>(P, "t", 2);
    c.graph = pg_polarity(q, t);
    d.n = static_cast<std::size_t>((ipow(q, t + 1) - 1) / (q - 1));
    d.degree = static_cast<std::size_t>((ipow(q, t) - 1) / (q - 1));
    d.nontrivial_abs = std::pow(double(q), (t - 1) / 2.0);
    if (t == 2) {
      d.loops = q + 1;
      d.forbidden.push_back({ForbiddenClaim::Kind::cycle, 4, 0});
    }
  } else if (family == "cayley_abelian") {
    const auto factors = get<std::vector<std::uint64_t>>(P, "factors");
    const auto S = get<std::vector<std::vector<std::uint64_t>>>(P, "S");
    auto r = cayley_abelian(factors, S);
    c.graph = std::move(r.graph);
    d.n = c.graph.n();
    d.degree = S.size();
    d.predicted_spectrum = std::move(r.predicted);
  } else if (family == "power_residue") {
    const auto q = get<std::uint32_t>(P, "q"), k = get<std::uint32_t>(P, "k");
    c.graph = power_residue_cayley(q, k);
    d.n = q;
    d.degree = (q - 1) / k;
    if (k > 1) d.lambda = lam(R::le, (k - 1) * std::sqrt(double(q)), "(k-1)sqrt(q)");
  } else if (family == "alon" || family == "alon_general") {
    const auto k = get<std::uint32_t>(P, "k");
    const auto h = family == "alon" ? 1u : get<std::uint32_t>(P, "h");
    c.graph = family == "alon" ? alon_triangle_free(k) : alon_general(k, h);
    d.n = std::size_t{1} << ((2 * h + 1) * k);
    d.degree = (std::size_t{1} << (k - 1)) * ((std::size_t{1} << (k - 1)) - 1);
    if (h == 1) {
      d.lambda = lam(R::le, 9.0 * std::pow(2.0, k) + 3.0 * std::pow(2.0, k / 2.0) + 0.25, "9*2^k+3*2^(k/2)+1/4");
      d.forbidden.push_back({ForbiddenClaim::Kind::clique, 3, 0});
    } else {
      d.forbidden.push_back({ForbiddenClaim::Kind::odd_cycles_upto, 2 * h + 1, 0});
    }
  } else if (family == "lps") {
    const auto p = get<std::uint32_t>(P, "p"), q = get<std::uint32_t>(P, "q");
    c.graph = lps(p, q);
    d.n = std::size_t{q} * (std::size_t{q} * q - 1) / 2;
    d.degree = p + 1;
    d.connected = true;
    d.girth_min = static_cast<std::size_t>(std::ceil(2.0 * std::log(double(q)) / std::log(double(p))));
    d.lambda = lam(R::le, 2 * std::sqrt(double(p)), "2sqrt(p)");
  } else if (family == "norm") {
    const auto p = get<std::uint32_t>(P, "p"), t = get<std::uint32_t>(P, "t");
    c.graph = norm_graph(p, t);
    const auto q = ipow(p, t - 1);
    d.n = static_cast<std::size_t>(q * (p - 1));
    d.degree = static_cast<std::size_t>(q - 1);
    d.lambda = lam(R::eq, std::pow(double(p), (t - 1) / 2.0), "p^((t-1)/2)");
    std::size_t fact = 1;
    for (std::size_t i = 2; i < t; ++i) fact *= i;
    d.forbidden.push_back({ForbiddenClaim::Kind::biclique, t, fact + 1});
  } else {
    throw PreconditionError("unknown family \"" + family + "\"");
  }
  return c;
}

}  // namespace pseudograph
