#include "pseudograph/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Dense>

#include "pseudograph/rng.hpp"

namespace pseudograph {

double Spectrum::lambda() const {
  double r = 0.0;
  for (std::size_t i = 1; i < eigenvalues.size(); ++i) r = std::max(r, std::abs(eigenvalues[i]));
  return r;
}

double Spectrum::max_residual() const {
  double r = 0.0;
  for (double x : residuals) r = std::max(r, x);
  return r;
}

std::vector<std::pair<double, std::size_t>> Spectrum::grouped(double rel_tol) const {
  std::vector<std::pair<double, std::size_t>> out;
  const double scale = eigenvalues.empty() ? 1.0 : std::max(1.0, std::abs(eigenvalues.front()));
  for (double x : eigenvalues) {
    if (!out.empty() && std::abs(out.back().first - x) <= rel_tol * scale) {
      auto& [v, c] = out.back();
      v = (v * double(c) + x) / double(c + 1);
      ++c;
    } else {
      out.emplace_back(x, 1);
    }
  }
  return out;
}

double Spectrum::power_sum(unsigned t) const {
  double s = 0.0;
  for (double x : eigenvalues) s += std::pow(x, double(t));
  return s;
}

namespace {

void matvec(const Graph& g, const double* x, double* y) {
  for (Vertex v = 0; v < g.n(); ++v) {
    double s = 0.0;
    for (Vertex u : g.neighbors(v)) s += x[u];
    y[v] = s;
  }
}

}  // namespace

Spectrum full_spectrum(const Graph& g, std::size_t cap) {
  const std::size_t n = g.n();
  if (n == 0) throw PreconditionError("spectrum of the empty vertex set");
  if (n > cap)
    throw CapExceeded("n=" + std::to_string(n) + " exceeds the dense cap " + std::to_string(cap) +
                      "; use extremal_lambda for large graphs");
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) A(u, v) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success) throw ConvergenceError("dense eigensolver did not converge");
  Spectrum s;
  s.eigenvalues.resize(n);
  s.residuals.resize(n);
  std::vector<double> y(n);
  // Eigen returns ascending order.
  for (std::size_t i = 0; i < n; ++i) {
    const auto j = static_cast<Eigen::Index>(n - 1 - i);
    const double lam = es.eigenvalues()(j);
    const Eigen::VectorXd v = es.eigenvectors().col(j);
    matvec(g, v.data(), y.data());
    double r = 0.0;
    for (std::size_t k = 0; k < n; ++k) r += (y[k] - lam * v(static_cast<Eigen::Index>(k))) * (y[k] - lam * v(static_cast<Eigen::Index>(k)));
    s.eigenvalues[i] = lam;
    s.residuals[i] = std::sqrt(r);
  }
  s.tolerance = 1e-8 * double(n) * 1.0;
  return s;
}

namespace {

struct Lanczos {
  std::vector<double> theta;         // Ritz values ascending
  std::vector<std::vector<double>> ritz;  // matching Ritz vectors (requested ones only)
  std::vector<double> resid;         // residual bound per Ritz value
  std::size_t steps = 0;
};

// One Lanczos run of at most m steps from v0; keeps the Ritz vectors of the
// smallest and largest Ritz values.
template <class Op>
Lanczos lanczos_run(std::size_t n, Op op, std::vector<double> v0, std::size_t m, std::size_t& matvecs) {
  Lanczos out;
  std::vector<std::vector<double>> Q;
  std::vector<double> alpha, beta;
  auto dot = [n](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
  };
  double nrm = std::sqrt(dot(v0, v0));
  if (nrm == 0.0) throw ConvergenceError("zero start vector");
  for (auto& x : v0) x /= nrm;
  Q.push_back(std::move(v0));
  std::vector<double> w(n);
  double last_beta = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    op(Q[j].data(), w.data());
    ++matvecs;
    const double a = dot(Q[j], w);
    alpha.push_back(a);
    // Full reorthogonalisation, two passes.
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& q : Q) {
        const double c = dot(q, w);
        for (std::size_t i = 0; i < n; ++i) w[i] -= c * q[i];
      }
    const double b = std::sqrt(dot(w, w));
    last_beta = b;
    if (j + 1 == m || b < 1e-10) break;
    beta.push_back(b);
    std::vector<double> q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = w[i] / b;
    Q.push_back(std::move(q));
  }
  const std::size_t k = alpha.size();
  out.steps = k;
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < k; ++i) {
    T(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = alpha[i];
    if (i + 1 < k) {
      T(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i + 1)) = beta[i];
      T(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = beta[i];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
  const double bres = last_beta < 1e-10 ? 0.0 : last_beta;
  for (std::size_t i = 0; i < k; ++i) {
    out.theta.push_back(es.eigenvalues()(static_cast<Eigen::Index>(i)));
    out.resid.push_back(std::abs(bres * es.eigenvectors()(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(i))));
  }
  // Ritz vectors for the two extremes.
  for (std::size_t idx : {std::size_t{0}, k - 1}) {
    std::vector<double> y(n, 0.0);
    for (std::size_t j = 0; j < k; ++j) {
      const double c = es.eigenvectors()(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(idx));
      for (std::size_t i = 0; i < n; ++i) y[i] += c * Q[j][i];
    }
    out.ritz.push_back(std::move(y));
  }
  return out;
}

std::vector<double> start_vector(std::size_t n, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> v(n);
  for (auto& x : v) x = rng.uniform() - 0.5;
  return v;
}

}  // namespace

ExtremalResult extremal_lambda(const Graph& g, double tol, std::size_t krylov_dim, std::size_t max_restarts) {
  const std::size_t n = g.n();
  if (!(tol > 0)) throw PreconditionError("tolerance must be positive");
  if (n == 0) throw PreconditionError("empty graph");
  ExtremalResult r;
  if (n == 1) {
    r.lambda1 = r.lambda_min = g.has_loop(0) ? 1.0 : 0.0;
    return r;
  }
  const std::size_t m = std::min(krylov_dim, n);
  auto A = [&g](const double* x, double* y) { matvec(g, x, y); };

  // Stage 1: top eigenpair. All-ones start; regular graphs finish at once.
  std::vector<double> v(n, 1.0);
  {
    auto jitter = start_vector(n, 0x5eed);
    for (std::size_t i = 0; i < n; ++i) v[i] += 1e-3 * jitter[i];
  }
  std::vector<double> top;
  bool done = false;
  for (std::size_t it = 0; it <= max_restarts && !done; ++it) {
    auto L = lanczos_run(n, A, v, m, r.matvecs);
    r.lambda1 = L.theta.back();
    const double res = L.resid.back();
    top = L.ritz[1];
    r.residual = res;
    if (res <= tol * std::max(1.0, std::abs(r.lambda1))) done = true;
    v = top;
  }
  if (!done) throw ConvergenceError("top eigenvalue did not converge");
  {
    double nrm = 0.0;
    for (double x : top) nrm += x * x;
    nrm = std::sqrt(nrm);
    for (auto& x : top) x /= nrm;
  }

  // Stage 2: deflated operator P A P with P = I - top top^T.
  std::vector<double> tmp(n);
  auto project = [&](double* x) {
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i) c += top[i] * x[i];
    for (std::size_t i = 0; i < n; ++i) x[i] -= c * top[i];
  };
  auto PAP = [&](const double* x, double* y) {
    std::copy(x, x + n, tmp.begin());
    project(tmp.data());
    matvec(g, tmp.data(), y);
    project(y);
  };
  v = start_vector(n, 0xdef1a7e);
  project(v.data());
  const std::size_t m2 = std::min(krylov_dim, n - 1);
  done = false;
  for (std::size_t it = 0; it <= max_restarts && !done; ++it) {
    auto L = lanczos_run(n, PAP, v, std::max<std::size_t>(m2, 1), r.matvecs);
    const double hi = L.theta.back(), lo = L.theta.front();
    const double rhi = L.resid.back(), rlo = L.resid.front();
    r.lambda2 = hi;
    r.lambda_min = lo;
    const double scale = std::max(1.0, r.lambda1);
    r.residual = std::max(r.residual, std::max(rhi, rlo));
    if (rhi <= tol * scale && rlo <= tol * scale) done = true;
    for (std::size_t i = 0; i < n; ++i) v[i] = L.ritz[0][i] + L.ritz[1][i];
    project(v.data());
  }
  if (!done) throw ConvergenceError("second eigenvalue did not converge");
  r.lambda = std::max(std::abs(r.lambda2), std::abs(r.lambda_min));
  return r;
}

SrgSpectrum srg_spectrum(const SrgParams& P) {
  if (!P.feasible())
    throw PreconditionError("infeasible parameters (" + std::to_string(P.n) + "," + std::to_string(P.d) + "," +
                            std::to_string(P.eta) + "," + std::to_string(P.mu) + ")");
  const double n = double(P.n), d = double(P.d), e = double(P.eta), mu = double(P.mu);
  const double disc = (e - mu) * (e - mu) + 4 * (d - mu);
  const double sq = std::sqrt(disc);
  SrgSpectrum s;
  s.lambda2 = 0.5 * (e - mu + sq);
  s.lambda3 = 0.5 * (e - mu - sq);
  const double num = 2 * d + (n - 1) * (e - mu);
  const double s2 = 0.5 * ((n - 1) - num / sq), s3 = 0.5 * ((n - 1) + num / sq);
  const double r2 = std::round(s2), r3 = std::round(s3);
  if (std::abs(s2 - r2) > 1e-9 || std::abs(s3 - r3) > 1e-9 || r2 < 0 || r3 < 0)
    throw PreconditionError("non-integral eigenvalue multiplicities");
  s.s2 = static_cast<std::size_t>(r2);
  s.s3 = static_cast<std::size_t>(r3);
  s.conference = s.s2 == s.s3 && std::abs(s.lambda2 - std::round(s.lambda2)) > 1e-9;
  if (1 + s.s2 + s.s3 != static_cast<std::size_t>(P.n)) throw PreconditionError("multiplicities do not sum to n");
  if (std::abs(d + double(s.s2) * s.lambda2 + double(s.s3) * s.lambda3) > 1e-9 * std::max(1.0, n * d))
    throw PreconditionError("trace condition fails");
  return s;
}

std::optional<SrgParams> srg_detect(const Graph& g) {
  const std::size_t n = g.n();
  if (n < 2 || g.loop_count() > 0 || !g.is_regular()) return std::nullopt;
  const std::size_t d = g.degree(0);
  if (d == 0 || d == n - 1) return std::nullopt;
  std::int64_t eta = -1, mu = -1;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      const std::int64_t c = codegree(g, x, y);
      std::int64_t& slot = g.has_edge(x, y) ? eta : mu;
      if (slot < 0)
        slot = c;
      else if (slot != c)
        return std::nullopt;
    }
  SrgParams P{std::int64_t(n), std::int64_t(d), eta, mu};
  if (!P.feasible()) return std::nullopt;
  return P;
}

namespace {

// Sparse walk propagation from one vertex; returns counts after `len` steps.
template <class T>
void propagate(const Graph& g, Vertex s, unsigned len, std::vector<T>& cur, std::vector<Vertex>& supp,
               std::vector<T>& nxt, std::vector<Vertex>& nsupp, std::vector<std::uint8_t>& mark) {
  for (Vertex v : supp) cur[v] = 0;
  supp.assign(1, s);
  cur[s] = 1;
  for (unsigned step = 0; step < len; ++step) {
    nsupp.clear();
    for (Vertex u : supp)
      for (Vertex x : g.neighbors(u)) {
        if (!mark[x]) {
          mark[x] = 1;
          nsupp.push_back(x);
        }
        nxt[x] += cur[u];
      }
    for (Vertex u : supp) cur[u] = 0;
    for (Vertex x : nsupp) {
      mark[x] = 0;
      cur[x] = nxt[x];
      nxt[x] = 0;
    }
    std::swap(supp, nsupp);
  }
}

template <class T, class Acc>
Acc trace_power(const Graph& g, unsigned t) {
  const std::size_t n = g.n();
  const unsigned a = t / 2, b = t - a;
  std::vector<T> wa(n, T(0)), wb(n, T(0)), nxt(n, T(0));
  std::vector<Vertex> sa, sb, ns;
  std::vector<std::uint8_t> mark(n, 0);
  Acc total = 0;
  for (Vertex v = 0; v < n; ++v) {
    propagate(g, v, a, wa, sa, nxt, ns, mark);
    propagate(g, v, b, wb, sb, nxt, ns, mark);
    for (Vertex u : sa) total += Acc(wa[u]) * Acc(wb[u]);
  }
  return total;
}

}  // namespace

BigInt circuit_count(const Graph& g, unsigned t) {
  if (t < 1) throw PreconditionError("walk length must be at least 1");
  const std::size_t n = g.n();
  if (n == 0) return 0;
  const double D = std::max<double>(1.0, double(g.max_degree()));
  const double lg_b = std::log2(D) * std::ceil(t / 2.0);
  const double lg_total = std::log2(D) * t + std::log2(double(n));
  if (lg_b < 62 && lg_total < 126) {
    const __int128 v = trace_power<std::uint64_t, __int128>(g, t);
    // cpp_int has no __int128 constructor on every platform; split.
    const auto hi = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v) >> 64);
    const auto lo = static_cast<std::uint64_t>(static_cast<unsigned __int128>(v));
    return (BigInt(hi) << 64) + BigInt(lo);
  }
  return trace_power<BigInt, BigInt>(g, t);
}

std::vector<BigInt> walk_counts(const Graph& g, Vertex source, unsigned len) {
  const std::size_t n = g.n();
  if (source >= n) throw PreconditionError("source out of range");
  std::vector<BigInt> cur(n), nxt(n);
  std::vector<Vertex> supp, ns;
  std::vector<std::uint8_t> mark(n, 0);
  propagate(g, source, len, cur, supp, nxt, ns, mark);
  return cur;
}

std::pair<double, VertexSet> best_discrepancy_partner(const Graph& g, const VertexSet& X, double p) {
  const std::size_t n = g.n();
  std::vector<std::uint32_t> cx(n, 0);
  for (Vertex x : X)
    for (Vertex y : g.neighbors(x)) ++cx[y];
  const double px = p * double(X.size());
  double pos = 0.0, neg = 0.0;
  VertexSet ypos, yneg;
  for (Vertex y = 0; y < n; ++y) {
    const double c = double(cx[y]) - px;
    if (c > 0) {
      pos += c;
      ypos.push_back(y);
    } else if (c < 0) {
      neg -= c;
      yneg.push_back(y);
    }
  }
  return pos >= neg ? std::make_pair(pos, ypos) : std::make_pair(neg, yneg);
}

PropertyScores property_scores(const Graph& g, double p, unsigned t, std::size_t sample_budget, std::uint64_t seed) {
  if (!(p > 0 && p < 1)) throw PreconditionError("density must lie in (0,1)");
  if (t < 2) throw PreconditionError("walk length must be at least 2");
  const std::size_t n = g.n();
  if (n == 0) throw PreconditionError("empty graph");
  PropertyScores ps;
  ps.p = p;
  ps.t = t;
  ps.seed = seed;
  ps.sample_budget = sample_budget;
  const double np = double(n) * p;

  for (unsigned len = 2; len <= t; ++len) {
    const double c = circuit_count(g, len).convert_to<double>();
    ps.circuit.emplace_back(len, c / std::pow(np, double(len)));
  }

  if (n <= kDenseCap) {
    const Spectrum s = full_spectrum(g);
    ps.eig_lambda1_dev = std::abs(s.lambda1() / np - 1.0);
    ps.eig_second = s.lambda() / np;
  } else {
    const auto e = extremal_lambda(g);
    ps.eig_lambda1_dev = std::abs(e.lambda1 / np - 1.0);
    ps.eig_second = e.lambda / np;
  }

  const double norm = p * double(n) * double(n);
  auto consider = [&](const VertexSet& X) {
    auto [v, Y] = best_discrepancy_partner(g, X, p);
    if (v / norm > ps.disc) {
      ps.disc = v / norm;
      ps.disc_x = X;
      ps.disc_y = std::move(Y);
    }
  };
  if (n <= 14) {
    ps.disc_exhaustive = true;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      VertexSet X;
      for (Vertex v = 0; v < n; ++v)
        if (mask >> v & 1) X.push_back(v);
      consider(X);
    }
  } else {
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < 2 * sample_budget; ++i) {
      VertexSet X, Y;
      for (Vertex v = 0; v < n; ++v)
        if (rng() >> 63) X.push_back(v);
      for (Vertex v = 0; v < n; ++v)
        if (rng() >> 63) Y.push_back(v);
      const double e = double(edge_count_between(g, X, Y));
      const double dev = std::abs(e - p * double(X.size()) * double(Y.size())) / norm;
      if (dev > ps.disc) {
        ps.disc = dev;
        ps.disc_x = X;
        ps.disc_y = Y;
      }
      consider(X);
      ++ps.disc_samples;
    }
  }

  // U(t): walks of length t-1 between any pair.
  if (n <= kDenseCap) {
    const double denom = std::pow(double(n), double(t) - 2.0) * std::pow(p, double(t) - 1.0);
    for (Vertex x = 0; x < n; ++x) {
      const auto w = walk_counts(g, x, t - 1);
      for (Vertex y = 0; y < n; ++y) {
        const double r = w[y].convert_to<double>() / denom;
        if (r > ps.u_constant) {
          ps.u_constant = r;
          ps.u_x = x;
          ps.u_y = y;
        }
      }
    }
    const auto cs = codegree_stats(g, p);
    ps.p6_sum = cs.s_dev_sum;
    ps.p6 = cs.s_dev_normalized();
    ps.p7_sum = cs.codeg_dev_sum;
    ps.p7 = cs.codeg_dev_normalized();
  }
  return ps;
}

}  // namespace pseudograph
