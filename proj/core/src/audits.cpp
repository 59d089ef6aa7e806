#include "pseudograph/audits.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "pseudograph/rng.hpp"

namespace pseudograph {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Graph strip_loops(const Graph& g) {
  if (g.loop_count() == 0) return g;
  std::vector<Edge> es;
  for (auto e : g.edges())
    if (e.first != e.second) es.push_back(e);
  return Graph::from_edge_list(g.n(), es);
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

nlohmann::json set_json(const VertexSet& s) { return nlohmann::json(s); }

VertexSet mask_to_set(std::uint64_t mask) {
  VertexSet s;
  for (Vertex v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) s.push_back(v);
  return s;
}

std::pair<std::uint32_t, std::uint32_t> codegree_extremes(const Graph& g) {
  const std::size_t n = g.n();
  if (n < 2) return {0, 0};
  std::vector<std::uint32_t> cnt(n, 0);
  std::vector<Vertex> touched;
  std::uint32_t lo = std::numeric_limits<std::uint32_t>::max(), hi = 0;
  for (Vertex x = 0; x < n; ++x) {
    touched.clear();
    for (Vertex a : g.neighbors(x))
      for (Vertex y : g.neighbors(a)) {
        if (y == x) continue;
        if (cnt[y]++ == 0) touched.push_back(y);
      }
    if (touched.size() < n - 1) lo = 0;
    for (Vertex y : touched) {
      hi = std::max(hi, cnt[y]);
      lo = std::min(lo, cnt[y]);
      cnt[y] = 0;
    }
  }
  return {lo, hi};
}

std::size_t regular_degree(const AuditHeader& h) { return h.min_degree; }

Finding not_applicable(std::string id, Verdict v, std::string why) {
  Finding f;
  f.id = std::move(id);
  f.relation = Relation::margin;
  f.verdict = v;
  f.method = Method::formula;
  f.detail = std::move(why);
  return f;
}

// ---------------------------------------------------------------------------
// Pair scanner for |e(U,W) - c u w| <= rhs(u, w).

class MixingScanner {
 public:
  using Rhs = std::function<double(double, double)>;

  MixingScanner(const Graph& g, double c, Rhs rhs, std::optional<std::pair<double, std::vector<double>>> separable)
      : g_(g), n_(g.n()), c_(c), rhs_(std::move(rhs)), sep_(std::move(separable)) {
    if (n_ <= 64) {
      table_.assign((n_ + 1) * (n_ + 1), 0.0);
      for (std::size_t u = 0; u <= n_; ++u)
        for (std::size_t w = 0; w <= n_; ++w) table_[u * (n_ + 1) + w] = eval_rhs(u, w);
    }
    maxdeg_ = g.max_degree();
  }

  double rhs(std::size_t u, std::size_t w) const {
    if (!table_.empty()) return table_[u * (n_ + 1) + w];
    return eval_rhs(u, w);
  }

  // Direct scan of every (U, W) with n <= 20.
  void exhaustive_direct() {
    const std::uint64_t N = std::uint64_t{1} << n_;
    std::vector<std::int64_t> cnt(n_, 0);
    std::uint64_t U = 0;
    std::size_t u = 0;
    for (std::uint64_t i = 0; i < N; ++i) {
      if (i > 0) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(i));
        const bool add = !(U >> b & 1);
        U ^= std::uint64_t{1} << b;
        u += add ? 1 : -1;
        for (Vertex x : g_.neighbors(b)) cnt[x] += add ? 1 : -1;
      }
      std::uint64_t W = 0;
      std::size_t w = 0;
      std::int64_t e = 0;
      for (std::uint64_t j = 0; j < N; ++j) {
        if (j > 0) {
          const unsigned b = static_cast<unsigned>(std::countr_zero(j));
          const bool add = !(W >> b & 1);
          W ^= std::uint64_t{1} << b;
          if (add) {
            ++w;
            e += cnt[b];
          } else {
            --w;
            e -= cnt[b];
          }
        }
        const double lhs = std::abs(double(e) - c_ * double(u) * double(w));
        consider(lhs, rhs(u, w), [&] { return std::make_pair(mask_to_set(U), mask_to_set(W)); });
      }
    }
  }

  // Every U; for each |W| only the extremal W (top or bottom counts).
  void exhaustive_extremal() {
    const std::uint64_t N = std::uint64_t{1} << n_;
    std::vector<std::uint32_t> cnt(n_, 0);
    std::uint64_t U = 0;
    std::size_t u = 0;
    for (std::uint64_t i = 0; i < N; ++i) {
      if (i > 0) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(i));
        const bool add = !(U >> b & 1);
        U ^= std::uint64_t{1} << b;
        u += add ? 1 : -1;
        for (Vertex x : g_.neighbors(b)) cnt[x] += add ? 1 : -1;
      }
      extremal_for(cnt, u, [&] { return mask_to_set(U); });
    }
  }

  void sampled(std::uint64_t budget, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Vertex> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint32_t> cnt(n_, 0);
    for (std::uint64_t s = 0; s < budget; ++s) {
      const std::size_t u = 1 + rng.below(n_);
      for (std::size_t k = 0; k < u; ++k) std::swap(perm[k], perm[k + rng.below(n_ - k)]);
      VertexSet U(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(u));
      run_set(U, cnt);
    }
  }

  // All U with |U| <= k; returns the largest k that fit under the cap.
  std::size_t small_sets(std::uint64_t cap) {
    std::vector<std::uint32_t> cnt(n_, 0);
    std::uint64_t total = 0;
    std::size_t k = 0;
    double choose = 1.0;
    while (k < n_) {
      const double next = choose * double(n_ - k) / double(k + 1);
      if (total + next > double(cap)) break;
      choose = next;
      total += static_cast<std::uint64_t>(next);
      ++k;
      VertexSet U(k);
      std::iota(U.begin(), U.end(), 0);
      for (;;) {
        run_set(U, cnt);
        std::size_t i = k;
        while (i > 0 && U[i - 1] == n_ - k + i - 1) --i;
        if (i == 0) break;
        ++U[i - 1];
        for (std::size_t j = i; j < k; ++j) U[j] = U[j - 1] + 1;
      }
    }
    return k;
  }

  std::uint64_t pairs = 0, violations = 0;
  double best_ratio = -1.0, best_lhs = 0.0, best_rhs = 0.0;
  VertexSet best_U, best_W;
  bool have_violation = false;
  double viol_lhs = 0.0, viol_rhs = 0.0;
  VertexSet viol_U, viol_W;

 private:
  double eval_rhs(std::size_t u, std::size_t w) const {
    if (sep_) return sep_->first * sep_->second[u] * sep_->second[w];
    return rhs_(double(u), double(w));
  }

  template <class Witness>
  void consider(double lhs, double rhs, Witness&& witness) {
    ++pairs;
    if (lhs > rhs + kAuditTolerance * std::max(1.0, std::abs(rhs))) {
      ++violations;
      if (!have_violation) {
        have_violation = true;
        viol_lhs = lhs;
        viol_rhs = rhs;
        std::tie(viol_U, viol_W) = witness();
      }
    }
    double ratio;
    if (rhs > 1e-12)
      ratio = lhs / rhs;
    else if (lhs > 1e-9)
      ratio = kInf;
    else
      return;
    if (ratio > best_ratio) {
      best_ratio = ratio;
      best_lhs = lhs;
      best_rhs = rhs;
      std::tie(best_U, best_W) = witness();
    }
  }

  void run_set(const VertexSet& U, std::vector<std::uint32_t>& cnt) {
    for (Vertex v : U)
      for (Vertex x : g_.neighbors(v)) ++cnt[x];
    extremal_for(cnt, U.size(), [&] { return U; });
    for (Vertex v : U)
      for (Vertex x : g_.neighbors(v)) cnt[x] = 0;
  }

  template <class GetU>
  void extremal_for(const std::vector<std::uint32_t>& cnt, std::size_t u, GetU&& getU) {
    bucket_.assign(maxdeg_ + 1, 0);
    for (std::uint32_t c : cnt) ++bucket_[c];
    top_.assign(n_ + 1, 0);
    bot_.assign(n_ + 1, 0);
    {
      std::size_t w = 0;
      std::int64_t s = 0;
      for (std::size_t val = maxdeg_ + 1; val-- > 0;)
        for (std::size_t k = 0; k < bucket_[val]; ++k) top_[++w] = (s += std::int64_t(val));
      w = 0;
      s = 0;
      for (std::size_t val = 0; val <= maxdeg_; ++val)
        for (std::size_t k = 0; k < bucket_[val]; ++k) bot_[++w] = (s += std::int64_t(val));
    }
    for (std::size_t w = 0; w <= n_; ++w) {
      const double center = c_ * double(u) * double(w);
      const double hi = double(top_[w]) - center, lo = center - double(bot_[w]);
      const bool use_top = hi >= lo;
      const double lhs = std::max(std::abs(hi), std::abs(lo));
      consider(lhs, rhs(u, w), [&] {
        VertexSet U = getU();
        std::vector<Vertex> order(n_);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
          return use_top ? cnt[a] > cnt[b] : cnt[a] < cnt[b];
        });
        VertexSet W(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(w));
        std::sort(W.begin(), W.end());
        return std::make_pair(std::move(U), std::move(W));
      });
    }
  }

  const Graph& g_;
  std::size_t n_;
  double c_;
  Rhs rhs_;
  std::optional<std::pair<double, std::vector<double>>> sep_;
  std::vector<double> table_;
  std::size_t maxdeg_ = 0;
  std::vector<std::size_t> bucket_;
  std::vector<std::int64_t> top_, bot_;
};

Finding scan_finding(const std::string& id, MixingScanner& sc, Method method, const std::string& detail) {
  Finding f;
  f.id = id;
  f.relation = Relation::le;
  f.method = method;
  if (sc.have_violation) {
    f.lhs = sc.viol_lhs;
    f.rhs = sc.viol_rhs;
  } else {
    f.lhs = sc.best_lhs;
    f.rhs = sc.best_rhs;
  }
  f.slack = signed_slack(f.relation, f.lhs, f.rhs);
  f.verdict = sc.violations == 0 ? Verdict::pass : Verdict::fail;
  f.detail = detail;
  f.extra["pairs_checked"] = sc.pairs;
  f.extra["violations"] = sc.violations;
  f.extra["max_ratio"] = num12(sc.best_ratio < 0 ? 0.0 : sc.best_ratio);
  f.extra["tightest_U"] = set_json(sc.best_U);
  f.extra["tightest_W"] = set_json(sc.best_W);
  if (sc.have_violation) {
    f.extra["violation_U"] = set_json(sc.viol_U);
    f.extra["violation_W"] = set_json(sc.viol_W);
  }
  return f;
}

Finding run_scan(const std::string& id, const Graph& g, MixingScanner& sc, MixingMode mode, const AuditConfig& cfg) {
  const std::size_t n = g.n();
  if (mode == MixingMode::exhaustive && n <= cfg.mixing_exhaustive_max_n && n <= 20) {
    sc.exhaustive_direct();
    return scan_finding(id, sc, Method::exhaustive, "every pair (U, W) scanned directly");
  }
  if (mode == MixingMode::exhaustive && n <= cfg.mixing_extremal_max_n && n <= 30) {
    sc.exhaustive_extremal();
    return scan_finding(id, sc, Method::exhaustive, "every U scanned with the extremal W of each size");
  }
  const std::size_t k = sc.small_sets(cfg.mixing_small_sets_cap);
  sc.sampled(cfg.sample_budget, cfg.seed);
  Finding f = scan_finding(id, sc, Method::sampled,
                           "all U with |U| <= " + std::to_string(k) + " plus " + std::to_string(cfg.sample_budget) +
                               " random U, each with the extremal W of every size");
  f.seed = cfg.seed;
  f.budget = cfg.sample_budget;
  f.extra["small_set_size"] = k;
  return f;
}

}  // namespace

// ---------------------------------------------------------------------------

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::vacuous: return "vacuous";
    case Verdict::inconclusive: return "inconclusive";
    case Verdict::info: return "info";
    case Verdict::hypothesis_not_met: return "hypothesis_not_met";
    case Verdict::out_of_regime: return "out_of_regime";
  }
  return "?";
}

const char* to_string(Method m) {
  switch (m) {
    case Method::exhaustive: return "exhaustive";
    case Method::sampled: return "sampled";
    case Method::oracle: return "oracle";
    case Method::formula: return "formula";
    case Method::heuristic: return "heuristic";
  }
  return "?";
}

const char* to_string(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::ge: return ">=";
    case Relation::eq: return "==";
    case Relation::margin: return "margin";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::pass, Verdict::fail, Verdict::vacuous, Verdict::inconclusive, Verdict::info,
                    Verdict::hypothesis_not_met, Verdict::out_of_regime})
    if (s == to_string(v)) return v;
  throw PreconditionError("unknown verdict '" + s + "'");
}

Method method_from_string(const std::string& s) {
  for (Method m : {Method::exhaustive, Method::sampled, Method::oracle, Method::formula, Method::heuristic})
    if (s == to_string(m)) return m;
  throw PreconditionError("unknown method '" + s + "'");
}

Relation relation_from_string(const std::string& s) {
  for (Relation r : {Relation::le, Relation::ge, Relation::eq, Relation::margin})
    if (s == to_string(r)) return r;
  throw PreconditionError("unknown relation '" + s + "'");
}

double signed_slack(Relation r, double lhs, double rhs) {
  switch (r) {
    case Relation::le: return rhs - lhs;
    case Relation::ge: return lhs - rhs;
    case Relation::eq: return -std::abs(lhs - rhs);
    case Relation::margin: return lhs - rhs;
  }
  return 0.0;
}

bool within_tolerance(Relation r, double lhs, double rhs, double tol) {
  const double allow = tol * std::max(1.0, std::abs(rhs));
  switch (r) {
    case Relation::le: return lhs <= rhs + allow;
    case Relation::ge: return lhs >= rhs - allow;
    case Relation::eq: return std::abs(lhs - rhs) <= allow;
    case Relation::margin: return true;
  }
  return true;
}

Finding check(std::string id, Relation r, double lhs, double rhs, Method method, std::string detail) {
  Finding f;
  f.id = std::move(id);
  f.relation = r;
  f.lhs = lhs;
  f.rhs = rhs;
  f.slack = signed_slack(r, lhs, rhs);
  f.verdict = within_tolerance(r, lhs, rhs) ? Verdict::pass : Verdict::fail;
  f.method = method;
  f.detail = std::move(detail);
  return f;
}

Finding note(std::string id, double lhs, double rhs, Verdict v, Method method, std::string detail) {
  Finding f;
  f.id = std::move(id);
  f.relation = Relation::margin;
  f.lhs = lhs;
  f.rhs = rhs;
  f.slack = lhs - rhs;
  f.verdict = v;
  f.method = method;
  f.detail = std::move(detail);
  return f;
}

AuditHeader compute_header(const Graph& g, const AuditConfig& cfg) {
  AuditHeader h;
  h.n = g.n();
  h.m = g.m();
  h.loops = g.loop_count();
  h.regular = g.is_regular();
  if (h.n == 0) return h;
  h.min_degree = g.min_degree();
  h.max_degree = g.max_degree();
  h.d = double(degree_stats(g).sum) / double(h.n);
  if (h.n <= cfg.dense_max_n) {
    const Spectrum s = full_spectrum(g, std::max(cfg.dense_max_n, h.n));
    h.lambda1 = s.lambda1();
    h.lambda = s.lambda();
    h.lambda2 = s.lambda2();
    h.lambda_min = s.lambda_min();
    h.residual = s.max_residual();
    h.spectrum_method = "dense";
  } else {
    const ExtremalResult r = extremal_lambda(g);
    h.lambda1 = r.lambda1;
    h.lambda = r.lambda;
    h.lambda2 = r.lambda2;
    h.lambda_min = r.lambda_min;
    h.residual = r.residual;
    h.spectrum_method = "lanczos";
  }
  return h;
}

// ---------------------------------------------------------------------------
// Mixing.

std::vector<Finding> audit_mixing(const Graph& g, const AuditHeader& h, MixingMode mode, const AuditConfig& cfg) {
  if (!h.regular) return audit_irregular_mixing_scan(g, h, cfg);
  const std::size_t n = g.n();
  if (n == 0) return {not_applicable("mixing.regular", Verdict::vacuous, "no vertices")};
  std::vector<double> f(n + 1);
  for (std::size_t x = 0; x <= n; ++x) f[x] = std::sqrt(double(x) * (1.0 - double(x) / double(n)));
  const double lam = h.lambda;
  MixingScanner sc(g, h.d / double(n), {}, std::make_pair(lam, f));
  Finding out = run_scan("mixing.regular", g, sc, mode, cfg);
  out.extra["lambda"] = num12(lam);
  return {out};
}

double IrregularBound::rhs(double u, double w) const {
  const double nn = double(n), gap = d - lambda;
  const double du = std::sqrt(2.0 * K * u / nn) / gap, dw = std::sqrt(2.0 * K * w / nn) / gap;
  const double a_lo = std::max(0.0, u / std::sqrt(nn) - du), a_hi = std::min(std::sqrt(u), u / std::sqrt(nn) + du);
  const double b_lo = std::max(0.0, w / std::sqrt(nn) - dw), b_hi = std::min(std::sqrt(w), w / std::sqrt(nn) + dw);
  double l_hi = double(max_degree);
  const double denom = nn * gap * gap - K;
  if (denom > 0) l_hi = std::min(l_hi, d + nn * gap * gap / denom * std::sqrt(K / nn));
  const double err = lambda * std::sqrt(std::max(0.0, u - a_lo * a_lo) * std::max(0.0, w - b_lo * b_lo));
  const double center = main_center(u, w);
  const double main_lo = a_lo * b_lo * d, main_hi = a_hi * b_hi * l_hi;
  return std::max(main_hi + err - center, center - main_lo + err);
}

double IrregularBound::rhs_loose(double u, double w) const {
  IrregularBound b = *this;
  const double tight = b.rhs(u, w);
  const double nn = double(n), gap = d - lambda;
  const double du = std::sqrt(2.0 * K * u / nn) / gap;
  const double a_lo = std::max(0.0, u / std::sqrt(nn) - du);
  const double dw = std::sqrt(2.0 * K * w / nn) / gap;
  const double b_lo = std::max(0.0, w / std::sqrt(nn) - dw);
  const double err_tight = lambda * std::sqrt(std::max(0.0, u - a_lo * a_lo) * std::max(0.0, w - b_lo * b_lo));
  return tight - err_tight + lambda * std::sqrt(u * w);
}

IrregularBound irregular_bound(const Graph& g, const AuditHeader& h) {
  if (!(h.lambda < h.d))
    throw PreconditionError("irregular mixing bound needs lambda < average degree (lambda=" + fmt(h.lambda) +
                            ", d=" + fmt(h.d) + ")");
  IrregularBound b;
  b.d = h.d;
  b.lambda = h.lambda;
  b.K = degree_stats(g).K();
  b.n = g.n();
  b.max_degree = g.max_degree();
  return b;
}

Finding audit_irregular_mixing(const Graph& g, const AuditHeader& h, const VertexSet& U, const VertexSet& W) {
  const IrregularBound b = irregular_bound(g, h);
  const double u = double(U.size()), w = double(W.size());
  const double e = double(edge_count_between(g, U, W));
  Finding f = check("mixing.irregular_pair", Relation::le, std::abs(e - b.main_center(u, w)), b.rhs(u, w),
                    Method::exhaustive, "single pair");
  f.extra["K"] = num12(b.K);
  f.extra["loose_rhs"] = num12(b.rhs_loose(u, w));
  f.extra["U"] = set_json(U);
  f.extra["W"] = set_json(W);
  return f;
}

std::vector<Finding> audit_irregular_mixing_scan(const Graph& g, const AuditHeader& h, const AuditConfig& cfg) {
  const IrregularBound b = irregular_bound(g, h);
  MixingScanner sc(g, h.d / double(g.n()), [b](double u, double w) { return b.rhs(u, w); }, std::nullopt);
  Finding out = run_scan("mixing.irregular", g, sc, MixingMode::exhaustive, cfg);
  out.extra["K"] = num12(b.K);
  out.extra["lambda"] = num12(h.lambda);
  return {out};
}

// ---------------------------------------------------------------------------
// Jumbledness.

JumblednessEstimate jumbledness_estimate(const Graph& g, double p, const AuditConfig& cfg) {
  const std::size_t n = g.n();
  JumblednessEstimate est;
  est.p = p;
  auto score = [&](double e, std::size_t u) { return std::abs(e - p * double(u) * double(u - 1) / 2.0) / double(u); };
  if (n == 0) {
    est.exhaustive = true;
    return est;
  }
  if (n <= cfg.jumbled_exhaustive_max_n && n <= 30) {
    est.exhaustive = true;
    std::vector<std::uint64_t> adj(n, 0);
    for (Vertex v = 0; v < n; ++v)
      for (Vertex x : g.neighbors(v))
        if (x != v) adj[v] |= std::uint64_t{1} << x;
    std::uint64_t U = 0, best = 0;
    std::size_t u = 0;
    std::int64_t e = 0;
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << n); ++i) {
      const unsigned b = static_cast<unsigned>(std::countr_zero(i));
      const std::int64_t delta = std::popcount(adj[b] & U & ~(std::uint64_t{1} << b)) + (g.has_loop(b) ? 1 : 0);
      if (U >> b & 1) {
        U ^= std::uint64_t{1} << b;
        --u;
        e -= delta;
      } else {
        U ^= std::uint64_t{1} << b;
        ++u;
        e += delta;
      }
      if (u == 0) continue;
      const double s = score(double(e), u);
      if (s > est.alpha) {
        est.alpha = s;
        best = U;
      }
    }
    est.witness = mask_to_set(best);
    return est;
  }
  est.seed = cfg.seed;
  auto consider = [&](double s, auto&& witness) {
    if (s > est.alpha) {
      est.alpha = s;
      est.witness = witness();
    }
  };
  VertexSet all(n);
  std::iota(all.begin(), all.end(), 0);
  consider(score(double(g.m()), n), [&] { return all; });
  for (Vertex v = 0; v < n; ++v) consider(score(g.has_loop(v) ? 1.0 : 0.0, 1), [&] { return VertexSet{v}; });
  if (n * (n - 1) / 2 <= cfg.mixing_small_sets_cap)
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) {
        const double e = (g.has_edge(a, b) ? 1.0 : 0.0) + (g.has_loop(a) ? 1.0 : 0.0) + (g.has_loop(b) ? 1.0 : 0.0);
        consider(score(e, 2), [&] { return VertexSet{a, b}; });
      }
  SplitMix64 rng(cfg.seed);
  std::vector<Vertex> perm(all);
  std::vector<std::uint8_t> in(n, 0);
  for (std::uint64_t s = 0; s < cfg.sample_budget; ++s) {
    const std::size_t u = 1 + rng.below(n);
    for (std::size_t k = 0; k < u; ++k) std::swap(perm[k], perm[k + rng.below(n - k)]);
    std::uint64_t twice = 0, loops = 0;
    for (std::size_t k = 0; k < u; ++k) in[perm[k]] = 1;
    for (std::size_t k = 0; k < u; ++k)
      for (Vertex x : g.neighbors(perm[k])) {
        if (x == perm[k])
          ++loops;
        else
          twice += in[x];
      }
    for (std::size_t k = 0; k < u; ++k) in[perm[k]] = 0;
    consider(score(double(twice / 2 + loops), u), [&] {
      VertexSet U(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(u));
      std::sort(U.begin(), U.end());
      return U;
    });
    ++est.samples;
  }
  return est;
}

namespace {

Finding thomason_finding(const std::string& id, const Graph& g, double p, std::uint32_t maxcodeg,
                         const AuditConfig& cfg, bool& hyp) {
  const std::size_t n = g.n();
  const JumblednessEstimate est = jumbledness_estimate(g, p, cfg);
  const double l = double(maxcodeg) - double(n) * p * p;
  const double delta = double(g.min_degree());
  hyp = delta >= double(n) * p - 1e-9 && g.loop_count() == 0;
  const double inside = (p + l) * double(n);
  const double cert = inside >= 0 ? std::sqrt(inside) : 0.0;
  const Method m = est.exhaustive ? Method::exhaustive : Method::sampled;
  Finding f;
  if (g.loop_count() > 0) {
    f = note(id, est.alpha, cert, Verdict::hypothesis_not_met, m, "codegree certificate needs a loopless graph");
    f.relation = Relation::le;
    f.slack = signed_slack(Relation::le, f.lhs, f.rhs);
  } else if (!hyp) {
    f = note(id, est.alpha, cert, Verdict::hypothesis_not_met, m,
             "minimum degree " + fmt(delta) + " is below np = " + fmt(double(n) * p));
    f.relation = Relation::le;
    f.slack = signed_slack(Relation::le, f.lhs, f.rhs);
  } else if (inside < 0) {
    f = note(id, est.alpha, cert, Verdict::vacuous, m, "p + l < 0");
  } else {
    f = check(id, Relation::le, est.alpha, cert, m, "alpha estimate against sqrt((p + l) n)");
  }
  f.extra["p"] = num12(p);
  f.extra["l"] = num12(l);
  f.extra["max_codegree"] = maxcodeg;
  f.extra["min_degree"] = g.min_degree();
  f.extra["witness"] = set_json(est.witness);
  if (!est.exhaustive) {
    f.seed = est.seed;
    f.budget = cfg.sample_budget;
  }
  return f;
}

}  // namespace

std::vector<Finding> audit_jumbledness(const Graph& g, const AuditConfig& cfg) {
  const std::size_t n = g.n();
  if (n < 2) return {not_applicable("jumbledness.estimate", Verdict::vacuous, "fewer than two vertices")};
  const double pairs = double(n) * double(n - 1) / 2.0;
  const double p = cfg.jumbled_p ? *cfg.jumbled_p : double(g.m()) / pairs;
  if (!(p >= 0 && p <= 1)) throw PreconditionError("density must lie in [0, 1]");
  std::vector<Finding> out;
  const JumblednessEstimate est = jumbledness_estimate(g, p, cfg);
  Finding e = note("jumbledness.estimate", est.alpha, std::sqrt(double(n) * p), Verdict::info,
                   est.exhaustive ? Method::exhaustive : Method::sampled,
                   "max |e(U) - p C(|U|,2)| / |U|; rhs is the sqrt(np) reference scale");
  e.extra["p"] = num12(p);
  e.extra["witness"] = set_json(est.witness);
  e.extra["samples"] = est.samples;
  if (!est.exhaustive) {
    e.seed = est.seed;
    e.budget = cfg.sample_budget;
  }
  out.push_back(e);

  const auto [mincodeg, maxcodeg] = codegree_extremes(g);
  (void)mincodeg;
  bool hyp = false;
  out.push_back(thomason_finding("jumbledness.thomason", g, p, maxcodeg, cfg, hyp));
  const double pd = double(g.min_degree()) / double(n);
  if (pd > 0 && std::abs(pd - p) > 1e-12)
    out.push_back(thomason_finding("jumbledness.thomason_min_degree", g, pd, maxcodeg, cfg, hyp));
  return out;
}

// ---------------------------------------------------------------------------
// Connectivity.

std::vector<Finding> audit_connectivity(const Graph& g, const AuditHeader& h, const AuditConfig& cfg) {
  std::vector<Finding> out;
  const std::size_t n = g.n();
  if (!h.regular || n < 2)
    return {not_applicable("connectivity.vertex_spectral", Verdict::hypothesis_not_met, "needs a regular graph, n >= 2")};
  const double d = double(regular_degree(h)), lam = h.lambda;
  const bool loops = h.loops > 0;
  const bool run = n <= cfg.connectivity_max_n;
  const std::size_t kappa = run ? vertex_connectivity(g) : 0;
  const std::size_t kappa_e = run ? edge_connectivity(g) : 0;

  {
    const double rhs = d > 0 ? d - 36.0 * lam * lam / d : 0.0;
    Finding f;
    if (!run) {
      f = note("connectivity.vertex_spectral", 0, rhs, Verdict::inconclusive, Method::formula, "n above connectivity cap");
    } else if (loops) {
      f = note("connectivity.vertex_spectral", double(kappa), rhs, Verdict::hypothesis_not_met, Method::oracle,
               "graph has loops");
    } else if (d > double(n) / 2) {
      f = note("connectivity.vertex_spectral", double(kappa), rhs, Verdict::hypothesis_not_met, Method::oracle,
               "d > n/2");
    } else if (rhs <= 0) {
      f = note("connectivity.vertex_spectral", double(kappa), rhs, Verdict::vacuous, Method::oracle,
               "bound d - 36 lambda^2/d is not positive; exact kappa reported");
    } else {
      f = check("connectivity.vertex_spectral", Relation::ge, double(kappa), rhs, Method::oracle,
                "exact kappa against d - 36 lambda^2/d");
    }
    if (f.verdict != Verdict::pass && f.verdict != Verdict::fail) {
      f.relation = Relation::ge;
      f.slack = signed_slack(Relation::ge, f.lhs, f.rhs);
    }
    f.extra["kappa"] = kappa;
    out.push_back(f);
  }
  {
    const auto [lo, hi] = codegree_extremes(g);
    const double target = d * d / double(n);
    const double dev = target > 0 ? std::max(std::abs(double(hi) - target), std::abs(double(lo) - target)) / target : 0.0;
    const bool window = std::sqrt(double(n)) * std::log(double(n)) < d && d <= 0.75 * double(n);
    Finding f = note("connectivity.codegree_advisory", dev, 0.0, Verdict::info, Method::formula,
                     "max relative codegree deviation from d^2/n; the implication is advisory");
    f.extra["degree_window"] = window;
    f.extra["min_codegree"] = lo;
    f.extra["max_codegree"] = hi;
    if (run) {
      f.extra["kappa"] = kappa;
      f.extra["kappa_equals_d"] = double(kappa) == d;
    }
    out.push_back(f);
  }
  const bool gap_ok = d - lam >= 2.0 - 1e-9;
  {
    Finding f;
    if (!run)
      f = note("connectivity.edge_spectral", 0, d, Verdict::inconclusive, Method::formula, "n above connectivity cap");
    else if (loops)
      f = note("connectivity.edge_spectral", double(kappa_e), d, Verdict::hypothesis_not_met, Method::oracle,
               "graph has loops");
    else if (!gap_ok)
      f = note("connectivity.edge_spectral", double(kappa_e), d, Verdict::hypothesis_not_met, Method::oracle,
               "d - lambda < 2");
    else
      f = check("connectivity.edge_spectral", Relation::ge, double(kappa_e), d, Method::oracle, "exact kappa' against d");
    if (f.verdict != Verdict::pass && f.verdict != Verdict::fail) {
      f.relation = Relation::ge;
      f.slack = signed_slack(Relation::ge, f.lhs, f.rhs);
    }
    f.extra["edge_connectivity"] = kappa_e;
    out.push_back(f);
  }
  {
    Finding f;
    if (n % 2 == 1) {
      f = not_applicable("connectivity.perfect_matching", Verdict::hypothesis_not_met, "n odd; matching skipped");
    } else if (loops || !gap_ok) {
      f = not_applicable("connectivity.perfect_matching", Verdict::hypothesis_not_met,
                         loops ? "graph has loops" : "d - lambda < 2");
    } else {
      const OracleResult r = matching(g, MatchingMode::exists_perfect, split_seed(cfg.seed, 0x3a7c));
      f = check("connectivity.perfect_matching", Relation::ge, double(r.value), 1.0, Method::oracle,
                "perfect matching exists");
      f.extra["oracle_note"] = r.note;
      f.extra["witness_valid"] = r.value == 1 && is_perfect_matching(g, r.edges);
    }
    out.push_back(f);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Independence number and chromatic number.

std::vector<Finding> audit_alpha_chi(const Graph& g, const AuditHeader& h, const AuditConfig& cfg) {
  std::vector<Finding> out;
  const std::size_t n = g.n();
  if (!h.regular || n == 0)
    return {not_applicable("independence.spectral_upper", Verdict::hypothesis_not_met, "needs a regular graph")};
  const double d = double(regular_degree(h)), lam = h.lambda, nn = double(n);
  if (d == 0 || lam <= 0)
    return {not_applicable("independence.spectral_upper", Verdict::vacuous, "d = 0 or lambda = 0")};
  const bool loops = h.loops > 0;

  OracleResult a;
  if (n <= cfg.oracle_max_n) {
    a = exact_alpha(g, cfg.node_budget);
  } else {
    VertexSet all(n);
    std::iota(all.begin(), all.end(), 0);
    a.lower = std::int64_t(greedy_independent(g, all).size());
    a.upper = std::int64_t(n);
  }
  {
    const double rhs = lam * nn / (d + lam);
    Finding f;
    if (a.known) {
      f = check("independence.spectral_upper", Relation::le, double(a.value), rhs, Method::oracle,
                "exact alpha against lambda n / (d + lambda)");
    } else if (double(a.lower) > rhs + kAuditTolerance * std::max(1.0, rhs)) {
      f = check("independence.spectral_upper", Relation::le, double(a.lower), rhs, Method::oracle,
                "alpha lower bound already exceeds the bound");
    } else {
      f = note("independence.spectral_upper", double(a.lower), rhs, Verdict::inconclusive, Method::oracle,
               "alpha oracle over budget; lower bound reported");
      f.relation = Relation::le;
      f.slack = signed_slack(Relation::le, f.lhs, f.rhs);
    }
    f.extra["alpha_lower"] = a.lower;
    f.extra["alpha_upper"] = a.upper;
    f.extra["alpha_known"] = a.known;
    out.push_back(f);
  }

  OracleResult c;
  bool have_chi = false;
  if (!loops) {
    if (n <= cfg.oracle_max_n) {
      c = exact_chi(g, cfg.node_budget);
    } else {
      c.lower = 1;
      c.upper = std::int64_t(n);
    }
    have_chi = true;
    const double rhs = 1.0 + d / lam;
    Finding f;
    if (c.known) {
      f = check("chromatic.hoffman", Relation::ge, double(c.value), rhs, Method::oracle, "exact chi against 1 + d/lambda");
    } else if (double(c.upper) < rhs - kAuditTolerance * std::max(1.0, rhs)) {
      f = check("chromatic.hoffman", Relation::ge, double(c.upper), rhs, Method::oracle,
                "chi upper bound already below the bound");
    } else {
      f = note("chromatic.hoffman", double(c.upper), rhs, Verdict::inconclusive, Method::oracle,
               "chi oracle over budget; upper bound reported");
      f.relation = Relation::ge;
      f.slack = signed_slack(Relation::ge, f.lhs, f.rhs);
    }
    f.extra["chi_lower"] = c.lower;
    f.extra["chi_upper"] = c.upper;
    f.extra["chi_known"] = c.known;
    out.push_back(f);
  } else {
    out.push_back(not_applicable("chromatic.hoffman", Verdict::hypothesis_not_met, "graph has loops"));
  }

  const bool regime = lam < d && d <= 0.9 * nn && !loops;
  if (!regime) {
    const std::string why = loops ? "graph has loops" : "needs lambda < d <= 0.9 n";
    out.push_back(not_applicable("independence.greedy_lower", Verdict::hypothesis_not_met, why));
    out.push_back(not_applicable("chromatic.greedy_upper", Verdict::hypothesis_not_met, why));
    return out;
  }
  const double L = std::log((d - lam) / (lam + 1.0) + 1.0);
  {
    VertexSet all(n);
    std::iota(all.begin(), all.end(), 0);
    const VertexSet I = greedy_independent(g, all);
    const double rhs = nn / (2.0 * (d - lam)) * L;
    Finding f = check("independence.greedy_lower", Relation::ge, double(I.size()), rhs, Method::heuristic,
                      "greedy minimum-degree independent set against n/(2(d - lambda)) ln((d - lambda)/(lambda + 1) + 1)");
    if (a.known) f.extra["alpha"] = a.value;
    out.push_back(f);
  }
  {
    const GreedyColoring gc = greedy_coloring(g, d, lam);
    const double rhs = 6.0 * (d - lam) / L;
    Finding f;
    if (have_chi && c.known)
      f = check("chromatic.greedy_upper", Relation::le, double(c.value), rhs, Method::oracle,
                "exact chi against 6(d - lambda)/ln((d - lambda)/(lambda + 1) + 1)");
    else if (double(gc.colors) <= rhs)
      f = check("chromatic.greedy_upper", Relation::le, double(gc.colors), rhs, Method::heuristic,
                "greedy coloring already meets the bound");
    else {
      f = note("chromatic.greedy_upper", double(gc.colors), rhs, Verdict::inconclusive, Method::heuristic,
               "chi unknown and the greedy coloring exceeds the bound");
      f.relation = Relation::le;
      f.slack = signed_slack(Relation::le, f.lhs, f.rhs);
    }
    f.extra["greedy_colors"] = gc.colors;
    f.extra["phase1_classes"] = gc.phase1_classes;
    f.extra["phase2_colors"] = gc.phase2_colors;
    f.extra["phase1_threshold"] = num12(gc.threshold);
    out.push_back(f);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Max cut.

Finding audit_maxcut(const Graph& g, const AuditHeader& h, const AuditConfig& cfg) {
  const std::size_t n = g.n();
  if (!h.regular || n == 0) return not_applicable("maxcut.spectral", Verdict::hypothesis_not_met, "needs a regular graph");
  const double d = double(regular_degree(h)), nn = double(n);
  const double rhs = (d * nn - h.lambda_min * nn) / 4.0;
  Finding f;
  if (n <= cfg.maxcut_exact_max_n) {
    const OracleResult r = exact_maxcut(g);
    f = check("maxcut.spectral", Relation::le, double(r.value), rhs, Method::oracle, "exact max cut against m/2 - lambda_n n/4");
  } else {
    const TuranPartition tp = greedy_turan_partition(g, 3);
    f = check("maxcut.spectral", Relation::le, double(tp.cross_edges), rhs, Method::heuristic,
              "local-search cut against m/2 - lambda_n n/4");
  }
  f.extra["lambda_min"] = num12(h.lambda_min);
  return f;
}

// ---------------------------------------------------------------------------
// Small subgraphs.

Graph named_pattern(const std::string& name) {
  auto num = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.size() > 2 || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw PreconditionError("bad pattern name '" + name + "'");
    return std::stoul(s);
  };
  if (name.size() < 2) throw PreconditionError("bad pattern name '" + name + "'");
  const char kind = name[0];
  const std::string rest = name.substr(1);
  if (kind == 'K') {
    const auto comma = rest.find(',');
    if (comma != std::string::npos) return complete_bipartite(num(rest.substr(0, comma)), num(rest.substr(comma + 1)));
    return complete_graph(num(rest));
  }
  if (kind == 'C') {
    const std::size_t k = num(rest);
    if (k < 3) throw PreconditionError("cycles need length >= 3");
    return cycle_graph(k);
  }
  if (kind == 'P') return path_graph(num(rest));
  if (kind == 'S') return star_graph(num(rest));
  throw PreconditionError("bad pattern name '" + name + "'");
}

std::size_t shortest_odd_cycle(const Graph& g) {
  const std::size_t n = g.n();
  std::size_t best = 0;
  std::vector<std::int64_t> dist(2 * n);
  std::vector<std::size_t> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, std::size_t{s} * 2);
    dist[std::size_t{s} * 2] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const std::size_t cur = queue[qi];
      const Vertex v = static_cast<Vertex>(cur / 2);
      const std::size_t par = cur % 2;
      if (best && dist[cur] + 1 >= std::int64_t(best)) break;
      for (Vertex x : g.neighbors(v)) {
        if (x == v) continue;
        const std::size_t nxt = std::size_t{x} * 2 + (1 - par);
        if (dist[nxt] < 0) {
          dist[nxt] = dist[cur] + 1;
          queue.push_back(nxt);
        }
      }
    }
    const std::int64_t odd = dist[std::size_t{s} * 2 + 1];
    if (odd > 0 && (best == 0 || std::size_t(odd) < best)) best = std::size_t(odd);
  }
  return best;
}

std::vector<Finding> audit_subgraphs(const Graph& g, const AuditHeader& h, const Graph& pattern, const std::string& name,
                                     const VertexSet& U_in, const AuditConfig& cfg) {
  std::vector<Finding> out;
  const std::size_t s = pattern.n();
  if (s == 0 || s > 6) throw PreconditionError("pattern must have 1..6 vertices");
  const std::size_t n = g.n();
  VertexSet U = U_in;
  if (U.empty()) {
    U.resize(n);
    std::iota(U.begin(), U.end(), 0);
  }
  const Graph sub = induced_subgraph(g, U);
  const double mm = double(U.size()), nn = double(n), d = h.d, lam = h.lambda;
  const std::size_t r = pattern.m();
  std::size_t Delta = pattern.max_degree();
  const std::string base = "subgraphs." + name;

  {
    const double work = double(sub.n()) * std::pow(double(std::max<std::size_t>(sub.max_degree(), 1)), double(s - 1));
    if (work > cfg.subgraph_work_cap) {
      out.push_back(not_applicable(base + ".count", Verdict::inconclusive, "count skipped: work estimate above cap"));
    } else {
      const BigInt labeled = count_subgraph_copies(sub, pattern, false);
      const std::uint64_t aut = automorphism_count(pattern);
      const double pred = std::pow(mm, double(s)) * std::pow(d / nn, double(r));
      const double ratio = pred > 0 ? labeled.convert_to<double>() / pred : 0.0;
      Finding f = note(base + ".count", ratio, 1.0, Verdict::info, Method::exhaustive,
                       "labeled copies / (m^s (d/n)^r); equals copies over the predicted count");
      f.extra["labeled_copies"] = labeled.str();
      f.extra["automorphisms"] = aut;
      f.extra["s"] = s;
      f.extra["r"] = r;
      f.extra["max_degree"] = Delta;
      f.extra["set_size"] = U.size();
      if (d > 0 && lam > 0) f.extra["regime_margin"] = num12(mm / (lam * std::pow(nn / d, double(Delta))));
      out.push_back(f);
    }
  }

  const bool complete = r == s * (s - 1) / 2 && s >= 2;
  if (complete) {
    const std::string id = base + ".clique_threshold";
    if (!h.regular || h.loops > 0 || d == 0) {
      out.push_back(not_applicable(id, Verdict::hypothesis_not_met, "needs a loopless regular graph with d > 0"));
    } else {
      double geo = 0.0, term = 1.0;
      for (std::size_t i = 0; i + 2 <= s; ++i) {
        geo += term;
        term *= nn / d;
      }
      const double T = (lam + 1.0) * nn / d * geo;
      const bool has = contains_clique(sub, s);
      Finding f;
      if (mm > T) {
        f = check(id, Relation::ge, has ? 1.0 : 0.0, 1.0, Method::exhaustive, "set above the threshold must contain the clique");
      } else {
        f = note(id, mm, T, Verdict::out_of_regime, Method::formula, "set size does not exceed the threshold");
        f.relation = Relation::ge;
      }
      f.extra["threshold"] = num12(T);
      f.extra["set_size"] = U.size();
      f.extra["contains"] = has;
      out.push_back(f);
    }
  }
  const bool odd_cycle = s >= 3 && s % 2 == 1 && r == s && pattern.is_regular() && pattern.min_degree() == 2 &&
                         is_connected(pattern);
  if (odd_cycle) {
    const double k = double(s - 1) / 2.0;
    const std::string id = base + ".odd_cycle_margin";
    if (!h.regular || lam <= 0) {
      out.push_back(not_applicable(id, Verdict::hypothesis_not_met, "needs a regular graph with lambda > 0"));
    } else {
      const double margin = std::pow(d, 2 * k) / nn / std::pow(lam, 2 * k - 1);
      Finding f = note(id, margin, 1.0, Verdict::info, Method::formula, "d^{2k}/n over lambda^{2k-1}");
      if (s <= 8) f.extra["contains"] = contains_cycle(sub, s);
      out.push_back(f);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hamiltonicity.

std::vector<Finding> audit_hamiltonicity(const Graph& g, const AuditHeader& h, const AuditConfig& cfg) {
  std::vector<Finding> out;
  const std::size_t n = g.n();
  if (!h.regular || n < 3)
    return {not_applicable("hamiltonicity.chvatal_erdos", Verdict::hypothesis_not_met, "needs a regular graph, n >= 3")};
  const double d = double(regular_degree(h)), lam = h.lambda, nn = double(n);
  const Graph simple = strip_loops(g);

  std::optional<OracleResult> ham;
  auto search = [&]() -> const OracleResult* {
    if (n > cfg.hamilton_max_n) return nullptr;
    if (!ham) ham = hamilton_search(simple, cfg.node_budget, false);
    return &*ham;
  };
  auto confirm = [&](Finding& f) {
    const OracleResult* r = search();
    if (!r) {
      f.verdict = Verdict::inconclusive;
      f.detail += "; search skipped above n cap";
    } else if (!r->known) {
      f.verdict = Verdict::inconclusive;
      f.detail += "; search over budget";
    } else {
      f.verdict = r->value == 1 ? Verdict::pass : Verdict::fail;
      f.extra["hamiltonian"] = r->value == 1;
    }
  };

  {
    const double lhs = d > 0 ? d - 36.0 * lam * lam / d : 0.0;
    const double rhs = lam * nn / (d + lam);
    Finding f = note("hamiltonicity.spectral_condition", lhs, rhs, Verdict::out_of_regime, Method::formula,
                     "d - 36 lambda^2/d against lambda n/(d + lambda)");
    f.relation = Relation::ge;
    if (h.loops > 0 || d > nn / 2 || d == 0) {
      f.verdict = Verdict::hypothesis_not_met;
      f.detail += h.loops > 0 ? "; graph has loops" : "; needs 0 < d <= n/2";
    } else if (lhs >= rhs) {
      f.detail = "condition holds, Hamiltonicity required";
      confirm(f);
    }
    out.push_back(f);
  }
  {
    const bool small = n <= cfg.connectivity_max_n;
    OracleResult a;
    if (n <= cfg.oracle_max_n) a = exact_alpha(simple, cfg.node_budget);
    const std::size_t kappa = small ? vertex_connectivity(simple) : 0;
    Finding f = note("hamiltonicity.chvatal_erdos", double(kappa), double(a.known ? a.value : a.lower),
                     Verdict::inconclusive, Method::oracle, "kappa against alpha");
    f.relation = Relation::ge;
    if (!small || !a.known) {
      f.detail += small ? "; alpha over budget" : "; connectivity skipped above n cap";
    } else if (kappa >= std::size_t(a.value)) {
      f.detail = "kappa >= alpha, Hamiltonicity required";
      confirm(f);
    } else {
      f.detail = "kappa < alpha; no conclusion";
      if (const OracleResult* r = search(); r && r->known) f.extra["hamiltonian"] = r->value == 1;
    }
    out.push_back(f);
  }
  {
    const double L = std::log(nn), LL = std::log(L), LLL = std::log(LL);
    if (!(LLL > 0) || lam <= 0) {
      out.push_back(not_applicable("hamiltonicity.sparse_margin", Verdict::out_of_regime,
                                   lam <= 0 ? "lambda = 0" : "log log log n is not positive"));
    } else {
      const double margin = (LL * LL / (1000.0 * L * LLL)) * d / lam;
      out.push_back(note("hamiltonicity.sparse_margin", margin, 1.0, Verdict::info, Method::formula,
                         "(log log n)^2 d / (1000 log n log log log n lambda)"));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Turan.

std::vector<Finding> audit_turan(const Graph& g, const AuditHeader& h, std::size_t t, const AuditConfig& cfg) {
  if (t < 3) throw PreconditionError("Turan audit needs t >= 3");
  std::vector<Finding> out;
  const double m = double(g.m());
  const double frac = double(t - 2) / double(t - 1);
  const TuranPartition tp = greedy_turan_partition(g, t);
  const double kept = double(tp.cross_edges + g.loop_count());
  const std::string base = "turan.K" + std::to_string(t);
  {
    Finding f = check(base + ".greedy_partition", Relation::ge, kept, frac * m, Method::heuristic,
                      "edges across a " + std::to_string(t - 1) + "-part local-search partition against (t-2)/(t-1) m");
    f.extra["moves"] = tp.moves;
    out.push_back(f);
  }
  if (g.m() > cfg.turan_exact_max_m) {
    Finding f = note(base + ".exact", kept, m, Verdict::inconclusive, Method::heuristic,
                     "exact search skipped above the edge cap; m is the trivial upper bound");
    f.relation = Relation::le;
    f.slack = signed_slack(Relation::le, f.lhs, f.rhs);
    out.push_back(f);
  } else {
    const OracleResult r = turan_exact(g, t, std::min(cfg.node_budget, cfg.turan_node_budget));
    Finding f = check(base + ".exact", Relation::le, kept, double(r.upper), Method::oracle,
                      "greedy K_t-free subgraph against the exact value (or its upper bound)");
    f.extra["ex_lower"] = r.lower;
    f.extra["ex_upper"] = r.upper;
    f.extra["known"] = r.known;
    if (m > 0) f.extra["ratio"] = num12(double(r.lower) / m);
    f.extra["fraction"] = num12(frac);
    out.push_back(f);
  }
  if (h.regular && h.lambda > 0 && h.n > 0) {
    const double nn = double(h.n), d = h.d;
    const double margin = std::pow(d, double(t - 1)) / (std::pow(nn, double(t - 2)) * h.lambda);
    out.push_back(note(base + ".spectral_margin", margin, 1.0, Verdict::info, Method::formula,
                       "d^{t-1}/(n^{t-2} lambda)"));
  } else {
    out.push_back(not_applicable(base + ".spectral_margin", Verdict::hypothesis_not_met, "needs a regular graph with lambda > 0"));
  }
  return out;
}

}  // namespace pseudograph
