#include "pseudograph/random_lab.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "pseudograph/oracles.hpp"

namespace pseudograph {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    ++merges_;
    return true;
  }
  std::size_t size_of(std::size_t x) { return size_[find(x)]; }
  std::size_t merges() const { return merges_; }

 private:
  std::vector<std::size_t> parent_, size_;
  std::size_t merges_ = 0;
};

// Calls f(u, v) for each edge of g kept with probability p; canonical order,
// one uniform draw per edge.
template <class F>
void for_kept_edges(const Graph& g, double p, std::uint64_t seed, F&& f) {
  SplitMix64 rng(seed);
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u)) {
      if (v < u) continue;
      if (rng.uniform() < p) f(u, v);
    }
}

double log_big(const BigInt& x) {
  if (x <= 0) return -INFINITY;
  const std::size_t bits = boost::multiprecision::msb(x) + 1;
  if (bits <= 60) return std::log(x.convert_to<double>());
  const std::size_t shift = bits - 60;
  const BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) + double(shift) * std::log(2.0);
}

double log_factorial(double n) { return std::lgamma(n + 1.0); }

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw PreconditionError("probability must lie in [0, 1]");
}

void check_grid(const std::vector<double>& grid) {
  if (grid.empty()) throw PreconditionError("empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw PreconditionError("grid must be strictly increasing");
}

}  // namespace

McEstimate McEstimate::from_samples(std::string statistic, std::vector<double> samples, std::uint64_t master_seed) {
  McEstimate e;
  e.statistic = std::move(statistic);
  e.trials = samples.size();
  e.master_seed = master_seed;
  if (!samples.empty()) {
    double s = 0.0;
    for (double x : samples) s += x;
    e.mean = s / double(samples.size());
    if (samples.size() > 1) {
      double q = 0.0;
      for (double x : samples) q += (x - e.mean) * (x - e.mean);
      e.stddev = std::sqrt(q / double(samples.size() - 1));
    }
    e.std_error = e.stddev / std::sqrt(double(samples.size()));
  }
  e.samples = std::move(samples);
  return e;
}

Graph sample_gp(const Graph& g, double p, std::uint64_t seed) {
  check_probability(p);
  std::vector<Edge> kept;
  for_kept_edges(g, p, seed, [&](Vertex u, Vertex v) { kept.emplace_back(u, v); });
  return Graph::from_edge_list(g.n(), kept);
}

double dual_branching_root(double alpha) {
  if (!(alpha > 1.0)) throw PreconditionError("dual root needs alpha > 1");
  const double target = alpha * std::exp(-alpha);
  double lo = 0.0, hi = 1.0;
  // x e^{-x} increases on (0, 1).
  for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid * std::exp(-mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<std::size_t> component_sizes(const Graph& g) {
  UnionFind uf(g.n());
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u))
      if (v > u) uf.unite(u, v);
  std::vector<std::size_t> sizes;
  for (Vertex v = 0; v < g.n(); ++v)
    if (uf.find(v) == v) sizes.push_back(uf.size_of(v));
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t point, std::size_t trial) {
  return split_seed(split_seed(master, point), trial);
}

PhaseCurve giant_component_experiment(const Graph& g, const std::vector<double>& alpha_grid, std::size_t trials,
                                      std::uint64_t seed) {
  check_grid(alpha_grid);
  const std::size_t n = g.n();
  if (n == 0) throw PreconditionError("empty graph");
  if (!g.is_regular()) throw PreconditionError("giant component experiment needs a regular graph");
  const double d = double(g.degree(0));
  if (d == 0) throw PreconditionError("degree zero");
  PhaseCurve curve;
  curve.observable = "largest_component_fraction";
  curve.parameter = "alpha";
  curve.notes.push_back("edge probability alpha/d; prediction 1 - dual(alpha)/alpha for alpha > 1");
  for (std::size_t i = 0; i < alpha_grid.size(); ++i) {
    const double alpha = alpha_grid[i];
    if (alpha < 0) throw PreconditionError("alpha must be non-negative");
    double p = alpha / d;
    if (p > 1) {
      p = 1;
      curve.notes.push_back("alpha=" + std::to_string(alpha) + ": probability clipped to 1");
    }
    std::vector<double> frac(trials), second(trials);
    for (std::size_t t = 0; t < trials; ++t) {
      UnionFind uf(n);
      for_kept_edges(g, p, trial_seed(seed, i, t), [&](Vertex u, Vertex v) { uf.unite(u, v); });
      std::size_t a = 0, b = 0;
      for (Vertex v = 0; v < n; ++v)
        if (uf.find(v) == v) {
          const std::size_t s = uf.size_of(v);
          if (s > a) {
            b = a;
            a = s;
          } else if (s > b) {
            b = s;
          }
        }
      frac[t] = double(a) / double(n);
      second[t] = double(b);
    }
    PhasePoint pt;
    pt.x = alpha;
    pt.seed = split_seed(seed, i);
    pt.estimate = McEstimate::from_samples("largest_component_fraction", std::move(frac), seed);
    pt.secondary = McEstimate::from_samples("second_component_size", std::move(second), seed);
    pt.prediction = alpha > 1 ? 1.0 - dual_branching_root(alpha) / alpha : 0.0;
    curve.points.push_back(std::move(pt));
  }
  return curve;
}

WindowEstimate connectivity_window_experiment(const Graph& g, const std::vector<double>& p_grid, std::size_t trials,
                                              std::uint64_t seed, double epsilon) {
  check_grid(p_grid);
  if (!(epsilon > 0 && epsilon < 0.5)) throw PreconditionError("epsilon must lie in (0, 1/2)");
  const std::size_t n = g.n();
  WindowEstimate w;
  w.epsilon = epsilon;
  w.curve.observable = "connected_frequency";
  w.curve.parameter = "p";
  std::vector<double> freq;
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    check_probability(p_grid[i]);
    std::vector<double> hit(trials);
    for (std::size_t t = 0; t < trials; ++t) {
      UnionFind uf(n);
      for_kept_edges(g, p_grid[i], trial_seed(seed, i, t), [&](Vertex u, Vertex v) { uf.unite(u, v); });
      hit[t] = (n <= 1 || uf.merges() == n - 1) ? 1.0 : 0.0;
    }
    PhasePoint pt;
    pt.x = p_grid[i];
    pt.seed = split_seed(seed, i);
    pt.estimate = McEstimate::from_samples("connected", std::move(hit), seed);
    freq.push_back(pt.estimate.mean);
    w.curve.points.push_back(std::move(pt));
  }
  if (!is_connected(g)) {
    w.diagnostic = "graph is disconnected: connectivity frequency is identically 0, window undefined";
    return w;
  }
  // Monotone envelope, then linear interpolation of the two crossings.
  std::vector<double> mono(freq);
  for (std::size_t i = 1; i < mono.size(); ++i) mono[i] = std::max(mono[i], mono[i - 1]);
  auto crossing = [&](double level) -> std::optional<double> {
    if (mono.front() >= level) return std::nullopt;
    for (std::size_t i = 1; i < mono.size(); ++i)
      if (mono[i] >= level) {
        const double t = (level - mono[i - 1]) / (mono[i] - mono[i - 1]);
        return p_grid[i - 1] + t * (p_grid[i] - p_grid[i - 1]);
      }
    return std::nullopt;
  };
  w.p_low = crossing(epsilon);
  w.p_high = crossing(1.0 - epsilon);
  if (!w.p_low || !w.p_high) {
    w.diagnostic = "grid does not bracket the transition: frequency ranges over [" + std::to_string(mono.front()) +
                   ", " + std::to_string(mono.back()) + "]";
    return w;
  }
  w.ratio = *w.p_high / *w.p_low;
  return w;
}

std::vector<double> random_edge_weights(const Graph& g, std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<double> wts;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v : g.neighbors(u))
      if (v > u) wts.push_back(rng.uniform());
  return wts;
}

double mst_trial(const Graph& g, std::uint64_t seed) {
  const std::vector<Edge> es = [&] {
    std::vector<Edge> out;
    for (Vertex u = 0; u < g.n(); ++u)
      for (Vertex v : g.neighbors(u))
        if (v > u) out.emplace_back(u, v);
    return out;
  }();
  const std::vector<double> wts = random_edge_weights(g, seed);
  std::vector<std::size_t> order(es.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return wts[a] < wts[b] || (wts[a] == wts[b] && a < b);
  });
  UnionFind uf(g.n());
  double total = 0.0;
  for (std::size_t i : order)
    if (uf.unite(es[i].first, es[i].second)) {
      total += wts[i];
      if (uf.merges() + 1 == g.n()) break;
    }
  if (g.n() > 0 && uf.merges() + 1 != g.n()) throw PreconditionError("minimum spanning tree needs a connected graph");
  return total;
}

MstResult mst_experiment(const Graph& g, std::size_t trials, std::uint64_t seed) {
  if (g.n() == 0 || !is_connected(g)) throw PreconditionError("minimum spanning tree needs a connected graph");
  std::vector<double> s(trials);
  for (std::size_t t = 0; t < trials; ++t) s[t] = mst_trial(g, split_seed(seed, t));
  MstResult r;
  r.estimate = McEstimate::from_samples("mst_weight", std::move(s), seed);
  const double d = double(degree_stats(g).sum) / double(g.n());
  r.prediction = d > 0 ? double(g.n()) / d * kZeta3 : 0.0;
  return r;
}

PhaseCurve degree_threshold_experiment(const Graph& g, std::size_t trials, std::uint64_t seed,
                                       const std::vector<double>& c_grid, bool confirm_hamilton) {
  check_grid(c_grid);
  const std::size_t n = g.n();
  if (n < 3 || !g.is_regular()) throw PreconditionError("degree threshold experiment needs a regular graph, n >= 3");
  const double d = double(g.degree(0));
  if (d == 0) throw PreconditionError("degree zero");
  const double base = std::log(double(n)) + std::log(std::log(double(n)));
  PhaseCurve curve;
  curve.observable = "min_degree_at_least_2";
  curve.parameter = "c";
  curve.notes.push_back("p = (ln n + ln ln n + c)/d; a constant offset c stands in for a diverging term");
  const bool ham = confirm_hamilton && n <= 40;
  for (std::size_t i = 0; i < c_grid.size(); ++i) {
    double p = (base + c_grid[i]) / d;
    if (p > 1) {
      curve.notes.push_back("c=" + std::to_string(c_grid[i]) + ": probability clipped to 1");
      p = 1;
    }
    if (p < 0) p = 0;
    std::vector<double> hit(trials), hamhit;
    for (std::size_t t = 0; t < trials; ++t) {
      const std::uint64_t s = trial_seed(seed, i, t);
      std::vector<std::uint32_t> deg(n, 0);
      for_kept_edges(g, p, s, [&](Vertex u, Vertex v) {
        if (u != v) {
          ++deg[u];
          ++deg[v];
        }
      });
      hit[t] = *std::min_element(deg.begin(), deg.end()) >= 2 ? 1.0 : 0.0;
      if (ham) {
        const OracleResult r = hamilton_search(sample_gp(g, p, s), kDefaultNodeBudget, false);
        hamhit.push_back(r.known && r.value == 1 ? 1.0 : 0.0);
      }
    }
    PhasePoint pt;
    pt.x = c_grid[i];
    pt.seed = split_seed(seed, i);
    pt.estimate = McEstimate::from_samples("min_degree_at_least_2", std::move(hit), seed);
    if (ham) pt.secondary = McEstimate::from_samples("hamiltonian", std::move(hamhit), seed);
    curve.points.push_back(std::move(pt));
  }
  return curve;
}

// ---------------------------------------------------------------------------

SuperRegularity super_regularity(const Graph& g, double p, double epsilon, std::uint64_t seed, std::uint64_t samples) {
  const std::size_t n = g.n();
  SuperRegularity r;
  r.degrees_ok = true;
  for (Vertex v = 0; v < n; ++v) {
    const double dv = double(g.degree(v));
    if (dv < (p - epsilon) * double(n) - 1e-9 || dv > (p + epsilon) * double(n) + 1e-9) r.degrees_ok = false;
  }
  const std::size_t s0 = static_cast<std::size_t>(std::ceil(epsilon * double(n) - 1e-9));
  const std::size_t smin = std::max<std::size_t>(s0, 1);
  r.pairs_ok = true;
  std::vector<std::uint32_t> cnt(n, 0);
  std::vector<std::uint8_t> inU(n, 0);
  std::vector<std::pair<std::uint32_t, Vertex>> outside;
  auto eval = [&](const VertexSet& U) {
    const std::size_t u = U.size();
    if (u < smin || n - u < smin) return;
    for (Vertex x : U) inU[x] = 1;
    for (Vertex x : U)
      for (Vertex y : g.neighbors(x)) ++cnt[y];
    outside.clear();
    for (Vertex y = 0; y < n; ++y)
      if (!inU[y]) outside.emplace_back(cnt[y], y);
    std::sort(outside.begin(), outside.end(), [](auto a, auto b) { return a.first > b.first || (a.first == b.first && a.second < b.second); });
    const std::size_t k = outside.size();
    std::vector<std::int64_t> top(k + 1, 0), bot(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
      top[i + 1] = top[i] + outside[i].first;
      bot[i + 1] = bot[i] + outside[k - 1 - i].first;
    }
    for (std::size_t w = smin; w <= k; ++w) {
      const double denom = double(u) * double(w);
      const double hi = double(top[w]) / denom - p, lo = p - double(bot[w]) / denom;
      const double dev = std::max(hi, lo);
      if (dev > r.worst_pair_deviation) {
        r.worst_pair_deviation = dev;
        r.witness_U = U;
        r.witness_W.clear();
        for (std::size_t i = 0; i < w; ++i) r.witness_W.push_back(hi >= lo ? outside[i].second : outside[k - 1 - i].second);
        std::sort(r.witness_W.begin(), r.witness_W.end());
      }
      if (dev > epsilon + 1e-12) r.pairs_ok = false;
    }
    for (Vertex x : U) {
      inU[x] = 0;
      for (Vertex y : g.neighbors(x)) cnt[y] = 0;
    }
  };
  if (n <= 20) {
    r.exhaustive = true;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      const std::size_t u = static_cast<std::size_t>(std::popcount(mask));
      if (u < smin || n - u < smin) continue;
      VertexSet U;
      for (Vertex v = 0; v < n; ++v)
        if (mask >> v & 1) U.push_back(v);
      eval(U);
    }
  } else if (n >= 2 * smin) {
    SplitMix64 rng(seed);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::uint64_t s = 0; s < samples; ++s) {
      const std::size_t u = smin + rng.below(n - 2 * smin + 1);
      for (std::size_t k = 0; k < u; ++k) std::swap(perm[k], perm[k + rng.below(n - k)]);
      VertexSet U(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(u));
      std::sort(U.begin(), U.end());
      eval(U);
    }
  }
  return r;
}

std::vector<Finding> enumeration_bounds_check(const Graph& g, double epsilon, std::uint64_t seed) {
  const std::size_t n = g.n();
  if (n < 2) throw PreconditionError("enumeration bounds need n >= 2");
  const double nn = double(n);
  const double p = double(g.m()) / (nn * (nn - 1) / 2.0);
  if (!(epsilon > 0)) throw PreconditionError("epsilon must be positive");
  if (epsilon >= p) throw PreconditionError("epsilon must be smaller than the density p");
  const SuperRegularity sr = super_regularity(g, p, epsilon, seed);
  const bool hyp = sr.holds();
  std::vector<Finding> out;

  auto pair_of = [&](const std::string& base, double logcount, double loglo, double loghi, Method m,
                     const std::string& count_str) {
    for (int side = 0; side < 2; ++side) {
      const bool lower = side == 0;
      Finding f;
      f.id = base + (lower ? ".lower" : ".upper");
      f.relation = lower ? Relation::ge : Relation::le;
      f.lhs = logcount;
      f.rhs = lower ? loglo : loghi;
      f.slack = signed_slack(f.relation, f.lhs, f.rhs);
      f.method = m;
      const bool inside = within_tolerance(f.relation, f.lhs, f.rhs);
      if (!hyp) {
        f.verdict = Verdict::hypothesis_not_met;
        f.detail = "graph is not super (p, epsilon)-regular";
      } else if (inside) {
        f.verdict = Verdict::pass;
        f.detail = "log count inside the bound";
      } else {
        f.verdict = Verdict::out_of_regime;
        f.detail = "outside the bound at this n; the statement is for large n";
      }
      f.extra["count"] = count_str;
      f.extra["inside"] = inside;
      f.extra["p"] = num12(p);
      f.extra["epsilon"] = num12(epsilon);
      f.extra["super_regular_degrees"] = sr.degrees_ok;
      f.extra["super_regular_pairs"] = sr.pairs_ok;
      f.extra["pair_check_exhaustive"] = sr.exhaustive;
      f.extra["worst_pair_deviation"] = num12(sr.worst_pair_deviation);
      if (!sr.exhaustive) f.seed = seed;
      out.push_back(std::move(f));
    }
  };
  const double lo = std::log(p - 2 * epsilon), hi = std::log(p + 2 * epsilon);
  const double lo_safe = p - 2 * epsilon > 0 ? lo : -INFINITY;

  if (n <= 500) {
    const BigInt t = count_spanning_trees(g);
    const double base = (nn - 2) * std::log(nn);
    pair_of("enumeration.spanning_trees", log_big(t), (nn - 1) * lo_safe + base, (nn - 1) * hi + base, Method::oracle,
            t.str());
  } else {
    out.push_back(note("enumeration.spanning_trees", 0, 0, Verdict::inconclusive, Method::oracle, "n above 500"));
  }
  if (n % 2 == 1) {
    out.push_back(note("enumeration.perfect_matchings", 0, 0, Verdict::hypothesis_not_met, Method::oracle, "n odd"));
  } else if (n > 16) {
    out.push_back(note("enumeration.perfect_matchings", 0, 0, Verdict::inconclusive, Method::oracle, "n above 16"));
  } else {
    const OracleResult r = matching(g, MatchingMode::count_perfect);
    const double nu = nn / 2;
    const double base = log_factorial(nn) - log_factorial(nu) - nu * std::log(2.0);
    pair_of("enumeration.perfect_matchings", r.value > 0 ? std::log(double(r.value)) : -INFINITY, nu * lo_safe + base,
            nu * hi + base, Method::oracle, std::to_string(r.value));
  }
  if (n > 16 || n < 3) {
    out.push_back(note("enumeration.hamilton_cycles", 0, 0, Verdict::inconclusive, Method::oracle, "needs 3 <= n <= 16"));
  } else {
    const OracleResult r = hamilton_search(g, kDefaultNodeBudget, true);
    const double base = log_factorial(nn);
    pair_of("enumeration.hamilton_cycles", r.value > 0 ? std::log(double(r.value)) : -INFINITY, nn * lo_safe + base,
            nn * hi + base, Method::oracle, std::to_string(r.value));
  }
  return out;
}

// ---------------------------------------------------------------------------

nlohmann::json to_json(const McEstimate& e, bool with_samples) {
  nlohmann::json j;
  j["statistic"] = e.statistic;
  j["trials"] = e.trials;
  j["mean"] = num12(e.mean);
  j["stddev"] = num12(e.stddev);
  j["stderr"] = num12(e.std_error);
  j["master_seed"] = e.master_seed;
  j["seed_rule"] = e.seed_rule;
  if (with_samples) {
    nlohmann::json a = nlohmann::json::array();
    for (double x : e.samples) a.push_back(num12(x));
    j["samples"] = a;
  }
  return j;
}

nlohmann::json to_json(const PhaseCurve& c, bool with_samples) {
  nlohmann::json j;
  j["observable"] = c.observable;
  j["parameter"] = c.parameter;
  j["notes"] = c.notes;
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : c.points) {
    nlohmann::json q;
    q["x"] = num12(p.x);
    q["mean"] = num12(p.estimate.mean);
    q["stderr"] = num12(p.estimate.std_error);
    q["trials"] = p.estimate.trials;
    q["seed"] = p.seed;
    if (p.prediction) q["prediction"] = num12(*p.prediction);
    if (p.secondary) q["secondary"] = to_json(*p.secondary, with_samples);
    if (with_samples) q["estimate"] = to_json(p.estimate, true);
    pts.push_back(q);
  }
  j["points"] = pts;
  j["seed_rule"] = kSeedRule;
  return j;
}

nlohmann::json to_json(const WindowEstimate& w) {
  nlohmann::json j = to_json(w.curve);
  j["epsilon"] = num12(w.epsilon);
  j["p_low"] = w.p_low ? num12(*w.p_low) : nlohmann::json(nullptr);
  j["p_high"] = w.p_high ? num12(*w.p_high) : nlohmann::json(nullptr);
  j["ratio"] = w.ratio ? num12(*w.ratio) : nlohmann::json(nullptr);
  j["diagnostic"] = w.diagnostic;
  return j;
}

nlohmann::json to_json(const MstResult& r) {
  nlohmann::json j = to_json(r.estimate);
  j["prediction"] = num12(r.prediction);
  return j;
}

}  // namespace pseudograph
