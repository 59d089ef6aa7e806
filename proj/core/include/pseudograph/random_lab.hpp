#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pseudograph/audits.hpp"
#include "pseudograph/graph.hpp"
#include "pseudograph/rng.hpp"

namespace pseudograph {

struct McEstimate {
  std::string statistic;
  std::uint64_t trials = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation (n - 1)
  double std_error = 0.0;  // stddev / sqrt(trials)
  std::uint64_t master_seed = 0;
  std::string seed_rule = kSeedRule;
  std::vector<double> samples;  // per trial, in trial order

  static McEstimate from_samples(std::string statistic, std::vector<double> samples, std::uint64_t master_seed);
  /// Fraction of samples satisfying `pred`.
  template <class Pred>
  double frequency(Pred pred) const {
    if (samples.empty()) return 0.0;
    std::size_t k = 0;
    for (double x : samples) k += pred(x) ? 1 : 0;
    return double(k) / double(samples.size());
  }
};

struct PhasePoint {
  double x = 0.0;
  McEstimate estimate;
  std::optional<McEstimate> secondary;  // e.g. second-largest component size
  std::optional<double> prediction;
  std::uint64_t seed = 0;               // seed of this grid point
};

struct PhaseCurve {
  std::string observable;
  std::string parameter;  // "alpha", "p" or "c"
  std::vector<PhasePoint> points;
  std::vector<std::string> notes;
};

/// Keeps each edge (and loop) independently with probability p.
Graph sample_gp(const Graph& g, double p, std::uint64_t seed);

/// Root in (0,1) of x e^{-x} = alpha e^{-alpha}, alpha > 1.
double dual_branching_root(double alpha);

/// Sizes of the components, descending, by union-find.
std::vector<std::size_t> component_sizes(const Graph& g);

/// Seed of trial `trial` at grid point `point`.
std::uint64_t trial_seed(std::uint64_t master, std::size_t point, std::size_t trial);

PhaseCurve giant_component_experiment(const Graph& g, const std::vector<double>& alpha_grid, std::size_t trials,
                                      std::uint64_t seed);

struct WindowEstimate {
  PhaseCurve curve;
  double epsilon = 0.25;
  std::optional<double> p_low, p_high;  // frequency crosses epsilon, 1 - epsilon
  std::optional<double> ratio;          // p_high / p_low
  std::string diagnostic;
};
WindowEstimate connectivity_window_experiment(const Graph& g, const std::vector<double>& p_grid, std::size_t trials,
                                              std::uint64_t seed, double epsilon = 0.25);

/// Minimum spanning tree weight under independent uniform(0,1) edge weights.
double mst_trial(const Graph& g, std::uint64_t seed);
/// Per-edge weights in canonical edge order, as used by mst_trial.
std::vector<double> random_edge_weights(const Graph& g, std::uint64_t seed);

struct MstResult {
  McEstimate estimate;
  double prediction = 0.0;  // (n/d) zeta(3)
};
MstResult mst_experiment(const Graph& g, std::size_t trials, std::uint64_t seed);

inline constexpr double kZeta3 = 1.2020569031595942;

PhaseCurve degree_threshold_experiment(const Graph& g, std::size_t trials, std::uint64_t seed,
                                       const std::vector<double>& c_grid = {-4, -3, -2, -1, 0, 1, 2, 3, 4},
                                       bool confirm_hamilton = false);

/// Super (p, epsilon)-regularity: degree window and pair densities of
/// disjoint sets of size >= epsilon n. Exhaustive up to n = 20.
struct SuperRegularity {
  bool degrees_ok = false;
  bool pairs_ok = false;
  bool exhaustive = false;
  double worst_pair_deviation = 0.0;
  VertexSet witness_U, witness_W;
  bool holds() const { return degrees_ok && pairs_ok; }
};
SuperRegularity super_regularity(const Graph& g, double p, double epsilon, std::uint64_t seed = 1,
                                 std::uint64_t samples = 20000);

/// Log-scale sandwich checks for perfect matchings, Hamilton cycles and
/// spanning trees. Throws PreconditionError when epsilon >= p.
std::vector<Finding> enumeration_bounds_check(const Graph& g, double epsilon, std::uint64_t seed = 1);

nlohmann::json to_json(const McEstimate& e, bool with_samples = false);
nlohmann::json to_json(const PhaseCurve& c, bool with_samples = false);
nlohmann::json to_json(const WindowEstimate& w);
nlohmann::json to_json(const MstResult& r);

}  // namespace pseudograph
