#include <doctest.h>

#include <cmath>

#include "brute.hpp"
#include "pseudograph/constructions.hpp"
#include "pseudograph/random_lab.hpp"

using namespace pseudograph;

TEST_CASE("sample_gp") {
  const Graph g = paley(13);
  CHECK(sample_gp(g, 1.0, 5) == g);
  CHECK(sample_gp(g, 0.0, 5).m() == 0);
  CHECK(sample_gp(g, 0.0, 5).n() == 13);
  CHECK(sample_gp(g, 0.3, 9) == sample_gp(g, 0.3, 9));
  const Graph k4 = complete_graph(4);
  double sum = 0;
  const int N = 10000;
  for (int s = 0; s < N; ++s) sum += double(sample_gp(k4, 0.5, split_seed(1, s)).m());
  const double sigma = std::sqrt(6 * 0.25 / N);
  CHECK(std::abs(sum / N - 3.0) <= 3 * sigma);
  CHECK_THROWS_AS(sample_gp(g, 1.5, 1), PreconditionError);
  // loops are kept too
  CHECK(sample_gp(pg_polarity(3, 2), 1.0, 1).loop_count() == 4);
}

TEST_CASE("dual branching root") {
  for (double a : {1.0001, 1.5, 2.0, 3.0, 5.0, 10.0}) {
    const double r = dual_branching_root(a);
    CHECK(r > 0);
    CHECK(r < 1);
    CHECK(std::abs(r * std::exp(-r) - a * std::exp(-a)) <= 1e-12);
  }
  CHECK(dual_branching_root(1.0001) > 0.99);
  CHECK(dual_branching_root(2.0) == doctest::Approx(0.4064).epsilon(1e-3));
  CHECK_THROWS_AS(dual_branching_root(1.0), PreconditionError);
  CHECK_THROWS_AS(dual_branching_root(0.5), PreconditionError);
}

TEST_CASE("seeds and estimates") {
  CHECK(trial_seed(1, 0, 0) != trial_seed(1, 0, 1));
  CHECK(trial_seed(1, 0, 1) != trial_seed(1, 1, 0));
  CHECK(trial_seed(9, 3, 4) == trial_seed(9, 3, 4));
  const auto e = McEstimate::from_samples("x", {1, 2, 3, 4}, 5);
  CHECK(e.mean == doctest::Approx(2.5));
  CHECK(e.stddev == doctest::Approx(std::sqrt(5.0 / 3)));
  CHECK(e.std_error == doctest::Approx(e.stddev / 2));
  CHECK(e.seed_rule == kSeedRule);
  CHECK(e.frequency([](double x) { return x > 2; }) == doctest::Approx(0.5));
}

TEST_CASE("component sizes") {
  const auto s = component_sizes(disjoint_union(path_graph(3), empty_graph(2)));
  CHECK(s == std::vector<std::size_t>{3, 1, 1});
}

TEST_CASE("giant component on a random 3-regular graph") {
  const Graph g = random_regular(400, 6, 2);
  const auto c = giant_component_experiment(g, {0.5, 3.0}, 40, 3);
  REQUIRE(c.points.size() == 2);
  CHECK(c.points[0].estimate.mean < 0.1);
  CHECK(c.points[1].estimate.mean > 0.8);
  REQUIRE(c.points[1].prediction.has_value());
  CHECK(*c.points[1].prediction == doctest::Approx(1 - dual_branching_root(3.0) / 3.0));
  CHECK(c.points[1].secondary.has_value());
  const auto again = giant_component_experiment(g, {0.5, 3.0}, 40, 3);
  CHECK(to_json(again).dump() == to_json(c).dump());
  CHECK_THROWS_AS(giant_component_experiment(g, {2.0, 1.0}, 5, 1), PreconditionError);
  // p = 1 reproduces the deterministic value
  const auto full = giant_component_experiment(g, {6.0}, 3, 1);
  CHECK(full.points[0].estimate.mean == 1.0);
}

TEST_CASE("connectivity window") {
  const Graph k = complete_graph(200);
  std::vector<double> grid;
  for (int i = 1; i <= 30; ++i) grid.push_back(0.002 * i);
  const auto w = connectivity_window_experiment(k, grid, 60, 4);
  REQUIRE(w.ratio.has_value());
  CHECK(*w.ratio >= 1.0);
  CHECK(*w.ratio <= 1.5);
  CHECK(*w.p_low == doctest::Approx(std::log(200.0) / 200).epsilon(0.35));
  const auto d = connectivity_window_experiment(disjoint_union(complete_graph(5), complete_graph(5)), {0.5, 1.0}, 5, 1);
  CHECK_FALSE(d.ratio.has_value());
  CHECK(d.diagnostic.find("disconnected") != std::string::npos);
  const auto nb = connectivity_window_experiment(k, {0.5, 0.9}, 5, 1);
  CHECK_FALSE(nb.ratio.has_value());
  CHECK(nb.diagnostic.find("bracket") != std::string::npos);
}

TEST_CASE("mst trials agree with exhaustive spanning-tree minimum") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = gnp(7, 0.6, seed);
    if (!is_connected(g)) continue;
    std::vector<std::pair<std::size_t, std::size_t>> es;
    for (auto [u, v] : g.edges()) es.emplace_back(u, v);
    const auto w = random_edge_weights(g, 100 + seed);
    CHECK(mst_trial(g, 100 + seed) == doctest::Approx(brute::mst_exhaustive(g.n(), es, w)).epsilon(1e-14));
  }
  CHECK_THROWS_AS(mst_experiment(empty_graph(3), 3, 1), PreconditionError);
}

TEST_CASE("mst on tiny graphs") {
  const auto k2 = mst_experiment(complete_graph(2), 4000, 1);
  CHECK(k2.estimate.mean == doctest::Approx(0.5).epsilon(0.05));
  // K3: sum of the two smallest of three uniforms has mean 1/4 + 1/2
  const auto k3 = mst_experiment(complete_graph(3), 20000, 2);
  CHECK(std::abs(k3.estimate.mean - 0.75) <= 4 * k3.estimate.std_error);
}

TEST_CASE("degree threshold experiment") {
  const Graph g = paley(197);
  const auto c = degree_threshold_experiment(g, 60, 5);
  REQUIRE(c.points.size() == 9);
  for (std::size_t i = 1; i < c.points.size(); ++i)
    CHECK(c.points[i].estimate.mean + 2 * (c.points[i].estimate.std_error + c.points[i - 1].estimate.std_error) >=
          c.points[i - 1].estimate.mean);
  CHECK(c.points.front().estimate.mean < c.points.back().estimate.mean);
  CHECK(c.points.back().estimate.mean > 0.8);
  const auto h = degree_threshold_experiment(paley(29), 4, 1, {0.0, 4.0}, true);
  CHECK(h.points[0].secondary.has_value());
}

TEST_CASE("super-regularity and enumeration bounds") {
  const Graph k = complete_graph(8);
  const auto sr = super_regularity(k, 1.0 - 1.0 / 8, 0.2);
  CHECK(sr.exhaustive);
  CHECK(sr.degrees_ok);
  const auto fs = enumeration_bounds_check(paley(13), 0.2);
  for (const auto& f : fs) {
    CHECK(f.verdict != Verdict::fail);
    if (f.id == "enumeration.spanning_trees.lower" || f.id == "enumeration.spanning_trees.upper") {
      CHECK(f.extra["inside"] == true);
      CHECK(f.extra["count"] == "270672597");
    }
  }
  const auto c6 = enumeration_bounds_check(cycle_graph(6), 0.1);
  for (const auto& f : c6) {
    if (f.id.rfind("enumeration.perfect_matchings", 0) == 0 && f.relation != Relation::margin) {
      CHECK(f.verdict == Verdict::hypothesis_not_met);
      CHECK(f.extra["count"] == "2");
    }
  }
  CHECK_THROWS_AS(enumeration_bounds_check(cycle_graph(6), 0.5), PreconditionError);
}
