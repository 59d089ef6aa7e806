#include <doctest.h>

#include <cmath>

#include "brute.hpp"
#include "pseudograph/constructions.hpp"
#include "pseudograph/spectral.hpp"

using namespace pseudograph;

TEST_CASE("full spectrum of small graphs") {
  const auto k4 = full_spectrum(complete_graph(4));
  CHECK(k4.eigenvalues[0] == doctest::Approx(3));
  for (int i = 1; i < 4; ++i) CHECK(k4.eigenvalues[i] == doctest::Approx(-1));
  const auto c5 = full_spectrum(cycle_graph(5));
  std::vector<double> want;
  for (int j = 0; j < 5; ++j) want.push_back(2 * std::cos(2 * M_PI * j / 5));
  std::sort(want.rbegin(), want.rend());
  for (int i = 0; i < 5; ++i) CHECK(c5.eigenvalues[i] == doctest::Approx(want[i]).epsilon(1e-12));
  const auto p = full_spectrum(paley(13));
  const auto grp = p.grouped();
  REQUIRE(grp.size() == 3);
  CHECK(grp[0].first == doctest::Approx(6));
  CHECK(grp[1].first == doctest::Approx((-1 + std::sqrt(13.0)) / 2));
  CHECK(grp[1].second == 6);
  CHECK(grp[2].first == doctest::Approx((-1 - std::sqrt(13.0)) / 2));
  CHECK(grp[2].second == 6);
  CHECK(p.max_residual() < 1e-10);
}

TEST_CASE("dense spectrum agrees with an independent Jacobi solver") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Graph g = gnp(14, 0.35, seed);
    auto ours = full_spectrum(g).eigenvalues;
    std::sort(ours.begin(), ours.end());
    const auto ref = brute::eigenvalues(g);
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::abs(ours[i] - ref[i]) < 1e-9);
  }
  // loops on the diagonal
  const Graph pg = pg_polarity(2, 2);
  auto ours = full_spectrum(pg).eigenvalues;
  std::sort(ours.begin(), ours.end());
  const auto ref = brute::eigenvalues(pg);
  for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::abs(ours[i] - ref[i]) < 1e-9);
}

TEST_CASE("lambda uses absolute values after the top eigenvalue") {
  const auto s = full_spectrum(complete_bipartite(3, 3));
  CHECK(s.lambda1() == doctest::Approx(3));
  CHECK(s.lambda() == doctest::Approx(3));
  CHECK(s.lambda_min() == doctest::Approx(-3));
}

TEST_CASE("extremal_lambda matches the dense solver") {
  for (const Graph& g : {paley(61), random_regular(200, 5, 3), inner_product_graph(7), complete_bipartite(20, 20),
                         cycle_graph(30), norm_graph(5, 3)}) {
    const auto d = full_spectrum(g);
    const auto e = extremal_lambda(g);
    CHECK(e.lambda1 == doctest::Approx(d.lambda1()).epsilon(1e-8));
    CHECK(e.lambda == doctest::Approx(d.lambda()).epsilon(1e-8));
    CHECK(e.lambda_min == doctest::Approx(d.lambda_min()).epsilon(1e-8));
  }
}

TEST_CASE("regular graphs have lambda1 = d") {
  const Graph g = random_regular(300, 6, 9);
  CHECK(extremal_lambda(g).lambda1 == doctest::Approx(6.0).epsilon(1e-9));
  const auto b = extremal_lambda(hypercube(8));
  CHECK(b.lambda == doctest::Approx(8.0).epsilon(1e-8));
}

TEST_CASE("srg_spectrum") {
  const auto a = srg_spectrum({5, 2, 0, 1});
  CHECK(a.lambda2 == doctest::Approx((-1 + std::sqrt(5.0)) / 2));
  CHECK(a.lambda3 == doctest::Approx((-1 - std::sqrt(5.0)) / 2));
  CHECK(a.s2 == 2);
  CHECK(a.s3 == 2);
  CHECK(a.conference);
  const auto b = srg_spectrum({13, 6, 2, 3});
  CHECK(b.s2 == 6);
  CHECK(b.s3 == 6);
  const auto c = srg_spectrum({15, 6, 1, 3});
  CHECK(c.lambda2 == doctest::Approx(1));
  CHECK(c.lambda3 == doctest::Approx(-3));
  CHECK(c.s2 == 9);
  CHECK(c.s3 == 5);
  CHECK(6 + 9 * 1 + 5 * -3 == 0);
}

TEST_CASE("srg_detect") {
  CHECK(srg_detect(petersen_graph()) == SrgParams{10, 3, 0, 1});
  CHECK_FALSE(srg_detect(path_graph(3)).has_value());
  CHECK(srg_detect(inner_product_graph(5)) == SrgParams{15, 6, 1, 3});
  CHECK_FALSE(srg_detect(cycle_graph(6)).has_value());
}

TEST_CASE("circuit counts") {
  const Graph g = petersen_graph();
  CHECK(circuit_count(g, 2) == 30);
  CHECK(circuit_count(complete_graph(3), 3) == 6);
  CHECK(circuit_count(alon_triangle_free(4), 3) == 0);
  // trace identity against the spectrum
  const auto s = full_spectrum(paley(13));
  CHECK(double(circuit_count(paley(13), 4).convert_to<double>()) == doctest::Approx(s.power_sum(4)));
}

TEST_CASE("walk counts") {
  const auto w = walk_counts(complete_graph(4), 0, 2);
  REQUIRE(w.size() == 4);
  CHECK(w[0] == 3);
  CHECK(w[1] == 2);
}

TEST_CASE("property scores") {
  CHECK_THROWS_AS(property_scores(complete_graph(12), 1.0, 4, 2000, 1), PreconditionError);
  const auto p = property_scores(paley(13), 0.5, 4, 2000, 1);
  CHECK(p.p7_sum == doctest::Approx(39 * 1.25 + 39 * 0.25));
  const Graph two = disjoint_union(complete_graph(4), complete_graph(4));
  const auto t = property_scores(two, 0.5, 4, 2000, 1);
  CHECK(t.disc_exhaustive);
  CHECK(t.disc >= 0.1);
  // same seed, same sampled score
  const Graph big = gnp(40, 0.5, 3);
  CHECK(property_scores(big, 0.5, 4, 500, 7).disc == property_scores(big, 0.5, 4, 500, 7).disc);
}
