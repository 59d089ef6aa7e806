#include <doctest.h>

#include <cmath>

#include "brute.hpp"
#include "pseudograph/constructions.hpp"
#include "pseudograph/graph_io.hpp"
#include "pseudograph/oracles.hpp"
#include "pseudograph/spectral.hpp"

using namespace pseudograph;

namespace {

double lambda_of(const Graph& g) { return full_spectrum(g).lambda(); }

// Every pair's codegree equals eta (adjacent) or mu (non-adjacent).
bool codegrees_match(const Graph& g, std::int64_t eta, std::int64_t mu) {
  const auto a = brute::adjacency(g);
  for (std::size_t x = 0; x < g.n(); ++x)
    for (std::size_t y = x + 1; y < g.n(); ++y) {
      std::int64_t c = 0;
      for (std::size_t z = 0; z < g.n(); ++z) c += a[x][z] * a[y][z];
      if (c != (a[x][y] ? eta : mu)) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("gnp") {
  CHECK(gnp(20, 0.0, 3).m() == 0);
  CHECK(gnp(20, 1.0, 3) == complete_graph(20));
  const Graph g = gnp(1000, 0.5, 42);
  const double sigma = std::sqrt(499500.0 * 0.25);
  CHECK(std::abs(double(g.m()) - 249750.0) <= 4 * sigma);
  CHECK(gnp(50, 0.3, 9) == gnp(50, 0.3, 9));
}

TEST_CASE("random_regular") {
  CHECK(random_regular(4, 3, 1) == complete_graph(4));
  const Graph c = random_regular(6, 2, 11);
  CHECK(c.is_regular());
  CHECK(c.degree(0) == 2);
  CHECK(c.loop_count() == 0);
  CHECK(random_regular(30, 3, 5) == random_regular(30, 3, 5));
  CHECK_THROWS_AS(random_regular(5, 3, 1), PreconditionError);  // odd n*d
}

TEST_CASE("random 4-regular graphs are near-Ramanujan") {
  int good = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_regular(500, 4, seed);
    if (extremal_lambda(g).lambda <= 2 * std::sqrt(3.0) + 0.35) ++good;
  }
  CHECK(good >= 18);
}

TEST_CASE("paley") {
  CHECK(srg_detect(paley(5)) == SrgParams{5, 2, 0, 1});
  CHECK(girth(paley(5)) == 5);
  const Graph p13 = paley(13);
  CHECK(srg_detect(p13) == SrgParams{13, 6, 2, 3});
  CHECK(codegrees_match(p13, 2, 3));
  CHECK(lambda_of(p13) == doctest::Approx((std::sqrt(13.0) + 1) / 2).epsilon(1e-10));
  const Graph p25 = paley(25);
  CHECK(srg_detect(p25) == SrgParams{25, 12, 5, 6});
  // the prime subfield (indices 0..4) is a clique
  for (Vertex a = 0; a < 5; ++a)
    for (Vertex b = a + 1; b < 5; ++b) CHECK(p25.has_edge(a, b));
  CHECK_THROWS_AS(paley(7), PreconditionError);
  CHECK_THROWS_AS(paley(15), PreconditionError);
}

TEST_CASE("inner product graphs") {
  const Graph h5 = inner_product_graph(5);
  CHECK(h5.n() == 15);
  CHECK(h5.degree(0) == 6);
  CHECK(codegrees_match(h5, 1, 3));
  CHECK(lambda_of(h5) == doctest::Approx(3.0).epsilon(1e-10));
  const Graph h7 = inner_product_graph(7);
  CHECK(h7.n() == 63);
  CHECK(h7.is_regular());
  CHECK(h7.degree(0) == 30);
  CHECK(lambda_of(h7) == doctest::Approx(5.0).epsilon(1e-10));
}

TEST_CASE("dgt graphs") {
  const Graph g = dgt_graph(5, 3);
  CHECK(g.n() == 25);
  CHECK(g.degree(0) == 12);
  const auto ev = brute::eigenvalues(g);
  for (std::size_t i = 0; i + 1 < ev.size(); ++i) CHECK((std::abs(ev[i] - 2) < 1e-8 || std::abs(ev[i] + 3) < 1e-8));
  CHECK(ev.back() == doctest::Approx(12.0));
  CHECK(dgt_graph(3, 4) == complete_graph(9));
  const Graph g4 = dgt_graph(4, 2);
  CHECK(g4.n() == 16);
  CHECK(g4.degree(0) == 6);
  for (double x : brute::eigenvalues(g4))
    CHECK((std::abs(x - 6) < 1e-8 || std::abs(x - 2) < 1e-8 || std::abs(x + 2) < 1e-8));
  // an explicit direction override changes the edge set but not the spectrum
  const Graph alt = dgt_graph(5, 3, std::vector<std::uint32_t>{5, 2, 4});
  CHECK(alt.degree(0) == 12);
  CHECK(full_spectrum(alt).grouped().size() == 3);
}

TEST_CASE("projective polarity graphs") {
  const Graph g = pg_polarity(3, 2);
  CHECK(g.n() == 13);
  CHECK(g.loop_count() == 4);
  CHECK(g.is_regular());
  CHECK(g.degree(0) == 4);
  CHECK_FALSE(contains_cycle(g, 4));
  const auto s = full_spectrum(g);
  for (std::size_t i = 1; i < s.eigenvalues.size(); ++i) CHECK(std::abs(std::abs(s.eigenvalues[i]) - std::sqrt(3.0)) < 1e-8);
  // Fano polarity: A^2 = J + 2I
  const Graph f = pg_polarity(2, 2);
  CHECK(f.n() == 7);
  const auto a = brute::adjacency(f);
  for (std::size_t x = 0; x < 7; ++x)
    for (std::size_t y = 0; y < 7; ++y) {
      int s2 = 0;
      for (std::size_t z = 0; z < 7; ++z) s2 += a[x][z] * a[z][y];
      CHECK(s2 == 1 + (x == y ? 2 : 0));
    }
}

TEST_CASE("abelian Cayley graphs and their character spectra") {
  const auto c = cayley_abelian({7}, {{1}, {6}});
  CHECK(c.graph == cycle_graph(7));
  for (std::size_t j = 0; j < 7; ++j) {
    bool found = false;
    for (double x : c.predicted) found = found || std::abs(x - 2 * std::cos(2 * M_PI * double(j) / 7)) < 1e-12;
    CHECK(found);
  }
  std::vector<std::vector<std::uint64_t>> qr;
  for (std::uint64_t s : {1, 3, 4, 9, 10, 12}) qr.push_back({s});
  CHECK(cayley_abelian({13}, qr).graph == paley(13));
  const auto cube = cayley_abelian({2, 2, 2, 2}, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(cube.graph.degree(0) == 4);
  CHECK(girth(cube.graph) == 4);
  CHECK(cube.predicted.front() == doctest::Approx(4));
  CHECK(cube.predicted.back() == doctest::Approx(-4));
  CHECK_THROWS_AS(cayley_abelian({5}, {{1}}), PreconditionError);  // not symmetric
}

TEST_CASE("power residue Cayley graphs") {
  CHECK(power_residue_cayley(13, 2) == paley(13));
  CHECK(power_residue_cayley(11, 1) == complete_graph(11));
  const Graph g = power_residue_cayley(37, 3);
  CHECK(g.n() == 37);
  CHECK(g.degree(0) == 12);
  CHECK(lambda_of(g) <= 2 * std::sqrt(37.0) + 1e-9);
}

TEST_CASE("alon triangle-free family") {
  const auto gens = alon_generators(4, 1);
  CHECK(gens.size() == 56);
  const Graph g = alon_triangle_free(4);
  CHECK(g.n() == 4096);
  CHECK(g.degree(0) == 56);
  CHECK(is_triangle_free(g));
  CHECK(alon_general(4, 1) == g);
  CHECK_FALSE(z2_has_short_odd_cycle(12, gens, 3));
  const auto gens2 = alon_generators(4, 2);
  CHECK(gens2.size() == 56);
  CHECK_FALSE(z2_has_short_odd_cycle(20, gens2, 5));
  CHECK_THROWS_AS(alon_general(4, 2), CapExceeded);
  CHECK_THROWS_AS(alon_triangle_free(3), PreconditionError);
}

TEST_CASE("lps") {
  const auto vs = lps_vectors(17);
  CHECK(vs.size() == 18);
  for (const auto& v : vs) CHECK(v[0] * v[0] + v[1] * v[1] + v[2] * v[2] + v[3] * v[3] == 17);
  const Graph g = lps(17, 13);
  CHECK(g.n() == 1092);
  CHECK(g.is_regular());
  CHECK(g.degree(0) == 18);
  CHECK(is_connected(g));
  CHECK(lps(17, 13) == g);
}

TEST_CASE("norm graphs") {
  const Graph g = norm_graph(3, 3);
  CHECK(g.n() == 18);
  CHECK(g.degree(0) == 8);
  CHECK(lambda_of(g) == doctest::Approx(3.0).epsilon(1e-10));
  CHECK_FALSE(contains_biclique(g, 3, 3));
  const Graph h = norm_graph(5, 3);
  CHECK(h.n() == 100);
  CHECK(h.degree(0) == 24);
  CHECK(lambda_of(h) == doctest::Approx(5.0).epsilon(1e-10));
}

TEST_CASE("build_family is deterministic and attaches claims") {
  for (const auto& [fam, params] : std::vector<std::pair<std::string, nlohmann::json>>{
           {"paley", {{"q", 13}}},
           {"inner_product", {{"k", 5}}},
           {"dgt", {{"q", 5}, {"k", 3}}},
           {"pg_polarity", {{"q", 3}}},
           {"norm", {{"p", 3}, {"t", 3}}},
           {"random_regular", {{"n", 10}, {"d", 3}, {"seed", 4}}}}) {
    const auto a = build_family(fam, params), b = build_family(fam, params);
    CHECK(to_edge_list(a.graph) == to_edge_list(b.graph));
    REQUIRE(a.desc.degree.has_value());
    CHECK(a.graph.is_regular());
    CHECK(a.graph.degree(0) == *a.desc.degree);
    if (a.desc.srg) {
      const auto s = *a.desc.srg;
      CHECK(s.feasible());
      CHECK(codegrees_match(a.graph, s.eta, s.mu));
    }
  }
  CHECK_THROWS_AS(build_family("nope", {}), PreconditionError);
  CHECK(family_names().size() == 20);
}
