#include <doctest.h>

#include <cmath>

#include "brute.hpp"
#include "pseudograph/audits.hpp"
#include "pseudograph/constructions.hpp"
#include "pseudograph/oracles.hpp"

using namespace pseudograph;

TEST_CASE("exact alpha") {
  CHECK(exact_alpha(cycle_graph(5)).value == 2);
  CHECK(exact_alpha(paley(25)).value == 5);
  CHECK(exact_alpha(complete_bipartite(3, 3)).value == 3);
  const auto r = exact_alpha(petersen_graph());
  CHECK(r.known);
  CHECK(r.value == 4);
  CHECK(is_independent_set(petersen_graph(), r.vertices));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = gnp(13, 0.3, seed);
    CHECK(exact_alpha(g).value == brute::alpha(g));
  }
  // loops exclude a vertex
  CHECK(exact_alpha(Graph::from_edge_list(2, {{0, 0}})).value == 1);
}

TEST_CASE("exact chi") {
  CHECK(exact_chi(cycle_graph(5)).value == 3);
  CHECK(exact_chi(complete_graph(4)).value == 4);
  const auto r = exact_chi(paley(25));
  CHECK(r.value == 5);
  CHECK(is_proper_coloring(paley(25), r.labels));
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Graph g = gnp(10, 0.45, seed);
    CHECK(exact_chi(g).value == brute::chi(g));
  }
  CHECK_THROWS_AS(exact_chi(pg_polarity(2, 2)), PreconditionError);
}

TEST_CASE("exact max cut") {
  CHECK(exact_maxcut(complete_graph(4)).value == 4);
  CHECK(exact_maxcut(cycle_graph(5)).value == 4);
  CHECK(exact_maxcut(complete_bipartite(3, 3)).value == 9);
  const Graph g = gnp(12, 0.4, 3);
  const auto r = exact_maxcut(g);
  CHECK(r.value == brute::maxcut(g));
  CHECK(static_cast<std::int64_t>(cut_value(g, r.labels)) == r.value);
  CHECK_THROWS(exact_maxcut(complete_graph(25)));
}

TEST_CASE("hamilton search") {
  const auto c = hamilton_search(cycle_graph(5), kDefaultNodeBudget, true);
  CHECK(c.value == 1);
  const auto p = hamilton_search(petersen_graph());
  CHECK(p.known);
  CHECK(p.value == 0);
  CHECK(hamilton_search(complete_graph(5), kDefaultNodeBudget, true).value == 12);
  const auto h = hamilton_search(paley(13));
  CHECK(h.value == 1);
  CHECK(is_hamilton_cycle(paley(13), h.vertices));
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Graph g = gnp(8, 0.5, seed);
    CHECK(hamilton_search(g, kDefaultNodeBudget, true).value == brute::hamilton_cycles(g));
  }
  const auto u = hamilton_search(paley(61), 3, false);
  CHECK_FALSE(u.known);
}

TEST_CASE("matchings") {
  CHECK(matching(cycle_graph(6), MatchingMode::count_perfect).value == 2);
  CHECK(matching(cycle_graph(5), MatchingMode::exists_perfect).value == 0);
  CHECK(matching(complete_graph(4), MatchingMode::count_perfect).value == 3);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Graph g = gnp(10, 0.4, seed);
    CHECK(matching(g, MatchingMode::count_perfect).value == brute::perfect_matchings(g));
  }
  // randomized existence agrees with the blossom witness
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const std::size_t n = 2 * (1 + seed % 15);
    const Graph g = gnp(n, 1.5 / double(n) + 0.02 * double(seed % 5), seed);
    const auto r = matching(g, MatchingMode::exists_perfect, seed);
    const bool perfect = maximum_matching(g).size() * 2 == n;
    CHECK(r.value == (perfect ? 1 : 0));
    if (perfect) CHECK(is_perfect_matching(g, r.edges));
  }
}

TEST_CASE("subgraph copies") {
  CHECK(count_subgraph_copies(complete_graph(4), complete_graph(3)) == 24);
  CHECK(count_subgraph_copies(paley(13), complete_graph(3)) == 156);
  CHECK(count_subgraph_copies(alon_triangle_free(4), complete_graph(3)) == 0);
  CHECK(automorphism_count(cycle_graph(5)) == 10);
  CHECK(automorphism_count(complete_bipartite(3, 3)) == 72);
  CHECK_THROWS(automorphism_count(petersen_graph()));
  const Graph g = gnp(9, 0.5, 2);
  for (const char* name : {"K3", "C4", "P4", "S3"}) {
    const Graph h = named_pattern(name);
    CHECK(count_subgraph_copies(g, h) == brute::labeled_copies(g, h));
  }
}

TEST_CASE("spanning trees") {
  CHECK(count_spanning_trees(complete_graph(4)) == 16);
  CHECK(count_spanning_trees(cycle_graph(5)) == 5);
  CHECK(count_spanning_trees(petersen_graph()) == 2000);
  CHECK(brute::spanning_trees(petersen_graph()) == 2000);
  CHECK(count_spanning_trees(disjoint_union(cycle_graph(3), cycle_graph(3))) == 0);
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const Graph g = gnp(8, 0.5, seed);
    CHECK(count_spanning_trees(g) == brute::spanning_trees(g));
  }
  CHECK(count_spanning_trees(complete_graph(30)) == boost::multiprecision::pow(BigInt(30), 28));
}

TEST_CASE("triangle factors") {
  const auto a = triangle_factor_exact(complete_graph(6));
  CHECK(a.value == 1);
  CHECK(is_triangle_factor(complete_graph(6), a.vertices));
  CHECK(triangle_factor_exact(cycle_graph(9)).value == 0);
  const Graph k333 = complete_multipartite({3, 3, 3});
  CHECK(triangle_factor_exact(k333).value == 1);
}

TEST_CASE("turan numbers") {
  CHECK(turan_exact(complete_graph(4), 3).value == 4);
  CHECK(turan_exact(complete_graph(5), 5).value == 9);
  CHECK(turan_exact(complete_graph(5), 3).value == 6);
  CHECK(turan_exact(complete_bipartite(3, 4), 3).value == 12);
  const auto p = turan_exact(paley(13), 3);
  CHECK(p.lower >= 20);
  CHECK(p.upper <= 39);
}

TEST_CASE("clique, biclique and cycle searches") {
  CHECK(contains_clique(paley(13), 3));
  CHECK_FALSE(contains_clique(paley(13), 4));
  CHECK(exact_clique(paley(25)).value == 5);
  CHECK(contains_biclique(complete_bipartite(3, 4), 3, 4));
  CHECK_FALSE(contains_biclique(petersen_graph(), 2, 2));
  CHECK(contains_cycle(petersen_graph(), 5));
  CHECK_FALSE(contains_cycle(petersen_graph(), 4));
  CHECK(contains_cycle(petersen_graph(), 8));
  CHECK(is_triangle_free(complete_bipartite(4, 4)));
}

TEST_CASE("greedy procedures") {
  VertexSet all(7);
  for (Vertex v = 0; v < 7; ++v) all[v] = v;
  CHECK(greedy_independent(empty_graph(7), all).size() == 7);
  VertexSet five{0, 1, 2, 3, 4};
  CHECK(greedy_independent(cycle_graph(5), five).size() == 2);

  const Graph p101 = paley(101);
  VertexSet v101(101);
  for (Vertex v = 0; v < 101; ++v) v101[v] = v;
  const auto s = greedy_independent(p101, v101);
  CHECK(is_independent_set(p101, s));
  const double lam = (std::sqrt(101.0) + 1) / 2;
  const double bound = 101.0 / (2 * (50 - lam)) * std::log((50 - lam) / (lam + 1) + 1);
  CHECK(double(s.size()) >= bound);

  const auto c = greedy_coloring(paley(25), 12, 3);
  CHECK(is_proper_coloring(paley(25), c.color));
  CHECK(double(c.colors) <= 6.0 * 9 / std::log(4.0));
  CHECK(greedy_coloring(complete_graph(6), 5, 1).colors == 6);
  CHECK(greedy_coloring(empty_graph(4), 0, 0).colors == 1);

  const auto t = greedy_turan_partition(complete_graph(4), 3);
  CHECK(t.parts == 2);
  CHECK(t.cross_edges == 4);
  const auto b = greedy_turan_partition(complete_bipartite(3, 3), 3);
  CHECK(b.cross_edges == 9);
  const auto k6 = greedy_turan_partition(complete_graph(6), 4);
  CHECK(k6.cross_edges == 12);
}
