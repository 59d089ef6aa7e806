#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pseudograph/graph.hpp"
#include "pseudograph/spectral.hpp"

namespace pseudograph {

/// Outcome of an exact search. `known == false` means the node budget ran
/// out; the value fields are then only bounds.
struct OracleResult {
  std::string oracle;
  bool known = false;
  std::int64_t value = 0;
  std::int64_t lower = 0, upper = 0;  // equal to value when known
  VertexSet vertices;                  // independent set, cycle order, triangle list...
  std::vector<std::uint32_t> labels;   // coloring or cut side per vertex
  std::vector<Edge> edges;             // matching or kept edge set
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  bool randomized = false;
  std::string note;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

/// Maximum independent set; vertices carrying a loop are never independent.
OracleResult exact_alpha(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);
/// Maximum clique on distinct vertices (loops ignored).
OracleResult exact_clique(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);
/// Chromatic number; graphs with loops are rejected.
OracleResult exact_chi(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);
/// Maximum cut by exhaustive Gray-code scan, n <= 24.
OracleResult exact_maxcut(const Graph& g);
/// Hamilton cycle search. With `count` (n <= 16) the value is the number
/// of Hamilton cycles; otherwise 1 (found, cycle in `vertices`) or 0.
OracleResult hamilton_search(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget, bool count = false);

enum class MatchingMode { exists_perfect, count_perfect };
/// Existence: randomized Tutte-matrix rank plus a deterministic blossom
/// matching as witness. Count: exact, n <= 32.
OracleResult matching(const Graph& g, MatchingMode mode, std::uint64_t seed = 0x7e77e);
/// Maximum matching by Edmonds' blossom algorithm (loops ignored).
std::vector<Edge> maximum_matching(const Graph& g);
/// Rank of the Tutte matrix with random entries modulo 2^61 - 1.
std::size_t tutte_rank(const Graph& g, std::uint64_t seed);

/// Labeled copies of h in g: injective maps sending edges of h to edges of
/// g; `induced` also sends non-edges to non-edges.
BigInt count_subgraph_copies(const Graph& g, const Graph& h, bool induced = false);
/// Automorphisms of a small graph by brute force.
std::uint64_t automorphism_count(const Graph& h);

/// Kirchhoff count via fraction-free elimination; 0 when disconnected.
BigInt count_spanning_trees(const Graph& g);

OracleResult triangle_factor_exact(const Graph& g, std::uint64_t node_budget = kDefaultNodeBudget);

/// Largest K_t-free subgraph edge count. Exhaustive for m <= 20, otherwise
/// branch and bound over deleted edges; `lower`/`upper` bracket the value.
OracleResult turan_exact(const Graph& g, std::size_t t, std::uint64_t node_budget = kDefaultNodeBudget);

bool contains_clique(const Graph& g, std::size_t t);
/// K_{a,b} on distinct vertices.
bool contains_biclique(const Graph& g, std::size_t a, std::size_t b);
/// Some cycle of length exactly `len` (3 <= len <= 8) on distinct vertices.
bool contains_cycle(const Graph& g, std::size_t len);
/// Triangle test by neighbor-set intersection.
bool is_triangle_free(const Graph& g);

/// Greedy independent set inside U: repeatedly take a minimum-degree vertex
/// of the remaining induced subgraph (least index on ties), drop it and its
/// neighbors.
VertexSet greedy_independent(const Graph& g, const VertexSet& U);

struct GreedyColoring {
  std::vector<std::uint32_t> color;
  std::size_t colors = 0;
  std::size_t phase1_classes = 0;  // independent sets extracted while |U| is large
  std::size_t phase2_colors = 0;   // colors used on the remainder
  double threshold = 0.0;          // n / ln((d-lambda)/(lambda+1) + 1)
};

GreedyColoring greedy_coloring(const Graph& g, double d, double lambda);

struct TuranPartition {
  std::vector<std::uint32_t> part;
  std::size_t parts = 0;
  std::size_t cross_edges = 0;
  std::size_t moves = 0;
};

/// Local search into t-1 parts until every vertex has at most deg/(t-1)
/// neighbors in its own part.
TuranPartition greedy_turan_partition(const Graph& g, std::size_t t);

// Witness checks.
bool is_independent_set(const Graph& g, const VertexSet& S);
bool is_proper_coloring(const Graph& g, const std::vector<std::uint32_t>& color);
std::size_t cut_value(const Graph& g, const std::vector<std::uint32_t>& side);
bool is_hamilton_cycle(const Graph& g, const VertexSet& order);
bool is_perfect_matching(const Graph& g, const std::vector<Edge>& m);
bool is_triangle_factor(const Graph& g, const VertexSet& triples);

}  // namespace pseudograph
