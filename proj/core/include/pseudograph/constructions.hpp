#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pseudograph/graph.hpp"

namespace pseudograph {

struct SrgParams {
  std::int64_t n = 0, d = 0, eta = 0, mu = 0;
  /// d(d - eta - 1) == (n - d - 1) mu and 0 <= eta, mu <= d.
  bool feasible() const noexcept;
  bool operator==(const SrgParams&) const = default;
};

/// A subgraph the construction promises to avoid.
struct ForbiddenClaim {
  enum class Kind { clique, cycle, biclique, odd_cycles_upto };
  Kind kind;
  std::size_t a = 0, b = 0;  // clique K_a, cycle C_a, biclique K_{a,b}, odd cycles of length <= a
  std::string name() const;
};

/// Spectral relation between lambda = max_{i>=2} |lambda_i| and `value`.
struct LambdaClaim {
  enum class Relation { eq, le };
  Relation relation = Relation::eq;
  double value = 0.0;
  std::string expr;
};

/// Family tag, parameters and the claims attached at build time.
struct ConstructionDescriptor {
  std::string family;
  nlohmann::json params = nlohmann::json::object();
  std::optional<std::size_t> n;
  std::optional<std::size_t> degree;  // claimed regular degree (loops count 1)
  std::optional<std::size_t> loops;
  std::optional<LambdaClaim> lambda;
  std::optional<SrgParams> srg;
  /// Every eigenvalue after the largest lies within 1e-8 of one of these.
  std::vector<double> nontrivial_eigenvalues;
  /// Every eigenvalue after the largest has this absolute value.
  std::optional<double> nontrivial_abs;
  /// Full predicted spectrum (descending), e.g. from characters.
  std::vector<double> predicted_spectrum;
  std::vector<ForbiddenClaim> forbidden;
  std::optional<bool> connected;
  std::optional<std::size_t> girth_min;
};

struct Construction {
  Graph graph;
  ConstructionDescriptor desc;
};

// Classic graphs.
Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph complete_multipartite(const std::vector<std::size_t>& parts);
Graph petersen_graph();
Graph hypercube(std::size_t dim);
Graph disjoint_union(const Graph& a, const Graph& b);

// Random models; identical seeds give identical graphs.
Graph gnp(std::size_t n, double p, std::uint64_t seed);
/// Configuration model with full restart on loops or repeated pairs.
Graph random_regular(std::size_t n, std::size_t d, std::uint64_t seed, std::size_t restart_cap = 100000);

// Algebraic families.
Graph paley(std::uint32_t q);
Graph inner_product_graph(std::uint32_t k);
/// Directions are indices 0..q: slope s for s < q, vertical for q. Default
/// is the first k in that order.
Graph dgt_graph(std::uint32_t q, std::uint32_t k, std::optional<std::vector<std::uint32_t>> directions = std::nullopt);
Graph pg_polarity(std::uint32_t q, std::uint32_t t);

struct CayleyResult {
  Graph graph;
  /// sum_{s in S} chi(s) over all characters chi, descending.
  std::vector<double> predicted;
};
/// Vertices are group elements in row-major mixed radix order.
CayleyResult cayley_abelian(const std::vector<std::uint64_t>& factors,
                            const std::vector<std::vector<std::uint64_t>>& S);

Graph power_residue_cayley(std::uint32_t q, std::uint32_t k);

/// Connection set of the Cayley graph on Z_2^{(2h+1)k}, each element a bit
/// mask with block j in bits [jk, (j+1)k).
std::vector<std::uint64_t> alon_generators(std::uint32_t k, std::uint32_t h);
Graph alon_triangle_free(std::uint32_t k);
Graph alon_general(std::uint32_t k, std::uint32_t h, std::size_t vertex_cap = 1u << 16);
/// Cayley graph on Z_2^bits; vertex x adjacent to x xor s.
Graph cayley_z2(std::uint32_t bits, const std::vector<std::uint64_t>& S);
/// True if some sum of l elements of S vanishes for an odd l <= max_len,
/// i.e. the Cayley graph has an odd cycle of length <= max_len.
bool z2_has_short_odd_cycle(std::uint32_t bits, const std::vector<std::uint64_t>& S, std::uint32_t max_len);

/// Integer quadruples (a0, a1, a2, a3), a0 > 0 odd, rest even, squares summing to p.
std::vector<std::array<std::int64_t, 4>> lps_vectors(std::uint32_t p);
Graph lps(std::uint32_t p, std::uint32_t q);

/// Vertex (X, a) has index X * (p-1) + (a-1).
Graph norm_graph(std::uint32_t p, std::uint32_t t);

/// Builds a named family from JSON parameters and attaches its claims.
/// Families: complete, empty, cycle, path, star, complete_bipartite,
/// petersen, hypercube, gnp, random_regular, paley, inner_product, dgt,
/// pg_polarity, cayley_abelian, power_residue, alon, alon_general, lps, norm.
Construction build_family(const std::string& family, const nlohmann::json& params);

std::vector<std::string> family_names();

}  // namespace pseudograph
