#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pseudograph/common.hpp"

namespace pseudograph {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable undirected graph with optional loops, stored as CSR.
/// A loop at v appears once in v's neighbor list: it adds 1 to deg(v)
/// and 1 to the diagonal entry A[v][v].
class Graph {
 public:
  Graph() = default;

  /// Rejects out-of-range endpoints and repeated edges (in either orientation).
  static Graph from_edge_list(std::size_t n, const std::vector<Edge>& edges);

  /// Each list may be in any order; the relation must be symmetric and
  /// duplicate-free.
  static Graph from_neighbor_lists(std::vector<std::vector<Vertex>> lists);

  std::size_t n() const noexcept { return n_; }
  /// Non-loop edges once plus loops once.
  std::size_t m() const noexcept { return m_; }
  std::size_t loop_count() const noexcept { return loops_; }

  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  bool has_edge(Vertex u, Vertex v) const noexcept;
  bool has_loop(Vertex v) const noexcept { return has_edge(v, v); }

  /// Canonical edge list: u <= v, lexicographic.
  std::vector<Edge> edges() const;

  std::size_t min_degree() const noexcept;
  std::size_t max_degree() const noexcept;
  bool is_regular() const noexcept { return n_ == 0 || min_degree() == max_degree(); }

  bool operator==(const Graph& o) const noexcept {
    return n_ == o.n_ && offsets_ == o.offsets_ && adj_ == o.adj_;
  }

 private:
  std::size_t n_ = 0, m_ = 0, loops_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adj_;
};

/// sum over u in U of |N(u) cap W|. An edge inside U cap W counts twice,
/// a loop inside U cap W counts once.
std::uint64_t edge_count_between(const Graph& g, const VertexSet& U, const VertexSet& W);

/// Edges with both ends in U; each non-loop edge once, each loop once.
std::uint64_t induced_edges(const Graph& g, const VertexSet& U);

struct DegreeStats {
  std::size_t min = 0, max = 0;
  double mean = 0.0;
  std::uint64_t sum = 0;
  /// K = sum (d(v) - mean)^2 as the reduced fraction k_num / k_den.
  std::int64_t k_num = 0, k_den = 1;
  double K() const noexcept { return static_cast<double>(k_num) / static_cast<double>(k_den); }
};

DegreeStats degree_stats(const Graph& g);

struct CodegreeStats {
  std::size_t n = 0;
  double p = 0.0;
  /// codeg(x,y) = |N(x) cap N(y)|, i.e. (A^2)[x][y]; row-major n*n.
  std::vector<std::uint16_t> table;
  std::uint32_t codeg(Vertex x, Vertex y) const noexcept { return table[std::size_t{x} * n + y]; }
  /// Vertices adjacent to both or to neither: n - d(x) - d(y) + 2 codeg(x,y).
  std::vector<std::int64_t> s_of;  // row-major n*n
  std::uint32_t max_codeg = 0, min_codeg = 0;
  /// Over unordered pairs x != y.
  double codeg_dev_sum = 0.0;  // sum |codeg - p^2 n|
  double s_dev_sum = 0.0;      // sum |s - (p^2 + (1-p)^2) n|
  double codeg_dev_normalized() const noexcept { return codeg_dev_sum / (double(n) * n * n); }
  double s_dev_normalized() const noexcept { return s_dev_sum / (double(n) * n * n); }
};

inline constexpr std::size_t kDenseCap = 4096;

CodegreeStats codegree_stats(const Graph& g, double p, std::size_t cap = kDenseCap);

/// On-demand codegree of a single pair.
std::uint32_t codegree(const Graph& g, Vertex x, Vertex y);

/// Exact vertex connectivity (loops ignored). K_n gives n-1.
std::size_t vertex_connectivity(const Graph& g);

/// Exact edge connectivity (loops ignored).
std::size_t edge_connectivity(const Graph& g);

/// Minimum number of internally vertex-disjoint s-t paths; s, t non-adjacent.
std::size_t local_vertex_connectivity(const Graph& g, Vertex s, Vertex t, std::size_t limit = SIZE_MAX);

/// Connected components, each sorted, ordered by least vertex.
std::vector<VertexSet> components(const Graph& g);

bool is_connected(const Graph& g);

/// Length of a shortest cycle (loops ignored); 0 when acyclic.
std::size_t girth(const Graph& g);

/// Subgraph induced on U, relabelled 0..|U|-1 in order.
Graph induced_subgraph(const Graph& g, const VertexSet& U);

Graph complement(const Graph& g);

/// Dense 0/1 adjacency matrix, row-major.
std::vector<std::uint8_t> adjacency_matrix(const Graph& g);

}  // namespace pseudograph
