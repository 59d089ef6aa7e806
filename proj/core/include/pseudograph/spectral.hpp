#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pseudograph/constructions.hpp"
#include "pseudograph/graph.hpp"

namespace pseudograph {

using BigInt = boost::multiprecision::cpp_int;

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  std::vector<double> residuals;    // ||A v - lambda v|| per eigenvalue
  double tolerance = 0.0;           // residual ceiling promised by the solver

  double lambda1() const { return eigenvalues.front(); }
  /// Second largest eigenvalue by value.
  double lambda2() const { return eigenvalues.size() > 1 ? eigenvalues[1] : 0.0; }
  double lambda_min() const { return eigenvalues.back(); }
  /// max_{i >= 2} |lambda_i|.
  double lambda() const;
  double spectral_gap() const { return lambda1() - lambda(); }
  double max_residual() const;
  /// Distinct eigenvalues (descending) with multiplicities, grouped with the
  /// given relative tolerance.
  std::vector<std::pair<double, std::size_t>> grouped(double rel_tol = 1e-6) const;
  /// sum lambda_i^t.
  double power_sum(unsigned t) const;
};

/// Dense symmetric eigensolve (Householder tridiagonalisation, implicit QR).
Spectrum full_spectrum(const Graph& g, std::size_t cap = kDenseCap);

struct ExtremalResult {
  double lambda1 = 0.0;
  double lambda = 0.0;        // max_{i>=2} |lambda_i|
  double lambda2 = 0.0;       // largest eigenvalue on the complement of the top eigenvector
  double lambda_min = 0.0;
  double residual = 0.0;      // worst Ritz residual at exit
  std::size_t matvecs = 0;
};

/// Restarted Lanczos with full reorthogonalisation; the second stage runs on
/// the orthogonal complement of the top Ritz vector.
ExtremalResult extremal_lambda(const Graph& g, double tol = 1e-10, std::size_t krylov_dim = 160,
                               std::size_t max_restarts = 200);

struct SrgSpectrum {
  double lambda2 = 0.0, lambda3 = 0.0;  // lambda2 > lambda3
  std::size_t s2 = 0, s3 = 0;
  bool conference = false;
};

/// Closed-form eigenvalues and multiplicities; throws PreconditionError for
/// infeasible parameters or non-integral multiplicities.
SrgSpectrum srg_spectrum(const SrgParams& params);

/// Parameters when codegrees are constant on edges and on non-edges of a
/// loopless regular graph that is neither complete nor empty.
std::optional<SrgParams> srg_detect(const Graph& g);

/// Exact Tr(A^t): number of closed walks of length t.
BigInt circuit_count(const Graph& g, unsigned t);

/// Walk counts of length `len` from `source` to every vertex.
std::vector<BigInt> walk_counts(const Graph& g, Vertex source, unsigned len);

struct PropertyScores {
  double p = 0.0;
  unsigned t = 0;
  /// (length, Tr(A^len) / (np)^len) for len = 2..t.
  std::vector<std::pair<unsigned, double>> circuit;
  double eig_lambda1_dev = 0.0;  // |lambda1/(np) - 1|
  double eig_second = 0.0;       // lambda/(np)
  double disc = 0.0;             // max |e(X,Y) - p|X||Y|| / (p n^2)
  bool disc_exhaustive = false;
  std::size_t disc_samples = 0;
  VertexSet disc_x, disc_y;
  double u_constant = 0.0;  // max walks_{t-1}(x,y) / (n^{t-2} p^{t-1})
  Vertex u_x = 0, u_y = 0;
  double p6_sum = 0.0, p6 = 0.0;  // sum |s - (p^2+(1-p)^2) n|, and / n^3
  double p7_sum = 0.0, p7 = 0.0;  // sum |codeg - p^2 n|, and / n^3
  std::uint64_t seed = 0;
  std::size_t sample_budget = 0;
};

PropertyScores property_scores(const Graph& g, double p, unsigned t, std::size_t sample_budget, std::uint64_t seed);

/// max over Y of |e(X,Y) - p|X||Y||, with an optimal Y.
std::pair<double, VertexSet> best_discrepancy_partner(const Graph& g, const VertexSet& X, double p);

}  // namespace pseudograph
