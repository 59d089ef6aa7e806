#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pseudograph/constructions.hpp"
#include "pseudograph/graph.hpp"
#include "pseudograph/oracles.hpp"
#include "pseudograph/spectral.hpp"

namespace pseudograph {

enum class Verdict { pass, fail, vacuous, inconclusive, info, hypothesis_not_met, out_of_regime };
enum class Method { exhaustive, sampled, oracle, formula, heuristic };
/// Direction of the audited inequality. `margin` findings carry a ratio in
/// lhs and 1 in rhs and are never failed.
enum class Relation { le, ge, eq, margin };

const char* to_string(Verdict v);
const char* to_string(Method m);
const char* to_string(Relation r);
Verdict verdict_from_string(const std::string& s);
Method method_from_string(const std::string& s);
Relation relation_from_string(const std::string& s);

struct Finding {
  std::string id;
  Relation relation = Relation::le;
  double lhs = 0.0, rhs = 0.0;
  /// rhs - lhs for le, lhs - rhs for ge, -|lhs - rhs| for eq.
  double slack = 0.0;
  Verdict verdict = Verdict::info;
  Method method = Method::formula;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::string detail;
  nlohmann::json extra = nlohmann::json::object();
};

/// Signed slack of lhs (relation) rhs.
double signed_slack(Relation r, double lhs, double rhs);
/// True when the relation holds up to kAuditTolerance * max(1, |rhs|).
bool within_tolerance(Relation r, double lhs, double rhs, double tol = kAuditTolerance);
/// Finding with slack filled in and verdict pass/fail from the tolerance rule.
Finding check(std::string id, Relation r, double lhs, double rhs, Method method, std::string detail = {});
Finding note(std::string id, double lhs, double rhs, Verdict v, Method method, std::string detail = {});

/// Spectral data every audit reads. `d` is the average degree (loops count 1).
struct AuditHeader {
  std::size_t n = 0, m = 0, loops = 0;
  bool regular = false;
  double d = 0.0;
  std::size_t min_degree = 0, max_degree = 0;
  double lambda1 = 0.0, lambda = 0.0, lambda2 = 0.0, lambda_min = 0.0;
  double residual = 0.0;
  std::string spectrum_method;  // "dense" or "lanczos"
};

struct AuditConfig {
  std::uint64_t seed = 1;
  std::uint64_t sample_budget = 100000;
  std::uint64_t node_budget = kDefaultNodeBudget;
  std::size_t dense_max_n = 1500;
  std::size_t mixing_exhaustive_max_n = 12;
  std::size_t mixing_extremal_max_n = 22;
  /// Cap on the number of sets U enumerated exactly by size in sampled mode.
  std::uint64_t mixing_small_sets_cap = 2000000;
  std::size_t jumbled_exhaustive_max_n = 14;
  std::optional<double> jumbled_p;
  std::size_t maxcut_exact_max_n = 24;
  std::size_t hamilton_max_n = 40;
  std::size_t turan_t = 3;
  std::vector<std::string> subgraphs{"K3", "C4", "C5"};
  /// Skip subgraph counting when n * maxdeg^(s-1) exceeds this.
  double subgraph_work_cap = 2e8;
  std::size_t connectivity_max_n = 1200;
  /// Exact alpha and chi only up to this order.
  std::size_t oracle_max_n = 200;
  /// Exact Turan search only up to this many edges.
  std::size_t turan_exact_max_m = 400;
  /// Search nodes for the exact Turan oracle; smaller than node_budget because
  /// a miss still leaves a valid upper bound.
  std::uint64_t turan_node_budget = 2000000;
};

nlohmann::json to_json(const AuditConfig& c);
AuditConfig audit_config_from_json(const nlohmann::json& j);

AuditHeader compute_header(const Graph& g, const AuditConfig& cfg = {});

enum class MixingMode { exhaustive, sampled };

/// Regular graphs only; irregular graphs go through audit_irregular_mixing.
/// Exhaustive covers every (U, W): a direct scan for n <= mixing_exhaustive_max_n
/// and, up to mixing_extremal_max_n, every U with the extremal W of each size.
std::vector<Finding> audit_mixing(const Graph& g, const AuditHeader& h, MixingMode mode, const AuditConfig& cfg = {});

/// Right-hand side of the irregular bound for |U| = u, |W| = w.
struct IrregularBound {
  double d = 0.0, lambda = 0.0, K = 0.0;
  std::size_t n = 0, max_degree = 0;
  double main_center(double u, double w) const { return d * u * w / double(n); }
  double rhs(double u, double w) const;
  /// The looser lambda * sqrt(u w) error with the same main-term ranges.
  double rhs_loose(double u, double w) const;
};
IrregularBound irregular_bound(const Graph& g, const AuditHeader& h);

/// Throws PreconditionError when lambda >= average degree.
Finding audit_irregular_mixing(const Graph& g, const AuditHeader& h, const VertexSet& U, const VertexSet& W);
/// Every pair for small n, else sampled pairs; same bound.
std::vector<Finding> audit_irregular_mixing_scan(const Graph& g, const AuditHeader& h, const AuditConfig& cfg = {});

struct JumblednessEstimate {
  double p = 0.0;
  double alpha = 0.0;  // max |e(U) - p C(|U|,2)| / |U|
  VertexSet witness;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};
JumblednessEstimate jumbledness_estimate(const Graph& g, double p, const AuditConfig& cfg = {});
std::vector<Finding> audit_jumbledness(const Graph& g, const AuditConfig& cfg = {});

std::vector<Finding> audit_connectivity(const Graph& g, const AuditHeader& h, const AuditConfig& cfg = {});
std::vector<Finding> audit_alpha_chi(const Graph& g, const AuditHeader& h, const AuditConfig& cfg = {});
Finding audit_maxcut(const Graph& g, const AuditHeader& h, const AuditConfig& cfg = {});
/// `U` empty means all of V.
std::vector<Finding> audit_subgraphs(const Graph& g, const AuditHeader& h, const Graph& pattern,
                                     const std::string& name, const VertexSet& U = {},
                                     const AuditConfig& cfg = {});
std::vector<Finding> audit_hamiltonicity(const Graph& g, const AuditHeader& h, const AuditConfig& cfg = {});
std::vector<Finding> audit_turan(const Graph& g, const AuditHeader& h, std::size_t t, const AuditConfig& cfg = {});

/// "K3", "C5", "P4", "S3", "K2,3" style names for small patterns.
Graph named_pattern(const std::string& name);

/// Length of a shortest odd cycle ignoring loops; 0 when bipartite.
std::size_t shortest_odd_cycle(const Graph& g);

struct ClaimCheck {
  std::string name;
  nlohmann::json expected, observed;
  bool verified = false;
  bool skipped = false;  // not checkable at this size; never a mismatch
  std::string detail;
};

/// Re-checks every claim present in the descriptor.
std::vector<ClaimCheck> verify_claims(const Graph& g, const ConstructionDescriptor& desc, const AuditHeader& h);

nlohmann::json to_json(const ConstructionDescriptor& d);
ConstructionDescriptor descriptor_from_json(const nlohmann::json& j);

struct AuditReport {
  nlohmann::json graph = nlohmann::json::object();
  AuditHeader header;
  std::vector<Finding> findings;  // sorted by id
  std::vector<ClaimCheck> claims;
  AuditConfig config;

  std::size_t violations() const;
  std::size_t claim_mismatches() const;
};

AuditReport full_report(const Graph& g, const AuditConfig& cfg = {},
                        const std::optional<ConstructionDescriptor>& desc = std::nullopt);

/// Doubles rounded to 12 significant digits; key order fixed.
nlohmann::json to_json(const Finding& f);
nlohmann::json to_json(const AuditHeader& h);
nlohmann::json to_json(const AuditReport& r);
Finding finding_from_json(const nlohmann::json& j);
AuditReport report_from_json(const nlohmann::json& j);

/// Round to 12 significant digits; non-finite values pass through.
double round12(double x);
/// JSON number rounded to 12 digits, or a string for non-finite values.
nlohmann::json num12(double x);

}  // namespace pseudograph
