#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pseudograph/graph.hpp"

namespace pseudograph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

/// Everything needed to rerun a command; embedded in every JSON artifact.
struct RunConfig {
  std::string subcommand;
  std::string mode;  // oracle name, mc experiment, gen family
  std::optional<std::string> graph_path;
  std::optional<std::string> family;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 1;
  std::string seed_source = "default";  // "flag", "env" or "default"
  unsigned threads = 1;
  std::size_t dense_cap = 1500;
  std::uint64_t node_budget = 0;
  std::uint64_t sample_budget = 0;
  std::map<std::string, std::string> outputs;
  nlohmann::json options = nlohmann::json::object();
};

nlohmann::json to_json(const RunConfig& c);

/// Strict edge-list load with positional diagnostics; throws ParseError or
/// std::runtime_error (missing file).
Graph validate_edge_list(const std::string& path);

/// "a:b:step" to the inclusive grid a, a+step, ... <= b.
std::vector<double> parse_grid(const std::string& spec);

/// Runs one command line. argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace pseudograph::cli
