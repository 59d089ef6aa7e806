#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pseudograph/audits.hpp"
#include "pseudograph/constructions.hpp"
#include "pseudograph/graph_io.hpp"
#include "pseudograph/oracles.hpp"
#include "pseudograph/random_lab.hpp"
#include "pseudograph/spectral.hpp"

namespace pseudograph::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string g12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void write_json(const nlohmann::json& j, const std::optional<std::string>& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (!path) {
    out << text;
    return;
  }
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + *path);
  f << text;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path + ": file not found or unreadable");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": invalid JSON: " + e.what());
  }
}

nlohmann::json oracle_json(const OracleResult& r) {
  nlohmann::json j;
  j["oracle"] = r.oracle;
  j["known"] = r.known;
  j["value"] = r.value;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["nodes"] = r.nodes;
  j["randomized"] = r.randomized;
  if (!r.vertices.empty()) j["vertices"] = r.vertices;
  if (!r.labels.empty()) j["labels"] = r.labels;
  if (!r.edges.empty()) {
    nlohmann::json es = nlohmann::json::array();
    for (auto [u, v] : r.edges) es.push_back({u, v});
    j["edges"] = es;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

bool any_fail(const std::vector<Finding>& fs) {
  for (const auto& f : fs)
    if (f.verdict == Verdict::fail) return true;
  return false;
}

// Options shared by every subcommand that reads a graph.
struct GraphSource {
  std::optional<std::string> path;
  std::optional<std::string> family;
  std::optional<std::string> params_json;
  std::vector<std::string> param_kv;

  void attach(CLI::App* sub) {
    sub->add_option("graph,--graph", path, "edge-list file");
    sub->add_option("--family", family, "build the graph from a family instead of a file");
    sub->add_option("--params", params_json, "family parameters as a JSON object");
    sub->add_option("--param", param_kv, "family parameter key=value (repeatable)");
  }
};

nlohmann::json parse_scalar(const std::string& s) {
  try {
    return nlohmann::json::parse(s);
  } catch (const nlohmann::json::parse_error&) {
    return s;
  }
}

nlohmann::json collect_params(const std::optional<std::string>& params_json, const std::vector<std::string>& kv) {
  nlohmann::json P = nlohmann::json::object();
  if (params_json) {
    try {
      P = nlohmann::json::parse(*params_json);
    } catch (const nlohmann::json::parse_error& e) {
      throw UsageError(std::string("--params: invalid JSON: ") + e.what());
    }
    if (!P.is_object()) throw UsageError("--params must be a JSON object");
  }
  for (const auto& s : kv) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got \"" + s + "\"");
    P[s.substr(0, eq)] = parse_scalar(s.substr(eq + 1));
  }
  return P;
}

bool seeded_family(const std::string& f) { return f == "gnp" || f == "random_regular"; }

Graph load_source(const GraphSource& src, RunConfig& rc) {
  if (src.path && src.family) throw UsageError("give either a graph file or --family, not both");
  if (src.path) {
    rc.graph_path = *src.path;
    return validate_edge_list(*src.path);
  }
  if (!src.family) throw UsageError("no graph given: pass an edge-list file or --family");
  rc.family = *src.family;
  rc.params = collect_params(src.params_json, src.param_kv);
  if (seeded_family(*src.family) && !rc.params.contains("seed")) rc.params["seed"] = rc.seed;
  try {
    return build_family(*src.family, rc.params).graph;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("bad parameters for family " + *src.family + ": " + e.what());
  }
}

std::optional<ConstructionDescriptor> load_claims(const std::string& path) {
  const nlohmann::json j = read_json_file(path);
  try {
    return descriptor_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(path + ": claims schema violation: " + e.what());
  } catch (const PreconditionError& e) {
    throw UsageError(path + ": claims schema violation: " + e.what());
  }
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos, 0);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size() || s.front() == '-') throw UsageError(std::string(what) + ": not an unsigned integer: \"" + s + "\"");
  return v;
}

}  // namespace

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json j;
  j["version"] = kVersion;
  j["subcommand"] = c.subcommand;
  if (!c.mode.empty()) j["mode"] = c.mode;
  nlohmann::json src = nlohmann::json::object();
  if (c.graph_path) src["path"] = *c.graph_path;
  if (c.family) {
    src["family"] = *c.family;
    src["params"] = c.params;
  }
  j["graph_source"] = src;
  j["seed"] = c.seed;
  j["seed_source"] = c.seed_source;
  j["seed_rule"] = kSeedRule;
  j["threads"] = c.threads;
  j["caps"] = {{"dense_cap", c.dense_cap}, {"node_budget", c.node_budget}, {"sample_budget", c.sample_budget}};
  j["tolerance"] = kAuditTolerance;
  j["outputs"] = c.outputs;
  j["options"] = c.options;
  return j;
}

Graph validate_edge_list(const std::string& path) { return load_edge_list(path); }

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ':')) {
    char* end = nullptr;
    const double v = std::strtod(tok.c_str(), &end);
    if (tok.empty() || end != tok.c_str() + tok.size() || !std::isfinite(v))
      throw UsageError("--grid expects a:b:step, got \"" + spec + "\"");
    parts.push_back(v);
  }
  if (parts.size() != 3) throw UsageError("--grid expects a:b:step, got \"" + spec + "\"");
  const double a = parts[0], b = parts[1], step = parts[2];
  if (!(step > 0) || b < a) throw UsageError("--grid needs step > 0 and b >= a");
  std::vector<double> grid;
  for (std::size_t i = 0;; ++i) {
    const double x = a + double(i) * step;
    if (x > b + 1e-9 * step) break;
    grid.push_back(round12(x));
    if (grid.size() > 100000) throw UsageError("--grid has too many points");
  }
  return grid;
}

int run(const std::vector<std::string>& argv_in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct pseudo-random graph families and audit their spectral properties", "pseudograph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunConfig rc;
  std::optional<std::uint64_t> seed_flag;
  app.add_option("--seed", seed_flag, "master seed (falls back to PSEUDOGRAPH_SEED, then 1)");
  app.add_option("--threads", rc.threads, "thread cap")->check(CLI::PositiveNumber);
  app.add_option("--dense-cap", rc.dense_cap, "largest n for the dense eigensolver");
  std::uint64_t node_budget = kDefaultNodeBudget;
  app.add_option("--node-budget", node_budget, "branch-and-bound node budget");
  std::uint64_t sample_budget = 100000;
  app.add_option("--sample-budget", sample_budget, "sampled audits: number of set pairs");
  app.fallthrough();

  // gen
  auto* gen = app.add_subcommand("gen", "build a family, write edge list and claims");
  std::string gen_family;
  gen->add_option("family", gen_family, "family name")->required();
  std::map<std::string, std::string> gen_named;
  for (const char* key : {"q", "k", "n", "p", "t", "d", "dim", "leaves", "a", "b", "directions", "factors", "S"})
    gen->add_option(std::string("--") + key, gen_named[key], std::string("family parameter ") + key);
  std::optional<std::string> gen_params;
  std::vector<std::string> gen_kv;
  gen->add_option("--params", gen_params, "parameters as a JSON object");
  gen->add_option("--param", gen_kv, "parameter key=value (repeatable)");
  std::string gen_out;
  gen->add_option("--out,-o", gen_out, "edge-list output path")->required();
  std::optional<std::string> gen_claims, gen_dot;
  gen->add_option("--claims", gen_claims, "claims output path (default: <out stem>.claims.json)");
  gen->add_option("--dot", gen_dot, "also write Graphviz DOT");

  // spectrum
  auto* spec = app.add_subcommand("spectrum", "eigenvalues, lambda and spectral gap");
  GraphSource spec_src;
  spec_src.attach(spec);
  bool spec_json = false;
  spec->add_flag("--json", spec_json, "JSON instead of text");
  std::string spec_method = "auto";
  spec->add_option("--method", spec_method, "dense, lanczos or auto")
      ->check(CLI::IsMember({"auto", "dense", "lanczos"}));
  std::optional<std::string> spec_out;
  spec->add_option("--out,-o", spec_out, "output path");

  // oracle
  auto* orc = app.add_subcommand("oracle", "exact oracles");
  std::string orc_op;
  const std::vector<std::string> oracle_ops{"alpha",          "clique",          "chi",        "maxcut",
                                            "hamilton",       "hamilton-count",  "matching",   "matching-count",
                                            "spanning-trees", "triangle-factor", "turan",      "subgraph-count"};
  orc->add_option("op", orc_op, "oracle")->required()->check(CLI::IsMember(oracle_ops));
  GraphSource orc_src;
  orc_src.attach(orc);
  std::size_t orc_t = 3;
  orc->add_option("--t", orc_t, "clique order for turan");
  std::string orc_pattern = "K3";
  orc->add_option("--pattern", orc_pattern, "pattern for subgraph-count (K3, C4, P4, S3, K2,3 ...)");
  bool orc_induced = false;
  orc->add_flag("--induced", orc_induced, "count induced copies");
  std::optional<std::string> orc_out;
  orc->add_option("--out,-o", orc_out, "output path");

  // audit
  auto* aud = app.add_subcommand("audit", "audit the spectral theorems against exact oracles");
  GraphSource aud_src;
  aud_src.attach(aud);
  std::optional<std::string> aud_claims, aud_report;
  aud->add_option("--claims", aud_claims, "claims JSON to re-verify");
  aud->add_option("--report", aud_report, "write the full report JSON here");
  bool aud_claims_only = false;
  aud->add_flag("--claims-only", aud_claims_only, "verify claims without running audits");
  std::size_t aud_turan_t = 3;
  aud->add_option("--turan-t", aud_turan_t, "clique order for the Turan audit");
  std::optional<std::string> aud_subgraphs;
  aud->add_option("--subgraphs", aud_subgraphs, "comma-separated patterns (default K3,C4,C5)");
  std::optional<double> aud_jumbled_p;
  aud->add_option("--jumbled-p", aud_jumbled_p, "density for the jumbledness audit (default m/C(n,2))");
  bool aud_quiet = false;
  aud->add_flag("--quiet,-q", aud_quiet, "print only the summary line");

  // mc
  auto* mc = app.add_subcommand("mc", "random-subgraph Monte Carlo experiments");
  std::string mc_kind;
  mc->add_option("experiment", mc_kind, "giant, window, mst, degree or enum")
      ->required()
      ->check(CLI::IsMember({"giant", "window", "mst", "degree", "enum"}));
  GraphSource mc_src;
  mc->add_option("--graph", mc_src.path, "edge-list file");
  mc->add_option("--family", mc_src.family, "build the graph from a family");
  mc->add_option("--params", mc_src.params_json, "family parameters as JSON");
  mc->add_option("--param", mc_src.param_kv, "family parameter key=value");
  std::size_t mc_trials = 100;
  mc->add_option("--trials", mc_trials, "trials per grid point")->check(CLI::PositiveNumber);
  std::optional<std::string> mc_grid;
  mc->add_option("--grid", mc_grid, "a:b:step");
  double mc_eps = 0.25;
  bool mc_eps_set = false;
  mc->add_option("--epsilon", mc_eps, "window level, or enumeration epsilon")->each([&](const std::string&) {
    mc_eps_set = true;
  });
  bool mc_hamilton = false;
  mc->add_flag("--hamilton", mc_hamilton, "degree experiment: also search Hamilton cycles (n <= 40)");
  bool mc_samples = false;
  mc->add_flag("--samples", mc_samples, "include per-trial samples");
  std::optional<std::string> mc_out;
  mc->add_option("--out,-o", mc_out, "output path");

  // enum
  auto* en = app.add_subcommand("enum", "exact spanning tree, perfect matching and Hamilton cycle counts");
  GraphSource en_src;
  en_src.attach(en);
  std::optional<double> en_eps;
  en->add_option("--epsilon", en_eps, "also check the log-scale sandwich with this epsilon");
  std::optional<std::string> en_out;
  en->add_option("--out,-o", en_out, "output path");

  std::vector<std::string> rev(argv_in.rbegin(), argv_in.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (seed_flag) {
      rc.seed = *seed_flag;
      rc.seed_source = "flag";
    } else if (const char* env = std::getenv("PSEUDOGRAPH_SEED"); env && *env) {
      rc.seed = parse_u64(env, "PSEUDOGRAPH_SEED");
      rc.seed_source = "env";
    }
    rc.node_budget = node_budget;
    rc.sample_budget = sample_budget;

    if (gen->parsed()) {
      rc.subcommand = "gen";
      rc.mode = gen_family;
      rc.family = gen_family;
      nlohmann::json P = collect_params(gen_params, gen_kv);
      for (const auto& [k, v] : gen_named)
        if (!v.empty()) P[k] = parse_scalar(v);
      if (seeded_family(gen_family) && !P.contains("seed")) P["seed"] = rc.seed;
      rc.params = P;
      Construction c;
      try {
        c = build_family(gen_family, P);
      } catch (const nlohmann::json::exception& e) {
        throw UsageError("bad parameters for family " + gen_family + ": " + e.what());
      }
      std::string claims_path;
      if (gen_claims) {
        claims_path = *gen_claims;
      } else {
        const auto dot = gen_out.rfind('.');
        const auto slash = gen_out.rfind('/');
        const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
        claims_path = (has_ext ? gen_out.substr(0, dot) : gen_out) + ".claims.json";
      }
      rc.outputs["edge_list"] = gen_out;
      rc.outputs["claims"] = claims_path;
      if (gen_dot) rc.outputs["dot"] = *gen_dot;
      save_edge_list(gen_out, c.graph);
      nlohmann::json cj = to_json(c.desc);
      cj["version"] = kVersion;
      cj["config"] = to_json(rc);
      write_json(cj, claims_path, out);
      if (gen_dot) {
        std::ofstream f(*gen_dot);
        if (!f) throw std::runtime_error("cannot write " + *gen_dot);
        write_dot(f, c.graph, gen_family);
      }
      out << "wrote " << gen_out << " (n=" << c.graph.n() << ", m=" << c.graph.m() << ") and " << claims_path << "\n";
      return kExitOk;
    }

    if (spec->parsed()) {
      rc.subcommand = "spectrum";
      rc.options["method"] = spec_method;
      rc.options["json"] = spec_json;
      if (spec_out) rc.outputs["spectrum"] = *spec_out;
      const Graph g = load_source(spec_src, rc);
      const bool dense = spec_method == "dense" || (spec_method == "auto" && g.n() <= rc.dense_cap);
      nlohmann::json j;
      j["version"] = kVersion;
      j["config"] = to_json(rc);
      j["n"] = g.n();
      j["m"] = g.m();
      j["method"] = dense ? "dense" : "lanczos";
      if (dense) {
        const Spectrum s = full_spectrum(g, std::max<std::size_t>(rc.dense_cap, g.n()));
        j["lambda1"] = num12(s.lambda1());
        j["lambda"] = num12(s.lambda());
        j["lambda2"] = num12(s.lambda2());
        j["lambda_min"] = num12(s.lambda_min());
        j["spectral_gap"] = num12(s.spectral_gap());
        j["residual_max"] = num12(s.max_residual());
        nlohmann::json ev = nlohmann::json::array(), grp = nlohmann::json::array();
        for (double x : s.eigenvalues) ev.push_back(num12(x));
        for (auto [v, k] : s.grouped()) grp.push_back({{"value", num12(v)}, {"multiplicity", k}});
        j["eigenvalues"] = ev;
        j["grouped"] = grp;
      } else {
        const ExtremalResult e = extremal_lambda(g);
        j["lambda1"] = num12(e.lambda1);
        j["lambda"] = num12(e.lambda);
        j["lambda2"] = num12(e.lambda2);
        j["lambda_min"] = num12(e.lambda_min);
        j["spectral_gap"] = num12(e.lambda1 - e.lambda);
        j["residual_max"] = num12(e.residual);
        j["matvecs"] = e.matvecs;
      }
      if (spec_json || spec_out) {
        write_json(j, spec_out, out);
      } else {
        for (const char* k : {"n", "m", "method", "lambda1", "lambda", "lambda2", "lambda_min", "spectral_gap", "residual_max"})
          out << k << " " << (j[k].is_string() ? j[k].get<std::string>() : j[k].dump()) << "\n";
        if (dense) {
          out << "eigenvalues\n";
          for (const auto& v : j["grouped"]) out << "  " << v["value"].dump() << " x" << v["multiplicity"].get<std::size_t>() << "\n";
        }
      }
      return kExitOk;
    }

    if (orc->parsed()) {
      rc.subcommand = "oracle";
      rc.mode = orc_op;
      if (orc_op == "turan") rc.options["t"] = orc_t;
      if (orc_op == "subgraph-count") {
        rc.options["pattern"] = orc_pattern;
        rc.options["induced"] = orc_induced;
      }
      if (orc_out) rc.outputs["oracle"] = *orc_out;
      const Graph g = load_source(orc_src, rc);
      nlohmann::json j;
      const auto nb = rc.node_budget;
      if (orc_op == "alpha") {
        j = oracle_json(exact_alpha(g, nb));
      } else if (orc_op == "clique") {
        j = oracle_json(exact_clique(g, nb));
      } else if (orc_op == "chi") {
        j = oracle_json(exact_chi(g, nb));
      } else if (orc_op == "maxcut") {
        j = oracle_json(exact_maxcut(g));
      } else if (orc_op == "hamilton") {
        j = oracle_json(hamilton_search(g, nb, false));
      } else if (orc_op == "hamilton-count") {
        j = oracle_json(hamilton_search(g, nb, true));
      } else if (orc_op == "matching") {
        j = oracle_json(matching(g, MatchingMode::exists_perfect, split_seed(rc.seed, 0x3a7c)));
      } else if (orc_op == "matching-count") {
        j = oracle_json(matching(g, MatchingMode::count_perfect, split_seed(rc.seed, 0x3a7c)));
      } else if (orc_op == "spanning-trees") {
        j["oracle"] = "spanning_trees";
        j["known"] = true;
        j["count"] = count_spanning_trees(g).str();
      } else if (orc_op == "triangle-factor") {
        j = oracle_json(triangle_factor_exact(g, nb));
      } else if (orc_op == "turan") {
        j = oracle_json(turan_exact(g, orc_t, nb));
      } else {
        const Graph h = named_pattern(orc_pattern);
        j["oracle"] = "subgraph_count";
        j["known"] = true;
        j["pattern"] = orc_pattern;
        j["induced"] = orc_induced;
        const BigInt labeled = count_subgraph_copies(g, h, orc_induced);
        const std::uint64_t aut = automorphism_count(h);
        j["labeled"] = labeled.str();
        j["automorphisms"] = aut;
        j["count"] = BigInt(labeled / aut).str();
      }
      j["version"] = kVersion;
      j["config"] = to_json(rc);
      write_json(j, orc_out, out);
      return kExitOk;
    }

    if (aud->parsed()) {
      rc.subcommand = "audit";
      AuditConfig cfg;
      cfg.seed = rc.seed;
      cfg.sample_budget = rc.sample_budget;
      cfg.node_budget = rc.node_budget;
      cfg.dense_max_n = rc.dense_cap;
      cfg.turan_t = aud_turan_t;
      cfg.jumbled_p = aud_jumbled_p;
      if (aud_subgraphs) {
        cfg.subgraphs.clear();
        std::stringstream ss(*aud_subgraphs);
        std::string tok;
        // K2,3 contains a comma; split on ';' when present.
        const char sep = aud_subgraphs->find(';') != std::string::npos ? ';' : ',';
        while (std::getline(ss, tok, sep))
          if (!tok.empty()) cfg.subgraphs.push_back(tok);
        for (const auto& s : cfg.subgraphs) (void)named_pattern(s);
      }
      if (aud_claims) rc.options["claims"] = *aud_claims;
      if (aud_report) rc.outputs["report"] = *aud_report;
      rc.options["claims_only"] = aud_claims_only;
      rc.options["audit_config"] = to_json(cfg);
      const Graph g = load_source(aud_src, rc);
      std::optional<ConstructionDescriptor> desc;
      if (aud_claims) desc = load_claims(*aud_claims);
      if (aud_claims_only && !desc) throw UsageError("--claims-only needs --claims");

      AuditReport rep;
      if (aud_claims_only) {
        rep.config = cfg;
        rep.header = compute_header(g, cfg);
        rep.claims = verify_claims(g, *desc, rep.header);
        rep.graph = {{"n", g.n()}, {"m", g.m()}, {"loops", g.loop_count()}};
      } else {
        rep = full_report(g, cfg, desc);
      }
      nlohmann::json j = to_json(rep);
      j["run"] = to_json(rc);
      if (aud_report) write_json(j, aud_report, out);

      if (!aud_quiet) {
        for (const auto& f : rep.findings)
          out << f.id << "  " << to_string(f.verdict) << "  lhs=" << g12(f.lhs) << " " << to_string(f.relation)
              << " rhs=" << g12(f.rhs) << "  slack=" << g12(f.slack) << "\n";
        for (const auto& c : rep.claims)
          out << "claim " << c.name << "  " << (c.skipped ? "skipped" : c.verified ? "verified" : "MISMATCH")
              << "  expected=" << c.expected.dump() << " observed=" << c.observed.dump() << "\n";
      }
      const std::size_t v = rep.violations(), cm = rep.claim_mismatches();
      out << "summary: " << rep.findings.size() << " findings, " << v << " violations, " << rep.claims.size()
          << " claims, " << cm << " mismatches\n";
      if (v > 0 || cm > 0) {
        err << "soundness alarm: " << v << " theorem violation(s), " << cm << " claim mismatch(es)\n";
        return kExitViolation;
      }
      return kExitOk;
    }

    if (mc->parsed()) {
      rc.subcommand = "mc";
      rc.mode = mc_kind;
      rc.options["trials"] = mc_trials;
      if (mc_grid) rc.options["grid"] = *mc_grid;
      if (mc_out) rc.outputs["curve"] = *mc_out;
      const Graph g = load_source(mc_src, rc);
      nlohmann::json j;
      j["experiment"] = mc_kind;
      bool fail = false;
      if (mc_kind == "giant") {
        const auto grid = parse_grid(mc_grid.value_or("0.5:3:0.25"));
        j["result"] = to_json(giant_component_experiment(g, grid, mc_trials, rc.seed), mc_samples);
      } else if (mc_kind == "window") {
        std::vector<double> grid;
        if (mc_grid) {
          grid = parse_grid(*mc_grid);
        } else {
          // 24 points spanning [0.25, 2] * ln n / d, clipped to (0, 1].
          const double d = std::max(1.0, double(degree_stats(g).sum) / std::max<double>(1, g.n()));
          const double c = std::log(std::max<double>(2, g.n())) / d;
          for (int i = 0; i < 24; ++i) {
            const double x = round12(std::min(1.0, c * (0.25 + 1.75 * i / 23.0)));
            if (grid.empty() || x > grid.back()) grid.push_back(x);
          }
          rc.options["grid"] = "auto";
        }
        rc.options["epsilon"] = mc_eps;
        j["result"] = to_json(connectivity_window_experiment(g, grid, mc_trials, rc.seed, mc_eps));
      } else if (mc_kind == "mst") {
        j["result"] = to_json(mst_experiment(g, mc_trials, rc.seed));
      } else if (mc_kind == "degree") {
        const auto grid = parse_grid(mc_grid.value_or("-4:4:1"));
        rc.options["hamilton"] = mc_hamilton;
        j["result"] = to_json(degree_threshold_experiment(g, mc_trials, rc.seed, grid, mc_hamilton), mc_samples);
      } else {
        if (!mc_eps_set) throw UsageError("mc enum needs --epsilon");
        rc.options["epsilon"] = mc_eps;
        const auto fs = enumeration_bounds_check(g, mc_eps, rc.seed);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& f : fs) arr.push_back(to_json(f));
        j["result"] = {{"findings", arr}};
        fail = any_fail(fs);
      }
      j["version"] = kVersion;
      j["config"] = to_json(rc);
      write_json(j, mc_out, out);
      return fail ? kExitViolation : kExitOk;
    }

    if (en->parsed()) {
      rc.subcommand = "enum";
      if (en_eps) rc.options["epsilon"] = *en_eps;
      if (en_out) rc.outputs["enum"] = *en_out;
      const Graph g = load_source(en_src, rc);
      nlohmann::json j;
      j["spanning_trees"] = g.n() <= 500 ? nlohmann::json(count_spanning_trees(g).str()) : nlohmann::json(nullptr);
      if (g.n() % 2 == 0 && g.n() <= 32) {
        j["perfect_matchings"] = matching(g, MatchingMode::count_perfect).value;
      } else {
        j["perfect_matchings"] = nullptr;
      }
      if (g.n() >= 3 && g.n() <= 16) {
        const OracleResult h = hamilton_search(g, rc.node_budget, true);
        j["hamilton_cycles"] = h.known ? nlohmann::json(h.value) : nlohmann::json(nullptr);
      } else {
        j["hamilton_cycles"] = nullptr;
      }
      bool fail = false;
      if (en_eps) {
        const auto fs = enumeration_bounds_check(g, *en_eps, rc.seed);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& f : fs) arr.push_back(to_json(f));
        j["findings"] = arr;
        fail = any_fail(fs);
      }
      j["version"] = kVersion;
      j["config"] = to_json(rc);
      write_json(j, en_out, out);
      return fail ? kExitViolation : kExitOk;
    }
  } catch (const ParseError& e) {
    err << "malformed edge list: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pseudograph::cli
