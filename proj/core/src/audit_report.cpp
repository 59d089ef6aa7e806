#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>

#include "pseudograph/audits.hpp"
#include "pseudograph/graph_io.hpp"

namespace pseudograph {

using nlohmann::json;

double round12(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // drop negative zero
}

json num12(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return round12(x);
}

namespace {

double read_num(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    return NAN;
  }
  return j.get<double>();
}

std::string edge_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : to_edge_list(g)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

}  // namespace

// ---------------------------------------------------------------------------
// Config.

json to_json(const AuditConfig& c) {
  json j;
  j["seed"] = c.seed;
  j["sample_budget"] = c.sample_budget;
  j["node_budget"] = c.node_budget;
  j["dense_max_n"] = c.dense_max_n;
  j["mixing_exhaustive_max_n"] = c.mixing_exhaustive_max_n;
  j["mixing_extremal_max_n"] = c.mixing_extremal_max_n;
  j["mixing_small_sets_cap"] = c.mixing_small_sets_cap;
  j["jumbled_exhaustive_max_n"] = c.jumbled_exhaustive_max_n;
  j["jumbled_p"] = c.jumbled_p ? json(round12(*c.jumbled_p)) : json(nullptr);
  j["maxcut_exact_max_n"] = c.maxcut_exact_max_n;
  j["hamilton_max_n"] = c.hamilton_max_n;
  j["turan_t"] = c.turan_t;
  j["subgraphs"] = c.subgraphs;
  j["subgraph_work_cap"] = round12(c.subgraph_work_cap);
  j["connectivity_max_n"] = c.connectivity_max_n;
  j["oracle_max_n"] = c.oracle_max_n;
  j["turan_exact_max_m"] = c.turan_exact_max_m;
  j["turan_node_budget"] = c.turan_node_budget;
  return j;
}

AuditConfig audit_config_from_json(const json& j) {
  AuditConfig c;
  if (!j.is_object()) throw PreconditionError("audit config must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (k == "seed") c.seed = v.get<std::uint64_t>();
    else if (k == "sample_budget") c.sample_budget = v.get<std::uint64_t>();
    else if (k == "node_budget") c.node_budget = v.get<std::uint64_t>();
    else if (k == "dense_max_n") c.dense_max_n = v.get<std::size_t>();
    else if (k == "mixing_exhaustive_max_n") c.mixing_exhaustive_max_n = v.get<std::size_t>();
    else if (k == "mixing_extremal_max_n") c.mixing_extremal_max_n = v.get<std::size_t>();
    else if (k == "mixing_small_sets_cap") c.mixing_small_sets_cap = v.get<std::uint64_t>();
    else if (k == "jumbled_exhaustive_max_n") c.jumbled_exhaustive_max_n = v.get<std::size_t>();
    else if (k == "jumbled_p") c.jumbled_p = v.is_null() ? std::nullopt : std::optional<double>(v.get<double>());
    else if (k == "maxcut_exact_max_n") c.maxcut_exact_max_n = v.get<std::size_t>();
    else if (k == "hamilton_max_n") c.hamilton_max_n = v.get<std::size_t>();
    else if (k == "turan_t") c.turan_t = v.get<std::size_t>();
    else if (k == "subgraphs") c.subgraphs = v.get<std::vector<std::string>>();
    else if (k == "subgraph_work_cap") c.subgraph_work_cap = v.get<double>();
    else if (k == "connectivity_max_n") c.connectivity_max_n = v.get<std::size_t>();
    else if (k == "oracle_max_n") c.oracle_max_n = v.get<std::size_t>();
    else if (k == "turan_exact_max_m") c.turan_exact_max_m = v.get<std::size_t>();
    else if (k == "turan_node_budget") c.turan_node_budget = v.get<std::uint64_t>();
    else throw PreconditionError("unknown audit config key '" + k + "'");
  }
  return c;
}

// ---------------------------------------------------------------------------
// Findings and header.

json to_json(const Finding& f) {
  json j;
  j["id"] = f.id;
  j["relation"] = to_string(f.relation);
  j["lhs"] = num12(f.lhs);
  j["rhs"] = num12(f.rhs);
  j["slack"] = num12(f.slack);
  j["verdict"] = to_string(f.verdict);
  j["method"] = to_string(f.method);
  if (f.seed) j["seed"] = *f.seed;
  if (f.budget) j["budget"] = *f.budget;
  j["detail"] = f.detail;
  j["extra"] = f.extra;
  return j;
}

Finding finding_from_json(const json& j) {
  Finding f;
  f.id = j.at("id").get<std::string>();
  f.relation = relation_from_string(j.at("relation").get<std::string>());
  f.lhs = read_num(j.at("lhs"));
  f.rhs = read_num(j.at("rhs"));
  f.slack = read_num(j.at("slack"));
  f.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  f.method = method_from_string(j.at("method").get<std::string>());
  if (j.contains("seed")) f.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("budget")) f.budget = j.at("budget").get<std::uint64_t>();
  f.detail = j.value("detail", std::string{});
  f.extra = j.value("extra", json::object());
  return f;
}

json to_json(const AuditHeader& h) {
  json j;
  j["n"] = h.n;
  j["m"] = h.m;
  j["loops"] = h.loops;
  j["regular"] = h.regular;
  j["d"] = num12(h.d);
  j["min_degree"] = h.min_degree;
  j["max_degree"] = h.max_degree;
  j["lambda1"] = num12(h.lambda1);
  j["lambda"] = num12(h.lambda);
  j["lambda2"] = num12(h.lambda2);
  j["lambda_min"] = num12(h.lambda_min);
  j["spectrum_method"] = h.spectrum_method;
  return j;
}

namespace {

AuditHeader header_from_json(const json& j) {
  AuditHeader h;
  h.n = j.at("n").get<std::size_t>();
  h.m = j.at("m").get<std::size_t>();
  h.loops = j.at("loops").get<std::size_t>();
  h.regular = j.at("regular").get<bool>();
  h.d = read_num(j.at("d"));
  h.min_degree = j.at("min_degree").get<std::size_t>();
  h.max_degree = j.at("max_degree").get<std::size_t>();
  h.lambda1 = read_num(j.at("lambda1"));
  h.lambda = read_num(j.at("lambda"));
  h.lambda2 = read_num(j.at("lambda2"));
  h.lambda_min = read_num(j.at("lambda_min"));
  h.spectrum_method = j.at("spectrum_method").get<std::string>();
  return h;
}

json to_json(const ClaimCheck& c) {
  return json{{"name", c.name}, {"expected", c.expected}, {"observed", c.observed},
              {"verified", c.verified}, {"skipped", c.skipped}, {"detail", c.detail}};
}

ClaimCheck claim_from_json(const json& j) {
  ClaimCheck c;
  c.name = j.at("name").get<std::string>();
  c.expected = j.at("expected");
  c.observed = j.at("observed");
  c.verified = j.at("verified").get<bool>();
  c.skipped = j.value("skipped", false);
  c.detail = j.value("detail", std::string{});
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// Descriptors.

json to_json(const ConstructionDescriptor& d) {
  json j;
  j["family"] = d.family;
  j["params"] = d.params;
  if (d.n) j["n"] = *d.n;
  if (d.degree) j["degree"] = *d.degree;
  if (d.loops) j["loops"] = *d.loops;
  if (d.lambda)
    j["lambda"] = {{"relation", d.lambda->relation == LambdaClaim::Relation::eq ? "eq" : "le"},
                   {"value", num12(d.lambda->value)},
                   {"expr", d.lambda->expr}};
  if (d.srg) j["srg"] = {{"n", d.srg->n}, {"d", d.srg->d}, {"eta", d.srg->eta}, {"mu", d.srg->mu}};
  if (!d.nontrivial_eigenvalues.empty()) {
    json a = json::array();
    for (double x : d.nontrivial_eigenvalues) a.push_back(num12(x));
    j["nontrivial_eigenvalues"] = a;
  }
  if (d.nontrivial_abs) j["nontrivial_abs"] = num12(*d.nontrivial_abs);
  if (!d.predicted_spectrum.empty()) {
    json a = json::array();
    for (double x : d.predicted_spectrum) a.push_back(num12(x));
    j["predicted_spectrum"] = a;
  }
  if (!d.forbidden.empty()) {
    json a = json::array();
    for (const auto& f : d.forbidden) a.push_back(f.name());
    j["forbidden"] = a;
  }
  if (d.connected) j["connected"] = *d.connected;
  if (d.girth_min) j["girth_min"] = *d.girth_min;
  return j;
}

namespace {

ForbiddenClaim parse_forbidden(const std::string& s) {
  auto bad = [&] { return PreconditionError("claims: unrecognised forbidden subgraph '" + s + "'"); };
  auto num = [&](const std::string& t) -> std::size_t {
    if (t.empty() || t.size() > 6 || !std::all_of(t.begin(), t.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw bad();
    return std::stoul(t);
  };
  const std::string odd = "odd_cycles<=";
  if (s.rfind(odd, 0) == 0) return {ForbiddenClaim::Kind::odd_cycles_upto, num(s.substr(odd.size())), 0};
  if (s.size() < 2) throw bad();
  if (s[0] == 'C') return {ForbiddenClaim::Kind::cycle, num(s.substr(1)), 0};
  if (s[0] == 'K') {
    const auto comma = s.find(',');
    if (comma == std::string::npos) return {ForbiddenClaim::Kind::clique, num(s.substr(1)), 0};
    return {ForbiddenClaim::Kind::biclique, num(s.substr(1, comma - 1)), num(s.substr(comma + 1))};
  }
  throw bad();
}

}  // namespace

ConstructionDescriptor descriptor_from_json(const json& j) {
  if (!j.is_object()) throw PreconditionError("claims: top level must be an object");
  static const char* known[] = {"family", "params", "n", "degree", "loops", "lambda", "srg", "nontrivial_eigenvalues",
                                "nontrivial_abs", "predicted_spectrum", "forbidden", "connected", "girth_min",
                                "version", "config"};
  for (const auto& [k, v] : j.items()) {
    (void)v;
    if (std::find_if(std::begin(known), std::end(known), [&](const char* s) { return k == s; }) == std::end(known))
      throw PreconditionError("claims: unknown key '" + k + "'");
  }
  ConstructionDescriptor d;
  try {
    d.family = j.value("family", std::string{});
    d.params = j.value("params", json::object());
    if (j.contains("n")) d.n = j.at("n").get<std::size_t>();
    if (j.contains("degree")) d.degree = j.at("degree").get<std::size_t>();
    if (j.contains("loops")) d.loops = j.at("loops").get<std::size_t>();
    if (j.contains("lambda")) {
      const auto& L = j.at("lambda");
      LambdaClaim c;
      const auto rel = L.at("relation").get<std::string>();
      if (rel == "eq")
        c.relation = LambdaClaim::Relation::eq;
      else if (rel == "le")
        c.relation = LambdaClaim::Relation::le;
      else
        throw PreconditionError("claims: lambda.relation must be \"eq\" or \"le\"");
      c.value = read_num(L.at("value"));
      c.expr = L.value("expr", std::string{});
      d.lambda = c;
    }
    if (j.contains("srg")) {
      const auto& S = j.at("srg");
      d.srg = SrgParams{S.at("n").get<std::int64_t>(), S.at("d").get<std::int64_t>(), S.at("eta").get<std::int64_t>(),
                        S.at("mu").get<std::int64_t>()};
    }
    if (j.contains("nontrivial_eigenvalues"))
      for (const auto& x : j.at("nontrivial_eigenvalues")) d.nontrivial_eigenvalues.push_back(read_num(x));
    if (j.contains("nontrivial_abs")) d.nontrivial_abs = read_num(j.at("nontrivial_abs"));
    if (j.contains("predicted_spectrum"))
      for (const auto& x : j.at("predicted_spectrum")) d.predicted_spectrum.push_back(read_num(x));
    if (j.contains("forbidden"))
      for (const auto& x : j.at("forbidden")) d.forbidden.push_back(parse_forbidden(x.get<std::string>()));
    if (j.contains("connected")) d.connected = j.at("connected").get<bool>();
    if (j.contains("girth_min")) d.girth_min = j.at("girth_min").get<std::size_t>();
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("claims: schema violation: ") + e.what());
  }
  return d;
}

// ---------------------------------------------------------------------------
// Claims.

std::vector<ClaimCheck> verify_claims(const Graph& g, const ConstructionDescriptor& desc, const AuditHeader& h) {
  std::vector<ClaimCheck> out;
  auto add = [&](std::string name, json expected, json observed, bool ok, std::string detail = {}) {
    out.push_back({std::move(name), std::move(expected), std::move(observed), ok, false, std::move(detail)});
  };
  auto skip = [&](std::string name, json expected, std::string why) {
    out.push_back({std::move(name), std::move(expected), nullptr, false, true, std::move(why)});
  };

  if (desc.n) add("n", *desc.n, g.n(), g.n() == *desc.n);
  if (desc.degree) {
    const bool ok = g.n() > 0 && g.is_regular() && g.degree(0) == *desc.degree;
    add("degree", *desc.degree, g.is_regular() && g.n() ? json(g.degree(0)) : json("irregular"), ok);
  }
  if (desc.loops) add("loops", *desc.loops, g.loop_count(), g.loop_count() == *desc.loops);
  if (desc.lambda) {
    const auto& c = *desc.lambda;
    const bool eq = c.relation == LambdaClaim::Relation::eq;
    const bool ok = eq ? close(h.lambda, c.value, 1e-8) : within_tolerance(Relation::le, h.lambda, c.value);
    add(eq ? "lambda_eq" : "lambda_le", num12(c.value), num12(h.lambda), ok, c.expr);
  }
  if (desc.srg) {
    const auto got = srg_detect(g);
    json e = {desc.srg->n, desc.srg->d, desc.srg->eta, desc.srg->mu};
    json o = got ? json{got->n, got->d, got->eta, got->mu} : json("not strongly regular");
    add("srg", e, o, got && *got == *desc.srg);
  }

  const bool need_spec = !desc.nontrivial_eigenvalues.empty() || desc.nontrivial_abs || !desc.predicted_spectrum.empty();
  std::optional<Spectrum> spec;
  if (need_spec && g.n() > 0 && g.n() <= 1500) spec = full_spectrum(g, 1500);
  const double scale = std::max(1.0, h.lambda1);
  if (!desc.nontrivial_eigenvalues.empty()) {
    json e = json::array();
    for (double x : desc.nontrivial_eigenvalues) e.push_back(num12(x));
    if (!spec) {
      skip("nontrivial_eigenvalues", e, "dense spectrum unavailable at this size");
    } else {
      double worst = 0.0;
      for (std::size_t i = 1; i < spec->eigenvalues.size(); ++i) {
        double best = INFINITY;
        for (double x : desc.nontrivial_eigenvalues) best = std::min(best, std::abs(spec->eigenvalues[i] - x));
        worst = std::max(worst, best);
      }
      add("nontrivial_eigenvalues", e, json{{"max_distance", num12(worst)}}, worst <= 1e-8 * scale);
    }
  }
  if (desc.nontrivial_abs) {
    if (!spec) {
      skip("nontrivial_abs", num12(*desc.nontrivial_abs), "dense spectrum unavailable at this size");
    } else {
      double worst = 0.0;
      for (std::size_t i = 1; i < spec->eigenvalues.size(); ++i)
        worst = std::max(worst, std::abs(std::abs(spec->eigenvalues[i]) - *desc.nontrivial_abs));
      add("nontrivial_abs", num12(*desc.nontrivial_abs), json{{"max_distance", num12(worst)}}, worst <= 1e-8 * scale);
    }
  }
  if (!desc.predicted_spectrum.empty()) {
    if (!spec) {
      skip("predicted_spectrum", desc.predicted_spectrum.size(), "dense spectrum unavailable at this size");
    } else {
      bool ok = spec->eigenvalues.size() == desc.predicted_spectrum.size();
      double worst = 0.0;
      if (ok) {
        auto pred = desc.predicted_spectrum;
        std::sort(pred.rbegin(), pred.rend());
        for (std::size_t i = 0; i < pred.size(); ++i) worst = std::max(worst, std::abs(pred[i] - spec->eigenvalues[i]));
        ok = worst <= 1e-8 * scale;
      }
      add("predicted_spectrum", desc.predicted_spectrum.size(), json{{"max_distance", num12(worst)}}, ok);
    }
  }
  for (const auto& f : desc.forbidden) {
    bool present = false;
    std::string detail;
    switch (f.kind) {
      case ForbiddenClaim::Kind::clique:
        present = f.a == 3 ? !is_triangle_free(g) : contains_clique(g, f.a);
        break;
      case ForbiddenClaim::Kind::cycle:
        if (f.a < 3 || f.a > 8) {
          skip("free_of_" + f.name(), true, "cycle search supports lengths 3..8");
          continue;
        }
        present = contains_cycle(g, f.a);
        break;
      case ForbiddenClaim::Kind::biclique:
        present = contains_biclique(g, f.a, f.b);
        break;
      case ForbiddenClaim::Kind::odd_cycles_upto: {
        const std::size_t s = shortest_odd_cycle(g);
        present = s != 0 && s <= f.a;
        detail = "shortest odd cycle " + std::to_string(s);
        break;
      }
    }
    add("free_of_" + f.name(), true, !present, !present, detail);
  }
  if (desc.connected) add("connected", *desc.connected, is_connected(g), is_connected(g) == *desc.connected);
  if (desc.girth_min) {
    const std::size_t gi = girth(g);
    add("girth_min", *desc.girth_min, gi, gi == 0 || gi >= *desc.girth_min);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Report.

std::size_t AuditReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(findings.begin(), findings.end(), [](const Finding& f) { return f.verdict == Verdict::fail; }));
}

std::size_t AuditReport::claim_mismatches() const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [](const ClaimCheck& c) { return !c.verified && !c.skipped; }));
}

AuditReport full_report(const Graph& g, const AuditConfig& cfg, const std::optional<ConstructionDescriptor>& desc) {
  AuditReport rep;
  rep.config = cfg;
  rep.header = compute_header(g, cfg);
  const AuditHeader& h = rep.header;
  rep.graph = {{"n", g.n()}, {"m", g.m()}, {"loops", g.loop_count()}, {"edge_hash", edge_hash(g)}};
  if (desc) {
    rep.graph["family"] = desc->family;
    rep.graph["params"] = desc->params;
  }

  auto guarded = [&](const std::string& id, auto&& fn) {
    try {
      auto fs = fn();
      for (auto& f : fs) rep.findings.push_back(std::move(f));
    } catch (const PreconditionError& e) {
      Finding f;
      f.id = id;
      f.relation = Relation::margin;
      f.verdict = Verdict::hypothesis_not_met;
      f.detail = e.what();
      rep.findings.push_back(f);
    } catch (const std::exception& e) {
      Finding f;
      f.id = id;
      f.relation = Relation::margin;
      f.verdict = Verdict::inconclusive;
      f.detail = e.what();
      rep.findings.push_back(f);
    }
  };

  if (g.n() > 0) {
    guarded(h.regular ? "mixing.regular" : "mixing.irregular",
            [&] { return audit_mixing(g, h, MixingMode::exhaustive, cfg); });
    guarded("jumbledness.estimate", [&] { return audit_jumbledness(g, cfg); });
    guarded("connectivity.vertex_spectral", [&] { return audit_connectivity(g, h, cfg); });
    guarded("independence.spectral_upper", [&] { return audit_alpha_chi(g, h, cfg); });
    guarded("maxcut.spectral", [&] { return std::vector<Finding>{audit_maxcut(g, h, cfg)}; });
    for (const auto& name : cfg.subgraphs)
      guarded("subgraphs." + name + ".count",
              [&] { return audit_subgraphs(g, h, named_pattern(name), name, {}, cfg); });
    guarded("hamiltonicity.chvatal_erdos", [&] { return audit_hamiltonicity(g, h, cfg); });
    guarded("turan.K" + std::to_string(cfg.turan_t) + ".greedy_partition",
            [&] { return audit_turan(g, h, cfg.turan_t, cfg); });
  }
  std::stable_sort(rep.findings.begin(), rep.findings.end(),
                   [](const Finding& a, const Finding& b) { return a.id < b.id; });
  if (desc) rep.claims = verify_claims(g, *desc, h);
  return rep;
}

json to_json(const AuditReport& r) {
  json j;
  j["version"] = kVersion;
  j["config"] = to_json(r.config);
  j["graph"] = r.graph;
  j["header"] = to_json(r.header);
  json fs = json::array();
  std::map<std::string, std::size_t> tally;
  for (const auto& f : r.findings) {
    fs.push_back(to_json(f));
    ++tally[to_string(f.verdict)];
  }
  j["findings"] = fs;
  json cs = json::array();
  for (const auto& c : r.claims) cs.push_back(to_json(c));
  j["claims"] = cs;
  j["summary"] = {{"findings", r.findings.size()},
                  {"violations", r.violations()},
                  {"claim_mismatches", r.claim_mismatches()},
                  {"verdicts", tally}};
  return j;
}

AuditReport report_from_json(const json& j) {
  AuditReport r;
  try {
    r.config = audit_config_from_json(j.at("config"));
    r.graph = j.at("graph");
    r.header = header_from_json(j.at("header"));
    for (const auto& f : j.at("findings")) r.findings.push_back(finding_from_json(f));
    for (const auto& c : j.value("claims", json::array())) r.claims.push_back(claim_from_json(c));
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("report: schema violation: ") + e.what());
  }
  return r;
}

}  // namespace pseudograph
