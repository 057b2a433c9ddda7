#include "verify/runner.hpp"

#include "errors.hpp"
#include "forms/form_inverse.hpp"
#include "plane/plane_suites.hpp"
#include "verify/verma_suites.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>

namespace qsphere {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"factorization", "span",      "normalizer",    "harish",
                                              "serre-radical", "xyz",       "irreducibility", "f-inverse",
                                              "module-algebra", "delta-inv", "invariant-dims", "star",
                                              "all"};
  return names;
}

Scalar parse_v0(const std::string& text) {
  auto parse_int = [&](std::string_view s) {
    long long x = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || p != s.data() + s.size() || s.empty()) throw UsageError("cannot parse --v value '" + text + "'");
    return x;
  };
  std::string_view s = text;
  auto slash = s.find('/');
  long long p = parse_int(s.substr(0, slash));
  long long q = slash == std::string_view::npos ? 1 : parse_int(s.substr(slash + 1));
  if (q == 0) throw UsageError("--v has a zero denominator");
  Scalar v = Scalar::rational(p, q);
  if (v.is_zero() || v.is_one() || (-v).is_one()) throw UsageError("--v must avoid 0 and +-1");
  return v;
}

void validate(const SuiteConfig& cfg) {
  if (cfg.n < 1 || cfg.n > kMaxRank) throw UsageError("--n must lie in 1.." + std::to_string(kMaxRank));
  if (cfg.max_deg < 0) throw UsageError("--max-deg must be non-negative");
  if (cfg.mode && *cfg.mode != "generic" && *cfg.mode != "specialized") throw UsageError("--mode is generic or specialized");
  if (cfg.sigma != "+1" && cfg.sigma != "-1" && cfg.sigma != "both" && cfg.sigma != "1")
    throw UsageError("--sigma is +1, -1 or both");
  if (cfg.threads < 1) throw UsageError("--threads must be positive");
  if (cfg.v0.is_zero() || cfg.v0.is_one() || (-cfg.v0).is_one()) throw UsageError("--v must avoid 0 and +-1");
}

namespace {

std::vector<int> branches(const SuiteConfig& cfg) {
  if (cfg.sigma == "both") return {1, -1};
  return {cfg.sigma == "-1" ? -1 : 1};
}

void require_mode(const SuiteConfig& cfg, const char* wanted, const std::string& suite) {
  if (cfg.mode && *cfg.mode != wanted) throw UsageError(suite + " runs in " + wanted + " mode");
}

void require_delta(const SuiteConfig& cfg, const std::string& suite) {
  if (cfg.n < 2) throw UsageError(suite + " uses delta root vectors and needs n >= 2");
}

Scalar second_point(const Scalar& v0) { return v0 == Scalar(3) ? Scalar(5) : Scalar(3); }

std::string sigma_label(int s) { return s > 0 ? "+1" : "-1"; }

// Runs `one` per branch; with two branches the checks are merged under labels.
Report per_branch(const SuiteConfig& cfg, const std::function<Report(int)>& one) {
  auto bs = branches(cfg);
  if (bs.size() == 1) return one(bs[0]);
  Report merged;
  for (int s : bs) {
    Report r = one(s);
    if (merged.suite.empty()) {
      merged.suite = r.suite;
      merged.params = r.params;
    }
    for (auto& c : r.checks) merged.add("[sigma=" + sigma_label(s) + "] " + c.name, c.pass, c.witness);
    for (auto& w : r.warnings) merged.warnings.push_back("[sigma=" + sigma_label(s) + "] " + w);
    for (auto& [k, v] : r.params.items())
      if (!merged.params.contains(k) || merged.params[k] != v) merged.params[k + " [sigma=" + sigma_label(s) + "]"] = v;
    merged.elapsed_ms += r.elapsed_ms;
    merged.fatal = merged.fatal || r.fatal;
    merged.mode = r.mode;
  }
  merged.params["sigma"] = "both";
  auto pos = merged.mode.find("sigma=");
  if (pos != std::string::npos) merged.mode = merged.mode.substr(0, pos) + "sigma=both)";
  return merged;
}

Report run_serre(const SuiteConfig& cfg, int bound) {
  require_mode(cfg, "generic", "serre-radical");
  require_delta(cfg, "serre-radical");
  return verify_serre_radical({cfg.n, SpecMode::generic()}, bound);
}

Report run_irreducibility(const SuiteConfig& cfg) {
  require_mode(cfg, "specialized", "irreducibility");
  return per_branch(cfg, [&](int s) { return verify_irreducibility(cfg.n, {cfg.v0, second_point(cfg.v0)}, s, cfg.max_deg, cfg.threads); });
}

struct Prereq {
  std::string name;
  Report report;
};

// Runs a single named suite, including prerequisite suites whose reports are
// attached under "prerequisites".
RunResult run_one(const std::string& name, const SuiteConfig& cfg) {
  std::vector<Prereq> prereqs;
  auto gate = [&](const std::string& pname, Report r) {
    bool ok = r.passed();
    prereqs.push_back({pname, std::move(r)});
    return ok;
  };
  auto finish = [&](Report r) {
    RunResult out;
    out.report = r.to_json();
    if (!prereqs.empty()) {
      Json pre = Json::array();
      for (const auto& p : prereqs) pre.push_back(p.report.to_json());
      out.report["prerequisites"] = pre;
    }
    out.exit_code = r.passed() ? kExitPass : (r.fatal ? kExitInternal : kExitFail);
    return out;
  };
  auto unmet = [&](const std::string& what) {
    Report r;
    r.suite = name;
    r.mode = "n/a";
    r.add("prerequisite " + what, false, "prerequisite failed; suite not run");
    RunResult out = finish(r);
    out.exit_code = kExitInternal;
    return out;
  };
  const int oracle_bound = cfg.max_deg + 1;

  if (name == "factorization") {
    require_mode(cfg, "specialized", name);
    return finish(per_branch(cfg, [&](int s) { return verify_factorization({cfg.n, SpecMode::lambda(s)}, cfg.max_deg); }));
  }
  if (name == "harish") {
    require_mode(cfg, "specialized", name);
    return finish(per_branch(cfg, [&](int s) { return verify_harish({cfg.n, SpecMode::lambda(s)}, cfg.max_deg); }));
  }
  if (name == "serre-radical") return finish(run_serre(cfg, cfg.max_deg));
  if (name == "xyz") {
    require_mode(cfg, "generic", name);
    return finish(verify_xyz({cfg.n, SpecMode::generic()}, 120, 1));
  }
  if (name == "irreducibility") {
    require_mode(cfg, "specialized", name);
    if (cfg.n >= 2 && !gate("serre-radical", run_serre(SuiteConfig{cfg.n, cfg.max_deg, std::nullopt, cfg.v0, cfg.sigma, cfg.threads}, oracle_bound)))
      return unmet("serre-radical");
    return finish(run_irreducibility(cfg));
  }
  if (name == "span" || name == "normalizer") {
    require_mode(cfg, "specialized", name);
    if (name == "normalizer") require_delta(cfg, name);
    SuiteConfig g = cfg;
    g.mode.reset();
    if (cfg.n >= 2 && !gate("serre-radical", run_serre(g, oracle_bound))) return unmet("serre-radical");
    return finish(per_branch(cfg, [&](int s) {
      IrreducibleModule L(cfg.n, SpecMode::lambda(s));
      return name == "span" ? verify_span_action(L, cfg.max_deg) : verify_normalizer(L, cfg.max_deg);
    }));
  }
  if (name == "f-inverse") {
    require_mode(cfg, "specialized", name);
    SuiteConfig g = cfg;
    g.mode.reset();
    if (cfg.n >= 2 && !gate("serre-radical", run_serre(g, oracle_bound))) return unmet("serre-radical");
    if (!gate("irreducibility", run_irreducibility(cfg))) return unmet("irreducibility");
    FTensor F = build_F(cfg.n, cfg.max_deg);
    RunResult out = finish(per_branch(cfg, [&](int s) { return verify_F_inverse(F, {cfg.n, SpecMode::lambda(s)}); }));
    out.report["F"] = F.to_json();
    return out;
  }
  if (name == "module-algebra") return finish(verify_module_algebra(cfg.n, cfg.max_deg, 200, 1));
  if (name == "delta-inv") {
    require_delta(cfg, name);
    return finish(verify_delta_inv(cfg.n, cfg.max_deg));
  }
  if (name == "invariant-dims") {
    require_delta(cfg, name);
    return finish(verify_invariant_dims(cfg.n, cfg.max_deg, {cfg.v0, second_point(cfg.v0)}));
  }
  if (name == "star") {
    require_delta(cfg, name);
    return finish(verify_star(cfg.n, std::max(1, cfg.max_deg / 2)));
  }
  throw UsageError("unknown suite '" + name + "'");
}

RunResult run_all(const SuiteConfig& cfg) {
  Stopwatch sw;
  // dependency order: oracle soundness first, then the irreducibility
  // certificate, then everything that relies on them
  const std::vector<std::string> order{"serre-radical", "xyz",       "irreducibility", "factorization", "harish",
                                       "span",          "normalizer", "f-inverse",     "module-algebra", "delta-inv",
                                       "invariant-dims", "star"};
  const std::set<std::string> oracle_dependent{"irreducibility", "span", "normalizer", "f-inverse"};
  Json j;
  j["suite"] = "all";
  j["params"] = {{"n", cfg.n}, {"max_deg", cfg.max_deg}, {"sigma", cfg.sigma}, {"v0", cfg.v0.to_string()}};
  j["mode"] = "mixed";
  Json checks = Json::array(), suites = Json::array();
  int worst = kExitPass;
  bool oracle_ok = true;
  for (const auto& name : order) {
    if (cfg.n < 2 && (name == "serre-radical" || name == "normalizer" || name == "delta-inv" || name == "invariant-dims" ||
                      name == "star"))
      continue;
    if (cfg.n < 3 && name == "xyz") continue;
    Json c;
    c["name"] = name;
    if (oracle_dependent.count(name) && !oracle_ok) {
      c["status"] = "fail";
      c["witness"] = "skipped: serre-radical failed";
      checks.push_back(c);
      worst = std::max(worst, static_cast<int>(kExitInternal));
      continue;
    }
    SuiteConfig sc = cfg;
    sc.mode.reset();
    RunResult r;
    if (name == "serre-radical") r = run_one(name, [&] {
        SuiteConfig s = sc;
        s.max_deg = cfg.max_deg + 1;
        return s;
      }());
    else r = run_one(name, sc);
    if (r.report.contains("prerequisites")) r.report.erase("prerequisites");
    if (name == "serre-radical" && r.exit_code != kExitPass) oracle_ok = false;
    c["status"] = r.exit_code == kExitPass ? "pass" : "fail";
    c["witness"] = r.exit_code == kExitPass ? Json(nullptr) : Json("exit code " + std::to_string(r.exit_code));
    checks.push_back(c);
    suites.push_back(r.report);
    worst = std::max(worst, r.exit_code);
  }
  j["checks"] = checks;
  j["suites"] = suites;
  j["elapsed_ms"] = sw.ms();
  return {worst, j};
}

} // namespace

RunResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  try {
    validate(cfg);
    if (name == "all") return run_all(cfg);
    return run_one(name, cfg);
  } catch (const UsageError& e) {
    Json j;
    j["suite"] = name;
    j["error"] = e.what();
    return {kExitUsage, j};
  } catch (const std::exception& e) {
    Json j;
    j["suite"] = name;
    j["error"] = e.what();
    return {kExitInternal, j};
  }
}

} // namespace qsphere
