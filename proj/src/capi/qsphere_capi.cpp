#include "qsphere/qsphere.h"

#include "errors.hpp"
#include "verify/runner.hpp"

#include <string>
#include <vector>

struct qs_config {
  qsphere::SuiteConfig cfg;
};

struct qs_report {
  qs_status status;
  std::string json;
};

namespace {

thread_local std::string last_error;

qs_status fail(qs_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

} // namespace

extern "C" {

const char* qs_version(void) { return "0.1.0"; }

const char* const* qs_suite_names(size_t* count) {
  static const std::vector<const char*> names = [] {
    std::vector<const char*> out;
    for (const auto& s : qsphere::suite_names()) out.push_back(s.c_str());
    return out;
  }();
  if (count) *count = names.size();
  return names.data();
}

const char* qs_last_error(void) { return last_error.c_str(); }

qs_config* qs_config_new(void) {
  try {
    return new qs_config{};
  } catch (...) {
    return nullptr;
  }
}

void qs_config_free(qs_config* cfg) { delete cfg; }

qs_status qs_config_set_int(qs_config* cfg, const char* key, long value) {
  if (!cfg || !key) return fail(QS_USAGE, "null argument");
  std::string k = key;
  if (k == "n") cfg->cfg.n = static_cast<int>(value);
  else if (k == "max_deg") cfg->cfg.max_deg = static_cast<int>(value);
  else if (k == "threads") cfg->cfg.threads = static_cast<int>(value);
  else return fail(QS_USAGE, "unknown integer key '" + k + "'");
  last_error.clear();
  return QS_OK;
}

qs_status qs_config_set_str(qs_config* cfg, const char* key, const char* value) {
  if (!cfg || !key || !value) return fail(QS_USAGE, "null argument");
  std::string k = key, v = value;
  try {
    if (k == "mode") {
      if (v != "generic" && v != "specialized") return fail(QS_USAGE, "mode is generic or specialized");
      cfg->cfg.mode = v;
    } else if (k == "v") {
      cfg->cfg.v0 = qsphere::parse_v0(v);
    } else if (k == "sigma") {
      if (v != "+1" && v != "-1" && v != "both" && v != "1") return fail(QS_USAGE, "sigma is +1, -1 or both");
      cfg->cfg.sigma = v == "1" ? "+1" : v;
    } else {
      return fail(QS_USAGE, "unknown string key '" + k + "'");
    }
  } catch (const qsphere::UsageError& e) {
    return fail(QS_USAGE, e.what());
  } catch (const std::exception& e) {
    return fail(QS_INTERNAL, e.what());
  }
  last_error.clear();
  return QS_OK;
}

qs_status qs_run(const qs_config* cfg, const char* suite, qs_report** out) {
  if (!cfg || !suite || !out) return fail(QS_USAGE, "null argument");
  *out = nullptr;
  try {
    auto r = qsphere::run_suite(suite, cfg->cfg);
    auto* rep = new qs_report{static_cast<qs_status>(r.exit_code), r.report.dump(2)};
    *out = rep;
    if (r.report.contains("error")) last_error = r.report["error"].get<std::string>();
    else last_error.clear();
    return rep->status;
  } catch (const std::exception& e) {
    return fail(QS_INTERNAL, e.what());
  }
}

const char* qs_report_json(const qs_report* report) { return report ? report->json.c_str() : ""; }

qs_status qs_report_status(const qs_report* report) { return report ? report->status : QS_USAGE; }

void qs_report_free(qs_report* report) { delete report; }

} // extern "C"
