#include "qsphere/qsphere.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

struct Options {
  std::string suite;
  int n = 2;
  int max_deg = 4;
  std::string mode;
  std::string v = "2";
  std::string sigma = "both";
  std::string out;
  int threads = 1;
};

using ConfigPtr = std::unique_ptr<qs_config, decltype(&qs_config_free)>;
using ReportPtr = std::unique_ptr<qs_report, decltype(&qs_report_free)>;

int usage(const std::string& msg) {
  std::cerr << "qsphere: " << msg << "\n";
  return QS_USAGE;
}

int run(const Options& o) {
  ConfigPtr cfg(qs_config_new(), qs_config_free);
  if (!cfg) return QS_INTERNAL;
  if (qs_config_set_int(cfg.get(), "n", o.n) || qs_config_set_int(cfg.get(), "max_deg", o.max_deg) ||
      qs_config_set_int(cfg.get(), "threads", o.threads) || qs_config_set_str(cfg.get(), "v", o.v.c_str()) ||
      qs_config_set_str(cfg.get(), "sigma", o.sigma.c_str()) ||
      (!o.mode.empty() && qs_config_set_str(cfg.get(), "mode", o.mode.c_str())))
    return usage(qs_last_error());

  qs_report* raw = nullptr;
  qs_status st = qs_run(cfg.get(), o.suite.c_str(), &raw);
  ReportPtr report(raw, qs_report_free);
  if (!report) {
    std::cerr << "qsphere: " << qs_last_error() << "\n";
    return st;
  }
  if (st == QS_USAGE) return usage(qs_last_error());

  const std::string json = qs_report_json(report.get());
  if (o.out.empty()) {
    std::cout << json << "\n";
  } else {
    std::ofstream f(o.out);
    if (!f) return usage("cannot write " + o.out);
    f << json << "\n";
  }

  auto j = nlohmann::ordered_json::parse(json);
  std::size_t total = 0, failed = 0;
  if (j.contains("checks"))
    for (const auto& c : j["checks"]) {
      ++total;
      if (c["status"] != "pass") ++failed;
    }
  std::cerr << o.suite << ": " << (st == QS_OK ? "PASS" : "FAIL") << " (" << total - failed << "/" << total
            << " checks)";
  if (j.contains("error")) std::cerr << " " << j["error"].get<std::string>();
  std::cerr << "\n";
  return st;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification harness for the quantum sphere construction"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qs_version());

  Options o;
  size_t count = 0;
  const char* const* names = qs_suite_names(&count);
  std::vector<std::string> suites(names, names + count);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suites));
  verify->add_option("--n", o.n, "Rank")->envname("QSPHERE_N")->capture_default_str();
  verify->add_option("--max-deg", o.max_deg, "Degree bound")->envname("QSPHERE_MAX_DEG")->capture_default_str();
  verify->add_option("--mode", o.mode, "generic or specialized")
      ->envname("QSPHERE_MODE")
      ->check(CLI::IsMember({"generic", "specialized"}));
  verify->add_option("--v", o.v, "Numeric point P/Q")->envname("QSPHERE_V")->capture_default_str();
  verify->add_option("--sigma", o.sigma, "+1, -1 or both")
      ->envname("QSPHERE_SIGMA")
      ->check(CLI::IsMember({"+1", "-1", "1", "both"}))
      ->capture_default_str();
  verify->add_option("--out", o.out, "Write the JSON report here")->envname("QSPHERE_OUT");
  verify->add_option("--threads", o.threads, "Worker threads")->envname("QSPHERE_THREADS")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : QS_USAGE;
  }
  return run(o);
}
