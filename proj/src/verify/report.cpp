#include "verify/report.hpp"

namespace qsphere {

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t k = 0;
  for (const auto& c : checks) k += !c.pass;
  return k;
}

Json Report::to_json() const {
  Json j;
  j["suite"] = suite;
  j["params"] = params;
  j["mode"] = mode;
  Json cs = Json::array();
  for (const auto& c : checks) {
    Json cj;
    cj["name"] = c.name;
    cj["status"] = c.pass ? "pass" : "fail";
    cj["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
    cs.push_back(std::move(cj));
  }
  j["checks"] = std::move(cs);
  if (!warnings.empty()) j["warnings"] = warnings;
  j["elapsed_ms"] = elapsed_ms;
  return j;
}

} // namespace qsphere
