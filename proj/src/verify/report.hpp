#pragma once

#include "json.hpp"

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace qsphere {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  bool pass = false;
  std::optional<std::string> witness;
};

struct Report {
  std::string suite;
  Json params = Json::object();
  std::string mode;
  std::vector<Check> checks;
  std::vector<std::string> warnings;
  std::int64_t elapsed_ms = 0;
  // set when a failure invalidates suites that depend on this one
  bool fatal = false;

  void add(std::string name, bool pass, std::optional<std::string> witness = std::nullopt) {
    checks.push_back({std::move(name), pass, std::move(witness)});
  }
  bool passed() const;
  std::size_t failures() const;
  Json to_json() const;
};

class Stopwatch {
public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

} // namespace qsphere
