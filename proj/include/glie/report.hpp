#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace glie {

/// Outcome of one mechanical check. The first failure is exported as the
/// counterexample; the rest are only counted.
struct CheckReport {
  CheckReport(std::string check_name, std::string case_name)
      : check(std::move(check_name)), case_id(std::move(case_name)) {}

  std::string check;
  std::string case_id;
  bool pass = true;
  nlohmann::json details = nlohmann::json::object();
  std::vector<nlohmann::json> failures;

  void fail(nlohmann::json what) {
    pass = false;
    failures.push_back(std::move(what));
  }

  nlohmann::json to_json() const {
    nlohmann::json j{{"check", check}, {"case", case_id}, {"pass", pass}, {"details", details}};
    if (!failures.empty()) {
      j["counterexample"] = failures.front();
      j["failure_count"] = failures.size();
    }
    return j;
  }
};

}  // namespace glie
