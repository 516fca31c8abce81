#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qtsym/qseries.hpp"

namespace qtsym {

struct SuiteCase {
  std::string identity;    // stable id of the property being checked
  std::string parameters;  // rendered parameter choices
  int cap = 0;             // truncation / search bound used by the case
  std::function<VerifyResult()> run;
};

struct CaseResult {
  std::string identity;
  std::string parameters;
  int cap = 0;
  bool pass = false;
  double elapsed_ms = 0;
  std::string failing_coefficient;  // empty when the case passes
};

struct SuiteReport {
  std::string suite;
  bool all_pass = true;
  std::vector<CaseResult> cases;  // sorted by (identity, parameters)
};

std::vector<std::string> suite_names();

// Case list for one suite ("all" concatenates every suite).  The seed feeds
// the rational-point sampler; cap bounds series truncation and search boxes.
std::vector<SuiteCase> build_suite(const std::string& name, std::uint64_t seed, int cap);

// Cases are independent, so the runner may execute them in parallel; shared
// memo caches are lock-protected and the report order is deterministic.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, int cap,
                      bool parallel = true);

std::string report_json(const SuiteReport& r);
std::string report_summary(const SuiteReport& r);

}  // namespace qtsym
