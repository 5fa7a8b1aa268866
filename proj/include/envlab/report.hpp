#ifndef ENVLAB_REPORT_HPP
#define ENVLAB_REPORT_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "envlab/contract.hpp"
#include "envlab/spec_parser.hpp"

namespace envlab {

struct SuiteParams {
  long cutoff = 4;         // truncation W
  long degree = 3;         // polynomial degree D
  long weight_cutoff = 8;  // weight-sequence validation cutoff
  std::optional<BumpFamily> bump;
};

struct Report {
  nlohmann::ordered_json doc;
  long passed = 0, failed = 0, skipped = 0;

  /// 0 all pass; 1 failures; 3 skips with no failures.
  int exit_code() const {
    if (failed > 0) return 1;
    if (skipped > 0) return 3;
    return 0;
  }
  std::string to_string() const { return doc.dump(2) + "\n"; }
};

extern const char* const kSuiteNames[];  // null-terminated list
bool suite_known(const std::string& name);

/// Runs one verification suite against a parsed algebra. Suites:
/// structure, series, hopf, cohomology, koszul, parallelize, contract,
/// weights, all. Deterministic output for fixed input and parameters.
Report run_suite(const AlgebraSpec& spec, const std::string& suite, const SuiteParams& params);

}  // namespace envlab

#endif
