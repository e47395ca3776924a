#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "planar/report.hpp"

namespace planar {

/// Parameters shared by the randomized property suites. Zero means "use the
/// suite default".
struct SuiteOptions {
  std::uint64_t seed = 0;
  int degree = 0;
  int alphabet = 0;
  int instances = 0;
  int max_length = 0;  // theorem suite: longest derivative word
};

struct SuiteResult {
  std::string suite;
  SuiteOptions options;  // with defaults filled in
  std::vector<IdentityReport> reports;
  std::vector<std::string> notes;

  bool passed() const {
    for (const auto& r : reports)
      if (!r.passed()) return false;
    return true;
  }
};

/// products, moments, legendre, two-point, three-point, theorem, univariate.
const std::vector<std::string>& suite_names();

/// Runs one suite on random exact instances drawn from `options.seed`.
/// Throws PreconditionError for an unknown suite or invalid options.
SuiteResult run_suite(std::string_view name, SuiteOptions options);

std::string suite_to_json(const SuiteResult& result);

}  // namespace planar
