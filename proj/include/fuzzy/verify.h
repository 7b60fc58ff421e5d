#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fuzzy {

struct SuiteResult {
  std::string name;
  int checks = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

/// Names accepted by run_suite.
const std::vector<std::string>& suite_names();

/// Runs an invariant suite up to basis degree nmax. Throws UsageError for an
/// unknown name.
SuiteResult run_suite(const std::string& name, int nmax, std::uint64_t seed);

}  // namespace fuzzy
