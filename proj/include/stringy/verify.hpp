#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stringy/io.hpp"
#include "stringy/semigroup.hpp"

namespace stringy {

struct SuiteResult {
  std::string suite;
  std::string fixture;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<SuiteResult> results;
  bool passed() const;
};

/// Runs every invariant suite on the named bundled fixtures ("all" selects
/// every fixture). Suites that throw are recorded as failures with the
/// error text. Throws InvalidArgument for unknown fixture names.
VerifyReport run_verification(const std::vector<std::string>& fixtures, std::uint64_t seed = 0,
                              const FieldSpec& field = {});

Json to_json(const VerifyReport& report);

}  // namespace stringy
