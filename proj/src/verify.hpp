#pragma once

#include <string>
#include <vector>

#include "arith.hpp"

namespace recip {

struct VerifyResult {
  std::string suite;
  long cases = 0;
  std::vector<std::string> failures;  // capped; see failure_count
  long failure_count = 0;

  bool passed() const { return failure_count == 0; }
};

/// Known suites: qr, product, oracle, rousseau, cubic, quartic, hensel,
/// characters. A non-positive bound selects the suite's default sweep.
VerifyResult verify_suite(const std::string& name, long bound = 0);

std::vector<std::string> verify_suite_names();

}  // namespace recip
