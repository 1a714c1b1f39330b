#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "su3sb/report.hpp"

namespace su3sb {

struct VerifyOptions {
  /// Occupation / degree bound shared by every suite.
  int max_total = 5;
  /// Negative control: build the SU(3) generators from a λ table with one sign flipped.
  bool inject_fault = false;
};

/// "oscillator", "su2", "algebra", "sp2r", "irreps", "isb", "ladder".
const std::vector<std::string>& suite_names();

bool is_suite_name(std::string_view name);

/// Runs one suite, or every suite for "all". Throws std::invalid_argument on an unknown name.
VerificationReport run_suite(std::string_view name, const VerifyOptions& options);

VerificationReport oscillator_suite(int max_total);
VerificationReport su2_suite(int max_total);
VerificationReport algebra_suite(int max_total, bool inject_fault = false);
VerificationReport sp2r_suite(int max_total);
VerificationReport irreps_suite(int max_total);
VerificationReport isb_suite(int max_total);
VerificationReport ladder_suite(int max_total);

}  // namespace su3sb
