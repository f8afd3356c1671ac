#pragma once

// Verification suites: each compares a recursion or enumeration against a
// closed form (or two independent computations against each other) over a
// range of n and reports one row per comparison.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace klbraid {

enum class VerifyMode { kClosedForm, kExhaustive, kBoth };

struct SuiteOptions {
  std::optional<int> max_n;  // suite default when unset
  VerifyMode mode = VerifyMode::kBoth;
};

struct ReportRow {
  std::string suite;
  std::string parameter;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct SuiteInfo {
  std::string id;
  std::string summary;
  int default_max_n;
  int max_n_cap;  // larger --max-n raises ResourceError
};

const std::vector<SuiteInfo>& verify_suites();
// Throws std::invalid_argument for an unknown id and ResourceError when
// max_n exceeds the suite cap.
std::vector<ReportRow> run_suite(std::string_view id, const SuiteOptions& options);

}  // namespace klbraid
