#pragma once

// Exact checks of the Abel binomial identity, its derivatives, and the
// specializations and linear combinations used to evaluate the desert and
// inverse-KL leading-coefficient sums.
//
// Each identity has a stable string id. Sides are evaluated in Rational; a
// term whose integer prefactor is zero contributes zero without evaluating
// its powers. Any other zero base under a negative power is a guard
// violation and the case is reported as skipped, never as passed.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "klbraid/exact.hpp"

namespace klbraid {

// A_m(x; a) = x (x - a m)^{m-1}, with A_0 = 1.
Rational abel(long m, const Rational& x, const Rational& a);

struct IdentityParams {
  std::optional<long> m;
  std::optional<long> n;
  std::optional<long> x;
  std::optional<long> y;
  std::optional<long> a;

  std::string to_string() const;  // "m=3,x=1,y=-2,a=0"
};

enum class CaseStatus { kPass, kFail, kSkip };
std::string to_string(CaseStatus status);

struct IdentityCase {
  std::string id;
  IdentityParams params;
  Rational lhs;
  Rational rhs;
  CaseStatus status = CaseStatus::kSkip;
  std::string note;  // guard reason for skips, detail for chains

  bool passed() const { return status == CaseStatus::kPass; }
};

struct IdentityInfo {
  std::string id;
  std::string index_name;  // "m" or "n"
  long min_index = 0;      // smallest index inside the guard
  bool free_parameters = false;  // takes x, y, a
  std::string statement;
};

const std::vector<IdentityInfo>& identity_catalog();
const IdentityInfo& identity_info(std::string_view id);  // throws std::invalid_argument

// Evaluates one identity. Free-parameter identities read m, x, y, a; the
// rest read their index ("m" or "n").
IdentityCase check_identity(std::string_view id, const IdentityParams& params);

// Linear-combination and specialization links between catalog entries at a
// single index value (m for the inverse-KL chain, n for the desert chain).
std::vector<IdentityCase> check_chains(long index);

// Confirms that each derivative identity's left side is the derivative of
// its parent's left side: the parent is interpolated exactly through m+1
// guarded points in the differentiated variable and compared at m+2 more.
std::vector<IdentityCase> check_derivatives(long m, long fixed_first, long a);

struct CatalogGrid {
  long max_index = 40;      // m or n upper bound for indexed identities
  long free_max_m = 40;     // m upper bound for x, y, a identities
  long free_bound = 5;      // |x|, |y|, |a| <= free_bound
  long derivative_max_m = 10;
  long derivative_bound = 3;
};

struct CatalogSummary {
  int passed = 0;
  int failed = 0;
  int skipped = 0;
};

std::vector<IdentityCase> run_catalog(const CatalogGrid& grid);
CatalogSummary summarize(const std::vector<IdentityCase>& cases);

}  // namespace klbraid
