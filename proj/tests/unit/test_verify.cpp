#include <gtest/gtest.h>

#include "klbraid/exact.hpp"
#include "klbraid/verify.hpp"

using namespace klbraid;

TEST(Verify, EverySuitePassesAtItsDefaults) {
  for (const auto& info : verify_suites()) {
    if (info.id == "identities") continue;  // covered below with a smaller grid
    auto rows = run_suite(info.id, {});
    EXPECT_FALSE(rows.empty()) << info.id;
    for (const auto& row : rows) {
      EXPECT_TRUE(row.pass) << row.suite << " " << row.parameter << ": " << row.lhs << " vs " << row.rhs;
      EXPECT_EQ(row.suite, info.id);
    }
  }
}

TEST(Verify, IdentitiesSuiteAtReducedRange) {
  auto rows = run_suite("identities", {.max_n = 12});
  EXPECT_FALSE(rows.empty());
  for (const auto& row : rows) EXPECT_TRUE(row.pass) << row.parameter << ": " << row.lhs;
}

TEST(Verify, ModesRestrictTheRows) {
  auto closed = run_suite("prop2.7", {.max_n = 6, .mode = VerifyMode::kClosedForm});
  auto both = run_suite("prop2.7", {.max_n = 6, .mode = VerifyMode::kBoth});
  EXPECT_LT(closed.size(), both.size());
  for (const auto& row : both) EXPECT_TRUE(row.pass);
}

TEST(Verify, Errors) {
  EXPECT_THROW(run_suite("no-such-suite", {}), std::invalid_argument);
  for (const auto& info : verify_suites()) {
    EXPECT_LE(info.default_max_n, info.max_n_cap) << info.id;
    EXPECT_THROW(run_suite(info.id, {.max_n = info.max_n_cap + 1}), ResourceError) << info.id;
  }
  EXPECT_THROW(run_suite("parity", {.max_n = 0}), std::invalid_argument);
}
