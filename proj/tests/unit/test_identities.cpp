#include <gtest/gtest.h>

#include <map>

#include "klbraid/identities.hpp"

using namespace klbraid;

TEST(Abel, Polynomial) {
  EXPECT_EQ(abel(0, 5, 2), 1);
  EXPECT_EQ(abel(1, 5, 2), 5);
  EXPECT_EQ(abel(2, 3, 1), 3);
  EXPECT_EQ(abel(3, 2, 1), 2);
  EXPECT_EQ(abel(3, Rational(1, 2), 0), Rational(1, 8));
}

TEST(Catalog, Metadata) {
  const auto& catalog = identity_catalog();
  EXPECT_EQ(catalog.size(), 20u);
  EXPECT_TRUE(identity_info("abel-binomial").free_parameters);
  EXPECT_EQ(identity_info("q-target").index_name, "n");
  EXPECT_EQ(identity_info("comb-A").min_index, 1);
  EXPECT_THROW(identity_info("nope"), std::invalid_argument);
  EXPECT_THROW(check_identity("nope", {}), std::invalid_argument);
}

TEST(Catalog, SpotValues) {
  auto q = check_identity("q-target", {.n = 4});
  EXPECT_TRUE(q.passed());
  EXPECT_EQ(q.lhs, -8);
  auto a = check_identity("comb-A", {.m = 2});
  EXPECT_TRUE(a.passed());
  EXPECT_EQ(a.lhs, 8);
  auto ab = check_identity("abel-binomial", {.m = 3, .x = 2, .y = -1, .a = 1});
  EXPECT_TRUE(ab.passed());
  EXPECT_EQ(ab.lhs, 4);
  EXPECT_EQ(ab.params.to_string(), "m=3,x=2,y=-1,a=1");
}

TEST(Catalog, AbelBinomialSmallGrid) {
  for (long m = 0; m <= 10; ++m) {
    for (long x = -3; x <= 3; ++x) {
      for (long y = -3; y <= 3; ++y) {
        for (long a = -3; a <= 3; ++a) {
          auto c = check_identity("abel-binomial", {.m = m, .x = x, .y = y, .a = a});
          EXPECT_NE(c.status, CaseStatus::kFail) << c.params.to_string();
        }
      }
    }
  }
}

TEST(Catalog, IndexedIdentitiesHoldOverRange) {
  for (const auto& info : identity_catalog()) {
    if (info.free_parameters) continue;
    for (long k = info.min_index; k <= 40; ++k) {
      IdentityParams p;
      (info.index_name == "m" ? p.m : p.n) = k;
      auto c = check_identity(info.id, p);
      EXPECT_TRUE(c.passed()) << info.id << " " << p.to_string() << ": " << c.note;
    }
  }
}

TEST(Guards, ZeroBaseUnderNegativePowerIsSkipped) {
  auto c = check_identity("dxy", {.m = 2, .x = 0, .y = 0, .a = 0});
  EXPECT_EQ(c.status, CaseStatus::kSkip);
  EXPECT_FALSE(c.note.empty());
  EXPECT_FALSE(c.passed());
  EXPECT_EQ(to_string(CaseStatus::kSkip), "skip");
}

TEST(Chains, LinkCatalogEntries) {
  for (long k = 1; k <= 25; ++k) {
    auto cases = check_chains(k);
    EXPECT_FALSE(cases.empty());
    for (const auto& c : cases) EXPECT_TRUE(c.passed()) << c.id << " at " << k << ": " << c.note;
  }
  std::map<std::string, int> ids;
  for (const auto& c : check_chains(3)) ++ids[c.id];
  EXPECT_TRUE(ids.contains("chain:q-target"));
  EXPECT_TRUE(ids.contains("chain:des1-target"));
}

TEST(Derivatives, AgreeWithInterpolatedParents) {
  std::map<std::string, int> passes;
  for (long m = 1; m <= 6; ++m) {
    for (long fixed = -2; fixed <= 2; ++fixed) {
      for (long a = -2; a <= 2; ++a) {
        for (const auto& c : check_derivatives(m, fixed, a)) {
          EXPECT_NE(c.status, CaseStatus::kFail) << c.id << " " << c.params.to_string() << ": " << c.note;
          if (c.passed()) ++passes[c.id];
        }
      }
    }
  }
  for (const char* id : {"deriv:abel-dx", "deriv:abel-dy", "deriv:dxy", "deriv:dxxy"}) {
    EXPECT_GT(passes[id], 0) << id;
  }
}

TEST(Catalog, DefaultGridHasNoFailures) {
  CatalogGrid grid;
  grid.max_index = 20;
  grid.free_max_m = 12;
  grid.free_bound = 3;
  grid.derivative_max_m = 5;
  grid.derivative_bound = 2;
  auto summary = summarize(run_catalog(grid));
  EXPECT_EQ(summary.failed, 0);
  EXPECT_GT(summary.passed, 0);
  EXPECT_GT(summary.skipped, 0);
}
