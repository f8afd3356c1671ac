#include <gtest/gtest.h>

#include <set>

#include "klbraid/klcore.hpp"
#include "klbraid/spgen.hpp"

using namespace klbraid;

TEST(ConnectedSp, Counts) {
  const int expected[] = {1, 1, 2, 8, 52, 472};
  for (int s = 1; s <= 6; ++s) {
    auto all = generate_connected_sp(prefix_set(s));
    EXPECT_EQ(static_cast<int>(all.size()), expected[s - 1]) << "s=" << s;
    std::set<LabeledMatroid> unique(all.begin(), all.end());
    EXPECT_EQ(unique.size(), all.size());
    for (const auto& m : all) {
      EXPECT_TRUE(s == 1 || is_connected(m)) << m.to_string();
      EXPECT_FALSE(has_excluded_minor(m)) << m.to_string();
    }
  }
}

TEST(ConnectedSp, SmallExamples) {
  auto one = generate_connected_sp(prefix_set(1));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].rank(), 1);
  auto three = generate_connected_sp(prefix_set(3));
  EXPECT_NE(std::ranges::find(three, LabeledMatroid::uniform(2, prefix_set(3))), three.end());
  EXPECT_NE(std::ranges::find(three, LabeledMatroid::uniform(1, prefix_set(3))), three.end());
}

TEST(ConnectedSp, PlacedOnArbitraryLabels) {
  const ElementSet labels = element_bit(2) | element_bit(5) | element_bit(7);
  auto placed = generate_connected_sp(labels);
  ASSERT_EQ(placed.size(), 2u);
  for (const auto& m : placed) EXPECT_EQ(m.ground(), labels);
  EXPECT_EQ(place_on(LabeledMatroid::uniform(2, prefix_set(3)), labels),
            LabeledMatroid::uniform(2, labels));
}

TEST(QuasiSp, Counts) {
  EXPECT_EQ(count_S(0, 0), 1);
  EXPECT_EQ(count_S(4, 3), 5);
  EXPECT_EQ(count_S(5, 3), 15);
  EXPECT_EQ(count_S(6, 4), 175);
  EXPECT_EQ(count_S(7, 4), 735);
  EXPECT_EQ(count_S(3, 1), 0);
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(count_S(n, n), 1) << "n=" << n;
  EXPECT_EQ(count_S(3, 4), 0);
  EXPECT_THROW(count_S(-1, 0), std::domain_error);
  EXPECT_THROW(count_S(kMaxSpGround + 1, 5), ResourceError);
}

TEST(QuasiSp, EnumerationMatchesCount) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      auto all = enumerate_S(n, k);
      EXPECT_EQ(Integer(static_cast<long>(all.size())), count_S(n, k)) << n << "," << k;
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
      for (const auto& m : all) {
        EXPECT_EQ(m.rank(), k);
        EXPECT_TRUE(is_simple(m));
        EXPECT_FALSE(has_excluded_minor(m));
      }
    }
  }
}

TEST(QuasiSp, ConnectedMembers) {
  EXPECT_EQ(count_E(2), 0);
  EXPECT_EQ(count_E(3), 1);
  EXPECT_EQ(count_E(4), 75);
  for (int n = 2; n <= 4; ++n) EXPECT_EQ(count_E(n), count_E_closed(n)) << "n=" << n;
}

TEST(QuasiSp, ClassifyByThreeCircuits) {
  auto two = classify_by_m(2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two.at(1).size(), 1u);
  auto three = classify_by_m(3);
  ASSERT_EQ(three.size(), 2u);
  EXPECT_EQ(three.at(1).size(), 12u);
  EXPECT_EQ(three.at(2).size(), 3u);
  for (const auto& [m, members] : classify_by_m(4)) {
    for (const auto& member : members) EXPECT_EQ(count_3circuits_through(member, 7), m);
  }
}

TEST(QuasiSp, EnumerationReproducesKlCoefficients) {
  KlTable table;
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(kl_coeffs_via_enumeration(n), kl_poly_braid(n, table)) << "n=" << n;
  }
}
