#include <gtest/gtest.h>

#include <set>

#include "klbraid/maps.hpp"
#include "klbraid/spgen.hpp"

using namespace klbraid;

namespace {

ElementSet set_of(std::initializer_list<int> labels) {
  ElementSet s = 0;
  for (int v : labels) s |= element_bit(v);
  return s;
}

}  // namespace

TEST(Phi, DiamondLosesOneTriangle) {
  auto diamond = LabeledMatroid::from_circuits(
      prefix_set(5), {set_of({1, 2, 3}), set_of({2, 4, 5}), set_of({1, 3, 4, 5})});
  auto expected = direct_sum(LabeledMatroid::uniform(2, prefix_set(3)),
                             LabeledMatroid::free_matroid(set_of({4})));
  EXPECT_EQ(phi(diamond), expected);
  EXPECT_EQ(m_class_of_target(expected), 1);
}

TEST(Phi, TwoTrianglesThroughTopElement) {
  auto theta = LabeledMatroid::from_circuits(
      prefix_set(5), {set_of({1, 2, 5}), set_of({3, 4, 5}), set_of({1, 2, 3, 4})});
  auto image = phi(theta);
  EXPECT_EQ(image, LabeledMatroid::uniform(3, prefix_set(4)));
  EXPECT_EQ(m_class_of_target(image), 2);
}

TEST(Phi, RejectsBadInput) {
  EXPECT_THROW(phi(LabeledMatroid::uniform(2, prefix_set(4))), std::domain_error);
  EXPECT_THROW(phi(LabeledMatroid::uniform(1, prefix_set(1))), std::domain_error);
}

TEST(Fibers, SizesMatchExpectations) {
  for (int n = 2; n <= 4; ++n) {
    auto report = fibers_of_phi(n);
    EXPECT_TRUE(report.ok()) << "n=" << n << ": " << (report.failures.empty() ? "" : report.failures[0]);
    EXPECT_TRUE(report.surjective);
    EXPECT_TRUE(report.fibers_match);
    EXPECT_TRUE(report.classes_agree);
    EXPECT_TRUE(report.connectivity_agrees);
    EXPECT_EQ(Integer(report.source_count), count_S(2 * n - 1, n));
    EXPECT_EQ(Integer(report.target_count), count_S(2 * n - 2, n));
    EXPECT_EQ(static_cast<int>(report.records.size()), report.target_count);
  }
  auto three = fibers_of_phi(3);
  EXPECT_EQ(three.per_m.at(1).preimages, 12);
  EXPECT_EQ(three.per_m.at(2).targets, 1);
  EXPECT_EQ(three.per_m.at(2).preimages, 3);
  EXPECT_THROW(fibers_of_phi(1), std::domain_error);
  EXPECT_THROW(fibers_of_phi(5), ResourceError);
}

TEST(Fibers, HigherClassesAreConnected) {
  auto report = fibers_of_phi(4);
  for (const auto& record : report.records) {
    EXPECT_EQ(record.connected, record.m_class > 1);
    EXPECT_EQ(record.m_class, m_class_of_target(record.target));
  }
  EXPECT_TRUE(report.per_m.contains(3));
}

TEST(Sigma2, FourCircuitBecomesRoots) {
  auto d = sigma2(LabeledMatroid::uniform(3, prefix_set(4)));
  EXPECT_EQ(d.graph.edge_count(), 0);
  EXPECT_EQ(d.graph.vertices(), 0b1111u);
  EXPECT_EQ(d.roots, 0b1111u);
  auto m1_target = direct_sum(LabeledMatroid::uniform(2, prefix_set(3)),
                              LabeledMatroid::free_matroid(set_of({4})));
  EXPECT_THROW(sigma2(m1_target), std::domain_error);
  EXPECT_THROW(m_class_of_target(LabeledMatroid::uniform(2, prefix_set(3))), InvariantViolation);
}

TEST(Sigma2, BijectionOntoRootedDeserts) {
  for (int n = 3; n <= 4; ++n) {
    std::set<RootedDesert> images;
    int m2_targets = 0;
    for (const auto& target : enumerate_S(2 * n - 2, n)) {
      if (m_class_of_target(target) != 2) continue;
      ++m2_targets;
      images.insert(sigma2(target));
    }
    EXPECT_EQ(static_cast<int>(images.size()), m2_targets) << "n=" << n;
    auto rooted = enumerate_rooted_deserts(n, 2);
    EXPECT_EQ(images, std::set<RootedDesert>(rooted.begin(), rooted.end())) << "n=" << n;
  }
}

TEST(Difference, ExhaustiveAndClosedForm) {
  auto two = verify_difference(2, DifferenceMode::kExhaustive);
  EXPECT_TRUE(two.holds);
  EXPECT_EQ(two.difference, 0);
  auto three = verify_difference(3, DifferenceMode::kExhaustive);
  EXPECT_TRUE(three.holds);
  EXPECT_EQ(three.difference, 10);
  auto four = verify_difference(4, DifferenceMode::kExhaustive);
  EXPECT_TRUE(four.holds);
  EXPECT_EQ(four.difference, 560);
  EXPECT_EQ(four.desert_side, 560);
  for (int n = 2; n <= 25; ++n) {
    EXPECT_TRUE(verify_difference(n, DifferenceMode::kClosedForm).holds) << "n=" << n;
  }
  EXPECT_THROW(verify_difference(5, DifferenceMode::kExhaustive), ResourceError);
}
