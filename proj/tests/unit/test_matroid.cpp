#include <gtest/gtest.h>

#include "klbraid/matroid.hpp"
#include "klbraid/spgen.hpp"

using namespace klbraid;

namespace {

ElementSet set_of(std::initializer_list<int> labels) {
  ElementSet s = 0;
  for (int v : labels) s |= element_bit(v);
  return s;
}

LabeledMatroid diamond() {
  return LabeledMatroid::from_circuits(prefix_set(5), {set_of({1, 2, 3}), set_of({2, 4, 5}),
                                                       set_of({1, 3, 4, 5})});
}

LabeledMatroid k4() {
  return LabeledMatroid::graphic({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
}

}  // namespace

TEST(ElementSets, Helpers) {
  EXPECT_EQ(prefix_set(3), 0b111u);
  EXPECT_EQ(set_size(set_of({1, 4, 9})), 3);
  EXPECT_EQ(labels_of(set_of({2, 5})), (std::vector<int>{2, 5}));
  EXPECT_EQ(format_set(set_of({1, 2, 3})), "{1,2,3}");
}

TEST(Construction, UniformAndFree) {
  auto u23 = LabeledMatroid::uniform(2, prefix_set(3));
  EXPECT_EQ(u23.rank(), 2);
  EXPECT_EQ(u23.circuits(), (std::vector<ElementSet>{prefix_set(3)}));
  auto u24 = LabeledMatroid::uniform(2, prefix_set(4));
  EXPECT_EQ(u24.circuits().size(), 4u);
  auto free3 = LabeledMatroid::free_matroid(prefix_set(3));
  EXPECT_EQ(free3.rank(), 3);
  EXPECT_TRUE(free3.circuits().empty());
  EXPECT_FALSE(is_connected(free3));
  EXPECT_EQ(components(free3).size(), 3u);
}

TEST(Construction, RejectsInvalidCircuits) {
  EXPECT_THROW(LabeledMatroid::from_circuits(prefix_set(3), {set_of({1, 2}), set_of({1, 2, 3})}),
               std::invalid_argument);
  EXPECT_THROW(LabeledMatroid::from_circuits(prefix_set(4), {set_of({1, 2, 3}), set_of({2, 3, 4})}),
               std::invalid_argument);
  EXPECT_THROW(LabeledMatroid::from_circuits(prefix_set(3), {set_of({1, 4})}), std::invalid_argument);
  EXPECT_THROW(LabeledMatroid::from_circuits(prefix_set(3), {0}), std::invalid_argument);
  EXPECT_TRUE(satisfies_circuit_axioms(prefix_set(5), diamond().circuits()));
}

TEST(Construction, GraphicK4) {
  auto m = k4();
  EXPECT_EQ(m.size(), 6);
  EXPECT_EQ(m.rank(), 3);
  EXPECT_EQ(circuits_of_size(m, 3).size(), 4u);
  EXPECT_EQ(circuits_of_size(m, 4).size(), 3u);
  EXPECT_TRUE(is_simple(m));
  EXPECT_TRUE(is_connected(m));
  EXPECT_TRUE(is_chordal(m));
  EXPECT_TRUE(has_excluded_minor(m));
}

TEST(Diamond, ChordsAndConnectivity) {
  auto d = diamond();
  EXPECT_EQ(d.rank(), 3);
  EXPECT_TRUE(is_connected(d));
  EXPECT_EQ(chords_of(d, set_of({1, 3, 4, 5})), set_of({2}));
  EXPECT_FALSE(is_chordless(d, set_of({1, 3, 4, 5})));
  EXPECT_TRUE(is_chordless(d, set_of({1, 2, 3})));
  EXPECT_TRUE(is_chordal(d));
  EXPECT_FALSE(has_excluded_minor(d));
  EXPECT_EQ(count_3circuits_through(d, 2), 2);
  EXPECT_EQ(count_3circuits_through(d, 5), 1);
  EXPECT_TRUE(is_isomorphic(d, LabeledMatroid::graphic({{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}})));
}

TEST(Chords, FourCycleIsChordless) {
  auto c4 = LabeledMatroid::graphic({{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  EXPECT_EQ(chords_of(c4, prefix_set(4)), 0u);
  EXPECT_FALSE(is_chordal(c4));
}

TEST(Minors, RankAndSize) {
  auto m = k4();
  auto del = delete_element(m, 6);
  EXPECT_EQ(del.size(), 5);
  EXPECT_EQ(del.rank(), 3);
  auto con = contract_element(m, 1);
  EXPECT_EQ(con.size(), 5);
  EXPECT_EQ(con.rank(), 2);
  EXPECT_FALSE(is_simple(con));
  EXPECT_EQ(minor(m, set_of({1}), set_of({6})), delete_element(con, 6));
  EXPECT_EQ(restrict_to(m, set_of({1, 2, 4})), LabeledMatroid::uniform(2, set_of({1, 2, 4})));
  EXPECT_THROW(minor(m, set_of({1}), set_of({1})), std::domain_error);
}

TEST(Minors, ExcludedMinorDetection) {
  EXPECT_TRUE(has_excluded_minor(LabeledMatroid::uniform(2, prefix_set(4))));
  EXPECT_TRUE(has_excluded_minor(LabeledMatroid::uniform(2, prefix_set(5))));
  EXPECT_TRUE(has_excluded_minor(LabeledMatroid::uniform(3, prefix_set(5))));
  EXPECT_FALSE(has_excluded_minor(LabeledMatroid::uniform(3, prefix_set(4))));
  EXPECT_FALSE(has_excluded_minor(LabeledMatroid::uniform(1, prefix_set(5))));
}

TEST(Minors, SeriesParallelClassIsMinorClosed) {
  for (int s = 2; s <= 6; ++s) {
    for (const auto& m : generate_connected_sp(prefix_set(s))) {
      ASSERT_FALSE(has_excluded_minor(m)) << m.to_string();
      for (int e = 1; e <= s; ++e) {
        EXPECT_FALSE(has_excluded_minor(delete_element(m, e)));
        EXPECT_FALSE(has_excluded_minor(contract_element(m, e)));
      }
    }
  }
}

TEST(Operations, DirectSumAndRelabel) {
  auto a = LabeledMatroid::uniform(2, prefix_set(3));
  auto b = LabeledMatroid::uniform(2, set_of({4, 5, 6}));
  auto sum = direct_sum(a, b);
  EXPECT_EQ(sum.rank(), 4);
  EXPECT_EQ(components(sum).size(), 2u);
  EXPECT_FALSE(is_connected(sum));
  EXPECT_EQ(relabel(a, {4, 5, 6}), b);
  EXPECT_THROW(relabel(a, {4, 4, 6}), std::domain_error);
  EXPECT_THROW(direct_sum(a, a), std::domain_error);
}

TEST(Operations, Extensions) {
  auto u23 = LabeledMatroid::uniform(2, prefix_set(3));
  EXPECT_EQ(series_extension(u23, 1, 4), LabeledMatroid::uniform(3, prefix_set(4)));
  auto par = parallel_extension(u23, 1, 4);
  EXPECT_EQ(par.rank(), 2);
  EXPECT_EQ(par.circuits(),
            (std::vector<ElementSet>{set_of({1, 2, 3}), set_of({1, 4}), set_of({2, 3, 4})}));

  auto tri = triangle_extension(u23, 1, 4, 5);
  EXPECT_EQ(tri.rank(), u23.rank() + 1);
  EXPECT_EQ(tri.size(), u23.size() + 2);
  EXPECT_TRUE(std::ranges::count(tri.circuits(), set_of({1, 4, 5})) == 1);
  EXPECT_TRUE(is_isomorphic(tri, diamond()));
}

TEST(Operations, TriangleExtensionOnGeneratedMatroids) {
  for (const auto& m : generate_connected_sp(prefix_set(4))) {
    for (int g = 1; g <= 4; ++g) {
      auto t = triangle_extension(m, g, 5, 6);
      EXPECT_EQ(t.rank(), m.rank() + 1);
      EXPECT_EQ(t.size(), m.size() + 2);
      EXPECT_TRUE(std::ranges::count(t.circuits(), set_of({g, 5, 6})) == 1);
      EXPECT_EQ(delete_element(contract_element(t, 6), 5), m);
    }
  }
}

TEST(Isomorphism, Basics) {
  auto a = LabeledMatroid::from_circuits(prefix_set(4), {set_of({1, 2}), set_of({3, 4})});
  auto b = LabeledMatroid::from_circuits(prefix_set(4), {set_of({1, 3}), set_of({2, 4})});
  EXPECT_TRUE(is_isomorphic(a, b));
  EXPECT_FALSE(is_isomorphic(a, LabeledMatroid::uniform(3, prefix_set(4))));
  MatroidHash h;
  EXPECT_EQ(h(a), h(LabeledMatroid::from_circuits(prefix_set(4), {set_of({3, 4}), set_of({1, 2})})));
}
