#include <gtest/gtest.h>

#include <random>

#include "klbraid/exact.hpp"

using namespace klbraid;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_degree) {
  std::uniform_int_distribution<int> degree(0, max_degree);
  std::uniform_int_distribution<long> coeff(-50, 50);
  std::vector<Integer> c(degree(rng) + 1);
  for (auto& x : c) x = coeff(rng);
  return IntPoly(c);
}

}  // namespace

TEST(Primitives, SmallValues) {
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(double_factorial(-1), 1);
  EXPECT_EQ(double_factorial(0), 1);
  EXPECT_EQ(double_factorial(7), 105);
  EXPECT_EQ(double_factorial(8), 384);
  EXPECT_EQ(binomial(7, 4), 35);
  EXPECT_EQ(binomial(7, 8), 0);
  EXPECT_EQ(binomial(7, -1), 0);
  const long parts[] = {2, 1, 1};
  EXPECT_EQ(multinomial(4, parts), 12);
}

TEST(Primitives, DomainErrors) {
  EXPECT_THROW(factorial(-1), std::domain_error);
  EXPECT_THROW(double_factorial(-2), std::domain_error);
  EXPECT_THROW(binomial(-1, 0), std::domain_error);
  const long bad_sum[] = {2, 1};
  EXPECT_THROW(multinomial(4, bad_sum), std::domain_error);
  const long negative[] = {5, -1};
  EXPECT_THROW(multinomial(4, negative), std::domain_error);
}

TEST(Primitives, DoubleFactorialRelation) {
  for (long k = 1; k <= 12; ++k) {
    Integer two_k = 1;
    for (long i = 0; i < k; ++i) two_k *= 2;
    EXPECT_EQ(factorial(2 * k), two_k * factorial(k) * double_factorial(2 * k - 1)) << "k=" << k;
  }
}

TEST(IntPower, Examples) {
  EXPECT_EQ(int_power(Rational(3), -1), Rational(1, 3));
  EXPECT_EQ(int_power(Rational(-1), -3), Rational(-1));
  EXPECT_EQ(int_power(Rational(2), 10), Rational(1024));
  EXPECT_EQ(int_power(Rational(-2, 3), -3), Rational(-27, 8));
  EXPECT_EQ(int_power(Rational(0), 0), Rational(1));
  EXPECT_EQ(int_power(Rational(0), 4), Rational(0));
  EXPECT_THROW(int_power(Rational(0), -1), std::domain_error);
}

TEST(IntPower, RationalsStayCanonical) {
  Rational r = int_power(Rational(6, -4), -2);
  EXPECT_EQ(r.get_num(), 4);
  EXPECT_EQ(r.get_den(), 9);
}

TEST(RequireIntegral, AcceptsAndRejects) {
  EXPECT_EQ(require_integral(Rational(10, 2), "x"), 5);
  EXPECT_THROW(require_integral(Rational(1, 3), "x"), InvariantViolation);
}

TEST(IntPoly, Arithmetic) {
  IntPoly one_plus_t{1, 1};
  EXPECT_EQ(one_plus_t * one_plus_t, (IntPoly{1, 2, 1}));
  EXPECT_EQ(IntPoly({1, 5}).coeff(1), 5);
  EXPECT_EQ(IntPoly({1, 5}).coeff(7), 0);
  EXPECT_EQ(IntPoly({1, 5}).coeff(-1), 0);
  EXPECT_EQ(one_plus_t.reversal(3), (IntPoly{0, 0, 1, 1}));
  EXPECT_THROW(IntPoly({1, 2, 3}).reversal(1), std::domain_error);
  EXPECT_EQ(IntPoly({2, 3}).scaled(-2), (IntPoly{-4, -6}));
  EXPECT_EQ(IntPoly({1, 2, 1}).evaluate(3), 16);
}

TEST(IntPoly, TrailingZerosAreTrimmed) {
  IntPoly p{1, 0, 0};
  EXPECT_EQ(p.degree(), 0);
  IntPoly zero = IntPoly{1, 1} - IntPoly{1, 1};
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.degree(), -1);
  EXPECT_EQ(zero.leading(), 0);
  EXPECT_EQ((IntPoly{0, 1} - IntPoly{0, 1, 0}).degree(), -1);
}

TEST(IntPoly, Rendering) {
  EXPECT_EQ(IntPoly({1, 5}).to_string(), "1 + 5t");
  EXPECT_EQ(IntPoly({2, -3, 1}).to_string(), "2 - 3t + t^2");
  EXPECT_EQ(IntPoly().to_string(), "0");
}

TEST(IntPoly, RingLawsOnRandomPolynomials) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly p = random_poly(rng, 6);
    IntPoly q = random_poly(rng, 6);
    IntPoly r = random_poly(rng, 6);
    EXPECT_EQ((p + q) * r, p * r + q * r);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p - p, IntPoly());
  }
}

TEST(IntPoly, ReversalIsAnInvolution) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly p = random_poly(rng, 6);
    if (p.coeff(0) == 0) continue;  // reversal would lower the degree
    const int d = std::max(p.degree(), 0) + static_cast<int>(rng() % 3);
    EXPECT_EQ(p.reversal(d).reversal(d), p);
  }
}
