#pragma once

// Exact scalars, dense integer polynomials, and the handful of
// combinatorial primitives every closed form in the library is built from.
//
// Integer and Rational are GMP's C++ classes. Rational values are kept in
// canonical (reduced, positive denominator) form by construction.

#include <gmpxx.h>

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace klbraid {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when a computation that must be exact produces something that is
// not (a non-integral closed form, a relation that fails to close).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised when a request exceeds the documented size caps of an enumerator.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Integer factorial(long n);

// (-1)!! = 1; (2k-1)!! = 1*3*...*(2k-1); (2k)!! = 2*4*...*2k.
Integer double_factorial(long n);

// Zero when k < 0 or k > n.
Integer binomial(long n, long k);

// top! / prod(parts_i!). The parts must be nonnegative and sum to top.
Integer multinomial(long top, std::span<const long> parts);

// Exact rational power; 0 to a negative power is a domain error.
Rational int_power(const Rational& base, long exp);

// Returns the numerator of `value` after checking the denominator is 1.
// `what` names the quantity for the error message.
Integer require_integral(const Rational& value, std::string_view what);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

// Dense univariate polynomial with Integer coefficients; coeffs()[i] is the
// coefficient of t^i. Trailing zeros are never stored, so the zero
// polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<Integer> coeffs);
  explicit IntPoly(std::vector<Integer> coeffs);

  static IntPoly monomial(Integer c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  // Zero beyond the degree (and for negative i).
  Integer coeff(int i) const;
  Integer leading() const;

  // t^d * p(1/t); requires d >= degree().
  IntPoly reversal(int d) const;

  IntPoly scaled(const Integer& c) const;
  Integer evaluate(const Integer& t) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Human-readable form, lowest degree first: "1 + 5t + 2t^2".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

}  // namespace klbraid
