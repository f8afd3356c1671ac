#include "klbraid/exact.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace klbraid {

Integer factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer double_factorial(long n) {
  if (n < -1) throw std::domain_error("double factorial below -1");
  if (n <= 0) return 1;
  Integer result;
  mpz_2fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial with negative top");
  if (k < 0 || k > n) return 0;
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

Integer multinomial(long top, std::span<const long> parts) {
  if (top < 0) throw std::domain_error("multinomial with negative top");
  long sum = 0;
  for (long p : parts) {
    if (p < 0) throw std::domain_error("multinomial with a negative part");
    sum += p;
  }
  if (sum != top) {
    throw std::domain_error("multinomial parts do not sum to the top argument");
  }
  Integer result = 1;
  long remaining = top;
  for (long p : parts) {
    result *= binomial(remaining, p);
    remaining -= p;
  }
  return result;
}

Rational int_power(const Rational& base, long exp) {
  if (exp >= 0) {
    Rational result;
    mpz_pow_ui(mpq_numref(result.get_mpq_t()), base.get_num_mpz_t(),
               static_cast<unsigned long>(exp));
    mpz_pow_ui(mpq_denref(result.get_mpq_t()), base.get_den_mpz_t(),
               static_cast<unsigned long>(exp));
    result.canonicalize();
    return result;
  }
  if (base == 0) {
    throw std::domain_error("zero raised to a negative power");
  }
  Rational inverted = 1 / base;
  return int_power(inverted, -exp);
}

Integer require_integral(const Rational& value, std::string_view what) {
  if (value.get_den() != 1) {
    Rational reduced = value;
    reduced.canonicalize();
    if (reduced.get_den() == 1) return reduced.get_num();
    throw InvariantViolation(std::string(what) + " is not an integer: " +
                             to_string(value));
  }
  return value.get_num();
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

IntPoly::IntPoly(std::initializer_list<Integer> coeffs) : coeffs_(coeffs) {
  trim();
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPoly IntPoly::monomial(Integer c, int degree) {
  if (degree < 0) throw std::domain_error("monomial with negative degree");
  std::vector<Integer> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = std::move(c);
  return IntPoly(std::move(coeffs));
}

Integer IntPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Integer IntPoly::leading() const {
  return is_zero() ? Integer(0) : coeffs_.back();
}

IntPoly IntPoly::reversal(int d) const {
  if (d < degree()) {
    throw std::domain_error("reversal degree below polynomial degree");
  }
  std::vector<Integer> out(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= degree(); ++i) {
    out[static_cast<std::size_t>(d - i)] = coeffs_[static_cast<std::size_t>(i)];
  }
  return IntPoly(std::move(out));
}

IntPoly IntPoly::scaled(const Integer& c) const {
  std::vector<Integer> out = coeffs_;
  for (auto& x : out) x *= c;
  return IntPoly(std::move(out));
}

Integer IntPoly::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * t + *it;
  }
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  *this = *this * other;
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return IntPoly(std::move(out));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer magnitude = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || magnitude != 1) os << magnitude.get_str();
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace klbraid
