#include "klbraid/klcore.hpp"

#include <numeric>
#include <sstream>

namespace klbraid {
namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current,
                    std::vector<PartitionType>& out) {
  if (remaining == 0) {
    out.push_back(PartitionType{current});
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(remaining - part, part, current, out);
    current.pop_back();
  }
}

// Coefficient of t^{n-2} contributed by a single flat type in the P/Q flat
// sum for B_k: prod P_{B_{lambda_i}} * (-1)^{len-1} * Q_{B_{len}}.
IntPoly flat_term(const PartitionType& lambda, KlTable& table) {
  IntPoly term{1};
  for (int part : lambda.parts) {
    if (part > 1) term *= kl_poly_braid(part, table);
  }
  term *= inv_kl_poly_braid(lambda.length(), table);
  if ((lambda.length() - 1) % 2 != 0) term = term.scaled(-1);
  return term;
}

}  // namespace

int PartitionType::size() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int PartitionType::multiplicity(int j) const {
  return static_cast<int>(std::count(parts.begin(), parts.end(), j));
}

bool PartitionType::is_all_ones() const {
  return std::all_of(parts.begin(), parts.end(), [](int p) { return p == 1; });
}

std::string PartitionType::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  os << ")";
  return os.str();
}

std::vector<PartitionType> partitions_of(int k) {
  if (k <= 0) throw std::domain_error("partitions_of requires k >= 1");
  std::vector<PartitionType> out;
  std::vector<int> current;
  partitions_rec(k, k, current, out);
  return out;
}

Integer flat_count(const PartitionType& lambda) {
  Integer denominator = 1;
  for (int part : lambda.parts) {
    if (part <= 0) throw std::domain_error("partition with a nonpositive part");
    denominator *= factorial(part);
  }
  int largest = lambda.parts.empty() ? 0 : lambda.parts.front();
  for (int j = 1; j <= largest; ++j) {
    denominator *= factorial(lambda.multiplicity(j));
  }
  Integer count = factorial(lambda.size());
  if (!mpz_divisible_p(count.get_mpz_t(), denominator.get_mpz_t())) {
    throw InvariantViolation("flat count is not an integer for " +
                             lambda.to_string());
  }
  mpz_divexact(count.get_mpz_t(), count.get_mpz_t(), denominator.get_mpz_t());
  return count;
}

IntPoly char_poly_braid(int n) {
  if (n < 1) throw std::domain_error("char_poly_braid requires n >= 1");
  IntPoly result{1};
  for (int i = 1; i < n; ++i) result *= IntPoly{-i, 1};
  return result;
}

std::string to_string(PolyKind kind) { return kind == PolyKind::kP ? "P" : "Q"; }

std::string to_string(Provenance provenance) {
  switch (provenance) {
    case Provenance::kRecursion:
      return "recursion";
    case Provenance::kEnumeration:
      return "enumeration";
    case Provenance::kCache:
      return "cache";
  }
  return "unknown";
}

std::optional<KlTable::Entry> KlTable::find(PolyKind kind, int n) const {
  std::lock_guard lock(mutex_);
  const auto& map = kind == PolyKind::kP ? p_ : q_;
  auto it = map.find(n);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

void KlTable::insert(PolyKind kind, int n, IntPoly poly, Provenance provenance) {
  std::lock_guard lock(mutex_);
  auto& map = kind == PolyKind::kP ? p_ : q_;
  map.insert_or_assign(n, Entry{std::move(poly), provenance});
}

std::vector<int> KlTable::keys(PolyKind kind) const {
  std::lock_guard lock(mutex_);
  const auto& map = kind == PolyKind::kP ? p_ : q_;
  std::vector<int> out;
  for (const auto& [n, entry] : map) out.push_back(n);
  return out;
}

IntPoly kl_poly_braid(int n, KlTable& table) {
  if (n < 1) throw std::domain_error("kl_poly_braid requires n >= 1");
  if (auto hit = table.find(PolyKind::kP, n)) return hit->poly;
  if (n <= 2) {
    table.insert(PolyKind::kP, n, IntPoly{1}, Provenance::kRecursion);
    return IntPoly{1};
  }
  for (int k = 2; k < n; ++k) kl_poly_braid(k, table);

  std::vector<IntPoly> chi(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) chi[static_cast<std::size_t>(k)] = char_poly_braid(k);

  // Sum over nonempty flats; the all-singletons type is the empty flat.
  IntPoly rest;
  for (const auto& lambda : partitions_of(n)) {
    if (lambda.is_all_ones()) continue;
    IntPoly term{flat_count(lambda)};
    for (int part : lambda.parts) {
      if (part > 1) term *= chi[static_cast<std::size_t>(part)];
    }
    term *= kl_poly_braid(lambda.length(), table);
    rest += term;
  }

  const int d = n - 1;
  std::vector<Integer> coeffs;
  for (int j = 0; 2 * j < d; ++j) coeffs.push_back(rest.coeff(d - j));
  IntPoly p(std::move(coeffs));

  // rest must equal t^d P(1/t) - P(t) exactly.
  if (p.reversal(d) - p != rest) {
    throw InvariantViolation("KL recursion does not close for B_" +
                             std::to_string(n));
  }
  table.insert(PolyKind::kP, n, p, Provenance::kRecursion);
  return p;
}

IntPoly inv_kl_poly_braid(int n, KlTable& table) {
  if (n < 1) throw std::domain_error("inv_kl_poly_braid requires n >= 1");
  if (auto hit = table.find(PolyKind::kQ, n)) return hit->poly;
  if (n == 1) {
    table.insert(PolyKind::kQ, 1, IntPoly{1}, Provenance::kRecursion);
    return IntPoly{1};
  }
  for (int k = 1; k < n; ++k) inv_kl_poly_braid(k, table);

  // P = (-1)^n Q - S, where S is the sum over proper nonempty flats of
  // P_{M|F} (-1)^{rk M/F} Q_{M/F}; hence Q = (-1)^n (P + S).
  IntPoly sum = kl_poly_braid(n, table);
  for (const auto& lambda : partitions_of(n)) {
    if (lambda.is_all_ones() || lambda.length() == 1) continue;
    sum += flat_term(lambda, table).scaled(flat_count(lambda));
  }
  IntPoly q = n % 2 == 0 ? sum : sum.scaled(-1);
  for (const auto& c : q.coeffs()) {
    if (c < 0) {
      throw InvariantViolation("negative coefficient in Q_{B_" +
                               std::to_string(n) + "}");
    }
  }
  table.insert(PolyKind::kQ, n, q, Provenance::kRecursion);
  return q;
}

Integer leading_coeff_closed_form(LeadingForm which, int n) {
  if (n < 2) throw std::domain_error("leading_coeff_closed_form requires n >= 2");
  const long m = n;
  auto p_even = [m]() -> Rational {
    return int_power(Rational(2 * m - 1), m - 2) * Rational(double_factorial(2 * m - 3));
  };
  // (n-1)^{n-5} (2n-1)! / (3 (n-2)!)
  auto q_odd = [m]() -> Rational {
    return int_power(Rational(m - 1), m - 5) * Rational(factorial(2 * m - 1)) /
           Rational(3 * factorial(m - 2));
  };
  Rational value;
  switch (which) {
    case LeadingForm::kPEven:
    case LeadingForm::kQEven:
      value = p_even();
      break;
    case LeadingForm::kPOdd:
      value = p_even() - Rational(m - 2) * q_odd();
      break;
    case LeadingForm::kQOdd:
      value = q_odd();
      break;
  }
  return require_integral(value, "leading coefficient closed form");
}

Integer leading_difference_closed_form(int n) {
  if (n < 3) throw std::domain_error("difference closed form requires n >= 3");
  const long m = n;
  Rational value = int_power(Rational(m - 1), m - 5) * Rational(factorial(2 * m - 1)) /
                   Rational(3 * factorial(m - 3));
  return require_integral(value, "difference closed form");
}

Integer count_E_closed(int n) {
  if (n < 2) throw std::domain_error("count_E_closed requires n >= 2");
  const long m = n;
  Rational value = Rational(leading_coeff_closed_form(LeadingForm::kPOdd, n)) -
                   Rational((m + 1) * int_power(Rational(m - 1), m - 3) * factorial(2 * m - 3)) /
                       Rational(3 * factorial(m - 1));
  return require_integral(value, "connected count closed form");
}

ParityReport verify_parity_identity(int n, KlTable& table) {
  if (n < 1) throw std::domain_error("verify_parity_identity requires n >= 1");
  ParityReport report;
  report.n = n;
  report.p_coeff = kl_poly_braid(2 * n, table).coeff(n - 1);
  report.q_coeff = inv_kl_poly_braid(2 * n, table).coeff(n - 1);
  report.holds = report.p_coeff == report.q_coeff;
  return report;
}

LeadingRelationReport verify_leading_relation(int n, KlTable& table) {
  if (n < 2) throw std::domain_error("verify_leading_relation requires n >= 2");
  LeadingRelationReport report;
  report.n = n;
  const int k = 2 * n - 1;
  report.lhs = kl_poly_braid(k, table).coeff(n - 2) + inv_kl_poly_braid(k, table).coeff(n - 2);
  report.rhs = 0;
  for (int j = 1; j <= n - 1; ++j) {
    report.rhs += binomial(k, 2 * j) * kl_poly_braid(2 * j, table).coeff(j - 1) *
                  inv_kl_poly_braid(2 * n - 2 * j, table).coeff(n - 1 - j);
  }

  bool stray_terms_vanish = true;
  report.single_even_block = 0;
  report.single_odd_block = 0;
  report.several_blocks = 0;
  for (const auto& lambda : partitions_of(k)) {
    if (lambda.is_all_ones() || lambda.length() == 1) continue;
    Integer contribution = flat_count(lambda) * flat_term(lambda, table).coeff(n - 2);
    int big_parts = static_cast<int>(std::count_if(
        lambda.parts.begin(), lambda.parts.end(), [](int p) { return p > 1; }));
    if (big_parts >= 2) {
      report.several_blocks += contribution;
      stray_terms_vanish = stray_terms_vanish && contribution == 0;
    } else if (lambda.parts.front() % 2 == 0) {
      report.single_even_block += contribution;
    } else {
      report.single_odd_block += contribution;
      stray_terms_vanish = stray_terms_vanish && contribution == 0;
    }
  }
  Integer all_flats = report.single_even_block + report.single_odd_block + report.several_blocks;
  report.holds = report.lhs == report.rhs && stray_terms_vanish &&
                 report.single_even_block == -report.rhs && report.lhs == -all_flats;
  return report;
}

}  // namespace klbraid
