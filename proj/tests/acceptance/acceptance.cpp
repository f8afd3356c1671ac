// Runs every acceptance criterion at its stated range and time limit and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "klbraid/cactus.hpp"
#include "klbraid/identities.hpp"
#include "klbraid/klcore.hpp"
#include "klbraid/maps.hpp"
#include "klbraid/spgen.hpp"

using namespace klbraid;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    if (condition) return;
    if (ok) detail << what;
    else detail << "; " << what;
    ok = false;
  }
  template <typename A, typename B>
  void expect_eq(const A& a, const B& b, const std::string& what) {
    if (a == b) return;
    std::ostringstream s;
    s << what << ": " << a << " != " << b;
    expect(false, s.str());
  }
};

struct Criterion {
  int number;
  std::string title;
  double limit_seconds;
  std::function<void(Check&)> run;
};

VertexSet prefix(int p) { return p == 0 ? 0 : (VertexSet{1} << p) - 1; }
Integer size_of(std::size_t n) { return Integer(static_cast<unsigned long>(n)); }
std::string at(const char* name, int v) { return std::string(name) + "=" + std::to_string(v); }

void braid_coefficients_are_sp_counts(Check& c) {
  KlTable table;
  c.expect_eq(kl_poly_braid(4, table).to_string(), std::string("1 + t"), "P_{B_4}");
  c.expect_eq(kl_poly_braid(5, table).to_string(), std::string("1 + 5t"), "P_{B_5}");
  for (int n = 2; n <= 8; ++n) {
    const IntPoly p = kl_poly_braid(n, table);
    for (int i = 0; i <= std::max(p.degree(), 0) + 1; ++i) {
      c.expect_eq(p.coeff(i), count_S(n - 1, n - 1 - i), at("n", n) + " " + at("i", i));
    }
  }
}

void even_leading_coefficient(Check& c) {
  KlTable table;
  for (int n = 2; n <= 7; ++n) {
    c.expect_eq(kl_poly_braid(2 * n, table).coeff(n - 1),
                leading_coeff_closed_form(LeadingForm::kPEven, n), at("n", n));
  }
  const long expected[] = {1, 15, 735};
  for (int n = 2; n <= 4; ++n) {
    const Integer cacti = size_of(enumerate_cacti(prefix(2 * n - 1)).size());
    c.expect_eq(cacti, expected[n - 2], "cacti " + at("n", n));
    c.expect_eq(cacti, kl_poly_braid(2 * n, table).coeff(n - 1), "cacti vs leading " + at("n", n));
  }
}

void odd_leading_coefficient(Check& c) {
  KlTable table;
  for (int n = 2; n <= 7; ++n) {
    c.expect_eq(kl_poly_braid(2 * n - 1, table).coeff(n - 2),
                leading_coeff_closed_form(LeadingForm::kPOdd, n), at("n", n));
  }
  c.expect_eq(size_of(enumerate_S(4, 3).size()), 5, "|S(4,3)|");
  c.expect_eq(size_of(enumerate_S(6, 4).size()), 175, "|S(6,4)|");
  for (int n = 2; n <= 4; ++n) {
    c.expect_eq(size_of(enumerate_S(2 * n - 2, n).size()),
                leading_coeff_closed_form(LeadingForm::kPOdd, n), "enumeration " + at("n", n));
  }
}

void connected_members(Check& c) {
  c.expect_eq(count_E(3), 1, "E_3");
  c.expect_eq(count_E(4), 75, "E_4");
  for (int n = 3; n <= 4; ++n) {
    c.expect_eq(count_E(n), count_E_closed(n), "closed " + at("n", n));
    c.expect_eq(count_E(n) + size_of(enumerate_deserts(n, 1).size()), count_S(2 * n - 2, n),
                "E + Des_1 " + at("n", n));
  }
  c.expect_eq(size_of(enumerate_deserts(3, 1).size()), 4, "Des_1(3)");
  c.expect_eq(size_of(enumerate_deserts(4, 1).size()), 100, "Des_1(4)");
}

void inverse_leading_coefficients(Check& c) {
  KlTable table;
  for (int n = 2; n <= 6; ++n) {
    const Integer even = inv_kl_poly_braid(2 * n, table).coeff(n - 1);
    c.expect_eq(even, leading_coeff_closed_form(LeadingForm::kQEven, n), "even " + at("n", n));
    c.expect_eq(even, kl_poly_braid(2 * n, table).coeff(n - 1), "even vs P " + at("n", n));
    c.expect_eq(inv_kl_poly_braid(2 * n - 1, table).coeff(n - 2),
                leading_coeff_closed_form(LeadingForm::kQOdd, n), "odd " + at("n", n));
  }
  c.expect_eq(inv_kl_poly_braid(5, table).coeff(1), 10, "odd n=3");
  c.expect_eq(inv_kl_poly_braid(7, table).coeff(2), 280, "odd n=4");
}

void count_difference(Check& c) {
  const auto three = verify_difference(3, DifferenceMode::kExhaustive);
  c.expect(three.holds, "exhaustive n=3");
  c.expect_eq(three.difference, 10, "difference n=3");
  c.expect_eq(three.desert_side, 10, "desert side n=3");
  const auto four = verify_difference(4, DifferenceMode::kExhaustive);
  c.expect(four.holds, "exhaustive n=4");
  c.expect_eq(four.difference, 560, "difference n=4");
  c.expect_eq(four.desert_side, 560, "desert side n=4");
  c.expect_eq(size_of(enumerate_rooted_deserts(4, 2).size()), 60, "RDes_2(4)");
  c.expect_eq(size_of(enumerate_rooted_deserts(4, 1).size()), 540, "RDes_1(4)");
  for (int n = 3; n <= 20; ++n) {
    c.expect(verify_difference(n, DifferenceMode::kClosedForm).holds, "closed form " + at("n", n));
  }
}

void deletion_fibers(Check& c) {
  for (int n = 2; n <= 4; ++n) {
    const auto report = fibers_of_phi(n);
    c.expect(report.surjective, "surjective " + at("n", n));
    c.expect(report.fibers_match, "fiber sizes " + at("n", n));
    c.expect(report.classes_agree, "m classes " + at("n", n));
    c.expect(report.connectivity_agrees, "connectivity " + at("n", n));
    c.expect(report.ok(), report.failures.empty() ? "" : report.failures.front());
    int rebuilt = 0;
    for (const auto& record : report.records) {
      const int expected = record.m_class >= 3 ? 1 : record.m_class == 2 ? 3 : record.expected_fiber;
      c.expect_eq(record.fiber_size, expected, "fiber over " + record.target.to_string());
      rebuilt += record.fiber_size;
    }
    c.expect_eq(Integer(rebuilt), count_S(2 * n - 1, n), "rebuilt total " + at("n", n));
  }
}

void graph_family_counts(Check& c) {
  for (int p = 1; p <= 6; ++p) {
    for (const auto& type : feasible_husimi_types(p)) {
      c.expect_eq(size_of(enumerate_husimi(p, type).size()), count_husimi_closed(p, type),
                  "Husimi " + at("p", p) + " type " + type.to_string());
    }
  }
  for (int p = 1; p <= 7; ++p) {
    const Integer closed = p % 2 == 1 ? count_cacti_closed((p + 1) / 2) : Integer(0);
    c.expect_eq(size_of(enumerate_cacti(prefix(p)).size()), closed, "cacti " + at("p", p));
  }
  c.expect_eq(size_of(generate_cacti_constructive(prefix(7)).size()), count_cacti_closed(4),
              "constructive cacti p=7");
  for (int n = 2; 2 * n - 2 <= 6; ++n) {
    c.expect_eq(size_of(enumerate_deserts(n, 1).size()), count_des1_closed(n), "Des_1 " + at("n", n));
    c.expect_eq(des1_double_factorial_sum(n), count_des1_closed(n), "Des_1 sum " + at("n", n));
    for (int m = 1; 2 * m <= 2 * n - 2; ++m) {
      c.expect_eq(size_of(enumerate_deserts(n, m).size()), des_convolution(n, m),
                  "Des " + at("n", n) + " " + at("m", m));
      c.expect_eq(size_of(enumerate_rooted_deserts(n, m).size()), count_rdes_closed(n, m),
                  "RDes " + at("n", n) + " " + at("m", m));
    }
  }
}

void identity_catalog_grid(Check& c) {
  const auto cases = run_catalog(CatalogGrid{});
  const auto summary = summarize(cases);
  c.expect_eq(summary.failed, 0, "failed cases");
  c.expect(summary.passed > 0, "no passing cases");
  for (const auto& item : cases) {
    if (item.status == CaseStatus::kFail) {
      c.expect(false, item.id + " " + item.params.to_string());
    } else if (item.status == CaseStatus::kSkip && item.note.empty()) {
      c.expect(false, "skip without a guard reason: " + item.id + " " + item.params.to_string());
    }
  }
  c.detail << (c.ok ? "" : "; ") << summary.passed << " passed, " << summary.skipped << " guard skips";
}

void parity_and_leading_relation(Check& c) {
  KlTable table;
  for (int n = 1; n <= 7; ++n) c.expect(verify_parity_identity(n, table).holds, "parity " + at("n", n));
  for (int n = 2; n <= 7; ++n) {
    c.expect(verify_leading_relation(n, table).holds, "leading relation " + at("n", n));
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "KL coefficients of B_n equal |S(n-1, n-1-i)| for n = 2..8", 300,
       braid_coefficients_are_sp_counts},
      {2, "even P leading coefficient closed form (n = 2..7) and cactus counts (n <= 4)", 60,
       even_leading_coefficient},
      {3, "odd P leading coefficient closed form (n = 2..7) and |S(2n-2, n)| (n <= 4)", 300,
       odd_leading_coefficient},
      {4, "connected count E_n closed form and E_n + |Des_1(n)| = |S(2n-2, n)| (n = 3, 4)", 120,
       connected_members},
      {5, "Q leading coefficients equal their closed forms (n = 2..6)", 60,
       inverse_leading_coefficients},
      {6, "|S(2n-1,n)| - |S(2n-2,n)| = 2|RDes_2| + |RDes_1| - |Des_1| (exhaustive n = 3, 4; closed n <= 20)",
       300, count_difference},
      {7, "deletion map fibers and totals (n <= 4)", 300, deletion_fibers},
      {8, "Husimi (p <= 6), cactus (<= 7 vertices) and desert (<= 6 vertices) counts", 600,
       graph_family_counts},
      {9, "Abel identity catalog over the default grid", 60, identity_catalog_grid},
      {10, "parity identity (n = 1..7) and leading relation (n = 2..7)", 60,
       parity_and_leading_relation},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > criterion.limit_seconds) {
      std::ostringstream s;
      s << "took " << seconds << "s, limit " << criterion.limit_seconds << "s";
      check.expect(false, s.str());
    }
    if (!check.ok) ++failures;
    const std::string detail = check.detail.str();
    std::printf("%s criterion %d: %s (%.2fs%s%s)\n", check.ok ? "PASS" : "FAIL", criterion.number,
                criterion.title.c_str(), seconds, detail.empty() ? "" : "; ", detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
