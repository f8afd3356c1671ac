#include "klbraid/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "klbraid/cactus.hpp"
#include "klbraid/exact.hpp"
#include "klbraid/identities.hpp"
#include "klbraid/klcore.hpp"
#include "klbraid/maps.hpp"
#include "klbraid/spgen.hpp"

namespace klbraid {
namespace {

// Exhaustive enumeration stays at or below these n regardless of --max-n.
constexpr int kExhaustiveSpN = 4;
constexpr int kExhaustiveCactusR = 4;

struct Context {
  std::string suite;
  int max_n;
  VerifyMode mode;
  std::vector<ReportRow> rows;

  bool closed_form() const { return mode != VerifyMode::kExhaustive; }
  bool exhaustive() const { return mode != VerifyMode::kClosedForm; }

  void row(std::string parameter, const Integer& lhs, const Integer& rhs) {
    const std::string l = klbraid::to_string(lhs);
    const std::string r = klbraid::to_string(rhs);
    rows.push_back(ReportRow{suite, std::move(parameter), l, r, lhs == rhs});
  }
};

std::string param(const char* name, long value) { return std::string(name) + "=" + std::to_string(value); }
std::string param(const char* a, long va, const char* b, long vb) {
  return param(a, va) + "," + param(b, vb);
}

Integer size_of(std::size_t size) { return Integer(static_cast<unsigned long>(size)); }

void suite_kl_vs_enumeration(Context& ctx) {
  KlTable table;
  for (int n = 2; n <= ctx.max_n; ++n) {
    const IntPoly recursion = kl_poly_braid(n, table);
    for (int i = 0; 2 * i < n - 1; ++i) {
      ctx.row(param("n", n, "i", i), recursion.coeff(i), count_S(n - 1, n - 1 - i));
    }
  }
}

void suite_p_even(Context& ctx) {
  KlTable table;
  if (ctx.closed_form()) {
    for (int n = 2; n <= ctx.max_n; ++n) {
      ctx.row(param("n", n) + ",recursion", kl_poly_braid(2 * n, table).coeff(n - 1),
              leading_coeff_closed_form(LeadingForm::kPEven, n));
    }
  }
  if (ctx.exhaustive()) {
    for (int n = 2; n <= std::min(ctx.max_n, kExhaustiveCactusR); ++n) {
      ctx.row(param("n", n) + ",cacti", size_of(enumerate_cacti(prefix_set(2 * n - 1)).size()),
              leading_coeff_closed_form(LeadingForm::kPEven, n));
    }
  }
}

void suite_p_odd(Context& ctx) {
  KlTable table;
  if (ctx.closed_form()) {
    for (int n = 2; n <= ctx.max_n; ++n) {
      ctx.row(param("n", n) + ",recursion", kl_poly_braid(2 * n - 1, table).coeff(n - 2),
              leading_coeff_closed_form(LeadingForm::kPOdd, n));
    }
  }
  if (ctx.exhaustive()) {
    for (int n = 2; n <= std::min(ctx.max_n, kExhaustiveSpN); ++n) {
      ctx.row(param("n", n) + ",enumeration", size_of(enumerate_S(2 * n - 2, n).size()),
              leading_coeff_closed_form(LeadingForm::kPOdd, n));
    }
  }
}

void suite_connected(Context& ctx) {
  if (ctx.exhaustive()) {
    for (int n = 2; n <= std::min(ctx.max_n, kExhaustiveSpN); ++n) {
      ctx.row(param("n", n) + ",E", count_E(n), count_E_closed(n));
      ctx.row(param("n", n) + ",E+Des1", count_E(n) + size_of(enumerate_deserts(n, 1).size()),
              size_of(enumerate_S(2 * n - 2, n).size()));
    }
  }
  if (ctx.closed_form()) {
    for (int n = 2; n <= ctx.max_n; ++n) {
      Integer split = count_E_closed(n) + des1_double_factorial_sum(n);
      ctx.row(param("n", n) + ",split", split, leading_coeff_closed_form(LeadingForm::kPOdd, n));
    }
  }
}

void suite_q_leading(Context& ctx) {
  KlTable table;
  for (int n = 2; n <= ctx.max_n; ++n) {
    ctx.row(param("n", n) + ",even", inv_kl_poly_braid(2 * n, table).coeff(n - 1),
            leading_coeff_closed_form(LeadingForm::kQEven, n));
    ctx.row(param("n", n) + ",odd", inv_kl_poly_braid(2 * n - 1, table).coeff(n - 2),
            leading_coeff_closed_form(LeadingForm::kQOdd, n));
  }
}

void suite_difference(Context& ctx) {
  if (ctx.exhaustive()) {
    for (int n = 2; n <= std::min(ctx.max_n, kExhaustiveSpN); ++n) {
      DifferenceReport r = verify_difference(n, DifferenceMode::kExhaustive);
      ctx.row(param("n", n) + ",exhaustive", r.difference, r.desert_side);
      if (n >= 3) ctx.row(param("n", n) + ",exhaustive-closed", r.difference, r.closed_form);
    }
  }
  if (ctx.closed_form()) {
    for (int n = 3; n <= ctx.max_n; ++n) {
      DifferenceReport r = verify_difference(n, DifferenceMode::kClosedForm);
      ctx.row(param("n", n) + ",closed-form", r.difference, r.desert_side);
      ctx.row(param("n", n) + ",closed-form-g", r.difference, r.closed_form);
    }
  }
}

void suite_fibers(Context& ctx) {
  for (int n = 2; n <= ctx.max_n; ++n) {
    FiberReport report = fibers_of_phi(n);
    for (const auto& [m, totals] : report.per_m) {
      Integer expected = 0;
      for (const auto& record : report.records) {
        if (record.m_class == m) expected += record.expected_fiber;
      }
      ctx.row(param("n", n, "m", m) + ",preimages", Integer(totals.preimages), expected);
    }
    int rebuilt = 0;
    for (const auto& [m, totals] : report.per_m) rebuilt += totals.preimages;
    ctx.row(param("n", n) + ",total", Integer(rebuilt), Integer(report.source_count));
    int covered = 0;
    for (const auto& record : report.records) covered += record.fiber_size > 0 ? 1 : 0;
    ctx.row(param("n", n) + ",covered-targets", Integer(covered), Integer(report.target_count));
    ctx.row(param("n", n) + ",problems", Integer(static_cast<long>(report.failures.size())), Integer(0));
  }
}

void suite_husimi(Context& ctx) {
  for (int p = 1; p <= ctx.max_n; ++p) {
    for (const HusimiType& type : feasible_husimi_types(p)) {
      ctx.row("p=" + std::to_string(p) + ",type=" + type.to_string(),
              size_of(enumerate_husimi(p, type).size()), count_husimi_closed(p, type));
    }
  }
  for (int r = 1; 2 * r - 1 <= ctx.max_n; ++r) {
    ctx.row(param("r", r) + ",cacti", size_of(enumerate_cacti(prefix_set(2 * r - 1)).size()),
            count_cacti_closed(r));
  }
}

void suite_rooted_deserts(Context& ctx) {
  if (ctx.exhaustive()) {
    for (int n = 2; n <= ctx.max_n; ++n) {
      for (int m = 1; m <= n - 1; ++m) {
        ctx.row(param("n", n, "m", m), size_of(enumerate_rooted_deserts(n, m).size()),
                count_rdes_closed(n, m));
      }
    }
  }
  if (ctx.closed_form()) {
    // A rooted desert with 2m roots is a Husimi graph with one K_{2m} block
    // and n-m-1 triangles once the roots are joined into a clique.
    for (int n = 2; n <= ctx.max_n; ++n) {
      for (int m = 1; m <= n - 1; ++m) {
        std::vector<int> counts(std::max(2, 2 * m - 1), 0);
        counts[1] += n - m - 1;
        counts[2 * m - 2] += 1;
        HusimiType type = HusimiType::of(counts);
        ctx.row(param("n", n, "m", m) + ",husimi", count_rdes_closed(n, m),
                count_husimi_closed(2 * n - 2, type));
      }
    }
  }
}

void suite_deserts(Context& ctx) {
  if (ctx.exhaustive()) {
    for (int n = 2; n <= ctx.max_n; ++n) {
      ctx.row(param("n", n) + ",des1", size_of(enumerate_deserts(n, 1).size()), count_des1_closed(n));
      for (int m = 1; 2 * m <= 2 * n - 2; ++m) {
        ctx.row(param("n", n, "m", m) + ",convolution", size_of(enumerate_deserts(n, m).size()),
                des_convolution(n, m));
      }
    }
  }
  if (ctx.closed_form()) {
    for (int n = 2; n <= ctx.max_n; ++n) {
      ctx.row(param("n", n) + ",convolution", des_convolution(n, 1), count_des1_closed(n));
      ctx.row(param("n", n) + ",double-factorial", des1_double_factorial_sum(n), count_des1_closed(n));
    }
  }
}

void suite_parity(Context& ctx) {
  KlTable table;
  for (int n = 1; n <= ctx.max_n; ++n) {
    ParityReport r = verify_parity_identity(n, table);
    ctx.row(param("n", n), r.p_coeff, r.q_coeff);
  }
}

void suite_leading_relation(Context& ctx) {
  KlTable table;
  for (int n = 2; n <= ctx.max_n; ++n) {
    LeadingRelationReport r = verify_leading_relation(n, table);
    ctx.row(param("n", n), r.lhs, r.rhs);
    ctx.row(param("n", n) + ",odd-block-and-several", r.single_odd_block + r.several_blocks, Integer(0));
    ctx.row(param("n", n) + ",single-even-block", r.single_even_block, Integer(-r.rhs));
    ctx.rows.back().pass = ctx.rows.back().pass && r.holds;
  }
}

void suite_identities(Context& ctx) {
  CatalogGrid grid;
  grid.max_index = ctx.max_n;
  grid.free_max_m = ctx.max_n;
  const std::vector<IdentityCase> cases = run_catalog(grid);
  std::map<std::string, CatalogSummary> per_id;
  std::vector<std::string> order;
  for (const auto& c : cases) {
    if (!per_id.contains(c.id)) order.push_back(c.id);
    auto& s = per_id[c.id];
    switch (c.status) {
      case CaseStatus::kPass:
        ++s.passed;
        break;
      case CaseStatus::kFail:
        ++s.failed;
        ctx.rows.push_back(ReportRow{ctx.suite, c.id + "," + c.params.to_string(),
                                     klbraid::to_string(c.lhs), klbraid::to_string(c.rhs), false});
        break;
      case CaseStatus::kSkip:
        ++s.skipped;
        break;
    }
  }
  for (const auto& id : order) {
    const auto& s = per_id[id];
    ctx.rows.push_back(ReportRow{ctx.suite,
                                 id + ",cases=" + std::to_string(s.passed + s.failed + s.skipped) +
                                     ",guard-skips=" + std::to_string(s.skipped),
                                 "failures=" + std::to_string(s.failed), "failures=0", s.failed == 0});
  }
}

struct Suite {
  SuiteInfo info;
  std::function<void(Context&)> run;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {{"thm1.1", "P_{B_n} coefficients equal |S(n-1, n-1-i)| by enumeration", 8, 9},
       suite_kl_vs_enumeration},
      {{"thm1.2", "leading coefficient of P_{B_2n} and triangular cactus counts", 7, 20}, suite_p_even},
      {{"thm1.3", "leading coefficient of P_{B_{2n-1}} and |S(2n-2, n)|", 7, 20}, suite_p_odd},
      {{"cor1.5", "connected members E_n of S(2n-2, n) and the desert split", 4, 30}, suite_connected},
      {{"thm1.6", "leading coefficients of Q_{B_2n} and Q_{B_{2n-1}}", 6, 20}, suite_q_leading},
      {{"prop2.7", "|S(2n-1,n)| - |S(2n-2,n)| against rooted desert counts", 20, 40}, suite_difference},
      {{"lem2.4", "fiber sizes of the deletion map", 4, 4}, suite_fibers},
      {{"lem3.1", "Husimi graph counts by type and triangular cacti", 6, 7}, suite_husimi},
      {{"prop3.2", "rooted desert counts", 4, 5}, suite_rooted_deserts},
      {{"lem3.3", "|Des_1(n)| and the desert convolution", 4, 5}, suite_deserts},
      {{"parity", "[t^{n-1}] P_{B_2n} equals [t^{n-1}] Q_{B_2n}", 7, 20}, suite_parity},
      {{"lem4.1", "[t^{n-2}] (P + Q)_{B_{2n-1}} as a sum over even blocks", 7, 20},
       suite_leading_relation},
      {{"identities", "Abel identity catalog, chains and derivative checks", 40, 60}, suite_identities},
  };
  return all;
}

}  // namespace

const std::vector<SuiteInfo>& verify_suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& s : suites()) out.push_back(s.info);
    return out;
  }();
  return infos;
}

std::vector<ReportRow> run_suite(std::string_view id, const SuiteOptions& options) {
  for (const auto& suite : suites()) {
    if (suite.info.id != id) continue;
    const int max_n = options.max_n.value_or(suite.info.default_max_n);
    if (max_n > suite.info.max_n_cap) {
      throw ResourceError("suite " + suite.info.id + " is capped at --max-n " +
                          std::to_string(suite.info.max_n_cap));
    }
    if (max_n < 1) throw std::invalid_argument("--max-n must be positive");
    Context ctx{suite.info.id, max_n, options.mode, {}};
    suite.run(ctx);
    return std::move(ctx.rows);
  }
  throw std::invalid_argument("unknown suite: " + std::string(id));
}

}  // namespace klbraid
