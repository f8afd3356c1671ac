#include "klbraid/maps.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "klbraid/klcore.hpp"
#include "klbraid/spgen.hpp"

namespace klbraid {
namespace {

int top_label(ElementSet ground) { return 32 - std::countl_zero(ground); }

int chordless_4circuits(const LabeledMatroid& m) {
  int count = 0;
  for (ElementSet c : circuits_of_size(m, 4)) {
    if (is_chordless(m, c)) ++count;
  }
  return count;
}

}  // namespace

LabeledMatroid phi(const LabeledMatroid& m) {
  const int size = m.size();
  if (size < 3 || size % 2 == 0 || m.ground() != prefix_set(size)) {
    throw std::domain_error("phi expects a matroid on [2n-1] with n >= 2");
  }
  LabeledMatroid image = delete_element(m, top_label(m.ground()));
  if (image.rank() != m.rank()) {
    throw InvariantViolation("deleting the top element dropped the rank: " + m.to_string());
  }
  if (!is_simple(image)) throw InvariantViolation("deletion produced a non-simple matroid");
  return image;
}

int m_class_of_target(const LabeledMatroid& target) {
  const int c = chordless_4circuits(target);
  const bool connected = is_connected(target);
  if (c == 0) {
    if (connected) throw InvariantViolation("connected target without chordless 4-circuits");
    return 1;
  }
  if (!connected) throw InvariantViolation("disconnected target with chordless 4-circuits");
  for (int m = 2; m * (m - 1) / 2 <= c; ++m) {
    if (m * (m - 1) / 2 == c) return m;
  }
  throw InvariantViolation("chordless 4-circuit count " + std::to_string(c) +
                           " is not a binomial coefficient C(m, 2)");
}

FiberReport fibers_of_phi(int n) {
  if (n < 2) throw std::domain_error("fibers_of_phi requires n >= 2");
  if (n > 4) throw ResourceError("fibers_of_phi is capped at n <= 4");
  FiberReport report;
  report.n = n;
  const auto sources = enumerate_S(2 * n - 1, n);
  const auto targets = enumerate_S(2 * n - 2, n);
  report.source_count = static_cast<int>(sources.size());
  report.target_count = static_cast<int>(targets.size());

  std::map<LabeledMatroid, std::pair<int, std::set<int>>> images;
  for (const auto& source : sources) {
    auto& slot = images[phi(source)];
    ++slot.first;
    slot.second.insert(count_3circuits_through(source, 2 * n - 1));
  }

  report.surjective = true;
  report.fibers_match = true;
  report.classes_agree = true;
  report.connectivity_agrees = true;
  int covered = 0;
  for (const auto& target : targets) {
    FiberRecord record;
    record.target = target;
    record.m_class = m_class_of_target(target);
    record.connected = is_connected(target);
    if (record.m_class >= 3) {
      record.expected_fiber = 1;
    } else if (record.m_class == 2) {
      record.expected_fiber = 3;
    } else {
      record.expected_fiber = 1;
      for (ElementSet part : components(target)) record.expected_fiber *= set_size(part);
    }
    auto it = images.find(target);
    if (it == images.end()) {
      report.surjective = false;
      report.failures.push_back("no preimage for " + target.to_string());
    } else {
      ++covered;
      record.fiber_size = it->second.first;
      if (it->second.second != std::set<int>{record.m_class}) {
        report.classes_agree = false;
        report.failures.push_back("preimage classes disagree with target class for " +
                                  target.to_string());
      }
    }
    if (record.fiber_size != record.expected_fiber) {
      report.fibers_match = false;
      report.failures.push_back("fiber of size " + std::to_string(record.fiber_size) +
                                ", expected " + std::to_string(record.expected_fiber) + " over " +
                                target.to_string());
    }
    if (record.connected != (record.m_class > 1)) {
      report.connectivity_agrees = false;
      report.failures.push_back("connectivity does not match m for " + target.to_string());
    }
    auto& totals = report.per_m[record.m_class];
    ++totals.targets;
    totals.preimages += record.fiber_size;
    report.records.push_back(std::move(record));
  }
  if (covered != static_cast<int>(images.size())) {
    report.failures.push_back("some images fall outside S(2n-2, n)");
  }
  int rebuilt = 0;
  for (const auto& [m, totals] : report.per_m) rebuilt += totals.preimages;
  if (rebuilt != report.source_count) {
    report.failures.push_back("fiber sizes sum to " + std::to_string(rebuilt) + ", not " +
                              std::to_string(report.source_count));
  }
  return report;
}

RootedDesert sigma2(const LabeledMatroid& target) {
  if (m_class_of_target(target) != 2) throw std::domain_error("sigma2 expects an m = 2 target");
  LabeledGraph graph(target.ground());
  for (ElementSet triangle : circuits_of_size(target, 3)) {
    std::vector<int> vs = labels_of(triangle);
    graph.add_edge(vs[0], vs[1]);
    graph.add_edge(vs[0], vs[2]);
    graph.add_edge(vs[1], vs[2]);
  }
  VertexSet roots = 0;
  for (ElementSet c : circuits_of_size(target, 4)) {
    if (is_chordless(target, c)) roots = c;
  }
  RootedDesert desert{graph, roots};
  if (!is_rooted_desert(desert) || graph.connected_components().size() != 4) {
    throw InvariantViolation("sigma2 did not produce a rooted desert with 4 components");
  }
  return desert;
}

DifferenceReport verify_difference(int n, DifferenceMode mode) {
  if (n < 2) throw std::domain_error("verify_difference requires n >= 2");
  DifferenceReport report;
  report.n = n;
  report.mode = mode;
  if (mode == DifferenceMode::kExhaustive) {
    if (n > 4) throw ResourceError("exhaustive difference check is capped at n <= 4");
    report.difference = count_S(2 * n - 1, n) - count_S(2 * n - 2, n);
    const long rdes2 = n >= 3 ? static_cast<long>(enumerate_rooted_deserts(n, 2).size()) : 0;
    const long rdes1 = static_cast<long>(enumerate_rooted_deserts(n, 1).size());
    const long des1 = static_cast<long>(enumerate_deserts(n, 1).size());
    report.desert_side = 2 * rdes2 + rdes1 - des1;
  } else {
    report.difference = leading_coeff_closed_form(LeadingForm::kPEven, n) -
                        leading_coeff_closed_form(LeadingForm::kPOdd, n);
    report.desert_side = 2 * count_rdes_closed(n, 2) + count_rdes_closed(n, 1) - count_des1_closed(n);
  }
  report.holds = report.difference == report.desert_side;
  if (n >= 3) {
    report.closed_form = leading_difference_closed_form(n);
    report.holds = report.holds && report.difference == report.closed_form;
  }
  return report;
}

}  // namespace klbraid
