#include "klbraid/spgen.hpp"

#include <algorithm>
#include <unordered_set>

namespace klbraid {
namespace {

void check_sp_ground(int s) {
  if (s < 1 || s > kMaxSpGround) {
    throw ResourceError("series-parallel generation supports 1.." +
                        std::to_string(kMaxSpGround) + " elements, got " + std::to_string(s));
  }
}

void check_s_range(int n) {
  if (n < 0) throw std::domain_error("negative ground size");
  if (n > kMaxSpGround) {
    throw ResourceError("S(n, k) is capped at n <= " + std::to_string(kMaxSpGround));
  }
}

void enumerate_rec(SpCatalog& catalog, ElementSet remaining, int rank_left,
                   std::vector<ElementSet>& circuits, ElementSet ground,
                   std::vector<LabeledMatroid>& out) {
  if (remaining == 0) {
    if (rank_left == 0) out.push_back(LabeledMatroid::trusted(ground, circuits));
    return;
  }
  if (rank_left <= 0) return;
  const ElementSet low = remaining & -remaining;
  const ElementSet others = remaining & ~low;
  for (ElementSet extra = others;; extra = (extra - 1) & others) {
    const ElementSet block = extra | low;
    const int s = set_size(block);
    for (const auto& [rank, members] : catalog.simple_connected_on_prefix(s)) {
      if (rank > rank_left) break;
      for (const auto& member : members) {
        LabeledMatroid placed = place_on(member, block);
        const std::size_t mark = circuits.size();
        circuits.insert(circuits.end(), placed.circuits().begin(), placed.circuits().end());
        enumerate_rec(catalog, remaining & ~block, rank_left - rank, circuits, ground, out);
        circuits.resize(mark);
      }
    }
    if (extra == 0) break;
  }
}

}  // namespace

SpCatalog& SpCatalog::shared() {
  static SpCatalog catalog;
  return catalog;
}

const std::vector<LabeledMatroid>& SpCatalog::connected_on_prefix(int s) {
  check_sp_ground(s);
  std::lock_guard lock(mutex_);
  if (auto it = connected_.find(s); it != connected_.end()) return it->second;

  std::vector<LabeledMatroid> members;
  if (s == 1) {
    members.push_back(LabeledMatroid::free_matroid(prefix_set(1)));
  } else {
    const auto& smaller = connected_on_prefix(s - 1);
    std::unordered_set<LabeledMatroid, MatroidHash> seen;
    std::vector<int> mapping(static_cast<std::size_t>(s - 1));
    for (int added = 1; added <= s; ++added) {
      for (int i = 1; i < s; ++i) mapping[static_cast<std::size_t>(i - 1)] = i < added ? i : i + 1;
      for (const auto& base : smaller) {
        LabeledMatroid moved = relabel(base, mapping);
        for (int at : labels_of(moved.ground())) {
          for (auto&& grown : {series_extension(moved, at, added), parallel_extension(moved, at, added)}) {
            if (is_connected(grown)) seen.insert(grown);
          }
        }
      }
    }
    members.assign(seen.begin(), seen.end());
    std::sort(members.begin(), members.end());
  }
  return connected_.emplace(s, std::move(members)).first->second;
}

const std::map<int, std::vector<LabeledMatroid>>& SpCatalog::simple_connected_on_prefix(int s) {
  check_sp_ground(s);
  std::lock_guard lock(mutex_);
  if (auto it = simple_by_rank_.find(s); it != simple_by_rank_.end()) return it->second;
  std::map<int, std::vector<LabeledMatroid>> by_rank;
  for (const auto& m : connected_on_prefix(s)) {
    if (is_simple(m)) by_rank[m.rank()].push_back(m);
  }
  return simple_by_rank_.emplace(s, std::move(by_rank)).first->second;
}

Integer SpCatalog::simple_connected_count(int s, int rank) {
  const auto& by_rank = simple_connected_on_prefix(s);
  auto it = by_rank.find(rank);
  return it == by_rank.end() ? Integer(0) : Integer(static_cast<unsigned long>(it->second.size()));
}

LabeledMatroid place_on(const LabeledMatroid& m, ElementSet labels) {
  std::vector<int> targets = labels_of(labels);
  if (static_cast<int>(targets.size()) != m.size() || m.ground() != prefix_set(m.size())) {
    throw std::domain_error("place_on expects a matroid on {1..|labels|}");
  }
  return relabel(m, targets);
}

std::vector<LabeledMatroid> generate_connected_sp(ElementSet labels) {
  check_sp_ground(set_size(labels));
  std::vector<LabeledMatroid> out;
  for (const auto& m : SpCatalog::shared().connected_on_prefix(set_size(labels))) {
    out.push_back(place_on(m, labels));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LabeledMatroid> enumerate_S(int n, int k) {
  check_s_range(n);
  std::vector<LabeledMatroid> out;
  if (k < 0 || k > n) return out;
  std::vector<ElementSet> circuits;
  enumerate_rec(SpCatalog::shared(), prefix_set(n), k, circuits, prefix_set(n), out);
  std::sort(out.begin(), out.end());
  return out;
}

Integer count_S(int n, int k) {
  check_s_range(n);
  if (k < 0 || k > n) return 0;
  // ways[N][K]: matroids on N labeled elements of rank K; the block holding
  // the smallest label has size s and is chosen in C(N-1, s-1) ways.
  std::vector<std::vector<Integer>> ways(static_cast<std::size_t>(n) + 1,
                                         std::vector<Integer>(static_cast<std::size_t>(k) + 1));
  ways[0][0] = 1;
  auto& catalog = SpCatalog::shared();
  for (int total = 1; total <= n; ++total) {
    for (int s = 1; s <= total; ++s) {
      for (const auto& [rank, members] : catalog.simple_connected_on_prefix(s)) {
        for (int r = rank; r <= k; ++r) {
          ways[static_cast<std::size_t>(total)][static_cast<std::size_t>(r)] +=
              binomial(total - 1, s - 1) * Integer(static_cast<unsigned long>(members.size())) *
              ways[static_cast<std::size_t>(total - s)][static_cast<std::size_t>(r - rank)];
        }
      }
    }
  }
  return ways[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Integer count_E(int n) {
  if (n < 2 || 2 * n - 2 > kMaxSpGround) {
    throw ResourceError("count_E supports 2 <= n <= " + std::to_string((kMaxSpGround + 2) / 2));
  }
  return SpCatalog::shared().simple_connected_count(2 * n - 2, n);
}

std::map<int, std::vector<LabeledMatroid>> classify_by_m(int n) {
  if (n < 1) throw std::domain_error("classify_by_m requires n >= 1");
  if (n > 4) throw ResourceError("classify_by_m is capped at n <= 4");
  std::map<int, std::vector<LabeledMatroid>> classes;
  for (auto& m : enumerate_S(2 * n - 1, n)) {
    int through = count_3circuits_through(m, 2 * n - 1);
    classes[through].push_back(std::move(m));
  }
  return classes;
}

IntPoly kl_coeffs_via_enumeration(int n) {
  if (n < 1) throw std::domain_error("kl_coeffs_via_enumeration requires n >= 1");
  if (n > kMaxSpGround) throw ResourceError("kl_coeffs_via_enumeration is capped at n <= 9");
  std::vector<Integer> coeffs;
  for (int i = 0; i <= n - 1; ++i) coeffs.push_back(count_S(n - 1, n - 1 - i));
  return IntPoly(std::move(coeffs));
}

}  // namespace klbraid
