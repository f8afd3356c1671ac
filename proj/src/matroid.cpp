#include "klbraid/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "klbraid/exact.hpp"

namespace klbraid {
namespace {

bool is_subset(ElementSet a, ElementSet b) { return (a & ~b) == 0; }

// Keeps the inclusion-minimal nonempty sets, sorted and deduplicated.
std::vector<ElementSet> minimal_sets(std::vector<ElementSet> sets) {
  std::sort(sets.begin(), sets.end(), [](ElementSet a, ElementSet b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<ElementSet> kept;
  for (ElementSet s : sets) {
    if (s == 0) continue;
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [s](ElementSet k) { return is_subset(k, s); });
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

bool has_circuit(const std::vector<ElementSet>& circuits, ElementSet set) {
  return std::binary_search(circuits.begin(), circuits.end(), set);
}

void check_label(ElementSet ground, int e) {
  if (e < 1 || e > kMaxGround || !contains(ground, e)) {
    throw std::domain_error("element " + std::to_string(e) + " is not in the ground set");
  }
}

void check_fresh(ElementSet ground, int label) {
  if (label < 1 || label > kMaxGround) {
    throw std::domain_error("label " + std::to_string(label) + " out of range");
  }
  if (contains(ground, label)) {
    throw std::domain_error("label " + std::to_string(label) + " already in the ground set");
  }
}

int greedy_rank(const std::vector<ElementSet>& circuits, ElementSet set) {
  ElementSet independent = 0;
  for (ElementSet rest = set; rest != 0; rest &= rest - 1) {
    ElementSet candidate = independent | (rest & -rest);
    bool dependent = std::any_of(circuits.begin(), circuits.end(),
                                 [candidate](ElementSet c) { return is_subset(c, candidate); });
    if (!dependent) independent = candidate;
  }
  return std::popcount(independent);
}

}  // namespace

int set_size(ElementSet set) { return std::popcount(set); }

ElementSet prefix_set(int n) {
  if (n < 0 || n > 31) throw std::domain_error("prefix_set out of range");
  return n == 0 ? 0 : (ElementSet{1} << n) - 1;
}

std::vector<int> labels_of(ElementSet set) {
  std::vector<int> out;
  for (int label = 1; set != 0; ++label, set >>= 1) {
    if (set & 1) out.push_back(label);
  }
  return out;
}

std::string format_set(ElementSet set) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (int label : labels_of(set)) {
    if (!first) os << ",";
    os << label;
    first = false;
  }
  os << "}";
  return os.str();
}

LabeledMatroid LabeledMatroid::trusted(ElementSet ground, std::vector<ElementSet> circuits) {
  LabeledMatroid m;
  m.ground_ = ground;
  m.circuits_ = minimal_sets(std::move(circuits));
  m.rank_ = greedy_rank(m.circuits_, ground);
  return m;
}

LabeledMatroid LabeledMatroid::from_circuits(ElementSet ground, std::vector<ElementSet> circuits) {
  if (ground & ~prefix_set(kMaxGround)) {
    throw std::invalid_argument("ground set exceeds the label range");
  }
  std::sort(circuits.begin(), circuits.end());
  circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
  if (!satisfies_circuit_axioms(ground, circuits)) {
    throw std::invalid_argument("circuit axioms violated");
  }
  return trusted(ground, std::move(circuits));
}

LabeledMatroid LabeledMatroid::free_matroid(ElementSet ground) { return from_circuits(ground, {}); }

LabeledMatroid LabeledMatroid::uniform(int rank, ElementSet ground) {
  std::vector<ElementSet> circuits;
  if (rank < set_size(ground)) {
    for (ElementSet s = ground;; s = (s - 1) & ground) {
      if (set_size(s) == rank + 1) circuits.push_back(s);
      if (s == 0) break;
    }
  }
  return from_circuits(ground, std::move(circuits));
}

LabeledMatroid LabeledMatroid::graphic(const std::vector<std::pair<int, int>>& edges,
                                       int first_label) {
  const int count = static_cast<int>(edges.size());
  if (first_label < 1 || first_label + count - 1 > kMaxGround) {
    throw std::domain_error("graphic matroid exceeds the label range");
  }
  int max_vertex = 0;
  for (auto [u, v] : edges) max_vertex = std::max({max_vertex, u, v});
  // A subset of edges is dependent iff it closes a cycle.
  auto acyclic = [&](unsigned subset) {
    std::vector<int> parent(static_cast<std::size_t>(max_vertex) + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
      return x;
    };
    for (int i = 0; i < count; ++i) {
      if (!(subset >> i & 1)) continue;
      int a = find(edges[static_cast<std::size_t>(i)].first);
      int b = find(edges[static_cast<std::size_t>(i)].second);
      if (a == b) return false;
      parent[static_cast<std::size_t>(a)] = b;
    }
    return true;
  };
  std::vector<ElementSet> circuits;
  for (unsigned subset = 1; subset < (1u << count); ++subset) {
    if (acyclic(subset)) continue;
    bool minimal = true;
    for (int i = 0; i < count && minimal; ++i) {
      if ((subset >> i & 1) && !acyclic(subset & ~(1u << i))) minimal = false;
    }
    if (minimal) circuits.push_back(static_cast<ElementSet>(subset) << (first_label - 1));
  }
  ElementSet ground = prefix_set(count) << (first_label - 1);
  return from_circuits(ground, std::move(circuits));
}

std::string LabeledMatroid::to_string() const {
  std::ostringstream os;
  os << "ground " << format_set(ground_) << " rank " << rank_ << " circuits [";
  for (std::size_t i = 0; i < circuits_.size(); ++i) {
    if (i) os << " ";
    os << format_set(circuits_[i]);
  }
  os << "]";
  return os.str();
}

std::size_t MatroidHash::operator()(const LabeledMatroid& m) const {
  std::size_t h = m.ground() * 0x9E3779B97F4A7C15ull;
  for (ElementSet c : m.circuits()) {
    h ^= c + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
  }
  return h;
}

bool satisfies_circuit_axioms(ElementSet ground, const std::vector<ElementSet>& circuits) {
  for (ElementSet c : circuits) {
    if (c == 0 || !is_subset(c, ground)) return false;
  }
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i == j) continue;
      ElementSet a = circuits[i], b = circuits[j];
      if (is_subset(a, b)) return false;
      if (i > j) continue;
      ElementSet shared = a & b;
      for (ElementSet rest = shared; rest != 0; rest &= rest - 1) {
        ElementSet e = rest & -rest;
        ElementSet pool = (a | b) & ~e;
        bool found = std::any_of(circuits.begin(), circuits.end(),
                                 [pool](ElementSet c) { return is_subset(c, pool); });
        if (!found) return false;
      }
    }
  }
  return true;
}

bool is_independent(const LabeledMatroid& m, ElementSet set) {
  if (!is_subset(set, m.ground())) throw std::domain_error("set is not inside the ground set");
  return std::none_of(m.circuits().begin(), m.circuits().end(),
                      [set](ElementSet c) { return is_subset(c, set); });
}

int rank_of(const LabeledMatroid& m, ElementSet set) {
  if (!is_subset(set, m.ground())) throw std::domain_error("set is not inside the ground set");
  return greedy_rank(m.circuits(), set);
}

LabeledMatroid delete_element(const LabeledMatroid& m, int e) {
  check_label(m.ground(), e);
  return minor(m, 0, element_bit(e));
}

LabeledMatroid contract_element(const LabeledMatroid& m, int e) {
  check_label(m.ground(), e);
  return minor(m, element_bit(e), 0);
}

LabeledMatroid minor(const LabeledMatroid& m, ElementSet contract, ElementSet remove) {
  if ((contract & remove) != 0 || !is_subset(contract | remove, m.ground())) {
    throw std::domain_error("minor sets must be disjoint subsets of the ground set");
  }
  std::vector<ElementSet> out;
  for (ElementSet c : m.circuits()) {
    if (c & remove) continue;
    out.push_back(c & ~contract);
  }
  return LabeledMatroid::trusted(m.ground() & ~(contract | remove), std::move(out));
}

LabeledMatroid restrict_to(const LabeledMatroid& m, ElementSet keep) {
  if (!is_subset(keep, m.ground())) throw std::domain_error("restriction outside the ground set");
  return minor(m, 0, m.ground() & ~keep);
}

LabeledMatroid direct_sum(const LabeledMatroid& a, const LabeledMatroid& b) {
  if (a.ground() & b.ground()) throw std::domain_error("direct sum of overlapping ground sets");
  std::vector<ElementSet> circuits = a.circuits();
  circuits.insert(circuits.end(), b.circuits().begin(), b.circuits().end());
  return LabeledMatroid::trusted(a.ground() | b.ground(), std::move(circuits));
}

LabeledMatroid relabel(const LabeledMatroid& m, const std::vector<int>& mapping) {
  auto map_set = [&](ElementSet s) {
    ElementSet out = 0;
    for (int label : labels_of(s)) {
      if (label > static_cast<int>(mapping.size())) throw std::domain_error("relabel mapping too short");
      int target = mapping[static_cast<std::size_t>(label - 1)];
      if (target < 1 || target > kMaxGround) throw std::domain_error("relabel target out of range");
      out |= element_bit(target);
    }
    return out;
  };
  ElementSet ground = map_set(m.ground());
  if (set_size(ground) != m.size()) throw std::domain_error("relabel mapping is not injective");
  std::vector<ElementSet> circuits;
  circuits.reserve(m.circuits().size());
  for (ElementSet c : m.circuits()) circuits.push_back(map_set(c));
  return LabeledMatroid::trusted(ground, std::move(circuits));
}

bool is_simple(const LabeledMatroid& m) {
  return std::none_of(m.circuits().begin(), m.circuits().end(),
                      [](ElementSet c) { return set_size(c) <= 2; });
}

std::vector<ElementSet> components(const LabeledMatroid& m) {
  std::vector<ElementSet> parts;
  for (int label : labels_of(m.ground())) parts.push_back(element_bit(label));
  for (ElementSet c : m.circuits()) {
    ElementSet merged = c;
    std::vector<ElementSet> kept;
    for (ElementSet p : parts) {
      if (p & c) {
        merged |= p;
      } else {
        kept.push_back(p);
      }
    }
    kept.push_back(merged);
    parts = std::move(kept);
  }
  std::sort(parts.begin(), parts.end(),
            [](ElementSet a, ElementSet b) { return (a & -a) < (b & -b); });
  return parts;
}

bool is_connected(const LabeledMatroid& m) { return components(m).size() <= 1; }

ElementSet chords_of(const LabeledMatroid& m, ElementSet circuit) {
  const auto& circuits = m.circuits();
  if (!has_circuit(circuits, circuit)) throw std::domain_error("not a circuit of the matroid");
  ElementSet chords = 0;
  for (int e : labels_of(m.ground() & ~circuit)) {
    ElementSet eb = element_bit(e);
    for (ElementSet d : circuits) {
      if (!(d & eb) || !is_subset(d, circuit | eb)) continue;
      ElementSet part = d & ~eb;
      if (has_circuit(circuits, (circuit & ~part) | eb)) {
        chords |= eb;
        break;
      }
    }
  }
  return chords;
}

bool is_chordless(const LabeledMatroid& m, ElementSet circuit) { return chords_of(m, circuit) == 0; }

bool is_chordal(const LabeledMatroid& m) {
  if (!is_simple(m)) return false;
  return std::all_of(m.circuits().begin(), m.circuits().end(), [&](ElementSet c) {
    return set_size(c) < 4 || !is_chordless(m, c);
  });
}

std::vector<ElementSet> circuits_of_size(const LabeledMatroid& m, int k) {
  std::vector<ElementSet> out;
  for (ElementSet c : m.circuits()) {
    if (set_size(c) == k) out.push_back(c);
  }
  return out;
}

int count_3circuits_through(const LabeledMatroid& m, int e) {
  check_label(m.ground(), e);
  return static_cast<int>(std::count_if(m.circuits().begin(), m.circuits().end(), [e](ElementSet c) {
    return set_size(c) == 3 && contains(c, e);
  }));
}

LabeledMatroid series_extension(const LabeledMatroid& m, int at, int added) {
  check_label(m.ground(), at);
  check_fresh(m.ground(), added);
  std::vector<ElementSet> circuits;
  circuits.reserve(m.circuits().size());
  for (ElementSet c : m.circuits()) {
    circuits.push_back(contains(c, at) ? (c | element_bit(added)) : c);
  }
  return LabeledMatroid::trusted(m.ground() | element_bit(added), std::move(circuits));
}

LabeledMatroid parallel_extension(const LabeledMatroid& m, int at, int added) {
  check_label(m.ground(), at);
  check_fresh(m.ground(), added);
  if (has_circuit(m.circuits(), element_bit(at))) {
    throw std::domain_error("parallel extension at a loop");
  }
  std::vector<ElementSet> circuits = m.circuits();
  circuits.push_back(element_bit(at) | element_bit(added));
  for (ElementSet c : m.circuits()) {
    if (contains(c, at)) circuits.push_back((c & ~element_bit(at)) | element_bit(added));
  }
  return LabeledMatroid::trusted(m.ground() | element_bit(added), std::move(circuits));
}

LabeledMatroid triangle_extension(const LabeledMatroid& m, int g, int e, int f) {
  if (e == f) throw std::domain_error("triangle extension needs two distinct new labels");
  check_fresh(m.ground(), f);
  return series_extension(parallel_extension(m, g, e), e, f);
}

bool is_isomorphic(const LabeledMatroid& a, const LabeledMatroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() || a.circuits().size() != b.circuits().size()) {
    return false;
  }
  auto size_profile = [](const LabeledMatroid& m) {
    std::vector<int> sizes;
    for (ElementSet c : m.circuits()) sizes.push_back(set_size(c));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
  };
  if (size_profile(a) != size_profile(b)) return false;

  std::vector<int> source = labels_of(a.ground());
  std::vector<int> target = labels_of(b.ground());
  std::vector<int> mapping(kMaxGround, 1);
  do {
    for (std::size_t i = 0; i < source.size(); ++i) {
      mapping[static_cast<std::size_t>(source[i] - 1)] = target[i];
    }
    std::vector<ElementSet> image;
    image.reserve(a.circuits().size());
    for (ElementSet c : a.circuits()) {
      ElementSet out = 0;
      for (int label : labels_of(c)) out |= element_bit(mapping[static_cast<std::size_t>(label - 1)]);
      image.push_back(out);
    }
    std::sort(image.begin(), image.end());
    if (image == b.circuits()) return true;
  } while (std::next_permutation(target.begin(), target.end()));
  return false;
}

bool has_excluded_minor(const LabeledMatroid& m) {
  static const LabeledMatroid u24 = LabeledMatroid::uniform(2, prefix_set(4));
  static const LabeledMatroid k4 =
      LabeledMatroid::graphic({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  const ElementSet ground = m.ground();
  for (ElementSet keep = ground;; keep = (keep - 1) & ground) {
    const int kept = set_size(keep);
    if (kept == 4 || kept == 6) {
      const LabeledMatroid& target = kept == 4 ? u24 : k4;
      const ElementSet rest = ground & ~keep;
      for (ElementSet contract = rest;; contract = (contract - 1) & rest) {
        LabeledMatroid candidate = minor(m, contract, rest & ~contract);
        if (candidate.rank() == target.rank() && is_simple(candidate) &&
            is_isomorphic(candidate, target)) {
          return true;
        }
        if (contract == 0) break;
      }
    }
    if (keep == 0) break;
  }
  return false;
}

}  // namespace klbraid
