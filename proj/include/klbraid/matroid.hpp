#pragma once

// Small matroids on labeled ground sets, stored by their circuits.
//
// Labels are 1..kMaxGround. A set of labels is an ElementSet bitmask where
// bit (label - 1) marks membership.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace klbraid {

using ElementSet = std::uint32_t;

inline constexpr int kMaxGround = 10;

constexpr ElementSet element_bit(int label) { return ElementSet{1} << (label - 1); }
constexpr bool contains(ElementSet set, int label) { return (set & element_bit(label)) != 0; }
int set_size(ElementSet set);
ElementSet prefix_set(int n);  // {1, ..., n}
std::vector<int> labels_of(ElementSet set);
std::string format_set(ElementSet set);  // "{1,2,3}"

class LabeledMatroid {
 public:
  // Validates the circuit axioms (nonempty, pairwise incomparable, strong
  // elimination) and that every circuit lies inside the ground set; throws
  // std::invalid_argument otherwise.
  static LabeledMatroid from_circuits(ElementSet ground, std::vector<ElementSet> circuits);
  static LabeledMatroid free_matroid(ElementSet ground);
  static LabeledMatroid uniform(int rank, ElementSet ground);
  // Cycle matroid of a simple graph whose edges are given as vertex pairs;
  // edge i gets label first_label + i.
  static LabeledMatroid graphic(const std::vector<std::pair<int, int>>& edges,
                                int first_label = 1);

  LabeledMatroid() = default;

  ElementSet ground() const { return ground_; }
  int size() const { return set_size(ground_); }
  int rank() const { return rank_; }
  // Sorted ascending by mask value.
  const std::vector<ElementSet>& circuits() const { return circuits_; }

  std::string to_string() const;

  friend bool operator==(const LabeledMatroid& a, const LabeledMatroid& b) {
    return a.ground_ == b.ground_ && a.circuits_ == b.circuits_;
  }
  friend bool operator<(const LabeledMatroid& a, const LabeledMatroid& b) {
    if (a.ground_ != b.ground_) return a.ground_ < b.ground_;
    return a.circuits_ < b.circuits_;
  }

  // Construction without axiom checks, for operations whose output is a
  // matroid by construction. Circuits are sorted and minimized.
  static LabeledMatroid trusted(ElementSet ground, std::vector<ElementSet> circuits);

 private:
  ElementSet ground_ = 0;
  std::vector<ElementSet> circuits_;
  int rank_ = 0;
};

struct MatroidHash {
  std::size_t operator()(const LabeledMatroid& m) const;
};

bool satisfies_circuit_axioms(ElementSet ground, const std::vector<ElementSet>& circuits);

bool is_independent(const LabeledMatroid& m, ElementSet set);
int rank_of(const LabeledMatroid& m, ElementSet set);

LabeledMatroid delete_element(const LabeledMatroid& m, int e);
LabeledMatroid contract_element(const LabeledMatroid& m, int e);
// M / contract \ remove; the two sets must be disjoint subsets of the ground.
LabeledMatroid minor(const LabeledMatroid& m, ElementSet contract, ElementSet remove);
LabeledMatroid restrict_to(const LabeledMatroid& m, ElementSet keep);
LabeledMatroid direct_sum(const LabeledMatroid& a, const LabeledMatroid& b);
// Renames label i to mapping[i - 1]; the mapping must be injective.
LabeledMatroid relabel(const LabeledMatroid& m, const std::vector<int>& mapping);

bool is_simple(const LabeledMatroid& m);
bool is_connected(const LabeledMatroid& m);
std::vector<ElementSet> components(const LabeledMatroid& m);

// Elements e outside C such that some S inside C makes both S+e and (C-S)+e
// circuits. C must be a circuit of m.
ElementSet chords_of(const LabeledMatroid& m, ElementSet circuit);
bool is_chordless(const LabeledMatroid& m, ElementSet circuit);
// Simple, and every circuit of size >= 4 has a chord.
bool is_chordal(const LabeledMatroid& m);

std::vector<ElementSet> circuits_of_size(const LabeledMatroid& m, int k);
int count_3circuits_through(const LabeledMatroid& m, int e);

// Coextension making {at, added} a series pair.
LabeledMatroid series_extension(const LabeledMatroid& m, int at, int added);
// Extension making {at, added} a parallel pair.
LabeledMatroid parallel_extension(const LabeledMatroid& m, int at, int added);
// Parallel extension at g by e, then series extension at e by f. The result
// has {g, e, f} as a 3-circuit.
LabeledMatroid triangle_extension(const LabeledMatroid& m, int g, int e, int f);

// Permutation search; intended for ground sets of at most 8 elements.
bool is_isomorphic(const LabeledMatroid& a, const LabeledMatroid& b);

// True iff some minor is isomorphic to U_{2,4} or M(K_4).
bool has_excluded_minor(const LabeledMatroid& m);

}  // namespace klbraid
