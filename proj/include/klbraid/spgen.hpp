#pragma once

// Exhaustive generation of labeled series-parallel matroids and of
// S(n, k), the simple quasi series-parallel matroids of rank k on [n].
//
// A connected series-parallel matroid on E is either a single coloop or is
// reached from a connected one on E - {e} by a series or parallel extension
// adding e. Generation runs over that closure (non-simple members included,
// since simple ones can have non-simple ancestors) and dedupes by circuit
// set. A simple quasi series-parallel matroid is a direct sum of connected
// simple series-parallel matroids over a set partition of the ground set.

#include <map>
#include <mutex>
#include <vector>

#include "klbraid/exact.hpp"
#include "klbraid/matroid.hpp"

namespace klbraid {

inline constexpr int kMaxSpGround = 9;

// Process-wide memo of connected series-parallel matroids, generated once
// per ground size on the labels {1..s} and relabeled on request.
class SpCatalog {
 public:
  static SpCatalog& shared();

  // All connected series-parallel matroids on {1..s}, sorted.
  const std::vector<LabeledMatroid>& connected_on_prefix(int s);
  // The simple ones among them, indexed by rank.
  const std::map<int, std::vector<LabeledMatroid>>& simple_connected_on_prefix(int s);
  // Number of connected simple series-parallel matroids of the given rank on
  // any s-element label set.
  Integer simple_connected_count(int s, int rank);

 private:
  SpCatalog() = default;

  std::recursive_mutex mutex_;
  std::map<int, std::vector<LabeledMatroid>> connected_;
  std::map<int, std::map<int, std::vector<LabeledMatroid>>> simple_by_rank_;
};

// Monotone relabeling of a matroid on {1..|E|} onto the labels of E.
LabeledMatroid place_on(const LabeledMatroid& m, ElementSet labels);

std::vector<LabeledMatroid> generate_connected_sp(ElementSet labels);

// Sorted list of S(n, k).
std::vector<LabeledMatroid> enumerate_S(int n, int k);
Integer count_S(int n, int k);

// Connected members of S(2n-2, n).
Integer count_E(int n);

// S(2n-1, n) split by the number of 3-circuits through the element 2n-1.
std::map<int, std::vector<LabeledMatroid>> classify_by_m(int n);

// sum_i |S(n-1, n-1-i)| t^i.
IntPoly kl_coeffs_via_enumeration(int n);

}  // namespace klbraid
