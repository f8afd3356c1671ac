#pragma once

// The deletion map S(2n-1, n) -> S(2n-2, n), M -> M \ (2n-1), and the
// statistics of its fibers.
//
// Targets are classified by m, the number of 3-circuits through 2n-1 in any
// preimage. A target has exactly C(m, 2) chordless 4-circuits and is
// disconnected exactly when m = 1, so m is read off the target alone.

#include <map>
#include <string>
#include <vector>

#include "klbraid/cactus.hpp"
#include "klbraid/exact.hpp"
#include "klbraid/matroid.hpp"

namespace klbraid {

// M \ (2n-1) for M in S(2n-1, n), where 2n-1 is the largest label. Throws
// InvariantViolation if the rank drops or the result is not simple.
LabeledMatroid phi(const LabeledMatroid& m);

int m_class_of_target(const LabeledMatroid& target);

struct FiberRecord {
  LabeledMatroid target;
  int m_class = 0;
  int fiber_size = 0;
  int expected_fiber = 0;
  bool connected = false;
};

struct FiberTotals {
  int targets = 0;
  int preimages = 0;
};

struct FiberReport {
  int n = 0;
  int source_count = 0;  // |S(2n-1, n)|
  int target_count = 0;  // |S(2n-2, n)|
  std::vector<FiberRecord> records;  // sorted by target
  std::map<int, FiberTotals> per_m;
  bool surjective = false;
  bool fibers_match = false;      // every fiber has its expected size
  bool classes_agree = false;     // preimage m equals target m
  bool connectivity_agrees = false;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Expected fiber: 1 for m >= 3, 3 for m = 2, and for m = 1 the product of
// the two component sizes of the (disconnected) target.
FiberReport fibers_of_phi(int n);

// Rooted desert with the 3-circuits of an m = 2 target as triangles and its
// unique chordless 4-circuit as roots.
RootedDesert sigma2(const LabeledMatroid& target);

enum class DifferenceMode { kExhaustive, kClosedForm };

struct DifferenceReport {
  int n = 0;
  DifferenceMode mode = DifferenceMode::kClosedForm;
  Integer difference;   // |S(2n-1,n)| - |S(2n-2,n)|
  Integer desert_side;  // 2|RDes_2| + |RDes_1| - |Des_1|
  Integer closed_form;  // (n-1)^{n-5} (2n-1)! / (3 (n-3)!), n >= 3
  bool holds = false;
};

DifferenceReport verify_difference(int n, DifferenceMode mode);

}  // namespace klbraid
