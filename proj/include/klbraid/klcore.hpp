#pragma once

// Kazhdan-Lusztig (P) and inverse Kazhdan-Lusztig (Q) polynomials of the
// braid matroids B_n, the graphic matroids of the complete graphs K_n.
//
// The lattice of flats of B_n is the lattice of set partitions of [n]. A flat
// whose blocks have sizes lambda restricts to B_{lambda_1} (+) B_{lambda_2}
// (+) ... and contracts to B_{len(lambda)}, so both recursions are summed over
// integer partitions of n weighted by the number of set partitions of each
// type, never over the set partitions themselves.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "klbraid/exact.hpp"

namespace klbraid {

// Integer partition lambda of k, parts weakly decreasing.
struct PartitionType {
  std::vector<int> parts;

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }
  // Number of parts equal to j, for j >= 1.
  int multiplicity(int j) const;
  bool is_all_ones() const;
  std::string to_string() const;

  friend bool operator==(const PartitionType&, const PartitionType&) = default;
};

// All partitions of k in reverse-lexicographic order: (k), (k-1,1), ...,
// (1^k).
std::vector<PartitionType> partitions_of(int k);

// Number of set partitions of [k] with block sizes lambda:
// k! / (prod lambda_i! * prod_j m_j!).
Integer flat_count(const PartitionType& lambda);

// Characteristic polynomial of B_n: (t-1)(t-2)...(t-(n-1)).
IntPoly char_poly_braid(int n);

enum class PolyKind { kP, kQ };
enum class Provenance { kRecursion, kEnumeration, kCache };

std::string to_string(PolyKind kind);
std::string to_string(Provenance provenance);

// Memo of P_{B_n} and Q_{B_n} keyed by n. Lookups and inserts are
// serialized, so independent n may be filled from several threads.
class KlTable {
 public:
  struct Entry {
    IntPoly poly;
    Provenance provenance;
  };

  std::optional<Entry> find(PolyKind kind, int n) const;
  void insert(PolyKind kind, int n, IntPoly poly, Provenance provenance);
  std::vector<int> keys(PolyKind kind) const;

 private:
  mutable std::mutex mutex_;
  std::map<int, Entry> p_;
  std::map<int, Entry> q_;
};

// P_{B_n} from t^d P(1/t) = sum_F chi_{B_n|F}(t) P_{B_n/F}(t), d = n - 1.
// The F = empty term is P itself; moving it left leaves t^d P(1/t) - P(t)
// equal to the sum over nonempty flats, whose top half determines P.
IntPoly kl_poly_braid(int n, KlTable& table);

// Q_{B_n} from P_M = -sum_{F != E} P_{M|F} (-1)^{rk M/F} Q_{M/F}, solving
// for the F = empty term.
IntPoly inv_kl_poly_braid(int n, KlTable& table);

enum class LeadingForm { kPEven, kPOdd, kQEven, kQOdd };

// Closed forms for the leading coefficients, n >= 2:
//   kPEven: [t^{n-1}] P_{B_{2n}}   kPOdd: [t^{n-2}] P_{B_{2n-1}}
//   kQEven: [t^{n-1}] Q_{B_{2n}}   kQOdd: [t^{n-2}] Q_{B_{2n-1}}
Integer leading_coeff_closed_form(LeadingForm which, int n);

// The difference between the even and odd P leading coefficients,
// (n-1)^{n-5} (2n-1)! / (3 (n-3)!), for n >= 3.
Integer leading_difference_closed_form(int n);

// E_n, the number of connected members of S(2n-2, n), n >= 2: the odd P
// leading coefficient minus (n+1)(n-1)^{n-3} (2n-3)! / (3 (n-1)!).
Integer count_E_closed(int n);

struct ParityReport {
  int n = 0;
  Integer p_coeff;
  Integer q_coeff;
  bool holds = false;
};

// [t^{n-1}] P_{B_{2n}} == [t^{n-1}] Q_{B_{2n}}.
ParityReport verify_parity_identity(int n, KlTable& table);

struct LeadingRelationReport {
  int n = 0;
  Integer lhs;  // [t^{n-2}] (P_{B_{2n-1}} + Q_{B_{2n-1}})
  Integer rhs;  // sum_j C(2n-1, 2j) [t^{j-1}] P_{B_{2j}} [t^{n-1-j}] Q_{B_{2n-2j}}
  // Contributions of each kind of proper nonempty flat to [t^{n-2}] of the
  // flat sum, split by type: one even block, one odd block of size >= 3, or
  // at least two non-singleton blocks.
  Integer single_even_block;
  Integer single_odd_block;
  Integer several_blocks;
  bool holds = false;
};

LeadingRelationReport verify_leading_relation(int n, KlTable& table);

}  // namespace klbraid
