#pragma once

// Deliberately naive reference computations. Nothing here links against the
// main library: set partitions are restricted growth strings, graphs are
// adjacency matrices, polynomials are plain coefficient vectors.

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

namespace klbraid::oracles {

using Coeffs = std::vector<mpz_class>;  // index = degree, no trailing zeros

inline constexpr int kMaxLatticeN = 6;
inline constexpr int kMaxScanVertices = 6;

// Restricted growth strings of length n: s[0] = 0, s[i] <= 1 + max(s[0..i)).
std::vector<std::vector<int>> set_partitions(int n);

// Characteristic polynomial of B_n via the Moebius function of the
// partition lattice of [n]. n <= 6.
Coeffs mobius_char_poly(int n);

// P_{B_n} from the defining recursion summed over every set partition.
Coeffs setpartition_P(int n);

// Q_{B_n} from the P/Q relation summed over every set partition. n <= 6.
Coeffs setpartition_Q_relation(int n);

struct AdjacencyGraph {
  int order = 0;
  std::vector<std::vector<bool>> adj;

  int edge_count() const;
};

using GraphPredicate = std::function<bool(const AdjacencyGraph&)>;

// Every simple graph on [p] accepted by the predicate, in edge-mask order.
std::vector<AdjacencyGraph> graph_scan(const GraphPredicate& predicate, int p);

bool scan_is_cactus(const AdjacencyGraph& g);
bool scan_is_husimi(const AdjacencyGraph& g);
// Block multiplicities (n_2, n_3, ...) read off the maximal cliques of a
// Husimi graph; trailing zeros dropped.
std::vector<int> scan_husimi_type(const AdjacencyGraph& g);

struct OracleResult {
  std::string oracle;
  std::string input;
  std::string value;
  double seconds = 0.0;
};

// Runs a named oracle: "mobius-char-poly", "setpartition-q",
// "setpartition-p", "scan-cacti", "scan-husimi". Throws std::invalid_argument
// on an unknown name and std::out_of_range above the cap.
OracleResult run_oracle(const std::string& oracle, int n);
std::vector<std::string> oracle_names();

}  // namespace klbraid::oracles
