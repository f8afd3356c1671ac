#pragma once

// Labeled simple graphs and the families counted alongside the braid
// coefficients: triangular cacti, deserts (disjoint unions of cacti), rooted
// deserts, and Husimi graphs (connected graphs whose blocks are complete).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "klbraid/exact.hpp"

namespace klbraid {

using VertexSet = std::uint32_t;  // bit (v - 1) for vertex label v
using EdgeSet = std::uint64_t;    // bit pair_index(u, v)

inline constexpr int kMaxVertex = 11;

int pair_index(int u, int v);

class LabeledGraph {
 public:
  LabeledGraph() = default;
  explicit LabeledGraph(VertexSet vertices, EdgeSet edges = 0);
  static LabeledGraph from_edges(VertexSet vertices, const std::vector<std::pair<int, int>>& edges);

  VertexSet vertices() const { return vertices_; }
  EdgeSet edge_set() const { return edges_; }
  int vertex_count() const;
  int edge_count() const;
  bool has_edge(int u, int v) const;
  void add_edge(int u, int v);
  VertexSet neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
  std::vector<VertexSet> connected_components() const;
  bool is_connected() const;

  std::string to_string() const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;
  friend auto operator<=>(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  VertexSet vertices_ = 0;
  EdgeSet edges_ = 0;
};

struct RootedDesert {
  LabeledGraph graph;
  VertexSet roots = 0;

  friend bool operator==(const RootedDesert&, const RootedDesert&) = default;
  friend auto operator<=>(const RootedDesert&, const RootedDesert&) = default;
};

// Block multiplicities (n_2, n_3, ...): counts[i - 2] blocks isomorphic to
// K_i. Trailing zeros are dropped.
struct HusimiType {
  std::vector<int> counts;

  static HusimiType of(std::vector<int> counts);
  int multiplicity(int i) const;
  int block_count() const;
  // Vertex count of any connected graph with these blocks: 1 + sum (i-1) n_i.
  int vertex_count() const;
  std::string to_string() const;  // "(0,1)"

  friend bool operator==(const HusimiType&, const HusimiType&) = default;
  friend auto operator<=>(const HusimiType&, const HusimiType&) = default;
};

// Vertex sets of the blocks (maximal 2-connected subgraphs and bridges).
// Isolated vertices have no block.
std::vector<VertexSet> blocks(const LabeledGraph& g);

bool is_triangular_cactus(const LabeledGraph& g);
bool is_husimi(const LabeledGraph& g);
// Meaningful only when is_husimi(g).
HusimiType husimi_type(const LabeledGraph& g);
bool is_rooted_desert(const RootedDesert& d);

// Cacti on exactly the vertex set V, sorted. Scans all graphs for |V| <= 6
// and builds leaf triangle by leaf triangle beyond that.
std::vector<LabeledGraph> enumerate_cacti(VertexSet vertices);
std::vector<LabeledGraph> generate_cacti_constructive(VertexSet vertices);
// Number of triangular cacti on 2r - 1 labeled vertices.
Integer count_cacti_closed(int r);

// Deserts on [2n-2] with exactly 2m components, sorted.
std::vector<LabeledGraph> enumerate_deserts(int n, int m);
std::vector<RootedDesert> enumerate_rooted_deserts(int n, int m);

Integer count_rdes_closed(int n, int m);
Integer count_des1_closed(int n);
// |Des_m(n)| by multinomial convolution of the cactus counts over ordered odd
// block sizes, divided by (2m)!.
Integer des_convolution(int n, int m);
// The reindexed double-factorial form of |Des_1(n)|:
// 1/2 sum_{j=0}^{n-2} C(2n-2, 2j+1) (2j-1)!! (2j+1)^{j-1} (2n-2j-5)!! (2n-2j-3)^{n-j-3}.
Integer des1_double_factorial_sum(int n);

bool is_feasible(int p, const HusimiType& type);
std::vector<HusimiType> feasible_husimi_types(int p);
// Husimi graphs on [p] of the given type, sorted. p <= 7.
std::vector<LabeledGraph> enumerate_husimi(int p, const HusimiType& type);
std::vector<LabeledGraph> generate_husimi_constructive(VertexSet vertices);
Integer count_husimi_closed(int p, const HusimiType& type);

}  // namespace klbraid
