#include "klbraid/cactus.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "klbraid/klcore.hpp"
#include "klbraid/matroid.hpp"

namespace klbraid {
namespace {

constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << (v - 1); }

std::vector<int> vertex_labels(VertexSet set) { return labels_of(set); }

EdgeSet clique_edges(VertexSet set) {
  EdgeSet out = 0;
  std::vector<int> vs = vertex_labels(set);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) out |= EdgeSet{1} << pair_index(vs[i], vs[j]);
  }
  return out;
}

EdgeSet all_pairs_within(VertexSet set) { return clique_edges(set); }

void check_vertex_set(VertexSet vertices) {
  if (vertices & ~prefix_set(kMaxVertex)) throw std::domain_error("vertex label out of range");
}

// Every graph on exactly `vertices` (all edge subsets), filtered.
std::vector<LabeledGraph> scan_graphs(VertexSet vertices,
                                      const std::function<bool(const LabeledGraph&)>& keep) {
  std::vector<int> pair_bits;
  EdgeSet pool = all_pairs_within(vertices);
  for (int b = 0; b < 64; ++b) {
    if (pool >> b & 1) pair_bits.push_back(b);
  }
  const std::size_t count = pair_bits.size();
  std::vector<LabeledGraph> out;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << count); ++subset) {
    EdgeSet edges = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (subset >> i & 1) edges |= EdgeSet{1} << pair_bits[i];
    }
    LabeledGraph g(vertices, edges);
    if (keep(g)) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Set partitions of `remaining` into blocks whose sizes satisfy `block_ok`,
// with exactly `blocks_left` blocks; each is reported as a list of blocks.
void odd_partitions(VertexSet remaining, int blocks_left, std::vector<VertexSet>& current,
                    std::vector<std::vector<VertexSet>>& out) {
  if (remaining == 0) {
    if (blocks_left == 0) out.push_back(current);
    return;
  }
  if (blocks_left == 0 || std::popcount(remaining) < blocks_left) return;
  const VertexSet low = remaining & -remaining;
  const VertexSet others = remaining & ~low;
  for (VertexSet extra = others;; extra = (extra - 1) & others) {
    const VertexSet block = extra | low;
    if (std::popcount(block) % 2 == 1) {
      current.push_back(block);
      odd_partitions(remaining & ~block, blocks_left - 1, current, out);
      current.pop_back();
    }
    if (extra == 0) break;
  }
}

std::vector<std::vector<VertexSet>> desert_partitions(int n, int m) {
  if (n < 2 || m < 1) throw std::domain_error("deserts require n >= 2 and m >= 1");
  if (2 * n - 2 > 9) throw ResourceError("desert enumeration is capped at 8 vertices");
  std::vector<std::vector<VertexSet>> out;
  std::vector<VertexSet> current;
  odd_partitions(prefix_set(2 * n - 2), 2 * m, current, out);
  return out;
}

}  // namespace

int pair_index(int u, int v) {
  if (u == v || u < 1 || v < 1 || u > kMaxVertex || v > kMaxVertex) {
    throw std::domain_error("invalid vertex pair");
  }
  if (u > v) std::swap(u, v);
  return (v - 1) * (v - 2) / 2 + (u - 1);
}

LabeledGraph::LabeledGraph(VertexSet vertices, EdgeSet edges) : vertices_(vertices), edges_(edges) {
  check_vertex_set(vertices);
  if (edges & ~all_pairs_within(vertices)) throw std::domain_error("edge outside the vertex set");
}

LabeledGraph LabeledGraph::from_edges(VertexSet vertices, const std::vector<std::pair<int, int>>& edges) {
  LabeledGraph g(vertices);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int LabeledGraph::vertex_count() const { return std::popcount(vertices_); }
int LabeledGraph::edge_count() const { return std::popcount(edges_); }

bool LabeledGraph::has_edge(int u, int v) const { return edges_ >> pair_index(u, v) & 1; }

void LabeledGraph::add_edge(int u, int v) {
  if (!(vertices_ & vertex_bit(u)) || !(vertices_ & vertex_bit(v))) {
    throw std::domain_error("edge endpoint outside the vertex set");
  }
  edges_ |= EdgeSet{1} << pair_index(u, v);
}

VertexSet LabeledGraph::neighbors(int v) const {
  VertexSet out = 0;
  for (int u : vertex_labels(vertices_)) {
    if (u != v && has_edge(u, v)) out |= vertex_bit(u);
  }
  return out;
}

std::vector<std::pair<int, int>> LabeledGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  std::vector<int> vs = vertex_labels(vertices_);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (has_edge(vs[i], vs[j])) out.emplace_back(vs[i], vs[j]);
    }
  }
  return out;
}

std::vector<VertexSet> LabeledGraph::connected_components() const {
  std::vector<VertexSet> out;
  VertexSet unseen = vertices_;
  while (unseen) {
    VertexSet component = unseen & -unseen;
    VertexSet frontier = component;
    while (frontier) {
      int v = std::countr_zero(frontier) + 1;
      frontier &= frontier - 1;
      VertexSet fresh = neighbors(v) & ~component;
      component |= fresh;
      frontier |= fresh;
    }
    out.push_back(component);
    unseen &= ~component;
  }
  return out;
}

bool LabeledGraph::is_connected() const { return vertices_ != 0 && connected_components().size() == 1; }

std::string LabeledGraph::to_string() const {
  std::ostringstream os;
  os << "vertices " << format_set(vertices_) << " edges [";
  bool first = true;
  for (auto [u, v] : edges()) {
    if (!first) os << " ";
    os << u << "-" << v;
    first = false;
  }
  os << "]";
  return os.str();
}

HusimiType HusimiType::of(std::vector<int> counts) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return HusimiType{std::move(counts)};
}

int HusimiType::multiplicity(int i) const {
  if (i < 2 || i - 2 >= static_cast<int>(counts.size())) return 0;
  return counts[static_cast<std::size_t>(i - 2)];
}

int HusimiType::block_count() const {
  int total = 0;
  for (int c : counts) total += c;
  return total;
}

int HusimiType::vertex_count() const {
  int p = 1;
  for (std::size_t k = 0; k < counts.size(); ++k) p += static_cast<int>(k + 1) * counts[k];
  return p;
}

std::string HusimiType::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (k) os << ",";
    os << counts[k];
  }
  os << ")";
  return os.str();
}

std::vector<VertexSet> blocks(const LabeledGraph& g) {
  int disc[kMaxVertex + 1] = {};
  int low[kMaxVertex + 1] = {};
  int timer = 0;
  std::vector<std::pair<int, int>> stack;
  std::vector<VertexSet> out;

  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = ++timer;
    for (int v : vertex_labels(g.neighbors(u))) {
      if (disc[v] == 0) {
        stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          VertexSet block = 0;
          while (true) {
            auto [a, b] = stack.back();
            stack.pop_back();
            block |= vertex_bit(a) | vertex_bit(b);
            if (a == u && b == v) break;
          }
          out.push_back(block);
        }
      } else if (v != parent && disc[v] < disc[u]) {
        stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  for (int v : vertex_labels(g.vertices())) {
    if (disc[v] == 0) dfs(v, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_husimi(const LabeledGraph& g) {
  if (!g.is_connected()) return false;
  for (VertexSet b : blocks(g)) {
    EdgeSet within = g.edge_set() & all_pairs_within(b);
    if (within != all_pairs_within(b)) return false;
  }
  return true;
}

bool is_triangular_cactus(const LabeledGraph& g) {
  if (!is_husimi(g)) return false;
  auto bs = blocks(g);
  return std::all_of(bs.begin(), bs.end(), [](VertexSet b) { return std::popcount(b) == 3; });
}

HusimiType husimi_type(const LabeledGraph& g) {
  std::vector<int> counts;
  for (VertexSet b : blocks(g)) {
    std::size_t slot = static_cast<std::size_t>(std::popcount(b) - 2);
    if (counts.size() <= slot) counts.resize(slot + 1);
    ++counts[slot];
  }
  return HusimiType::of(std::move(counts));
}

bool is_rooted_desert(const RootedDesert& d) {
  if (d.roots & ~d.graph.vertices()) return false;
  for (VertexSet component : d.graph.connected_components()) {
    if (std::popcount(component & d.roots) != 1) return false;
    LabeledGraph piece(component, d.graph.edge_set() & all_pairs_within(component));
    if (!is_triangular_cactus(piece)) return false;
  }
  return true;
}

std::vector<LabeledGraph> generate_cacti_constructive(VertexSet vertices) {
  check_vertex_set(vertices);
  if (std::popcount(vertices) > 9) throw ResourceError("cactus generation is capped at 9 vertices");
  std::map<VertexSet, std::vector<EdgeSet>> memo;
  std::function<const std::vector<EdgeSet>&(VertexSet)> build =
      [&](VertexSet set) -> const std::vector<EdgeSet>& {
    if (auto it = memo.find(set); it != memo.end()) return it->second;
    std::set<EdgeSet> found;
    const int size = std::popcount(set);
    if (size == 1) {
      found.insert(0);
    } else if (size % 2 == 1) {
      // Peel a leaf triangle {u, w, x}: u, w only in that triangle.
      std::vector<int> vs = vertex_labels(set);
      for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
          int u = vs[i], w = vs[j];
          VertexSet rest = set & ~vertex_bit(u) & ~vertex_bit(w);
          const auto& smaller = build(rest);
          for (int x : vertex_labels(rest)) {
            EdgeSet triangle = clique_edges(vertex_bit(u) | vertex_bit(w) | vertex_bit(x));
            for (EdgeSet base : smaller) found.insert(base | triangle);
          }
        }
      }
    }
    return memo.emplace(set, std::vector<EdgeSet>(found.begin(), found.end())).first->second;
  };
  std::vector<LabeledGraph> out;
  if (vertices == 0) return out;
  for (EdgeSet edges : build(vertices)) out.emplace_back(vertices, edges);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LabeledGraph> enumerate_cacti(VertexSet vertices) {
  check_vertex_set(vertices);
  const int size = std::popcount(vertices);
  if (size == 0 || size % 2 == 0) return {};
  if (size <= 6) return scan_graphs(vertices, is_triangular_cactus);
  return generate_cacti_constructive(vertices);
}

Integer count_cacti_closed(int r) {
  if (r < 1) throw std::domain_error("count_cacti_closed requires r >= 1");
  const long k = r;
  Rational value = int_power(Rational(2 * k - 1), k - 3) * Rational(factorial(2 * k - 1)) /
                   Rational(int_power(Rational(2), k - 1) * Rational(factorial(k - 1)));
  return require_integral(value, "cactus count");
}

std::vector<LabeledGraph> enumerate_deserts(int n, int m) {
  std::vector<LabeledGraph> out;
  std::map<VertexSet, std::vector<LabeledGraph>> cacti;
  const VertexSet all = prefix_set(2 * n - 2);
  for (const auto& partition : desert_partitions(n, m)) {
    std::vector<EdgeSet> partial{0};
    for (VertexSet block : partition) {
      auto it = cacti.find(block);
      if (it == cacti.end()) it = cacti.emplace(block, enumerate_cacti(block)).first;
      std::vector<EdgeSet> next;
      for (EdgeSet base : partial) {
        for (const auto& c : it->second) next.push_back(base | c.edge_set());
      }
      partial = std::move(next);
    }
    for (EdgeSet edges : partial) out.emplace_back(all, edges);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RootedDesert> enumerate_rooted_deserts(int n, int m) {
  std::vector<RootedDesert> out;
  for (const auto& desert : enumerate_deserts(n, m)) {
    std::vector<VertexSet> root_choices{0};
    for (VertexSet component : desert.connected_components()) {
      std::vector<VertexSet> next;
      for (VertexSet chosen : root_choices) {
        for (int v : vertex_labels(component)) next.push_back(chosen | vertex_bit(v));
      }
      root_choices = std::move(next);
    }
    for (VertexSet roots : root_choices) out.push_back(RootedDesert{desert, roots});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer count_rdes_closed(int n, int m) {
  if (n < 2 || m < 1) throw std::domain_error("count_rdes_closed requires n >= 2, m >= 1");
  if (m > n - 1) return 0;
  const long a = n, b = m;
  Rational value = int_power(Rational(a - 1), a - b - 2) * Rational(factorial(2 * a - 2)) /
                   Rational(2 * factorial(2 * b - 1) * factorial(a - b - 1));
  return require_integral(value, "rooted desert count");
}

Integer count_des1_closed(int n) {
  if (n < 2) throw std::domain_error("count_des1_closed requires n >= 2");
  const long a = n;
  Rational value = Rational(a + 1) * int_power(Rational(a - 1), a - 5) *
                   Rational(factorial(2 * a - 2)) / Rational(6 * factorial(a - 2));
  return require_integral(value, "desert count");
}

Integer des_convolution(int n, int m) {
  if (n < 2 || m < 1) throw std::domain_error("des_convolution requires n >= 2, m >= 1");
  const int total = 2 * n - 2;
  const int parts = 2 * m;
  if (parts > total) return 0;
  // weight[s] = |Delta((s+1)/2)| / s! for odd s; ordered compositions into
  // odd parts then carry the multinomial total! / prod s_i!.
  std::vector<Rational> weight(static_cast<std::size_t>(total) + 1);
  for (int s = 1; s <= total; s += 2) {
    weight[static_cast<std::size_t>(s)] = Rational(count_cacti_closed((s + 1) / 2)) / Rational(factorial(s));
  }
  std::vector<Rational> ways(static_cast<std::size_t>(total) + 1);
  ways[0] = 1;
  for (int used = 0; used < parts; ++used) {
    std::vector<Rational> next(static_cast<std::size_t>(total) + 1);
    for (int sum = 0; sum <= total; ++sum) {
      if (ways[static_cast<std::size_t>(sum)] == 0) continue;
      for (int s = 1; sum + s <= total; s += 2) {
        next[static_cast<std::size_t>(sum + s)] +=
            ways[static_cast<std::size_t>(sum)] * weight[static_cast<std::size_t>(s)];
      }
    }
    ways = std::move(next);
  }
  Rational ordered = ways[static_cast<std::size_t>(total)] * Rational(factorial(total));
  return require_integral(ordered / Rational(factorial(parts)), "desert convolution");
}

Integer des1_double_factorial_sum(int n) {
  if (n < 2) throw std::domain_error("des1_double_factorial_sum requires n >= 2");
  const long a = n;
  Rational sum = 0;
  for (long j = 0; j <= a - 2; ++j) {
    sum += Rational(binomial(2 * a - 2, 2 * j + 1) * double_factorial(2 * j - 1) *
                    double_factorial(2 * a - 2 * j - 5)) *
           int_power(Rational(2 * j + 1), j - 1) * int_power(Rational(2 * a - 2 * j - 3), a - j - 3);
  }
  return require_integral(sum / 2, "double factorial desert sum");
}

bool is_feasible(int p, const HusimiType& type) {
  if (p < 1) return false;
  if (std::any_of(type.counts.begin(), type.counts.end(), [](int c) { return c < 0; })) return false;
  return type.vertex_count() == p;
}

std::vector<HusimiType> feasible_husimi_types(int p) {
  if (p < 1) throw std::domain_error("feasible_husimi_types requires p >= 1");
  if (p == 1) return {HusimiType{}};
  std::vector<HusimiType> out;
  // A part q of a partition of p - 1 is a block K_{q+1}.
  for (const auto& lambda : partitions_of(p - 1)) {
    std::vector<int> counts(static_cast<std::size_t>(p - 1));
    for (int q : lambda.parts) ++counts[static_cast<std::size_t>(q - 1)];
    out.push_back(HusimiType::of(std::move(counts)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LabeledGraph> generate_husimi_constructive(VertexSet vertices) {
  check_vertex_set(vertices);
  if (std::popcount(vertices) > 7) throw ResourceError("Husimi generation is capped at 7 vertices");
  std::map<VertexSet, std::vector<EdgeSet>> memo;
  std::function<const std::vector<EdgeSet>&(VertexSet)> build =
      [&](VertexSet set) -> const std::vector<EdgeSet>& {
    if (auto it = memo.find(set); it != memo.end()) return it->second;
    std::set<EdgeSet> found;
    if (std::popcount(set) == 1) {
      found.insert(0);
    } else {
      // Peel a leaf block: new vertices W joined to one vertex x of the rest.
      for (VertexSet leaf = (set - 1) & set; leaf != 0; leaf = (leaf - 1) & set) {
        VertexSet rest = set & ~leaf;
        const auto& smaller = build(rest);
        for (int x : vertex_labels(rest)) {
          EdgeSet block = clique_edges(leaf | vertex_bit(x));
          for (EdgeSet base : smaller) found.insert(base | block);
        }
      }
    }
    return memo.emplace(set, std::vector<EdgeSet>(found.begin(), found.end())).first->second;
  };
  std::vector<LabeledGraph> out;
  if (vertices == 0) return out;
  for (EdgeSet edges : build(vertices)) out.emplace_back(vertices, edges);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LabeledGraph> enumerate_husimi(int p, const HusimiType& type) {
  if (p < 1) throw std::domain_error("enumerate_husimi requires p >= 1");
  if (p > 7) throw ResourceError("Husimi enumeration is capped at p <= 7");
  if (!is_feasible(p, type)) return {};
  auto matches = [&type](const LabeledGraph& g) { return is_husimi(g) && husimi_type(g) == type; };
  if (p <= 6) return scan_graphs(prefix_set(p), matches);
  std::vector<LabeledGraph> out;
  for (auto& g : generate_husimi_constructive(prefix_set(p))) {
    if (husimi_type(g) == type) out.push_back(std::move(g));
  }
  return out;
}

Integer count_husimi_closed(int p, const HusimiType& type) {
  if (!is_feasible(p, type)) return 0;
  Rational denominator = 1;
  for (int i = 2; i <= p; ++i) {
    int count = type.multiplicity(i);
    denominator *= Rational(int_power(Rational(factorial(i - 1)), count) * Rational(factorial(count)));
  }
  const long exponent = -2 + type.block_count();
  Rational value = Rational(factorial(p)) / denominator * int_power(Rational(p), exponent);
  return require_integral(value, "Husimi count");
}

}  // namespace klbraid
