#include "klbraid/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <stdexcept>

namespace klbraid::oracles {
namespace {

void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

Coeffs add(Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

Coeffs negate(Coeffs a) {
  for (auto& c : a) c = -c;
  return a;
}

mpz_class coeff(const Coeffs& c, int i) {
  if (i < 0 || i >= static_cast<int>(c.size())) return 0;
  return c[i];
}

int block_count(const std::vector<int>& rgs) {
  return rgs.empty() ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
}

std::vector<int> block_sizes(const std::vector<int>& rgs) {
  std::vector<int> sizes(block_count(rgs), 0);
  for (int b : rgs) ++sizes[b];
  return sizes;
}

// g refines f: any two points together in g are together in f.
bool refines(const std::vector<int>& g, const std::vector<int>& f) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (g[i] == g[j] && f[i] != f[j]) return false;
    }
  }
  return true;
}

struct Lattice {
  int n = 0;
  std::vector<std::vector<int>> elements;  // set partitions
  std::vector<mpz_class> mobius;           // mu(bottom, element)

  int rank(std::size_t i) const { return n - block_count(elements[i]); }
};

Lattice partition_lattice(int n) {
  Lattice lattice;
  lattice.n = n;
  lattice.elements = set_partitions(n);
  std::vector<std::size_t> order(lattice.elements.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lattice.rank(a) < lattice.rank(b); });
  lattice.mobius.assign(order.size(), 0);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const std::size_t g = order[pos];
    if (lattice.rank(g) == 0) {
      lattice.mobius[g] = 1;
      continue;
    }
    mpz_class sum = 0;
    for (std::size_t before = 0; before < pos; ++before) {
      const std::size_t h = order[before];
      if (lattice.rank(h) < lattice.rank(g) && refines(lattice.elements[h], lattice.elements[g])) {
        sum += lattice.mobius[h];
      }
    }
    lattice.mobius[g] = -sum;
  }
  return lattice;
}

// chi of the restriction to the flat f: sum over g below f of mu(0, g) t^{rk f - rk g}.
Coeffs restriction_char_poly(const Lattice& lattice, std::size_t f) {
  Coeffs chi;
  for (std::size_t g = 0; g < lattice.elements.size(); ++g) {
    if (!refines(lattice.elements[g], lattice.elements[f])) continue;
    Coeffs mono(lattice.rank(f) - lattice.rank(g) + 1, 0);
    mono.back() = lattice.mobius[g];
    chi = add(chi, mono);
  }
  return chi;
}

void check_cap(int n, int cap, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + " needs n >= 1");
  if (n > cap) throw std::out_of_range(std::string(what) + " is capped at " + std::to_string(cap));
}

bool connected(const AdjacencyGraph& g) {
  if (g.order == 0) return true;
  std::vector<bool> seen(g.order, false);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < g.order; ++w) {
      if (g.adj[v][w] && !seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

std::vector<int> members(unsigned mask, int order) {
  std::vector<int> out;
  for (int v = 0; v < order; ++v) {
    if (mask >> v & 1U) out.push_back(v);
  }
  return out;
}

bool is_clique(const AdjacencyGraph& g, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.adj[vs[i]][vs[j]]) return false;
    }
  }
  return true;
}

int induced_edges(const AdjacencyGraph& g, const std::vector<int>& vs) {
  int edges = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) edges += g.adj[vs[i]][vs[j]] ? 1 : 0;
  }
  return edges;
}

bool induces_cycle(const AdjacencyGraph& g, const std::vector<int>& vs) {
  for (int v : vs) {
    int degree = 0;
    for (int w : vs) degree += g.adj[v][w] ? 1 : 0;
    if (degree != 2) return false;
  }
  // All degrees two: a disjoint union of cycles; require a single one.
  AdjacencyGraph sub;
  sub.order = static_cast<int>(vs.size());
  sub.adj.assign(sub.order, std::vector<bool>(sub.order, false));
  for (int i = 0; i < sub.order; ++i) {
    for (int j = 0; j < sub.order; ++j) sub.adj[i][j] = g.adj[vs[i]][vs[j]];
  }
  return connected(sub);
}

std::string render(const Coeffs& c) {
  std::string out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ", ";
    out += c[i].get_str();
  }
  return out + "]";
}

}  // namespace

std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  if (n <= 0) return {{}};
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> extend = [&](int pos, int max_block) {
    if (pos == n) {
      out.push_back(rgs);
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      rgs[pos] = b;
      extend(pos + 1, std::max(max_block, b));
    }
  };
  rgs[0] = 0;
  extend(1, 0);
  return out;
}

Coeffs mobius_char_poly(int n) {
  check_cap(n, kMaxLatticeN, "mobius_char_poly");
  const Lattice lattice = partition_lattice(n);
  Coeffs chi;
  for (std::size_t g = 0; g < lattice.elements.size(); ++g) {
    Coeffs mono(n - 1 - lattice.rank(g) + 1, 0);
    mono.back() = lattice.mobius[g];
    chi = add(chi, mono);
  }
  return chi;
}

Coeffs setpartition_P(int n) {
  check_cap(n, kMaxLatticeN, "setpartition_P");
  Coeffs p{1};
  if (n > 1) {
    const Lattice lattice = partition_lattice(n);
    const int d = n - 1;
    Coeffs rest;
    for (std::size_t f = 0; f < lattice.elements.size(); ++f) {
      if (lattice.rank(f) == 0) continue;
      rest = add(rest, multiply(restriction_char_poly(lattice, f),
                                setpartition_P(block_count(lattice.elements[f]))));
    }
    // t^d P(1/t) - P(t) = rest, and deg P < d/2.
    p.clear();
    for (int j = 0; 2 * j < d; ++j) p.push_back(coeff(rest, d - j));
    trim(p);
  }
  return p;
}

Coeffs setpartition_Q_relation(int n) {
  check_cap(n, kMaxLatticeN, "setpartition_Q_relation");
  Coeffs q{1};
  if (n > 1) {
    // P_M = -sum_{F != E} P_{M|F} (-1)^{rk M/F} Q_{M/F}. The bottom flat
    // contributes (-1)^{n-1} Q_M; everything else is known.
    Coeffs others;
    for (const auto& f : set_partitions(n)) {
      const int blocks = block_count(f);
      if (blocks == 1 || blocks == n) continue;
      Coeffs restriction{1};
      for (int size : block_sizes(f)) restriction = multiply(restriction, setpartition_P(size));
      Coeffs t = multiply(restriction, setpartition_Q_relation(blocks));
      if ((blocks - 1) % 2 != 0) t = negate(t);
      others = add(others, t);
    }
    // P = -(-1)^{n-1} Q - others  =>  (-1)^n Q = P + others.
    q = add(setpartition_P(n), others);
    if (n % 2 != 0) q = negate(q);
  }
  return q;
}

int AdjacencyGraph::edge_count() const {
  int edges = 0;
  for (int i = 0; i < order; ++i) {
    for (int j = i + 1; j < order; ++j) edges += adj[i][j] ? 1 : 0;
  }
  return edges;
}

std::vector<AdjacencyGraph> graph_scan(const GraphPredicate& predicate, int p) {
  if (p < 0 || p > kMaxScanVertices) {
    throw std::out_of_range("graph_scan is capped at " + std::to_string(kMaxScanVertices) + " vertices");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) pairs.emplace_back(i, j);
  }
  std::vector<AdjacencyGraph> out;
  for (unsigned long mask = 0; mask < (1UL << pairs.size()); ++mask) {
    AdjacencyGraph g;
    g.order = p;
    g.adj.assign(p, std::vector<bool>(p, false));
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (mask >> e & 1UL) {
        g.adj[pairs[e].first][pairs[e].second] = true;
        g.adj[pairs[e].second][pairs[e].first] = true;
      }
    }
    if (predicate(g)) out.push_back(std::move(g));
  }
  return out;
}

bool scan_is_cactus(const AdjacencyGraph& g) {
  if (g.order % 2 == 0 || !connected(g)) return false;
  if (g.edge_count() != 3 * (g.order - 1) / 2) return false;
  int triangles = 0;
  for (int i = 0; i < g.order; ++i) {
    for (int j = i + 1; j < g.order; ++j) {
      if (!g.adj[i][j]) continue;
      int through = 0;
      for (int k = 0; k < g.order; ++k) {
        if (k != i && k != j && g.adj[i][k] && g.adj[j][k]) ++through;
      }
      if (through != 1) return false;
      for (int k = j + 1; k < g.order; ++k) {
        if (g.adj[i][k] && g.adj[j][k]) ++triangles;
      }
    }
  }
  return triangles == (g.order - 1) / 2;
}

bool scan_is_husimi(const AdjacencyGraph& g) {
  if (g.order == 0 || !connected(g)) return false;
  for (unsigned mask = 0; mask < (1U << g.order); ++mask) {
    const auto vs = members(mask, g.order);
    if (vs.size() >= 4 && induces_cycle(g, vs)) return false;
    if (vs.size() == 4 && induced_edges(g, vs) == 5) return false;
  }
  return true;
}

std::vector<int> scan_husimi_type(const AdjacencyGraph& g) {
  std::vector<int> counts;
  std::vector<unsigned> cliques;
  for (unsigned mask = 1; mask < (1U << g.order); ++mask) {
    const auto vs = members(mask, g.order);
    if (vs.size() >= 2 && is_clique(g, vs)) cliques.push_back(mask);
  }
  for (unsigned c : cliques) {
    bool maximal = true;
    for (unsigned d : cliques) {
      if (d != c && (d & c) == c) maximal = false;
    }
    if (!maximal) continue;
    const std::size_t size = members(c, g.order).size();
    if (counts.size() < size - 1) counts.resize(size - 1, 0);
    ++counts[size - 2];
  }
  return counts;
}

std::vector<std::string> oracle_names() {
  return {"mobius-char-poly", "setpartition-p", "setpartition-q", "scan-cacti", "scan-husimi"};
}

OracleResult run_oracle(const std::string& oracle, int n) {
  const auto start = std::chrono::steady_clock::now();
  OracleResult result;
  result.oracle = oracle;
  result.input = "n=" + std::to_string(n);
  if (oracle == "mobius-char-poly") {
    result.value = render(mobius_char_poly(n));
  } else if (oracle == "setpartition-p") {
    result.value = render(setpartition_P(n));
  } else if (oracle == "setpartition-q") {
    result.value = render(setpartition_Q_relation(n));
  } else if (oracle == "scan-cacti") {
    result.value = std::to_string(graph_scan(scan_is_cactus, n).size());
  } else if (oracle == "scan-husimi") {
    std::map<std::vector<int>, int> by_type;
    for (const auto& g : graph_scan(scan_is_husimi, n)) ++by_type[scan_husimi_type(g)];
    for (const auto& [type, count] : by_type) {
      if (!result.value.empty()) result.value += ' ';
      std::string label = "(";
      for (std::size_t i = 0; i < type.size(); ++i) label += (i ? "," : "") + std::to_string(type[i]);
      result.value += label + ")=" + std::to_string(count);
    }
  } else {
    throw std::invalid_argument("unknown oracle: " + oracle);
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace klbraid::oracles
