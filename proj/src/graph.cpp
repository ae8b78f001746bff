#include "qti/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "qti/errors.hpp"

namespace qti {

namespace {

std::uint64_t bit_of(int v) { return std::uint64_t{1} << (v - 1); }

std::vector<int> mask_to_vertices(std::uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

bool Graph::has_edge(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return false;
  return (adj_[u - 1] >> (v - 1)) & 1u;
}

Graph graph_make(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 0 || n > kMaxVertices) {
    throw BadArgs("vertex count must be between 0 and " +
                  std::to_string(kMaxVertices) + ", got " + std::to_string(n));
  }
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, 0);
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n) {
      throw VertexOutOfRange("edge {" + std::to_string(u) + "," +
                             std::to_string(v) + "} leaves vertex range 1.." +
                             std::to_string(n));
    }
    if (u == v) throw LoopEdge("loop at vertex " + std::to_string(u));
    if (u > v) {
      throw BadArgs("edge {" + std::to_string(u) + "," + std::to_string(v) +
                    "} must be listed with u < v");
    }
    if (g.adj_[u - 1] & bit_of(v)) {
      throw DuplicateEdge("edge {" + std::to_string(u) + "," +
                          std::to_string(v) + "} listed twice");
    }
    g.adj_[u - 1] |= bit_of(v);
    g.adj_[v - 1] |= bit_of(u);
  }
  g.edges_ = std::move(edges);
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

namespace {

// Lexicographic include/exclude recursion over candidate masks: the smallest
// candidate is either taken (neighbors pruned) or skipped.
void enum_rec(const Graph& g, int want, std::uint64_t chosen, int count,
              std::uint64_t cand,
              const std::function<void(const std::vector<int>&)>& fn) {
  if (count == want) {
    fn(mask_to_vertices(chosen));
    return;
  }
  while (cand) {
    if (count + std::popcount(cand) < want) return;
    const int v0 = std::countr_zero(cand);  // 0-indexed vertex
    const std::uint64_t b = std::uint64_t{1} << v0;
    cand ^= b;
    enum_rec(g, want, chosen | b, count + 1, cand & ~g.adjacency()[v0], fn);
  }
}

void count_rec(const Graph& g, int count, std::uint64_t cand,
               std::vector<mpz_class>& counts) {
  ++counts[count];
  while (cand) {
    const int v0 = std::countr_zero(cand);
    cand &= cand - 1;
    count_rec(g, count + 1, cand & ~g.adjacency()[v0], counts);
  }
}

}  // namespace

void independent_sets(const Graph& g, int i,
                      const std::function<void(const std::vector<int>&)>& fn) {
  if (i < 0 || i > g.n()) return;
  const std::uint64_t all =
      g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
  enum_rec(g, i, 0, 0, all, fn);
}

std::vector<mpz_class> independence_counts(const Graph& g) {
  std::vector<mpz_class> counts(g.n() + 1, 0);
  const std::uint64_t all =
      g.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << g.n()) - 1;
  count_rec(g, 0, all, counts);
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

int alpha(const Graph& g) {
  return static_cast<int>(independence_counts(g).size()) - 1;
}

BivarPoly independence_polynomial(const Graph& g) {
  BivarPoly p(Basis::kMonomial);
  const auto counts = independence_counts(g);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    p.set_coeff(static_cast<int>(i), IntPolyQ(counts[i]));
  }
  return p;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
  std::vector<int> labels = s;
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<int> to_new(g.n() + 1, 0);
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const int v = labels[k];
    if (v < 1 || v > g.n()) {
      throw VertexOutOfRange("subset vertex " + std::to_string(v) +
                             " leaves vertex range 1.." + std::to_string(g.n()));
    }
    to_new[v] = static_cast<int>(k) + 1;
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    if (to_new[u] && to_new[v]) edges.emplace_back(to_new[u], to_new[v]);
  }
  return {graph_make(static_cast<int>(labels.size()), std::move(edges)),
          std::move(labels)};
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::uint64_t unseen =
      g.n() == 64 ? ~std::uint64_t{0}
                  : (g.n() == 0 ? 0 : (std::uint64_t{1} << g.n()) - 1);
  while (unseen) {
    const int v0 = std::countr_zero(unseen);
    std::uint64_t comp = std::uint64_t{1} << v0;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      while (frontier) {
        const int u0 = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= g.adjacency()[u0];
      }
      frontier = next & ~comp;
      comp |= frontier;
    }
    unseen &= ~comp;
    comps.push_back(mask_to_vertices(comp));
  }
  return comps;  // seeded in ascending order of minimum vertex already
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + a.n(), v + a.n());
  return graph_make(a.n() + b.n(), std::move(edges));
}

}  // namespace qti
