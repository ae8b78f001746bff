#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "qti/xqpoly.hpp"

namespace qti {

// Hard cap on the vertex count: neighbor sets are 64-bit masks, and every
// algorithm here is exponential anyway.
inline constexpr int kMaxVertices = 64;

// Finite simple graph on vertex set {1..n}.  Immutable after construction;
// build through graph_make (validation) or disjoint_union.
class Graph {
 public:
  int n() const { return n_; }
  // Edges as pairs {u, v} with u < v, sorted lexicographically.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  // Bit u-1 set iff {u, v} is an edge (v is 1-indexed).
  std::uint64_t neighbor_mask(int v) const { return adj_[v - 1]; }
  const std::vector<std::uint64_t>& adjacency() const { return adj_; }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  friend Graph graph_make(int n, std::vector<std::pair<int, int>> edges);
  Graph() = default;

  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::uint64_t> adj_;
};

// Validates 1 <= u < v <= n, no loops, no duplicates.
// Errors: VertexOutOfRange, LoopEdge, DuplicateEdge, BadArgs (u > v or n out
// of range).
Graph graph_make(int n, std::vector<std::pair<int, int>> edges);

// Streams the size-i independent sets in lexicographic order (each set as an
// ascending vertex list).
void independent_sets(const Graph& g, int i,
                      const std::function<void(const std::vector<int>&)>& fn);

// c_0..c_alpha where c_i counts size-i independent sets; c_0 = 1, trailing
// zeros trimmed (alpha = last index).
std::vector<mpz_class> independence_counts(const Graph& g);

// Size of a maximum independent set.
int alpha(const Graph& g);

// I(G, x) = 1 + sum c_i x^i in the monomial basis (constant coefficients).
BivarPoly independence_polynomial(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  // labels[k] = original vertex carried by new vertex k+1 (ascending).
  std::vector<int> labels;
};

// Subgraph induced on S (subset of {1..n}); vertices relabeled 1..|S| in
// ascending original order.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);

// Vertex sets of the connected components, each ascending, ordered by their
// minimum vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Disjoint union; vertices of b are shifted up by a.n().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace qti
