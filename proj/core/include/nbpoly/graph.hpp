#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nbpoly/vertex_set.hpp"

namespace nbpoly {

// Simple finite undirected graph on vertices 0..n-1 with adjacency kept
// as one bit-vector per vertex. Immutable once constructed; all
// operations below are pure.
class Graph {
 public:
  Graph() = default;  // order-0 graph

  // Builds a graph from unordered vertex pairs. Duplicate edges collapse.
  // Throws ArgumentError for self-loops or out-of-range endpoints,
  // CapacityError for order > 64.
  static Graph from_edge_list(int order,
                              const std::vector<std::pair<int, int>>& edges);

  int order() const { return n_; }
  int edge_count() const { return m_; }

  bool adjacent(int u, int v) const { return neighbors(u).contains(v); }

  // Open neighborhood N(v).
  const VertexSet& neighbors(int v) const;
  std::uint64_t neighbor_bits(int v) const { return neighbors(v).bits(); }

  int degree(int v) const { return neighbors(v).count(); }

  VertexSet vertex_set() const { return VertexSet::full(n_); }

  // Edges as pairs (u, v) with u < v, ascending lexicographic.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(int order);

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

// ---- subset queries ----

VertexSet open_neighborhood(const Graph& g, int v);

// N[W]: W together with every neighbor of a member of W.
VertexSet closed_neighborhood_of_set(const Graph& g, const VertexSet& w);

// Subgraph induced by x, relabeled 0..|x|-1 by increasing original label.
Graph induced_subgraph(const Graph& g, const VertexSet& x);

// True iff no edge of g joins two members of x (true for empty and singletons).
bool is_independent(const Graph& g, const VertexSet& x);

// Number of connected components of g[x]; 0 for the empty set.
int component_count(const Graph& g, const VertexSet& x);

// True iff g[x] is connected; the empty set counts as connected.
bool is_connected_subset(const Graph& g, const VertexSet& x);

// Number of vertices with empty open neighborhood.
int isolated_count(const Graph& g);

// Distinct open neighborhoods not strictly contained in another distinct
// open neighborhood, ordered by ascending big-endian characteristic value
// (vertex 0 is the most significant position).
std::vector<VertexSet> maximal_distinct_neighborhoods(const Graph& g);

// ---- graph operations ----

Graph complement(const Graph& g);

// Vertices of g2 are shifted by order(g1).
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Disjoint union plus all cross edges.
Graph join(const Graph& g1, const Graph& g2);

// Cartesian product; pair (u, v) gets label u*order(g2) + v.
Graph cartesian_product(const Graph& g1, const Graph& g2);

// r-expansion: vertex v becomes the independent set {v*r, ..., v*r + r - 1},
// every edge becomes a K_{r,r} between the corresponding sets. r >= 1.
Graph expansion(const Graph& g, int r);

// ---- named families ----

Graph path_graph(int n);                          // n >= 1
Graph cycle_graph(int n);                         // n >= 3
Graph complete_graph(int n);                      // n >= 1
Graph star_graph(int n);                          // K_{1,n-1}, center 0, n >= 2
Graph complete_bipartite_graph(int a, int b);     // a, b >= 1

// Deterministic G(n, p) for a given seed; same triple always yields the
// same graph on every platform.
Graph random_graph(int n, double p, std::uint64_t seed);

// Random labeled tree of order n >= 1 by sequential attachment: vertex i
// picks a parent among 0..i-1 from the seeded stream.
Graph random_tree(int n, std::uint64_t seed);

// Parses a family expression "name:arg[,arg]", e.g. "cycle:4",
// "complete_bipartite:2,3", "random:10,0.5,42". Throws ArgumentError
// naming the violated constraint.
Graph make_family(const std::string& expression);

}  // namespace nbpoly
