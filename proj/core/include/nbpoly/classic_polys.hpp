#pragma once

#include "nbpoly/complex_engine.hpp"
#include "nbpoly/graph.hpp"
#include "nbpoly/polynomial.hpp"

namespace nbpoly {

// Independence polynomial I(G, x). Oracle sweeps all subsets; the fast
// path is the deletion recursion I(G) = I(G-v) + x*I(G-N[v]) pivoting on
// a maximum-degree vertex (lowest index on ties), with edgeless graphs
// as the base case. Order 0 is allowed and yields 1.
Polynomial independence_polynomial(const Graph& g, Method method = Method::Fast);

// Domination polynomial D(G, x). Oracle keeps subsets whose closed
// neighborhood covers V; the fast path computes
// (1+x)^n - N(complement(G), x). Requires order >= 1.
Polynomial domination_polynomial(const Graph& g, Method method = Method::Fast);

// Subgraph polynomial S(G, x): nonempty vertex subsets inducing a
// connected subgraph, by size. The empty set is excluded (s_0 = 0).
// Oracle sweeps; the fast path enumerates connected sets by rooted
// growth. Requires order >= 1.
Polynomial subgraph_polynomial(const Graph& g, Method method = Method::Fast);

// Subgraph component polynomial Q(G; x, y): q_ij counts subsets of size
// i whose induced subgraph has exactly j components. Subset sweep only;
// order <= 24.
BivariatePolynomial subgraph_component_polynomial(const Graph& g);

// Restrictions to an induced vertex subset, used by the
// inclusion-exclusion engine. Both accept any subset of the graph's
// universe, including the empty one.
Polynomial independence_polynomial_within(const Graph& g, const VertexSet& active);
Polynomial subgraph_polynomial_within(const Graph& g, const VertexSet& active);

}  // namespace nbpoly
