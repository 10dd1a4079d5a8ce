#pragma once

#include <optional>

#include "nbpoly/graph.hpp"
#include "nbpoly/polynomial.hpp"

namespace nbpoly {

// Oracle: plain 2^n subset sweep (n <= 24). Fast: the structured path of
// the respective operation. Auto resolves per graph.
enum class Method { Oracle, Fast, Auto };

// Order bound for the subset-sweep oracles.
inline constexpr int kOracleMaxOrder = 24;

// Auto prefers the inclusion-exclusion path while the number of maximal
// distinct neighborhoods stays at or below this.
inline constexpr int kAutoFastThreshold = 20;

const char* method_name(Method m);

// The method Auto resolves to for this graph (Oracle and Fast map to
// themselves).
Method resolve_method(const Graph& g, Method m);

// Subset together with a vertex whose open neighborhood contains it;
// witness is absent when the subset is not in the neighborhood complex.
struct ComplexMembershipWitness {
  VertexSet subset;
  std::optional<int> witness;
};

ComplexMembershipWitness complex_membership(const Graph& g, const VertexSet& x);
bool in_neighborhood_complex(const Graph& g, const VertexSet& x);

// Generating function of the neighborhood complex by subset size.
// Oracle sweeps all subsets; fast runs inclusion-exclusion over the
// maximal distinct neighborhoods. Rejects order-0 graphs.
Polynomial neighborhood_polynomial(const Graph& g, Method method = Method::Auto);

// Complex members that are independent sets.
Polynomial independent_neighborhood_polynomial(const Graph& g, Method method = Method::Auto);

// Complex members inducing a connected subgraph; the empty set counts,
// so the constant term is 1 for every graph of order >= 1.
Polynomial connected_neighborhood_polynomial(const Graph& g, Method method = Method::Auto);

// Complex members X with 1 < components(g[X]) < |X|. The fast path uses
// the decomposition against the other three polynomials.
Polynomial disconnected_neighborhood_polynomial(const Graph& g, Method method = Method::Auto);

}  // namespace nbpoly
