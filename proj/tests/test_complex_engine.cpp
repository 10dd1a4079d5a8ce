#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nbpoly/complex_engine.hpp"
#include "nbpoly/identities.hpp"

using namespace nbpoly;

namespace {

Polynomial poly(std::vector<long long> coeffs) {
  std::vector<Integer> c(coeffs.begin(), coeffs.end());
  return Polynomial(std::move(c));
}

// K_{1,4} with an extra edge between two leaves; the smallest stock of
// complex members that are disconnected with a non-singleton component.
Graph star_plus_edge() {
  return Graph::from_edge_list(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}});
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> graphs = random_corpus(150, 12, {0.2, 0.5, 0.8}, 101);
  return graphs;
}

}  // namespace

TEST_CASE("complex membership witnesses") {
  const Graph g = path_graph(3);
  const auto hit = complex_membership(g, VertexSet(3, {0, 2}));
  REQUIRE(hit.witness.has_value());
  CHECK(*hit.witness == 1);
  CHECK(VertexSet(3, {0, 2}).is_subset_of(g.neighbors(*hit.witness)));

  CHECK(!complex_membership(g, VertexSet(3, {0, 1, 2})).witness.has_value());
  CHECK(in_neighborhood_complex(g, VertexSet(3)));
  CHECK(!in_neighborhood_complex(cycle_graph(4), VertexSet(4, {0, 1, 2})));

  SUBCASE("witnesses really contain the subset") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 100; ++trial) {
      const Graph h = random_graph(1 + static_cast<int>(rng() % 12), 0.5, rng());
      const VertexSet x = VertexSet::from_bits(h.order(), rng() & h.vertex_set().bits());
      const auto w = complex_membership(h, x);
      if (w.witness.has_value()) {
        CHECK(x.is_subset_of(h.neighbors(*w.witness)));
      } else {
        for (int v = 0; v < h.order(); ++v) CHECK(!x.is_subset_of(h.neighbors(v)));
      }
    }
  }
}

TEST_CASE("neighborhood polynomial") {
  for (Method m : {Method::Oracle, Method::Fast, Method::Auto}) {
    CHECK(neighborhood_polynomial(complete_graph(4), m) == poly({1, 4, 6, 4}));
    CHECK(neighborhood_polynomial(path_graph(3), m) == poly({1, 3, 1}));
    CHECK(neighborhood_polynomial(cycle_graph(4), m) == poly({1, 4, 2}));
  }
  CHECK(neighborhood_polynomial(complete_graph(4)) == binomial_power(4) - Polynomial::monomial(1, 4));
}

TEST_CASE("independent neighborhood polynomial") {
  CHECK(independent_neighborhood_polynomial(cycle_graph(4)) ==
        neighborhood_polynomial(cycle_graph(4)));
  CHECK(independent_neighborhood_polynomial(complete_graph(4)) == poly({1, 4}));
  const Graph ladder = cartesian_product(complete_graph(2), path_graph(3));
  CHECK(independent_neighborhood_polynomial(ladder) == poly({1, 6, 6, 2}));
  CHECK(independent_neighborhood_polynomial(ladder, Method::Oracle) == poly({1, 6, 6, 2}));
}

TEST_CASE("connected neighborhood polynomial") {
  for (int n : {2, 5, 9}) {
    CHECK(connected_neighborhood_polynomial(path_graph(n)) ==
          Polynomial(1) + Polynomial::monomial(n, 1));
    CHECK(connected_neighborhood_polynomial(star_graph(n + 1)) ==
          Polynomial(1) + Polynomial::monomial(n + 1, 1));
  }
  for (int n : {1, 2, 3, 6}) {
    CHECK(connected_neighborhood_polynomial(complete_graph(n)) ==
          binomial_power(n) - Polynomial::monomial(1, static_cast<std::size_t>(n)));
  }
  CHECK(connected_neighborhood_polynomial(cycle_graph(4)) == poly({1, 4}));
  // Large graphs stay reachable through the inclusion-exclusion path.
  CHECK(connected_neighborhood_polynomial(path_graph(40), Method::Fast) ==
        Polynomial(1) + Polynomial::monomial(40, 1));
}

TEST_CASE("disconnected neighborhood polynomial") {
  for (Method m : {Method::Oracle, Method::Fast}) {
    CHECK(disconnected_neighborhood_polynomial(path_graph(3), m).is_zero());
    CHECK(disconnected_neighborhood_polynomial(complete_graph(3), m).is_zero());
    CHECK(disconnected_neighborhood_polynomial(star_plus_edge(), m) == poly({0, 0, 0, 2, 1}));
  }
}

TEST_CASE("degenerate and rejected inputs") {
  const Graph edgeless = Graph::from_edge_list(5, {});
  CHECK(neighborhood_polynomial(edgeless) == Polynomial(1));
  CHECK(independent_neighborhood_polynomial(edgeless) == Polynomial(1));
  CHECK(connected_neighborhood_polynomial(edgeless) == Polynomial(1));
  CHECK(disconnected_neighborhood_polynomial(edgeless).is_zero());

  const Graph k1 = complete_graph(1);
  CHECK(neighborhood_polynomial(k1) == Polynomial(1));
  CHECK(connected_neighborhood_polynomial(k1) == Polynomial(1));

  CHECK_THROWS_AS(neighborhood_polynomial(Graph()), DomainError);
  CHECK_THROWS_AS(independent_neighborhood_polynomial(Graph()), DomainError);
  CHECK_THROWS_AS(connected_neighborhood_polynomial(Graph()), DomainError);
  CHECK_THROWS_AS(disconnected_neighborhood_polynomial(Graph()), DomainError);

  CHECK_THROWS_AS(neighborhood_polynomial(path_graph(25), Method::Oracle), CapacityError);
}

TEST_CASE("auto method resolution") {
  CHECK(resolve_method(cycle_graph(4), Method::Auto) == Method::Fast);
  CHECK(resolve_method(cycle_graph(4), Method::Oracle) == Method::Oracle);
  CHECK(resolve_method(cycle_graph(4), Method::Fast) == Method::Fast);
  // C22 has 22 incomparable distinct neighborhoods, pushing auto to the oracle.
  const Graph c22 = cycle_graph(22);
  REQUIRE(maximal_distinct_neighborhoods(c22).size() == 22);
  CHECK(resolve_method(c22, Method::Auto) == Method::Oracle);
  CHECK(connected_neighborhood_polynomial(c22, Method::Auto) ==
        Polynomial(1) + Polynomial::monomial(22, 1));
}

TEST_CASE("oracle and fast paths agree across the corpus") {
  for (const CorpusEntry& entry : corpus()) {
    const Graph& g = entry.graph;
    CAPTURE(entry.label);
    CHECK(neighborhood_polynomial(g, Method::Oracle) == neighborhood_polynomial(g, Method::Fast));
    CHECK(independent_neighborhood_polynomial(g, Method::Oracle) ==
          independent_neighborhood_polynomial(g, Method::Fast));
    CHECK(connected_neighborhood_polynomial(g, Method::Oracle) ==
          connected_neighborhood_polynomial(g, Method::Fast));
    CHECK(disconnected_neighborhood_polynomial(g, Method::Oracle) ==
          disconnected_neighborhood_polynomial(g, Method::Fast));
  }
}

TEST_CASE("structural invariants across the corpus") {
  for (const CorpusEntry& entry : corpus()) {
    const Graph& g = entry.graph;
    const int n = g.order();
    const Polynomial nb = neighborhood_polynomial(g);
    const Polynomial ni = independent_neighborhood_polynomial(g);
    const Polynomial nc = connected_neighborhood_polynomial(g);
    const Polynomial nd = disconnected_neighborhood_polynomial(g);

    // Restricted families never exceed the full complex, coefficient-wise.
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
      CHECK(ni.coefficient(k) <= nb.coefficient(k));
      CHECK(nc.coefficient(k) <= nb.coefficient(k));
      CHECK(nd.coefficient(k) <= nb.coefficient(k));
    }

    CHECK(nb.coefficient(0) == 1);
    CHECK(ni.coefficient(0) == 1);
    CHECK(nc.coefficient(0) == 1);
    CHECK(nd.coefficient(0) == 0);
    CHECK(nd.coefficient(1) == 0);

    const Integer non_isolated = n - isolated_count(g);
    CHECK(nb.coefficient(1) == non_isolated);
    CHECK(ni.coefficient(1) == non_isolated);
    CHECK(nc.coefficient(1) == non_isolated);

    bool universal_vertex = false;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == n - 1) universal_vertex = true;
    if (!universal_vertex) {
      if (nb.degree().has_value()) CHECK(*nb.degree() < static_cast<std::size_t>(n));
    }
  }
  for (int n : {1, 2, 3, 7}) {
    CHECK(neighborhood_polynomial(complete_graph(n)).degree() ==
          static_cast<std::size_t>(n - 1));
  }
}
