#include "nbpoly/classic_polys.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace nbpoly {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

void require_positive_order(const Graph& g, const char* op) {
  if (g.order() == 0) throw DomainError(std::string(op) + " is undefined for the order-0 graph");
}

void require_oracle_capacity(const Graph& g) {
  if (g.order() > kOracleMaxOrder)
    throw CapacityError("subset sweep limited to order <= " + std::to_string(kOracleMaxOrder) +
                        ", got " + std::to_string(g.order()));
}

Polynomial independence_on_mask(const Graph& g, std::uint64_t active) {
  int pivot = -1;
  int pivot_degree = 0;
  for (std::uint64_t rest = active; rest != 0; rest &= rest - 1) {
    const int v = std::countr_zero(rest);
    const int d = std::popcount(g.neighbor_bits(v) & active);
    if (d > pivot_degree) {
      pivot = v;
      pivot_degree = d;
    }
  }
  if (pivot < 0) return binomial_power(std::popcount(active));  // edgeless base case
  const std::uint64_t closed = (g.neighbor_bits(pivot) | bit(pivot)) & active;
  return independence_on_mask(g, active & ~bit(pivot)) +
         Polynomial::variable() * independence_on_mask(g, active & ~closed);
}

Polynomial independence_oracle(const Graph& g, std::uint64_t active) {
  std::vector<Integer> counts(static_cast<std::size_t>(std::popcount(active)) + 1);
  // Sweep subsets of `active` only.
  std::uint64_t mask = 0;
  while (true) {
    bool independent = true;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
      if (g.neighbor_bits(std::countr_zero(rest)) & mask) {
        independent = false;
        break;
      }
    if (independent) counts[static_cast<std::size_t>(std::popcount(mask))] += 1;
    if (mask == active) break;
    mask = (mask - active) & active;  // next subset of active
  }
  return Polynomial(std::move(counts));
}

struct GrowthCounter {
  const Graph& g;
  std::vector<Integer>& counts;
  std::uint64_t candidates = 0;  // vertices above the root, within the active set

  void grow(std::uint64_t current, std::uint64_t boundary, std::uint64_t forbidden) {
    counts[static_cast<std::size_t>(std::popcount(current))] += 1;
    std::uint64_t extensions = boundary & candidates & ~current & ~forbidden;
    while (extensions != 0) {
      const int u = std::countr_zero(extensions);
      extensions &= extensions - 1;
      grow(current | bit(u), boundary | g.neighbor_bits(u), forbidden);
      forbidden |= bit(u);  // later branches never revisit u
    }
  }
};

Polynomial subgraph_growth(const Graph& g, std::uint64_t active) {
  std::vector<Integer> counts(static_cast<std::size_t>(std::popcount(active)) + 1);
  GrowthCounter counter{g, counts};
  for (std::uint64_t roots = active; roots != 0; roots &= roots - 1) {
    const int r = std::countr_zero(roots);
    counter.candidates = active & ~(bit(r) | (bit(r) - 1));
    counter.grow(bit(r), g.neighbor_bits(r), 0);
  }
  return Polynomial(std::move(counts));
}

Polynomial subgraph_oracle(const Graph& g, std::uint64_t active) {
  const int n = g.order();
  std::vector<Integer> counts(static_cast<std::size_t>(std::popcount(active)) + 1);
  std::uint64_t mask = 0;
  while (true) {
    if (mask != 0 && component_count(g, VertexSet::from_bits(n, mask)) == 1)
      counts[static_cast<std::size_t>(std::popcount(mask))] += 1;
    if (mask == active) break;
    mask = (mask - active) & active;
  }
  return Polynomial(std::move(counts));
}

}  // namespace

Polynomial independence_polynomial(const Graph& g, Method method) {
  const std::uint64_t all = g.vertex_set().bits();
  if (method == Method::Oracle) {
    require_oracle_capacity(g);
    return independence_oracle(g, all);
  }
  return independence_on_mask(g, all);
}

Polynomial domination_polynomial(const Graph& g, Method method) {
  require_positive_order(g, "domination polynomial");
  if (method == Method::Oracle) {
    require_oracle_capacity(g);
    const std::uint64_t all = g.vertex_set().bits();
    std::vector<Integer> counts(static_cast<std::size_t>(g.order()) + 1);
    for (std::uint64_t mask = 0;; ++mask) {
      std::uint64_t covered = mask;
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
        covered |= g.neighbor_bits(std::countr_zero(rest));
      if (covered == all) counts[static_cast<std::size_t>(std::popcount(mask))] += 1;
      if (mask == all) break;
    }
    return Polynomial(std::move(counts));
  }
  return binomial_power(g.order()) - neighborhood_polynomial(complement(g), method);
}

Polynomial subgraph_polynomial(const Graph& g, Method method) {
  require_positive_order(g, "subgraph polynomial");
  const std::uint64_t all = g.vertex_set().bits();
  if (method == Method::Oracle) {
    require_oracle_capacity(g);
    return subgraph_oracle(g, all);
  }
  return subgraph_growth(g, all);
}

BivariatePolynomial subgraph_component_polynomial(const Graph& g) {
  require_positive_order(g, "subgraph component polynomial");
  require_oracle_capacity(g);
  const int n = g.order();
  const std::uint64_t all = g.vertex_set().bits();
  BivariatePolynomial q;
  for (std::uint64_t mask = 0;; ++mask) {
    const int size = std::popcount(mask);
    const int comps = component_count(g, VertexSet::from_bits(n, mask));
    q.add_term(size, comps, 1);
    if (mask == all) break;
  }
  return q;
}

Polynomial independence_polynomial_within(const Graph& g, const VertexSet& active) {
  if (active.universe() != g.order())
    throw ArgumentError("vertex set universe does not match graph order");
  return independence_on_mask(g, active.bits());
}

Polynomial subgraph_polynomial_within(const Graph& g, const VertexSet& active) {
  if (active.universe() != g.order())
    throw ArgumentError("vertex set universe does not match graph order");
  return subgraph_growth(g, active.bits());
}

}  // namespace nbpoly
