#include "nbpoly/complex_engine.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "nbpoly/classic_polys.hpp"

namespace nbpoly {

namespace {

void require_positive_order(const Graph& g) {
  if (g.order() == 0)
    throw DomainError("neighborhood polynomials are undefined for the order-0 graph");
}

void require_oracle_capacity(const Graph& g) {
  if (g.order() > kOracleMaxOrder)
    throw CapacityError("subset sweep limited to order <= " + std::to_string(kOracleMaxOrder) +
                        ", got " + std::to_string(g.order()));
}

bool mask_in_complex(const Graph& g, std::uint64_t mask) {
  for (int v = 0; v < g.order(); ++v)
    if ((mask & ~g.neighbor_bits(v)) == 0) return true;
  return false;
}

// Signed multiplicity of every distinct nonempty intersection of maximal
// distinct neighborhoods: +1 per odd-size subfamily, -1 per even-size.
// Branches with an empty intersection are pruned; they contribute only
// to the constant term, which every caller fixes to 1 separately.
class IntersectionWeights {
 public:
  explicit IntersectionWeights(const Graph& g) {
    for (const VertexSet& nbhd : maximal_distinct_neighborhoods(g))
      sets_.push_back(nbhd.bits());
    walk(0, ~std::uint64_t{0}, 1);
  }

  const std::unordered_map<std::uint64_t, long long>& weights() const { return weights_; }

 private:
  void walk(std::size_t start, std::uint64_t intersection, long long sign) {
    for (std::size_t j = start; j < sets_.size(); ++j) {
      const std::uint64_t next = intersection & sets_[j];
      if (next == 0) continue;
      weights_[next] += sign;
      walk(j + 1, next, -sign);
    }
  }

  std::vector<std::uint64_t> sets_;
  std::unordered_map<std::uint64_t, long long> weights_;
};

// Inclusion-exclusion skeleton shared by the three direct fast paths.
// `counter` maps an intersection to the generating function of its
// qualifying nonempty subsets (zero constant term).
template <typename Counter>
Polynomial inclusion_exclusion(const Graph& g, Counter&& counter) {
  const IntersectionWeights intersections(g);
  Polynomial result(1);
  for (const auto& [bits, weight] : intersections.weights()) {
    if (weight == 0) continue;
    result += Polynomial(Integer(weight)) * counter(bits);
  }
  return result;
}

Polynomial oracle_sweep(const Graph& g, bool (*keep)(const Graph&, std::uint64_t)) {
  require_oracle_capacity(g);
  const std::uint64_t all = g.vertex_set().bits();
  std::vector<Integer> counts(static_cast<std::size_t>(g.order()) + 1);
  for (std::uint64_t mask = 0;; ++mask) {
    if (mask_in_complex(g, mask) && keep(g, mask))
      counts[static_cast<std::size_t>(std::popcount(mask))] += 1;
    if (mask == all) break;
  }
  return Polynomial(std::move(counts));
}

bool keep_all(const Graph&, std::uint64_t) { return true; }

bool keep_independent(const Graph& g, std::uint64_t mask) {
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1)
    if (g.neighbor_bits(std::countr_zero(rest)) & mask) return false;
  return true;
}

bool keep_connected(const Graph& g, std::uint64_t mask) {
  return mask == 0 || component_count(g, VertexSet::from_bits(g.order(), mask)) == 1;
}

bool keep_disconnected_nontrivial(const Graph& g, std::uint64_t mask) {
  const int comps = component_count(g, VertexSet::from_bits(g.order(), mask));
  return comps > 1 && comps < std::popcount(mask);
}

}  // namespace

const char* method_name(Method m) {
  switch (m) {
    case Method::Oracle: return "oracle";
    case Method::Fast: return "fast";
    case Method::Auto: return "auto";
  }
  return "unknown";
}

Method resolve_method(const Graph& g, Method m) {
  if (m != Method::Auto) return m;
  return maximal_distinct_neighborhoods(g).size() <= static_cast<std::size_t>(kAutoFastThreshold)
             ? Method::Fast
             : Method::Oracle;
}

ComplexMembershipWitness complex_membership(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.order())
    throw ArgumentError("vertex set universe does not match graph order");
  for (int v = 0; v < g.order(); ++v)
    if ((x.bits() & ~g.neighbor_bits(v)) == 0) return {x, v};
  return {x, std::nullopt};
}

bool in_neighborhood_complex(const Graph& g, const VertexSet& x) {
  return complex_membership(g, x).witness.has_value();
}

Polynomial neighborhood_polynomial(const Graph& g, Method method) {
  require_positive_order(g);
  if (resolve_method(g, method) == Method::Oracle) return oracle_sweep(g, keep_all);
  return inclusion_exclusion(g, [](std::uint64_t bits) {
    return binomial_power(std::popcount(bits)) - 1;
  });
}

Polynomial independent_neighborhood_polynomial(const Graph& g, Method method) {
  require_positive_order(g);
  if (resolve_method(g, method) == Method::Oracle) return oracle_sweep(g, keep_independent);
  return inclusion_exclusion(g, [&g](std::uint64_t bits) {
    return independence_polynomial_within(g, VertexSet::from_bits(g.order(), bits)) - 1;
  });
}

Polynomial connected_neighborhood_polynomial(const Graph& g, Method method) {
  require_positive_order(g);
  if (resolve_method(g, method) == Method::Oracle) return oracle_sweep(g, keep_connected);
  return inclusion_exclusion(g, [&g](std::uint64_t bits) {
    return subgraph_polynomial_within(g, VertexSet::from_bits(g.order(), bits));
  });
}

Polynomial disconnected_neighborhood_polynomial(const Graph& g, Method method) {
  require_positive_order(g);
  if (resolve_method(g, method) == Method::Oracle)
    return oracle_sweep(g, keep_disconnected_nontrivial);
  // N = N_i + N_c + N_d - 1 - (n - iso)x, rearranged for N_d.
  const Polynomial correction =
      Polynomial(1) + Polynomial::monomial(g.order() - isolated_count(g), 1);
  return neighborhood_polynomial(g, Method::Fast) -
         independent_neighborhood_polynomial(g, Method::Fast) -
         connected_neighborhood_polynomial(g, Method::Fast) + correction;
}

}  // namespace nbpoly
