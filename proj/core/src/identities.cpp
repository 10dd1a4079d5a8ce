#include "nbpoly/identities.hpp"

#include <random>

#include "nbpoly/classic_polys.hpp"
#include "nbpoly/graph_io.hpp"

namespace nbpoly {

namespace {

struct KindInfo {
  IdentityKind kind;
  const char* name;
  int arity;
  bool takes_factor;
};

constexpr KindInfo kKinds[] = {
    {IdentityKind::TreeIndependent, "tree_independent", 1, false},
    {IdentityKind::CycleIndependent, "cycle_independent", 1, false},
    {IdentityKind::ClosedForms, "closed_forms", 1, false},
    {IdentityKind::UnionIndependent, "union_independent", 2, false},
    {IdentityKind::UnionConnected, "union_connected", 2, false},
    {IdentityKind::JoinIndependent, "join_independent", 2, false},
    {IdentityKind::JoinIndependentCorollary, "join_independent_corollary", 2, false},
    {IdentityKind::JoinConnectedAsPrinted, "join_connected_as_printed", 2, false},
    {IdentityKind::JoinConnectedCorrected, "join_connected_corrected", 2, false},
    {IdentityKind::CartesianIndependent, "cartesian_independent", 2, false},
    {IdentityKind::ExpansionIndependent, "expansion_independent", 1, true},
    {IdentityKind::DominationComplement, "domination_complement", 1, false},
    {IdentityKind::Decomposition, "decomposition", 1, false},
};

const KindInfo& info(IdentityKind kind) {
  for (const KindInfo& k : kKinds)
    if (k.kind == kind) return k;
  throw ArgumentError("unknown identity kind");
}

bool is_connected_graph(const Graph& g) {
  return g.order() >= 1 && component_count(g, g.vertex_set()) == 1;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected_graph(g);
}

bool is_cycle_gt3(const Graph& g) {
  if (g.order() <= 3 || !is_connected_graph(g)) return false;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

bool is_complete(const Graph& g) {
  return g.order() >= 1 && 2 * g.edge_count() == g.order() * (g.order() - 1);
}

IdentityReport pass_fail(IdentityKind kind, std::vector<std::string> inputs, Polynomial lhs,
                         Polynomial rhs, std::string notes) {
  IdentityReport report;
  report.kind = kind;
  report.inputs = std::move(inputs);
  report.residual = lhs - rhs;
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  report.verdict = report.residual.is_zero() ? Verdict::Pass : Verdict::Fail;
  report.notes = std::move(notes);
  return report;
}

IdentityReport inapplicable(IdentityKind kind, std::vector<std::string> inputs,
                            std::string reason) {
  IdentityReport report;
  report.kind = kind;
  report.inputs = std::move(inputs);
  report.verdict = Verdict::Inapplicable;
  report.notes = std::move(reason);
  return report;
}

std::string describe(const Graph& g) { return write_graph6(g); }

std::string resolved_note(const Graph& lhs_graph, Method method) {
  return std::string("method=") + method_name(resolve_method(lhs_graph, method));
}

void require_positive_orders(const Graph& g1, const Graph& g2) {
  if (g1.order() == 0 || g2.order() == 0)
    throw DomainError("identity inputs must have order >= 1");
}

// Right-hand side of the connected join identity without its empty-set
// constant; the corrected checker adds 1.
Polynomial join_connected_rhs_as_printed(const Graph& g1, const Graph& g2, Method method) {
  const Polynomial n1 = neighborhood_polynomial(g1, method) - 1;
  const Polynomial n2 = neighborhood_polynomial(g2, method) - 1;
  return subgraph_polynomial(g1) + subgraph_polynomial(g2) +
         n1 * (binomial_power(g2.order()) - 1) + n2 * (binomial_power(g1.order()) - 1) -
         n1 * n2;
}

Polynomial cartesian_rhs(const Graph& g1, const Graph& g2, Method method) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  // Sum over vertex pairs of (I(G1[N(u)]) - 1)(I(G2[N(v)]) - 1); the
  // double sum factors into a product of the per-graph sums.
  Polynomial sum1;
  for (int u = 0; u < n1; ++u)
    sum1 += independence_polynomial_within(g1, g1.neighbors(u)) - 1;
  Polynomial sum2;
  for (int v = 0; v < n2; ++v)
    sum2 += independence_polynomial_within(g2, g2.neighbors(v)) - 1;

  return Polynomial(1) + Polynomial(n1) * (independent_neighborhood_polynomial(g2, method) - 1) +
         Polynomial(n2) * (independent_neighborhood_polynomial(g1, method) - 1) + sum1 * sum2 -
         Polynomial::monomial(Integer(n1) * n2, 1) -
         Polynomial::monomial(Integer(2) * g1.edge_count() * g2.edge_count(), 2);
}

}  // namespace

std::vector<IdentityKind> all_identity_kinds() {
  std::vector<IdentityKind> kinds;
  for (const KindInfo& k : kKinds) kinds.push_back(k.kind);
  return kinds;
}

std::vector<IdentityKind> default_identity_kinds() {
  std::vector<IdentityKind> kinds;
  for (const KindInfo& k : kKinds)
    if (k.kind != IdentityKind::JoinConnectedAsPrinted) kinds.push_back(k.kind);
  return kinds;
}

const char* identity_kind_name(IdentityKind kind) { return info(kind).name; }

std::optional<IdentityKind> parse_identity_kind(const std::string& name) {
  for (const KindInfo& k : kKinds)
    if (name == k.name) return k.kind;
  return std::nullopt;
}

int identity_arity(IdentityKind kind) { return info(kind).arity; }

bool identity_takes_factor(IdentityKind kind) { return info(kind).takes_factor; }

const char* verdict_name(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inapplicable: return "inapplicable";
  }
  return "unknown";
}

IdentityReport verify_identity(IdentityKind kind, const Graph& g, Method method) {
  if (identity_arity(kind) != 1)
    throw ArgumentError(std::string(identity_kind_name(kind)) + " expects a graph pair");
  if (identity_takes_factor(kind))
    throw ArgumentError(std::string(identity_kind_name(kind)) + " expects an expansion factor");
  if (g.order() == 0) throw DomainError("identity inputs must have order >= 1");

  const std::vector<std::string> inputs{describe(g)};
  const std::string notes = resolved_note(g, method);

  switch (kind) {
    case IdentityKind::TreeIndependent:
      if (!is_tree(g)) return inapplicable(kind, inputs, "requires a tree");
      return pass_fail(kind, inputs, independent_neighborhood_polynomial(g, method),
                       neighborhood_polynomial(g, method), notes);

    case IdentityKind::CycleIndependent:
      if (!is_cycle_gt3(g)) return inapplicable(kind, inputs, "requires a cycle of order > 3");
      return pass_fail(kind, inputs, independent_neighborhood_polynomial(g, method),
                       neighborhood_polynomial(g, method), notes);

    case IdentityKind::ClosedForms: {
      const int n = g.order();
      if (is_complete(g)) {
        const Polynomial form = binomial_power(n) - Polynomial::monomial(1, static_cast<std::size_t>(n));
        const Polynomial lhs = connected_neighborhood_polynomial(g, method);
        IdentityReport report = pass_fail(kind, inputs, lhs, form, notes + ", complete form");
        if (report.verdict == Verdict::Pass) {
          // The complete-graph form pins N as well as Nc.
          report = pass_fail(kind, inputs, neighborhood_polynomial(g, method), form,
                             notes + ", complete form");
        }
        return report;
      }
      if (is_tree(g)) {
        if (n < 2) return inapplicable(kind, inputs, "tree form requires order >= 2");
        return pass_fail(kind, inputs, connected_neighborhood_polynomial(g, method),
                         Polynomial(1) + Polynomial::monomial(n, 1), notes + ", tree form");
      }
      if (is_cycle_gt3(g))
        return pass_fail(kind, inputs, connected_neighborhood_polynomial(g, method),
                         Polynomial(1) + Polynomial::monomial(n, 1), notes + ", cycle form");
      return inapplicable(kind, inputs, "requires a complete graph, tree, or cycle of order > 3");
    }

    case IdentityKind::DominationComplement:
      // The domination side stays on the subset-sweep oracle so the check
      // does not reduce to the engine testing itself.
      return pass_fail(kind, inputs,
                       domination_polynomial(g, Method::Oracle) +
                           neighborhood_polynomial(complement(g), method),
                       binomial_power(g.order()), notes);

    case IdentityKind::Decomposition: {
      const Polynomial correction =
          Polynomial(1) + Polynomial::monomial(g.order() - isolated_count(g), 1);
      // The disconnected part is swept directly; its fast path is this
      // very identity.
      const Polynomial rhs = independent_neighborhood_polynomial(g, method) +
                             connected_neighborhood_polynomial(g, method) +
                             disconnected_neighborhood_polynomial(g, Method::Oracle) - correction;
      return pass_fail(kind, inputs, neighborhood_polynomial(g, method), rhs, notes);
    }

    default:
      throw ArgumentError("identity dispatch mismatch");
  }
}

IdentityReport verify_identity(IdentityKind kind, const Graph& g, int expansion_factor,
                               Method method) {
  if (kind != IdentityKind::ExpansionIndependent)
    throw ArgumentError(std::string(identity_kind_name(kind)) + " takes no expansion factor");
  if (g.order() == 0) throw DomainError("identity inputs must have order >= 1");
  const Graph expanded = expansion(g, expansion_factor);
  const std::vector<std::string> inputs{describe(g), "r=" + std::to_string(expansion_factor)};
  return pass_fail(kind, inputs, independent_neighborhood_polynomial(expanded, method),
                   compose(independent_neighborhood_polynomial(g, method),
                           binomial_power(expansion_factor) - 1),
                   resolved_note(expanded, method));
}

IdentityReport verify_identity(IdentityKind kind, const Graph& g1, const Graph& g2,
                               Method method) {
  if (identity_arity(kind) != 2)
    throw ArgumentError(std::string(identity_kind_name(kind)) + " expects a single graph");
  require_positive_orders(g1, g2);

  const std::vector<std::string> inputs{describe(g1), describe(g2)};

  switch (kind) {
    case IdentityKind::UnionIndependent: {
      const Graph u = disjoint_union(g1, g2);
      return pass_fail(kind, inputs, independent_neighborhood_polynomial(u, method),
                       independent_neighborhood_polynomial(g1, method) +
                           independent_neighborhood_polynomial(g2, method) - 1,
                       resolved_note(u, method));
    }
    case IdentityKind::UnionConnected: {
      const Graph u = disjoint_union(g1, g2);
      return pass_fail(kind, inputs, connected_neighborhood_polynomial(u, method),
                       connected_neighborhood_polynomial(g1, method) +
                           connected_neighborhood_polynomial(g2, method) - 1,
                       resolved_note(u, method));
    }
    case IdentityKind::JoinIndependent: {
      const Graph j = join(g1, g2);
      return pass_fail(kind, inputs, independent_neighborhood_polynomial(j, method),
                       independence_polynomial(g1) + independence_polynomial(g2) - 1,
                       resolved_note(j, method));
    }
    case IdentityKind::JoinIndependentCorollary: {
      const Graph j = join(g1, g2);
      return pass_fail(kind, inputs, independent_neighborhood_polynomial(j, method),
                       independence_polynomial(j), resolved_note(j, method));
    }
    case IdentityKind::JoinConnectedAsPrinted: {
      const Graph j = join(g1, g2);
      return pass_fail(kind, inputs, connected_neighborhood_polynomial(j, method),
                       join_connected_rhs_as_printed(g1, g2, method), resolved_note(j, method));
    }
    case IdentityKind::JoinConnectedCorrected: {
      const Graph j = join(g1, g2);
      return pass_fail(kind, inputs, connected_neighborhood_polynomial(j, method),
                       join_connected_rhs_as_printed(g1, g2, method) + 1,
                       resolved_note(j, method));
    }
    case IdentityKind::CartesianIndependent: {
      if (isolated_count(g1) > 0 || isolated_count(g2) > 0)
        return inapplicable(kind, inputs, "requires graphs with no isolated vertex");
      const Graph product = cartesian_product(g1, g2);
      return pass_fail(kind, inputs, independent_neighborhood_polynomial(product, method),
                       cartesian_rhs(g1, g2, method), resolved_note(product, method));
    }
    default:
      throw ArgumentError("identity dispatch mismatch");
  }
}

std::vector<CorpusEntry> random_corpus(int count, int max_order,
                                       const std::vector<double>& edge_probabilities,
                                       std::uint64_t seed) {
  if (count < 0 || max_order < 1) throw ArgumentError("corpus requires count >= 0, max_order >= 1");
  if (edge_probabilities.empty()) throw ArgumentError("corpus requires at least one edge probability");
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> corpus;
  corpus.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_order));
    const double p = edge_probabilities[static_cast<std::size_t>(i) % edge_probabilities.size()];
    Graph g = random_graph(n, p, rng());
    std::string label = write_graph6(g);
    corpus.push_back({std::move(g), std::move(label)});
  }
  return corpus;
}

std::vector<CorpusEntry> tree_corpus(int count, int min_order, int max_order,
                                     std::uint64_t seed) {
  if (count < 0 || min_order < 1 || max_order < min_order)
    throw ArgumentError("tree corpus requires count >= 0 and 1 <= min_order <= max_order");
  std::mt19937_64 rng(seed);
  std::vector<CorpusEntry> corpus;
  corpus.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int span = max_order - min_order + 1;
    const int n = min_order + static_cast<int>(rng() % static_cast<std::uint64_t>(span));
    Graph g = random_tree(n, rng());
    std::string label = write_graph6(g);
    corpus.push_back({std::move(g), std::move(label)});
  }
  return corpus;
}

SuiteResult run_suite(const std::vector<CorpusEntry>& corpus, const SuiteConfig& config) {
  SuiteResult result;

  auto record = [&result](IdentityReport report) {
    VerdictCounts& counts = result.summary.by_kind[report.kind];
    switch (report.verdict) {
      case Verdict::Pass:
        ++counts.pass;
        ++result.summary.total.pass;
        break;
      case Verdict::Fail:
        ++counts.fail;
        ++result.summary.total.fail;
        break;
      case Verdict::Inapplicable:
        ++counts.inapplicable;
        ++result.summary.total.inapplicable;
        break;
    }
    result.reports.push_back(std::move(report));
  };

  for (IdentityKind kind : config.kinds) {
    result.summary.by_kind.emplace(kind, VerdictCounts{});
    if (identity_arity(kind) == 1) {
      for (const CorpusEntry& entry : corpus) {
        if (identity_takes_factor(kind)) {
          for (int r : config.expansion_factors) {
            std::vector<std::string> inputs{entry.label, "r=" + std::to_string(r)};
            if (r * entry.graph.order() > kMaxVertices) {
              record(inapplicable(kind, std::move(inputs), "capacity: expanded order > 64"));
              continue;
            }
            try {
              IdentityReport report = verify_identity(kind, entry.graph, r, config.method);
              report.inputs[0] = entry.label;
              record(std::move(report));
            } catch (const CapacityError& e) {
              record(inapplicable(kind, std::move(inputs), std::string("capacity: ") + e.what()));
            }
          }
        } else {
          try {
            IdentityReport report = verify_identity(kind, entry.graph, config.method);
            report.inputs[0] = entry.label;
            record(std::move(report));
          } catch (const CapacityError& e) {
            record(inapplicable(kind, {entry.label}, std::string("capacity: ") + e.what()));
          }
        }
      }
    } else if (!corpus.empty()) {
      // Same seed, hence the same pair sequence, for every binary kind.
      std::mt19937_64 rng(config.seed);
      for (int i = 0; i < config.pair_count; ++i) {
        const auto& first = corpus[rng() % corpus.size()];
        const auto& second = corpus[rng() % corpus.size()];
        try {
          IdentityReport report = verify_identity(kind, first.graph, second.graph, config.method);
          report.inputs[0] = first.label;
          report.inputs[1] = second.label;
          record(std::move(report));
        } catch (const CapacityError& e) {
          record(inapplicable(kind, {first.label, second.label},
                              std::string("capacity: ") + e.what()));
        }
      }
    }
  }
  return result;
}

}  // namespace nbpoly
