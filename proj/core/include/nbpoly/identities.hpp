#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nbpoly/complex_engine.hpp"
#include "nbpoly/graph.hpp"
#include "nbpoly/polynomial.hpp"

namespace nbpoly {

// Executable identities relating the neighborhood-complex polynomials to
// each other and to the classical polynomials. Each checker computes the
// left side with the complex engine and assembles the right side from
// its formula; the verdict is exact (residual must be the zero
// polynomial).
enum class IdentityKind {
  TreeIndependent,         // trees: Ni = N
  CycleIndependent,        // cycles of order > 3: Ni = N
  ClosedForms,             // complete / tree / cycle closed forms for Nc
  UnionIndependent,        // Ni(G1 u G2) = Ni(G1) + Ni(G2) - 1
  UnionConnected,          // Nc(G1 u G2) = Nc(G1) + Nc(G2) - 1
  JoinIndependent,         // Ni(G1 + G2) = I(G1) + I(G2) - 1
  JoinIndependentCorollary,  // Ni(G1 + G2) = I(G1 + G2)
  JoinConnectedAsPrinted,  // join formula without the empty-set constant
  JoinConnectedCorrected,  // the same plus 1; this one holds
  CartesianIndependent,    // five-part product formula; needs no isolated vertices
  ExpansionIndependent,    // Ni(exp(G,r)) = Ni(G, (1+x)^r - 1)
  DominationComplement,    // D(G) + N(complement) = (1+x)^n
  Decomposition,           // N = Ni + Nc + Nd - 1 - (n - iso)x
};

std::vector<IdentityKind> all_identity_kinds();

// Everything except join_connected_as_printed, which is off by a known
// constant and opt-in by name.
std::vector<IdentityKind> default_identity_kinds();

const char* identity_kind_name(IdentityKind kind);
std::optional<IdentityKind> parse_identity_kind(const std::string& name);

// 1 for single-graph identities (including expansion), 2 for pair identities.
int identity_arity(IdentityKind kind);
bool identity_takes_factor(IdentityKind kind);

enum class Verdict { Pass, Fail, Inapplicable };
const char* verdict_name(Verdict verdict);

struct IdentityReport {
  IdentityKind kind = IdentityKind::Decomposition;
  std::vector<std::string> inputs;  // graph6 descriptors (plus "r=k" for expansion)
  Polynomial lhs;
  Polynomial rhs;
  Polynomial residual;  // lhs - rhs; zero iff verdict is Pass
  Verdict verdict = Verdict::Inapplicable;
  std::string notes;  // resolved method, or the unmet precondition
};

IdentityReport verify_identity(IdentityKind kind, const Graph& g, Method method = Method::Auto);
IdentityReport verify_identity(IdentityKind kind, const Graph& g, int expansion_factor,
                               Method method = Method::Auto);
IdentityReport verify_identity(IdentityKind kind, const Graph& g1, const Graph& g2,
                               Method method = Method::Auto);

// ---- corpora and suite driver ----

struct CorpusEntry {
  Graph graph;
  std::string label;
};

// Deterministic corpus of seeded random graphs with orders 1..max_order;
// edge probabilities cycle through the given list.
std::vector<CorpusEntry> random_corpus(int count, int max_order,
                                       const std::vector<double>& edge_probabilities,
                                       std::uint64_t seed);

// Random labeled trees with orders in [min_order, max_order].
std::vector<CorpusEntry> tree_corpus(int count, int min_order, int max_order,
                                     std::uint64_t seed);

struct SuiteConfig {
  std::vector<IdentityKind> kinds = default_identity_kinds();
  int pair_count = 200;       // sampled pairs per binary identity
  std::uint64_t seed = 1;     // pair-sampling seed
  Method method = Method::Auto;
  std::vector<int> expansion_factors = {1, 2, 3};
};

struct VerdictCounts {
  int pass = 0;
  int fail = 0;
  int inapplicable = 0;
};

struct SuiteSummary {
  std::map<IdentityKind, VerdictCounts> by_kind;
  VerdictCounts total;
};

struct SuiteResult {
  std::vector<IdentityReport> reports;
  SuiteSummary summary;
};

// Unary identities run over every corpus graph (expansion once per factor
// within capacity); binary identities run over pair_count pairs sampled
// deterministically from the seed. Report order is deterministic.
SuiteResult run_suite(const std::vector<CorpusEntry>& corpus, const SuiteConfig& config);

}  // namespace nbpoly
