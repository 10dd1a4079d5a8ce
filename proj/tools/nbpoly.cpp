// Command-line front end: compute polynomials of a graph, verify the
// identity catalog over corpora, and apply graph operations to files.
//
// Exit codes: 0 success, 1 verification failures, 2 argument errors,
// 3 parse errors, 4 capacity exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nbpoly/classic_polys.hpp"
#include "nbpoly/complex_engine.hpp"
#include "nbpoly/graph_io.hpp"
#include "nbpoly/identities.hpp"

namespace {

using nbpoly::ArgumentError;
using nbpoly::Graph;
using nbpoly::Method;
using nbpoly::Polynomial;
using nlohmann::json;

constexpr int kExitVerificationFailure = 1;
constexpr int kExitArgument = 2;
constexpr int kExitParse = 3;
constexpr int kExitCapacity = 4;

Method parse_method(const std::string& name) {
  if (name == "oracle") return Method::Oracle;
  if (name == "fast") return Method::Fast;
  if (name == "auto") return Method::Auto;
  throw ArgumentError("unknown method '" + name + "'; valid: oracle, fast, auto");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    auto pos = text.find(',', start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

// ---- compute ----

struct ComputeOptions {
  std::string graph;
  std::string which;
  std::string method = "auto";
  std::string format = "text";
};

json polynomial_record(const std::string& graph, const std::string& name, const Polynomial& p,
                       const char* method) {
  return json{{"graph", graph},
              {"polynomial_name", name},
              {"coefficients", p.coefficient_strings()},
              {"method", method}};
}

int run_compute(const ComputeOptions& opt) {
  if (opt.format != "text" && opt.format != "json" && opt.format != "latex")
    throw ArgumentError("unknown format '" + opt.format + "'; valid: text, json, latex");
  const Method method = parse_method(opt.method);
  const nbpoly::GraphDocument doc = nbpoly::graph_from_spec(opt.graph);
  const Graph& g = doc.graph;

  for (const std::string& name : split_list(opt.which)) {
    std::optional<Polynomial> poly;
    const char* used = "fast";
    if (name == "N" || name == "Ni" || name == "Nc" || name == "Nd") {
      used = nbpoly::method_name(nbpoly::resolve_method(g, method));
      if (name == "N") poly = nbpoly::neighborhood_polynomial(g, method);
      if (name == "Ni") poly = nbpoly::independent_neighborhood_polynomial(g, method);
      if (name == "Nc") poly = nbpoly::connected_neighborhood_polynomial(g, method);
      if (name == "Nd") poly = nbpoly::disconnected_neighborhood_polynomial(g, method);
    } else if (name == "I") {
      used = method == Method::Oracle ? "oracle" : "fast";
      poly = nbpoly::independence_polynomial(g, method);
    } else if (name == "D") {
      used = method == Method::Oracle ? "oracle" : "fast";
      poly = nbpoly::domination_polynomial(g, method);
    } else if (name == "S") {
      used = method == Method::Oracle ? "oracle" : "fast";
      poly = nbpoly::subgraph_polynomial(g, method);
    } else if (name == "Q") {
      const nbpoly::BivariatePolynomial q = nbpoly::subgraph_component_polynomial(g);
      if (opt.format == "text") {
        std::cout << "Q = " << q.to_string() << "\n";
      } else if (opt.format == "latex") {
        std::cout << "Q = " << q.to_latex() << "\n";
      } else {
        json terms = json::array();
        for (const auto& [key, coeff] : q.terms())
          terms.push_back(json{{"x", key.first}, {"y", key.second}, {"coefficient", coeff.str()}});
        std::cout << json{{"graph", opt.graph},
                          {"polynomial_name", "Q"},
                          {"terms", terms},
                          {"method", "oracle"}}
                         .dump()
                  << "\n";
      }
      continue;
    } else {
      throw ArgumentError("unknown polynomial '" + name +
                          "'; valid: N, Ni, Nc, Nd, I, D, S, Q");
    }

    if (opt.format == "text")
      std::cout << name << " = " << poly->to_string() << "\n";
    else if (opt.format == "latex")
      std::cout << name << " = " << poly->to_latex() << "\n";
    else
      std::cout << polynomial_record(opt.graph, name, *poly, used).dump() << "\n";
  }
  return 0;
}

// ---- verify ----

struct VerifyOptions {
  std::string identity;
  std::string corpus_path;
  std::string random_spec;
  int pairs = 200;
  std::string method = "auto";
};

struct RandomSpec {
  int n = 0;
  int count = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
};

RandomSpec parse_random_spec(const std::string& text) {
  RandomSpec spec;
  bool have_n = false, have_count = false, have_p = false, have_seed = false;
  for (const std::string& part : split_list(text)) {
    const auto eq = part.find('=');
    if (eq == std::string::npos)
      throw ArgumentError("bad --random component '" + part + "'; expected key=value");
    const std::string key = part.substr(0, eq);
    const std::string value = part.substr(eq + 1);
    try {
      if (key == "n") {
        spec.n = std::stoi(value);
        have_n = true;
      } else if (key == "count") {
        spec.count = std::stoi(value);
        have_count = true;
      } else if (key == "p") {
        spec.p = std::stod(value);
        have_p = true;
      } else if (key == "seed") {
        spec.seed = std::stoull(value);
        have_seed = true;
      } else {
        throw ArgumentError("unknown --random key '" + key + "'; valid: n, count, p, seed");
      }
    } catch (const std::invalid_argument&) {
      throw ArgumentError("bad --random value '" + part + "'");
    } catch (const std::out_of_range&) {
      throw ArgumentError("bad --random value '" + part + "'");
    }
  }
  if (!have_n || !have_count || !have_p || !have_seed)
    throw ArgumentError("--random requires n=<>,count=<>,p=<>,seed=<>");
  return spec;
}

json report_record(const nbpoly::IdentityReport& report) {
  return json{{"identity", nbpoly::identity_kind_name(report.kind)},
              {"inputs", report.inputs},
              {"lhs", report.lhs.coefficient_strings()},
              {"rhs", report.rhs.coefficient_strings()},
              {"residual", report.residual.coefficient_strings()},
              {"verdict", nbpoly::verdict_name(report.verdict)},
              {"notes", report.notes}};
}

int run_verify(const VerifyOptions& opt) {
  if (opt.corpus_path.empty() == opt.random_spec.empty())
    throw ArgumentError("verify needs exactly one of --corpus or --random");

  nbpoly::SuiteConfig config;
  config.pair_count = opt.pairs;
  config.method = parse_method(opt.method);
  if (opt.identity == "all") {
    config.kinds = nbpoly::default_identity_kinds();
  } else {
    const auto kind = nbpoly::parse_identity_kind(opt.identity);
    if (!kind) throw ArgumentError("unknown identity '" + opt.identity + "'");
    config.kinds = {*kind};
  }

  std::vector<nbpoly::CorpusEntry> corpus;
  if (!opt.corpus_path.empty()) {
    for (nbpoly::GraphDocument& doc : nbpoly::load_graph6_corpus(opt.corpus_path))
      corpus.push_back({std::move(doc.graph), std::move(doc.source)});
  } else {
    const RandomSpec spec = parse_random_spec(opt.random_spec);
    corpus = nbpoly::random_corpus(spec.count, spec.n, {spec.p}, spec.seed);
    config.seed = spec.seed;
  }

  const nbpoly::SuiteResult result = nbpoly::run_suite(corpus, config);
  for (const nbpoly::IdentityReport& report : result.reports)
    std::cout << report_record(report).dump() << "\n";

  json by_identity = json::object();
  for (const auto& [kind, counts] : result.summary.by_kind)
    by_identity[nbpoly::identity_kind_name(kind)] = json{{"pass", counts.pass},
                                                         {"fail", counts.fail},
                                                         {"inapplicable", counts.inapplicable}};
  std::cout << json{{"summary",
                     json{{"pass", result.summary.total.pass},
                          {"fail", result.summary.total.fail},
                          {"inapplicable", result.summary.total.inapplicable},
                          {"by_identity", by_identity}}}}
                   .dump()
            << "\n";
  return result.summary.total.fail == 0 ? 0 : kExitVerificationFailure;
}

// ---- ops ----

struct OpsOptions {
  std::string op;
  std::vector<std::string> inputs;
  std::string output;
  std::string out_format = "graph6";
};

int run_ops(const OpsOptions& opt) {
  auto input = [&](std::size_t index) -> Graph {
    return nbpoly::graph_from_spec(opt.inputs.at(index)).graph;
  };
  auto expect_inputs = [&](std::size_t count) {
    if (opt.inputs.size() != count)
      throw ArgumentError("op '" + opt.op + "' expects " + std::to_string(count) +
                          " input(s), got " + std::to_string(opt.inputs.size()));
  };

  Graph result;
  if (opt.op == "complement") {
    expect_inputs(1);
    result = nbpoly::complement(input(0));
  } else if (opt.op == "union") {
    expect_inputs(2);
    result = nbpoly::disjoint_union(input(0), input(1));
  } else if (opt.op == "join") {
    expect_inputs(2);
    result = nbpoly::join(input(0), input(1));
  } else if (opt.op == "cartesian") {
    expect_inputs(2);
    result = nbpoly::cartesian_product(input(0), input(1));
  } else if (opt.op.rfind("expand:", 0) == 0) {
    expect_inputs(1);
    int r = 0;
    try {
      r = std::stoi(opt.op.substr(7));
    } catch (const std::exception&) {
      throw ArgumentError("bad expansion factor in '" + opt.op + "'");
    }
    result = nbpoly::expansion(input(0), r);
  } else {
    throw ArgumentError("unknown op '" + opt.op +
                        "'; valid: complement, union, join, cartesian, expand:r");
  }

  std::string payload;
  if (opt.out_format == "graph6")
    payload = nbpoly::write_graph6(result) + "\n";
  else if (opt.out_format == "edgelist")
    payload = nbpoly::write_edge_list(result);
  else
    throw ArgumentError("unknown output format '" + opt.out_format +
                        "'; valid: graph6, edgelist");

  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw ArgumentError("cannot write '" + opt.output + "'");
  out << payload;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"neighborhood-complex graph polynomial toolkit"};
  app.require_subcommand(1);

  ComputeOptions compute_opt;
  CLI::App* compute = app.add_subcommand("compute", "compute polynomials of one graph");
  compute->add_option("--graph", compute_opt.graph, "graph file or family:<name:args>")
      ->required();
  compute->add_option("--which", compute_opt.which, "comma list of N,Ni,Nc,Nd,I,D,S,Q")
      ->required();
  compute->add_option("--method", compute_opt.method, "oracle|fast|auto (default auto)");
  compute->add_option("--format", compute_opt.format, "text|json|latex (default text)");

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand("verify", "check identities over a corpus");
  verify->add_option("--identity", verify_opt.identity, "identity tag or 'all'")->required();
  verify->add_option("--corpus", verify_opt.corpus_path, "graph6 file, one graph per line");
  verify->add_option("--random", verify_opt.random_spec, "n=<>,count=<>,p=<>,seed=<>");
  verify->add_option("--pairs", verify_opt.pairs, "pairs per binary identity (default 200)");
  verify->add_option("--method", verify_opt.method, "oracle|fast|auto (default auto)");

  OpsOptions ops_opt;
  CLI::App* ops = app.add_subcommand("ops", "apply a graph operation to input files");
  ops->add_option("--op", ops_opt.op, "complement|union|join|cartesian|expand:r")->required();
  ops->add_option("--inputs", ops_opt.inputs, "input graph file(s)")->required();
  ops->add_option("--output", ops_opt.output, "output file")->required();
  ops->add_option("--out-format", ops_opt.out_format, "graph6|edgelist (default graph6)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitArgument;
  }

  try {
    if (compute->parsed()) return run_compute(compute_opt);
    if (verify->parsed()) return run_verify(verify_opt);
    if (ops->parsed()) return run_ops(ops_opt);
    return kExitArgument;
  } catch (const nbpoly::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const nbpoly::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const nbpoly::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgument;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgument;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitArgument;
  }
}
