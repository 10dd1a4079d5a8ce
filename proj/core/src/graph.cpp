#include "nbpoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

namespace nbpoly {

namespace {

std::uint64_t lowest_bit(std::uint64_t x) { return x & (~x + 1); }

// Characteristic value with vertex 0 as the most significant position;
// fixes the reported order of neighborhood lists.
std::uint64_t big_endian_value(std::uint64_t bits, int n) {
  std::uint64_t key = 0;
  for (std::uint64_t rest = bits; rest != 0; rest &= rest - 1)
    key |= std::uint64_t{1} << (n - 1 - std::countr_zero(rest));
  return key;
}

}  // namespace

Graph::Graph(int order) : n_(order), adj_(static_cast<std::size_t>(order), VertexSet(order)) {
  if (order > kMaxVertices)
    throw CapacityError("graph order " + std::to_string(order) + " exceeds the " +
                        std::to_string(kMaxVertices) + "-vertex capacity");
  if (order < 0) throw ArgumentError("negative graph order");
}

Graph Graph::from_edge_list(int order, const std::vector<std::pair<int, int>>& edges) {
  Graph g(order);
  for (const auto& [u, v] : edges) {
    if (u == v)
      throw ArgumentError("self-loop {" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (u < 0 || v < 0 || u >= order || v >= order)
      throw ArgumentError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                          "} has an endpoint outside 0.." + std::to_string(order - 1));
    if (!g.adj_[static_cast<std::size_t>(u)].contains(v)) {
      g.adj_[static_cast<std::size_t>(u)].insert(v);
      g.adj_[static_cast<std::size_t>(v)].insert(u);
      ++g.m_;
    }
  }
  return g;
}

const VertexSet& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_)
    throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of order " +
                            std::to_string(n_));
  return adj_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (std::uint64_t rest = adj_[static_cast<std::size_t>(u)].bits() >> u >> 1; rest != 0;
         rest &= rest - 1)
      out.emplace_back(u, u + 1 + std::countr_zero(rest));
  return out;
}

VertexSet open_neighborhood(const Graph& g, int v) { return g.neighbors(v); }

VertexSet closed_neighborhood_of_set(const Graph& g, const VertexSet& w) {
  if (w.universe() != g.order())
    throw ArgumentError("vertex set universe does not match graph order");
  std::uint64_t bits = w.bits();
  for (std::uint64_t rest = w.bits(); rest != 0; rest &= rest - 1)
    bits |= g.neighbor_bits(std::countr_zero(rest));
  return VertexSet::from_bits(g.order(), bits);
}

Graph induced_subgraph(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.order())
    throw ArgumentError("vertex set universe does not match graph order");
  const std::vector<int> verts = x.elements();
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (g.adjacent(verts[i], verts[j]))
        edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return Graph::from_edge_list(static_cast<int>(verts.size()), edges);
}

bool is_independent(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.order())
    throw ArgumentError("vertex set universe does not match graph order");
  for (std::uint64_t rest = x.bits(); rest != 0; rest &= rest - 1)
    if (g.neighbor_bits(std::countr_zero(rest)) & x.bits()) return false;
  return true;
}

int component_count(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.order())
    throw ArgumentError("vertex set universe does not match graph order");
  int components = 0;
  std::uint64_t rest = x.bits();
  while (rest != 0) {
    ++components;
    std::uint64_t comp = 0;
    std::uint64_t frontier = lowest_bit(rest);
    while (frontier != 0) {
      comp |= frontier;
      std::uint64_t grown = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1)
        grown |= g.neighbor_bits(std::countr_zero(f));
      frontier = grown & rest & ~comp;
    }
    rest &= ~comp;
  }
  return components;
}

bool is_connected_subset(const Graph& g, const VertexSet& x) {
  return x.empty() || component_count(g, x) == 1;
}

int isolated_count(const Graph& g) {
  int count = 0;
  for (int v = 0; v < g.order(); ++v)
    if (g.neighbors(v).empty()) ++count;
  return count;
}

std::vector<VertexSet> maximal_distinct_neighborhoods(const Graph& g) {
  const int n = g.order();
  std::vector<std::uint64_t> distinct;
  distinct.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) distinct.push_back(g.neighbor_bits(v));
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<std::uint64_t> maximal;
  for (std::uint64_t a : distinct) {
    bool dominated = false;
    for (std::uint64_t b : distinct)
      if (a != b && (a & ~b) == 0) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(a);
  }
  std::sort(maximal.begin(), maximal.end(), [n](std::uint64_t a, std::uint64_t b) {
    return big_endian_value(a, n) < big_endian_value(b, n);
  });

  std::vector<VertexSet> out;
  out.reserve(maximal.size());
  for (std::uint64_t bits : maximal) out.push_back(VertexSet::from_bits(n, bits));
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  std::vector<std::pair<int, int>> edges = g1.edges();
  for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
  return Graph::from_edge_list(n1 + g2.order(), edges);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  std::vector<std::pair<int, int>> edges = g1.edges();
  for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + n1, v + n1);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) edges.emplace_back(u, n1 + v);
  return Graph::from_edge_list(n1 + n2, edges);
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  const int n2 = g2.order();
  if (n1 > 0 && n2 > kMaxVertices / n1)
    throw CapacityError("product order " + std::to_string(n1) + "*" + std::to_string(n2) +
                        " exceeds the " + std::to_string(kMaxVertices) + "-vertex capacity");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n1; ++u)
    for (const auto& [a, b] : g2.edges()) edges.emplace_back(u * n2 + a, u * n2 + b);
  for (const auto& [a, b] : g1.edges())
    for (int v = 0; v < n2; ++v) edges.emplace_back(a * n2 + v, b * n2 + v);
  return Graph::from_edge_list(n1 * n2, edges);
}

Graph expansion(const Graph& g, int r) {
  if (r < 1) throw ArgumentError("expansion factor must be >= 1");
  const int n = g.order();
  if (n > 0 && r > kMaxVertices / n)
    throw CapacityError("expanded order " + std::to_string(n) + "*" + std::to_string(r) +
                        " exceeds the " + std::to_string(kMaxVertices) + "-vertex capacity");
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges())
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) edges.emplace_back(u * r + i, v * r + j);
  return Graph::from_edge_list(n * r, edges);
}

Graph path_graph(int n) {
  if (n < 1) throw ArgumentError("path requires n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw ArgumentError("cycle requires n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n - 1, 0);
  return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw ArgumentError("complete requires n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph star_graph(int n) {
  if (n < 2) throw ArgumentError("star requires n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw ArgumentError("complete_bipartite requires a, b >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph::from_edge_list(a + b, edges);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 1) throw ArgumentError("random requires n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("random requires p in [0,1]");
  std::mt19937_64 rng(seed);
  // Threshold compare on the top 53 bits keeps the draw identical across
  // platforms (no distribution objects).
  const std::uint64_t threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((rng() >> 11) < threshold) edges.emplace_back(u, v);
  return Graph::from_edge_list(n, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw ArgumentError("tree requires n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v);
  return Graph::from_edge_list(n, edges);
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw ArgumentError("");
    return value;
  } catch (const ArgumentError&) {
    throw ArgumentError("family " + what + ": bad integer argument '" + text + "'");
  } catch (const std::exception&) {
    throw ArgumentError("family " + what + ": bad integer argument '" + text + "'");
  }
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    double value = std::stod(text, &used);
    if (used != text.size()) throw ArgumentError("");
    return value;
  } catch (const ArgumentError&) {
    throw ArgumentError("family " + what + ": bad numeric argument '" + text + "'");
  } catch (const std::exception&) {
    throw ArgumentError("family " + what + ": bad numeric argument '" + text + "'");
  }
}

std::uint64_t parse_seed(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    unsigned long long value = std::stoull(text, &used);
    if (used != text.size()) throw ArgumentError("");
    return value;
  } catch (const std::exception&) {
    throw ArgumentError("family " + what + ": bad seed argument '" + text + "'");
  }
}

}  // namespace

Graph make_family(const std::string& expression) {
  const auto colon = expression.find(':');
  if (colon == std::string::npos)
    throw ArgumentError("family expression '" + expression + "' is missing ':'; expected name:arg[,arg]");
  const std::string name = expression.substr(0, colon);
  const std::vector<std::string> args = split(expression.substr(colon + 1), ',');

  auto expect_args = [&](std::size_t count) {
    if (args.size() != count)
      throw ArgumentError("family " + name + ": expected " + std::to_string(count) +
                          " argument(s), got " + std::to_string(args.size()));
  };

  if (name == "path") {
    expect_args(1);
    return path_graph(parse_int(args[0], name));
  }
  if (name == "cycle") {
    expect_args(1);
    return cycle_graph(parse_int(args[0], name));
  }
  if (name == "complete") {
    expect_args(1);
    return complete_graph(parse_int(args[0], name));
  }
  if (name == "star") {
    expect_args(1);
    return star_graph(parse_int(args[0], name));
  }
  if (name == "complete_bipartite") {
    expect_args(2);
    return complete_bipartite_graph(parse_int(args[0], name), parse_int(args[1], name));
  }
  if (name == "random") {
    expect_args(3);
    return random_graph(parse_int(args[0], name), parse_double(args[1], name),
                        parse_seed(args[2], name));
  }
  throw ArgumentError("unknown family '" + name +
                      "'; valid: path, cycle, complete, star, complete_bipartite, random");
}

}  // namespace nbpoly
