#include "nbpoly/graph_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "nbpoly/errors.hpp"

namespace nbpoly {

namespace {

constexpr int kG6Base = 63;
constexpr int kG6Max = 126;
constexpr std::string_view kG6Header = ">>graph6<<";

int g6_value(std::string_view line, std::size_t pos) {
  if (pos >= line.size()) throw ParseError("truncated graph6 data", line.size());
  const unsigned char c = static_cast<unsigned char>(line[pos]);
  if (c < kG6Base || c > kG6Max)
    throw ParseError("byte outside the graph6 range 63..126", pos);
  return c - kG6Base;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw ParseError("empty graph6 line", 0);

  std::size_t pos = 0;
  long long order = 0;
  if (g6_value(line, 0) < 63) {
    order = g6_value(line, 0);
    pos = 1;
  } else if (line.size() >= 2 && g6_value(line, 1) == 63) {
    // '~~' introduces the 36-bit size form; anything that large is far
    // beyond the 64-vertex capacity anyway.
    throw CapacityError("graph6 order exceeds the 64-vertex capacity");
  } else {
    order = 0;
    for (std::size_t i = 1; i <= 3; ++i) order = (order << 6) | g6_value(line, i);
    pos = 4;
  }
  if (order > kMaxVertices)
    throw CapacityError("graph6 order " + std::to_string(order) + " exceeds the " +
                        std::to_string(kMaxVertices) + "-vertex capacity");

  const int n = static_cast<int>(order);
  const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t group_count = (bit_count + 5) / 6;
  // Flag a bad byte at its own offset before complaining about length.
  for (std::size_t i = pos; i < line.size(); ++i) g6_value(line, i);
  if (line.size() != pos + group_count) {
    if (line.size() < pos + group_count)
      throw ParseError("truncated graph6 data", line.size());
    throw ParseError("trailing bytes after graph6 data", pos + group_count);
  }

  std::vector<std::pair<int, int>> edges;
  std::size_t bit_index = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit_index) {
      const std::size_t byte = pos + bit_index / 6;
      const int shift = 5 - static_cast<int>(bit_index % 6);
      if ((g6_value(line, byte) >> shift) & 1) edges.emplace_back(u, v);
    }
  }
  // Padding bits after the triangle must be zero.
  for (std::size_t pad = bit_count; pad < group_count * 6; ++pad) {
    const std::size_t byte = pos + pad / 6;
    const int shift = 5 - static_cast<int>(pad % 6);
    if ((g6_value(line, byte) >> shift) & 1)
      throw ParseError("nonzero graph6 padding bit", byte);
  }
  return Graph::from_edge_list(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kG6Base + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(kG6Base + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kG6Base + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kG6Base + (n & 63)));
  }
  int group = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kG6Base + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kG6Base + (group << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  struct Line {
    std::string content;
    std::size_t offset;
  };
  std::vector<Line> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string content(text.substr(start, end - start));
    if (!content.empty() && content.back() == '\r') content.pop_back();
    if (!content.empty()) lines.push_back({content, start});
    if (end == text.size()) break;
    start = end + 1;
  }
  if (lines.empty()) throw ParseError("empty edge list", 0);

  auto parse_two_ints = [](const Line& line, long long& a, long long& b) {
    std::istringstream in(line.content);
    std::string extra;
    if (!(in >> a >> b) || (in >> extra))
      throw ParseError("expected two integers, got '" + line.content + "'", line.offset);
  };

  long long n = 0;
  long long m = 0;
  parse_two_ints(lines[0], n, m);
  if (n < 0 || m < 0) throw ParseError("negative header value", lines[0].offset);
  if (n > kMaxVertices)
    throw CapacityError("edge list order " + std::to_string(n) + " exceeds the " +
                        std::to_string(kMaxVertices) + "-vertex capacity");
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError("edge count " + std::to_string(m) + " does not match " +
                         std::to_string(lines.size() - 1) + " edge line(s)",
                     lines.size() > 1 ? lines[1].offset : lines[0].offset);

  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    long long u = 0;
    long long v = 0;
    parse_two_ints(lines[i], u, v);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge endpoint outside 0.." + std::to_string(n - 1), lines[i].offset);
    if (u == v) throw ParseError("self-loop " + lines[i].content, lines[i].offset);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

const char* graph_format_name(GraphFormat format) {
  switch (format) {
    case GraphFormat::Graph6: return "graph6";
    case GraphFormat::EdgeList: return "edge-list";
    case GraphFormat::Family: return "family";
  }
  return "unknown";
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string first_nonempty_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return line;
  }
  return "";
}

}  // namespace

GraphDocument load_graph_file(const std::string& path) {
  const std::string text = read_file(path);
  const std::string head = first_nonempty_line(text);
  if (head.empty()) throw ParseError("no graph data in '" + path + "'", 0);
  // Digits are below the graph6 byte range, so a leading digit means an
  // edge list header.
  if (std::isdigit(static_cast<unsigned char>(head[0])))
    return {GraphFormat::EdgeList, parse_edge_list(text), text};
  return {GraphFormat::Graph6, parse_graph6(head), head};
}

GraphDocument graph_from_spec(const std::string& spec) {
  if (spec.rfind("family:", 0) == 0) {
    const std::string expr = spec.substr(7);
    return {GraphFormat::Family, make_family(expr), expr};
  }
  return load_graph_file(spec);
}

std::vector<GraphDocument> load_graph6_corpus(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<GraphDocument> docs;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(kG6Header, 0) == 0) line = line.substr(kG6Header.size());
    if (line.empty()) continue;
    docs.push_back({GraphFormat::Graph6, parse_graph6(line), line});
  }
  return docs;
}

}  // namespace nbpoly
