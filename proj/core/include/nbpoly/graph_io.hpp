#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nbpoly/graph.hpp"

namespace nbpoly {

// graph6: printable encoding of the upper-triangle adjacency bits,
// column by column, packed big-endian into 6-bit groups offset by 63.
// Orders <= 62 use a one-byte size prefix, 63 and 64 the '~'-prefixed
// long form. Parse errors carry the byte offset of the defect.
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Edge list: first line "n m", then m lines "u v". The writer emits
// u < v in ascending lexicographic order; the parser accepts either
// endpoint order but rejects self-loops, out-of-range endpoints and
// edge-count mismatches.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

enum class GraphFormat { Graph6, EdgeList, Family };

const char* graph_format_name(GraphFormat format);

// A parsed graph together with where it came from.
struct GraphDocument {
  GraphFormat format;
  Graph graph;
  std::string source;  // original line, text, or family expression
};

// Reads one graph from a file, detecting graph6 vs edge list (edge list
// lines start with a digit; graph6 bytes are all >= 63).
GraphDocument load_graph_file(const std::string& path);

// "family:<expr>" builds the named family; anything else is a file path.
GraphDocument graph_from_spec(const std::string& spec);

// One graph6 graph per line; blank lines and an optional ">>graph6<<"
// header are skipped.
std::vector<GraphDocument> load_graph6_corpus(const std::string& path);

}  // namespace nbpoly
