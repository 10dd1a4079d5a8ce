#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "nbpoly/graph_io.hpp"

using namespace nbpoly;

namespace {

// Reference encodings below were produced with an independent graph6
// implementation (networkx) and are frozen here.

Graph p3() { return Graph::from_edge_list(3, {{0, 1}, {1, 2}}); }
Graph c4() { return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}); }

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name, const std::string& contents)
      : path(std::filesystem::temp_directory_path() / name) {
    std::ofstream out(path, std::ios::binary);
    out << contents;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("graph6 parsing") {
  CHECK(parse_graph6("A_") == complete_graph(2));
  CHECK(parse_graph6("B?") == Graph::from_edge_list(3, {}));
  CHECK(parse_graph6("Bg") == p3());
  CHECK(parse_graph6("BW") == Graph::from_edge_list(3, {{0, 2}, {1, 2}}));
  CHECK(parse_graph6("Cl") == c4());
  CHECK(parse_graph6("C~") == complete_graph(4));
  CHECK(parse_graph6("Cs") == star_graph(4));
  CHECK(parse_graph6("C]") == expansion(complete_graph(2), 2));
  CHECK(parse_graph6("EkSg") == cartesian_product(complete_graph(2), path_graph(3)));
  CHECK(parse_graph6("@") == complete_graph(1));
  CHECK(parse_graph6("?") == Graph());
  CHECK(parse_graph6("Dhc") == cycle_graph(5));
}

TEST_CASE("graph6 writing") {
  CHECK(write_graph6(complete_graph(2)) == "A_");
  CHECK(write_graph6(p3()) == "Bg");
  CHECK(write_graph6(c4()) == "Cl");
  CHECK(write_graph6(complement(p3())) == "BO");
  CHECK(write_graph6(complete_graph(1)) == "@");
  CHECK(write_graph6(Graph()) == "?");
}

TEST_CASE("graph6 long size prefix") {
  const Graph e63 = Graph::from_edge_list(63, {});
  CHECK(write_graph6(e63) == "~??~" + std::string(326, '?'));
  CHECK(parse_graph6(write_graph6(e63)) == e63);

  const Graph e64 = Graph::from_edge_list(64, {});
  CHECK(write_graph6(e64) == "~?@?" + std::string(336, '?'));
  CHECK(parse_graph6(write_graph6(e64)) == e64);

  const Graph k64 = complete_graph(64);
  CHECK(write_graph6(k64) == "~?@?" + std::string(336, '~'));
  CHECK(parse_graph6(write_graph6(k64)) == k64);
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(1 + static_cast<int>(rng() % 40), 0.1 + 0.2 * (trial % 5), rng());
    const std::string bytes = write_graph6(g);
    CHECK(parse_graph6(bytes) == g);
    CHECK(write_graph6(parse_graph6(bytes)) == bytes);
  }
}

TEST_CASE("graph6 errors carry byte offsets") {
  SUBCASE("character outside the printable range") {
    try {
      parse_graph6("B\"?");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 1);
    }
  }
  SUBCASE("truncated data") {
    try {
      parse_graph6("C");  // order 4 needs one data byte
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 1);
    }
  }
  SUBCASE("trailing bytes") {
    try {
      parse_graph6("A_?");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 2);
    }
  }
  SUBCASE("nonzero padding") {
    // Order 2 uses one adjacency bit; 'O' = 0b010000 sets a padding bit.
    try {
      parse_graph6("AO");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 1);
    }
  }
  SUBCASE("orders beyond capacity") {
    CHECK_THROWS_AS(parse_graph6("~?@@" + std::string(350, '?')), CapacityError);
    CHECK_THROWS_AS(parse_graph6("~~????"), CapacityError);
  }
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
}

TEST_CASE("edge list format") {
  CHECK(parse_edge_list("3 2\n0 1\n1 2\n") == p3());
  CHECK(write_edge_list(c4()) == "4 4\n0 1\n0 3\n1 2\n2 3\n");
  CHECK(write_edge_list(Graph::from_edge_list(2, {})) == "2 0\n");
  CHECK(parse_edge_list("2 0\n") == Graph::from_edge_list(2, {}));
  // The parser tolerates reversed endpoints and CRLF.
  CHECK(parse_edge_list("3 2\r\n1 0\r\n2 1\r\n") == p3());

  SUBCASE("round trip") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 100; ++trial) {
      const Graph g = random_graph(1 + static_cast<int>(rng() % 20), 0.4, rng());
      const std::string text = write_edge_list(g);
      CHECK(parse_edge_list(text) == g);
      CHECK(write_edge_list(parse_edge_list(text)) == text);
    }
  }

  SUBCASE("rejects malformed input") {
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);        // missing edge line
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 1\n1 2\n"), ParseError);   // extra edge line
    CHECK_THROWS_AS(parse_edge_list("3 1\n1 1\n"), ParseError);        // self-loop
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 7\n"), ParseError);        // out of range
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 x\n"), ParseError);        // not a number
    CHECK_THROWS_AS(parse_edge_list("-1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("65 0\n"), CapacityError);
  }
}

TEST_CASE("graph documents") {
  SUBCASE("format detection") {
    const TempFile g6_file("nbpoly_test_doc.g6", "Cl\n");
    const GraphDocument from_g6 = load_graph_file(g6_file.path.string());
    CHECK(from_g6.format == GraphFormat::Graph6);
    CHECK(from_g6.graph == c4());
    CHECK(from_g6.source == "Cl");

    const TempFile el_file("nbpoly_test_doc.txt", "4 4\n0 1\n0 3\n1 2\n2 3\n");
    const GraphDocument from_el = load_graph_file(el_file.path.string());
    CHECK(from_el.format == GraphFormat::EdgeList);
    CHECK(from_el.graph == c4());
  }

  SUBCASE("family specs") {
    const GraphDocument doc = graph_from_spec("family:cycle:4");
    CHECK(doc.format == GraphFormat::Family);
    CHECK(doc.graph == c4());
    CHECK(doc.source == "cycle:4");
    CHECK_THROWS_AS(graph_from_spec("family:heptagon:7"), ArgumentError);
    CHECK_THROWS_AS(graph_from_spec("/nonexistent/path.g6"), ParseError);
  }

  SUBCASE("corpus files skip headers and blanks") {
    const TempFile corpus("nbpoly_test_corpus.g6", ">>graph6<<Bg\n\nCl\nA_\n");
    const auto docs = load_graph6_corpus(corpus.path.string());
    REQUIRE(docs.size() == 3);
    CHECK(docs[0].graph == p3());
    CHECK(docs[1].graph == c4());
    CHECK(docs[2].graph == complete_graph(2));
    CHECK(docs[0].source == "Bg");
  }

  SUBCASE("graph format names") {
    CHECK(std::string(graph_format_name(GraphFormat::Graph6)) == "graph6");
    CHECK(std::string(graph_format_name(GraphFormat::EdgeList)) == "edge-list");
    CHECK(std::string(graph_format_name(GraphFormat::Family)) == "family");
  }
}
