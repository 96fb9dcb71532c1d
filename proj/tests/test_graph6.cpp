#include <doctest.h>

#include <random>

#include "chrombound/errors.hpp"
#include "chrombound/graph6.hpp"
#include "graph6_reference.hpp"
#include "support.hpp"

using namespace chrombound;

TEST_CASE("encoding matches the networkx reference strings") {
  for (const auto& r : ref::graph6_references()) {
    CAPTURE(r.name);
    const Graph g = Graph::from_edges(r.n, r.edges);
    CHECK(to_graph6(g) == r.graph6);
    CHECK(from_graph6(r.graph6) == g);
  }
}

TEST_CASE("small encodings") {
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(from_graph6("?").order() == 0);
  CHECK(from_graph6(">>graph6<<Bw") == Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}));
  CHECK(from_graph6("Bw\n").size() == 3);
}

TEST_CASE("round trip on random graphs of every order") {
  std::mt19937 rng(3);
  for (int n = 0; n <= 64; ++n) {
    const Graph g = support::random_graph(rng, n, 0.3);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("malformed input raises FormatError") {
  CHECK_THROWS_AS(from_graph6(""), FormatError);
  CHECK_THROWS_AS(from_graph6("B"), FormatError);        // body missing
  CHECK_THROWS_AS(from_graph6("Bww"), FormatError);      // body too long
  CHECK_THROWS_AS(from_graph6("Bx"), FormatError);       // nonzero padding
  CHECK_THROWS_AS(from_graph6("B\x01"), FormatError);    // byte out of range
  CHECK_THROWS_AS(from_graph6("~"), FormatError);        // truncated header
  CHECK_THROWS_AS(from_graph6("~??B"), FormatError);     // 3 in long form
  CHECK_THROWS_AS(from_graph6("~?AA"), FormatError);     // above the vertex cap
}
