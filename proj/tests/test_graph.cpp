#include <doctest.h>

#include <bit>

#include "chrombound/errors.hpp"
#include "chrombound/graph.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace chrombound;

TEST_CASE("construction and basic queries") {
  const Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(g.has_edge(1, 0));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  CHECK(Graph(0).order() == 0);
  CHECK(Graph(64).order() == 64);
}

TEST_CASE("invalid construction is rejected") {
  CHECK_THROWS_AS(Graph(65), InvalidArgument);
  CHECK_THROWS_AS(Graph(-1), InvalidArgument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InvalidArgument);
  const std::vector<VertexSet> asymmetric{0b10, 0b00};
  CHECK_THROWS_AS(Graph::from_rows(asymmetric), InvalidArgument);
  const std::vector<VertexSet> loop{0b01};
  CHECK_THROWS_AS(Graph::from_rows(loop), InvalidArgument);
}

TEST_CASE("edge edits return new graphs") {
  const Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
  const Graph k3 = add_edge(p3, 0, 2);
  CHECK(k3.size() == 3);
  CHECK(p3.size() == 2);
  CHECK(delete_edge(k3, 0, 2) == p3);
  CHECK(complement(complement(p3)) == p3);
  CHECK(complement(k3).size() == 0);
}

TEST_CASE("contraction merges into the smaller index and simplifies") {
  // Square 0-1-2-3-0: contracting edge 0-1 gives a triangle.
  const Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const Graph t = contract_edge_pair(c4, 0, 1);
  CHECK(t.order() == 3);
  CHECK(t.size() == 3);
  // The non-adjacent pair 0,2 becomes a single vertex joined to 1 and 3.
  const Graph p = c4.contracted(2, 0);
  CHECK(p.order() == 3);
  CHECK(p.size() == 2);
  CHECK(p.degree(0) == 2);
}

TEST_CASE("induced subgraphs relabel in increasing order") {
  const Graph g = Graph::from_edges(5, {{0, 4}, {2, 4}, {1, 3}});
  const Graph h = g.induced(bit(0) | bit(2) | bit(4));
  CHECK(h == Graph::from_edges(3, {{0, 2}, {1, 2}}));
  const Graph r = g.relabeled(std::vector<int>{4, 3, 2, 1, 0});
  CHECK(r.has_edge(0, 4));
  CHECK(r.has_edge(2, 0));
  CHECK(r.has_edge(3, 1));
}

TEST_CASE("components and connectivity") {
  const Graph g = Graph::from_edges(6, {{0, 3}, {1, 2}, {4, 5}, {3, 5}});
  CHECK_FALSE(is_connected(g));
  const auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == (bit(0) | bit(3) | bit(4) | bit(5)));
  CHECK(comps[1] == (bit(1) | bit(2)));
  CHECK(is_connected(Graph(1)));
  CHECK(is_connected(Graph(0)));
}

TEST_CASE("alpha, omega and chi agree with exhaustive search on every graph up to 5 vertices") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::labelled_graphs(n)) {
      CHECK(clique_number(g) == oracle::brute_omega(g));
      CHECK(independence_number(g) == oracle::brute_alpha(g));
      CHECK(chromatic_number(g) == oracle::brute_chi(g));
      CHECK(is_connected(g) == oracle::brute_connected(g));
    }
  }
}

TEST_CASE("alpha, omega and chi agree with exhaustive search on random graphs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 6 + trial % 5;
    const Graph g = support::random_graph(rng, n, 0.2 + 0.6 * (trial % 7) / 6.0);
    CHECK(clique_number(g) == oracle::brute_omega(g));
    CHECK(independence_number(g) == oracle::brute_alpha(g));
    CHECK(chromatic_number(g) == oracle::brute_chi(g));
    const VertexSet clique = maximum_clique(g);
    CHECK(is_clique(g, clique));
    CHECK(std::popcount(clique) == clique_number(g));
    const auto colouring = find_coloring(g, chromatic_number(g));
    REQUIRE(colouring.size() == static_cast<std::size_t>(n));
    for (auto [a, b] : g.edges()) CHECK(colouring[a] != colouring[b]);
  }
}

TEST_CASE("find_coloring reports impossibility with an empty vector") {
  const Graph k4 = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(find_coloring(k4, 3).empty());
  CHECK(find_coloring(k4, 4).size() == 4);
}

TEST_CASE("degrees, cut vertices and stable cut-sets") {
  // Triangle 0,1,2 with a pendant 3 on vertex 0.
  const Graph f = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  CHECK(max_degree(f) == 3);
  CHECK(min_degree(f) == 1);
  CHECK(cut_vertices(f) == bit(0));
  const auto cuts = stable_cutsets_le2(f);
  CHECK(std::find(cuts.begin(), cuts.end(), bit(0)) != cuts.end());
  CHECK_THROWS_AS(cut_vertices(Graph(2)), PreconditionError);
}

TEST_CASE("stable cut-sets match a direct search") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 6;
    const Graph g = support::random_graph(rng, n, 0.5);
    if (!is_connected(g)) continue;
    std::vector<VertexSet> expected;
    for (int a = 0; a < n; ++a) {
      for (int b = a; b < n; ++b) {
        if (a != b && g.has_edge(a, b)) continue;
        const VertexSet s = bit(a) | bit(b);
        const Graph rest = g.without_vertices(s);
        if (rest.order() > 0 && !oracle::brute_connected(rest)) expected.push_back(s);
      }
    }
    auto got = stable_cutsets_le2(g);
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
  }
}
