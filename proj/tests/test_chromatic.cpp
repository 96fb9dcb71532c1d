#include <doctest.h>

#include <random>

#include "chrombound/canonical.hpp"
#include "chrombound/chromatic.hpp"
#include "chrombound/errors.hpp"
#include "chrombound/families.hpp"
#include "chrombound/graph6.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace chrombound;

namespace {

// A degree-n polynomial is pinned down by n+1 values, so agreement at
// 0..n+1 with the brute-force count is polynomial equality.
void check_against_brute(const Graph& g, const IntPoly& p) {
  CAPTURE(to_graph6(g));
  CHECK(p.degree() == g.order());
  for (int x = 0; x <= g.order() + 1; ++x) CHECK(p.eval_at(x) == oracle::brute_count(g, x));
}

Graph random_tree(std::mt19937& rng, int n) {
  Graph g(n);
  for (int v = 1; v < n; ++v) g.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
  return g.relabeled(support::random_permutation(rng, n));
}

}  // namespace

TEST_CASE("engine matches brute-force counts on every labelled graph up to 5 vertices") {
  MemoCache cache;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : oracle::labelled_graphs(n)) check_against_brute(g, chromatic_polynomial(g, cache));
  }
}

TEST_CASE("engine matches brute-force counts on random graphs up to 8 vertices") {
  std::mt19937 rng(41);
  MemoCache cache;
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = support::random_graph(rng, 6 + trial % 3, 0.25 + 0.5 * (trial % 3) / 2.0);
    check_against_brute(g, chromatic_polynomial(g, cache));
  }
}

TEST_CASE("reductions agree with plain deletion-contraction") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = support::random_graph(rng, 3 + trial % 7, 0.5);
    MemoCache fast;
    MemoCache plain;
    CHECK(chromatic_polynomial(g, fast) == chromatic_polynomial(g, plain, EngineOptions{false}));
  }
}

TEST_CASE("closed forms") {
  CHECK(chromatic_polynomial(Graph(0)) == IntPoly{1});
  CHECK(chromatic_polynomial(Graph(3)) == pow(IntPoly::x(), 3));
  CHECK(chromatic_polynomial(families::complete(6).graph) == falling_factorial(6));
  for (int n = 3; n <= 10; ++n) {
    const IntPoly expected = pow(IntPoly::x_minus(1), n) + (n % 2 ? -IntPoly::x_minus(1) : IntPoly::x_minus(1));
    CHECK(chromatic_polynomial(families::cycle(n).graph) == expected);
  }
  std::mt19937 rng(47);
  for (int n = 1; n <= 12; ++n) {
    CHECK(chromatic_polynomial(random_tree(rng, n)) == IntPoly::x() * pow(IntPoly::x_minus(1), n - 1));
  }
}

TEST_CASE("results are labelling-invariant and the cache is reused") {
  std::mt19937 rng(53);
  MemoCache cache;
  const Graph g = support::random_graph(rng, 9, 0.5);
  const IntPoly p = chromatic_polynomial(g, cache);
  const auto before = cache.stats();
  CHECK(chromatic_polynomial(g.relabeled(support::random_permutation(rng, 9)), cache) == p);
  const auto after = cache.stats();
  CHECK(after.hits == before.hits + 1);
  CHECK(after.entries == before.entries);
  CHECK(before.peak_depth > 0);
}

TEST_CASE("the cache is write-once") {
  MemoCache cache;
  const CanonicalKey key = canonical_key(Graph(2));
  cache.insert(key, IntPoly{0, 0, 1});
  CHECK_NOTHROW(cache.insert(key, IntPoly{0, 0, 1}));
  CHECK_THROWS_AS(cache.insert(key, IntPoly{0, 1}), IntegrityError);
}

TEST_CASE("brute-force counter and its budget") {
  const Graph c5 = families::cycle(5).graph;
  CHECK(count_colorings_bruteforce(c5, 3) == 30);
  CHECK(count_colorings_bruteforce(Graph(0), 7) == 1);
  CHECK(count_colorings_bruteforce(Graph(3), 0) == 0);
  CHECK_THROWS_AS(count_colorings_bruteforce(Graph(31), 2), SizeGuardError);
  CHECK(count_colorings_bruteforce(families::complete(30).graph, 2) == 0);
}

TEST_CASE("chromatic number from the polynomial") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = support::random_graph(rng, 2 + trial % 8, 0.5);
    CHECK(chromatic_number_via_pi(g) == chromatic_number(g));
  }
}
