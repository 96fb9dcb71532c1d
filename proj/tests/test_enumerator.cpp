#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "chrombound/canonical.hpp"
#include "chrombound/enumerator.hpp"
#include "chrombound/errors.hpp"
#include "chrombound/families.hpp"
#include "chrombound/graph6.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace chrombound;

namespace {

std::set<std::string> brute_keys(const GraphStream& s) {
  std::set<std::string> out;
  for (const auto& g : s) out.insert(oracle::brute_canonical(g));
  return out;
}

bool alpha_le2_connected_pred(const Graph& g) {
  return oracle::brute_connected(g) && oracle::brute_alpha(g) <= 2;
}

}  // namespace

TEST_CASE("streams match labelled brute-force deduplication up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    std::map<std::string, Graph> classes;
    for (const auto& g : oracle::labelled_graphs(n)) classes.try_emplace(oracle::brute_canonical(g), g);
    auto expect = [&](auto keep) {
      std::set<std::string> out;
      for (const auto& [key, g] : classes) {
        if (keep(g)) out.insert(key);
      }
      return out;
    };
    const GraphStream all = all_graphs(n);
    CHECK(all.size() == classes.size());
    CHECK(brute_keys(all) == expect([](const Graph&) { return true; }));
    CHECK(brute_keys(triangle_free_graphs(n)) == expect(oracle::brute_triangle_free));
    CHECK(brute_keys(forests(n)) == expect(oracle::brute_forest));
    CHECK(brute_keys(alpha_le2_connected(n)) == expect(alpha_le2_connected_pred));
    for (int k = 2; k <= n; ++k) {
      CHECK(brute_keys(ck_alpha_le2(n, k)) == expect([k](const Graph& g) {
              return alpha_le2_connected_pred(g) && oracle::brute_chi(g) == k;
            }));
    }
  }
}

TEST_CASE("class sizes for larger orders") {
  // Counts of unlabelled graphs, triangle-free graphs and forests.
  const std::vector<std::size_t> all{1, 2, 4, 11, 34, 156, 1044, 12346};
  const std::vector<std::size_t> tf{1, 2, 3, 7, 14, 38, 107, 410, 1897};
  const std::vector<std::size_t> fo{1, 2, 3, 6, 10, 20, 37, 76, 153, 329};
  for (int n = 1; n <= 8; ++n) CHECK(all_graphs(n).size() == all[n - 1]);
  for (int n = 1; n <= 9; ++n) CHECK(triangle_free_graphs(n).size() == tf[n - 1]);
  for (int n = 1; n <= 10; ++n) CHECK(forests(n).size() == fo[n - 1]);
}

TEST_CASE("streams are canonical, sorted and free of duplicates") {
  for (int n = 1; n <= 7; ++n) {
    const GraphStream s = all_graphs(n);
    std::set<std::string> seen;
    std::string previous;
    for (const auto& g : s) {
      const std::string g6 = to_graph6(g);
      CHECK(canonical_key(g).bytes == g6);
      CHECK(g6 > previous);
      previous = g6;
      CHECK(seen.insert(g6).second);
    }
  }
}

TEST_CASE("output does not depend on the thread count") {
  EnumerationOptions one;
  EnumerationOptions four;
  four.threads = 4;
  CHECK(all_graphs(7, one) == all_graphs(7, four));
  CHECK(alpha_le2_connected(8, one) == alpha_le2_connected(8, four));
}

TEST_CASE("connected 4-chromatic graphs with alpha <= 2 on 5 vertices include F1") {
  const GraphStream s = ck_alpha_le2(5, 4);
  const Graph f1 = canonical_representative(families::f1(4).graph);
  CHECK(std::find(s.begin(), s.end(), f1) != s.end());
  for (const auto& g : s) {
    CHECK(chromatic_number(g) == 4);
    CHECK(independence_number(g) <= 2);
    CHECK(is_connected(g));
  }
}

TEST_CASE("size guards") {
  CHECK_THROWS_AS(all_graphs(10), SizeGuardError);
  CHECK_THROWS_AS(triangle_free_graphs(11), SizeGuardError);
  CHECK_THROWS_AS(all_graphs(-1), InvalidArgument);
  EnumerationOptions relaxed;
  relaxed.all_graphs_max_order = 3;
  CHECK_THROWS_AS(all_graphs(4, relaxed), SizeGuardError);
  CHECK(all_graphs(0).size() == 1);
}

TEST_CASE("sort_stream canonicalises arbitrary input") {
  std::mt19937 rng(61);
  GraphStream s;
  for (int i = 0; i < 30; ++i) s.push_back(support::random_graph(rng, 6, 0.5));
  GraphStream copy = s;
  sort_stream(copy);
  REQUIRE(copy.size() == s.size());
  std::multiset<std::string> before;
  std::multiset<std::string> after;
  for (const auto& g : s) before.insert(canonical_key(g).bytes);
  for (const auto& g : copy) {
    after.insert(to_graph6(g));
    CHECK(canonical_representative(g) == g);
  }
  CHECK(before == after);
  for (std::size_t i = 1; i < copy.size(); ++i) CHECK(to_graph6(copy[i - 1]) <= to_graph6(copy[i]));
}
