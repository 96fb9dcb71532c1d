#include <doctest.h>

#include <json.hpp>
#include <set>

#include "chrombound/canonical.hpp"
#include "chrombound/errors.hpp"
#include "chrombound/families.hpp"
#include "chrombound/graph6.hpp"
#include "chrombound/report.hpp"
#include "chrombound/verifier.hpp"

using namespace chrombound;
namespace fam = chrombound::families;

TEST_CASE("default sample points") {
  CHECK(default_x_set(4) == std::vector<long>{4, 5, 6, 7, 8});
}

TEST_CASE("check_bound on the extremal graphs") {
  MemoCache cache;
  for (const auto& f : {fam::complete(4), fam::f1(4), fam::f2(4)}) {
    const BoundCheck c = check_bound(f.graph, 4, default_x_set(4), cache);
    CHECK(c.poly_equal);
    CHECK(c.tail_ok);
    CHECK_FALSE(c.violated());
    for (const auto& p : c.per_x) CHECK(p.ordering == Ordering::equal);
  }
}

TEST_CASE("check_bound on other graphs and its preconditions") {
  MemoCache cache;
  // K4 with pendants on two different clique vertices.
  const Graph g = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 5}});
  const BoundCheck c = check_bound(g, 4, {4, 5}, cache);
  CHECK(c.poly_equal);  // any clique with trees attains the bound
  // The 5-wheel is 4-chromatic with alpha = 2 and stays strictly below.
  Graph w5 = fam::join_k1(fam::cycle(5).graph);
  const BoundCheck w = check_bound(w5, 4, default_x_set(4), cache);
  CHECK_FALSE(w.poly_equal);
  CHECK_FALSE(w.violated());
  for (const auto& p : w.per_x) CHECK(p.ordering == Ordering::less);
  CHECK_THROWS_AS(check_bound(fam::cycle(5).graph, 4, {4}, cache), ClassificationError);
  CHECK_THROWS_AS(check_bound(fam::complete(4).graph, 4, {3}, cache), InvalidArgument);
  CHECK_THROWS_AS(check_bound(fam::complete(4).graph, 4, {}, cache), InvalidArgument);
}

TEST_CASE("odd cycle exceeds the bound when k = 3") {
  // pi(C7, 3) = 2^7 - 2 = 126 > (3)_3 2^4 = 96.
  MemoCache cache;
  const BoundCheck c = check_bound(fam::cycle(7).graph, 3, {3}, cache);
  REQUIRE(c.per_x.size() == 1);
  CHECK(c.per_x[0].pi == 126);
  CHECK(c.per_x[0].bound == 96);
  CHECK(c.per_x[0].ordering == Ordering::greater);
  CHECK(c.violated());
}

TEST_CASE("main suite rejects k below 4") {
  CHECK_THROWS_AS(verify_theorem_main(7, 3, {3}), InvalidArgument);
  CHECK_THROWS_AS(verify_theorem_main(7, 4, {3}), InvalidArgument);
}

TEST_CASE("main suite for k = 4 up to 7 vertices") {
  const VerifyReport r = verify_theorem_main(7, 4, default_x_set(4));
  CHECK(r.ok());
  CHECK(r.findings.empty());
  const std::set<std::string> eq(r.equality_cases.begin(), r.equality_cases.end());
  const std::set<std::string> expected{canonical_key(fam::complete(4).graph).bytes,
                                       canonical_key(fam::f1(4).graph).bytes,
                                       canonical_key(fam::f2(4).graph).bytes};
  CHECK(eq == expected);
}

TEST_CASE("decomposition traces") {
  MemoCache cache;
  const TheoremTrace c5 = theorem_decomposition(fam::cycle(5).graph, cache);
  CHECK(c5.t == 2);
  CHECK(c5.identity_holds);
  CHECK(c5.h_are_joins);
  CHECK(c5.g_t_universal);
  CHECK(c5.h.size() == 2);

  const TheoremTrace f2 = theorem_decomposition(fam::f2(4).graph, cache);
  CHECK(f2.t == 1);
  CHECK(f2.identity_holds);

  CHECK_THROWS_AS(theorem_decomposition(fam::complete(4).graph, cache), PreconditionError);
  CHECK_THROWS_AS(theorem_decomposition(fam::path(5).graph, cache), PreconditionError);
  CHECK_THROWS_AS(theorem_decomposition(fam::disjoint_union(fam::complete(2).graph, fam::complete(2).graph), cache),
                  PreconditionError);
}

TEST_CASE("structural suites on small ranges") {
  CHECK(verify_prop3(7).ok());
  CHECK(verify_decomposition(6).ok());
  CHECK(verify_lemma5_structure(4, default_x_set(4)).ok());
  CHECK(verify_universal(5, 4, default_x_set(4)).ok());
  CHECK(verify_lemma_clique(6, 4, default_x_set(4)).ok());
  CHECK(verify_k2_k3(6, {3, 4}).ok());
  CHECK_THROWS_AS(verify_k2_k3(6, {2}), InvalidArgument);
}

TEST_CASE("identities suite is reproducible from its seed") {
  VerifyOptions one;
  VerifyOptions three;
  three.threads = 3;
  const VerifyReport a = verify_identities(50, 9, one);
  const VerifyReport b = verify_identities(50, 9, three);
  CHECK(a.ok());
  CHECK(a.total == 200);
  CHECK(emit_report(a, ReportFormat::json) == emit_report(b, ReportFormat::json));
}

TEST_CASE("reports serialise deterministically") {
  VerifyOptions one;
  one.keep_checks = true;
  VerifyOptions two = one;
  two.threads = 2;
  const VerifyReport a = verify_theorem_main(6, 4, default_x_set(4), one);
  const VerifyReport b = verify_theorem_main(6, 4, default_x_set(4), two);
  CHECK(emit_report(a, ReportFormat::json) == emit_report(b, ReportFormat::json));
  CHECK(emit_report(a, ReportFormat::csv) == emit_report(b, ReportFormat::csv));

  const auto j = nlohmann::json::parse(emit_report(a, ReportFormat::json));
  CHECK(j["violations"].is_array());
  CHECK(j["violations"].empty());
  CHECK(j["totals"]["graphs"] == a.total);
  CHECK(j["elapsed_ms"].is_null());
  CHECK(j["params"]["suite"] == "main");
  CHECK(j["checks"].size() == a.total);
  CHECK(j["checks"][0]["pi"].is_array());

  const std::string csv = emit_report(a, ReportFormat::csv);
  CHECK(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')) == a.total + 1);
}

TEST_CASE("statistics appear only on request") {
  VerifyOptions stats;
  stats.stats = true;
  const VerifyReport r = verify_theorem_main(5, 4, {4}, stats);
  REQUIRE(r.elapsed_ms.has_value());
  REQUIRE(r.cache.has_value());
  const auto j = nlohmann::json::parse(emit_report(r, ReportFormat::json));
  CHECK(j["cache"]["entries"].is_number());
  CHECK(j["elapsed_ms"].is_number());
}

TEST_CASE("report format names") {
  CHECK(parse_format("json") == ReportFormat::json);
  CHECK(parse_format("csv") == ReportFormat::csv);
  CHECK_THROWS_AS(parse_format("xml"), InvalidArgument);
}

TEST_CASE("large coefficients are written as strings") {
  VerifyReport r;
  r.params.suite = "main";
  BoundCheck c;
  c.graph6 = "?";
  c.pi = IntPoly({BigInt(1) << 70});
  r.checks.push_back(c);
  const auto j = nlohmann::json::parse(emit_report(r, ReportFormat::json));
  CHECK(j["checks"][0]["pi"][0] == "1180591620717411303424");
}

TEST_CASE("appending reports widens the range") {
  VerifyReport total;
  append_report(total, verify_universal(4, 4, {4}));
  append_report(total, verify_universal(5, 4, {4}));
  CHECK(total.params.n_min == 4);
  CHECK(total.params.n_max == 5);
  CHECK(total.equality_cases.size() == 2);
}
