#include "chrombound/verifier.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "chrombound/canonical.hpp"
#include "chrombound/enumerator.hpp"
#include "chrombound/errors.hpp"
#include "chrombound/families.hpp"
#include "chrombound/graph6.hpp"
#include "chrombound/parallel.hpp"

namespace chrombound {

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::less:
      return "lt";
    case Ordering::equal:
      return "eq";
    case Ordering::greater:
      return "gt";
  }
  return "?";
}

bool BoundCheck::violated() const {
  if (!tail_ok) return true;
  return std::any_of(per_x.begin(), per_x.end(),
                     [](const PointComparison& c) { return c.ordering == Ordering::greater; });
}

std::vector<long> default_x_set(int k) {
  std::vector<long> xs;
  for (long x = k; x <= k + 4; ++x) xs.push_back(x);
  return xs;
}

namespace {

using Clock = std::chrono::steady_clock;

class WorkerCaches {
 public:
  explicit WorkerCaches(int threads) {
    for (int i = 0; i < std::max(1, threads); ++i) caches_.push_back(std::make_unique<MemoCache>());
  }
  MemoCache& operator[](int worker) { return *caches_[static_cast<std::size_t>(worker)]; }
  CacheStats stats() const {
    CacheStats total;
    for (const auto& c : caches_) total += c->stats();
    return total;
  }

 private:
  std::vector<std::unique_ptr<MemoCache>> caches_;
};

// Stamps timing and cache statistics when requested.
class RunScope {
 public:
  RunScope(VerifyReport& report, const VerifyOptions& options, const WorkerCaches& caches)
      : report_(report), options_(options), caches_(caches), start_(Clock::now()) {}
  ~RunScope() {
    if (!options_.stats) return;
    report_.elapsed_ms =
        std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    report_.cache = caches_.stats();
  }

 private:
  VerifyReport& report_;
  const VerifyOptions& options_;
  const WorkerCaches& caches_;
  Clock::time_point start_;
};

IntPoly bound_polynomial(int n, int k) {
  return falling_factorial(k) * pow(IntPoly::x_minus(1), n - k);
}

Ordering order_of(const BigInt& a, const BigInt& b) {
  if (a < b) return Ordering::less;
  if (a > b) return Ordering::greater;
  return Ordering::equal;
}

void require_x_at_least(const std::vector<long>& x_set, long floor) {
  if (x_set.empty()) throw InvalidArgument("empty x set");
  for (long x : x_set) {
    if (x < floor) {
      throw InvalidArgument("x = " + std::to_string(x) + " is below the required minimum " +
                            std::to_string(floor));
    }
  }
}

std::string key_of(const Graph& g) { return canonical_key(g).bytes; }

std::string set_text(VertexSet s) {
  std::string out = "{";
  for (VertexSet t = s; t; t &= t - 1) {
    if (out.size() > 1) out += ",";
    out += std::to_string(std::countr_zero(t));
  }
  return out + "}";
}

BoundCheck check_with_pi(const Graph& g, int k, int alpha, IntPoly pi,
                         const std::vector<long>& x_set) {
  BoundCheck c;
  c.graph6 = to_graph6(g);
  c.n = g.order();
  c.k = k;
  c.alpha = alpha;
  c.pi = std::move(pi);
  c.bound = bound_polynomial(c.n, k);
  c.poly_equal = c.pi == c.bound;
  const IntPoly diff = c.bound - c.pi;
  c.tail_ok = diff.is_zero() || diff.leading() > 0;
  for (long x : x_set) {
    PointComparison p;
    p.x = x;
    p.pi = c.pi.eval_at(x);
    p.bound = c.bound.eval_at(x);
    p.ordering = order_of(p.pi, p.bound);
    c.per_x.push_back(std::move(p));
  }
  return c;
}

// Runs check_bound over `graphs` in parallel; appends checks, violations and
// equality cases to the report in stream order.
std::vector<BoundCheck> run_checks(const GraphStream& graphs, int k, const std::vector<long>& x_set,
                                   const VerifyOptions& options, WorkerCaches& caches) {
  std::vector<BoundCheck> out(graphs.size());
  parallel_for(graphs.size(), options.threads, [&](std::size_t i, int w) {
    out[i] = check_bound(graphs[i], k, x_set, caches[w]);
  });
  return out;
}

void absorb(VerifyReport& report, std::vector<BoundCheck>& checks, const VerifyOptions& options) {
  for (auto& c : checks) {
    ++report.total;
    if (c.poly_equal) report.equality_cases.push_back(c.graph6);
    if (c.violated()) {
      report.violations.push_back(
          {c.graph6, c.tail_ok ? "bound exceeded at a sampled x" : "bound exceeded for large x", c});
    }
    if (options.keep_checks) report.checks.push_back(std::move(c));
  }
}

GraphStream filter_stream(const GraphStream& in, int threads,
                          const std::function<bool(const Graph&)>& keep) {
  std::vector<char> flags(in.size(), 0);
  parallel_for(in.size(), threads, [&](std::size_t i, int) { flags[i] = keep(in[i]) ? 1 : 0; });
  GraphStream out;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (flags[i]) out.push_back(in[i]);
  }
  return out;
}

// Compares the polynomial-level equality cases against the expected set;
// mismatches become violations or findings.
void compare_equality(VerifyReport& report, const std::set<std::string>& expected, bool strict) {
  const std::set<std::string> got(report.equality_cases.begin(), report.equality_cases.end());
  for (const auto& g : got) {
    if (expected.count(g)) continue;
    const std::string what = "equality case outside the expected set";
    if (strict) {
      report.violations.push_back({g, what, std::nullopt});
    } else {
      report.findings.push_back(what + ": " + g);
    }
  }
  for (const auto& e : expected) {
    if (got.count(e)) continue;
    const std::string what = "expected equality case not attained";
    if (strict) {
      report.violations.push_back({e, what, std::nullopt});
    } else {
      report.findings.push_back(what + ": " + e);
    }
  }
}

EnumerationOptions enumeration(const VerifyOptions& options) {
  EnumerationOptions e;
  e.threads = options.threads;
  return e;
}

}  // namespace

BoundCheck check_bound(const Graph& g, int k, const std::vector<long>& x_set, MemoCache& cache) {
  require_x_at_least(x_set, k);
  const int chi = chromatic_number(g);
  if (chi != k) {
    throw ClassificationError("graph " + to_graph6(g) + " has chromatic number " +
                              std::to_string(chi) + ", not " + std::to_string(k));
  }
  return check_with_pi(g, k, independence_number(g), chromatic_polynomial(g, cache), x_set);
}

VerifyReport verify_theorem_main(int n_max, int k, const std::vector<long>& x_set,
                                 const VerifyOptions& options) {
  if (k < 4) throw InvalidArgument("the main bound is stated for k >= 4");
  require_x_at_least(x_set, k);
  VerifyReport report;
  report.params = {"main", k, n_max, k, x_set, std::nullopt, std::nullopt};
  report.method =
      "isomorph-free enumeration of connected k-chromatic graphs with independence number "
      "at most 2 (complements of triangle-free graphs); exact comparison of pi(G,x) with "
      "(x)_k (x-1)^(n-k) at every sampled x and on the sign of the leading coefficient of "
      "the difference; equality classified by coefficient equality";
  WorkerCaches caches(options.threads);
  RunScope scope(report, options, caches);

  std::set<std::string> expected{key_of(families::complete(k).graph)};
  if (n_max >= k + 1) expected.insert(key_of(families::f1(k).graph));
  if (n_max >= k + 2) expected.insert(key_of(families::f2(k).graph));

  for (int n = k; n <= n_max; ++n) {
    const GraphStream graphs = ck_alpha_le2(n, k, enumeration(options));
    auto checks = run_checks(graphs, k, x_set, options, caches);

    // Degree facts and factor inequalities from the inductive step.
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const Graph& g = graphs[i];
      if (n == k) continue;
      const int delta = max_degree(g);
      if (delta < k) {
        report.violations.push_back({checks[i].graph6, "maximum degree below k", std::nullopt});
      }
      if (delta == n - 1) continue;
      for (long x : x_set) {
        const BigInt xm2 = x - 2;
        const IntPoly ffk1 = shifted_falling_factorial(k - 1);
        const BigInt lhs1 = shifted_falling_factorial(k).eval_at(x) * boost::multiprecision::pow(xm2, n - 1 - k);
        const BigInt rhs1 = ffk1.eval_at(x) * boost::multiprecision::pow(xm2, n - k);
        const BigInt lhs2 = BigInt(x - 3 + n - delta) * boost::multiprecision::pow(xm2, n - k - 1);
        const BigInt rhs2 = boost::multiprecision::pow(BigInt(x - 1), n - k);
        if (!(lhs1 < rhs1) || !(lhs2 <= rhs2)) {
          report.violations.push_back(
              {checks[i].graph6, "inductive-step factor inequality fails at x = " + std::to_string(x),
               std::nullopt});
        }
        if (n >= k + 2) {
          const BigInt lhs3 = shifted_falling_factorial(k).eval_at(x) * boost::multiprecision::pow(xm2, n - k - 2);
          const BigInt rhs3 = ffk1.eval_at(x) * boost::multiprecision::pow(xm2, n - k - 1);
          if (!(lhs3 < rhs3)) {
            report.violations.push_back({checks[i].graph6,
                                         "two-vertex-deletion factor inequality fails at x = " +
                                             std::to_string(x),
                                         std::nullopt});
          }
        }
      }
    }
    absorb(report, checks, options);
  }
  compare_equality(report, expected, false);
  return report;
}

VerifyReport verify_k2_k3(int n_max, const std::vector<long>& x_set, const VerifyOptions& options) {
  require_x_at_least(x_set, 3);
  VerifyReport report;
  report.params = {"k2k3", 2, n_max, std::nullopt, x_set, std::nullopt, std::nullopt};
  report.method =
      "all connected graphs of each order with chromatic number 2 or 3; maximum of pi(G,x) "
      "and its maximisers compared with x(x-1)^(n-1) attained by trees (k = 2) and "
      "(x-1)^n - (x-1) by the odd cycle / (x-1)^n - (x-1)^2 by the odd cycle with a pendant (k = 3)";
  WorkerCaches caches(options.threads);
  RunScope scope(report, options, caches);
  std::set<std::string> maximisers_seen;

  for (int n = 2; n <= n_max; ++n) {
    const GraphStream graphs = all_graphs(n, enumeration(options));
    std::vector<int> chi(graphs.size(), 0);
    std::vector<IntPoly> pis(graphs.size());
    parallel_for(graphs.size(), options.threads, [&](std::size_t i, int w) {
      if (!is_connected(graphs[i])) return;
      chi[i] = chromatic_number(graphs[i]);
      if (chi[i] == 2 || chi[i] == 3) pis[i] = chromatic_polynomial(graphs[i], caches[w]);
    });

    for (int k : {2, 3}) {
      if (k > n) continue;
      std::set<std::string> expected_max;
      IntPoly formula;
      if (k == 2) {
        formula = IntPoly::x() * pow(IntPoly::x_minus(1), n - 1);
        for (std::size_t i = 0; i < graphs.size(); ++i) {
          if (chi[i] == 2 && graphs[i].size() == n - 1) expected_max.insert(to_graph6(graphs[i]));
        }
      } else {
        const auto fam = n % 2 == 1 ? families::cycle(n) : families::cycle_with_pendant(n);
        formula = fam.closed_form;
        expected_max.insert(key_of(fam.graph));
      }
      for (long x : x_set) {
        BigInt best = -1;
        std::set<std::string> argmax;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
          if (chi[i] != k) continue;
          const BigInt value = pis[i].eval_at(x);
          if (value > best) {
            best = value;
            argmax.clear();
          }
          if (value == best) argmax.insert(to_graph6(graphs[i]));
        }
        const std::string where = "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                  " x=" + std::to_string(x);
        if (best != formula.eval_at(x)) {
          std::ostringstream msg;
          msg << where << ": maximum " << best << " differs from the extremal value "
              << formula.eval_at(x);
          report.violations.push_back({"", msg.str(), std::nullopt});
        }
        if (argmax != expected_max) {
          report.violations.push_back({"", where + ": maximisers differ from the extremal family",
                                       std::nullopt});
        }
        for (const auto& g : argmax) {
          if (maximisers_seen.insert(g).second) report.equality_cases.push_back(g);
        }
      }
    }
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (chi[i] != 2 && chi[i] != 3) continue;
      ++report.total;
      if (options.keep_checks) {
        report.checks.push_back(check_with_pi(graphs[i], chi[i], independence_number(graphs[i]),
                                              pis[i], x_set));
      }
    }
  }
  return report;
}

VerifyReport verify_lemma_clique(int n, int k, const std::vector<long>& x_set,
                                 const VerifyOptions& options) {
  if (k < 2 || n < k) throw InvalidArgument("lemma-clique needs n >= k >= 2");
  require_x_at_least(x_set, k);
  VerifyReport report;
  report.params = {"lemma-clique", n, n, k, x_set, std::nullopt, std::nullopt};
  report.method =
      "all connected graphs of order n with chromatic number and clique number k; bound checked "
      "exactly; equality cases compared with the k-clique-with-trees class by canonical key";
  WorkerCaches caches(options.threads);
  RunScope scope(report, options, caches);

  const GraphStream graphs = filter_stream(all_graphs(n, enumeration(options)), options.threads,
                                           [k](const Graph& g) {
                                             return is_connected(g) && clique_number(g) == k &&
                                                    chromatic_number(g) == k;
                                           });
  auto checks = run_checks(graphs, k, x_set, options, caches);
  absorb(report, checks, options);
  std::set<std::string> expected;
  for (const auto& m : families::cstar_members(n, k)) expected.insert(key_of(m.graph));
  compare_equality(report, expected, true);
  return report;
}

VerifyReport verify_universal(int n, int k, const std::vector<long>& x_set,
                              const VerifyOptions& options) {
  if (k < 2 || n < k) throw InvalidArgument("universal needs n >= k >= 2");
  require_x_at_least(x_set, k);
  VerifyReport report;
  report.params = {"universal", n, n, k, x_set, std::nullopt, std::nullopt};
  report.method =
      "all connected graphs of order n with chromatic number k and a vertex of degree n-1; "
      "bound checked exactly; equality compared with K_1 join (K_{k-1} + (n-k) K_1)";
  WorkerCaches caches(options.threads);
  RunScope scope(report, options, caches);

  const GraphStream graphs = filter_stream(all_graphs(n, enumeration(options)), options.threads,
                                           [n, k](const Graph& g) {
                                             return is_connected(g) && max_degree(g) == n - 1 &&
                                                    chromatic_number(g) == k;
                                           });
  auto checks = run_checks(graphs, k, x_set, options, caches);
  absorb(report, checks, options);
  compare_equality(report, {key_of(families::universal_extremal(n, k).graph)}, true);
  return report;
}

VerifyReport verify_prop3(int n_max, const VerifyOptions& options) {
  VerifyReport report;
  report.params = {"prop3", 1, n_max, std::nullopt, {}, std::nullopt, std::nullopt};
  report.method =
      "every connected graph with independence number exactly 2 and an independent cut-set of "
      "size at most 2: G - S has two components, both complete, one with chromatic number at "
      "least chi(G) - 1, and each vertex of S is complete to one of them";
  WorkerCaches caches(options.threads);
  RunScope scope(report, options, caches);

  for (int n = 1; n <= n_max; ++n) {
    const GraphStream graphs = alpha_le2_connected(n, enumeration(options));
    std::vector<std::vector<Violation>> found(graphs.size());
    std::vector<char> has_cut(graphs.size(), 0);
    parallel_for(graphs.size(), options.threads, [&](std::size_t i, int) {
      const Graph& g = graphs[i];
      if (independence_number(g) != 2) return;
      const auto cuts = stable_cutsets_le2(g);
      if (cuts.empty()) return;
      has_cut[i] = 1;
      const int k = chromatic_number(g);
      const std::string g6 = to_graph6(g);
      for (VertexSet s : cuts) {
        const VertexSet rest = g.vertices() & ~s;
        const Graph sub = g.induced(rest);
        const auto comps = components(sub);
        const std::string tag = " (S=" + set_text(s) + ")";
        if (comps.size() != 2) {
          found[i].push_back({g6, "(i) G - S has " + std::to_string(comps.size()) + " components" + tag,
                              std::nullopt});
          continue;
        }
        // Back to original labels.
        VertexSet side[2] = {0, 0};
        int idx = 0;
        for (VertexSet t = rest; t; t &= t - 1, ++idx) {
          for (int c = 0; c < 2; ++c) {
            if ((comps[c] >> idx) & 1U) side[c] |= bit(std::countr_zero(t));
          }
        }
        if (!is_clique(g, side[0]) || !is_clique(g, side[1])) {
          found[i].push_back({g6, "(ii) a component of G - S is not complete" + tag, std::nullopt});
        }
        const int chi_max = std::max(chromatic_number(g.induced(side[0])),
                                     chromatic_number(g.induced(side[1])));
        if (chi_max < k - 1) {
          found[i].push_back({g6, "(iii) both components have chromatic number below k-1" + tag,
                              std::nullopt});
        }
        for (VertexSet t = s; t; t &= t - 1) {
          const int u = std::countr_zero(t);
          const VertexSet nb = g.neighbors(u);
          if ((side[0] & ~nb) != 0 && (side[1] & ~nb) != 0) {
            found[i].push_back({g6,
                                "(iv) vertex " + std::to_string(u) +
                                    " of S misses a vertex on both sides" + tag,
                                std::nullopt});
          }
        }
      }
    });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      if (!has_cut[i]) continue;
      ++report.total;
      for (auto& v : found[i]) report.violations.push_back(std::move(v));
    }
  }
  return report;
}

VerifyReport verify_lemma5_structure(int k, const std::vector<long>& x_set,
                                     const VerifyOptions& options) {
  if (k < 4) throw InvalidArgument("lemma5 suite needs k >= 4");
  require_x_at_least(x_set, k);
  VerifyReport report;
  report.params = {"lemma5", 2 * k - 1, 2 * k - 1, k, x_set, std::nullopt, std::nullopt};
  report.method =
      "every graph with a stable 2-cut {u,v} between a K_{k-1} and a K_{k-2}: order 2k-1, "
      "pi(G/uv) = (x-1)_{k-1} (x)_{k-1}, pi(G+uv) x(x-1) = pi(H1) pi(H2) with H2 = K_k, "
      "pi(G+uv,x) <= (x-1)(x)_{k-1}(x-1)_{k-1}, and pi(G,x) < (x)_k (x-1)^(k-1)";
  WorkerCaches caches(options.threads);
  RunScope scope(report, options, caches);

  const families::Lemma5Family fam = families::lemma5_graphs(k);
  const IntPoly contraction_form = shifted_falling_factorial(k - 1) * falling_factorial(k - 1);
  const IntPoly addition_bound =
      IntPoly::x_minus(1) * falling_factorial(k - 1) * shifted_falling_factorial(k - 1);
  const IntPoly h1_bound = falling_factorial(k - 1) * pow(IntPoly::x_minus(1), 2);
  const std::string contraction_key = key_of(fam.contraction.graph);
  const std::string kk_key = key_of(families::complete(k).graph);

  std::vector<std::vector<Violation>> found(fam.graphs.size());
  std::vector<BoundCheck> checks(fam.graphs.size());
  parallel_for(fam.graphs.size(), options.threads, [&](std::size_t i, int w) {
    const auto& inst = fam.graphs[i];
    const Graph& g = inst.family.graph;
    MemoCache& cache = caches[w];
    const std::string g6 = to_graph6(g);
    auto fail = [&](const std::string& what) { found[i].push_back({g6, what, std::nullopt}); };
    const VertexSet s = bit(inst.u) | bit(inst.v);

    if (g.order() != 2 * k - 1) fail("order is not 2k-1");
    if (!is_connected(g)) fail("not connected");
    if (independence_number(g) != 2) fail("independence number is not 2");
    if (clique_number(g) >= k) fail("clique number is not below k");
    if (g.has_edge(inst.u, inst.v)) fail("S is not stable");
    const auto comps = components(g.without_vertices(s));
    if (comps.size() != 2) fail("G - S does not have two components");
    if (!is_clique(g, inst.big_clique) || std::popcount(inst.big_clique) != k - 1 ||
        !is_clique(g, inst.small_clique) || std::popcount(inst.small_clique) != k - 2) {
      fail("sides of the cut are not K_{k-1} and K_{k-2}");
    }
    if ((g.neighbors(inst.u) & inst.small_clique) != inst.small_clique ||
        (g.neighbors(inst.v) & inst.small_clique) != inst.small_clique) {
      fail("S is not complete to the K_{k-2}");
    }

    const Graph contracted = g.contracted(inst.u, inst.v);
    if (key_of(contracted) != contraction_key) fail("G/uv is not K_1 join (K_{k-1} + K_{k-2})");
    const IntPoly pi_contracted = chromatic_polynomial(contracted, cache);
    if (pi_contracted != contraction_form) fail("pi(G/uv) differs from (x-1)_{k-1} (x)_{k-1}");

    const Graph added = g.with_edge(inst.u, inst.v);
    const Graph h1 = added.induced(inst.big_clique | s);
    const Graph h2 = added.induced(inst.small_clique | s);
    if (key_of(h2) != kk_key) fail("H2 is not K_k");
    const IntPoly pi_added = chromatic_polynomial(added, cache);
    const IntPoly pi_h1 = chromatic_polynomial(h1, cache);
    const IntPoly pi_h2 = chromatic_polynomial(h2, cache);
    if (pi_added * falling_factorial(2) != pi_h1 * pi_h2) fail("clique gluing identity fails on uv");

    const IntPoly pi = chromatic_polynomial(g, cache);
    if (pi != pi_added + pi_contracted) fail("addition-contraction identity fails on uv");
    if (pi != inst.family.closed_form) fail("pi(G) differs from the counted closed form");

    const IntPoly final_bound = falling_factorial(k) * pow(IntPoly::x_minus(1), k - 1);
    const IntPoly intermediate = falling_factorial(k) * falling_factorial(k - 1);
    for (long x : x_set) {
      const std::string at = " at x = " + std::to_string(x);
      if (pi_h1.eval_at(x) > h1_bound.eval_at(x)) fail("pi(H1) bound fails" + at);
      if (pi_added.eval_at(x) > addition_bound.eval_at(x)) fail("pi(G+uv) bound fails" + at);
      if (pi.eval_at(x) > intermediate.eval_at(x)) fail("pi(G) exceeds (x)_k (x)_{k-1}" + at);
      if (!(intermediate.eval_at(x) < final_bound.eval_at(x))) {
        fail("(x)_k (x)_{k-1} is not below (x)_k (x-1)^(k-1)" + at);
      }
      if (!(pi.eval_at(x) < final_bound.eval_at(x))) fail("strict bound fails" + at);
    }
    checks[i] = check_with_pi(g, k, 2, pi, x_set);
  });

  for (std::size_t i = 0; i < fam.graphs.size(); ++i) {
    ++report.total;
    for (auto& v : found[i]) report.violations.push_back(std::move(v));
    if (checks[i].poly_equal) report.equality_cases.push_back(checks[i].graph6);
    if (options.keep_checks) report.checks.push_back(std::move(checks[i]));
  }
  return report;
}

TheoremTrace theorem_decomposition(const Graph& input, MemoCache& cache, std::optional<int> chosen) {
  const int n = input.order();
  if (!is_connected(input)) throw PreconditionError("decomposition needs a connected graph");
  if (independence_number(input) != 2) {
    throw PreconditionError("decomposition needs independence number 2");
  }
  const int delta = max_degree(input);
  if (delta >= n - 1) throw PreconditionError("decomposition needs maximum degree below n-1");

  const Graph g = canonical_representative(input);
  TheoremTrace trace;
  trace.graph6 = to_graph6(g);
  if (chosen) {
    if (*chosen < 0 || *chosen >= n || g.degree(*chosen) != delta) {
      throw PreconditionError("chosen vertex is not of maximum degree");
    }
    trace.u = *chosen;
  } else {
    trace.u = 0;
    while (g.degree(trace.u) != delta) ++trace.u;
  }
  const int u = trace.u;
  trace.t = n - 1 - delta;
  for (VertexSet s = g.vertices() & ~g.neighbors(u) & ~bit(u); s; s &= s - 1) {
    trace.non_neighbours.push_back(std::countr_zero(s));
  }

  Graph current = g;
  trace.h_are_joins = true;
  for (int v : trace.non_neighbours) {
    current.add_edge(u, v);
    Graph h = current.contracted(u, v);
    const Graph join = families::join_k1(g.without_vertices(bit(u) | bit(v)));
    if (canonical_key(h) != canonical_key(join)) trace.h_are_joins = false;
    trace.h.push_back(std::move(h));
  }
  trace.g_t = current;
  trace.g_t_universal = current.degree(u) == n - 1;

  trace.lhs = chromatic_polynomial(g, cache);
  trace.rhs = chromatic_polynomial(trace.g_t, cache);
  for (const auto& h : trace.h) trace.rhs += chromatic_polynomial(h, cache);
  trace.identity_holds = trace.lhs == trace.rhs;
  return trace;
}

VerifyReport verify_decomposition(int n_max, const VerifyOptions& options) {
  VerifyReport report;
  report.params = {"decomposition", 1, n_max, std::nullopt, {}, std::nullopt, std::nullopt};
  report.method =
      "every connected graph with independence number 2 and maximum degree below n-1, every "
      "maximum-degree vertex u: pi(G) = pi(G_t) + sum_i pi(H_i) exactly, H_i isomorphic to "
      "K_1 join (G - {u, v_i}), u universal in G_t";
  WorkerCaches caches(options.threads);
  RunScope scope(report, options, caches);

  for (int n = 1; n <= n_max; ++n) {
    const GraphStream graphs =
        filter_stream(alpha_le2_connected(n, enumeration(options)), options.threads,
                      [](const Graph& g) {
                        return independence_number(g) == 2 && max_degree(g) < g.order() - 1;
                      });
    std::vector<std::vector<Violation>> found(graphs.size());
    std::vector<int> pairs(graphs.size(), 0);
    parallel_for(graphs.size(), options.threads, [&](std::size_t i, int w) {
      const Graph& g = graphs[i];
      const int delta = max_degree(g);
      for (int u = 0; u < g.order(); ++u) {
        if (g.degree(u) != delta) continue;
        ++pairs[i];
        const TheoremTrace tr = theorem_decomposition(g, caches[w], u);
        const std::string tag = " (u=" + std::to_string(u) + ")";
        if (tr.t < 1) found[i].push_back({tr.graph6, "t < 1" + tag, std::nullopt});
        if (!tr.identity_holds) {
          found[i].push_back({tr.graph6, "pi(G) != pi(G_t) + sum pi(H_i)" + tag, std::nullopt});
        }
        if (!tr.h_are_joins) {
          found[i].push_back({tr.graph6, "some H_i is not K_1 join (G - {u,v_i})" + tag, std::nullopt});
        }
        if (!tr.g_t_universal) found[i].push_back({tr.graph6, "u not universal in G_t" + tag, std::nullopt});
      }
      // Brooks: neither complete nor an odd cycle, so chi <= Delta.
      const bool odd_cycle = g.size() == g.order() && delta == 2 && g.order() % 2 == 1;
      if (!odd_cycle && chromatic_number(g) > delta) {
        found[i].push_back({to_graph6(g), "chromatic number exceeds maximum degree", std::nullopt});
      }
    });
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      report.total += static_cast<std::size_t>(pairs[i]);
      for (auto& v : found[i]) report.violations.push_back(std::move(v));
    }
  }
  return report;
}

namespace {

// Portable draws: mt19937_64 output is fixed by the standard, the
// distributions are not.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(int percent) { return static_cast<int>(engine_() % 100) < percent; }

  Graph graph(int n) {
    const int percent = uniform(15, 85);
    Graph g(n);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (chance(percent)) g.add_edge(a, b);
      }
    }
    return g;
  }

 private:
  std::mt19937_64 engine_;
};

struct IdentityCase {
  enum Kind { addition_contraction, clique_gluing, join, chi_min } kind;
  Graph g;
  Graph other;  // second side of a gluing
  int u = 0;
  int v = 0;    // for gluing: r
};

std::pair<int, int> random_non_edge(Rng& rng, Graph& g) {
  const int n = g.order();
  if (is_complete(g)) {
    const int a = rng.uniform(0, n - 2);
    const int b = rng.uniform(a + 1, n - 1);
    g.remove_edge(a, b);
    return {a, b};
  }
  for (;;) {
    const int a = rng.uniform(0, n - 1);
    const int b = rng.uniform(0, n - 1);
    if (a != b && !g.has_edge(a, b)) return {std::min(a, b), std::max(a, b)};
  }
}

}  // namespace

VerifyReport verify_identities(int samples, std::uint64_t seed, const VerifyOptions& options) {
  if (samples < 1) throw InvalidArgument("samples must be positive");
  VerifyReport report;
  report.params = {"identities", 2, 8, std::nullopt, {}, seed, samples};
  report.method =
      "seeded random graphs on 2..8 vertices: pi(G) = pi(G+uv) + pi(G/uv) for a non-edge uv; "
      "pi(G1 u G2) (x)_r = pi(G1) pi(G2) when G1 and G2 meet in K_r (r = 1..3); "
      "pi(G join K_1) = x pi(G)(x-1); chi(G) = min(chi(G+uv), chi(G/uv))";
  WorkerCaches caches(options.threads);
  RunScope scope(report, options, caches);

  Rng rng(seed);
  std::vector<IdentityCase> cases;
  for (int s = 0; s < samples; ++s) {
    {
      IdentityCase c{IdentityCase::addition_contraction, rng.graph(rng.uniform(2, 8)), {}, 0, 0};
      std::tie(c.u, c.v) = random_non_edge(rng, c.g);
      cases.push_back(std::move(c));
    }
    {
      const int r = rng.uniform(1, 3);
      IdentityCase c{IdentityCase::clique_gluing, rng.graph(rng.uniform(r, r + 4)),
                     rng.graph(rng.uniform(r, r + 4)), 0, r};
      cases.push_back(std::move(c));
    }
    cases.push_back({IdentityCase::join, rng.graph(rng.uniform(1, 8)), {}, 0, 0});
    {
      IdentityCase c{IdentityCase::chi_min, rng.graph(rng.uniform(2, 8)), {}, 0, 0};
      std::tie(c.u, c.v) = random_non_edge(rng, c.g);
      cases.push_back(std::move(c));
    }
  }

  std::vector<std::optional<Violation>> found(cases.size());
  parallel_for(cases.size(), options.threads, [&](std::size_t i, int w) {
    IdentityCase c = cases[i];
    MemoCache& cache = caches[w];
    auto pi = [&](const Graph& g) { return chromatic_polynomial(g, cache); };
    switch (c.kind) {
      case IdentityCase::addition_contraction:
        if (pi(c.g) != pi(c.g.with_edge(c.u, c.v)) + pi(c.g.contracted(c.u, c.v))) {
          found[i] = Violation{to_graph6(c.g), "addition-contraction fails", std::nullopt};
        }
        break;
      case IdentityCase::clique_gluing: {
        const int r = c.v;
        for (int a = 0; a < r; ++a) {
          for (int b = a + 1; b < r; ++b) {
            c.g.add_edge(a, b);
            c.other.add_edge(a, b);
          }
        }
        const int n1 = c.g.order();
        Graph glued(n1 + c.other.order() - r);
        for (auto [a, b] : c.g.edges()) glued.add_edge(a, b);
        auto place = [&](int v) { return v < r ? v : v - r + n1; };
        for (auto [a, b] : c.other.edges()) glued.add_edge(place(a), place(b));
        if (pi(glued) * falling_factorial(r) != pi(c.g) * pi(c.other)) {
          found[i] = Violation{to_graph6(glued), "clique gluing fails", std::nullopt};
        }
        break;
      }
      case IdentityCase::join:
        if (pi(families::join_k1(c.g)) != IntPoly::x() * shift_down(pi(c.g))) {
          found[i] = Violation{to_graph6(c.g), "join with K_1 fails", std::nullopt};
        }
        break;
      case IdentityCase::chi_min:
        if (chromatic_number(c.g) != std::min(chromatic_number(c.g.with_edge(c.u, c.v)),
                                              chromatic_number(c.g.contracted(c.u, c.v)))) {
          found[i] = Violation{to_graph6(c.g), "chromatic number min rule fails", std::nullopt};
        }
        break;
    }
  });
  report.total = cases.size();
  for (auto& f : found) {
    if (f) report.violations.push_back(std::move(*f));
  }
  return report;
}

}  // namespace chrombound
