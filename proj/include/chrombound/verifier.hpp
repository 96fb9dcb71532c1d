#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chrombound/chromatic.hpp"
#include "chrombound/graph.hpp"
#include "chrombound/polynomial.hpp"

namespace chrombound {

enum class Ordering { less, equal, greater };

const char* to_string(Ordering o);

struct PointComparison {
  long x = 0;
  BigInt pi;
  BigInt bound;
  Ordering ordering = Ordering::equal;
};

// pi(G, x) against (x)_k (x-1)^(n-k) for one graph.
struct BoundCheck {
  std::string graph6;
  int n = 0;
  int k = 0;
  int alpha = 0;
  IntPoly pi;
  IntPoly bound;
  bool poly_equal = false;
  // bound - pi is zero or has a positive leading coefficient, so the bound
  // holds for all sufficiently large x.
  bool tail_ok = true;
  std::vector<PointComparison> per_x;

  bool violated() const;
};

struct Violation {
  std::string graph6;
  std::string what;
  std::optional<BoundCheck> check;
};

struct VerifyParams {
  std::string suite;
  int n_min = 0;
  int n_max = 0;
  std::optional<int> k;
  std::vector<long> x_set;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
};

struct VerifyReport {
  VerifyParams params;
  std::string method;
  std::size_t total = 0;
  std::vector<Violation> violations;
  std::vector<std::string> equality_cases;
  // Observations that are not violations, e.g. an equality case outside the
  // expected set for the main bound.
  std::vector<std::string> findings;
  std::vector<BoundCheck> checks;  // every check, only with keep_checks
  std::optional<double> elapsed_ms;
  std::optional<CacheStats> cache;

  bool ok() const { return violations.empty(); }
};

struct VerifyOptions {
  int threads = 1;
  bool keep_checks = false;
  // Record elapsed time and cache statistics. Off by default so reports are
  // byte-for-byte reproducible.
  bool stats = false;
};

std::vector<long> default_x_set(int k);

// Throws ClassificationError if chi(g) != k and InvalidArgument if some
// x < k.
BoundCheck check_bound(const Graph& g, int k, const std::vector<long>& x_set, MemoCache& cache);

// Every connected k-chromatic graph with alpha <= 2 on n = k..n_max
// vertices; expected equality cases K_k, F1 (n = k+1) and F2 (n = k+2).
VerifyReport verify_theorem_main(int n_max, int k, const std::vector<long>& x_set,
                                 const VerifyOptions& options = {});

// Maximum of pi(G, x) over connected 2- and 3-chromatic graphs, checked
// against the tree and odd-cycle / cycle-with-pendant extremal values.
VerifyReport verify_k2_k3(int n_max, const std::vector<long>& x_set,
                          const VerifyOptions& options = {});

// Connected graphs with chi = omega = k on n vertices; equality exactly on
// the clique-with-trees class.
VerifyReport verify_lemma_clique(int n, int k, const std::vector<long>& x_set,
                                 const VerifyOptions& options = {});

// Connected k-chromatic graphs with a universal vertex on n vertices;
// equality exactly at K_1 join (K_{k-1} + (n-k) K_1).
VerifyReport verify_universal(int n, int k, const std::vector<long>& x_set,
                              const VerifyOptions& options = {});

// Structure of connected alpha = 2 graphs around stable cut-sets of size
// at most two.
VerifyReport verify_prop3(int n_max, const VerifyOptions& options = {});

VerifyReport verify_lemma5_structure(int k, const std::vector<long>& x_set,
                                     const VerifyOptions& options = {});

// Pieces of the max-degree-vertex decomposition for one graph.
struct TheoremTrace {
  std::string graph6;  // of the canonically relabelled input
  int u = 0;
  int t = 0;
  std::vector<int> non_neighbours;  // v_1..v_t
  Graph g_t;                        // u made universal
  std::vector<Graph> h;             // H_i = G_i / u v_i
  IntPoly lhs;                      // pi(G)
  IntPoly rhs;                      // pi(G_t) + sum pi(H_i)
  bool identity_holds = false;
  bool h_are_joins = false;         // H_i ~ K_1 join (G - {u, v_i})
  bool g_t_universal = false;
};

// Requires g connected with alpha(g) = 2 and max degree < n - 1. The graph
// is relabelled canonically and u is the lowest-index vertex of maximum
// degree unless `u` is given (in canonical labels).
TheoremTrace theorem_decomposition(const Graph& g, MemoCache& cache,
                                   std::optional<int> u = std::nullopt);

// theorem_decomposition for every admissible graph with n <= n_max and
// every maximum-degree vertex.
VerifyReport verify_decomposition(int n_max, const VerifyOptions& options = {});

// Seeded random instances of addition-contraction, clique gluing, join with
// K_1 and chi(G) = min(chi(G + e), chi(G / e)).
VerifyReport verify_identities(int samples, std::uint64_t seed, const VerifyOptions& options = {});

}  // namespace chrombound
