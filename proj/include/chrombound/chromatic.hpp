#pragma once

#include <atomic>
#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "chrombound/canonical.hpp"
#include "chrombound/graph.hpp"
#include "chrombound/polynomial.hpp"

namespace chrombound {

struct CacheStats {
  std::size_t entries = 0;
  std::size_t hits = 0;
  std::size_t misses = 0;
  std::size_t peak_depth = 0;

  CacheStats& operator+=(const CacheStats& o);
};

// Chromatic polynomials keyed by isomorphism class. Each key is written at
// most once; writing an existing key with a different polynomial throws
// IntegrityError. Safe for concurrent use.
class MemoCache {
 public:
  MemoCache() = default;
  MemoCache(const MemoCache&) = delete;
  MemoCache& operator=(const MemoCache&) = delete;

  std::optional<IntPoly> find(const CanonicalKey& key) const;
  void insert(const CanonicalKey& key, const IntPoly& value);
  void note_depth(std::size_t depth);
  CacheStats stats() const;

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<CanonicalKey, IntPoly> table_;
  mutable std::atomic<std::size_t> hits_{0};
  mutable std::atomic<std::size_t> misses_{0};
  std::atomic<std::size_t> peak_depth_{0};
};

struct EngineOptions {
  // When false every node is a plain deletion-contraction split on its
  // lowest edge, with x^n at edgeless graphs. Used as a cross-check.
  bool reductions = true;
};

// Exact chromatic polynomial. Reductions, tried in order at each node:
// memo hit, components, complete graph, tree, cycle, pendant vertex,
// universal vertex, clique separator of size <= 3, then an
// addition-contraction split (dense) or deletion-contraction split (sparse).
IntPoly chromatic_polynomial(const Graph& g, MemoCache& cache, const EngineOptions& options = {});
IntPoly chromatic_polynomial(const Graph& g);

// Number of proper x-colourings by exhaustive assignment. Refuses instances
// with x^n > 2^30.
BigInt count_colorings_bruteforce(const Graph& g, unsigned x);

// Smallest x >= 0 with pi(g, x) > 0.
int chromatic_number_via_pi(const Graph& g, MemoCache& cache);
int chromatic_number_via_pi(const Graph& g);

}  // namespace chrombound
