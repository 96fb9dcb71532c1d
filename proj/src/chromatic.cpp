#include "chrombound/chromatic.hpp"

#include <bit>
#include <mutex>

#include "chrombound/errors.hpp"

namespace chrombound {

CacheStats& CacheStats::operator+=(const CacheStats& o) {
  entries += o.entries;
  hits += o.hits;
  misses += o.misses;
  peak_depth = std::max(peak_depth, o.peak_depth);
  return *this;
}

std::optional<IntPoly> MemoCache::find(const CanonicalKey& key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) {
    misses_.fetch_add(1, std::memory_order_relaxed);
    return std::nullopt;
  }
  hits_.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

void MemoCache::insert(const CanonicalKey& key, const IntPoly& value) {
  std::unique_lock lock(mutex_);
  auto [it, fresh] = table_.try_emplace(key, value);
  if (!fresh && it->second != value) {
    throw IntegrityError("memo cache key " + key.bytes + " rewritten with a different polynomial");
  }
}

void MemoCache::note_depth(std::size_t depth) {
  std::size_t seen = peak_depth_.load(std::memory_order_relaxed);
  while (depth > seen && !peak_depth_.compare_exchange_weak(seen, depth)) {
  }
}

CacheStats MemoCache::stats() const {
  std::shared_lock lock(mutex_);
  return {table_.size(), hits_.load(), misses_.load(), peak_depth_.load()};
}

namespace {

int lowest(VertexSet s) { return std::countr_zero(s); }

class Engine {
 public:
  Engine(MemoCache& cache, const EngineOptions& options) : cache_(cache), options_(options) {}

  IntPoly compute(const Graph& g, std::size_t depth) {
    cache_.note_depth(depth);
    if (g.order() == 0) return IntPoly::constant(1);
    const CanonicalKey key = canonical_key(g);
    if (auto hit = cache_.find(key)) return *hit;
    IntPoly result = options_.reductions ? reduce(g, depth + 1) : split_lowest_edge(g, depth + 1);
    cache_.insert(key, result);
    return result;
  }

 private:
  IntPoly split_lowest_edge(const Graph& g, std::size_t depth) {
    const auto edges = g.edges();
    if (edges.empty()) return pow(IntPoly::x(), g.order());
    const auto [u, v] = edges.front();
    return compute(g.without_edge(u, v), depth) - compute(g.contracted(u, v), depth);
  }

  IntPoly reduce(const Graph& g, std::size_t depth) {
    const int n = g.order();
    const int m = g.size();

    const auto comps = components(g);
    if (comps.size() > 1) {
      IntPoly out = IntPoly::constant(1);
      for (VertexSet c : comps) out *= compute(g.induced(c), depth);
      return out;
    }
    if (m == n * (n - 1) / 2) return falling_factorial(n);
    if (m == n - 1) return IntPoly::x() * pow(IntPoly::x_minus(1), n - 1);
    if (m == n && max_degree(g) == 2) {
      const IntPoly base = pow(IntPoly::x_minus(1), n);
      return n % 2 == 0 ? base + IntPoly::x_minus(1) : base - IntPoly::x_minus(1);
    }
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) == 1) return IntPoly::x_minus(1) * compute(g.without_vertex(v), depth);
    }
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) == n - 1) {
        return IntPoly::x() * shift_down(compute(g.without_vertex(v), depth));
      }
    }
    if (auto split = clique_separator(g)) {
      const auto [sep, side] = *split;
      const IntPoly left = compute(g.induced(sep | side), depth);
      const IntPoly right = compute(g.induced(g.vertices() & ~side), depth);
      return exact_div(left * right, falling_factorial(std::popcount(sep)));
    }
    return pivot(g, depth);
  }

  // A clique S with |S| <= 3 whose removal disconnects g, together with one
  // component of g - S.
  static std::optional<std::pair<VertexSet, VertexSet>> clique_separator(const Graph& g) {
    const int n = g.order();
    const VertexSet all = g.vertices();
    auto try_cut = [&](VertexSet s) -> std::optional<std::pair<VertexSet, VertexSet>> {
      const Graph rest = g.induced(all & ~s);
      if (rest.order() == 0 || is_connected(rest)) return std::nullopt;
      // Map the first component of g - S back to original labels.
      const VertexSet comp = components(rest).front();
      VertexSet side = 0;
      int idx = 0;
      for (VertexSet t = all & ~s; t; t &= t - 1, ++idx) {
        if ((comp >> idx) & 1U) side |= bit(lowest(t));
      }
      return std::pair{s, side};
    };
    for (int a = 0; a < n; ++a) {
      if (auto r = try_cut(bit(a))) return r;
    }
    for (int a = 0; a < n; ++a) {
      for (VertexSet t = g.neighbors(a) & ~prefix_set(a + 1); t; t &= t - 1) {
        if (auto r = try_cut(bit(a) | bit(lowest(t)))) return r;
      }
    }
    for (int a = 0; a < n; ++a) {
      for (VertexSet t = g.neighbors(a) & ~prefix_set(a + 1); t; t &= t - 1) {
        const int b = lowest(t);
        for (VertexSet w = g.neighbors(a) & g.neighbors(b) & ~prefix_set(b + 1); w; w &= w - 1) {
          if (auto r = try_cut(bit(a) | bit(b) | bit(lowest(w)))) return r;
        }
      }
    }
    return std::nullopt;
  }

  IntPoly pivot(const Graph& g, std::size_t depth) {
    const int n = g.order();
    const bool dense = 4 * g.size() >= n * (n - 1);
    int best_u = -1;
    int best_v = -1;
    int best_common = -1;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v) != !dense) continue;
        const int common = std::popcount(g.neighbors(u) & g.neighbors(v));
        if (common > best_common) {
          best_common = common;
          best_u = u;
          best_v = v;
        }
      }
    }
    if (dense) {
      return compute(g.with_edge(best_u, best_v), depth) +
             compute(g.contracted(best_u, best_v), depth);
    }
    return compute(g.without_edge(best_u, best_v), depth) -
           compute(g.contracted(best_u, best_v), depth);
  }

  MemoCache& cache_;
  const EngineOptions& options_;
};

}  // namespace

IntPoly chromatic_polynomial(const Graph& g, MemoCache& cache, const EngineOptions& options) {
  return Engine(cache, options).compute(g, 0);
}

IntPoly chromatic_polynomial(const Graph& g) {
  MemoCache cache;
  return chromatic_polynomial(g, cache);
}

namespace {

std::uint64_t count_from(const Graph& g, unsigned x, std::vector<unsigned>& colour, int v) {
  if (v == g.order()) return 1;
  std::uint64_t total = 0;
  const VertexSet earlier = g.neighbors(v) & prefix_set(v);
  for (unsigned c = 0; c < x; ++c) {
    bool clash = false;
    for (VertexSet s = earlier; s; s &= s - 1) {
      if (colour[lowest(s)] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    colour[v] = c;
    total += count_from(g, x, colour, v + 1);
  }
  return total;
}

}  // namespace

BigInt count_colorings_bruteforce(const Graph& g, unsigned x) {
  constexpr std::uint64_t kBudget = std::uint64_t{1} << 30;
  if (x >= 2) {
    std::uint64_t leaves = 1;
    for (int i = 0; i < g.order(); ++i) {
      leaves *= x;
      if (leaves > kBudget) {
        throw SizeGuardError("brute-force colouring count over budget: " + std::to_string(x) +
                             "^" + std::to_string(g.order()) + " > 2^30");
      }
    }
  }
  std::vector<unsigned> colour(static_cast<std::size_t>(g.order()), 0);
  return BigInt(count_from(g, x, colour, 0));
}

int chromatic_number_via_pi(const Graph& g, MemoCache& cache) {
  const IntPoly p = chromatic_polynomial(g, cache);
  for (int x = 0;; ++x) {
    if (p.eval_at(x) > 0) return x;
  }
}

int chromatic_number_via_pi(const Graph& g) {
  MemoCache cache;
  return chromatic_number_via_pi(g, cache);
}

}  // namespace chrombound
