#include "chrombound/enumerator.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <string>
#include <unordered_set>

#include "chrombound/errors.hpp"
#include "chrombound/graph6.hpp"
#include "chrombound/parallel.hpp"

namespace chrombound {

namespace {

using Keyed = std::pair<std::string, Graph>;

void guard(int n, int limit, const char* what) {
  if (n < 0) throw InvalidArgument(std::string(what) + ": negative order");
  if (n > limit) {
    throw SizeGuardError(std::string(what) + ": order " + std::to_string(n) +
                         " exceeds the configured limit " + std::to_string(limit));
  }
}

// Cheap labelling-invariant used to pick the deletion vertex: degree, then
// the sum of neighbour degrees.
std::vector<long> vertex_invariants(const Graph& g) {
  std::vector<long> inv(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    long nsum = 0;
    for (VertexSet s = g.neighbors(v); s; s &= s - 1) nsum += g.degree(std::countr_zero(s));
    inv[v] = static_cast<long>(g.degree(v)) * 4096 + nsum;
  }
  return inv;
}

GraphStream finish(std::vector<Keyed> keyed) {
  std::sort(keyed.begin(), keyed.end(),
            [](const Keyed& a, const Keyed& b) { return a.first < b.first; });
  GraphStream out;
  out.reserve(keyed.size());
  for (auto& [key, g] : keyed) out.push_back(std::move(g));
  return out;
}

}  // namespace

GraphStream generate_hereditary(int n, const ExtensionFilter& accept, int threads) {
  if (n < 0) throw InvalidArgument("negative order");
  if (n == 0) return {Graph(0)};
  std::vector<Keyed> level{{to_graph6(Graph(1)), Graph(1)}};
  for (int order = 2; order <= n; ++order) {
    const int added = order - 1;
    std::vector<std::vector<Keyed>> children(level.size());
    parallel_for(level.size(), threads, [&](std::size_t i, int) {
      const Graph& parent = level[i].second;
      std::unordered_set<std::string> seen;
      for (VertexSet mask = 0; mask < bit(added); ++mask) {
        if (!accept(parent, mask)) continue;
        Graph child(order);
        for (auto [a, b] : parent.edges()) child.add_edge(a, b);
        for (VertexSet s = mask; s; s &= s - 1) child.add_edge(std::countr_zero(s), added);

        const std::vector<long> inv = vertex_invariants(child);
        const long top = *std::max_element(inv.begin(), inv.end());
        if (inv[added] != top) continue;

        CanonicalForm form = canonical_form(child);
        int deletion = -1;
        for (int v = 0; v < order; ++v) {
          if (inv[v] == top && (deletion < 0 || form.labeling[v] > form.labeling[deletion])) {
            deletion = v;
          }
        }
        if (form.orbits[added] != form.orbits[deletion]) continue;
        std::string key = to_graph6(form.graph);
        if (seen.insert(key).second) children[i].emplace_back(std::move(key), std::move(form.graph));
      }
    });
    level.clear();
    for (auto& batch : children) {
      for (auto& kg : batch) level.push_back(std::move(kg));
    }
  }
  return finish(std::move(level));
}

GraphStream all_graphs(int n, const EnumerationOptions& options) {
  guard(n, options.all_graphs_max_order, "all_graphs");
  return generate_hereditary(n, [](const Graph&, VertexSet) { return true; }, options.threads);
}

GraphStream triangle_free_graphs(int n, const EnumerationOptions& options) {
  guard(n, options.triangle_free_max_order, "triangle_free_graphs");
  return generate_hereditary(
      n, [](const Graph& parent, VertexSet nb) { return is_independent(parent, nb); },
      options.threads);
}

GraphStream forests(int n, const EnumerationOptions& options) {
  guard(n, options.triangle_free_max_order, "forests");
  return generate_hereditary(
      n,
      [](const Graph& parent, VertexSet nb) {
        for (VertexSet c : components(parent)) {
          if (std::popcount(c & nb) > 1) return false;
        }
        return true;
      },
      options.threads);
}

GraphStream alpha_le2_connected(int n, const EnumerationOptions& options) {
  guard(n, options.triangle_free_max_order, "alpha_le2_connected");
  const GraphStream sparse = triangle_free_graphs(n, options);
  std::vector<std::optional<Keyed>> slots(sparse.size());
  parallel_for(sparse.size(), options.threads, [&](std::size_t i, int) {
    const Graph dense = sparse[i].complement();
    if (!is_connected(dense)) return;
    Graph rep = canonical_representative(dense);
    std::string key = to_graph6(rep);
    slots[i].emplace(std::move(key), std::move(rep));
  });
  std::vector<Keyed> keyed;
  for (auto& s : slots) {
    if (s) keyed.push_back(std::move(*s));
  }
  return finish(std::move(keyed));
}

GraphStream ck_alpha_le2(int n, int k, const EnumerationOptions& options) {
  if (k < 2) throw InvalidArgument("ck_alpha_le2 needs k >= 2");
  GraphStream all = alpha_le2_connected(n, options);
  std::vector<char> keep(all.size(), 0);
  parallel_for(all.size(), options.threads,
               [&](std::size_t i, int) { keep[i] = chromatic_number(all[i]) == k; });
  GraphStream out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (keep[i]) out.push_back(std::move(all[i]));
  }
  return out;
}

Graph canonical_representative(const Graph& g) { return canonical_form(g).graph; }

void sort_stream(GraphStream& stream) {
  std::vector<Keyed> keyed;
  keyed.reserve(stream.size());
  for (auto& g : stream) {
    Graph rep = canonical_representative(g);
    std::string key = to_graph6(rep);
    keyed.emplace_back(std::move(key), std::move(rep));
  }
  stream = finish(std::move(keyed));
}

}  // namespace chrombound
