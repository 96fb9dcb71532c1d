#include "chrombound/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "chrombound/errors.hpp"

namespace chrombound {

namespace {

int lowest(VertexSet s) { return std::countr_zero(s); }
int count(VertexSet s) { return std::popcount(s); }

}  // namespace

Graph::Graph(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw InvalidArgument("vertex count " + std::to_string(n) +
                          " outside [0, 64]");
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edges(int n,
                        std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(),
                                                            edges.size()));
}

Graph Graph::from_rows(std::span<const VertexSet> rows) {
  Graph g(static_cast<int>(rows.size()));
  const VertexSet all = g.vertices();
  for (int v = 0; v < g.order(); ++v) {
    if ((rows[v] & ~all) != 0 || ((rows[v] >> v) & 1U)) {
      throw InvalidArgument("adjacency row " + std::to_string(v) +
                            " has a loop or out-of-range bit");
    }
    g.adj_[v] = rows[v];
  }
  for (int u = 0; u < g.order(); ++u) {
    for (VertexSet s = g.adj_[u]; s; s &= s - 1) {
      if (!g.has_edge(lowest(s), u)) {
        throw InvalidArgument("adjacency rows are not symmetric");
      }
    }
  }
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
  }
}

int Graph::size() const {
  int twice = 0;
  for (VertexSet row : adj_) twice += count(row);
  return twice / 2;
}

int Graph::degree(int v) const { return count(adj_[v]); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u) {
    for (VertexSet s = adj_[u] & ~prefix_set(u + 1); s; s &= s - 1) {
      out.emplace_back(u, lowest(s));
    }
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("loop edge at vertex " + std::to_string(u));
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("loop edge at vertex " + std::to_string(u));
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

Graph Graph::with_edge(int u, int v) const {
  Graph g = *this;
  g.add_edge(u, v);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  Graph g = *this;
  g.remove_edge(u, v);
  return g;
}

Graph Graph::contracted(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InvalidArgument("cannot contract a vertex with itself");
  if (u > v) std::swap(u, v);
  Graph merged = *this;
  const VertexSet joint = (adj_[u] | adj_[v]) & ~(bit(u) | bit(v));
  for (int w = 0; w < order(); ++w) {
    if (w == u || w == v) continue;
    if ((joint >> w) & 1U) {
      merged.adj_[w] |= bit(u);
    } else {
      merged.adj_[w] &= ~bit(u);
    }
  }
  merged.adj_[u] = joint;
  return merged.without_vertex(v);
}

Graph Graph::complement() const {
  Graph g = *this;
  const VertexSet all = vertices();
  for (int v = 0; v < order(); ++v) g.adj_[v] = all & ~adj_[v] & ~bit(v);
  return g;
}

Graph Graph::induced(VertexSet keep) const {
  keep &= vertices();
  std::vector<int> index(adj_.size(), -1);
  int next = 0;
  for (VertexSet s = keep; s; s &= s - 1) index[lowest(s)] = next++;
  Graph g(next);
  for (VertexSet s = keep; s; s &= s - 1) {
    const int u = lowest(s);
    VertexSet row = 0;
    for (VertexSet t = adj_[u] & keep; t; t &= t - 1) row |= bit(index[lowest(t)]);
    g.adj_[index[u]] = row;
  }
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != order()) {
    throw InvalidArgument("permutation length does not match vertex count");
  }
  VertexSet seen = 0;
  for (int p : perm) {
    check_vertex(p);
    seen |= bit(p);
  }
  if (seen != vertices()) throw InvalidArgument("not a permutation");
  Graph g(order());
  for (int u = 0; u < order(); ++u) {
    VertexSet row = 0;
    for (VertexSet s = adj_[u]; s; s &= s - 1) row |= bit(perm[lowest(s)]);
    g.adj_[perm[u]] = row;
  }
  return g;
}

Graph add_edge(const Graph& g, int u, int v) { return g.with_edge(u, v); }
Graph delete_edge(const Graph& g, int u, int v) { return g.without_edge(u, v); }
Graph contract_edge_pair(const Graph& g, int u, int v) { return g.contracted(u, v); }
Graph complement(const Graph& g) { return g.complement(); }

namespace {

VertexSet reach(const Graph& g, int start, VertexSet allowed) {
  VertexSet seen = bit(start);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet s = frontier; s; s &= s - 1) next |= g.neighbors(lowest(s));
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool connected_within(const Graph& g, VertexSet allowed) {
  if (allowed == 0) return true;
  return reach(g, lowest(allowed), allowed) == allowed;
}

}  // namespace

bool is_connected(const Graph& g) { return connected_within(g, g.vertices()); }

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet left = g.vertices();
  while (left) {
    const VertexSet c = reach(g, lowest(left), left);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

bool is_complete(const Graph& g) {
  const int n = g.order();
  return g.size() == n * (n - 1) / 2;
}

bool is_clique(const Graph& g, VertexSet s) {
  for (VertexSet t = s; t; t &= t - 1) {
    const int v = lowest(t);
    if ((s & ~bit(v) & ~g.neighbors(v)) != 0) return false;
  }
  return true;
}

bool is_independent(const Graph& g, VertexSet s) {
  for (VertexSet t = s; t; t &= t - 1) {
    if ((g.neighbors(lowest(t)) & s) != 0) return false;
  }
  return true;
}

bool has_triangle(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if (g.neighbors(u) & g.neighbors(v)) return true;
  }
  return false;
}

namespace {

// Branch and bound for maximum clique; greedy colour classes bound the
// clique size reachable from the remaining candidates.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : g_(g) {}

  VertexSet run() {
    expand(0, g_.vertices());
    return best_;
  }

 private:
  void expand(VertexSet current, VertexSet candidates) {
    std::vector<int> order;
    std::vector<int> colour;
    greedy_colour(candidates, order, colour);
    const int size = count(current);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + colour[i] <= best_size_) return;
      const int v = order[i];
      const VertexSet grown = current | bit(v);
      const VertexSet next = candidates & g_.neighbors(v);
      if (next == 0) {
        if (size + 1 > best_size_) {
          best_size_ = size + 1;
          best_ = grown;
        }
      } else {
        expand(grown, next);
      }
      candidates &= ~bit(v);
    }
  }

  void greedy_colour(VertexSet candidates, std::vector<int>& order,
                     std::vector<int>& colour) const {
    int c = 0;
    VertexSet uncoloured = candidates;
    while (uncoloured) {
      ++c;
      VertexSet available = uncoloured;
      while (available) {
        const int v = lowest(available);
        available &= ~bit(v) & ~g_.neighbors(v);
        uncoloured &= ~bit(v);
        order.push_back(v);
        colour.push_back(c);
      }
    }
  }

  const Graph& g_;
  VertexSet best_ = 0;
  int best_size_ = 0;
};

}  // namespace

VertexSet maximum_clique(const Graph& g) {
  if (g.order() == 0) return 0;
  return CliqueSearch(g).run();
}

int clique_number(const Graph& g) { return count(maximum_clique(g)); }

int independence_number(const Graph& g) { return clique_number(g.complement()); }

namespace {

// DSATUR-ordered backtracking for k-colourability. Colours are introduced in
// increasing order, which removes colour-permutation symmetry.
class ColouringSearch {
 public:
  ColouringSearch(const Graph& g, int k, VertexSet seed_clique)
      : g_(g), k_(k), colour_(g.order(), -1), forbidden_(g.order(), 0) {
    for (VertexSet s = seed_clique; s; s &= s - 1) assign(lowest(s), used_++);
  }

  bool run() { return extend(); }
  const std::vector<int>& colouring() const { return colour_; }

 private:
  void assign(int v, int c) {
    colour_[v] = c;
    uncoloured_ &= ~bit(v);
    for (VertexSet s = g_.neighbors(v); s; s &= s - 1) {
      forbidden_[lowest(s)] |= bit(c);
    }
  }

  bool extend() {
    if (uncoloured_ == 0) return true;
    int pick = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (VertexSet s = uncoloured_; s; s &= s - 1) {
      const int v = lowest(s);
      const int sat = count(forbidden_[v]);
      const int deg = count(g_.neighbors(v) & uncoloured_);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    if (best_sat >= k_) return false;
    const int limit = std::min(k_, used_ + 1);
    const std::vector<VertexSet> saved = forbidden_;
    const int saved_used = used_;
    for (int c = 0; c < limit; ++c) {
      if ((forbidden_[pick] >> c) & 1U) continue;
      if (c == used_) ++used_;
      assign(pick, c);
      if (extend()) return true;
      colour_[pick] = -1;
      uncoloured_ |= bit(pick);
      forbidden_ = saved;
      used_ = saved_used;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> colour_;
  std::vector<VertexSet> forbidden_;
  VertexSet uncoloured_ = g_.vertices();
  int used_ = 0;
};

}  // namespace

std::vector<int> find_coloring(const Graph& g, int k) {
  if (g.order() == 0) return {};
  if (k <= 0) return {};
  const VertexSet clique = maximum_clique(g);
  if (count(clique) > k) return {};
  ColouringSearch search(g, k, clique);
  if (!search.run()) return {};
  return search.colouring();
}

int chromatic_number(const Graph& g) {
  if (g.order() == 0) return 0;
  const VertexSet clique = maximum_clique(g);
  for (int k = count(clique);; ++k) {
    ColouringSearch search(g, k, clique);
    if (search.run()) return k;
  }
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

VertexSet cut_vertices(const Graph& g) {
  if (!is_connected(g)) {
    throw PreconditionError("cut_vertices requires a connected graph");
  }
  VertexSet out = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (!connected_within(g, g.vertices() & ~bit(v))) out |= bit(v);
  }
  return out;
}

std::vector<VertexSet> stable_cutsets_le2(const Graph& g) {
  if (!is_connected(g)) {
    throw PreconditionError("stable_cutsets_le2 requires a connected graph");
  }
  std::vector<VertexSet> out;
  const VertexSet all = g.vertices();
  for (int u = 0; u < g.order(); ++u) {
    if (!connected_within(g, all & ~bit(u))) out.push_back(bit(u));
  }
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v)) continue;
      const VertexSet s = bit(u) | bit(v);
      if (!connected_within(g, all & ~s)) out.push_back(s);
    }
  }
  return out;
}

}  // namespace chrombound
