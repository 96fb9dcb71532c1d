#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace chrombound {

// Bit v set <=> vertex v is a member.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet prefix_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

// Simple undirected graph on vertices 0..n-1 with one adjacency word per
// vertex. Immutable in spirit: the mutating helpers exist for construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n,
                          std::initializer_list<std::pair<int, int>> edges);
  // Rows must be symmetric and loop-free; validated.
  static Graph from_rows(std::span<const VertexSet> rows);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;
  VertexSet vertices() const { return prefix_set(order()); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  std::span<const VertexSet> rows() const { return adj_; }
  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const;
  std::vector<std::pair<int, int>> edges() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  // Identifies u and v (adjacent or not) into the smaller index; the
  // remaining vertices keep their relative order.
  Graph contracted(int u, int v) const;
  Graph complement() const;
  // Subgraph induced by `keep`, relabelled in increasing vertex order.
  Graph induced(VertexSet keep) const;
  Graph without_vertices(VertexSet drop) const { return induced(vertices() & ~drop); }
  Graph without_vertex(int v) const { return without_vertices(bit(v)); }
  // perm[old] = new.
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  std::vector<VertexSet> adj_;
};

Graph add_edge(const Graph& g, int u, int v);
Graph delete_edge(const Graph& g, int u, int v);
Graph contract_edge_pair(const Graph& g, int u, int v);
Graph complement(const Graph& g);

bool is_connected(const Graph& g);
// Components in order of their smallest vertex.
std::vector<VertexSet> components(const Graph& g);
bool is_complete(const Graph& g);
bool is_clique(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);
bool has_triangle(const Graph& g);

int clique_number(const Graph& g);
// A maximum clique; used by the colouring search for its lower bound.
VertexSet maximum_clique(const Graph& g);
int independence_number(const Graph& g);
int chromatic_number(const Graph& g);
// Proper colouring with at most k colours, or empty if none exists.
std::vector<int> find_coloring(const Graph& g, int k);

int max_degree(const Graph& g);
int min_degree(const Graph& g);
VertexSet cut_vertices(const Graph& g);
// Every independent S with |S| in {1,2} whose removal disconnects g.
std::vector<VertexSet> stable_cutsets_le2(const Graph& g);

}  // namespace chrombound
