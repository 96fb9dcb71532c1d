#pragma once

#include <functional>
#include <vector>

#include "chrombound/canonical.hpp"
#include "chrombound/graph.hpp"

namespace chrombound {

// One canonically labelled representative per isomorphism class, sorted by
// canonical graph6 string.
using GraphStream = std::vector<Graph>;

struct EnumerationOptions {
  int threads = 1;
  int all_graphs_max_order = 9;
  int triangle_free_max_order = 10;
};

// Decides whether a new vertex adjacent to `neighbours` may extend `parent`.
// Must describe a class closed under vertex deletion.
using ExtensionFilter = std::function<bool(const Graph& parent, VertexSet neighbours)>;

// Canonical augmentation by one vertex at a time: a child is kept only when
// the added vertex lies in the automorphism orbit of the child's canonical
// deletion vertex, so each class is produced from exactly one parent.
GraphStream generate_hereditary(int n, const ExtensionFilter& accept, int threads = 1);

GraphStream all_graphs(int n, const EnumerationOptions& options = {});
GraphStream triangle_free_graphs(int n, const EnumerationOptions& options = {});
// Acyclic graphs; trees are the connected members.
GraphStream forests(int n, const EnumerationOptions& options = {});
// Complements of triangle-free graphs that are connected (alpha <= 2).
GraphStream alpha_le2_connected(int n, const EnumerationOptions& options = {});
// alpha_le2_connected(n) restricted to chromatic number k.
GraphStream ck_alpha_le2(int n, int k, const EnumerationOptions& options = {});

// Canonical representative of g's class and the stream ordering on it.
Graph canonical_representative(const Graph& g);
void sort_stream(GraphStream& stream);

}  // namespace chrombound
