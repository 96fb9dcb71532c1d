#pragma once

#include <compare>
#include <string>
#include <vector>

#include "chrombound/graph.hpp"

namespace chrombound {

// Identifies an isomorphism class: the graph6 encoding of the canonical
// relabelling. Equal keys <=> isomorphic graphs.
struct CanonicalKey {
  std::string bytes;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalForm {
  Graph graph;                 // canonically relabelled copy
  std::vector<int> labeling;   // labeling[v] = canonical index of vertex v
  // Generators of the automorphism group, each as image[v].
  std::vector<std::vector<int>> generators;
  std::vector<int> orbits;     // orbits[v] = smallest vertex in v's orbit

  CanonicalKey key() const;
};

// Partition refinement with individualisation; the canonical graph is the
// lexicographically smallest adjacency matrix over the leaves of the search
// tree. Automorphisms found at leaves prune equivalent branches.
CanonicalForm canonical_form(const Graph& g);
CanonicalKey canonical_key(const Graph& g);
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace chrombound

template <>
struct std::hash<chrombound::CanonicalKey> {
  std::size_t operator()(const chrombound::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};
