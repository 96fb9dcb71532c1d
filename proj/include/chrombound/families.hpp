#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chrombound/graph.hpp"
#include "chrombound/polynomial.hpp"

namespace chrombound::families {

// A named graph together with its chromatic polynomial derived by hand,
// independently of the engine.
struct FamilyInstance {
  Graph graph;
  std::string name;
  IntPoly closed_form;
};

FamilyInstance complete(int n);
FamilyInstance cycle(int n);
FamilyInstance path(int n);
// Odd cycle on vertices 0..n-2 with a pendant n-1 on vertex 0; n even.
FamilyInstance cycle_with_pendant(int n);
// k-clique on 0..k-1 with a pendant path of one edge (F1) or two edges
// (F2) hanging off vertex 0.
FamilyInstance f1(int k);
FamilyInstance f2(int k);
// Every isomorphism class of a k-clique with n-k tree vertices attached,
// ordered by canonical key.
std::vector<FamilyInstance> cstar_members(int n, int k);
// K_1 join (K_{k-1} + (n-k) K_1); vertex 0 is universal.
FamilyInstance universal_extremal(int n, int k);

// n = 2k-1 graphs with a stable 2-cut {u, v} separating a K_{k-1} from a
// K_{k-2}; u and v see all of the K_{k-2}, each misses part of the K_{k-1},
// and no vertex of the K_{k-1} is missed by both.
struct Lemma5Instance {
  FamilyInstance family;
  int u = 0;
  int v = 0;
  VertexSet big_clique = 0;    // the K_{k-1}
  VertexSet small_clique = 0;  // the K_{k-2}
};

struct Lemma5Family {
  int k = 0;
  std::vector<Lemma5Instance> graphs;
  // K_1 join (K_{k-1} + K_{k-2}), what every instance becomes after
  // identifying u and v.
  FamilyInstance contraction;
};

Lemma5Family lemma5_graphs(int k);

// g plus one vertex (index n) adjacent to everything.
Graph join_k1(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

// `complete:n`, `cycle:n`, `cycle1:n`, `path:n`, `f1:k`, `f2:k`,
// `cstar:n,k`, `univ:n,k`, `lemma5:k`. Throws FormatError on anything else.
std::vector<FamilyInstance> parse_family(std::string_view spec);

}  // namespace chrombound::families
