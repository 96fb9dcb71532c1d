#include "chrombound/families.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>

#include "chrombound/canonical.hpp"
#include "chrombound/errors.hpp"

namespace chrombound::families {

namespace {

IntPoly x_minus_one_pow(int e) { return pow(IntPoly::x_minus(1), e); }

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

std::string tag(std::string_view name, int a) { return std::string(name) + ":" + std::to_string(a); }

std::string tag(std::string_view name, int a, int b) {
  return std::string(name) + ":" + std::to_string(a) + "," + std::to_string(b);
}

Graph clique_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph grow(const Graph& g, int extra) {
  Graph out(g.order() + extra);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  return out;
}

}  // namespace

FamilyInstance complete(int n) {
  require(n >= 1, "complete graph needs n >= 1");
  return {clique_graph(n), tag("complete", n), falling_factorial(n)};
}

FamilyInstance cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  IntPoly form = x_minus_one_pow(n);
  form += n % 2 == 0 ? IntPoly::x_minus(1) : -IntPoly::x_minus(1);
  return {g, tag("cycle", n), form};
}

FamilyInstance path(int n) {
  require(n >= 1, "path needs n >= 1");
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return {g, tag("path", n), IntPoly::x() * x_minus_one_pow(n - 1)};
}

FamilyInstance cycle_with_pendant(int n) {
  require(n >= 4 && n % 2 == 0, "cycle with pendant needs even n >= 4");
  Graph g = grow(cycle(n - 1).graph, 1);
  g.add_edge(0, n - 1);
  return {g, tag("cycle1", n), x_minus_one_pow(n) - x_minus_one_pow(2)};
}

FamilyInstance f1(int k) {
  require(k >= 2, "F1 needs k >= 2");
  Graph g = grow(clique_graph(k), 1);
  g.add_edge(0, k);
  return {g, tag("f1", k), falling_factorial(k) * IntPoly::x_minus(1)};
}

FamilyInstance f2(int k) {
  require(k >= 2, "F2 needs k >= 2");
  Graph g = grow(clique_graph(k), 2);
  g.add_edge(0, k);
  g.add_edge(k, k + 1);
  return {g, tag("f2", k), falling_factorial(k) * x_minus_one_pow(2)};
}

std::vector<FamilyInstance> cstar_members(int n, int k) {
  require(k >= 2 && n >= k, "cstar needs n >= k >= 2");
  require(n <= kMaxVertices, "cstar order exceeds the vertex cap");
  // Attach one new vertex by a single edge per round, deduplicating each
  // round; every tree-on-clique graph arises from a breadth-first order.
  std::map<CanonicalKey, Graph> level{{canonical_key(clique_graph(k)), clique_graph(k)}};
  for (int order = k; order < n; ++order) {
    std::map<CanonicalKey, Graph> next;
    for (const auto& [key, g] : level) {
      for (int anchor = 0; anchor < order; ++anchor) {
        Graph child = grow(g, 1);
        child.add_edge(anchor, order);
        const CanonicalForm form = canonical_form(child);
        next.try_emplace(form.key(), form.graph);
      }
    }
    level = std::move(next);
  }
  std::vector<FamilyInstance> out;
  const IntPoly form = falling_factorial(k) * x_minus_one_pow(n - k);
  int index = 0;
  for (const auto& [key, g] : level) {
    out.push_back({g, tag("cstar", n, k) + "#" + std::to_string(index++), form});
  }
  return out;
}

FamilyInstance universal_extremal(int n, int k) {
  require(k >= 2 && n >= k, "univ needs n >= k >= 2");
  Graph rest = grow(clique_graph(k - 1), n - k);
  return {join_k1(rest).relabeled([&] {
            // Move the appended universal vertex to index 0.
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (int v = 0; v < n - 1; ++v) perm[v] = v + 1;
            perm[n - 1] = 0;
            return perm;
          }()),
          tag("univ", n, k), falling_factorial(k) * x_minus_one_pow(n - k)};
}

Lemma5Family lemma5_graphs(int k) {
  require(k >= 4, "lemma5 family needs k >= 4");
  const int n = 2 * k - 1;
  require(n <= kMaxVertices, "lemma5 order exceeds the vertex cap");
  const int big = k - 1;
  const int small = k - 2;
  const int u = big + small;
  const int v = u + 1;
  const VertexSet big_set = prefix_set(big);
  const VertexSet small_set = prefix_set(big + small) & ~big_set;

  Graph base(n);
  for (int a = 0; a < big; ++a) {
    for (int b = a + 1; b < big; ++b) base.add_edge(a, b);
  }
  for (int a = big; a < u; ++a) {
    for (int b = a + 1; b < u; ++b) base.add_edge(a, b);
    base.add_edge(a, u);
    base.add_edge(a, v);
  }

  // Counting colourings of the K_{k-1} plus u and v joined by an edge: colour
  // the clique, then u, then v. Every clique vertex missed by u is seen by v.
  // pi(G) = pi(G + uv) + pi(G / uv) with
  //   pi(G + uv) = pi(K_{k-1} + u + v) (x)_k / (x (x-1)).
  const IntPoly tail = exact_div(falling_factorial(k), falling_factorial(2));
  const IntPoly contraction_form = shifted_falling_factorial(k - 1) * falling_factorial(k - 1);

  std::map<CanonicalKey, Lemma5Instance> unique;
  for (VertexSet nu = 0; nu < big_set; ++nu) {
    for (VertexSet nv = 0; nv < big_set; ++nv) {
      if ((nu | nv) != big_set) continue;
      Graph g = base;
      for (int a = 0; a < big; ++a) {
        if ((nu >> a) & 1U) g.add_edge(a, u);
        if ((nv >> a) & 1U) g.add_edge(a, v);
      }
      const long a_deg = std::popcount(nu);
      const long b_deg = std::popcount(nv);
      const IntPoly outside = IntPoly::x_minus(k - 1) * IntPoly::x_minus(b_deg + 1);
      const IntPoly reused =
          IntPoly::constant(big - a_deg) * IntPoly::x_minus(b_deg);
      const IntPoly h1 = falling_factorial(k - 1) * (outside + reused);
      const IntPoly form = h1 * tail + contraction_form;

      CanonicalKey key = canonical_key(g);
      if (unique.count(key)) continue;
      Lemma5Instance inst;
      inst.family = {g, tag("lemma5", k), form};
      inst.u = u;
      inst.v = v;
      inst.big_clique = big_set;
      inst.small_clique = small_set;
      unique.emplace(std::move(key), std::move(inst));
    }
  }

  Lemma5Family out;
  out.k = k;
  int index = 0;
  for (auto& [key, inst] : unique) {
    inst.family.name += "#" + std::to_string(index++);
    out.graphs.push_back(std::move(inst));
  }
  Graph rest = grow(clique_graph(big), small);
  for (int a = big; a < big + small; ++a) {
    for (int b = a + 1; b < big + small; ++b) rest.add_edge(a, b);
  }
  out.contraction = {join_k1(rest), tag("lemma5-contraction", k), contraction_form};
  return out;
}

Graph join_k1(const Graph& g) {
  if (g.order() >= kMaxVertices) throw InvalidArgument("join with K1 exceeds the vertex cap");
  Graph out = grow(g, 1);
  for (int v = 0; v < g.order(); ++v) out.add_edge(v, g.order());
  return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  if (a.order() + b.order() > kMaxVertices) {
    throw InvalidArgument("disjoint union exceeds the vertex cap");
  }
  Graph out = grow(a, b.order());
  for (auto [u, v] : b.edges()) out.add_edge(u + a.order(), v + a.order());
  return out;
}

namespace {

std::vector<int> parse_ints(std::string_view text, std::string_view spec) {
  std::vector<int> out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view piece = text.substr(0, comma);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size() || piece.empty()) {
      throw FormatError("bad family parameter in '" + std::string(spec) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::vector<FamilyInstance> parse_family(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw FormatError("family specifier needs name:params, got '" + std::string(spec) + "'");
  }
  const std::string_view name = spec.substr(0, colon);
  const std::vector<int> p = parse_ints(spec.substr(colon + 1), spec);
  auto want = [&](std::size_t count) {
    if (p.size() != count) {
      throw FormatError("family '" + std::string(name) + "' takes " + std::to_string(count) +
                        " parameter(s)");
    }
  };
  if (name == "complete") return want(1), std::vector{complete(p[0])};
  if (name == "cycle") return want(1), std::vector{cycle(p[0])};
  if (name == "cycle1") return want(1), std::vector{cycle_with_pendant(p[0])};
  if (name == "path") return want(1), std::vector{path(p[0])};
  if (name == "f1") return want(1), std::vector{f1(p[0])};
  if (name == "f2") return want(1), std::vector{f2(p[0])};
  if (name == "cstar") return want(2), cstar_members(p[0], p[1]);
  if (name == "univ") return want(2), std::vector{universal_extremal(p[0], p[1])};
  if (name == "lemma5") {
    want(1);
    Lemma5Family fam = lemma5_graphs(p[0]);
    std::vector<FamilyInstance> out;
    for (auto& inst : fam.graphs) out.push_back(std::move(inst.family));
    return out;
  }
  throw FormatError("unknown family '" + std::string(name) + "'");
}

}  // namespace chrombound::families
