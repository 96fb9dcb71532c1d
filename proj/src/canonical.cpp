#include "chrombound/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "chrombound/graph6.hpp"

namespace chrombound {

namespace {

using Partition = std::vector<VertexSet>;

int lowest(VertexSet s) { return std::countr_zero(s); }

bool singleton(VertexSet s) { return s != 0 && (s & (s - 1)) == 0; }

// Splits every cell by the number of neighbours each vertex has in every
// cell, repeated until stable. Sub-cells are ordered by that count vector,
// so the result depends only on structure and the incoming cell order.
void refine(const Graph& g, Partition& cells) {
  std::vector<int> members;
  std::vector<std::uint8_t> sig;
  std::vector<int> idx;
  for (;;) {
    const std::size_t width = cells.size();
    Partition next;
    next.reserve(static_cast<std::size_t>(g.order()));
    for (VertexSet cell : cells) {
      if (singleton(cell)) {
        next.push_back(cell);
        continue;
      }
      members.clear();
      for (VertexSet s = cell; s; s &= s - 1) members.push_back(lowest(s));
      sig.assign(members.size() * width, 0);
      for (std::size_t m = 0; m < members.size(); ++m) {
        const VertexSet nb = g.neighbors(members[m]);
        for (std::size_t c = 0; c < width; ++c) {
          sig[m * width + c] = static_cast<std::uint8_t>(std::popcount(nb & cells[c]));
        }
      }
      auto row = [&](int m) { return sig.begin() + static_cast<long>(m * width); };
      idx.resize(members.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return std::lexicographical_compare(row(a), row(a) + static_cast<long>(width),
                                            row(b), row(b) + static_cast<long>(width));
      });
      VertexSet part = bit(members[idx[0]]);
      for (std::size_t i = 1; i < idx.size(); ++i) {
        if (!std::equal(row(idx[i]), row(idx[i]) + static_cast<long>(width), row(idx[i - 1]))) {
          next.push_back(part);
          part = 0;
        }
        part |= bit(members[idx[i]]);
      }
      next.push_back(part);
    }
    if (next.size() == width) return;
    cells = std::move(next);
  }
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    Partition root;
    if (n_ > 0) root.push_back(g_.vertices());
    refine(g_, root);
    descend(root);
  }

  std::vector<VertexSet> best_rows;
  std::vector<int> best_perm;  // canonical index -> vertex
  std::vector<std::vector<int>> automorphisms;

 private:
  // Returns the depth at which exploration resumes; anything below that
  // depth is abandoned.
  int descend(const Partition& cells) {
    const int depth = static_cast<int>(path_.size());
    if (static_cast<int>(cells.size()) == n_) return leaf(cells);

    std::size_t target = 0;
    while (singleton(cells[target])) ++target;
    const VertexSet cell = cells[target];

    std::vector<int> explored;
    for (VertexSet s = cell; s; s &= s - 1) {
      const int v = lowest(s);
      if (!explored.empty() && equivalent_to_explored(v, cell, explored)) continue;
      explored.push_back(v);

      Partition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + static_cast<long>(target));
      child.push_back(bit(v));
      child.push_back(cell & ~bit(v));
      child.insert(child.end(), cells.begin() + static_cast<long>(target) + 1, cells.end());
      refine(g_, child);

      path_.push_back(v);
      const int resume = descend(child);
      path_.pop_back();
      if (resume < depth) return resume;
    }
    return depth;
  }

  // v is in the same orbit as an explored sibling under the automorphisms
  // found so far that fix the current path pointwise.
  bool equivalent_to_explored(int v, VertexSet cell, const std::vector<int>& explored) {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& a : automorphisms) {
      bool fixes = true;
      for (int p : path_) {
        if (a[p] != p) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      any = true;
      for (VertexSet s = cell; s; s &= s - 1) {
        const int x = lowest(s);
        const int rx = find(x);
        const int ry = find(a[x]);
        if (rx != ry) parent[rx] = ry;
      }
    }
    if (!any) return false;
    const int root = find(v);
    return std::any_of(explored.begin(), explored.end(),
                       [&](int u) { return find(u) == root; });
  }

  int leaf(const Partition& cells) {
    const int depth = static_cast<int>(path_.size());
    std::vector<int> perm(static_cast<std::size_t>(n_));
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      perm[i] = lowest(cells[i]);
      pos[perm[i]] = i;
    }
    std::vector<VertexSet> rows(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      for (VertexSet s = g_.neighbors(perm[i]); s; s &= s - 1) rows[i] |= bit(pos[lowest(s)]);
    }

    if (first_rows_.empty() && best_rows.empty()) {
      first_rows_ = rows;
      first_perm_ = perm;
      first_path_ = path_;
      best_rows = rows;
      best_perm = perm;
      best_path_ = path_;
      return depth;
    }
    if (rows == first_rows_) {
      record(first_perm_, perm);
      return common_prefix(first_path_);
    }
    if (rows == best_rows) {
      record(best_perm, perm);
      return common_prefix(best_path_);
    }
    if (rows < best_rows) {
      best_rows = std::move(rows);
      best_perm = std::move(perm);
      best_path_ = path_;
    }
    return depth;
  }

  void record(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> image(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int i = 0; i < n_; ++i) {
      image[from[i]] = to[i];
      identity = identity && from[i] == to[i];
    }
    if (!identity) automorphisms.push_back(std::move(image));
  }

  int common_prefix(const std::vector<int>& other) const {
    int i = 0;
    while (i < static_cast<int>(path_.size()) && i < static_cast<int>(other.size()) &&
           path_[i] == other[i]) {
      ++i;
    }
    return i;
  }

  const Graph& g_;
  int n_;
  std::vector<int> path_;
  std::vector<VertexSet> first_rows_;
  std::vector<int> first_perm_;
  std::vector<int> first_path_;
  std::vector<int> best_path_;
};

}  // namespace

CanonicalKey CanonicalForm::key() const { return CanonicalKey{to_graph6(graph)}; }

CanonicalForm canonical_form(const Graph& g) {
  const int n = g.order();
  CanonicalForm out;
  if (n == 0) {
    out.graph = g;
    return out;
  }
  Search search(g);
  search.run();
  out.graph = Graph::from_rows(search.best_rows);
  out.labeling.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.labeling[search.best_perm[i]] = i;
  out.generators = std::move(search.automorphisms);

  out.orbits.resize(static_cast<std::size_t>(n));
  std::iota(out.orbits.begin(), out.orbits.end(), 0);
  auto find = [&](int x) {
    while (out.orbits[x] != x) x = out.orbits[x] = out.orbits[out.orbits[x]];
    return x;
  };
  for (const auto& a : out.generators) {
    for (int v = 0; v < n; ++v) {
      const int rv = find(v);
      const int ra = find(a[v]);
      if (rv < ra) out.orbits[ra] = rv;
      if (ra < rv) out.orbits[rv] = ra;
    }
  }
  for (int v = 0; v < n; ++v) out.orbits[v] = find(v);
  return out;
}

CanonicalKey canonical_key(const Graph& g) { return canonical_form(g).key(); }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  return canonical_key(g) == canonical_key(h);
}

}  // namespace chrombound
