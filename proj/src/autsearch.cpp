#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "caylab/permgroup.hpp"

// Individualization-refinement search for graph automorphisms and
// isomorphisms. The refinement is the usual counting refinement: vertices are
// repeatedly re-colored by (current color, numbers of neighbors in each
// color class) until stable. New color ids are assigned in sorted key order,
// which makes cell numbering canonical: two colorings related by an
// automorphism refine to colorings related by the same automorphism, with
// identical invariant descriptors. Descriptor mismatch against the leftmost
// path therefore soundly prunes a subtree.

namespace caylab {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

struct Refiner {
  const Graph& g;
  int n;
  int words;
  std::vector<const std::uint64_t*> rows;

  explicit Refiner(const Graph& graph) : g(graph), n(graph.order()) {
    words = n == 0 ? 0 : g.neighbors(0).word_count();
    rows.resize(n);
    for (int v = 0; v < n; ++v) rows[v] = g.neighbors(v).data();
  }

  // Refines `color` (values 0..k-1) to the coarsest stable coloring; returns
  // the new color count. If indiv >= 0 that vertex is split off first.
  // Appends per-pass invariant data to desc.
  int refine(std::vector<int>& color, int k, int indiv, std::vector<std::uint64_t>& desc) const {
    bool first = true;
    std::vector<std::uint64_t> cellbits;
    std::vector<int> key;
    std::vector<int> vs(n);
    std::vector<int> next_color(n);
    int pass = 0;
    for (;;) {
      ++pass;
      const int row_len = k + 2;
      cellbits.assign(std::size_t(k) * words, 0);
      for (int v = 0; v < n; ++v)
        cellbits[std::size_t(color[v]) * words + (v >> 6)] |= std::uint64_t(1) << (v & 63);
      key.assign(std::size_t(n) * row_len, 0);
      for (int v = 0; v < n; ++v) {
        int* row = key.data() + std::size_t(v) * row_len;
        row[0] = color[v];
        row[1] = (first && v == indiv) ? 0 : 1;
        for (int c = 0; c < k; ++c) {
          const std::uint64_t* cell = cellbits.data() + std::size_t(c) * words;
          int cnt = 0;
          for (int w = 0; w < words; ++w) cnt += std::popcount(rows[v][w] & cell[w]);
          row[2 + c] = cnt;
        }
      }
      std::iota(vs.begin(), vs.end(), 0);
      std::sort(vs.begin(), vs.end(), [&](int a, int b) {
        const int* ra = key.data() + std::size_t(a) * row_len;
        const int* rb = key.data() + std::size_t(b) * row_len;
        for (int i = 0; i < row_len; ++i)
          if (ra[i] != rb[i]) return ra[i] < rb[i];
        return false;
      });
      int nk = 0;
      std::uint64_t h = mix(0, std::uint64_t(pass));
      int run = 1;
      next_color[vs[0]] = 0;
      for (int i = 1; i <= n; ++i) {
        bool boundary = i == n;
        if (!boundary) {
          const int* ra = key.data() + std::size_t(vs[i - 1]) * row_len;
          const int* rb = key.data() + std::size_t(vs[i]) * row_len;
          boundary = !std::equal(ra, ra + row_len, rb);
        }
        if (boundary) {
          const int* r = key.data() + std::size_t(vs[i - 1]) * row_len;
          for (int j = 0; j < row_len; ++j) h = mix(h, std::uint64_t(r[j]));
          h = mix(h, std::uint64_t(run));
          if (i == n) break;
          ++nk;
          run = 1;
        } else {
          ++run;
        }
        next_color[vs[i]] = nk;
      }
      desc.push_back(h);
      const int new_k = nk + 1;
      const bool changed = new_k != k;
      color = next_color;
      k = new_k;
      first = false;
      if (!changed) break;
      if (k == n) break;
    }
    return k;
  }

  // First smallest non-singleton cell; members ascending. Requires k < n.
  std::vector<int> target_cell(const std::vector<int>& color, int k) const {
    std::vector<int> size(k, 0);
    for (int v = 0; v < n; ++v) ++size[color[v]];
    int best = -1;
    for (int c = 0; c < k; ++c)
      if (size[c] > 1 && (best == -1 || size[c] < size[best])) best = c;
    std::vector<int> members;
    members.reserve(size[best]);
    for (int v = 0; v < n; ++v)
      if (color[v] == best) members.push_back(v);
    return members;
  }

  // leaf coloring -> vertex with each color
  std::vector<int> leaf_map(const std::vector<int>& color) const {
    std::vector<int> m(n);
    for (int v = 0; v < n; ++v) m[color[v]] = v;
    return m;
  }
};

// Orbit filter: union-find over the vertices, joined by the given
// permutations restricted to those fixing `prefix` pointwise.
struct OrbitFilter {
  std::vector<int> parent;

  OrbitFilter(int n, const std::vector<Perm>& gens, const std::vector<int>& prefix) {
    parent.resize(n);
    std::iota(parent.begin(), parent.end(), 0);
    for (const Perm& p : gens) {
      bool fixes = true;
      for (int b : prefix)
        if (p[b] != b) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      for (int v = 0; v < n; ++v) unite(v, p[v]);
    }
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  bool same(int a, int b) { return find(a) == find(b); }
};

struct AutSearch {
  const Graph& g;
  Refiner refiner;
  int n;
  std::vector<Perm> gens;
  std::vector<std::vector<std::uint64_t>> left_desc;
  std::vector<int> base_seq;
  std::vector<int> left_leaf;
  bool have_leaf = false;

  explicit AutSearch(const Graph& graph) : g(graph), refiner(graph), n(graph.order()) {}

  void run() {
    if (n == 0) return;
    std::vector<int> color(n, 0);
    explore(color, 1, -1, 0, true);
  }

  // Returns true when an automorphism was found somewhere in this subtree;
  // off-path nodes stop after the first one (the rest of the subtree yields
  // only products with already-known elements).
  bool explore(const std::vector<int>& parent_color, int parent_k, int indiv, int depth,
               bool leftmost) {
    std::vector<int> color = parent_color;
    std::vector<std::uint64_t> desc;
    int k = refiner.refine(color, parent_k, indiv, desc);
    if (leftmost) {
      left_desc.resize(depth + 1);
      left_desc[depth] = std::move(desc);
    } else {
      if (depth >= int(left_desc.size()) || desc != left_desc[depth]) return false;
    }
    if (k == n) {
      if (!have_leaf) {
        left_leaf = refiner.leaf_map(color);
        have_leaf = true;
        return false;
      }
      std::vector<int> leaf = refiner.leaf_map(color);
      Perm cand(n);
      for (int c = 0; c < n; ++c) cand[left_leaf[c]] = leaf[c];
      if (!is_identity(cand) && is_automorphism(g, cand)) {
        gens.push_back(std::move(cand));
        return true;
      }
      return false;
    }
    std::vector<int> cell = refiner.target_cell(color, k);
    if (leftmost) {
      int v0 = cell[0];
      if (int(base_seq.size()) <= depth) base_seq.resize(depth + 1);
      base_seq[depth] = v0;
      std::vector<int> prefix(base_seq.begin(), base_seq.begin() + depth);
      explore(color, k, v0, depth + 1, true);
      std::vector<int> tried{v0};
      for (std::size_t i = 1; i < cell.size(); ++i) {
        int v = cell[i];
        OrbitFilter orbits(n, gens, prefix);
        bool skip = false;
        for (int w : tried)
          if (orbits.same(v, w)) {
            skip = true;
            break;
          }
        if (!skip) explore(color, k, v, depth + 1, false);
        tried.push_back(v);
      }
      return false;
    }
    for (int v : cell)
      if (explore(color, k, v, depth + 1, false)) return true;
    return false;
  }
};

}  // namespace

PermGroup automorphism_generators(const Graph& g, int cap) {
  if (g.order() > cap) throw std::invalid_argument("graph exceeds automorphism degree cap");
  AutSearch search(g);
  search.run();
  return PermGroup::from_generators(g.order(), search.gens, search.base_seq);
}

namespace {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  Refiner ra;
  Refiner rb;
  int n;
  std::vector<std::vector<std::uint64_t>> desc_a;
  std::vector<int> leaf_a;
  std::vector<Perm> b_auts;
  std::optional<Perm> result;

  IsoSearch(const Graph& ga, const Graph& gb) : a(ga), b(gb), ra(ga), rb(gb), n(ga.order()) {}

  bool edges_match(const Perm& f) const {
    for (int u = 0; u < n; ++u) {
      Bitset image(n);
      const Bitset& nb = a.neighbors(u);
      for (int v = nb.find_first(); v >= 0; v = nb.find_next(v)) image.set(f[v]);
      if (!(image == b.neighbors(f[u]))) return false;
    }
    return true;
  }

  // Leftmost path of the first graph: colorings, descriptors, leaf.
  void build_reference() {
    std::vector<int> color(n, 0);
    int k = 1;
    int indiv = -1;
    int depth = 0;
    for (;;) {
      std::vector<std::uint64_t> desc;
      k = ra.refine(color, k, indiv, desc);
      desc_a.resize(depth + 1);
      desc_a[depth] = std::move(desc);
      if (k == n) {
        leaf_a = ra.leaf_map(color);
        return;
      }
      indiv = ra.target_cell(color, k)[0];
      ++depth;
    }
  }

  bool explore_b(const std::vector<int>& parent_color, int parent_k, int indiv, int depth,
                 std::vector<int>& prefix) {
    std::vector<int> color = parent_color;
    std::vector<std::uint64_t> desc;
    int k = rb.refine(color, parent_k, indiv, desc);
    if (depth >= int(desc_a.size()) || desc != desc_a[depth]) return false;
    if (k == n) {
      std::vector<int> leaf = rb.leaf_map(color);
      Perm f(n);
      for (int c = 0; c < n; ++c) f[leaf_a[c]] = leaf[c];
      if (edges_match(f)) {
        result = std::move(f);
        return true;
      }
      return false;
    }
    std::vector<int> cell = rb.target_cell(color, k);
    OrbitFilter orbits(n, b_auts, prefix);
    std::vector<int> tried;
    for (int v : cell) {
      bool skip = false;
      for (int w : tried)
        if (orbits.same(v, w)) {
          skip = true;
          break;
        }
      if (!skip) {
        prefix.push_back(v);
        bool found = explore_b(color, k, v, depth + 1, prefix);
        prefix.pop_back();
        if (found) return true;
      }
      tried.push_back(v);
    }
    return false;
  }
};

}  // namespace

std::optional<Perm> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return std::nullopt;
  if (a.order() == 0) return Perm{};
  if (a.edge_count() != b.edge_count()) return std::nullopt;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;

  IsoSearch search(a, b);
  search.build_reference();
  // automorphisms of the second graph prune its search tree; without them,
  // highly symmetric non-isomorphic pairs would be revisited per symmetry
  search.b_auts = automorphism_generators(b, b.order()).generators();
  std::vector<int> prefix;
  std::vector<int> color(a.order(), 0);
  search.explore_b(color, 1, -1, 0, prefix);
  return search.result;
}

}  // namespace caylab
