#include "caylab/cayley.hpp"

#include <stdexcept>
#include <string>

namespace caylab {

ConnectionSet make_connection_set(const AbelianGroup& g, const std::vector<Elem>& elems) {
  Bitset members(int(g.order()));
  for (Elem x : elems) {
    if (x < 0 || x >= g.order()) throw std::invalid_argument("element out of range");
    members.set(x);
  }
  return connection_set_from_bitset(g, members);
}

ConnectionSet connection_set_from_bitset(const AbelianGroup& g, const Bitset& members) {
  if (members.test(0)) throw std::invalid_argument("identity in connection set");
  for (int x = members.find_first(); x >= 0; x = members.find_next(x)) {
    Elem inv = g.neg(x);
    if (!members.test(inv))
      throw std::invalid_argument("connection set not inverse-closed: missing -" +
                                  std::to_string(x) + " = " + std::to_string(inv));
  }
  return ConnectionSet{&g, members, members.to_vector()};
}

long long Graph::edge_count() const {
  long long deg_sum = 0;
  for (int v = 0; v < n_; ++v) deg_sum += degree(v);
  return deg_sum / 2;
}

Graph build_cayley(const AbelianGroup& g, const ConnectionSet& s) {
  Graph graph(int(g.order()));
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem v : s.elems) graph.add_edge(x, g.add(x, v));
  return graph;
}

DoubleCover double_cover(const AbelianGroup& h, const ConnectionSet& s) {
  std::vector<long long> factors = h.factors();
  factors.push_back(2);
  AbelianGroup g(factors);
  const Elem a = Elem(h.order());  // (0, 1)
  std::vector<Elem> sa_elems;
  sa_elems.reserve(s.elems.size());
  for (Elem x : s.elems) sa_elems.push_back(x + Elem(h.order()));
  ConnectionSet sa = make_connection_set(g, sa_elems);
  Graph graph = build_cayley(g, sa);
  return DoubleCover{std::move(g), a, std::move(sa), std::move(graph)};
}

Graph tensor_with_k2(const Graph& g) {
  const int n = g.order();
  Graph out(2 * n);
  for (int u = 0; u < n; ++u) {
    const Bitset& nb = g.neighbors(u);
    for (int v = nb.find_first(); v >= 0; v = nb.find_next(v)) out.add_edge(u, v + n);
  }
  return out;
}

GraphProps graph_properties(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  bool bipartite = true;
  int seen = 0;
  int components = 0;
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    ++components;
    color[s] = 0;
    ++seen;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      const Bitset& nb = g.neighbors(u);
      for (int v = nb.find_first(); v >= 0; v = nb.find_next(v)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          ++seen;
          stack.push_back(v);
        } else if (color[v] == color[u]) {
          bipartite = false;
        }
      }
    }
  }
  return GraphProps{components == 1 && seen == n, bipartite};
}

std::optional<std::pair<int, int>> find_twins(const Graph& g) {
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (g.neighbors(u) == g.neighbors(v)) return std::make_pair(u, v);
  return std::nullopt;
}

}  // namespace caylab
