#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "caylab/groups.hpp"

namespace caylab {

// Inverse-closed, identity-free subset of a group.
struct ConnectionSet {
  const AbelianGroup* group;
  Bitset members;
  std::vector<Elem> elems;  // sorted

  bool contains(Elem x) const { return members.test(x); }
  int size() const { return int(elems.size()); }
};

ConnectionSet make_connection_set(const AbelianGroup& g, const std::vector<Elem>& elems);
ConnectionSet connection_set_from_bitset(const AbelianGroup& g, const Bitset& members);

// Simple undirected graph with adjacency bitsets.
class Graph {
public:
  explicit Graph(int n) : n_(n), adj_(n, Bitset(n)) {}

  int order() const { return n_; }
  void add_edge(int u, int v) {
    adj_[u].set(v);
    adj_[v].set(u);
  }
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  const Bitset& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  long long edge_count() const;

  bool operator==(const Graph& o) const = default;

private:
  int n_;
  std::vector<Bitset> adj_;
};

Graph build_cayley(const AbelianGroup& g, const ConnectionSet& s);

// Canonical double cover realized as a Cayley graph on G = H x Z2 with
// connection set S x {1}. Vertex h + |H|*eps is the pair (h, eps), so the
// vertex map to the textbook tensor construction is the identity.
struct DoubleCover {
  AbelianGroup group;  // H x Z2
  Elem a;              // the (0,1) element, index |H|
  ConnectionSet sa;    // S x {1}
  Graph graph;
};
DoubleCover double_cover(const AbelianGroup& h, const ConnectionSet& s);

// Textbook tensor product with K2: vertices (v,i), edges {(u,0),(v,1)}.
Graph tensor_with_k2(const Graph& g);

struct GraphProps {
  bool connected;
  bool bipartite;
};
GraphProps graph_properties(const Graph& g);

// Some pair of distinct vertices with equal open neighborhoods, if any;
// first in lexicographic order.
std::optional<std::pair<int, int>> find_twins(const Graph& g);

}  // namespace caylab
