#include <stdexcept>

#include "caylab/cayley.hpp"
#include "doctest.h"

using namespace caylab;

TEST_CASE("make_connection_set") {
  AbelianGroup z18({18});
  ConnectionSet s = make_connection_set(z18, {2, 4, 8, 9, 10, 14, 16});
  CHECK(s.size() == 7);
  CHECK_THROWS_WITH_AS(static_cast<void>(make_connection_set(z18, {0, 1})),
                       "identity in connection set", std::invalid_argument);
  CHECK_THROWS_WITH_AS(static_cast<void>(make_connection_set(z18, {1})),
                       "connection set not inverse-closed: missing -1 = 17",
                       std::invalid_argument);
}

TEST_CASE("build_cayley") {
  AbelianGroup z3({3});
  Graph k3 = build_cayley(z3, make_connection_set(z3, {1, 2}));
  CHECK(k3.edge_count() == 3);
  CHECK(k3.has_edge(0, 1));
  CHECK(k3.has_edge(1, 2));
  CHECK(k3.has_edge(0, 2));

  AbelianGroup z18({18});
  Graph c18 = build_cayley(z18, make_connection_set(z18, {1, 17}));
  for (int x = 0; x < 18; ++x) {
    CHECK(c18.degree(x) == 2);
    CHECK(c18.has_edge(x, (x + 1) % 18));
  }

  AbelianGroup z6({6});
  Graph k6 = build_cayley(z6, make_connection_set(z6, {1, 2, 3, 4, 5}));
  CHECK(k6.edge_count() == 15);
}

TEST_CASE("double cover equals the tensor construction") {
  AbelianGroup z3({3});
  ConnectionSet s = make_connection_set(z3, {1, 2});
  DoubleCover dc = double_cover(z3, s);
  CHECK(dc.graph == tensor_with_k2(build_cayley(z3, s)));
  // K3 x K2 is the 6-cycle
  GraphProps props = graph_properties(dc.graph);
  CHECK(props.connected);
  CHECK(props.bipartite);
  for (int v = 0; v < 6; ++v) CHECK(dc.graph.degree(v) == 2);

  AbelianGroup z6({6});
  ConnectionSet full = make_connection_set(z6, {1, 2, 3, 4, 5});
  DoubleCover k66 = double_cover(z6, full);
  CHECK(k66.graph == tensor_with_k2(build_cayley(z6, full)));
  // K6 x K2 = K6,6 minus a perfect matching
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v)
      CHECK(k66.graph.has_edge(u, 6 + v) == (u != v));

  // each edge lifts to two, and the cover is always bipartite
  AbelianGroup z18({18});
  for (std::vector<Elem> set :
       {std::vector<Elem>{1, 17}, std::vector<Elem>{2, 4, 8, 9, 10, 14, 16}}) {
    ConnectionSet cs = make_connection_set(z18, set);
    DoubleCover cover = double_cover(z18, cs);
    CHECK(cover.graph.edge_count() == 2 * build_cayley(z18, cs).edge_count());
    CHECK(graph_properties(cover.graph).bipartite);
  }
}

TEST_CASE("graph_properties") {
  AbelianGroup z18({18});
  GraphProps c18 = graph_properties(build_cayley(z18, make_connection_set(z18, {1, 17})));
  CHECK(c18.connected);
  CHECK(c18.bipartite);  // even cycle

  GraphProps two_cycles = graph_properties(build_cayley(z18, make_connection_set(z18, {2, 16})));
  CHECK(!two_cycles.connected);

  GraphProps wilson = graph_properties(
      build_cayley(z18, make_connection_set(z18, {2, 4, 8, 9, 10, 14, 16})));
  CHECK(wilson.connected);
  CHECK(!wilson.bipartite);
}

TEST_CASE("connected twice-odd circulants: bipartite iff the set avoids the odd part") {
  for (long long n : {6, 10, 18}) {
    AbelianGroup g({n});
    Subgroup h0 = odd_part_subgroup(g);
    const int pairs = int((n - 2) / 2 + 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs); ++mask) {
      std::vector<Elem> set;
      for (int i = 0; i < pairs; ++i)
        if (mask & (std::uint64_t(1) << i)) {
          Elem x = i + 1;
          set.push_back(x);
          if (g.neg(x) != x) set.push_back(int(g.neg(x)));
        }
      if (set.empty()) continue;
      ConnectionSet s = make_connection_set(g, set);
      GraphProps props = graph_properties(build_cayley(g, s));
      if (!props.connected) continue;
      CHECK(props.bipartite == !s.members.intersects(h0.members()));
    }
  }
}

TEST_CASE("find_twins") {
  AbelianGroup z9({9});
  Graph g = build_cayley(z9, make_connection_set(z9, {1, 2, 4, 5, 7, 8}));
  auto twins = find_twins(g);
  REQUIRE(twins.has_value());
  CHECK(*twins == std::pair<int, int>{0, 3});

  AbelianGroup z3({3});
  CHECK(!find_twins(build_cayley(z3, make_connection_set(z3, {1, 2}))));

  AbelianGroup z18({18});
  CHECK(!find_twins(build_cayley(z18, make_connection_set(z18, {1, 17}))));
}

TEST_CASE("cayley twins iff the set is shift-invariant") {
  AbelianGroup z9({9});
  const std::vector<std::vector<Elem>> sets = {
      {1, 2, 4, 5, 7, 8}, {1, 8}, {3, 6}, {1, 3, 6, 8}, {2, 3, 6, 7}};
  for (const auto& set : sets) {
    ConnectionSet s = make_connection_set(z9, set);
    Graph g = build_cayley(z9, s);
    for (Elem x = 0; x < 9; ++x)
      for (Elem y = 0; y < 9; ++y) {
        if (x == y) continue;
        bool shift_invariant = true;
        for (Elem v : s.elems)
          if (!s.contains(z9.add(v, z9.sub(x, y)))) {
            shift_invariant = false;
            break;
          }
        CHECK((g.neighbors(x) == g.neighbors(y)) == shift_invariant);
      }
  }
}
