#include <algorithm>
#include <random>

#include "caylab/permgroup.hpp"
#include "doctest.h"

using namespace caylab;

namespace {

// exhaustive oracle over all n! permutations
long long count_automorphisms_exhaustive(const Graph& g) {
  Perm p = identity_perm(g.order());
  long long count = 0;
  do {
    if (is_automorphism(g, p)) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Perm translation(const AbelianGroup& g, Elem t) {
  Perm p(int(g.order()));
  for (Elem x = 0; x < g.order(); ++x) p[x] = g.add(x, t);
  return p;
}

}  // namespace

TEST_CASE("perm basics") {
  Perm p{1, 2, 0};
  Perm q{0, 2, 1};
  CHECK(compose(p, q) == Perm{2, 1, 0});
  CHECK(compose(p, inverse_perm(p)) == identity_perm(3));
  CHECK(is_identity(identity_perm(5)));
}

TEST_CASE("automorphism groups of small graphs") {
  CHECK(automorphism_generators(cycle(6)).order() == 12);

  AbelianGroup z3({3});
  Graph k3 = build_cayley(z3, make_connection_set(z3, {1, 2}));
  CHECK(automorphism_generators(k3).order() == 6);

  // complete tripartite via Z9
  AbelianGroup z9({9});
  Graph k333 = build_cayley(z9, make_connection_set(z9, {1, 2, 4, 5, 7, 8}));
  PermGroup aut = automorphism_generators(k333);
  CHECK(aut.order() == count_automorphisms_exhaustive(k333));
  CHECK(aut.order() == 1296);
}

TEST_CASE("group_order") {
  CHECK(automorphism_generators(cycle(18)).order() == 36);
  CHECK(PermGroup::from_generators(5, {}).order() == 1);

  AbelianGroup z6({6});
  DoubleCover dc = double_cover(z6, make_connection_set(z6, {1, 2, 3, 4, 5}));
  CHECK(automorphism_generators(dc.graph).order() == 1440);
}

TEST_CASE("point_stabilizer") {
  PermGroup c6 = automorphism_generators(cycle(6));
  CHECK(c6.point_stabilizer(0).order() == 2);

  CHECK(PermGroup::trivial(4).point_stabilizer(1).order() == 1);

  PermGroup c9 = automorphism_generators(cycle(9));
  PermGroup stab = c9.point_stabilizer(0);
  CHECK(stab.order() == 2);
  CHECK(stab.orbit_partition() ==
        std::vector<std::vector<int>>{{0}, {1, 8}, {2, 7}, {3, 6}, {4, 5}});
}

TEST_CASE("orbits") {
  CHECK(automorphism_generators(cycle(6)).orbit_partition() ==
        std::vector<std::vector<int>>{{0, 1, 2, 3, 4, 5}});
  CHECK(PermGroup::from_generators(3, {}).orbit_partition() ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});
}

TEST_CASE("orbit-stabilizer and membership") {
  for (const Graph& g : {cycle(6), cycle(9), cycle(12)}) {
    PermGroup aut = automorphism_generators(g);
    for (int v = 0; v < g.order(); ++v) {
      PermGroup stab = aut.point_stabilizer(v);
      CHECK(aut.order() == stab.order() * unsigned(aut.orbit_of(v).size()));
    }
    for (const Perm& p : aut.generators()) {
      CHECK(is_automorphism(g, p));
      CHECK(aut.contains(p));
      CHECK(aut.contains(compose(p, p)));
    }
    // a non-automorphism transposition should sift out for sparse cycles
    Perm bad = identity_perm(g.order());
    std::swap(bad[0], bad[2]);
    CHECK(!is_automorphism(g, bad));
    CHECK(!aut.contains(bad));
  }
}

TEST_CASE("known automorphism groups") {
  // Petersen graph: 2-subsets of {0..4}, adjacent when disjoint
  std::vector<std::pair<int, int>> vs;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) vs.emplace_back(i, j);
  Graph petersen(10);
  for (int x = 0; x < 10; ++x)
    for (int y = x + 1; y < 10; ++y) {
      auto [a, b] = vs[x];
      auto [c, d] = vs[y];
      if (a != c && a != d && b != c && b != d) petersen.add_edge(x, y);
    }
  PermGroup aut = automorphism_generators(petersen);
  CHECK(aut.order() == 120);
  CHECK(aut.point_stabilizer(0).order() == 12);

  Graph cube(8);
  for (int x = 0; x < 8; ++x)
    for (int b = 0; b < 3; ++b) cube.add_edge(x, x ^ (1 << b));
  CHECK(automorphism_generators(cube).order() == 48);
}

TEST_CASE("right translations are Cayley automorphisms") {
  AbelianGroup z18({18});
  ConnectionSet s = make_connection_set(z18, {2, 4, 8, 9, 10, 14, 16});
  PermGroup aut = automorphism_generators(build_cayley(z18, s));
  for (Elem t : {1, 5, 9}) CHECK(aut.contains(translation(z18, t)));
}

TEST_CASE("search is complete: exhaustive check for n <= 8") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 4 + int(rng() % 5);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) g.add_edge(u, v);
    CHECK(automorphism_generators(g).order() == count_automorphisms_exhaustive(g));
  }
  // structured cases: empty, complete, disjoint edges, path
  Graph empty(6);
  CHECK(automorphism_generators(empty).order() == 720);
  Graph matching(6);
  matching.add_edge(0, 1);
  matching.add_edge(2, 3);
  matching.add_edge(4, 5);
  CHECK(automorphism_generators(matching).order() ==
        count_automorphisms_exhaustive(matching));
  Graph path(5);
  for (int i = 0; i + 1 < 5; ++i) path.add_edge(i, i + 1);
  CHECK(automorphism_generators(path).order() == 2);
  CHECK_THROWS_AS(static_cast<void>(automorphism_generators(Graph(200))),
                  std::invalid_argument);
}
