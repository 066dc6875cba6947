#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "caylab/cayley.hpp"

namespace caylab {

// Permutation of [0, n) as an image array.
using Perm = std::vector<int>;

using BigInt = boost::multiprecision::cpp_int;

Perm identity_perm(int n);
bool is_identity(const Perm& p);
// apply p, then q
Perm compose(const Perm& p, const Perm& q);
Perm inverse_perm(const Perm& p);
bool is_automorphism(const Graph& g, const Perm& p);

// Permutation group with a base and strong generating set. The base is built
// deterministically: hint points first, then the smallest point moved by an
// unsifted residue, so identical generator lists always give identical chains.
class PermGroup {
public:
  PermGroup() = default;

  static PermGroup from_generators(int degree, const std::vector<Perm>& gens,
                                   const std::vector<int>& base_hint = {});
  static PermGroup trivial(int degree);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const BigInt& order() const { return order_; }
  const std::vector<int>& base() const { return base_; }

  bool contains(const Perm& p) const;

  // Subgroup fixing v, with its own BSGS.
  PermGroup point_stabilizer(int v) const;

  // Orbits on [0, degree); canonical: sorted members, ordered by least member.
  std::vector<std::vector<int>> orbit_partition() const;
  std::vector<int> orbit_of(int v) const;

private:
  struct Level {
    int point = -1;
    std::vector<Perm> gens;         // strong generators fixing all earlier base points
    std::vector<int> orbit;         // discovery order
    std::vector<int> pos;           // point -> orbit position, -1 if absent
    std::vector<Perm> transversal;  // point -> perm taking base point to it
  };

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<int> base_;
  std::vector<Level> levels_;
  BigInt order_ = 1;

  void extend_base(int point);
  void recompute_orbit(int level);
  void schreier_sims(int level);
  // residue of p after dividing out transversals from `level` on; also the
  // first level index where sifting could not continue
  std::pair<Perm, int> sift_from(const Perm& p, int level) const;
};

// Generators of the full automorphism group, by individualization-refinement
// backtracking over an equitable color refinement.
PermGroup automorphism_generators(const Graph& g, int cap = 128);

// Explicit isomorphism between two graphs, if one exists.
std::optional<Perm> find_isomorphism(const Graph& a, const Graph& b);

}  // namespace caylab
