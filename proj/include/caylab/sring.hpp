#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caylab/groups.hpp"
#include "caylab/permgroup.hpp"

namespace caylab {

// Partition of [0, n) into canonical classes: members sorted ascending,
// classes ordered by least member.
struct Partition {
  std::vector<std::vector<Elem>> classes;
  std::vector<int> class_of;

  static Partition from_classes(int n, std::vector<std::vector<Elem>> classes);
  int universe() const { return int(class_of.size()); }
  int rank() const { return int(classes.size()); }

  bool operator==(const Partition& o) const { return classes == o.classes; }
  bool operator<(const Partition& o) const { return classes < o.classes; }

  // one class per line, members space-separated
  std::string dump() const;
};

// Schur-ring partition over an abelian group. Owns its group by value so
// quotient and induced rings are self-contained.
class SRing {
public:
  SRing(AbelianGroup g, Partition p);

  const AbelianGroup& group() const { return g_; }
  const Partition& partition() const { return p_; }
  int rank() const { return p_.rank(); }
  int class_of(Elem x) const { return p_.class_of[x]; }
  const std::vector<Elem>& cls(int i) const { return p_.classes[i]; }
  const Bitset& class_bits(int i) const { return bits_[i]; }

  // X is a union of classes
  bool is_a_set(const Bitset& x) const;
  bool is_a_subgroup(const Subgroup& h) const { return is_a_set(h.members()); }

private:
  AbelianGroup g_;
  Partition p_;
  std::vector<Bitset> bits_;
};

struct VerifyResult {
  bool ok = true;
  std::string axiom;   // "identity" | "inverse" | "closure" when !ok
  std::string detail;  // witness description
};

// Wielandt's axioms: identity singleton, inverse-closed class set, and
// constant structure coefficients on every class pair.
VerifyResult verify_sring(const AbelianGroup& g, const Partition& p);

// Orbits of the identity's stabilizer in p, as an S-ring. Requires the right
// translations of g to be members of p.
SRing transitivity_module(const AbelianGroup& g, const PermGroup& p);

// Finest partition whose classes are simultaneously unions of a-classes and
// of b-classes (partition join); both inputs refine the result.
SRing intersect_srings(const SRing& a, const SRing& b);

// rad(X) = {g : X + g = X}; requires X nonempty.
Subgroup radical(const AbelianGroup& g, const Bitset& x);

struct ASubgroups {
  std::vector<Subgroup> all;  // sorted by (order, members)
  int largest_odd = -1;       // index into all
  std::optional<int> least_even;
};
// All subgroups that are unions of classes.
ASubgroups a_subgroups(const SRing& a);

// X^(m) = {m*x : x in X}
Bitset power_map(const AbelianGroup& g, const Bitset& x, long long m);

// X^[p] = {p*x : x in X, |X ∩ (x + G_p)| != 0 mod p} with G_p the p-torsion
// subgroup {g : p*g = 0}. Requires p | |G|.
Bitset lower_p(const AbelianGroup& g, const Bitset& x, long long p);

struct QuotientSRing {
  QuotientGroup quotient;
  SRing ring;
};
QuotientSRing quotient_sring(const SRing& a, const Subgroup& l);

struct InducedSRing {
  SubgroupEmbedding embedding;
  SRing ring;
};
InducedSRing induced_subring(const SRing& a, const Subgroup& h);

struct GwpResult {
  bool holds = false;
  bool nontrivial = false;  // holds with l != 1 and u != G
};
// U/L-generalized-wreath test: every class outside u is a union of l-cosets.
GwpResult is_generalized_wreath(const SRing& a, const Subgroup& u, const Subgroup& l);

// Star-product test for a = a_V * a_W.
bool is_star(const SRing& a, const Subgroup& v, const Subgroup& w);

// Coset intersection constancy: for every class X, |hx ∩ X| takes one
// nonzero value as hx ranges over h-cosets meeting X.
bool coset_intersection_constant(const SRing& a, const Subgroup& h);

}  // namespace caylab
