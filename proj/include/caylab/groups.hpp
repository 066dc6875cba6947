#pragma once

#include <optional>
#include <string>
#include <vector>

#include "caylab/bitset.hpp"

namespace caylab {

// Element of a group, as its canonical mixed-radix index.
using Elem = int;

// Finite abelian group as a product of cyclic factors Z_{f_1} x ... x Z_{f_r}.
// Elements are indexed in mixed-radix order with the first coordinate fastest:
// index(x_1,...,x_r) = x_1 + f_1*(x_2 + f_2*(...)). The identity is index 0.
class AbelianGroup {
public:
  // Construction cap; groups are meant for desk-scale exhaustive work.
  static constexpr long long kOrderCap = 1ll << 20;

  explicit AbelianGroup(std::vector<long long> factors);

  long long order() const { return order_; }
  const std::vector<long long>& factors() const { return factors_; }

  std::vector<long long> coords(Elem x) const;
  Elem from_coords(const std::vector<long long>& c) const;

  Elem add(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  // m*a for any integer m (negative allowed)
  Elem mul(long long m, Elem a) const;

  long long element_order(Elem g) const;
  long long exponent() const;
  bool is_cyclic() const { return exponent() == order_; }

  bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }

  // "Z18" for a single factor, "2x9" otherwise
  std::string spec_string() const;

private:
  std::vector<long long> factors_;
  long long order_ = 1;
};

// Subgroup of an AbelianGroup, with the full member bitset cached.
class Subgroup {
public:
  Subgroup(const AbelianGroup& parent, Bitset members, std::vector<Elem> gens);

  const AbelianGroup& parent() const { return *parent_; }
  long long order() const { return elems_.size(); }
  bool contains(Elem x) const { return members_.test(x); }
  const Bitset& members() const { return members_; }
  const std::vector<Elem>& elements() const { return elems_; }  // sorted
  const std::vector<Elem>& generators() const { return gens_; }
  bool is_trivial() const { return elems_.size() == 1; }

  bool operator==(const Subgroup& o) const { return members_ == o.members_; }

private:
  const AbelianGroup* parent_;
  Bitset members_;
  std::vector<Elem> elems_;
  std::vector<Elem> gens_;
};

AbelianGroup make_group(const std::vector<long long>& factors);

// Parses "Z18", "z18", or "3x9" (optionally "Z3x9"); case-insensitive.
AbelianGroup parse_group(const std::string& spec);

long long element_order(const AbelianGroup& g, Elem x);

// Smallest subgroup containing X; empty X gives the trivial subgroup.
Subgroup subgroup_generated(const AbelianGroup& g, const std::vector<Elem>& xs);

Subgroup trivial_subgroup(const AbelianGroup& g);
Subgroup full_subgroup(const AbelianGroup& g);

// Requires g cyclic and d | |g|. The unique subgroup of order d, i.e. the
// kernel of multiplication by d.
Subgroup unique_subgroup_of_order(const AbelianGroup& g, long long d);

struct QuotientGroup {
  AbelianGroup group;
  std::vector<Elem> projection;  // parent element index -> quotient element index
};

// G/L with an explicit projection homomorphism. The quotient's cyclic
// factors are its invariant factors (largest first).
QuotientGroup quotient_group(const AbelianGroup& g, const Subgroup& l);

// A subgroup re-expressed as an abstract AbelianGroup of its own.
struct SubgroupEmbedding {
  AbelianGroup group;
  std::vector<Elem> to_sub;     // parent index -> subgroup index, -1 outside
  std::vector<Elem> to_parent;  // subgroup index -> parent index
};
SubgroupEmbedding subgroup_as_group(const Subgroup& h);

// Least k >= 1 with j^k = 1 (mod i); requires gcd(i, j) = 1, i >= 1.
long long mult_order(long long j, long long i);

// The unique involution, if the group has exactly one element of order 2.
std::optional<Elem> unique_involution(const AbelianGroup& g);

// Elements of odd order; a subgroup in an abelian group. For |G| = 2m with m
// odd this is the unique index-2 subgroup H_0.
Subgroup odd_part_subgroup(const AbelianGroup& g);

// Greedy small generating set for a given member set.
std::vector<Elem> minimal_generators(const AbelianGroup& g, const Bitset& members);

}  // namespace caylab
