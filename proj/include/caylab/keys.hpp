#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "caylab/permgroup.hpp"
#include "caylab/sring.hpp"

namespace caylab {

// n = p^e with p an odd prime, or nothing.
std::optional<std::pair<long long, int>> as_odd_prime_power(long long n);

// Monotone tuple (k_1,...,k_e) with 0 <= k_i <= i-1.
struct PrimaryKey {
  std::vector<int> k;

  int e() const { return int(k.size()); }
  bool operator==(const PrimaryKey&) const = default;
  bool operator<(const PrimaryKey& o) const { return k < o.k; }
  std::string to_string() const;  // "(k1,...,ke)"
};

bool valid_key(const PrimaryKey& key);
PrimaryKey key_join(const PrimaryKey& a, const PrimaryKey& b);
PrimaryKey key_meet(const PrimaryKey& a, const PrimaryKey& b);
// the whole key space for exponent e, sorted ascending
std::vector<PrimaryKey> key_lattice(int e);

// Digit multipliers (m_1,...,m_e), each coprime to p. Entries are stored as
// odd representatives modulo 2p^i; the digit action only depends on
// m_i mod p^i.
struct GenMultiplier {
  std::vector<long long> m;

  bool operator==(const GenMultiplier&) const = default;
  std::string to_string() const;  // "(m1,...,me)"
};

// x -> sum_i m_{e-i} * x_i * p^i (mod p^e) on the p-adic digits x_i of x.
long long digit_map(long long p, int e, const GenMultiplier& m, long long x);

// View of a cyclic group of order 2p^e: residues relative to a fixed
// generator, the involution b, and the prime-power parameters.
struct Cyclic2peView {
  long long p = 0;
  int e = 0;
  long long pe = 0;            // p^e
  Elem b = -1;                 // unique involution
  std::vector<long long> residue;  // element index -> residue mod 2p^e
  std::vector<Elem> element;       // residue -> element index
};
Cyclic2peView cyclic_2pe_view(const AbelianGroup& h);

// Key partition Pi(k): identity and the involution as singletons; every other
// element x of order p^i or 2p^i lies in the coset P_{k_i} + x of the
// subgroup of order p^{k_i}.
Partition key_partition(const AbelianGroup& h, const PrimaryKey& key);

// Greatest key whose partition has s as a union of classes; s nonempty.
PrimaryKey key_of_set(const AbelianGroup& h, const Bitset& s);

// Two readings of the lift of the digit map to the full group. `crt` applies
// the digit map on the odd-part coordinate and fixes the 2-part coordinate
// (elements written h^{2x} and h^{2x} b). `literal` instead maps h^{2x+1} to
// h^{2 f(x)+1}; it fixes h for every multiplier and is kept only for
// comparison.
enum class PhiVariant { crt, literal };

Perm phi_map(const AbelianGroup& h, const GenMultiplier& m, PhiVariant variant = PhiVariant::crt);

// All multipliers compatible with the key, up to the effective modulus p^i
// per entry, with odd representatives. Enumeration order is canonical:
// m_e varies outermost, each entry ascending by representative value.
std::vector<GenMultiplier> multipliers_for_key(long long p, int e, const PrimaryKey& key);

}  // namespace caylab
