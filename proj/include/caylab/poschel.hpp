#pragma once

#include <string>
#include <utility>
#include <vector>

#include "caylab/sring.hpp"

namespace caylab {

// Parameter tuple (d_1,...,d_e; Pi) classifying S-rings over Z_{p^e}, p odd.
// Pi is an interval partition of {1..e}, stored as inclusive (lo, hi) pairs
// in ascending order.
struct SSystem {
  long long p = 3;
  int e = 1;
  std::vector<long long> d;
  std::vector<std::pair<int, int>> intervals;

  bool operator==(const SSystem&) const = default;
  std::string to_string() const;
};

struct SSystemCheck {
  bool ok = true;
  std::string violated;  // "divisor" | "intervals" | "1" | "2" | "3"
};

// Checks the defining conditions. Throws if p is even or not prime.
SSystemCheck validate_ssystem(const SSystem& s);

// The S-ring over the cyclic group of order p^e determined by a valid
// S-system: identity singleton, merged order-layers over non-singleton
// intervals, and orbits of the order-d_i multiplier subgroup on each
// remaining layer.
SRing build_ssystem_partition(const AbelianGroup& g, const SSystem& s);

// All valid S-systems with respect to p^e, canonically sorted.
std::vector<SSystem> enumerate_ssystems(long long p, int e);

// Every partition of G with an isolated identity that satisfies the S-ring
// axioms, by backtracking over set partitions with inverse-closure pruning.
// Requires |G| <= 10.
std::vector<SRing> brute_force_srings(const AbelianGroup& g);

bool is_prime(long long n);

}  // namespace caylab
