#pragma once

#include <optional>

#include "caylab/cayley.hpp"
#include "caylab/keys.hpp"
#include "caylab/permgroup.hpp"

namespace caylab {

struct IsoResult {
  bool isomorphic = false;
  std::optional<GenMultiplier> witness_multiplier;
  PrimaryKey key_s, key_s2;
};

// Key-and-multiplier isomorphism criterion for circulants of order 2p^e:
// isomorphic iff the keys agree and some compatible multiplier maps s onto
// s2 under phi. Returns the first witness in canonical multiplier order.
// Empty sets are assigned the top key (every class-union condition is
// vacuous) and matched by the all-ones multiplier.
IsoResult muzychuk_iso(const AbelianGroup& h, const ConnectionSet& s, const ConnectionSet& s2,
                       PhiVariant variant = PhiVariant::crt);

// Oracle: explicit isomorphism by individualization-refinement, or nothing.
std::optional<Perm> brute_force_iso(const Graph& a, const Graph& b, int cap = 128);

}  // namespace caylab
