#include "caylab/isotest.hpp"

#include <stdexcept>

namespace caylab {

IsoResult muzychuk_iso(const AbelianGroup& h, const ConnectionSet& s, const ConnectionSet& s2,
                       PhiVariant variant) {
  Cyclic2peView view = cyclic_2pe_view(h);
  IsoResult out;

  PrimaryKey top{std::vector<int>(view.e, 0)};
  for (int i = 0; i < view.e; ++i) top.k[i] = i;
  out.key_s = s.members.none() ? top : key_of_set(h, s.members);
  out.key_s2 = s2.members.none() ? top : key_of_set(h, s2.members);

  if (s.members.none() && s2.members.none()) {
    out.isomorphic = true;
    out.witness_multiplier = GenMultiplier{std::vector<long long>(view.e, 1)};
    return out;
  }
  if (!(out.key_s == out.key_s2)) return out;

  for (const GenMultiplier& m : multipliers_for_key(view.p, view.e, out.key_s)) {
    Perm phi = phi_map(h, m, variant);
    Bitset image(int(h.order()));
    for (Elem x : s.elems) image.set(phi[x]);
    if (image == s2.members) {
      out.isomorphic = true;
      out.witness_multiplier = m;
      return out;
    }
  }
  return out;
}

std::optional<Perm> brute_force_iso(const Graph& a, const Graph& b, int cap) {
  if (a.order() > cap || b.order() > cap)
    throw std::invalid_argument("graph exceeds isomorphism degree cap");
  return find_isomorphism(a, b);
}

}  // namespace caylab
