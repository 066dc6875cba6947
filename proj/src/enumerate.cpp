#include "caylab/enumerate.hpp"
#include <stdexcept>

#include <algorithm>
#include <numeric>

namespace caylab {

PairBasis pair_basis(const AbelianGroup& g) {
  PairBasis basis;
  for (Elem x = 1; x < g.order(); ++x)
    if (x <= g.neg(x)) basis.reps.push_back(x);
  return basis;
}

std::uint64_t mask_count(const PairBasis& basis) {
  if (basis.reps.size() >= 64)
    throw std::invalid_argument("group too large for mask enumeration");
  return std::uint64_t(1) << basis.reps.size();
}

std::vector<Elem> set_from_mask(const AbelianGroup& g, const PairBasis& basis,
                                std::uint64_t mask) {
  std::vector<Elem> set;
  for (std::size_t i = 0; i < basis.reps.size(); ++i) {
    if (!(mask & (std::uint64_t(1) << i))) continue;
    Elem x = basis.reps[i];
    set.push_back(x);
    Elem nx = g.neg(x);
    if (nx != x) set.push_back(nx);
  }
  std::sort(set.begin(), set.end());
  return set;
}

bool is_multiplier_canonical(const AbelianGroup& g, const std::vector<Elem>& set) {
  for (long long m = 2; m < g.order(); ++m) {
    if (std::gcd(m, g.order()) != 1) continue;
    std::vector<Elem> image;
    image.reserve(set.size());
    for (Elem x : set) image.push_back(g.mul(m, x));
    std::sort(image.begin(), image.end());
    if (image < set) return false;
  }
  return true;
}

}  // namespace caylab
