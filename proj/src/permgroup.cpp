#include "caylab/permgroup.hpp"

#include <algorithm>
#include <stdexcept>

namespace caylab {

Perm identity_perm(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != int(i)) return false;
  return true;
}

Perm compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm inverse_perm(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = int(i);
  return r;
}

bool is_automorphism(const Graph& g, const Perm& p) {
  const int n = g.order();
  if (int(p.size()) != n) return false;
  for (int u = 0; u < n; ++u) {
    Bitset image(n);
    const Bitset& nb = g.neighbors(u);
    for (int v = nb.find_first(); v >= 0; v = nb.find_next(v)) image.set(p[v]);
    if (!(image == g.neighbors(p[u]))) return false;
  }
  return true;
}

PermGroup PermGroup::trivial(int degree) {
  PermGroup g;
  g.degree_ = degree;
  g.order_ = 1;
  return g;
}

void PermGroup::extend_base(int point) {
  base_.push_back(point);
  Level lv;
  lv.point = point;
  lv.pos.assign(degree_, -1);
  levels_.push_back(std::move(lv));
}

void PermGroup::recompute_orbit(int level) {
  Level& lv = levels_[level];
  lv.orbit.clear();
  lv.pos.assign(degree_, -1);
  lv.transversal.assign(degree_, Perm());
  lv.orbit.push_back(lv.point);
  lv.pos[lv.point] = 0;
  lv.transversal[lv.point] = identity_perm(degree_);
  for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
    int beta = lv.orbit[i];
    for (const Perm& s : lv.gens) {
      int image = s[beta];
      if (lv.pos[image] == -1) {
        lv.pos[image] = int(lv.orbit.size());
        lv.orbit.push_back(image);
        lv.transversal[image] = compose(lv.transversal[beta], s);
      }
    }
  }
}

std::pair<Perm, int> PermGroup::sift_from(const Perm& p, int level) const {
  Perm g = p;
  for (int i = level; i < int(levels_.size()); ++i) {
    int image = g[levels_[i].point];
    if (levels_[i].pos[image] == -1) return {std::move(g), i};
    g = compose(g, inverse_perm(levels_[i].transversal[image]));
  }
  return {std::move(g), int(levels_.size())};
}

void PermGroup::schreier_sims(int level) {
  recompute_orbit(level);
  // index-based access throughout: extend_base may reallocate levels_
  for (std::size_t oi = 0; oi < levels_[level].orbit.size(); ++oi) {
    int beta = levels_[level].orbit[oi];
    for (std::size_t gi = 0; gi < levels_[level].gens.size(); ++gi) {
      const Perm& s = levels_[level].gens[gi];
      Perm schreier = compose(compose(levels_[level].transversal[beta], s),
                              inverse_perm(levels_[level].transversal[s[beta]]));
      if (is_identity(schreier)) continue;
      auto [residue, stop] = sift_from(schreier, level + 1);
      if (is_identity(residue)) continue;
      if (stop == int(levels_.size())) {
        int moved = 0;
        while (residue[moved] == moved) ++moved;
        extend_base(moved);
      }
      for (int l = level + 1; l <= stop && l < int(levels_.size()); ++l)
        levels_[l].gens.push_back(residue);
      for (int l = std::min(stop, int(levels_.size()) - 1); l > level; --l) schreier_sims(l);
      // deeper levels cannot change this level's orbit: its gens are unchanged
    }
  }
}

PermGroup PermGroup::from_generators(int degree, const std::vector<Perm>& gens,
                                     const std::vector<int>& base_hint) {
  PermGroup g;
  g.degree_ = degree;
  for (const Perm& p : gens) {
    if (int(p.size()) != degree) throw std::invalid_argument("generator degree mismatch");
    if (!is_identity(p)) g.gens_.push_back(p);
  }
  for (int b : base_hint)
    if (b >= 0 && b < degree) g.extend_base(b);
  for (const Perm& p : g.gens_) {
    bool moves_base = false;
    for (int b : g.base_)
      if (p[b] != b) {
        moves_base = true;
        break;
      }
    if (!moves_base) {
      int moved = 0;
      while (p[moved] == moved) ++moved;
      g.extend_base(moved);
    }
  }
  // distribute generators: level i holds those fixing base points 0..i-1
  for (const Perm& p : g.gens_) {
    for (int i = 0; i < int(g.levels_.size()); ++i) {
      g.levels_[i].gens.push_back(p);
      if (p[g.levels_[i].point] != g.levels_[i].point) break;
    }
  }
  for (int i = int(g.levels_.size()) - 1; i >= 0; --i) g.schreier_sims(i);
  g.order_ = 1;
  for (int i = 0; i < int(g.levels_.size()); ++i) {
    g.recompute_orbit(i);
    g.order_ *= unsigned(g.levels_[i].orbit.size());
  }
  return g;
}

bool PermGroup::contains(const Perm& p) const {
  if (int(p.size()) != degree_) return false;
  auto [residue, stop] = sift_from(p, 0);
  return stop == int(levels_.size()) && is_identity(residue);
}

PermGroup PermGroup::point_stabilizer(int v) const {
  if (v < 0 || v >= degree_) throw std::invalid_argument("stabilizer point out of range");
  std::vector<int> hint{v};
  hint.insert(hint.end(), base_.begin(), base_.end());
  PermGroup rebased = from_generators(degree_, gens_, hint);
  std::vector<Perm> stab_gens;
  if (rebased.levels_.size() > 1) stab_gens = rebased.levels_[1].gens;
  return from_generators(degree_, stab_gens, {});
}

std::vector<std::vector<int>> PermGroup::orbit_partition() const {
  std::vector<int> parent(degree_);
  for (int i = 0; i < degree_; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Perm& p : gens_)
    for (int i = 0; i < degree_; ++i) {
      int a = find(i), b = find(p[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::vector<int>> orbits;
  std::vector<int> orbit_id(degree_, -1);
  for (int i = 0; i < degree_; ++i) {
    int r = find(i);
    if (orbit_id[r] == -1) {
      orbit_id[r] = int(orbits.size());
      orbits.emplace_back();
    }
    orbits[orbit_id[r]].push_back(i);
  }
  return orbits;
}

std::vector<int> PermGroup::orbit_of(int v) const {
  for (auto& orb : orbit_partition())
    if (std::binary_search(orb.begin(), orb.end(), v)) return orb;
  return {v};
}

}  // namespace caylab
