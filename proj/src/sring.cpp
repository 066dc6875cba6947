#include "caylab/sring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace caylab {

Partition Partition::from_classes(int n, std::vector<std::vector<Elem>> classes) {
  Partition p;
  for (auto& c : classes) {
    if (c.empty()) throw std::invalid_argument("empty partition class");
    std::sort(c.begin(), c.end());
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  p.classes = std::move(classes);
  p.class_of.assign(n, -1);
  for (int i = 0; i < int(p.classes.size()); ++i)
    for (Elem x : p.classes[i]) {
      if (x < 0 || x >= n || p.class_of[x] != -1)
        throw std::invalid_argument("not a partition");
      p.class_of[x] = i;
    }
  for (int x = 0; x < n; ++x)
    if (p.class_of[x] == -1) throw std::invalid_argument("not a partition");
  return p;
}

std::string Partition::dump() const {
  std::string out;
  for (const auto& c : classes) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i]);
    }
    out += '\n';
  }
  return out;
}

SRing::SRing(AbelianGroup g, Partition p) : g_(std::move(g)), p_(std::move(p)) {
  if (p_.universe() != int(g_.order())) throw std::invalid_argument("partition size mismatch");
  bits_.reserve(p_.classes.size());
  for (const auto& c : p_.classes) bits_.push_back(Bitset::of(int(g_.order()), c));
}

bool SRing::is_a_set(const Bitset& x) const {
  for (int v = x.find_first(); v >= 0; v = x.find_next(v))
    if (!bits_[p_.class_of[v]].is_subset_of(x)) return false;
  return true;
}

VerifyResult verify_sring(const AbelianGroup& g, const Partition& p) {
  const int n = int(g.order());
  if (p.universe() != n) throw std::invalid_argument("partition universe mismatch");
  if (p.classes[p.class_of[0]].size() != 1)
    return {false, "identity", "class of the identity is not a singleton"};
  // inverse closure of the class set
  for (int i = 0; i < p.rank(); ++i) {
    const auto& x = p.classes[i];
    int j = p.class_of[g.neg(x[0])];
    const auto& y = p.classes[j];
    if (y.size() != x.size())
      return {false, "inverse",
              "inverse of class " + std::to_string(i) + " is not a class"};
    for (Elem e : x)
      if (p.class_of[g.neg(e)] != j)
        return {false, "inverse",
                "inverse of class " + std::to_string(i) + " is not a class"};
  }
  // structure coefficients constant on classes
  std::vector<int> count(n, 0);
  std::vector<Elem> touched;
  for (int i = 0; i < p.rank(); ++i)
    for (int j = 0; j < p.rank(); ++j) {
      touched.clear();
      for (Elem x : p.classes[i])
        for (Elem y : p.classes[j]) {
          Elem z = g.add(x, y);
          if (count[z]++ == 0) touched.push_back(z);
        }
      for (Elem z : touched) {
        Elem rep = p.classes[p.class_of[z]].front();
        if (count[z] != count[rep]) {
          VerifyResult r{false, "closure",
                         "coefficient of " + std::to_string(z) + " (" +
                             std::to_string(count[z]) + ") differs from " +
                             std::to_string(rep) + " (" + std::to_string(count[rep]) +
                             ") in product of classes " + std::to_string(i) + "," +
                             std::to_string(j)};
          for (Elem t : touched) count[t] = 0;
          return r;
        }
      }
      for (Elem z : touched) count[z] = 0;
    }
  return {};
}

SRing transitivity_module(const AbelianGroup& g, const PermGroup& p) {
  const int n = int(g.order());
  if (p.degree() != n) throw std::invalid_argument("permutation degree mismatch");
  // right translations by a generating set must be members
  std::vector<Elem> basis;
  long long stride = 1;
  for (long long f : g.factors()) {
    basis.push_back(Elem(stride));
    stride *= f;
  }
  for (Elem b : basis) {
    Perm t(n);
    for (Elem x = 0; x < n; ++x) t[x] = g.add(x, b);
    if (!p.contains(t))
      throw std::invalid_argument("right translations are not all members of the group");
  }
  PermGroup stab = p.point_stabilizer(0);
  return SRing(g, Partition::from_classes(n, stab.orbit_partition()));
}

SRing intersect_srings(const SRing& a, const SRing& b) {
  if (!(a.group() == b.group())) throw std::invalid_argument("group mismatch");
  const int n = int(a.group().order());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  };
  for (const SRing* r : {&a, &b})
    for (int i = 0; i < r->rank(); ++i)
      for (Elem e : r->cls(i)) unite(r->cls(i).front(), e);
  std::map<int, std::vector<Elem>> groups;
  for (int x = 0; x < n; ++x) groups[find(x)].push_back(x);
  std::vector<std::vector<Elem>> classes;
  classes.reserve(groups.size());
  for (auto& [rep, members] : groups) classes.push_back(std::move(members));
  return SRing(a.group(), Partition::from_classes(n, std::move(classes)));
}

Subgroup radical(const AbelianGroup& g, const Bitset& x) {
  if (x.none()) throw std::invalid_argument("radical of the empty set");
  const int n = int(g.order());
  Bitset rad(n);
  std::vector<Elem> xs = x.to_vector();
  for (Elem h = 0; h < n; ++h) {
    bool stable = true;
    for (Elem e : xs)
      if (!x.test(g.add(e, h))) {
        stable = false;
        break;
      }
    if (stable) rad.set(h);
  }
  return Subgroup(g, rad, minimal_generators(g, rad));
}

ASubgroups a_subgroups(const SRing& a) {
  const AbelianGroup& g = a.group();
  const int n = int(g.order());
  std::vector<Bitset> found;
  auto push_unique = [&](const Bitset& b) {
    if (std::find(found.begin(), found.end(), b) == found.end()) {
      found.push_back(b);
      return true;
    }
    return false;
  };
  Bitset triv(n);
  triv.set(0);
  push_unique(triv);
  for (int i = 0; i < a.rank(); ++i)
    push_unique(subgroup_generated(g, a.cls(i)).members());
  // close under join; every union-of-classes subgroup is a join of the
  // class-generated ones
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t m = found.size();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        std::vector<Elem> gens = found[i].to_vector();
        std::vector<Elem> js = found[j].to_vector();
        gens.insert(gens.end(), js.begin(), js.end());
        if (push_unique(subgroup_generated(g, gens).members())) grew = true;
      }
  }

  ASubgroups out;
  for (const Bitset& b : found) {
    if (!a.is_a_set(b)) continue;  // only possible for a non-S-ring input
    out.all.emplace_back(g, b, minimal_generators(g, b));
  }
  std::sort(out.all.begin(), out.all.end(), [](const Subgroup& x, const Subgroup& y) {
    if (x.order() != y.order()) return x.order() < y.order();
    return x.elements() < y.elements();
  });
  for (int i = 0; i < int(out.all.size()); ++i)
    if (out.all[i].order() % 2 == 1 &&
        (out.largest_odd == -1 || out.all[i].order() > out.all[out.largest_odd].order()))
      out.largest_odd = i;
  if (g.order() % 2 == 0) {
    int best = -1;
    for (int i = 0; i < int(out.all.size()); ++i)
      if (out.all[i].order() % 2 == 0 && (best == -1 || out.all[i].order() < out.all[best].order()))
        best = i;
    if (best != -1) {
      bool least = true;
      for (const Subgroup& s : out.all)
        if (s.order() % 2 == 0 && !out.all[best].members().is_subset_of(s.members()))
          least = false;
      if (least) out.least_even = best;
    }
  }
  return out;
}

Bitset power_map(const AbelianGroup& g, const Bitset& x, long long m) {
  Bitset out(int(g.order()));
  for (int e = x.find_first(); e >= 0; e = x.find_next(e)) out.set(g.mul(m, e));
  return out;
}

Bitset lower_p(const AbelianGroup& g, const Bitset& x, long long p) {
  if (p < 2 || g.order() % p != 0) throw std::invalid_argument("p does not divide |G|");
  const int n = int(g.order());
  std::vector<Elem> torsion;  // {h : p*h = 0}
  for (Elem h = 0; h < n; ++h)
    if (g.mul(p, h) == 0) torsion.push_back(h);
  Bitset out(n);
  for (int e = x.find_first(); e >= 0; e = x.find_next(e)) {
    int cnt = 0;
    for (Elem h : torsion)
      if (x.test(g.add(e, h))) ++cnt;
    if (cnt % p != 0) out.set(g.mul(p, e));
  }
  return out;
}

QuotientSRing quotient_sring(const SRing& a, const Subgroup& l) {
  if (!a.is_a_subgroup(l)) throw std::invalid_argument("not an A-subgroup");
  QuotientGroup q = quotient_group(a.group(), l);
  const int m = int(q.group.order());
  std::vector<Bitset> seen;
  std::vector<std::vector<Elem>> classes;
  for (int i = 0; i < a.rank(); ++i) {
    Bitset img(m);
    for (Elem e : a.cls(i)) img.set(q.projection[e]);
    if (std::find(seen.begin(), seen.end(), img) == seen.end()) {
      seen.push_back(img);
      classes.push_back(img.to_vector());
    }
  }
  Partition p = Partition::from_classes(m, std::move(classes));
  SRing ring(q.group, std::move(p));
  return QuotientSRing{std::move(q), std::move(ring)};
}

InducedSRing induced_subring(const SRing& a, const Subgroup& h) {
  if (!a.is_a_subgroup(h)) throw std::invalid_argument("not an A-subgroup");
  SubgroupEmbedding emb = subgroup_as_group(h);
  std::vector<std::vector<Elem>> classes;
  for (int i = 0; i < a.rank(); ++i) {
    if (!h.contains(a.cls(i).front())) continue;
    std::vector<Elem> c;
    c.reserve(a.cls(i).size());
    for (Elem e : a.cls(i)) c.push_back(emb.to_sub[e]);
    classes.push_back(std::move(c));
  }
  Partition p = Partition::from_classes(int(emb.group.order()), std::move(classes));
  SRing ring(emb.group, std::move(p));
  return InducedSRing{std::move(emb), std::move(ring)};
}

GwpResult is_generalized_wreath(const SRing& a, const Subgroup& u, const Subgroup& l) {
  if (!a.is_a_subgroup(u) || !a.is_a_subgroup(l))
    throw std::invalid_argument("not an A-subgroup");
  if (!l.members().is_subset_of(u.members()))
    throw std::invalid_argument("L must be contained in U");
  const AbelianGroup& g = a.group();
  for (int i = 0; i < a.rank(); ++i) {
    if (u.contains(a.cls(i).front())) continue;
    // class outside U must be a union of L-cosets
    for (Elem e : a.cls(i))
      for (Elem h : l.elements())
        if (!a.class_bits(i).test(g.add(e, h))) return {false, false};
  }
  bool nontrivial = l.order() > 1 && u.order() < g.order();
  return {true, nontrivial};
}

bool is_star(const SRing& a, const Subgroup& v, const Subgroup& w) {
  if (!a.is_a_subgroup(v) || !a.is_a_subgroup(w))
    throw std::invalid_argument("not an A-subgroup");
  const AbelianGroup& g = a.group();
  const int n = int(g.order());
  // (1) V ∩ W normal in W: automatic, the group is abelian
  Bitset meet = v.members() & w.members();
  std::vector<Elem> meet_elems = meet.to_vector();
  Bitset join_vw = v.members() | w.members();
  for (int i = 0; i < a.rank(); ++i) {
    Elem rep = a.cls(i).front();
    bool in_w = w.contains(rep), in_v = v.contains(rep);
    if (in_w && !in_v) {
      // (2) classes inside W \ V are unions of (V ∩ W)-cosets
      for (Elem e : a.cls(i))
        for (Elem h : meet_elems)
          if (!a.class_bits(i).test(g.add(e, h))) return false;
    } else if (!a.class_bits(i).is_subset_of(join_vw)) {
      // (3) classes outside V ∪ W factor as Y·Z with Y ⊆ V, Z ⊆ W
      bool factored = false;
      for (int yi = 0; yi < a.rank() && !factored; ++yi) {
        if (!a.class_bits(yi).is_subset_of(v.members())) continue;
        for (int zi = 0; zi < a.rank() && !factored; ++zi) {
          if (!a.class_bits(zi).is_subset_of(w.members())) continue;
          Bitset prod(n);
          for (Elem y : a.cls(yi))
            for (Elem z : a.cls(zi)) prod.set(g.add(y, z));
          if (prod == a.class_bits(i)) factored = true;
        }
      }
      if (!factored) return false;
    }
  }
  return true;
}

bool coset_intersection_constant(const SRing& a, const Subgroup& h) {
  const AbelianGroup& g = a.group();
  const int n = int(g.order());
  for (int i = 0; i < a.rank(); ++i) {
    int ell = 0;
    std::vector<char> seen(n, 0);
    for (Elem x = 0; x < n; ++x) {
      if (seen[x]) continue;
      int cnt = 0;
      for (Elem e : h.elements()) {
        Elem y = g.add(x, e);
        seen[y] = 1;
        if (a.class_bits(i).test(y)) ++cnt;
      }
      if (cnt == 0) continue;
      if (ell == 0)
        ell = cnt;
      else if (cnt != ell)
        return false;
    }
  }
  return true;
}

}  // namespace caylab
