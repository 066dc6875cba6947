#include "caylab/audit.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "caylab/isotest.hpp"

namespace caylab {

std::string set_to_string(const std::vector<Elem>& set) {
  std::string s = "[";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(set[i]);
  }
  return s + "]";
}

Corpus build_corpus(const AbelianGroup& h, const CorpusSpec& spec) {
  PairBasis basis = pair_basis(h);
  const std::uint64_t total = mask_count(basis);
  Corpus corpus;
  auto consider = [&](std::uint64_t mask) -> bool {
    std::vector<Elem> set = set_from_mask(h, basis, mask);
    if (spec.dedupe && !is_multiplier_canonical(h, set)) return false;
    bool in_scope = false;
    if (!set.empty()) {
      ConnectionSet s = make_connection_set(h, set);
      GraphProps props = graph_properties(build_cayley(h, s));
      in_scope = props.connected && !props.bipartite;
    }
    corpus.masks.emplace_back(mask, in_scope);
    return in_scope;
  };
  if (spec.exhaustive) {
    if (basis.reps.size() > 24)
      throw std::invalid_argument("exhaustive corpus too large; use sampling");
    for (std::uint64_t mask = 0; mask < total; ++mask) consider(mask);
  } else {
    ShuffleStream stream(total, spec.seed);
    long long found = 0;
    while (found < spec.sample) {
      auto mask = stream.next();
      if (!mask) break;
      if (consider(*mask)) ++found;
    }
  }
  return corpus;
}

namespace {

bool is_subgroup_bits(const AbelianGroup& g, const Bitset& b) {
  if (!b.test(0)) return false;
  for (int x = b.find_first(); x >= 0; x = b.find_next(x))
    for (int y = b.find_next(x - 1); y >= 0; y = b.find_next(y))
      if (!b.test(g.add(x, y))) return false;
  return true;
}

// The class of a, shifted back into H and split by the involution coset:
// d0 = (T+a) ∩ H_0 and d1 = {x in H_0 : x b in T+a}. T must lie in Ha.
bool split_t_by_involution(const AbelianGroup& g, const Bitset& t, Elem a, Elem b_h,
                           const Subgroup& h0, Bitset& d0, Bitset& d1) {
  const int n = int(g.order());
  d0 = Bitset(n);
  d1 = Bitset(n);
  for (int x = t.find_first(); x >= 0; x = t.find_next(x)) {
    Elem y = g.add(x, a);
    if (h0.contains(y)) {
      d0.set(y);
    } else {
      Elem z = g.add(y, b_h);
      if (!h0.contains(z)) return false;
      d1.set(z);
    }
  }
  return true;
}

// One of the three admissible shapes for the class of a over a cyclic group:
// La, La ∪ Lab, or Ma ∪ (M\L)ab with L < M.
bool t_shape_ok(const AbelianGroup& g, const Bitset& t, Elem a, Elem b_h, const Subgroup& h0) {
  Bitset d0, d1;
  if (!split_t_by_involution(g, t, a, b_h, h0, d0, d1)) return false;
  if (!is_subgroup_bits(g, d0)) return false;
  if (d1.none()) return true;                // T = La
  if (d0 == d1) return true;                 // T = La ∪ Lab
  if (!d1.is_subset_of(d0)) return false;    // T = Ma ∪ (M\L)ab needs M\L ⊆ M
  Bitset l = d0 ^ d1;
  return is_subgroup_bits(g, l);
}

// V = intersection of rad(X ∩ H_0 a) over classes X meeting H_0 a.
Bitset v_of_module(const SRing& module, const Bitset& h0a) {
  const AbelianGroup& g = module.group();
  const int n = int(g.order());
  Bitset v(n);
  for (int i = 0; i < n; ++i) v.set(i);
  for (int c = 0; c < module.rank(); ++c) {
    Bitset slice = module.class_bits(c) & h0a;
    if (slice.none()) continue;
    v &= radical(g, slice).members();
  }
  return v;
}

struct InstanceOutcome {
  bool in_scope = false;
  bool unstable = false;
  bool applicable = false;
  bool agreement = false;
  std::vector<Violation> violations;
};

InstanceOutcome audit_one(const AbelianGroup& h, std::uint64_t mask, const PairBasis& basis,
                          const InstanceAuditConfig& cfg) {
  std::vector<Elem> set = set_from_mask(h, basis, mask);
  const bool need_module = cfg.check_main2 || cfg.check_main3 || cfg.check_axioms;
  AnalyzeOptions opts;
  opts.phi = cfg.phi;
  opts.with_module = need_module;
  InstanceAnalysis a = analyze_instance(h, set, opts);
  InstanceOutcome out;
  out.in_scope = a.in_scope;
  if (!a.in_scope) return out;
  out.unstable = !a.stable;

  const std::string tag = "group=" + a.group_spec + " set=" + set_to_string(a.set);
  auto violate = [&](const std::string& what) { out.violations.push_back({tag, what}); };

  if (cfg.check_main1) {
    const bool orbit_nontrivial = a.orbit_of_a.size() > 1;
    if (orbit_nontrivial != !a.stable)
      violate("main1: orbit of a has size " + std::to_string(a.orbit_of_a.size()) +
              " but stable=" + (a.stable ? "true" : "false"));
  }
  if (cfg.check_main4) {
    if (!a.criterion.applicable) {
      violate("main4: criterion not applicable to this group");
    } else {
      out.applicable = true;
      out.agreement = a.agreement;
      if (!a.agreement)
        violate("main4: criterion verdict " +
                std::string(a.criterion.unstable() ? "unstable" : "stable") +
                " disagrees with brute " + (a.stable ? "stable" : "unstable"));
    }
  }
  {
    // twins force instability on every in-scope instance
    ConnectionSet s = make_connection_set(h, a.set);
    std::optional<std::pair<int, int>> twins = find_twins(build_cayley(h, s));
    if (twins && a.stable)
      violate("twins: vertices " + std::to_string(twins->first) + "," +
              std::to_string(twins->second) + " are twins but the graph is stable");
    if (cfg.check_wm && !a.stable && !twins)
      violate("wm: unstable instance has no twins");
  }
  if (need_module) {
    const SRing& module = *a.module;
    const AbelianGroup& g = module.group();
    const int nh = int(h.order());
    Bitset h_bits(int(g.order()));
    for (int i = 0; i < nh; ++i) h_bits.set(i);
    Subgroup h_in_g(g, h_bits, minimal_generators(g, h_bits));

    if (!module.is_a_subgroup(h_in_g))
      violate("module: H is not a union of classes");
    else {
      if (cfg.check_main2 && !a.stable) {
        ASubgroups subs = a_subgroups(module);
        bool found = false;
        for (const Subgroup& l : subs.all) {
          if (l.order() <= 1 || !l.members().is_subset_of(h_bits)) continue;
          if (is_generalized_wreath(module, h_in_g, l).holds) {
            found = true;
            break;
          }
        }
        if (!found) violate("main2: no H/L-wreath decomposition with L != 1");
      }
      if (cfg.check_main3 && a.orbit_of_a.size() > 1) {
        std::optional<Elem> b_h = unique_involution(h);
        if (!b_h) {
          violate("main3: group has no unique involution");
        } else {
          Elem ab = g.add(a.a, *b_h);
          const Bitset& t = module.class_bits(module.class_of(a.a));
          bool a_ab_class = t.count() == 2 && t.test(a.a) && t.test(ab);
          Subgroup h0 = odd_part_subgroup(g);  // H_0 x {0}
          Bitset h0a(int(g.order()));
          for (Elem x : h0.elements()) h0a.set(g.add(x, a.a));
          Bitset v = v_of_module(module, h0a);
          if (!a_ab_class && v.count() <= 1)
            violate("main3: neither {a,ab} basic nor V != 1");
          if (h.is_cyclic() && !t_shape_ok(g, t, a.a, *b_h, h0))
            violate("main3: class of a matches no admissible shape");
        }
      }
    }
    if (cfg.check_axioms)
      for (const std::string& what : sring_axiom_violations(module))
        violate("axioms: " + what);
  }
  return out;
}

}  // namespace

InstanceAuditResult run_instance_audit(const AbelianGroup& h, const CorpusSpec& spec,
                                       const InstanceAuditConfig& cfg, int jobs) {
  Corpus corpus = build_corpus(h, spec);
  PairBasis basis = pair_basis(h);
  std::vector<std::uint64_t> in_scope;
  for (auto [mask, scope] : corpus.masks)
    if (scope) in_scope.push_back(mask);

  std::vector<InstanceOutcome> outcomes = parallel_map(
      in_scope, jobs, [&](std::uint64_t mask) { return audit_one(h, mask, basis, cfg); });

  InstanceAuditResult result;
  result.considered = corpus.considered();
  for (const InstanceOutcome& o : outcomes) {
    ++result.in_scope;
    if (o.unstable) ++result.unstable;
    if (o.applicable) ++result.applicable;
    if (o.agreement) ++result.agreements;
    for (const Violation& v : o.violations) result.violations.push_back(v);
  }
  return result;
}

std::vector<std::string> sring_axiom_violations(const SRing& a) {
  std::vector<std::string> out;
  const AbelianGroup& g = a.group();
  VerifyResult v = verify_sring(g, a.partition());
  if (!v.ok) out.push_back("axiom " + v.axiom + ": " + v.detail);
  for (long long m = 1; m < g.order(); ++m) {
    if (std::gcd(m, g.order()) != 1) continue;
    for (int i = 0; i < a.rank(); ++i) {
      Bitset image = power_map(g, a.class_bits(i), m);
      if (!(image == a.class_bits(a.class_of(image.find_first()))))
        out.push_back("power map by " + std::to_string(m) + " breaks class " +
                      std::to_string(i));
    }
  }
  for (long long p = 2; p <= g.order(); ++p) {
    if (!is_prime(p) || g.order() % p != 0) continue;
    for (int i = 0; i < a.rank(); ++i) {
      Bitset image = lower_p(g, a.class_bits(i), p);
      if (image.any() && !a.is_a_set(image))
        out.push_back("condensation at p=" + std::to_string(p) + " of class " +
                      std::to_string(i) + " is not an A-set");
    }
  }
  for (const Subgroup& sub : a_subgroups(a).all)
    if (!coset_intersection_constant(a, sub))
      out.push_back("coset intersection constancy fails for subgroup of order " +
                    std::to_string(sub.order()));
  return out;
}

PoschelAudit audit_poschel(const AbelianGroup& g) {
  auto pp = as_odd_prime_power(g.order());
  if (!pp || !g.is_cyclic())
    throw std::invalid_argument("group is not cyclic of odd prime-power order");
  PoschelAudit out;
  std::vector<SSystem> systems = enumerate_ssystems(pp->first, pp->second);
  out.ssystems = static_cast<long long>(systems.size());
  std::vector<Partition> built;
  for (const SSystem& s : systems) {
    SRing ring = build_ssystem_partition(g, s);
    VerifyResult v = verify_sring(g, ring.partition());
    if (!v.ok)
      out.violations.push_back({s.to_string(), "construction violates axiom " + v.axiom});
    built.push_back(ring.partition());
  }
  std::sort(built.begin(), built.end());
  if (std::adjacent_find(built.begin(), built.end()) != built.end())
    out.violations.push_back({"-", "distinct S-systems built the same partition"});

  std::vector<Partition> brute;
  for (const SRing& ring : brute_force_srings(g)) brute.push_back(ring.partition());
  std::sort(brute.begin(), brute.end());
  out.brute_rings = static_cast<long long>(brute.size());
  out.equal = built == brute;
  if (!out.equal) {
    for (const Partition& p : brute)
      if (!std::binary_search(built.begin(), built.end(), p))
        out.violations.push_back({"-", "brute-force ring missing from S-system constructions:\n" + p.dump()});
    for (const Partition& p : built)
      if (!std::binary_search(brute.begin(), brute.end(), p))
        out.violations.push_back({"-", "S-system construction not found by brute force:\n" + p.dump()});
  }
  return out;
}

namespace {

bool is_graph_iso(const Graph& a, const Graph& b, const Perm& f) {
  const int n = a.order();
  if (b.order() != n || int(f.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int v : f) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (int u = 0; u < n; ++u) {
    Bitset image(n);
    const Bitset& nb = a.neighbors(u);
    for (int v = nb.find_first(); v >= 0; v = nb.find_next(v)) image.set(f[v]);
    if (!(image == b.neighbors(f[u]))) return false;
  }
  return true;
}

}  // namespace

MuzychukAudit audit_muzychuk(const AbelianGroup& h, const CorpusSpec& spec, int jobs,
                             PhiVariant variant) {
  PairBasis basis = pair_basis(h);
  const std::uint64_t total = mask_count(basis);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
  if (spec.exhaustive) {
    if (basis.reps.size() > 16)
      throw std::invalid_argument("exhaustive pair corpus too large; use sampling");
    std::map<std::size_t, std::vector<std::uint64_t>> by_degree;
    for (std::uint64_t mask = 0; mask < total; ++mask)
      by_degree[set_from_mask(h, basis, mask).size()].push_back(mask);
    for (const auto& [deg, masks] : by_degree)
      for (std::uint64_t m1 : masks)
        for (std::uint64_t m2 : masks) pairs.emplace_back(m1, m2);
  } else {
    // same-degree partner: matching pair count and involution choice
    std::mt19937_64 rng(spec.seed);
    auto bounded = [&](std::uint64_t n) {
      const std::uint64_t limit = n * (UINT64_MAX / n);
      std::uint64_t r;
      do {
        r = rng();
      } while (r >= limit);
      return r % n;
    };
    std::vector<int> pair_idx, invol_idx;
    for (std::size_t i = 0; i < basis.reps.size(); ++i)
      (h.neg(basis.reps[i]) == basis.reps[i] ? invol_idx : pair_idx).push_back(int(i));
    for (long long n = 0; n < spec.sample; ++n) {
      std::uint64_t m1 = bounded(total);
      int k = 0;
      std::uint64_t invol_bits = 0;
      for (std::size_t i = 0; i < basis.reps.size(); ++i)
        if (m1 & (std::uint64_t(1) << i)) {
          if (h.neg(basis.reps[i]) == basis.reps[i])
            invol_bits |= std::uint64_t(1) << i;
          else
            ++k;
        }
      // random mask with the same pair count and the same involution bits
      std::vector<int> chosen = pair_idx;
      for (int i = 0; i < k; ++i)
        std::swap(chosen[i], chosen[i + bounded(chosen.size() - i)]);
      std::uint64_t m2 = invol_bits;
      for (int i = 0; i < k; ++i) m2 |= std::uint64_t(1) << chosen[i];
      pairs.emplace_back(m1, m2);
    }
  }

  struct PairOutcome {
    bool agree = true;
    std::vector<Violation> violations;
  };
  std::vector<PairOutcome> outcomes =
      parallel_map(pairs, jobs, [&](const std::pair<std::uint64_t, std::uint64_t>& pr) {
        PairOutcome out;
        std::vector<Elem> e1 = set_from_mask(h, basis, pr.first);
        std::vector<Elem> e2 = set_from_mask(h, basis, pr.second);
        ConnectionSet s1 = make_connection_set(h, e1);
        ConnectionSet s2 = make_connection_set(h, e2);
        const std::string tag = "group=" + h.spec_string() + " set=" + set_to_string(e1) +
                                " set2=" + set_to_string(e2);
        IsoResult iso = muzychuk_iso(h, s1, s2, variant);
        Graph g1 = build_cayley(h, s1);
        Graph g2 = build_cayley(h, s2);
        std::optional<Perm> oracle = brute_force_iso(g1, g2);
        if (oracle && !is_graph_iso(g1, g2, *oracle)) {
          out.agree = false;
          out.violations.push_back({tag, "oracle bijection fails the edge check"});
        }
        if (iso.isomorphic != oracle.has_value()) {
          out.agree = false;
          out.violations.push_back(
              {tag, std::string("criterion says ") + (iso.isomorphic ? "iso" : "non-iso") +
                        ", oracle says " + (oracle ? "iso" : "non-iso") +
                        " (keys " + iso.key_s.to_string() + " vs " + iso.key_s2.to_string() +
                        ")"});
        }
        return out;
      });

  MuzychukAudit result;
  result.pairs = static_cast<long long>(pairs.size());
  for (const PairOutcome& o : outcomes) {
    if (o.agree) ++result.agreements;
    for (const Violation& v : o.violations) result.violations.push_back(v);
  }
  return result;
}

Prop57Audit audit_prop57(long long p, int e, PhiVariant variant) {
  long long pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;
  AbelianGroup h({2 * pe});
  Cyclic2peView view = cyclic_2pe_view(h);
  Prop57Audit out;
  for (const PrimaryKey& key : key_lattice(e)) {
    Partition part = key_partition(h, key);
    for (const GenMultiplier& m : multipliers_for_key(p, e, key)) {
      Perm phi = phi_map(h, m, variant);
      const std::string tag = "p^e=" + std::to_string(pe) + " key=" + key.to_string() +
                              " m=" + m.to_string();
      if (phi[0] != 0 || phi[view.b] != view.b)
        out.violations.push_back({tag, "phi moves the identity or the involution"});
      for (const std::vector<Elem>& cls : part.classes) {
        long long order = h.element_order(cls.front());
        int level = 0;
        while (order % p == 0) {
          order /= p;
          ++level;
        }
        ++out.checks;
        if (level == 0) continue;  // the two singletons, already checked
        Bitset lhs(int(h.order())), rhs(int(h.order()));
        for (Elem x : cls) {
          lhs.set(phi[x]);
          rhs.set(h.mul(m.m[level - 1], x));
        }
        if (!(lhs == rhs))
          out.violations.push_back(
              {tag, "class of " + std::to_string(cls.front()) + " at level " +
                        std::to_string(level) + ": phi image differs from the power map"});
      }
    }
  }
  return out;
}

}  // namespace caylab
