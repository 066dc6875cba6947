#include "caylab/stability.hpp"

#include <stdexcept>

#include "json.hpp"

namespace caylab {

namespace {

void require_in_scope(const AbelianGroup& h, const ConnectionSet& s) {
  GraphProps props = graph_properties(build_cayley(h, s));
  if (!props.connected) throw std::invalid_argument("out of scope: graph is disconnected");
  if (props.bipartite) throw std::invalid_argument("out of scope: graph is bipartite");
}

}  // namespace

BruteStability brute_stability(const AbelianGroup& h, const ConnectionSet& s) {
  require_in_scope(h, s);
  Graph graph = build_cayley(h, s);
  BruteStability out;
  out.aut_order = automorphism_generators(graph).order();
  DoubleCover dc = double_cover(h, s);
  out.dc_aut_order = automorphism_generators(dc.graph).order();
  if (out.dc_aut_order < 2 * out.aut_order)
    throw std::logic_error("double cover lost the natural automorphisms");
  out.stable = out.dc_aut_order == 2 * out.aut_order;
  return out;
}

SRingWitness sring_witness(const AbelianGroup& h, const ConnectionSet& s) {
  require_in_scope(h, s);
  DoubleCover dc = double_cover(h, s);
  PermGroup aut = automorphism_generators(dc.graph);
  SRing module = transitivity_module(dc.group, aut);
  std::vector<Elem> orbit = module.cls(module.class_of(dc.a));
  return SRingWitness{std::move(module), dc.a, std::move(orbit)};
}

Criterion2pe criterion_2pe(const AbelianGroup& h, const ConnectionSet& s, PhiVariant variant) {
  require_in_scope(h, s);
  Cyclic2peView view = cyclic_2pe_view(h);  // throws unless |H| = 2p^e
  Criterion2pe out;
  out.applicable = true;

  Subgroup h0 = odd_part_subgroup(h);
  Bitset slice = s.members & h0.members();
  if (slice.none()) throw std::logic_error("non-bipartite graph with empty odd-part slice");
  if (view.e > 1) {
    Subgroup rad = radical(h, slice);
    if (rad.order() > 1) {
      out.cond1.holds = true;
      out.cond1.witness_h = rad.elements()[1];  // least nonidentity member
    }
  }

  if (!s.contains(view.b)) {
    std::vector<Elem> shifted;
    shifted.reserve(s.elems.size());
    for (Elem x : s.elems) shifted.push_back(h.add(x, view.b));
    ConnectionSet sb = make_connection_set(h, shifted);
    IsoResult iso = muzychuk_iso(h, s, sb, variant);
    if (iso.isomorphic) {
      out.cond2.holds = true;
      out.cond2.witness_multiplier = iso.witness_multiplier;
    }
  }
  return out;
}

InstanceAnalysis analyze_instance(const AbelianGroup& h, const std::vector<Elem>& set,
                                  const AnalyzeOptions& opts) {
  InstanceAnalysis out;
  out.group_spec = h.spec_string();
  out.set = set;
  ConnectionSet s = make_connection_set(h, set);
  out.set = s.elems;

  Graph graph = build_cayley(h, s);
  GraphProps props = graph_properties(graph);
  out.connected = props.connected;
  out.bipartite = props.bipartite;
  out.in_scope = props.connected && !props.bipartite;
  if (!out.in_scope) return out;

  out.aut_order = automorphism_generators(graph).order();
  DoubleCover dc = double_cover(h, s);
  out.a = dc.a;
  PermGroup dc_aut = automorphism_generators(dc.graph);
  out.dc_aut_order = dc_aut.order();
  if (out.dc_aut_order < 2 * out.aut_order)
    throw std::logic_error("double cover lost the natural automorphisms");
  out.stable = out.dc_aut_order == 2 * out.aut_order;

  PermGroup stab = dc_aut.point_stabilizer(0);
  SRing module = SRing(
      dc.group, Partition::from_classes(int(dc.group.order()), stab.orbit_partition()));
  out.orbit_of_a = module.cls(module.class_of(dc.a));

  if (h.order() % 2 == 0 && h.is_cyclic() && as_odd_prime_power(h.order() / 2)) {
    out.criterion = criterion_2pe(h, s, opts.phi);
    out.agreement = out.criterion.unstable() == !out.stable;
  }

  if (opts.with_module) {
    out.dc_group = dc.group;
    out.module = std::move(module);
  }
  return out;
}

std::string to_json_line(const InstanceAnalysis& a) {
  nlohmann::ordered_json j;
  j["group"] = a.group_spec;
  j["set"] = a.set;
  j["connected"] = a.connected;
  j["bipartite"] = a.bipartite;
  if (!a.in_scope) {
    j["status"] = "out_of_scope";
    return j.dump();
  }
  j["aut_order"] = a.aut_order.str();
  j["dc_aut_order"] = a.dc_aut_order.str();
  j["stable"] = a.stable;
  nlohmann::ordered_json crit;
  crit["applicable"] = a.criterion.applicable;
  if (a.criterion.applicable) {
    nlohmann::ordered_json c1;
    c1["holds"] = a.criterion.cond1.holds;
    if (a.criterion.cond1.witness_h) c1["witness_h"] = *a.criterion.cond1.witness_h;
    nlohmann::ordered_json c2;
    c2["holds"] = a.criterion.cond2.holds;
    if (a.criterion.cond2.witness_multiplier)
      c2["witness_multiplier"] = a.criterion.cond2.witness_multiplier->m;
    crit["cond1"] = std::move(c1);
    crit["cond2"] = std::move(c2);
  }
  j["criterion"] = std::move(crit);
  j["agreement"] = a.agreement;
  return j.dump();
}

}  // namespace caylab
