#pragma once

#include <optional>
#include <string>

#include "caylab/isotest.hpp"
#include "caylab/sring.hpp"

namespace caylab {

struct Cond1 {
  bool holds = false;
  std::optional<Elem> witness_h;
};

struct Cond2 {
  bool holds = false;
  std::optional<GenMultiplier> witness_multiplier;
};

// Order-2p^e instability criterion: unstable iff the odd-part slice of the
// connection set has a nontrivial radical (e > 1 only), or shifting by the
// involution gives an isomorphic graph.
struct Criterion2pe {
  bool applicable = false;
  Cond1 cond1;
  Cond2 cond2;
  bool unstable() const { return cond1.holds || cond2.holds; }
};

struct BruteStability {
  BigInt aut_order;
  BigInt dc_aut_order;
  bool stable = false;
};

// Ground truth: stable iff |Aut(double cover)| = 2 |Aut(graph)|; requires a
// connected non-bipartite input.
BruteStability brute_stability(const AbelianGroup& h, const ConnectionSet& s);

struct SRingWitness {
  SRing module;  // transitivity module over H x Z2
  Elem a;
  std::vector<Elem> orbit_of_a;
  bool orbit_trivial() const { return orbit_of_a.size() == 1; }
};

// The S-ring witness: the graph is unstable iff the class of a in the
// transitivity module of Aut(Cay(H x Z2, Sa)) is larger than {a}.
SRingWitness sring_witness(const AbelianGroup& h, const ConnectionSet& s);

Criterion2pe criterion_2pe(const AbelianGroup& h, const ConnectionSet& s,
                           PhiVariant variant = PhiVariant::crt);

struct AnalyzeOptions {
  PhiVariant phi = PhiVariant::crt;
  bool with_module = false;
};

struct InstanceAnalysis {
  std::string group_spec;
  std::vector<Elem> set;
  bool connected = false;
  bool bipartite = false;
  bool in_scope = false;  // connected and non-bipartite

  // set only when in scope
  BigInt aut_order;
  BigInt dc_aut_order;
  bool stable = false;
  std::vector<Elem> orbit_of_a;
  Criterion2pe criterion;
  bool agreement = true;

  // extras
  std::optional<SRing> module;          // over H x Z2, when requested
  std::optional<AbelianGroup> dc_group;
  Elem a = -1;
};

InstanceAnalysis analyze_instance(const AbelianGroup& h, const std::vector<Elem>& set,
                                  const AnalyzeOptions& opts = {});

// JSON line per the report interface; group orders as decimal strings.
std::string to_json_line(const InstanceAnalysis& a);

}  // namespace caylab
