#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "caylab/enumerate.hpp"
#include "caylab/poschel.hpp"
#include "caylab/stability.hpp"

namespace caylab {

struct CorpusSpec {
  bool exhaustive = true;
  long long sample = 0;  // in-scope instances wanted, when sampling
  std::uint64_t seed = 0;
  bool dedupe = false;
};

// Connection-set corpus over a group: considered masks in draw order with
// their scope flags. Sampling draws until `sample` in-scope instances are
// found or the space is exhausted.
struct Corpus {
  std::vector<std::pair<std::uint64_t, bool>> masks;  // (mask, in_scope)
  long long considered() const { return static_cast<long long>(masks.size()); }
};
Corpus build_corpus(const AbelianGroup& h, const CorpusSpec& spec);

struct Violation {
  std::string instance;
  std::string what;
};

struct InstanceAuditConfig {
  bool check_main1 = false;  // instability iff the class of a exceeds {a}
  bool check_main2 = false;  // unstable over odd H: module is an H/L-wreath, L != 1
  bool check_main3 = false;  // twice-odd cyclic H: {a,ab} class or V != 1; T-shape
  bool check_main4 = false;  // order-2p^e criterion agrees with brute force
  bool check_wm = false;     // unstable over odd H: the graph has twins
  bool check_axioms = false; // transitivity module passes the S-ring axiom suite
  PhiVariant phi = PhiVariant::crt;
};

struct InstanceAuditResult {
  long long considered = 0;
  long long in_scope = 0;
  long long unstable = 0;
  long long applicable = 0;
  long long agreements = 0;
  std::vector<Violation> violations;
};

InstanceAuditResult run_instance_audit(const AbelianGroup& h, const CorpusSpec& corpus,
                                       const InstanceAuditConfig& cfg, int jobs);

// Wielandt axioms, multiplier closures (both power maps and the prime
// condensations), and coset intersection constancy for one ring.
std::vector<std::string> sring_axiom_violations(const SRing& a);

struct PoschelAudit {
  long long ssystems = 0;
  long long brute_rings = 0;
  bool equal = false;
  std::vector<Violation> violations;
};
// Set equality between the S-system constructions and the exhaustive
// partition search over a cyclic group of odd prime-power order <= 10.
PoschelAudit audit_poschel(const AbelianGroup& g);

struct MuzychukAudit {
  long long pairs = 0;
  long long agreements = 0;
  std::vector<Violation> violations;
};
// Key/multiplier isomorphism criterion vs the explicit search, over all
// ordered equal-degree pairs (exhaustive) or seeded samples.
MuzychukAudit audit_muzychuk(const AbelianGroup& h, const CorpusSpec& pairs, int jobs,
                             PhiVariant variant = PhiVariant::crt);

struct Prop57Audit {
  long long checks = 0;
  std::vector<Violation> violations;
};
// phi acts on every key-partition class as the plain power map of the
// matching level, for every key and compatible multiplier.
Prop57Audit audit_prop57(long long p, int e, PhiVariant variant = PhiVariant::crt);

std::string set_to_string(const std::vector<Elem>& set);

}  // namespace caylab
