#include "caylab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "caylab/audit.hpp"
#include "caylab/isotest.hpp"

namespace caylab {

namespace {

std::vector<Elem> parse_set(const std::string& text) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument("");
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad set element: " + tok);
    }
  }
  return out;
}

int default_jobs() {
  if (const char* env = std::getenv("CAYLAB_JOBS")) {
    int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

struct Output {
  std::ofstream file;
  bool to_file = false;

  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      if (!file) throw std::invalid_argument("cannot open output file: " + path);
      to_file = true;
    }
  }
  std::ostream& stream() { return to_file ? static_cast<std::ostream&>(file) : std::cout; }
};

int cmd_analyze(const std::string& group, const std::string& set, PhiVariant phi,
                const std::string& output) {
  AbelianGroup h = parse_group(group);
  AnalyzeOptions opts;
  opts.phi = phi;
  InstanceAnalysis a = analyze_instance(h, parse_set(set), opts);
  Output out(output);
  out.stream() << to_json_line(a) << '\n';
  return 0;
}

int cmd_enumerate(const std::string& group, long long sample, std::uint64_t seed, int jobs,
                  bool dedupe, PhiVariant phi, const std::string& output) {
  AbelianGroup h = parse_group(group);
  CorpusSpec spec;
  spec.exhaustive = sample <= 0;
  spec.sample = sample;
  spec.seed = seed;
  spec.dedupe = dedupe;
  Corpus corpus = build_corpus(h, spec);
  PairBasis basis = pair_basis(h);
  std::vector<std::uint64_t> in_scope;
  for (auto [mask, scope] : corpus.masks)
    if (scope) in_scope.push_back(mask);

  AnalyzeOptions opts;
  opts.phi = phi;
  std::vector<InstanceAnalysis> rows =
      parallel_map(in_scope, jobs, [&](std::uint64_t mask) {
        return analyze_instance(h, set_from_mask(h, basis, mask), opts);
      });

  long long stable = 0, unstable = 0, applicable = 0, agreements = 0;
  Output out(output);
  for (const InstanceAnalysis& a : rows) {
    out.stream() << to_json_line(a) << '\n';
    (a.stable ? stable : unstable) += 1;
    if (a.criterion.applicable) {
      ++applicable;
      if (a.agreement) ++agreements;
    }
  }
  out.stream() << "# group=" << h.spec_string() << " considered=" << corpus.considered()
               << " in_scope=" << rows.size()
               << " out_of_scope=" << corpus.considered() - long(rows.size())
               << " stable=" << stable << " unstable=" << unstable
               << " criterion_applicable=" << applicable << " agreements=" << agreements
               << " disagreements=" << applicable - agreements << '\n';
  return applicable == agreements ? 0 : 1;
}

int cmd_iso(int n, const std::string& set, const std::string& set2, PhiVariant phi,
            const std::string& output) {
  AbelianGroup h({n});
  ConnectionSet s1 = make_connection_set(h, parse_set(set));
  ConnectionSet s2 = make_connection_set(h, parse_set(set2));
  IsoResult iso = muzychuk_iso(h, s1, s2, phi);
  nlohmann::ordered_json j;
  j["isomorphic"] = iso.isomorphic;
  if (iso.witness_multiplier) j["witness_multiplier"] = iso.witness_multiplier->m;
  j["keys"]["set"] = iso.key_s.k;
  j["keys"]["set2"] = iso.key_s2.k;
  Output out(output);
  out.stream() << j.dump() << '\n';
  return 0;
}

int cmd_srings(const std::string& group, bool json, const std::string& output) {
  AbelianGroup h = parse_group(group);
  Output out(output);
  auto emit = [&](int idx, int total, const SRing& ring, const std::string& params) {
    if (json) {
      nlohmann::ordered_json j;
      j["index"] = idx;
      j["rank"] = ring.rank();
      if (!params.empty()) j["ssystem"] = params;
      j["classes"] = ring.partition().classes;
      out.stream() << j.dump() << '\n';
    } else {
      out.stream() << "# S-ring " << idx << " of " << total;
      if (!params.empty()) out.stream() << ": " << params;
      out.stream() << " rank=" << ring.rank() << '\n' << ring.partition().dump() << '\n';
    }
  };
  if (h.is_cyclic() && as_odd_prime_power(h.order())) {
    auto pp = as_odd_prime_power(h.order());
    std::vector<SSystem> systems = enumerate_ssystems(pp->first, pp->second);
    int idx = 0;
    for (const SSystem& s : systems)
      emit(++idx, int(systems.size()), build_ssystem_partition(h, s), s.to_string());
    return 0;
  }
  std::vector<SRing> rings = brute_force_srings(h);  // throws above the cap
  int idx = 0;
  for (const SRing& ring : rings) emit(++idx, int(rings.size()), ring, "");
  return 0;
}

int cmd_verify(const std::string& theorem, const std::string& group, long long sample,
               std::uint64_t seed, int jobs, PhiVariant phi, bool json,
               const std::string& output) {
  AbelianGroup h = parse_group(group);
  Output out(output);
  CorpusSpec spec;
  spec.exhaustive = sample <= 0;
  spec.sample = sample;
  spec.seed = seed;

  std::vector<Violation> violations;
  long long instances = 0;
  std::string extra;

  if (theorem == "poschel") {
    PoschelAudit audit = audit_poschel(h);
    violations = audit.violations;
    instances = audit.brute_rings;
    extra = " ssystems=" + std::to_string(audit.ssystems) +
            " brute_rings=" + std::to_string(audit.brute_rings) +
            " equal=" + (audit.equal ? "yes" : "no");
  } else if (theorem == "muzychuk") {
    MuzychukAudit audit = audit_muzychuk(h, spec, jobs, phi);
    violations = audit.violations;
    instances = audit.pairs;
    extra = " pairs=" + std::to_string(audit.pairs) +
            " agreements=" + std::to_string(audit.agreements);
  } else if (theorem == "prop5_7") {
    auto pp = as_odd_prime_power(h.order() % 2 == 0 ? h.order() / 2 : 0);
    if (!pp || !h.is_cyclic())
      throw std::invalid_argument("prop5_7 needs a cyclic group of order 2p^e");
    Prop57Audit audit = audit_prop57(pp->first, pp->second, phi);
    violations = audit.violations;
    instances = audit.checks;
    extra = " checks=" + std::to_string(audit.checks);
  } else {
    InstanceAuditConfig cfg;
    cfg.phi = phi;
    if (theorem == "main1") {
      cfg.check_main1 = true;
    } else if (theorem == "main2") {
      if (h.order() % 2 == 0) throw std::invalid_argument("main2 needs an odd-order group");
      cfg.check_main2 = true;
    } else if (theorem == "wm") {
      if (h.order() % 2 == 0) throw std::invalid_argument("wm needs an odd-order group");
      cfg.check_wm = true;
    } else if (theorem == "main3") {
      if (!h.is_cyclic() || h.order() % 2 != 0 || (h.order() / 2) % 2 == 0)
        throw std::invalid_argument("main3 needs a cyclic group of twice odd order");
      cfg.check_main3 = true;
    } else if (theorem == "main4") {
      if (!h.is_cyclic() || h.order() % 2 != 0 || !as_odd_prime_power(h.order() / 2))
        throw std::invalid_argument("main4 needs a cyclic group of order 2p^e");
      cfg.check_main4 = true;
    } else {
      throw std::invalid_argument("unknown theorem: " + theorem);
    }
    InstanceAuditResult audit = run_instance_audit(h, spec, cfg, jobs);
    violations = audit.violations;
    instances = audit.in_scope;
    extra = " considered=" + std::to_string(audit.considered) +
            " unstable=" + std::to_string(audit.unstable);
    if (theorem == "main4") extra += " agreements=" + std::to_string(audit.agreements);
  }

  if (json) {
    for (const Violation& v : violations) {
      nlohmann::ordered_json j;
      j["violation"] = v.what;
      j["instance"] = v.instance;
      out.stream() << j.dump() << '\n';
    }
    nlohmann::ordered_json summary;
    summary["theorem"] = theorem;
    summary["group"] = h.spec_string();
    summary["violations"] = violations.size();
    summary["instances"] = instances;
    out.stream() << summary.dump() << '\n';
  } else {
    for (const Violation& v : violations)
      out.stream() << "VIOLATION " << v.instance << ": " << v.what << '\n';
    out.stream() << violations.size() << " violations / " << instances << " instances"
                 << " (theorem=" << theorem << " group=" << h.spec_string() << extra << ")\n";
  }
  return violations.empty() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  std::vector<std::string> argv_store;
  argv_store.push_back("caylab");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : argv_store) argv.push_back(s.data());
  return run_cli(int(argv.size()), argv.data());
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Cayley graph stability via Schur rings"};
  app.require_subcommand(1);

  std::string group, set, set2, theorem, output;
  int n = 0;
  long long sample = 0;
  std::uint64_t seed = 0;
  int jobs = default_jobs();
  bool dedupe = false;
  bool literal_phi = false;
  bool json = false;

  auto add_common = [&](CLI::App* cmd, bool with_phi = true) {
    cmd->add_option("--output", output, "write output to a file instead of stdout");
    if (with_phi)
      cmd->add_flag("--debug-literal-phi", literal_phi,
                    "use the literal odd-coordinate reading of phi (comparison only)");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "stability report for one connection set");
  analyze->add_option("--group", group, "group spec, e.g. Z18 or 3x9")->required();
  analyze->add_option("--set", set, "comma-separated residues")->required();
  add_common(analyze);

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "stability reports for all or sampled connection sets");
  enumerate->add_option("--group", group)->required();
  enumerate->add_option("--sample", sample, "number of in-scope instances to sample");
  enumerate->add_option("--seed", seed, "sampling seed");
  enumerate->add_option("--jobs", jobs, "worker count (default CAYLAB_JOBS or 1)");
  enumerate->add_flag("--dedupe", dedupe, "keep only multiplier-canonical sets");
  add_common(enumerate);

  CLI::App* iso = app.add_subcommand("iso", "circulant isomorphism test for order 2p^e");
  iso->add_option("--n", n, "group order")->required();
  iso->add_option("--set", set)->required();
  iso->add_option("--set2", set2)->required();
  add_common(iso);

  CLI::App* srings = app.add_subcommand("srings", "enumerate S-rings over the group");
  srings->add_option("--group", group)->required();
  srings->add_flag("--json", json, "emit JSON lines instead of partition dumps");
  add_common(srings, false);

  CLI::App* verify = app.add_subcommand("verify", "run a theorem audit and print violations");
  verify
      ->add_option("--theorem", theorem,
                   "one of main1, main2, main3, main4, wm, poschel, muzychuk, prop5_7")
      ->required();
  verify->add_option("--group", group)->required();
  verify->add_option("--sample", sample);
  verify->add_option("--seed", seed);
  verify->add_option("--jobs", jobs);
  verify->add_flag("--json", json, "emit violations and the summary as JSON lines");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  PhiVariant phi = literal_phi ? PhiVariant::literal : PhiVariant::crt;
  jobs = std::max(1, jobs);
  try {
    if (analyze->parsed()) return cmd_analyze(group, set, phi, output);
    if (enumerate->parsed()) return cmd_enumerate(group, sample, seed, jobs, dedupe, phi, output);
    if (iso->parsed()) return cmd_iso(n, set, set2, phi, output);
    if (srings->parsed()) return cmd_srings(group, json, output);
    if (verify->parsed())
      return cmd_verify(theorem, group, sample, seed, jobs, phi, json, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace caylab
