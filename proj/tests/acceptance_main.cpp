// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failed criteria. Usage: caylab_acceptance [path-to-caylab-cli]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "caylab/audit.hpp"

using namespace caylab;
using Clock = std::chrono::steady_clock;

namespace {

int worker_count() {
  if (const char* env = std::getenv("CAYLAB_JOBS")) {
    int j = std::atoi(env);
    if (j >= 1) return j;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 2 : int(hw);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Reporter {
  int failures = 0;
  Clock::time_point started = Clock::now();

  void line(int idx, const std::string& name, bool pass, const std::string& detail) {
    double secs = std::chrono::duration<double>(Clock::now() - started).count();
    std::printf("[%s] %2d. %s — %s [t=%.1fs]\n", pass ? "PASS" : "FAIL", idx, name.c_str(),
                detail.c_str(), secs);
    std::fflush(stdout);
    if (!pass) ++failures;
  }
};

long long count_violations(const std::vector<Violation>& vs, const std::string& prefix,
                           std::string& first) {
  long long n = 0;
  for (const Violation& v : vs)
    if (v.what.rfind(prefix, 0) == 0) {
      if (n == 0) first = v.instance + ": " + v.what;
      ++n;
    }
  return n;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  const int jobs = worker_count();
  Reporter r;
  std::printf("acceptance suite, %d workers\n", jobs);

  // ---- instance corpora for criteria 1-4 (brute vs criterion vs orbit) ----
  struct CorpusRun {
    std::string label;
    InstanceAuditResult result;
  };
  std::vector<CorpusRun> runs14;
  {
    InstanceAuditConfig cfg;
    cfg.check_main1 = true;
    cfg.check_main4 = true;
    auto run = [&](const std::string& label, const std::string& group, long long sample,
                   std::uint64_t seed) {
      AbelianGroup h = parse_group(group);
      CorpusSpec spec;
      spec.exhaustive = sample <= 0;
      spec.sample = sample;
      spec.seed = seed;
      runs14.push_back({label, run_instance_audit(h, spec, cfg, jobs)});
    };
    run("Z18", "Z18", 0, 0);
    run("Z10", "Z10", 0, 0);
    run("Z14", "Z14", 0, 0);
    run("Z50", "Z50", 1500, 1001);
    run("Z54", "Z54", 1500, 1002);
  }

  auto main4_ok = [&](const CorpusRun& cr, std::string& detail) {
    std::string first;
    long long bad = count_violations(cr.result.violations, "main4:", first);
    detail += cr.label + ": in_scope=" + std::to_string(cr.result.in_scope) +
              " unstable=" + std::to_string(cr.result.unstable) +
              " agree=" + std::to_string(cr.result.agreements) + "/" +
              std::to_string(cr.result.applicable) + "  ";
    if (bad > 0) detail += "FIRST: " + first + "  ";
    return bad == 0 && cr.result.applicable == cr.result.in_scope &&
           cr.result.agreements == cr.result.applicable;
  };

  {
    std::string detail;
    bool ok = main4_ok(runs14[0], detail);
    r.line(1, "order-18 criterion agreement (exhaustive 512 sets)", ok, detail);
  }
  {
    std::string detail;
    bool ok = main4_ok(runs14[1], detail) && main4_ok(runs14[2], detail);
    r.line(2, "order-10/14 criterion agreement (exhaustive)", ok, detail);
  }
  {
    std::string detail;
    bool ok = main4_ok(runs14[3], detail) && main4_ok(runs14[4], detail) &&
              runs14[3].result.in_scope >= 500 && runs14[4].result.in_scope >= 500;
    r.line(3, "order-50/54 criterion agreement (>=500 samples each)", ok, detail);
  }
  {
    std::string detail;
    bool ok = true;
    for (const CorpusRun& cr : runs14) {
      std::string first;
      long long bad = count_violations(cr.result.violations, "main1:", first);
      if (bad > 0) {
        ok = false;
        detail += cr.label + " FIRST: " + first + "  ";
      }
    }
    detail += "instances=" +
              std::to_string(runs14[0].result.in_scope + runs14[1].result.in_scope +
                             runs14[2].result.in_scope + runs14[3].result.in_scope +
                             runs14[4].result.in_scope);
    r.line(4, "orbit-of-a witness equals brute instability everywhere", ok, detail);
  }

  // ---- criteria 5-6: odd-order groups, twins and wreath decompositions ----
  {
    InstanceAuditConfig cfg;
    cfg.check_wm = true;
    cfg.check_main2 = true;
    std::vector<CorpusRun> runs;
    auto run = [&](const std::string& group, long long sample, std::uint64_t seed) {
      AbelianGroup h = parse_group(group);
      CorpusSpec spec;
      spec.exhaustive = sample <= 0;
      spec.sample = sample;
      spec.seed = seed;
      runs.push_back({group, run_instance_audit(h, spec, cfg, jobs)});
    };
    run("Z9", 0, 0);
    run("Z15", 0, 0);
    run("3x3", 0, 0);
    run("Z27", 1000, 1003);

    std::string detail5, detail6;
    bool ok5 = true, ok6 = true;
    long long unstable = 0;
    for (const CorpusRun& cr : runs) {
      unstable += cr.result.unstable;
      std::string first;
      if (count_violations(cr.result.violations, "wm:", first) > 0) {
        ok5 = false;
        detail5 += cr.label + " FIRST: " + first + "  ";
      }
      if (count_violations(cr.result.violations, "main2:", first) > 0 ||
          count_violations(cr.result.violations, "module:", first) > 0) {
        ok6 = false;
        detail6 += cr.label + " FIRST: " + first + "  ";
      }
      detail5 += cr.label + ":" + std::to_string(cr.result.unstable) + "-unstable/" +
                 std::to_string(cr.result.in_scope) + "  ";
    }
    ok5 = ok5 && runs[3].result.in_scope >= 300;
    r.line(5, "unstable odd-order instances all have twins", ok5, detail5);
    r.line(6, "unstable odd-order modules decompose as H/L-wreath (L != 1)", ok6,
           detail5 + detail6);
  }

  // ---- criterion 7: twice-odd cyclic structure of the class of a ----
  {
    InstanceAuditConfig cfg;
    cfg.check_main3 = true;
    std::string detail;
    bool ok = true;
    for (auto [group, sample, seed] :
         {std::tuple<std::string, long long, std::uint64_t>{"Z18", 0, 0}, {"Z54", 400, 1004}}) {
      AbelianGroup h = parse_group(group);
      CorpusSpec spec;
      spec.exhaustive = sample <= 0;
      spec.sample = sample;
      spec.seed = seed;
      InstanceAuditResult audit = run_instance_audit(h, spec, cfg, jobs);
      std::string first;
      long long bad = count_violations(audit.violations, "main3:", first) +
                      count_violations(audit.violations, "module:", first);
      detail += group + ": in_scope=" + std::to_string(audit.in_scope) +
                " unstable=" + std::to_string(audit.unstable) + "  ";
      if (bad > 0) {
        ok = false;
        detail += "FIRST: " + first + "  ";
      }
    }
    r.line(7, "{a,ab} basic or V != 1, and the class of a has an admissible shape", ok,
           detail);
  }

  // ---- criterion 8: S-system constructions match the exhaustive oracle ----
  {
    std::string detail;
    bool ok = true;
    for (const std::string& group : {std::string("Z3"), std::string("Z5"), std::string("Z7"), std::string("Z9")}) {
      PoschelAudit audit = audit_poschel(parse_group(group));
      detail += group + ": ssystems=" + std::to_string(audit.ssystems) +
                " brute=" + std::to_string(audit.brute_rings) + "  ";
      if (!audit.equal || !audit.violations.empty()) {
        ok = false;
        if (!audit.violations.empty())
          detail += "FIRST: " + audit.violations.front().what + "  ";
      }
    }
    r.line(8, "all S-rings over Z_p^e arise from S-systems (desk scale)", ok, detail);
  }

  // ---- criterion 9: isomorphism criterion vs the explicit oracle ----
  {
    std::string detail;
    bool ok = true;
    {
      AbelianGroup z18 = parse_group("Z18");
      CorpusSpec spec;  // exhaustive pairs
      MuzychukAudit audit = audit_muzychuk(z18, spec, jobs);
      detail += "Z18: pairs=" + std::to_string(audit.pairs) +
                " agree=" + std::to_string(audit.agreements) + "  ";
      if (!audit.violations.empty()) {
        ok = false;
        detail += "FIRST: " + audit.violations.front().instance + ": " +
                  audit.violations.front().what + "  ";
      }
    }
    for (auto [group, seed] :
         {std::pair<std::string, std::uint64_t>{"Z50", 1005}, {"Z54", 1006}}) {
      AbelianGroup h = parse_group(group);
      CorpusSpec spec;
      spec.exhaustive = false;
      spec.sample = 200;
      spec.seed = seed;
      MuzychukAudit audit = audit_muzychuk(h, spec, jobs);
      detail += group + ": pairs=" + std::to_string(audit.pairs) +
                " agree=" + std::to_string(audit.agreements) + "  ";
      if (!audit.violations.empty()) {
        ok = false;
        detail += "FIRST: " + audit.violations.front().instance + ": " +
                  audit.violations.front().what + "  ";
      }
    }
    r.line(9, "key/multiplier isomorphism criterion matches the oracle", ok, detail);
  }

  // ---- criterion 10: phi acts as the level power map on key classes ----
  {
    std::string detail;
    bool ok = true;
    for (auto [p, e] : {std::pair<long long, int>{3, 2}, {5, 2}}) {
      Prop57Audit audit = audit_prop57(p, e, PhiVariant::crt);
      detail += "p^e=" + std::to_string(p) + "^" + std::to_string(e) +
                ": checks=" + std::to_string(audit.checks) + "  ";
      if (!audit.violations.empty()) {
        ok = false;
        detail += "FIRST: " + audit.violations.front().what + "  ";
      }
    }
    r.line(10, "multiplier action on key partitions (all keys, all multipliers)", ok,
           detail);
  }

  // ---- criterion 11: S-ring axiom suite on every enumerated ring ----
  {
    std::string detail;
    bool ok = true;
    long long rings = 0;
    for (const std::string& group : {std::string("Z3"), std::string("Z5"), std::string("Z7"), std::string("Z9")}) {
      AbelianGroup h = parse_group(group);
      for (const SRing& ring : brute_force_srings(h)) {
        ++rings;
        std::vector<std::string> bad = sring_axiom_violations(ring);
        if (!bad.empty()) {
          ok = false;
          detail += group + " FIRST: " + bad.front() + "  ";
        }
      }
    }
    for (auto [p, e] : {std::pair<long long, int>{3, 2}, {3, 3}, {5, 2}}) {
      long long pe = 1;
      for (int i = 0; i < e; ++i) pe *= p;
      AbelianGroup h({pe});
      for (const SSystem& s : enumerate_ssystems(p, e)) {
        ++rings;
        std::vector<std::string> bad = sring_axiom_violations(build_ssystem_partition(h, s));
        if (!bad.empty()) {
          ok = false;
          detail += s.to_string() + " FIRST: " + bad.front() + "  ";
        }
      }
    }
    {
      AbelianGroup z18 = parse_group("Z18");
      CorpusSpec spec;
      InstanceAuditConfig cfg;
      cfg.check_axioms = true;
      InstanceAuditResult audit = run_instance_audit(z18, spec, cfg, jobs);
      rings += audit.in_scope;
      std::string first;
      if (count_violations(audit.violations, "axioms:", first) > 0 ||
          count_violations(audit.violations, "module:", first) > 0) {
        ok = false;
        detail += "Z18 modules FIRST: " + first + "  ";
      }
    }
    detail += "rings_checked=" + std::to_string(rings);
    r.line(11, "axiom suite: Wielandt axioms, multiplier closures, coset constancy", ok,
           detail);
  }

  // ---- criterion 12: byte-identical enumerate output across worker counts ----
  {
    std::string detail;
    bool ok = false;
    if (cli.empty()) {
      detail = "no CLI path given";
    } else {
      std::vector<std::string> outputs;
      ok = true;
      for (int j : {1, 4, 8}) {
        std::string path = "acceptance_enum_j" + std::to_string(j) + ".jsonl";
        std::string cmd =
            cli + " enumerate --group Z18 --jobs " + std::to_string(j) + " --output " + path;
        int rc = std::system(cmd.c_str());
        if (rc != 0) {
          ok = false;
          detail += "exit code " + std::to_string(rc) + " for jobs=" + std::to_string(j) + "  ";
        }
        outputs.push_back(slurp(path));
        std::remove(path.c_str());
      }
      if (ok) {
        ok = !outputs[0].empty() && outputs[0] == outputs[1] && outputs[0] == outputs[2];
        detail += ok ? "identical across jobs 1/4/8, " +
                           std::to_string(outputs[0].size()) + " bytes"
                     : "outputs differ across worker counts";
      }
    }
    r.line(12, "deterministic enumerate output across jobs {1,4,8}", ok, detail);
  }

  std::printf("%s: %d/12 criteria passed\n", r.failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              12 - r.failures);
  return r.failures;
}
