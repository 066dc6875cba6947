#include "caylab/poschel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace caylab {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

long long p_part(long long n, long long p) {
  long long r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

long long pow_ll(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

long long pow_mod(long long b, long long e, long long mod) {
  long long r = 1 % mod;
  b %= mod;
  while (e > 0) {
    if (e & 1) r = r * b % mod;
    b = b * b % mod;
    e >>= 1;
  }
  return r;
}

// smallest primitive root mod p^i, p odd prime
long long primitive_root(long long p, int i) {
  long long mod = pow_ll(p, i);
  long long phi = pow_ll(p, i - 1) * (p - 1);
  for (long long w = 2; w < mod; ++w) {
    if (w % p == 0) continue;
    if (mult_order(w, mod) == phi) return w;
  }
  throw std::logic_error("no primitive root found");
}

}  // namespace

std::string SSystem::to_string() const {
  std::string s = "d=(";
  for (int i = 0; i < e; ++i) {
    if (i) s += ',';
    s += std::to_string(d[i]);
  }
  s += ") intervals=";
  for (auto [lo, hi] : intervals) {
    s += '{';
    for (int i = lo; i <= hi; ++i) {
      if (i > lo) s += ',';
      s += std::to_string(i);
    }
    s += '}';
  }
  return s;
}

SSystemCheck validate_ssystem(const SSystem& s) {
  if (s.p % 2 == 0 || !is_prime(s.p)) throw std::invalid_argument("p must be an odd prime");
  if (s.e < 1) throw std::invalid_argument("e must be >= 1");
  if (int(s.d.size()) != s.e) return {false, "divisor"};
  for (int i = 1; i <= s.e; ++i) {
    long long cap = pow_ll(s.p, i - 1) * (s.p - 1);
    if (s.d[i - 1] < 1 || cap % s.d[i - 1] != 0) return {false, "divisor"};
  }
  int expect = 1;
  for (auto [lo, hi] : s.intervals) {
    if (lo != expect || hi < lo) return {false, "intervals"};
    expect = hi + 1;
  }
  if (expect != s.e + 1) return {false, "intervals"};
  for (auto [lo, hi] : s.intervals)
    if (hi > lo)
      for (int i = lo; i <= hi; ++i)
        if (s.d[i - 1] != pow_ll(s.p, i - 1) * (s.p - 1)) return {false, "1"};
  for (int i = 2; i <= s.e; ++i) {
    long long prev_p = p_part(s.d[i - 2], s.p);
    long long cur_p = p_part(s.d[i - 1], s.p);
    if (prev_p > cur_p) return {false, "2"};
    if (cur_p < pow_ll(s.p, i - 1)) {
      // a partial p-part at level i needs level i-1 as its own interval:
      // a merged layer below forces full coset granularity above it
      bool prev_singleton = false;
      for (auto [lo, hi] : s.intervals)
        if (lo == i - 1 && hi == i - 1) prev_singleton = true;
      if (!prev_singleton) return {false, "3"};
      if (s.d[i - 2] / prev_p != s.d[i - 1] / cur_p) return {false, "3"};
    }
  }
  return {};
}

SRing build_ssystem_partition(const AbelianGroup& g, const SSystem& s) {
  SSystemCheck check = validate_ssystem(s);
  if (!check.ok) throw std::invalid_argument("invalid S-system: condition " + check.violated);
  const long long pe = pow_ll(s.p, s.e);
  if (g.order() != pe || !g.is_cyclic())
    throw std::invalid_argument("group is not cyclic of order p^e");

  // residues relative to a fixed generator
  Elem gen = -1;
  for (Elem x = 0; x < g.order() && gen < 0; ++x)
    if (g.element_order(x) == pe) gen = x;
  std::vector<Elem> element(pe);
  Elem cur = 0;
  for (long long r = 0; r < pe; ++r) {
    element[r] = cur;
    cur = g.add(cur, gen);
  }

  std::vector<std::vector<long long>> layer(s.e + 1);  // residues of order exactly p^i
  for (long long r = 1; r < pe; ++r) {
    long long o = pe / std::gcd(pe, r);
    int i = 0;
    while (o > 1) {
      o /= s.p;
      ++i;
    }
    layer[i].push_back(r);
  }

  std::vector<std::vector<Elem>> classes;
  classes.push_back({0});
  for (auto [lo, hi] : s.intervals) {
    if (hi > lo) {
      std::vector<Elem> merged;
      for (int i = lo; i <= hi; ++i)
        for (long long r : layer[i]) merged.push_back(element[r]);
      classes.push_back(std::move(merged));
      continue;
    }
    const int i = lo;
    const long long mod = pow_ll(s.p, i);
    const long long phi = pow_ll(s.p, i - 1) * (s.p - 1);
    const long long k0 = pow_mod(primitive_root(s.p, i), phi / s.d[i - 1], mod);
    std::vector<char> done(pe, 0);
    for (long long r : layer[i]) {
      if (done[r]) continue;
      std::vector<Elem> orbit;
      long long cur_r = r;
      do {
        done[cur_r] = 1;
        orbit.push_back(element[cur_r]);
        cur_r = cur_r * k0 % pe;
      } while (cur_r != r);
      classes.push_back(std::move(orbit));
    }
  }
  return SRing(g, Partition::from_classes(int(pe), std::move(classes)));
}

std::vector<SSystem> enumerate_ssystems(long long p, int e) {
  if (p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("p must be an odd prime");
  if (e < 1) throw std::invalid_argument("e must be >= 1");
  if (pow_ll(p, e) > AbelianGroup::kOrderCap) throw std::invalid_argument("p^e exceeds size cap");

  std::vector<std::vector<long long>> divisors(e + 1);
  for (int i = 1; i <= e; ++i) {
    long long cap = pow_ll(p, i - 1) * (p - 1);
    for (long long d = 1; d <= cap; ++d)
      if (cap % d == 0) divisors[i].push_back(d);
  }
  // interval partitions as compositions of e
  std::vector<std::vector<std::pair<int, int>>> partitions;
  for (int mask = 0; mask < (1 << (e - 1)); ++mask) {
    std::vector<std::pair<int, int>> iv;
    int lo = 1;
    for (int i = 1; i < e; ++i)
      if (mask & (1 << (i - 1))) {
        iv.emplace_back(lo, i);
        lo = i + 1;
      }
    iv.emplace_back(lo, e);
    partitions.push_back(std::move(iv));
  }

  std::vector<SSystem> out;
  std::vector<long long> d(e);
  auto rec = [&](auto&& self, int i) -> void {
    if (i > e) {
      for (const auto& iv : partitions) {
        SSystem s{p, e, d, iv};
        if (validate_ssystem(s).ok) out.push_back(std::move(s));
      }
      return;
    }
    for (long long di : divisors[i]) {
      d[i - 1] = di;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end(), [](const SSystem& a, const SSystem& b) {
    if (a.d != b.d) return a.d < b.d;
    return a.intervals < b.intervals;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

struct PartitionSearch {
  const AbelianGroup& g;
  int n;
  std::vector<std::vector<Elem>> blocks;
  std::vector<int> block_of;  // element -> block id, -1 unassigned
  std::vector<int> partner;   // block -> block holding the inverses, -1 unknown
  std::vector<SRing>* out;

  void run() { assign(1); }

  void assign(Elem x) {
    if (x == n) {
      finish();
      return;
    }
    Elem ix = g.neg(x);
    const int nblocks = int(blocks.size());
    for (int b = 0; b <= nblocks; ++b) {
      const bool created = b == nblocks;
      if (created) {
        blocks.emplace_back();
        partner.push_back(-1);
      }
      // inverse-closure pruning: blocks must pair up under negation
      const int required = (ix == x) ? b : (ix < x ? block_of[ix] : -1);
      bool ok = true;
      if (required != -1) {
        if (partner[b] != -1 && partner[b] != required) ok = false;
        if (ok && partner[required] != -1 && partner[required] != b) ok = false;
      }
      if (ok) {
        const int save_b = partner[b];
        const int save_r = required != -1 ? partner[required] : 0;
        blocks[b].push_back(x);
        block_of[x] = b;
        if (required != -1) {
          partner[b] = required;
          partner[required] = b;
        }
        assign(x + 1);
        if (required != -1) partner[required] = save_r;
        partner[b] = save_b;
        block_of[x] = -1;
        blocks[b].pop_back();
      }
      if (created) {
        blocks.pop_back();
        partner.pop_back();
      }
    }
  }

  void finish() {
    std::vector<std::vector<Elem>> classes;
    classes.push_back({0});
    for (const auto& blk : blocks) classes.push_back(blk);
    Partition p = Partition::from_classes(n, std::move(classes));
    if (verify_sring(g, p).ok) out->push_back(SRing(g, std::move(p)));
  }
};

}  // namespace

std::vector<SRing> brute_force_srings(const AbelianGroup& g) {
  if (g.order() > 10) throw std::invalid_argument("brute-force S-ring cap is |G| <= 10");
  std::vector<SRing> out;
  if (g.order() == 1) {
    out.push_back(SRing(g, Partition::from_classes(1, {{0}})));
    return out;
  }
  PartitionSearch search{g, int(g.order()), {}, std::vector<int>(g.order(), -1), {}, &out};
  search.run();
  std::sort(out.begin(), out.end(),
            [](const SRing& a, const SRing& b) { return a.partition() < b.partition(); });
  return out;
}

}  // namespace caylab
