#include "caylab/keys.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "caylab/poschel.hpp"

namespace caylab {

namespace {

long long pow_ll(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::optional<std::pair<long long, int>> as_odd_prime_power(long long n) {
  if (n < 3 || n % 2 == 0) return std::nullopt;
  long long p = 0;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = n;
  int e = 0;
  long long m = n;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  if (m != 1) return std::nullopt;
  return std::make_pair(p, e);
}

std::string PrimaryKey::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(k[i]);
  }
  return s + ")";
}

bool valid_key(const PrimaryKey& key) {
  for (int i = 0; i < key.e(); ++i) {
    if (key.k[i] < 0 || key.k[i] > i) return false;
    if (i > 0 && key.k[i - 1] > key.k[i]) return false;
  }
  return true;
}

PrimaryKey key_join(const PrimaryKey& a, const PrimaryKey& b) {
  PrimaryKey r = a;
  for (int i = 0; i < r.e(); ++i) r.k[i] = std::max(a.k[i], b.k[i]);
  return r;
}

PrimaryKey key_meet(const PrimaryKey& a, const PrimaryKey& b) {
  PrimaryKey r = a;
  for (int i = 0; i < r.e(); ++i) r.k[i] = std::min(a.k[i], b.k[i]);
  return r;
}

std::vector<PrimaryKey> key_lattice(int e) {
  std::vector<PrimaryKey> out;
  PrimaryKey cur{std::vector<int>(e, 0)};
  auto rec = [&](auto&& self, int i) -> void {
    if (i == e) {
      out.push_back(cur);
      return;
    }
    int lo = i == 0 ? 0 : cur.k[i - 1];
    for (int v = lo; v <= i; ++v) {
      cur.k[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::string GenMultiplier::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(m[i]);
  }
  return s + ")";
}

long long digit_map(long long p, int e, const GenMultiplier& m, long long x) {
  const long long pe = pow_ll(p, e);
  if (x < 0 || x >= pe) throw std::invalid_argument("digit map argument out of range");
  if (int(m.m.size()) != e) throw std::invalid_argument("multiplier length mismatch");
  long long out = 0, power = 1;
  for (int i = 0; i < e; ++i) {
    long long digit = x % p;
    x /= p;
    out = (out + m.m[e - 1 - i] % pe * digit % pe * power) % pe;
    power *= p;
  }
  return out;
}

Cyclic2peView cyclic_2pe_view(const AbelianGroup& h) {
  if (!h.is_cyclic() || h.order() % 2 != 0)
    throw std::invalid_argument("group is not cyclic of order 2p^e");
  auto pp = as_odd_prime_power(h.order() / 2);
  if (!pp) throw std::invalid_argument("group order is not 2p^e for an odd prime p");
  Cyclic2peView v;
  v.p = pp->first;
  v.e = pp->second;
  v.pe = h.order() / 2;
  Elem gen = -1;
  for (Elem x = 0; x < h.order() && gen < 0; ++x)
    if (h.element_order(x) == h.order()) gen = x;
  v.residue.assign(h.order(), 0);
  v.element.assign(h.order(), 0);
  Elem cur = 0;
  for (long long r = 0; r < h.order(); ++r) {
    v.residue[cur] = r;
    v.element[r] = cur;
    cur = h.add(cur, gen);
  }
  v.b = v.element[v.pe];
  return v;
}

namespace {

// order of residue r in Z_{2p^e}, split as (level i, even flag) where the
// odd part of the order is p^i
int residue_level(long long r, long long n, long long p) {
  long long o = n / std::gcd(n, r);
  int i = 0;
  while (o % p == 0) {
    o /= p;
    ++i;
  }
  return i;
}

}  // namespace

Partition key_partition(const AbelianGroup& h, const PrimaryKey& key) {
  Cyclic2peView v = cyclic_2pe_view(h);
  if (key.e() != v.e || !valid_key(key)) throw std::invalid_argument("invalid key");
  const long long n = h.order();
  std::vector<std::vector<Elem>> classes;
  classes.push_back({0});
  classes.push_back({v.b});
  std::vector<char> done(n, 0);
  done[0] = done[v.residue[v.b]] = 1;
  for (long long r = 1; r < n; ++r) {
    if (done[r]) continue;
    const int level = residue_level(r, n, v.p);
    const long long coset_step = n / pow_ll(v.p, key.k[level - 1]);  // generates P_{k_i}
    std::vector<Elem> cls;
    long long cur = r;
    do {
      done[cur] = 1;
      cls.push_back(v.element[cur]);
      cur = (cur + coset_step) % n;
    } while (cur != r);
    classes.push_back(std::move(cls));
  }
  return Partition::from_classes(int(n), std::move(classes));
}

PrimaryKey key_of_set(const AbelianGroup& h, const Bitset& s) {
  if (s.none()) throw std::invalid_argument("key of the empty set");
  Cyclic2peView v = cyclic_2pe_view(h);
  const long long n = h.order();
  // per level, the largest c <= i-1 with the level slice a union of P_c-cosets
  std::vector<int> c(v.e + 1, 0);
  for (int i = 1; i <= v.e; ++i) {
    for (int cand = i - 1; cand >= 0; --cand) {
      const long long step = n / pow_ll(v.p, cand);
      bool ok = true;
      for (long long r = 1; r < n && ok; ++r) {
        if (residue_level(r, n, v.p) != i) continue;
        if (!s.test(v.element[r])) continue;
        for (long long q = (r + step) % n; q != r; q = (q + step) % n)
          if (!s.test(v.element[q])) {
            ok = false;
            break;
          }
      }
      if (ok) {
        c[i] = cand;
        break;
      }
    }
  }
  // greatest monotone key pointwise below c
  PrimaryKey key{std::vector<int>(v.e, 0)};
  for (int i = v.e; i >= 1; --i)
    key.k[i - 1] = std::min(c[i], i == v.e ? c[i] : key.k[i]);
  return key;
}

Perm phi_map(const AbelianGroup& h, const GenMultiplier& m, PhiVariant variant) {
  Cyclic2peView v = cyclic_2pe_view(h);
  if (int(m.m.size()) != v.e) throw std::invalid_argument("multiplier length mismatch");
  for (long long mi : m.m) {
    if (mi % v.p == 0) throw std::invalid_argument("multiplier entry divisible by p");
    if (mi % 2 == 0) throw std::invalid_argument("multiplier entry must have an odd representative");
  }
  const long long n = h.order();
  Perm perm(n);
  for (long long r = 0; r < n; ++r) {
    long long image;
    if (r % 2 == 0) {
      image = 2 * digit_map(v.p, v.e, m, r / 2) % n;
    } else if (variant == PhiVariant::crt) {
      long long x = ((r - v.pe) % n + n) % n / 2;
      image = (2 * digit_map(v.p, v.e, m, x) + v.pe) % n;
    } else {
      long long x = (r - 1) / 2;
      image = (2 * digit_map(v.p, v.e, m, x) + 1) % n;
    }
    perm[v.element[r]] = v.element[image];
  }
  return perm;
}

std::vector<GenMultiplier> multipliers_for_key(long long p, int e, const PrimaryKey& key) {
  if (!valid_key(key) || key.e() != e) throw std::invalid_argument("invalid key");
  // odd representatives of the units modulo p^i, ascending
  std::vector<std::vector<long long>> units(e + 1);
  for (int i = 1; i <= e; ++i) {
    const long long mod = pow_ll(p, i);
    for (long long u = 1; u < mod; ++u) {
      if (u % p == 0) continue;
      units[i].push_back(u % 2 == 1 ? u : u + mod);
    }
    std::sort(units[i].begin(), units[i].end());
  }
  std::vector<GenMultiplier> out;
  std::vector<long long> cur(e);
  // m_e chosen first; each step down constrains m_{i-1} = m_i (mod p^{i-1-k_i})
  auto rec = [&](auto&& self, int i) -> void {
    if (i == 0) {
      out.push_back(GenMultiplier{cur});
      return;
    }
    for (long long u : units[i]) {
      if (i < e) {
        const long long mod = pow_ll(p, i - key.k[i]);  // p^{(i+1)-1-k_{i+1}}
        if (((u - cur[i]) % mod + mod) % mod != 0) continue;
      }
      cur[i - 1] = u;
      self(self, i - 1);
    }
  };
  rec(rec, e);
  return out;
}

}  // namespace caylab
