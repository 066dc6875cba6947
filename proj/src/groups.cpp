#include "caylab/groups.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace caylab {

AbelianGroup::AbelianGroup(std::vector<long long> factors) : factors_(std::move(factors)) {
  order_ = 1;
  for (long long f : factors_) {
    if (f < 2) throw std::invalid_argument("group factor must be >= 2");
    if (order_ > kOrderCap / f) throw std::invalid_argument("group order exceeds size cap");
    order_ *= f;
  }
}

std::vector<long long> AbelianGroup::coords(Elem x) const {
  std::vector<long long> c(factors_.size());
  long long v = x;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    c[i] = v % factors_[i];
    v /= factors_[i];
  }
  return c;
}

Elem AbelianGroup::from_coords(const std::vector<long long>& c) const {
  long long idx = 0, base = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    idx += (c[i] % factors_[i]) * base;
    base *= factors_[i];
  }
  return Elem(idx);
}

Elem AbelianGroup::add(Elem a, Elem b) const {
  long long r = 0, base = 1, va = a, vb = b;
  for (long long f : factors_) {
    long long xa = va % f, xb = vb % f;
    va /= f;
    vb /= f;
    r += ((xa + xb) % f) * base;
    base *= f;
  }
  return Elem(r);
}

Elem AbelianGroup::neg(Elem a) const {
  long long r = 0, base = 1, va = a;
  for (long long f : factors_) {
    long long xa = va % f;
    va /= f;
    r += ((f - xa) % f) * base;
    base *= f;
  }
  return Elem(r);
}

Elem AbelianGroup::mul(long long m, Elem a) const {
  long long r = 0, base = 1, va = a;
  for (long long f : factors_) {
    long long xa = va % f;
    va /= f;
    long long mm = ((m % f) + f) % f;
    r += (mm * xa % f) * base;
    base *= f;
  }
  return Elem(r);
}

long long AbelianGroup::element_order(Elem g) const {
  long long ord = 1, vg = g;
  for (long long f : factors_) {
    long long x = vg % f;
    vg /= f;
    long long o = f / std::gcd(f, x == 0 ? f : x);
    ord = std::lcm(ord, o);
  }
  return ord;
}

long long AbelianGroup::exponent() const {
  long long e = 1;
  for (long long f : factors_) e = std::lcm(e, f);
  return e;
}

std::string AbelianGroup::spec_string() const {
  if (factors_.empty()) return "Z1";
  if (factors_.size() == 1) return "Z" + std::to_string(factors_[0]);
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += 'x';
    s += std::to_string(factors_[i]);
  }
  return s;
}

AbelianGroup make_group(const std::vector<long long>& factors) {
  return AbelianGroup(factors);
}

AbelianGroup parse_group(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s += char(std::tolower(static_cast<unsigned char>(c)));
  if (!s.empty() && s[0] == 'z') s = s.substr(1);
  if (s.empty()) throw std::invalid_argument("empty group spec");
  std::vector<long long> factors;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find('x', pos);
    std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad group spec: " + spec);
    factors.push_back(std::stoll(tok));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return AbelianGroup(factors);
}

long long element_order(const AbelianGroup& g, Elem x) { return g.element_order(x); }

Subgroup::Subgroup(const AbelianGroup& parent, Bitset members, std::vector<Elem> gens)
    : parent_(&parent), members_(std::move(members)), gens_(std::move(gens)) {
  elems_ = members_.to_vector();
  if (elems_.empty() || elems_[0] != 0)
    throw std::invalid_argument("subgroup must contain the identity");
}

Subgroup subgroup_generated(const AbelianGroup& g, const std::vector<Elem>& xs) {
  Bitset members(int(g.order()));
  members.set(0);
  std::vector<Elem> frontier{0};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem y : frontier) {
      for (Elem x : xs) {
        Elem z = g.add(y, x);
        if (!members.test(z)) {
          members.set(z);
          next.push_back(z);
        }
        Elem zn = g.sub(y, x);
        if (!members.test(zn)) {
          members.set(zn);
          next.push_back(zn);
        }
      }
    }
    frontier = std::move(next);
  }
  return Subgroup(g, members, xs);
}

Subgroup trivial_subgroup(const AbelianGroup& g) {
  Bitset b(int(g.order()));
  b.set(0);
  return Subgroup(g, b, {});
}

Subgroup full_subgroup(const AbelianGroup& g) {
  Bitset b(int(g.order()));
  for (int i = 0; i < g.order(); ++i) b.set(i);
  return Subgroup(g, b, minimal_generators(g, b));
}

Subgroup unique_subgroup_of_order(const AbelianGroup& g, long long d) {
  if (!g.is_cyclic()) throw std::invalid_argument("group is not cyclic");
  if (d < 1 || g.order() % d != 0) throw std::invalid_argument("order does not divide |G|");
  Bitset members(int(g.order()));
  for (Elem x = 0; x < g.order(); ++x)
    if (g.mul(d, x) == 0) members.set(x);
  Subgroup h(g, members, {});
  if (h.order() != d) throw std::logic_error("cyclic subgroup size mismatch");
  return Subgroup(g, h.members(), minimal_generators(g, h.members()));
}

namespace {

// Basis of an abstract finite abelian group given by operation callbacks.
// Returns invariant factors (largest first) and the index of every element in
// the resulting mixed-radix group. Greedy: repeatedly pick an element whose
// order modulo the current span is maximal and whose own order equals it.
struct AbstractBasis {
  std::vector<long long> factors;
  std::vector<Elem> index_of;  // abstract element -> new index
};

template <class Add>
AbstractBasis abelian_basis(int m, Add add) {
  AbstractBasis out;
  out.index_of.assign(m, -1);

  std::vector<char> in_span(m, 0);
  in_span[0] = 1;
  std::vector<int> span{0};
  std::vector<int> basis;

  auto order_mod_span = [&](int x) {
    int acc = x;
    long long k = 1;
    while (!in_span[acc]) {
      acc = add(acc, x);
      ++k;
    }
    return k;
  };

  while (int(span.size()) < m) {
    long long best = 0;
    int pick = -1;
    for (int x = 0; x < m; ++x) {
      if (in_span[x]) continue;
      long long q = order_mod_span(x);
      if (q <= best) continue;
      // need a lift whose plain order equals its order modulo the span
      int acc = x;
      long long o = 1;
      while (acc != 0) {
        acc = add(acc, x);
        ++o;
      }
      if (o == q) {
        best = q;
        pick = x;
      }
    }
    if (pick < 0) throw std::logic_error("abelian basis: no pure lift found");
    basis.push_back(pick);
    out.factors.push_back(best);
    // span := span + <pick>
    std::vector<int> grown;
    grown.reserve(span.size() * best);
    for (int s : span) {
      int acc = s;
      for (long long k = 0; k < best; ++k) {
        grown.push_back(acc);
        acc = add(acc, pick);
      }
    }
    for (int x : grown) in_span[x] = 1;
    span = std::move(grown);
  }

  // enumerate coordinates in mixed-radix order (first basis coordinate fastest)
  long long total = 1;
  for (long long f : out.factors) total *= f;
  if (total != m) throw std::logic_error("abelian basis: order mismatch");
  std::vector<long long> c(out.factors.size(), 0);
  for (long long idx = 0; idx < total; ++idx) {
    int e = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (long long k = 0; k < c[i]; ++k) e = add(e, basis[i]);
    if (out.index_of[e] != -1) throw std::logic_error("abelian basis: not a direct sum");
    out.index_of[e] = Elem(idx);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (++c[i] < out.factors[i]) break;
      c[i] = 0;
    }
  }
  return out;
}

}  // namespace

QuotientGroup quotient_group(const AbelianGroup& g, const Subgroup& l) {
  const int n = int(g.order());
  // closure sanity: l must be a subgroup of g
  for (Elem a : l.elements())
    for (Elem b : l.elements())
      if (!l.contains(g.add(a, b))) throw std::invalid_argument("not a subgroup");

  // canonical coset representative: least element of the coset
  std::vector<Elem> rep(n, -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (rep[x] != -1) continue;
    for (Elem h : l.elements()) {
      Elem y = g.add(x, h);
      if (rep[y] == -1) rep[y] = x;
    }
    reps.push_back(x);
  }
  const int m = int(reps.size());
  if (m * l.order() != g.order()) throw std::invalid_argument("not a subgroup");

  std::vector<int> rep_pos(n, -1);
  for (int i = 0; i < m; ++i) rep_pos[reps[i]] = i;

  auto add_abs = [&](int i, int j) { return rep_pos[rep[g.add(reps[i], reps[j])]]; };

  if (m == 1) {
    QuotientGroup q{AbelianGroup({}), std::vector<Elem>(n, 0)};
    return q;
  }

  AbstractBasis basis = abelian_basis(m, add_abs);
  QuotientGroup q{AbelianGroup(basis.factors), std::vector<Elem>(n)};
  for (Elem x = 0; x < n; ++x) q.projection[x] = basis.index_of[rep_pos[rep[x]]];
  return q;
}

SubgroupEmbedding subgroup_as_group(const Subgroup& h) {
  const AbelianGroup& g = h.parent();
  const std::vector<Elem>& elems = h.elements();
  const int m = int(elems.size());
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < m; ++i) pos[elems[i]] = i;
  auto add_abs = [&](int i, int j) { return pos[g.add(elems[i], elems[j])]; };

  SubgroupEmbedding out{AbelianGroup({}), std::vector<Elem>(g.order(), -1), {}};
  if (m > 1) {
    AbstractBasis basis = abelian_basis(m, add_abs);
    out.group = AbelianGroup(basis.factors);
    out.to_parent.assign(m, -1);
    for (int i = 0; i < m; ++i) {
      out.to_sub[elems[i]] = basis.index_of[i];
      out.to_parent[basis.index_of[i]] = elems[i];
    }
  } else {
    out.to_sub[0] = 0;
    out.to_parent = {0};
  }
  return out;
}

long long mult_order(long long j, long long i) {
  if (i < 1) throw std::invalid_argument("modulus must be >= 1");
  j = ((j % i) + i) % i;
  if (std::gcd(i, j) != 1) throw std::invalid_argument("arguments are not coprime");
  if (i == 1) return 1;
  long long k = 1, acc = j % i;
  while (acc != 1) {
    acc = acc * j % i;
    ++k;
  }
  return k;
}

std::optional<Elem> unique_involution(const AbelianGroup& g) {
  std::optional<Elem> found;
  for (Elem x = 1; x < g.order(); ++x) {
    if (g.element_order(x) == 2) {
      if (found) return std::nullopt;
      found = x;
    }
  }
  return found;
}

Subgroup odd_part_subgroup(const AbelianGroup& g) {
  Bitset members(int(g.order()));
  for (Elem x = 0; x < g.order(); ++x)
    if (g.element_order(x) % 2 == 1) members.set(x);
  return Subgroup(g, members, minimal_generators(g, members));
}

std::vector<Elem> minimal_generators(const AbelianGroup& g, const Bitset& members) {
  std::vector<Elem> gens;
  Bitset span(int(g.order()));
  span.set(0);
  int span_size = 1;
  const int target = members.count();
  // prefer high-order elements so the generating set stays short
  std::vector<Elem> elems = members.to_vector();
  std::stable_sort(elems.begin(), elems.end(), [&](Elem a, Elem b) {
    return g.element_order(a) > g.element_order(b);
  });
  for (Elem x : elems) {
    if (span_size == target) break;
    if (span.test(x)) continue;
    gens.push_back(x);
    // grow span by <x>
    std::vector<Elem> cur = span.to_vector();
    for (Elem s : cur) {
      Elem acc = s;
      do {
        acc = g.add(acc, x);
        if (!span.test(acc)) {
          span.set(acc);
          ++span_size;
        }
      } while (acc != s);
    }
  }
  return gens;
}

}  // namespace caylab
