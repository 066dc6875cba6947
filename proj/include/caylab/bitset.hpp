#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace caylab {

// Fixed-universe bitset. All binary operations require equal universe sizes.
class Bitset {
public:
  Bitset() = default;
  explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  static Bitset of(int universe, std::initializer_list<int> bits) {
    Bitset b(universe);
    for (int i : bits) b.set(i);
    return b;
  }
  static Bitset of(int universe, const std::vector<int>& bits) {
    Bitset b(universe);
    for (int i : bits) b.set(i);
    return b;
  }

  int universe() const { return n_; }

  void set(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] |= std::uint64_t(1) << (i & 63);
  }
  void reset(int i) {
    assert(i >= 0 && i < n_);
    w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63));
  }
  bool test(int i) const {
    assert(i >= 0 && i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1;
  }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  int count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (std::uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator&=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

  bool operator==(const Bitset& o) const = default;

  bool is_subset_of(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  static int and_count(const Bitset& a, const Bitset& b) {
    assert(a.n_ == b.n_);
    int c = 0;
    for (std::size_t i = 0; i < a.w_.size(); ++i)
      c += std::popcount(a.w_[i] & b.w_[i]);
    return c;
  }

  int find_first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i << 6) + std::countr_zero(w_[i]);
    return -1;
  }
  // first set bit strictly greater than i, or -1
  int find_next(int i) const {
    ++i;
    if (i >= n_) return -1;
    std::size_t word = std::size_t(i) >> 6;
    std::uint64_t w = w_[word] & (~std::uint64_t(0) << (i & 63));
    if (w) return int(word << 6) + std::countr_zero(w);
    for (++word; word < w_.size(); ++word)
      if (w_[word]) return int(word << 6) + std::countr_zero(w_[word]);
    return -1;
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for (int i = find_first(); i >= 0; i = find_next(i)) v.push_back(i);
    return v;
  }

  const std::uint64_t* data() const { return w_.data(); }
  int word_count() const { return int(w_.size()); }

  std::uint64_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ std::uint64_t(n_);
    for (std::uint64_t w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace caylab
