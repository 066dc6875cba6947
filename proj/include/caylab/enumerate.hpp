#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <random>
#include <thread>
#include <unordered_map>
#include <vector>

#include "caylab/groups.hpp"

namespace caylab {

// Inverse-closed sets are encoded as masks over inverse pairs: bit i selects
// the pair {reps[i], -reps[i]} (a single element when self-inverse).
struct PairBasis {
  std::vector<Elem> reps;  // ascending; involutions appear as their own rep
};

PairBasis pair_basis(const AbelianGroup& g);
std::uint64_t mask_count(const PairBasis& basis);  // 2^#pairs
std::vector<Elem> set_from_mask(const AbelianGroup& g, const PairBasis& basis,
                                std::uint64_t mask);

// True when the sorted element list of the set is lexicographically minimal
// among its images under multiplication by units of |G|.
bool is_multiplier_canonical(const AbelianGroup& g, const std::vector<Elem>& set);

// Deterministic lazy draw-without-replacement over [0, total): a seeded
// partial Fisher-Yates shuffle materialized on demand.
class ShuffleStream {
public:
  ShuffleStream(std::uint64_t total, std::uint64_t seed) : total_(total), rng_(seed) {}

  std::optional<std::uint64_t> next() {
    if (drawn_ == total_) return std::nullopt;
    std::uint64_t j = drawn_ + bounded(total_ - drawn_);
    std::uint64_t value = at(j);
    swapped_[j] = at(drawn_);
    ++drawn_;
    return value;
  }

private:
  std::uint64_t at(std::uint64_t i) const {
    auto it = swapped_.find(i);
    return it == swapped_.end() ? i : it->second;
  }
  // rejection sampling keeps the stream independent of library internals
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t r;
    do {
      r = rng_();
    } while (r >= limit);
    return r % n;
  }

  std::uint64_t total_;
  std::uint64_t drawn_ = 0;
  std::mt19937_64 rng_;
  std::unordered_map<std::uint64_t, std::uint64_t> swapped_;
};

// Applies fn to every item on `jobs` workers; results keep input order, so
// output is independent of the worker count.
template <class In, class F>
auto parallel_map(const std::vector<In>& items, int jobs, F fn)
    -> std::vector<decltype(fn(items[std::size_t(0)]))> {
  using Out = decltype(fn(items[std::size_t(0)]));
  std::vector<Out> out(items.size());
  if (jobs <= 1 || items.size() <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = fn(items[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> workers;
  const int count = std::min<int>(jobs, int(items.size()));
  for (int t = 0; t < count; ++t)
    workers.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= items.size()) break;
        try {
          out[i] = fn(items[i]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          next.store(items.size());
          break;
        }
      }
    });
  for (auto& w : workers) w.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace caylab
