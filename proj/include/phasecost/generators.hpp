#pragma once

// Random inputs for the verification suites.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "phasecost/cost.hpp"
#include "phasecost/queues.hpp"
#include "phasecost/rbtree.hpp"
#include "phasecost/rng.hpp"
#include "phasecost/sealing.hpp"

namespace phasecost::gen {

/// Default mean of geometric input sizes.
inline constexpr double kMeanSize = 32.0;

inline std::vector<int> list(Rng &rng, std::size_t max_len, int lo = 0, int hi = 99) {
  return rng.ints(rng.geometric(kMeanSize, max_len), lo, hi);
}

inline std::vector<int> list_of_length_up_to(Rng &rng, std::size_t max_len, int lo = 0, int hi = 99) {
  return rng.ints(rng.below(max_len + 1), lo, hi);
}

inline Cost cost(Rng &rng, std::uint64_t max = 1000) { return Cost{rng.below(max + 1)}; }

inline Charged<int> charged(Rng &rng) { return {cost(rng), static_cast<int>(rng.range(-1000, 1000))}; }

/// Any pair of lists is a valid batched queue state.
inline queues::BatchedQueueState<int> batched_state(Rng &rng, std::size_t max_len = 64) {
  return {list(rng, max_len), list(rng, max_len)};
}

/// A tree with n leaves whose shape comes from a random split of the sequence,
/// so that many different balanced shapes show up for the same length.
inline rbtree::RBTree<int> tree(Rng &rng, std::size_t n, int lo = 0, int hi = 99) {
  if (n == 0)
    return {};
  if (n == 1)
    return rbtree::RBTree<int>::singleton(static_cast<int>(rng.range(lo, hi)));
  const std::size_t k = 1 + rng.below(n - 1);
  auto l = tree(rng, k, lo, hi);
  auto r = tree(rng, n - k, lo, hi);
  return rbtree::append(l, r).value;
}

inline rbtree::RBTree<int> tree(Rng &rng) { return tree(rng, rng.geometric(kMeanSize, 256)); }

/// A valid seal over ints: spec cost at least impl cost, equal values.
inline Sealed<int> seal_int(Rng &rng) {
  const int v = static_cast<int>(rng.range(-1000, 1000));
  const Cost impl = cost(rng);
  const Cost spec = impl + cost(rng, 100);
  return seal(Charged<int>{impl, v}, Charged<int>{spec, v});
}

/// A specification that dominates the given one.
template <typename T> Charged<T> above(Rng &rng, const Charged<T> &spec) {
  return {spec.cost + cost(rng, 100), spec.value};
}

/// A seal whose specification dominates lower.spec(), so sealed_leq(lower, result).
template <typename T> Sealed<T> seal_above(Rng &rng, const Sealed<T> &lower) {
  Charged<T> spec = above(rng, lower.spec());
  Charged<T> impl{Cost{rng.below(spec.cost.units() + 1)}, spec.value};
  return seal(std::move(impl), std::move(spec), lower.beh_eq());
}

/// Wrap a seal one level deeper: the implementation carries s, the
/// specification a seal that dominates s.
template <typename T> Sealed<Sealed<T>> nest(Rng &rng, const Sealed<T> &s) {
  const Cost outer_impl = cost(rng, 100);
  const Cost outer_spec = outer_impl + cost(rng, 100);
  return seal(Charged<Sealed<T>>{outer_impl, s}, Charged<Sealed<T>>{outer_spec, seal_above(rng, s)});
}

inline std::vector<std::uint64_t> nats(Rng &rng, std::size_t n, std::uint64_t max = 999) {
  std::vector<std::uint64_t> out(n);
  for (auto &x : out)
    x = rng.below(max + 1);
  return out;
}

} // namespace phasecost::gen
