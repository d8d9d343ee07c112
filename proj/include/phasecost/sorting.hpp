#pragma once

// Sorting under sealed cost interfaces. Cost counts comparisons only.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "phasecost/cost.hpp"
#include "phasecost/rbtree.hpp"
#include "phasecost/sealing.hpp"

namespace phasecost::sorting {

using Nat = std::uint64_t;
using SortInput = std::vector<Nat>;
using SortAlgorithm = std::function<Charged<SortInput>(const SortInput &)>;
using CostBound = std::function<Cost(std::size_t)>;

/// Stable ascending permutation: the behavioral oracle.
[[nodiscard]] inline SortInput sort_spec(SortInput l) {
  std::stable_sort(l.begin(), l.end());
  return l;
}

/// Insert each element, left to right, scanning the sorted prefix from its
/// back and stopping at the first element not greater than it.
[[nodiscard]] inline Charged<SortInput> isort(const SortInput &l) {
  Charged<SortInput> out{Cost{}, {}};
  out.value.reserve(l.size());
  std::uint64_t comparisons = 0;
  for (Nat x : l) {
    std::size_t pos = out.value.size();
    while (pos > 0) {
      ++comparisons;
      if (out.value[pos - 1] <= x)
        break;
      --pos;
    }
    out.value.insert(out.value.begin() + static_cast<std::ptrdiff_t>(pos), x);
  }
  out.cost = Cost{comparisons};
  return out;
}

namespace detail {
inline void msort_rec(SortInput &v, std::size_t lo, std::size_t hi, SortInput &scratch, std::uint64_t &cmp) {
  if (hi - lo < 2)
    return;
  const std::size_t mid = lo + (hi - lo) / 2;
  msort_rec(v, lo, mid, scratch, cmp);
  msort_rec(v, mid, hi, scratch, cmp);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    ++cmp;
    if (v[j] < v[i])
      scratch[k++] = v[j++];
    else
      scratch[k++] = v[i++];
  }
  while (i < mid)
    scratch[k++] = v[i++];
  while (j < hi)
    scratch[k++] = v[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo), scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            v.begin() + static_cast<std::ptrdiff_t>(lo));
}
} // namespace detail

/// Top-down merge sort splitting at floor(n/2); one unit per merge comparison.
[[nodiscard]] inline Charged<SortInput> msort(const SortInput &l) {
  SortInput v = l;
  SortInput scratch(v.size());
  std::uint64_t comparisons = 0;
  detail::msort_rec(v, 0, v.size(), scratch, comparisons);
  return {Cost{comparisons}, std::move(v)};
}

[[nodiscard]] inline std::uint64_t ceil_log2(std::uint64_t n) {
  std::uint64_t k = 0;
  while ((std::uint64_t{1} << k) < n)
    ++k;
  return k;
}

[[nodiscard]] inline Cost quadratic_bound(std::size_t n) { return Cost{std::uint64_t{n} * n}; }

/// n * ceil(lg n), zero for n <= 1.
[[nodiscard]] inline Cost loglinear_bound(std::size_t n) { return Cost{std::uint64_t{n} * ceil_log2(n)}; }

/// Seal the algorithm's run on l under (bound(|l|), sort_spec(l)).
/// Throws BoundViolationError if the algorithm exceeds its interface on l.
[[nodiscard]] inline Sealed<SortInput> sealed_sort(const SortAlgorithm &algorithm, const CostBound &bound,
                                                  const SortInput &l) {
  return seal(algorithm(l), Charged<SortInput>{bound(l.size()), sort_spec(l)});
}

/// Sort a tree's elements with a list algorithm and rebuild the tree. The
/// cost of rebuilding is added to the comparison count.
[[nodiscard]] inline Charged<rbtree::RBTree<Nat>> sort_tree(const SortAlgorithm &algorithm,
                                                            const rbtree::RBTree<Nat> &t) {
  return phasecost::bind(algorithm(rbtree::elements(t)), [](const SortInput &sorted) { return rbtree::from_list(sorted); });
}

} // namespace phasecost::sorting
