#include <algorithm>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "phasecost/generators.hpp"
#include "phasecost/sorting.hpp"

using namespace phasecost;
using namespace phasecost::sorting;

namespace {

// Independent comparison counters: textbook insertion sort by adjacent swaps and
// a copying top-down merge sort.
std::uint64_t count_isort(SortInput l) {
  std::uint64_t n = 0;
  for (std::size_t i = 1; i < l.size(); ++i)
    for (std::size_t j = i; j > 0; --j) {
      ++n;
      if (l[j - 1] <= l[j])
        break;
      std::swap(l[j - 1], l[j]);
    }
  return n;
}

std::uint64_t count_msort(const SortInput &l, SortInput &out) {
  if (l.size() < 2) {
    out = l;
    return 0;
  }
  const auto mid = static_cast<std::ptrdiff_t>(l.size() / 2);
  SortInput a, b;
  std::uint64_t n = count_msort(SortInput(l.begin(), l.begin() + mid), a) +
                    count_msort(SortInput(l.begin() + mid, l.end()), b);
  out.clear();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    ++n;
    out.push_back(b[j] < a[i] ? b[j++] : a[i++]);
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return n;
}

} // namespace

TEST(SortSpec, Examples) {
  EXPECT_EQ(sort_spec({}), SortInput{});
  EXPECT_EQ(sort_spec({3, 1, 2}), (SortInput{1, 2, 3}));
  EXPECT_EQ(sort_spec({1, 2, 2, 5}), (SortInput{1, 2, 2, 5}));
}

TEST(Isort, Examples) {
  EXPECT_EQ(isort({1, 2, 3}), (Charged<SortInput>{Cost{2}, {1, 2, 3}}));
  EXPECT_EQ(isort({}), (Charged<SortInput>{Cost{}, {}}));
  EXPECT_EQ(isort({3, 2, 1}), (Charged<SortInput>{Cost{3}, {1, 2, 3}}));
}

TEST(Msort, Examples) {
  EXPECT_EQ(msort({2, 1}), (Charged<SortInput>{Cost{1}, {1, 2}}));
  EXPECT_EQ(msort({5}), (Charged<SortInput>{Cost{}, {5}}));
  EXPECT_EQ(msort({}), (Charged<SortInput>{Cost{}, {}}));
}

TEST(Bounds, Values) {
  EXPECT_EQ(ceil_log2(0), 0u);
  EXPECT_EQ(ceil_log2(1), 0u);
  EXPECT_EQ(ceil_log2(2), 1u);
  EXPECT_EQ(ceil_log2(5), 3u);
  EXPECT_EQ(ceil_log2(8), 3u);
  EXPECT_EQ(quadratic_bound(3), Cost{9});
  EXPECT_EQ(loglinear_bound(4), Cost{8});
  EXPECT_EQ(loglinear_bound(1), Cost{0});
}

TEST(SealedSort, Examples) {
  const auto s = sealed_sort(isort, quadratic_bound, {3, 1, 2});
  EXPECT_EQ(s.spec().cost, Cost{9});
  EXPECT_EQ(s.impl().value, (SortInput{1, 2, 3}));

  std::uint64_t worst = 0;
  SortInput p{0, 1, 2, 3};
  do {
    const auto m = sealed_sort(msort, loglinear_bound, p);
    EXPECT_EQ(m.spec().cost, Cost{8});
    worst = std::max(worst, m.impl().cost.units());
  } while (std::next_permutation(p.begin(), p.end()));
  EXPECT_LE(worst, 8u);
  EXPECT_EQ(worst, 5u);

  SortInput sorted(10);
  std::iota(sorted.begin(), sorted.end(), Nat{0});
  const auto over = sealed_sort(isort, quadratic_bound, sorted);
  EXPECT_EQ(over.impl().cost, Cost{9});
  EXPECT_EQ(over.spec().cost, Cost{100});
  EXPECT_TRUE(is_valid(over));
}

TEST(SealedSort, RejectsATooTightBound) {
  const CostBound linear = [](std::size_t n) { return Cost{n}; };
  EXPECT_THROW((void)sealed_sort(isort, linear, {4, 3, 2, 1}), BoundViolationError);
}

TEST(Sorting, ExhaustivePermutationsAgainstCounters) {
  for (std::size_t n = 0; n <= 8; ++n) {
    SortInput p(n);
    std::iota(p.begin(), p.end(), Nat{0});
    do {
      const auto i = isort(p);
      const auto m = msort(p);
      SortInput oracle;
      ASSERT_EQ(i.value, sort_spec(p));
      ASSERT_EQ(m.value, sort_spec(p));
      ASSERT_EQ(i.cost.units(), count_isort(p));
      ASSERT_EQ(m.cost.units(), count_msort(p, oracle));
      ASSERT_LE(i.cost, quadratic_bound(n));
      ASSERT_LE(m.cost, loglinear_bound(n));
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST(Sorting, RandomLargeInputs) {
  Rng rng(43, "sorting");
  for (int k = 0; k < 200; ++k) {
    const SortInput l = gen::nats(rng, rng.below(1025));
    const auto m = msort(l);
    SortInput oracle;
    ASSERT_EQ(m.cost.units(), count_msort(l, oracle));
    ASSERT_EQ(m.value, oracle);
    ASSERT_LE(m.cost, loglinear_bound(l.size()));
    if (l.size() <= 512) {
      const auto i = isort(l);
      ASSERT_EQ(i.cost.units(), count_isort(l));
      ASSERT_LE(i.cost, quadratic_bound(l.size()));
      ASSERT_EQ(i.value, m.value);
    }
  }
}

TEST(Sorting, StableOnDuplicates) {
  EXPECT_EQ(erase(isort({2, 2, 1, 1})), (SortInput{1, 1, 2, 2}));
  EXPECT_EQ(erase(msort({2, 2, 1, 1})), (SortInput{1, 1, 2, 2}));
}

TEST(SortTree, RebuildsSorted) {
  const auto t = rbtree::from_list(SortInput{3, 1, 2}).value;
  const auto out = sort_tree(msort, t);
  EXPECT_EQ(rbtree::elements(out.value), (SortInput{1, 2, 3}));
  EXPECT_FALSE(rbtree::audit(out.value).has_value());
  EXPECT_GE(out.cost, msort({3, 1, 2}).cost);
}
