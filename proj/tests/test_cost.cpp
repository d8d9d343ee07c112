#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "phasecost/cost.hpp"
#include "phasecost/rng.hpp"
#include "phasecost/show.hpp"

using namespace phasecost;
using namespace phasecost::literals;

TEST(Cost, ZeroIsDefault) {
  EXPECT_EQ(Cost{}.units(), 0u);
  EXPECT_EQ(Cost{} + 5_cost, 5_cost);
}

TEST(Cost, AdditionOverflowThrows) {
  const Cost top{std::numeric_limits<std::uint64_t>::max()};
  EXPECT_THROW((void)(top + 1_cost), std::overflow_error);
  EXPECT_EQ(top + Cost{}, top);
}

TEST(Ret, HasZeroCost) {
  EXPECT_EQ(ret(7), (Charged<int>{0_cost, 7}));
  EXPECT_EQ(ret(std::vector<int>{}), (Charged<std::vector<int>>{0_cost, {}}));
  EXPECT_EQ(ret(true), (Charged<bool>{0_cost, true}));
}

TEST(Charge, Examples) {
  const Charged<int> m{5_cost, 11};
  EXPECT_EQ(charge(0_cost, m), m);
  EXPECT_EQ(charge(2_cost, charge(3_cost, ret(11))), (Charged<int>{5_cost, 11}));
  EXPECT_EQ(charge(4_cost, Charged<std::string>{1_cost, "q"}), (Charged<std::string>{5_cost, "q"}));
}

TEST(Bind, AddsCosts) {
  auto k = [](int n) { return Charged<int>{1_cost, n + 1}; };
  EXPECT_EQ(phasecost::bind(Charged<int>{2_cost, 3}, k), (Charged<int>{3_cost, 4}));
  EXPECT_EQ(phasecost::bind(ret(9), k), k(9));
  const Charged<int> m{6_cost, -2};
  EXPECT_EQ(phasecost::bind(m, [](int x) { return ret(x); }), m);
}

TEST(Bind, ChangesType) {
  auto m = phasecost::bind(Charged<int>{2_cost, 3}, [](int n) { return Charged<std::string>{1_cost, std::to_string(n)}; });
  EXPECT_EQ(m, (Charged<std::string>{3_cost, "3"}));
}

TEST(Fmap, KeepsCost) {
  EXPECT_EQ(fmap([](int x) { return x * 2; }, Charged<int>{4_cost, 5}), (Charged<int>{4_cost, 10}));
}

TEST(Erase, ForgetsCost) {
  EXPECT_EQ(erase(Charged<int>{9_cost, 3}), 3);
  EXPECT_EQ(erase(charge(100_cost, ret(4))), 4);
  EXPECT_EQ(erase(ret(4)), 4);
}

TEST(Leq, Examples) {
  EXPECT_TRUE(leq(Charged<int>{2_cost, 1}, Charged<int>{3_cost, 1}));
  EXPECT_FALSE(leq(Charged<int>{3_cost, 1}, Charged<int>{2_cost, 1}));
  EXPECT_FALSE(leq(Charged<int>{2_cost, 1}, Charged<int>{3_cost, 2}));
}

TEST(Leq, CustomEquality) {
  auto mod2 = [](int a, int b) { return a % 2 == b % 2; };
  EXPECT_TRUE(leq(Charged<int>{1_cost, 3}, Charged<int>{1_cost, 5}, mod2));
  EXPECT_FALSE(leq(Charged<int>{1_cost, 3}, Charged<int>{1_cost, 4}, mod2));
}

TEST(Show, Formats) {
  EXPECT_EQ(show(Charged<int>{2_cost, 7}), "(2, 7)");
  EXPECT_EQ(show(5_cost), "5");
}

// Randomized laws, checked against the definitions rather than the library.
TEST(CostProperties, MonoidAndMonadLaws) {
  Rng rng(7, "cost-properties");
  for (int i = 0; i < 2000; ++i) {
    const Cost a{rng.below(1000)}, b{rng.below(1000)}, c{rng.below(1000)};
    const int v = static_cast<int>(rng.range(-100, 100));
    const Charged<int> m{Cost{rng.below(1000)}, v};
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(charge(a, charge(b, m)).cost.units(), a.units() + b.units() + m.cost.units());
    auto k = [&](int x) { return Charged<int>{a, x * 3}; };
    auto h = [&](int x) { return Charged<int>{b, x - 1}; };
    ASSERT_EQ(phasecost::bind(phasecost::bind(m, k), h),
              phasecost::bind(m, [&](int x) { return phasecost::bind(k(x), h); }));
    ASSERT_EQ(phasecost::bind(m, k).cost.units(), m.cost.units() + a.units());
    ASSERT_EQ(erase(charge(c, m)), v);
    // leq is a partial order.
    const Charged<int> up{m.cost + a, v};
    ASSERT_TRUE(leq(m, m));
    ASSERT_TRUE(leq(m, up));
    ASSERT_EQ(leq(up, m), a == Cost{});
  }
}
