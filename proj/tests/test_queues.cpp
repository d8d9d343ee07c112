#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "phasecost/generators.hpp"
#include "phasecost/queues.hpp"

using namespace phasecost;
using namespace phasecost::queues;
using L = std::vector<int>;
using Q = BatchedQueueState<int>;
using LQ = ListQueueState<int>;

// Hand evaluation of outbox ++ reverse(inbox).
TEST(RevAppend, Examples) {
  EXPECT_EQ(rev_append(Q{}), L{});
  EXPECT_EQ(rev_append(Q{{2, 1}, {0}}), (L{0, 1, 2}));
  EXPECT_EQ(rev_append(Q{{}, {5, 6}}), (L{5, 6}));
}

TEST(ListQueue, Operations) {
  EXPECT_EQ(list_empty<int>(), LQ{});
  EXPECT_EQ(list_enqueue(3, LQ{{1, 2}}), (Charged<LQ>{Cost{1}, {{1, 2, 3}}}));
  const auto d = list_dequeue(LQ{{1, 2, 3}}, -1);
  EXPECT_EQ(d.cost, Cost{3});
  EXPECT_EQ(d.value.first, 1);
  EXPECT_EQ(d.value.second, (LQ{{2, 3}}));
  const auto e = list_dequeue(LQ{}, -1);
  EXPECT_EQ(e.cost, Cost{});
  EXPECT_EQ(e.value.first, -1);
  EXPECT_EQ(e.value.second, LQ{});
}

TEST(BatchedQueue, Operations) {
  EXPECT_EQ(batched_empty<int>(), Q{});
  EXPECT_EQ(batched_enqueue(3, Q{{2}, {1}}), (Charged<Q>{Cost{1}, {{3, 2}, {1}}}));
  const auto d = batched_dequeue(Q{{2, 1}, {}}, -1);
  EXPECT_EQ(d.cost, Cost{2});
  EXPECT_EQ(d.value.first, 1);
  EXPECT_EQ(d.value.second, (Q{{}, {2}}));
  const auto fast = batched_dequeue(Q{{9}, {4, 5}}, -1);
  EXPECT_EQ(fast.cost, Cost{});
  EXPECT_EQ(fast.value.first, 4);
  EXPECT_EQ(fast.value.second, (Q{{9}, {5}}));
  const auto e = batched_dequeue(Q{}, -1);
  EXPECT_EQ(e.cost, Cost{});
  EXPECT_EQ(e.value.first, -1);
  EXPECT_EQ(e.value.second, Q{});
}

TEST(SealedDequeue, Examples) {
  {
    const auto s = sealed_dequeue(Q{{}, {1, 2}}, -1);
    EXPECT_EQ(s.impl().cost, Cost{0});
    EXPECT_EQ(s.spec().cost, Cost{2});
    EXPECT_EQ(s.impl().value, (std::pair{1, L{2}}));
    EXPECT_EQ(s.spec().value, (std::pair{1, L{2}}));
  }
  {
    const auto s = sealed_dequeue(Q{{2, 1}, {}}, -1);
    EXPECT_EQ(s.impl().cost, Cost{2});
    EXPECT_EQ(s.spec().cost, Cost{2});
  }
  {
    const auto s = sealed_dequeue(Q{}, -1);
    EXPECT_EQ(s.impl(), (Charged<std::pair<int, L>>{Cost{}, {-1, {}}}));
    EXPECT_EQ(s.spec(), s.impl());
  }
}

TEST(Clients, Demo) {
  const ListQueue<int> lq{-1};
  const BatchedQueue<int> bq{-1};
  EXPECT_EQ(erase(demo(lq, 7)), 7);
  EXPECT_EQ(erase(demo(bq, 7)), 7);
  EXPECT_EQ(erase(demo(bq, -1)), -1);
  // Enqueue 1, then a dequeue of a one-element queue.
  EXPECT_EQ(demo(lq, 7).cost, Cost{2});
  EXPECT_EQ(demo(bq, 7).cost, Cost{2});
}

TEST(Clients, FromListUnfoldsRightToLeft) {
  // fromList [1,2,3] = enqueue 1 (enqueue 2 (enqueue 3 empty))
  const ListQueue<int> lq{-1};
  const BatchedQueue<int> bq{-1};
  EXPECT_EQ(erase(from_list(lq, L{1, 2, 3})), (LQ{{3, 2, 1}}));
  EXPECT_EQ(rev_append(erase(from_list(bq, L{1, 2, 3}))), (L{3, 2, 1}));
  EXPECT_EQ(from_list(lq, L{1, 2, 3}).cost, Cost{3});
}

TEST(Clients, ToListPadsWithFallback) {
  const ListQueue<int> lq{-1};
  EXPECT_EQ(erase(to_list(lq, 4, LQ{{5, 6}})), (L{5, 6, -1, -1}));
}

TEST(Clients, Qreverse) {
  const ListQueue<int> lq{-1};
  const BatchedQueue<int> bq{-1};
  EXPECT_EQ(erase(qreverse(lq, L{1, 2, 3})), (L{3, 2, 1}));
  EXPECT_EQ(erase(qreverse(bq, L{1, 2, 3})), (L{3, 2, 1}));
  EXPECT_EQ(erase(qreverse(bq, L{})), L{});
  // List dequeues cost 3 + 2 + 1, the batched queue moves one batch of 3.
  EXPECT_EQ(qreverse(lq, L{1, 2, 3}).cost, Cost{3 + 6});
  EXPECT_EQ(qreverse(bq, L{1, 2, 3}).cost, Cost{3 + 3});
}

TEST(RunTrace, RejectsUnknownOps) {
  const ListQueue<int> lq{-1};
  OpTrace<int> t{{"pop", {}}};
  EXPECT_THROW((void)run_trace(lq, t), std::invalid_argument);
}

TEST(QueueProperties, RandomStates) {
  Rng rng(17, "queue-properties");
  const auto &alpha = rev_append_fn<int>();
  for (int i = 0; i < 3000; ++i) {
    const Q s = gen::batched_state(rng);
    const L image = rev_append(s);
    // Enqueue square, strict in behavior and cost.
    const int e = static_cast<int>(rng.below(100));
    const auto top = batched_enqueue(e, s);
    const auto abs = list_enqueue(e, LQ{image});
    ASSERT_EQ(rev_append(top.value), abs.value.items);
    ASSERT_EQ(top.cost, abs.cost);
    // Dequeue square, exact in behavior, lax in cost.
    const auto bd = batched_dequeue(s, -1);
    const auto ld = list_dequeue(LQ{image}, -1);
    ASSERT_EQ(bd.value.first, ld.value.first);
    ASSERT_EQ(rev_append(bd.value.second), ld.value.second.items);
    ASSERT_LE(bd.cost, ld.cost);
    ASSERT_TRUE(is_valid(sealed_dequeue(s, -1)));
    // Tilting never changes the image.
    if (auto t = tilt(s))
      ASSERT_TRUE(abstract_equal(s, *t, alpha));
    if (auto t = untilt(s))
      ASSERT_TRUE(abstract_equal(s, *t, alpha));
  }
}

TEST(QueueProperties, AmortizedTotalOnTraces) {
  // Over any trace from empty, batch moves never exceed the number of enqueues.
  Rng rng(19, "amortized");
  const BatchedQueue<int> bq{-1};
  for (int i = 0; i < 500; ++i) {
    const auto trace = random_trace<int>(queue_interface(), rng, rng.below(300), [](Rng &r) { return 1; });
    const auto enqueues =
        static_cast<std::uint64_t>(std::count_if(trace.begin(), trace.end(), [](const auto &c) { return c.op == "enqueue"; }));
    const auto run = run_trace(bq, trace);
    ASSERT_LE(run.cost, Cost{2 * enqueues});
  }
}
