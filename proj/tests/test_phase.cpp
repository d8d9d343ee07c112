#include <string>
#include <tuple>
#include <vector>

#include <gtest/gtest.h>

#include "phasecost/phase.hpp"
#include "phasecost/queues.hpp"
#include "phasecost/rbtree.hpp"

using namespace phasecost;
using Q = queues::BatchedQueueState<int>;
using L = std::vector<int>;

namespace {
const auto &rev() { return queues::rev_append_fn<int>(); }
} // namespace

TEST(Modes, Classification) {
  EXPECT_TRUE(is_abstract(EvaluationMode::Abstract));
  EXPECT_TRUE(is_abstract(EvaluationMode::Behavioral));
  EXPECT_FALSE(is_abstract(EvaluationMode::Concrete));
  EXPECT_FALSE(is_abstract(EvaluationMode::Full));
  EXPECT_TRUE(erases_cost(EvaluationMode::Behavioral));
  EXPECT_FALSE(erases_cost(EvaluationMode::Abstract));
  for (auto m : {EvaluationMode::Full, EvaluationMode::Abstract, EvaluationMode::Concrete, EvaluationMode::Behavioral})
    EXPECT_EQ(parse_mode(to_string(m)), m);
  EXPECT_FALSE(parse_mode("sideways").has_value());
}

TEST(Glue, AcceptsCoherentPairs) {
  EXPECT_NO_THROW((void)glue(Q{}, L{}, rev()));
  EXPECT_NO_THROW((void)glue(Q{{2}, {1}}, L{1, 2}, rev()));
}

TEST(Glue, RejectsIncoherentClaim) {
  try {
    (void)glue(Q{{2}, {1}}, L{2, 1}, rev());
    FAIL() << "expected CoherenceError";
  } catch (const CoherenceError &e) {
    EXPECT_EQ(e.computed(), "[1, 2]");
    EXPECT_EQ(e.claimed(), "[2, 1]");
  }
}

TEST(Fracture, RoundTrips) {
  const auto g = glue(Q{{2}, {1}}, L{1, 2}, rev());
  const auto [c, a, alpha] = fracture(g);
  EXPECT_EQ(c, (Q{{2}, {1}}));
  EXPECT_EQ(a, (L{1, 2}));
  EXPECT_EQ(alpha, rev());
  EXPECT_EQ(glue(fracture(g)), g);

  const auto empty = glue_image(Q{}, rev());
  EXPECT_EQ(fracture(empty), std::make_tuple(Q{}, L{}, rev()));
}

TEST(Project, PerMode) {
  const auto g = glue(Q{{3}, {1, 2}}, L{1, 2, 3}, rev());
  EXPECT_EQ(*project(g, EvaluationMode::Abstract).abstract_, (L{1, 2, 3}));
  EXPECT_FALSE(project(g, EvaluationMode::Abstract).concrete.has_value());
  EXPECT_EQ(*project(g, EvaluationMode::Behavioral).abstract_, (L{1, 2, 3}));
  EXPECT_EQ(*project(g, EvaluationMode::Concrete).concrete, (Q{{3}, {1, 2}}));
  EXPECT_FALSE(project(g, EvaluationMode::Concrete).abstract_.has_value());
  const auto full = project(g, EvaluationMode::Full);
  EXPECT_EQ(*full.concrete, (Q{{3}, {1, 2}}));
  EXPECT_EQ(*full.abstract_, (L{1, 2, 3}));
  EXPECT_EQ(project_abstract(g), (L{1, 2, 3}));
  EXPECT_EQ(project_concrete(g), (Q{{3}, {1, 2}}));

  const Q c{{5, 4}, {9}};
  EXPECT_EQ(*project(glue_image(c, rev()), EvaluationMode::Abstract).abstract_, (*rev())(c));
}

TEST(AbstractEqual, Examples) {
  EXPECT_TRUE(abstract_equal(Q{{2}, {1}}, Q{{}, {1, 2}}, rev()));
  const Q x{{7, 8}, {1}};
  EXPECT_TRUE(abstract_equal(x, x, rev()));
  EXPECT_FALSE(abstract_equal(Q{{1}, {}}, Q{{}, {2}}, rev()));
}

TEST(AbstractEqual, TiltIdentifiesRepresentations) {
  const Q s{{4, 3}, {1, 2}};
  const auto t = queues::tilt(s);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(*t, (Q{{4}, {1, 2, 3}}));
  EXPECT_TRUE(abstract_equal(s, *t, rev()));
  EXPECT_EQ(queues::untilt(*t), s);
  EXPECT_FALSE(queues::tilt(Q{{}, {1}}).has_value());
  EXPECT_FALSE(queues::untilt(Q{{1}, {}}).has_value());
}

namespace {
// A two-element LIFO store posing as a queue: enqueue pushes to the front,
// dequeue pops the front.
struct StackQueue {
  using Element = int;
  using State = queues::ListQueueState<int>;
  int fallback = -1;
  std::string name() const { return "stack"; }
  State empty() const { return {}; }
  Charged<State> enqueue(const int &e, State s) const {
    s.items.insert(s.items.begin(), e);
    return {Cost{1}, s};
  }
  Charged<std::pair<int, State>> dequeue(const State &s) const { return queues::list_dequeue(s, fallback); }
  L abstraction(const State &s) const { return s.items; }
};
static_assert(queues::QueueImpl<StackQueue>);

template <typename Queue> std::vector<int> observe_two(const Queue &q) {
  // enqueue 1, enqueue 2, dequeue, dequeue
  OpTrace<int> t{{"enqueue", {1}}, {"enqueue", {2}}, {"dequeue", {}}, {"dequeue", {}}};
  return erase(queues::run_trace(q, t)).first;
}
} // namespace

TEST(SpecMember, BatchedQueueImplementsListQueue) {
  const queues::BatchedQueue<int> bq{-1};
  const queues::ListQueue<int> lq{-1};
  const auto traces = all_traces<int>(queues::queue_interface(), {0, 1}, 5);
  auto observe = [&](const auto &q) {
    std::vector<std::pair<L, L>> out;
    for (const auto &t : traces)
      out.push_back(erase(queues::run_trace(q, t)));
    return out;
  };
  EXPECT_TRUE(spec_member(bq, lq, observe, std::equal_to<>{}));
  EXPECT_TRUE(spec_member(lq, lq, observe, std::equal_to<>{}));
}

TEST(SpecMember, StackIsNotAQueue) {
  const queues::ListQueue<int> lq{-1};
  const StackQueue sq;
  // Hand trace: FIFO yields [1, 2], LIFO yields [2, 1].
  EXPECT_EQ(observe_two(lq), (L{1, 2}));
  EXPECT_EQ(observe_two(sq), (L{2, 1}));
  auto observe = [](const auto &q) { return observe_two(q); };
  EXPECT_FALSE(spec_member(sq, lq, observe, std::equal_to<>{}));
}

TEST(GluedApply, PreservesCoherence) {
  const auto g = glue_image(Q{{2}, {1}}, rev());
  auto top = [](const Q &q) { return queues::batched_enqueue(3, q).value; };
  auto abs = [](const L &l) {
    L out = l;
    out.push_back(3);
    return out;
  };
  const auto h = glued_apply(g, top, abs);
  EXPECT_EQ(h.abstract_(), (L{1, 2, 3}));
  auto wrong = [](const L &l) {
    L out = l;
    out.insert(out.begin(), 3);
    return out;
  };
  EXPECT_THROW((void)glued_apply(g, top, wrong), CoherenceError);
}

TEST(GluedValue, TreesRoundTrip) {
  const auto t = rbtree::from_list(std::vector<int>{1, 2, 3, 4, 5}).value;
  const auto g = glue_image(t, rbtree::elements_fn<int>());
  EXPECT_EQ(g.abstract_(), (L{1, 2, 3, 4, 5}));
  EXPECT_EQ(glue(fracture(g)), g);
  EXPECT_THROW((void)glue(t, L{1, 2, 3}, rbtree::elements_fn<int>()), CoherenceError);
}
