#pragma once

// Named verification suites. Each suite is a pure function of its
// configuration: the same (suite, seed, iterations, mode) yields the same
// Report, byte for byte once serialized.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "phasecost/cost.hpp"
#include "phasecost/generators.hpp"
#include "phasecost/harness.hpp"
#include "phasecost/phase.hpp"
#include "phasecost/queues.hpp"
#include "phasecost/rbtree.hpp"
#include "phasecost/report.hpp"
#include "phasecost/rng.hpp"
#include "phasecost/sealing.hpp"
#include "phasecost/sorting.hpp"
#include "phasecost/trace.hpp"

namespace phasecost::suites {

enum class ReportFormat { Json, Markdown };

struct SuiteConfig {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 1000;
  EvaluationMode mode = EvaluationMode::Full;
  std::string report_path; // empty: standard output
  ReportFormat format = ReportFormat::Json;
};

class UnknownSuiteError : public std::invalid_argument {
public:
  explicit UnknownSuiteError(const std::string &name) : std::invalid_argument("unknown suite: " + name) {}
};

namespace detail {

inline Report start(const SuiteConfig &cfg) {
  Report r;
  r.suite = cfg.suite;
  r.seed = cfg.seed;
  r.iterations = cfg.iterations;
  r.mode = cfg.mode;
  return r;
}

inline bool throws_coherence(const std::function<void()> &f) {
  try {
    f();
  } catch (const CoherenceError &) {
    return true;
  }
  return false;
}

inline std::optional<BoundViolation> violation_of(const std::function<void()> &f) {
  try {
    f();
  } catch (const BoundViolationError &e) {
    return e.violation();
  }
  return std::nullopt;
}

using IntList = std::vector<int>;
using BState = queues::BatchedQueueState<int>;
using Tree = rbtree::RBTree<int>;

inline constexpr int kFallback = -1;

} // namespace detail

// -- cost effect ---------------------------------------------------------------------

inline Report cost_laws(const SuiteConfig &cfg) {
  using namespace detail;
  Report r = start(cfg);
  Rng rng(cfg.seed, cfg.suite);
  const Checks ck = checks_for(cfg.mode);
  // Under cost erasure, laws are compared on values only.
  auto same = [&](const Charged<int> &a, const Charged<int> &b) { return ck.cost ? a == b : a.value == b.value; };

  for (std::uint64_t i = 0; i < cfg.iterations; ++i) {
    const Charged<int> m = gen::charged(rng);
    const Cost c1 = gen::cost(rng);
    const Cost c2 = gen::cost(rng);
    const int v = static_cast<int>(rng.range(-1000, 1000));
    const Cost ka = gen::cost(rng, 50), ha = gen::cost(rng, 50);
    const int kb = static_cast<int>(rng.range(-50, 50)), hb = static_cast<int>(rng.range(-50, 50));
    auto k = [&](int x) { return Charged<int>{ka, x + kb}; };
    auto h = [&](int x) { return Charged<int>{ha, 2 * x - hb}; };
    auto ret_int = [](int x) { return ret(x); };

    r.expect(same(charge(Cost{}, m), m), "charge zero", show(m), show(m), show(charge(Cost{}, m)));
    r.expect(same(charge(c1, charge(c2, m)), charge(c1 + c2, m)), "charge plus",
             fmt::format("{} {} {}", c1, c2, show(m)), show(charge(c1 + c2, m)), show(charge(c1, charge(c2, m))));
    r.expect(same(phasecost::bind(ret(v), k), k(v)), "monad left unit", show(v), show(k(v)),
             show(phasecost::bind(ret(v), k)));
    r.expect(same(phasecost::bind(m, ret_int), m), "monad right unit", show(m), show(m),
             show(phasecost::bind(m, ret_int)));
    {
      auto lhs = phasecost::bind(phasecost::bind(m, k), h);
      auto rhs = phasecost::bind(m, [&](int x) { return phasecost::bind(k(x), h); });
      r.expect(same(lhs, rhs), "monad associativity", show(m), show(rhs), show(lhs));
    }
    if (ck.behavior)
      r.expect(erase(charge(c1, m)) == erase(m), "erase forgets charge", show(m), show(erase(m)),
               show(erase(charge(c1, m))));
    if (ck.cost) {
      r.expect(leq(m, m), "leq reflexive", show(m), "true", "false");
      const Charged<int> b{m.cost + c1, m.value};
      const Charged<int> c{b.cost + c2, m.value};
      r.expect(!(leq(m, b) && leq(b, c)) || leq(m, c), "leq transitive", show(std::tuple{m, b, c}), "true",
               "false");
      const Charged<int> y{gen::cost(rng, 3), rng.coin() ? m.value : m.value + 1};
      const Charged<int> x{gen::cost(rng, 3), m.value};
      if (leq(x, y) && leq(y, x))
        r.expect(x.cost == y.cost && x.value == y.value, "leq antisymmetric", show(std::pair{x, y}), "equal",
                 "different");
      else
        ++r.cases;
    }
    if (ck.behavior) {
      // Once cost is erased, the inequality collapses to equality.
      const Charged<int> y{gen::cost(rng), rng.coin() ? m.value : static_cast<int>(rng.range(-1000, 1000))};
      const bool collapsed = leq(ret(erase(m)), ret(erase(y)));
      r.expect(collapsed == (m.value == y.value), "erased leq is equality", show(std::pair{m, y}),
               show(m.value == y.value), show(collapsed));
    }
  }
  return r;
}

// -- glue and fracture --------------------------------------------------------------

inline Report phase_glue(const SuiteConfig &cfg) {
  using namespace detail;
  Report r = start(cfg);
  Rng rng(cfg.seed, cfg.suite);
  const Checks ck = checks_for(cfg.mode);
  const auto &alpha_q = queues::rev_append_fn<int>();
  const auto &alpha_t = rbtree::elements_fn<int>();

  auto shuffle_tilts = [&](BState s) {
    const std::size_t moves = rng.below(8);
    for (std::size_t j = 0; j < moves; ++j) {
      auto next = rng.coin() ? queues::tilt(s) : queues::untilt(s);
      if (next)
        s = std::move(*next);
    }
    return s;
  };

  auto check_projection = [&](const auto &g) {
    const auto p = project(g, cfg.mode);
    const bool ok = is_abstract(cfg.mode)                    ? (!p.concrete && p.abstract_ == g.abstract_())
                    : cfg.mode == EvaluationMode::Concrete ? (p.concrete == g.concrete() && !p.abstract_)
                                                           : (p.concrete == g.concrete() && p.abstract_ == g.abstract_());
    r.expect(ok, "projection matches mode", show(g.abstract_()), std::string(to_string(cfg.mode)), "mismatch");
  };

  for (std::uint64_t i = 0; i < cfg.iterations; ++i) {
    // batched queues
    {
      const BState s = gen::batched_state(rng);
      const auto g = glue_image(s, alpha_q);
      r.expect(glue(fracture(g)) == g, "glue after fracture (queue)", show(s), "identity", "changed");
      const auto [c, a, al] = fracture(glue(s, g.abstract_(), alpha_q));
      r.expect(c == s && a == g.abstract_() && al == alpha_q, "fracture after glue (queue)", show(s), "identity",
               "changed");
      IntList wrong = g.abstract_();
      wrong.push_back(static_cast<int>(rng.range(0, 99)));
      r.expect(throws_coherence([&] { (void)glue(s, wrong, alpha_q); }), "incoherent glue rejected (queue)", show(s),
               "CoherenceError", "accepted");
      check_projection(g);
      if (ck.behavior) {
        const BState t = shuffle_tilts(s);
        const BState u = shuffle_tilts(t);
        r.expect(abstract_equal(s, s, alpha_q), "abstract_equal reflexive", show(s), "true", "false");
        r.expect(abstract_equal(s, t, alpha_q) == abstract_equal(t, s, alpha_q), "abstract_equal symmetric",
                 show(std::pair{s, t}), "symmetric", "asymmetric");
        r.expect(abstract_equal(s, t, alpha_q) && abstract_equal(t, u, alpha_q) && abstract_equal(s, u, alpha_q),
                 "tilts stay in one class", show(std::tuple{s, t, u}), "true", "false");
        const BState other = gen::batched_state(rng);
        const bool eq = abstract_equal(s, other, alpha_q);
        r.expect(eq == (queues::rev_append(s) == queues::rev_append(other)), "abstract_equal is kernel of revAppend",
                 show(std::pair{s, other}), show(!eq), show(eq));
      }
    }
    // red-black trees
    {
      const Tree t = gen::tree(rng);
      const auto g = glue_image(t, alpha_t);
      r.expect(glue(fracture(g)) == g, "glue after fracture (rbtree)", show(t), "identity", "changed");
      const auto [c, a, al] = fracture(glue(t, g.abstract_(), alpha_t));
      r.expect(c == t && a == g.abstract_() && al == alpha_t, "fracture after glue (rbtree)", show(t), "identity",
               "changed");
      IntList wrong = g.abstract_();
      if (wrong.empty())
        wrong.push_back(0);
      else
        wrong.front() += 1;
      r.expect(throws_coherence([&] { (void)glue(t, wrong, alpha_t); }), "incoherent glue rejected (rbtree)",
               show(t), "CoherenceError", "accepted");
      check_projection(g);
      if (ck.behavior) {
        const Tree rebuilt = rbtree::from_list(rbtree::elements(t)).value;
        r.expect(abstract_equal(t, rebuilt, alpha_t), "rebuilt tree abstractly equal", show(t), "true", "false");
      }
    }
  }
  return r;
}

// -- queues ------------------------------------------------------------------------------

namespace detail {

inline auto enqueue_square() {
  using CIn = std::pair<int, BState>;
  using AIn = std::pair<int, IntList>;
  const auto &rev = queues::rev_append_fn<int>();
  SquareSpec<CIn, AIn, BState, IntList> sq;
  sq.name = "enqueue";
  sq.f_top = [](const CIn &x) { return queues::batched_enqueue(x.first, x.second); };
  sq.f_abs = [](const AIn &x) { return fmap([](const auto &s) { return s.items; },
                                            queues::list_enqueue(x.first, queues::ListQueueState<int>{x.second})); };
  sq.alpha_in = make_abstraction<CIn, AIn>("id x revAppend", [](const CIn &x) {
    return AIn{x.first, queues::rev_append(x.second)};
  });
  sq.alpha_out = rev;
  return sq;
}

inline auto dequeue_square() {
  using COut = std::pair<int, BState>;
  using AOut = std::pair<int, IntList>;
  SquareSpec<BState, IntList, COut, AOut> sq;
  sq.name = "dequeue";
  sq.f_top = [](const BState &s) { return queues::batched_dequeue(s, kFallback); };
  sq.f_abs = [](const IntList &l) { return queues::list_dequeue_abstract(l, kFallback); };
  sq.alpha_in = queues::rev_append_fn<int>();
  sq.alpha_out = make_abstraction<COut, AOut>("id x revAppend", [](const COut &x) {
    return AOut{x.first, queues::rev_append(x.second)};
  });
  sq.lax = true;
  sq.size_of = [](const BState &s) { return std::uint64_t{s.inbox.size() + s.outbox.size()}; };
  return sq;
}

/// Walk a trace on both queues in lock step, collecting every state reached
/// and checking the amortized totals at the end.
inline void walk_trace(const OpTrace<int> &trace, std::vector<BState> &states, Report &r, const Checks &ck) {
  const queues::BatchedQueue<int> bq{kFallback};
  const queues::ListQueue<int> lq{kFallback};
  BState s = bq.empty();
  auto ls = lq.empty();
  std::uint64_t enqueues = 0;
  Cost reversal{}, spec_dequeues{}, total{};
  states.push_back(s);
  for (const auto &call : trace) {
    if (call.op == "enqueue") {
      ++enqueues;
      auto b = bq.enqueue(call.args.at(0), s);
      total += b.cost;
      s = std::move(b.value);
      ls = lq.enqueue(call.args.at(0), ls).value;
    } else {
      auto b = bq.dequeue(s);
      auto l = lq.dequeue(ls);
      total += b.cost;
      reversal += b.cost;
      spec_dequeues += l.cost;
      s = std::move(b.value.second);
      ls = std::move(l.value.second);
    }
    states.push_back(s);
  }
  if (ck.cost) {
    r.expect(reversal <= Cost{enqueues}, "reversal work bounded by enqueues", show(trace), show(enqueues),
             show(reversal));
    r.expect(total <= Cost{enqueues} + spec_dequeues, "amortized trace cost", show(trace),
             show(Cost{enqueues} + spec_dequeues), show(total));
  }
}

} // namespace detail

inline Report queues_coherence(const SuiteConfig &cfg) {
  using namespace detail;
  Report r = start(cfg);
  Rng rng(cfg.seed, cfg.suite);
  const Checks ck = checks_for(cfg.mode);
  const auto &iface = queues::queue_interface();

  std::vector<BState> states;
  std::vector<std::pair<int, BState>> enqueue_inputs;
  // Exhaustive: every trace of length <= 6 over a two-element alphabet.
  for (const auto &trace : all_traces<int>(iface, {0, 1}, 6)) {
    std::vector<BState> visited;
    walk_trace(trace, visited, r, ck);
    states.push_back(visited.back());
  }
  for (const auto &s : states)
    for (int e : {0, 1})
      enqueue_inputs.emplace_back(e, s);
  // Random: traces of length <= 200.
  for (std::uint64_t i = 0; i < cfg.iterations; ++i) {
    const auto trace = random_trace<int>(iface, rng, rng.below(201), [](Rng &g) { return static_cast<int>(g.below(100)); });
    r.expect(iface.validates(trace), "trace well-formed", show(trace.size()), "valid", "invalid");
    std::vector<BState> visited;
    walk_trace(trace, visited, r, ck);
    for (auto &s : visited) {
      enqueue_inputs.emplace_back(static_cast<int>(rng.below(100)), s);
      states.push_back(std::move(s));
    }
  }

  CostTable table;
  if (ck.behavior)
    r.expect(queues::rev_append(queues::batched_empty<int>()) == queues::list_empty<int>().items, "empty square",
             "empty", "[]", show(queues::rev_append(queues::batched_empty<int>())));
  check_square(enqueue_square(), enqueue_inputs, r, nullptr, ck);
  check_square(dequeue_square(), states, r, ck.cost ? &table : nullptr, ck);

  const auto &alpha = queues::rev_append_fn<int>();
  for (const auto &s : states) {
    if (ck.cost) {
      auto v = violation_of([&] { (void)queues::sealed_dequeue(s, kFallback); });
      r.expect(!v, "sealed dequeue accepted", show(s), "Sealed", v ? v->describe() : "");
    }
    if (ck.behavior) {
      // Abstractly equal states must give abstractly equal results.
      for (auto moved : {queues::tilt(s), queues::untilt(s)}) {
        if (!moved)
          continue;
        const BState &t = *moved;
        r.expect(abstract_equal(s, t, alpha), "tilt preserves abstraction", show(std::pair{s, t}), "true", "false");
        const auto ds = queues::batched_dequeue(s, kFallback).value;
        const auto dt = queues::batched_dequeue(t, kFallback).value;
        r.expect(ds.first == dt.first && abstract_equal(ds.second, dt.second, alpha), "dequeue respects quotient",
                 show(std::pair{s, t}), show(ds.first), show(dt.first));
        const auto es = queues::batched_enqueue(7, s).value;
        const auto et = queues::batched_enqueue(7, t).value;
        r.expect(abstract_equal(es, et, alpha), "enqueue respects quotient", show(std::pair{s, t}), "equal images",
                 "different images");
      }
    }
  }
  r.cost_table = table.rows();
  return r;
}

inline Report queues_noninterference(const SuiteConfig &cfg) {
  using namespace detail;
  Report r = start(cfg);
  Rng rng(cfg.seed, cfg.suite);
  const Checks ck = checks_for(cfg.mode);
  const queues::ListQueue<int> lq{kFallback};
  const queues::BatchedQueue<int> bq{kFallback};
  CostTable table;

  auto demo_client = [](const auto &q, const int &e) { return erase(queues::demo(q, e)); };
  auto qreverse_client = [](const auto &q, const IntList &l) { return erase(queues::qreverse(q, l)); };
  auto trace_client = [](const auto &q, const OpTrace<int> &t) { return erase(queues::run_trace(q, t)); };
  using Roundtrip = std::pair<IntList, std::size_t>;
  auto roundtrip_client = [](const auto &q, const Roundtrip &in) {
    return erase(phasecost::bind(queues::from_list(q, in.first),
                                 [&](const auto &s) { return queues::to_list(q, in.second, s); }));
  };

  const auto demo_impls = instantiate<int, int>(demo_client, lq, bq);
  const auto qrev_impls = instantiate<IntList, IntList>(qreverse_client, lq, bq);
  const auto trace_impls = instantiate<OpTrace<int>, std::pair<IntList, IntList>>(trace_client, lq, bq);
  const auto roundtrip_impls = instantiate<Roundtrip, IntList>(roundtrip_client, lq, bq);

  if (ck.behavior) {
    // Both queues are members of the list-queue specification type, judged by
    // their abstract observations on every trace of length <= 4.
    const auto battery = all_traces<int>(queues::queue_interface(), {0, 1}, 4);
    auto observe = [&](const auto &q) {
      std::vector<std::pair<IntList, IntList>> out;
      for (const auto &t : battery)
        out.push_back(erase(queues::run_trace(q, t)));
      return out;
    };
    r.expect(spec_member(bq, lq, observe, std::equal_to<>{}), "batchedQueue is a listQueue spec member",
             "traces <= 4", "true", "false");
  }

  for (std::uint64_t i = 0; i < cfg.iterations; ++i) {
    const int e = i == 0 ? kFallback : static_cast<int>(rng.below(100));
    const IntList l = gen::list_of_length_up_to(rng, 200);
    const auto trace =
        random_trace<int>(queues::queue_interface(), rng, rng.below(201), [](Rng &g) { return static_cast<int>(g.below(100)); });
    const Roundtrip rt{gen::list_of_length_up_to(rng, 50), rng.below(60)};

    if (ck.behavior) {
      check_noninterference("demo", demo_impls, std::equal_to<>{}, std::vector<int>{e}, r);
      for (const auto &impl : demo_impls)
        r.expect(impl.run(e) == e, "demo returns its input (" + impl.name + ")", show(e), show(e), show(impl.run(e)));
      check_noninterference("qreverse", qrev_impls, std::equal_to<>{}, std::vector<IntList>{l}, r);
      const IntList reversed(l.rbegin(), l.rend());
      for (const auto &impl : qrev_impls)
        r.expect(impl.run(l) == reversed, "qreverse equals reverse (" + impl.name + ")", show(l), show(reversed),
                 show(impl.run(l)));
      check_noninterference("random trace", trace_impls, std::equal_to<>{}, std::vector<OpTrace<int>>{trace}, r);
      check_noninterference("fromList/toList", roundtrip_impls, std::equal_to<>{}, std::vector<Roundtrip>{rt}, r);
    }
    if (ck.cost) {
      // Batched dequeues never cost more than list dequeues, so neither does the client.
      const Cost batched = queues::qreverse(bq, l).cost;
      const Cost listed = queues::qreverse(lq, l).cost;
      r.expect(batched <= listed, "qreverse cost bounded by list spec", show(l), show(listed), show(batched));
      table.record(l.size(), batched, listed);
    }
  }
  r.cost_table = table.rows();
  return r;
}

// -- sealing --------------------------------------------------------------------------------

inline Report sealing_laws(const SuiteConfig &cfg) {
  using namespace detail;
  Report r = start(cfg);
  Rng rng(cfg.seed, cfg.suite);
  const Checks ck = checks_for(cfg.mode);
  auto same = [&](const Sealed<int> &a, const Sealed<int> &b) {
    return ck.cost ? a == b : (a.impl().value == b.impl().value && a.spec().value == b.spec().value);
  };
  auto same_charged = [&](const Charged<int> &a, const Charged<int> &b) {
    return ck.cost ? a == b : a.value == b.value;
  };
  std::vector<Sealed<int>> built;
  auto keep = [&](Sealed<int> s) {
    built.push_back(s);
    return s;
  };

  for (std::uint64_t i = 0; i < cfg.iterations; ++i) {
    const Sealed<int> s = keep(gen::seal_int(rng));
    const Charged<int> m = gen::charged(rng);

    {
      const Sealed<int> refl = keep(seal(m, m));
      r.expect(same_charged(unseal_abstract(refl), m) && same_charged(unseal_concrete(refl), m),
               "reflexive seal is identity", show(m), show(m), show(refl));
    }
    r.expect(same_charged(unseal_abstract(s), s.spec()) && same_charged(unseal_concrete(s), s.impl()),
             "unseal projections", show(s), show(s), "mismatch");
    {
      const Charged<int> spec2 = gen::above(rng, s.spec());
      const Sealed<int> lhs = keep(reseal(s, spec2));
      const Sealed<int> rhs = keep(seal(s.impl(), spec2));
      r.expect(same(lhs, rhs), "reseal is transitive", show(std::pair{s, spec2}), show(rhs), show(lhs));
      r.expect(same(keep(reseal(s, s.spec())), s), "reflexive reseal", show(s), show(s), "changed");
    }
    if (ck.cost) {
      if (s.spec().cost > Cost{}) {
        const Charged<int> lower{Cost{s.spec().cost.units() - 1}, s.spec().value};
        auto v = violation_of([&] { (void)reseal(s, lower); });
        r.expect(v && v->cost_overrun, "reseal below spec refused", show(std::pair{s, lower}), "BoundViolation(cost)",
                 v ? v->describe() : "accepted");
      }
      const Charged<int> over{s.spec().cost + Cost{1 + rng.below(10)}, s.spec().value};
      auto v = violation_of([&] { (void)seal(over, s.spec()); });
      r.expect(v && v->cost_overrun && !v->behavior_mismatch, "cost overrun refused", show(std::pair{over, s.spec()}),
               "BoundViolation(cost)", v ? v->describe() : "accepted");
    }
    if (ck.behavior) {
      const Charged<int> other{s.spec().cost, s.spec().value + 1};
      auto v = violation_of([&] { (void)seal(s.impl(), other); });
      r.expect(v && v->behavior_mismatch, "behavior mismatch refused", show(std::pair{s.impl(), other}),
               "BoundViolation(behavior)", v ? v->describe() : "accepted");
    }
    {
      const Cost a = gen::cost(rng, 100), b = gen::cost(rng, 100);
      const Sealed<int> lhs = keep(seal_charge(a, s));
      const Sealed<int> rhs = keep(seal(charge(a, s.impl()), charge(a, s.spec())));
      r.expect(same(lhs, rhs), "seal commutes with charge", show(std::pair{a, s}), show(rhs), show(lhs));
      r.expect(same(keep(seal_charge(Cost{}, s)), s), "seal_charge zero", show(s), show(s), "changed");
      const Sealed<int> twice = keep(seal_charge(a, keep(seal_charge(b, s))));
      const Sealed<int> once = keep(seal_charge(a + b, s));
      r.expect(same(twice, once), "seal_charge plus", show(std::tuple{a, b, s}), show(once), show(twice));
    }
    {
      const Sealed<int> left = keep(seal_join(seal_return(s)));
      r.expect(same(left, s), "seal monad left unit", show(s), show(s), show(left));
      const Sealed<int> right = keep(seal_join(seal_map([](int x) { return seal_return(x); }, s)));
      r.expect(same(right, s), "seal monad right unit", show(s), show(s), show(right));
      const auto ss = gen::nest(rng, s);
      const auto sss = gen::nest(rng, ss);
      const Sealed<int> outer_first = keep(seal_join(seal_join(sss)));
      const Sealed<int> inner_first = keep(seal_join(seal_map([](const Sealed<Sealed<int>> &x) { return seal_join(x); }, sss)));
      r.expect(same(outer_first, inner_first), "seal monad associativity", show(sss), show(inner_first),
               show(outer_first));
      const Sealed<int> joined = keep(seal_join(ss));
      const Charged<int> want_impl{ss.impl().cost + s.impl().cost, s.impl().value};
      const Charged<int> want_spec{ss.spec().cost + ss.spec().value.spec().cost, ss.spec().value.spec().value};
      r.expect(same_charged(joined.impl(), want_impl) && same_charged(joined.spec(), want_spec),
               "join sums costs along each path", show(ss), show(std::pair{want_impl, want_spec}), show(joined));
    }
  }
  if (ck.cost)
    for (const auto &s : built)
      r.expect(is_valid(s) && s.impl().cost <= s.spec().cost, "every constructed seal is valid", show(s), "valid",
               "invalid");
  return r;
}

// -- red-black trees --------------------------------------------------------------------

inline Report rbtree_invariants(const SuiteConfig &cfg) {
  using namespace detail;
  Report r = start(cfg);
  Rng rng(cfg.seed, cfg.suite);
  const Checks ck = checks_for(cfg.mode);
  CostTable table;
  const auto &alpha = *rbtree::elements_fn<int>();

  auto check_append = [&](const Tree &a, const Tree &b) {
    const auto out = rbtree::append(a, b);
    auto inputs = [&] { return show(std::pair{a, b}); };
    if (ck.structure) {
      const auto bad = rbtree::audit(out.value);
      r.expect_lazy(!bad, "red-black invariants after append",
                    [&] { return std::tuple{inputs(), std::string("valid"), bad.value_or("")}; });
    }
    if (ck.behavior) {
      IntList want = rbtree::elements(a);
      const IntList eb = rbtree::elements(b);
      want.insert(want.end(), eb.begin(), eb.end());
      const IntList got = rbtree::elements(out.value);
      r.expect_lazy(got == want, "elements of append", [&] { return std::tuple{inputs(), show(want), show(got)}; });
      const Tree reference = Tree::node_unchecked(rbtree::Color::Black, a, b);
      r.expect_lazy(rbtree::elements_equal(out.value, reference), "append is abstractly the black constructor",
                    [&] { return std::tuple{inputs(), show(reference), show(out.value)}; });
    }
    if (ck.cost) {
      const Cost bound = rbtree::append_bound(a.black_height(), b.black_height());
      auto v = violation_of([&] { (void)rbtree::sealed_append(a, b); });
      r.expect_lazy(!v, "sealed append accepted", [&] { return std::tuple{inputs(), show(bound), v->describe()}; });
      const std::size_t diff = a.black_height() > b.black_height() ? a.black_height() - b.black_height()
                                                                   : b.black_height() - a.black_height();
      table.record(diff, out.cost, bound);
    }
    return out.value;
  };

  for (std::uint64_t i = 0; i < cfg.iterations; ++i) {
    Tree t = gen::tree(rng, rng.geometric(8.0, 64));
    const std::size_t steps = 1 + rng.below(8);
    for (std::size_t j = 0; j < steps; ++j) {
      const Tree piece = gen::tree(rng);
      t = rng.coin() ? check_append(t, piece) : check_append(piece, t);
    }
  }

  if (ck.behavior) {
    const std::function<Charged<Tree>(const Tree &, const Tree &)> app = [](const Tree &a, const Tree &b) {
      return rbtree::append(a, b);
    };
    const std::uint64_t triples = std::max<std::uint64_t>(1, cfg.iterations / 10);
    const Generator<Tree> g = [](Rng &x) { return gen::tree(x); };
    r.absorb(check_abstract_monoid<Tree, IntList>("append", Tree::empty(), app, alpha, g, triples, rng));

    // Registered abstract-level clients cannot tell elements-equal trees apart.
    std::vector<std::pair<Tree, Tree>> pairs;
    for (std::uint64_t i = 0; i < triples; ++i) {
      const Tree t = gen::tree(rng);
      pairs.emplace_back(t, rbtree::from_list(rbtree::elements(t)).value);
    }
    const std::function<std::size_t(const Tree &)> len = [](const Tree &t) { return erase(rbtree::length(t)); };
    const std::function<long(const Tree &)> total = [](const Tree &t) {
      const IntList es = rbtree::elements(t);
      return std::accumulate(es.begin(), es.end(), 0L);
    };
    check_factors_through_abstract("length", len, alpha, pairs, r);
    check_factors_through_abstract("sum", total, alpha, pairs, r);
  }
  r.cost_table = table.rows();
  return r;
}

inline Report rbtree_universal(const SuiteConfig &cfg) {
  using namespace detail;
  Report r = start(cfg);
  Rng rng(cfg.seed, cfg.suite);
  const Checks ck = checks_for(cfg.mode);

  const MonoidOps<std::size_t, int> counting = rbtree::counting_monoid<int>();
  const MonoidOps<IntList, int> listm{
      {},
      [](const IntList &a, const IntList &b) {
        IntList c = a;
        c.insert(c.end(), b.begin(), b.end());
        return ret(std::move(c));
      },
      [](const int &e) { return IntList{e}; }};
  const MonoidOps<long, int> maxm{0, [](long a, long b) { return ret(std::max(a, b)); },
                                  [](const int &e) { return static_cast<long>(e); }};
  const MonoidOps<Tree, int> trees{Tree::empty(), [](const Tree &a, const Tree &b) { return rbtree::append(a, b); },
                                   [](const int &e) { return Tree::singleton(e); }};

  const std::function<std::vector<int>(const Tree &)> elements = [](const Tree &t) { return rbtree::elements(t); };
  auto mr = [](const auto &target) {
    using Y = std::decay_t<decltype(target.empty)>;
    return std::function<Charged<Y>(const Tree &, const MonoidOps<Y, int> &)>(
        [](const Tree &t, const MonoidOps<Y, int> &m) { return rbtree::mapreduce(t, m); });
  };

  std::vector<Tree> inputs;
  for (std::uint64_t i = 0; i < cfg.iterations; ++i)
    inputs.push_back(gen::tree(rng));

  if (ck.behavior) {
    check_universal_property<Tree, std::size_t, int>(
        "(N, 0, +)", mr(counting), elements, counting, std::equal_to<>{}, inputs, r,
        {{"length_fast", [](const Tree &t) { return erase(rbtree::length_fast(t)); }},
         {"|elements|", [](const Tree &t) { return rbtree::elements(t).size(); }}});
    check_universal_property<Tree, IntList, int>("list", mr(listm), elements, listm, std::equal_to<>{}, inputs, r,
                                                 {{"elements", [](const Tree &t) { return rbtree::elements(t); }}});
    check_universal_property<Tree, long, int>(
        "(N, 0, max)", mr(maxm), elements, maxm, std::equal_to<>{}, inputs, r,
        {{"max_element", [](const Tree &t) {
            const IntList es = rbtree::elements(t);
            return es.empty() ? 0L : static_cast<long>(*std::max_element(es.begin(), es.end()));
          }}});

    std::vector<std::pair<Tree, Tree>> pairs;
    std::vector<int> elems;
    for (std::size_t i = 0; i + 1 < inputs.size(); i += 2)
      pairs.emplace_back(inputs[i], inputs[i + 1]);
    for (std::uint64_t i = 0; i < std::max<std::uint64_t>(1, cfg.iterations / 10); ++i)
      elems.push_back(static_cast<int>(rng.below(100)));
    const auto length_map = std::function<Charged<std::size_t>(const Tree &)>(
        [&](const Tree &t) { return rbtree::mapreduce(t, counting); });
    const auto identity_n = make_abstraction<std::size_t, std::size_t>("id", [](std::size_t n) { return n; });
    check_abstract_hom<Tree, std::size_t, int, std::size_t>("length", length_map, trees, counting, *identity_n, pairs,
                                                            elems, r);
  }
  for (const auto &t : inputs) {
    r.expect(erase(rbtree::length_fast(t)) == rbtree::elements(t).size(), "length_fast equals |elements|", show(t),
             show(rbtree::elements(t).size()), show(erase(rbtree::length_fast(t))));
    if (ck.cost)
      r.expect(rbtree::length_fast(t).cost == Cost{1}, "length_fast costs one unit", show(t), "1",
               show(rbtree::length_fast(t).cost));
  }
  return r;
}

inline Report rbtree_reduce(const SuiteConfig &cfg) {
  using namespace detail;
  Report r = start(cfg);
  Rng rng(cfg.seed, cfg.suite);
  const Checks ck = checks_for(cfg.mode);
  CostTable table;
  auto plus = [](int a, int b) { return Charged<int>{Cost{1}, a + b}; };

  for (std::uint64_t i = 0; i < cfg.iterations; ++i) {
    const std::size_t n = rng.below(1025);
    const Tree t = gen::tree(rng, n, 0, 1000);
    const IntList es = rbtree::elements(t);
    const int fold = std::accumulate(es.begin(), es.end(), 0);
    const auto out = rbtree::reduce(plus, 0, t);

    // The client side of the contract: the combiner is a unit-cost monoid.
    if (!es.empty()) {
      const int a = es.front(), b = es.back(), c = es[es.size() / 2];
      r.expect(plus(a, b).cost == Cost{1}, "combiner has unit cost", show(std::pair{a, b}), "1",
               show(plus(a, b).cost));
      r.expect(plus(plus(a, b).value, c).value == plus(a, plus(b, c).value).value && plus(0, a).value == a &&
                   plus(a, 0).value == a,
               "combiner is a monoid", show(std::tuple{a, b, c}), "true", "false");
    }
    if (ck.behavior)
      r.expect(out.value == fold, "reduce equals fold", show(n), show(fold), show(out.value));
    if (ck.cost) {
      const Cost bound{2 * std::uint64_t{n}};
      r.expect(out.cost <= bound, "reduce cost <= 2 * size", show(n), show(bound), show(out.cost));
      auto v = violation_of([&] { (void)seal(out, Charged<int>{bound, fold}); });
      r.expect(!v, "sealed reduce accepted", show(n), "Sealed", v ? v->describe() : "");
      table.record(n, out.cost, bound);
    }
  }
  r.cost_table = table.rows();
  return r;
}

// -- sorting ----------------------------------------------------------------------------------

namespace detail {

inline Report sorting_suite(const SuiteConfig &cfg, const sorting::SortAlgorithm &algorithm,
                            const sorting::CostBound &bound, const sorting::SortAlgorithm &sibling,
                            const std::string &label) {
  Report r = start(cfg);
  Rng rng(cfg.seed, cfg.suite);
  const Checks ck = checks_for(cfg.mode);
  CostTable table;

  auto check = [&](const sorting::SortInput &l) {
    const auto out = algorithm(l);
    const auto want = sorting::sort_spec(l);
    if (ck.behavior) {
      r.expect(out.value == want, label + " sorts", show(l), show(want), show(out.value));
      // Both algorithms inhabit the behavioral sort type: clients cannot tell them apart.
      const auto other = erase(sibling(l));
      r.expect(other == out.value, label + " noninterference with sibling sort", show(l), show(other),
               show(out.value));
    }
    if (ck.cost) {
      const Cost b = bound(l.size());
      r.expect(out.cost <= b, label + " comparisons within bound", show(l), show(b), show(out.cost));
      auto v = violation_of([&] { (void)sorting::sealed_sort(algorithm, bound, l); });
      r.expect(!v, label + " sealed sort accepted", show(l), "Sealed", v ? v->describe() : "");
      table.record(l.size(), out.cost, b);
    }
  };

  // Exhaustive: every permutation of 0..n-1 for n <= 8.
  for (std::size_t n = 0; n <= 8; ++n) {
    sorting::SortInput l(n);
    std::iota(l.begin(), l.end(), sorting::Nat{0});
    do
      check(l);
    while (std::next_permutation(l.begin(), l.end()));
  }
  // Random: lengths up to 512, duplicates allowed.
  for (std::uint64_t i = 0; i < cfg.iterations; ++i)
    check(gen::nats(rng, rng.below(513)));

  r.cost_table = table.rows();
  return r;
}

} // namespace detail

inline Report sorting_isort(const SuiteConfig &cfg) {
  return detail::sorting_suite(cfg, sorting::isort, sorting::quadratic_bound, sorting::msort, "isort");
}

inline Report sorting_msort(const SuiteConfig &cfg) {
  return detail::sorting_suite(cfg, sorting::msort, sorting::loglinear_bound, sorting::isort, "msort");
}

// -- registry ------------------------------------------------------------------------------------

using SuiteFn = Report (*)(const SuiteConfig &);

struct SuiteEntry {
  std::string_view name;
  std::string_view summary;
  SuiteFn run;
};

[[nodiscard]] inline const std::vector<SuiteEntry> &registry() {
  static const std::vector<SuiteEntry> entries{
      {"cost/laws", "cost monoid, writer monad and cost order laws", cost_laws},
      {"phase/glue", "glue/fracture round trips, projections, abstract equality", phase_glue},
      {"queues/coherence", "batched queue coherence squares, sealed dequeue, amortized totals", queues_coherence},
      {"queues/noninterference", "clients agree under listQueue and batchedQueue", queues_noninterference},
      {"sealing/laws", "seal, reseal, charge commutation and sealing monad laws", sealing_laws},
      {"rbtree/invariants", "red-black invariants, append coherence, abstract monoid laws", rbtree_invariants},
      {"rbtree/universal", "mapreduce universal property, abstract homomorphism, cached length", rbtree_universal},
      {"rbtree/reduce", "linear-cost reduce with a unit-cost combiner", rbtree_reduce},
      {"sorting/isort", "insertion sort within n^2 comparisons", sorting_isort},
      {"sorting/msort", "merge sort within n*ceil(lg n) comparisons", sorting_msort},
  };
  return entries;
}

[[nodiscard]] inline const SuiteEntry *find_suite(std::string_view name) {
  for (const auto &e : registry())
    if (e.name == name)
      return &e;
  return nullptr;
}

/// Throws UnknownSuiteError for names not in the registry.
[[nodiscard]] inline Report run_suite(const SuiteConfig &cfg) {
  if (cfg.iterations < 1)
    throw std::invalid_argument("iterations must be at least 1");
  const SuiteEntry *entry = find_suite(cfg.suite);
  if (!entry)
    throw UnknownSuiteError(cfg.suite);
  return entry->run(cfg);
}

[[nodiscard]] inline std::string emit_report(const Report &r, ReportFormat format) {
  return format == ReportFormat::Json ? emit_json(r) : emit_markdown(r);
}

} // namespace phasecost::suites
