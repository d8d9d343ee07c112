#pragma once

// Queues: the list specification, the batched pair-of-lists implementation,
// the revAppend abstraction function and client programs written once
// against any queue implementation.
//
// Cost model: only list-node work is charged. Enqueue costs 1 on both sides.
// The batched dequeue costs the length of the inbox when it moves a batch to
// the outbox and 0 otherwise; the list dequeue costs the length of the list,
// which makes it an upper bound for the batched one in every state.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "phasecost/cost.hpp"
#include "phasecost/phase.hpp"
#include "phasecost/sealing.hpp"
#include "phasecost/show.hpp"
#include "phasecost/trace.hpp"

namespace phasecost::queues {

template <typename E> using List = std::vector<E>;

template <typename E> struct ListQueueState {
  List<E> items; // front = next to dequeue

  friend bool operator==(const ListQueueState &, const ListQueueState &) = default;
};

template <typename E> struct BatchedQueueState {
  List<E> inbox;  // most recent enqueue first
  List<E> outbox; // next dequeue first

  friend bool operator==(const BatchedQueueState &, const BatchedQueueState &) = default;
};

/// outbox ++ reverse(inbox)
template <typename E> [[nodiscard]] List<E> rev_append(const BatchedQueueState<E> &q) {
  List<E> out;
  out.reserve(q.inbox.size() + q.outbox.size());
  out.insert(out.end(), q.outbox.begin(), q.outbox.end());
  out.insert(out.end(), q.inbox.rbegin(), q.inbox.rend());
  return out;
}

/// The abstraction function of batched queues. One shared instance per element
/// type, so glued values built anywhere compare equal after a round trip.
template <typename E> [[nodiscard]] const AbstractionRef<BatchedQueueState<E>, List<E>> &rev_append_fn() {
  static const auto fn = make_abstraction<BatchedQueueState<E>, List<E>>(
      "revAppend", [](const BatchedQueueState<E> &q) { return rev_append(q); });
  return fn;
}

template <typename E> [[nodiscard]] const AbstractionRef<ListQueueState<E>, List<E>> &list_items_fn() {
  static const auto fn = make_abstraction<ListQueueState<E>, List<E>>(
      "items", [](const ListQueueState<E> &q) { return q.items; });
  return fn;
}

// -- list specification ------------------------------------------------------

template <typename E> [[nodiscard]] ListQueueState<E> list_empty() { return {}; }

template <typename E> [[nodiscard]] Charged<ListQueueState<E>> list_enqueue(const E &e, ListQueueState<E> s) {
  s.items.push_back(e);
  return {Cost{1}, std::move(s)};
}

/// Charges |l|. An empty queue yields the fallback element at cost 0.
template <typename E>
[[nodiscard]] Charged<std::pair<E, ListQueueState<E>>> list_dequeue(const ListQueueState<E> &s, const E &fallback = E{}) {
  if (s.items.empty())
    return {Cost{}, {fallback, s}};
  ListQueueState<E> rest{List<E>(s.items.begin() + 1, s.items.end())};
  return {Cost{s.items.size()}, {s.items.front(), std::move(rest)}};
}

/// The dequeue specification phrased directly on abstract lists.
template <typename E>
[[nodiscard]] Charged<std::pair<E, List<E>>> list_dequeue_abstract(const List<E> &l, const E &fallback = E{}) {
  auto r = list_dequeue(ListQueueState<E>{l}, fallback);
  return {r.cost, {std::move(r.value.first), std::move(r.value.second.items)}};
}

// -- batched implementation ----------------------------------------------------

template <typename E> [[nodiscard]] BatchedQueueState<E> batched_empty() { return {}; }

template <typename E>
[[nodiscard]] Charged<BatchedQueueState<E>> batched_enqueue(const E &e, BatchedQueueState<E> s) {
  s.inbox.insert(s.inbox.begin(), e);
  return {Cost{1}, std::move(s)};
}

template <typename E>
[[nodiscard]] Charged<std::pair<E, BatchedQueueState<E>>> batched_dequeue(BatchedQueueState<E> s,
                                                                          const E &fallback = E{}) {
  Cost moved{};
  if (s.outbox.empty()) {
    if (s.inbox.empty())
      return {Cost{}, {fallback, std::move(s)}};
    moved = Cost{s.inbox.size()};
    s.outbox.assign(s.inbox.rbegin(), s.inbox.rend());
    s.inbox.clear();
  }
  E front = s.outbox.front();
  s.outbox.erase(s.outbox.begin());
  return {moved, {std::move(front), std::move(s)}};
}

/// Batched dequeue sealed under the list specification: the implementation
/// path is mapped through revAppend, the specification charges |revAppend s|.
template <typename E>
[[nodiscard]] Sealed<std::pair<E, List<E>>> sealed_dequeue(const BatchedQueueState<E> &s, const E &fallback = E{}) {
  auto impl = fmap([](const std::pair<E, BatchedQueueState<E>> &r) { return std::pair{r.first, rev_append(r.second)}; },
                   batched_dequeue(s, fallback));
  return seal(std::move(impl), list_dequeue_abstract(rev_append(s), fallback));
}

/// Move the oldest inbox element to the back of the outbox. The result is
/// abstractly equal to the input; nullopt when the inbox is empty.
template <typename E> [[nodiscard]] std::optional<BatchedQueueState<E>> tilt(BatchedQueueState<E> s) {
  if (s.inbox.empty())
    return std::nullopt;
  s.outbox.push_back(s.inbox.back());
  s.inbox.pop_back();
  return s;
}

/// Inverse of tilt: move the last outbox element to the end of the inbox.
template <typename E> [[nodiscard]] std::optional<BatchedQueueState<E>> untilt(BatchedQueueState<E> s) {
  if (s.outbox.empty())
    return std::nullopt;
  s.inbox.push_back(s.outbox.back());
  s.outbox.pop_back();
  return s;
}

// -- implementations as records ------------------------------------------------

template <typename Q>
concept QueueImpl = requires(const Q &q, const typename Q::State &s, const typename Q::Element &e) {
  typename Q::State;
  typename Q::Element;
  { q.name() } -> std::convertible_to<std::string>;
  { q.empty() } -> std::same_as<typename Q::State>;
  { q.enqueue(e, s) } -> std::same_as<Charged<typename Q::State>>;
  { q.dequeue(s) } -> std::same_as<Charged<std::pair<typename Q::Element, typename Q::State>>>;
  { q.abstraction(s) } -> std::same_as<List<typename Q::Element>>;
};

template <typename E> struct ListQueue {
  using Element = E;
  using State = ListQueueState<E>;

  E fallback{};

  [[nodiscard]] std::string name() const { return "listQueue"; }
  [[nodiscard]] State empty() const { return list_empty<E>(); }
  [[nodiscard]] Charged<State> enqueue(const E &e, const State &s) const { return list_enqueue(e, s); }
  [[nodiscard]] Charged<std::pair<E, State>> dequeue(const State &s) const { return list_dequeue(s, fallback); }
  [[nodiscard]] List<E> abstraction(const State &s) const { return s.items; }
};

template <typename E> struct BatchedQueue {
  using Element = E;
  using State = BatchedQueueState<E>;

  E fallback{};

  [[nodiscard]] std::string name() const { return "batchedQueue"; }
  [[nodiscard]] State empty() const { return batched_empty<E>(); }
  [[nodiscard]] Charged<State> enqueue(const E &e, const State &s) const { return batched_enqueue(e, s); }
  [[nodiscard]] Charged<std::pair<E, State>> dequeue(const State &s) const { return batched_dequeue(s, fallback); }
  [[nodiscard]] List<E> abstraction(const State &s) const { return rev_append(s); }
};

static_assert(QueueImpl<ListQueue<int>>);
static_assert(QueueImpl<BatchedQueue<int>>);

// -- clients -------------------------------------------------------------------

/// Enqueue e onto the empty queue and dequeue it again.
template <QueueImpl Q> [[nodiscard]] Charged<typename Q::Element> demo(const Q &q, const typename Q::Element &e) {
  return phasecost::bind(q.enqueue(e, q.empty()), [&](const typename Q::State &s) {
    return fmap([](const auto &r) { return r.first; }, q.dequeue(s));
  });
}

/// fromList [] = empty; fromList (e :: es) = enqueue e (fromList es)
template <QueueImpl Q>
[[nodiscard]] Charged<typename Q::State> from_list(const Q &q, const List<typename Q::Element> &l) {
  Charged<typename Q::State> acc = ret(q.empty());
  for (auto it = l.rbegin(); it != l.rend(); ++it)
    acc = phasecost::bind(acc, [&](const typename Q::State &s) { return q.enqueue(*it, s); });
  return acc;
}

/// Dequeue k times. Past the end of the queue the fallback element pads the result.
template <QueueImpl Q>
[[nodiscard]] Charged<List<typename Q::Element>> to_list(const Q &q, std::size_t k, typename Q::State s) {
  Charged<List<typename Q::Element>> out{Cost{}, {}};
  out.value.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    auto r = q.dequeue(s);
    out.cost += r.cost;
    out.value.push_back(std::move(r.value.first));
    s = std::move(r.value.second);
  }
  return out;
}

template <QueueImpl Q>
[[nodiscard]] Charged<List<typename Q::Element>> qreverse(const Q &q, const List<typename Q::Element> &l) {
  return phasecost::bind(from_list(q, l), [&](const typename Q::State &s) { return to_list(q, l.size(), s); });
}

[[nodiscard]] inline const Interface &queue_interface() {
  static const Interface iface = Interface{}.add("enqueue", 1).add("dequeue", 0);
  return iface;
}

/// Run a trace from the empty queue. Returns the dequeued elements followed by
/// the abstract image of the final state.
template <QueueImpl Q, typename Trace>
[[nodiscard]] Charged<std::pair<List<typename Q::Element>, List<typename Q::Element>>> run_trace(const Q &q,
                                                                                               const Trace &trace) {
  using E = typename Q::Element;
  Cost total{};
  List<E> dequeued;
  typename Q::State s = q.empty();
  for (const auto &call : trace) {
    if (call.op == "enqueue") {
      auto r = q.enqueue(call.args.at(0), s);
      total += r.cost;
      s = std::move(r.value);
    } else if (call.op == "dequeue") {
      auto r = q.dequeue(s);
      total += r.cost;
      dequeued.push_back(std::move(r.value.first));
      s = std::move(r.value.second);
    } else {
      throw std::invalid_argument("run_trace: unknown queue operation " + call.op);
    }
  }
  return {total, {std::move(dequeued), q.abstraction(s)}};
}

} // namespace phasecost::queues

template <typename E>
struct fmt::formatter<phasecost::queues::BatchedQueueState<E>> : fmt::formatter<std::string_view> {
  template <typename Ctx>
  auto format(const phasecost::queues::BatchedQueueState<E> &q, Ctx &ctx) const -> decltype(ctx.out()) {
    return fmt::format_to(ctx.out(), "({}, {})", q.inbox, q.outbox);
  }
};

template <typename E>
struct fmt::formatter<phasecost::queues::ListQueueState<E>> : fmt::formatter<std::string_view> {
  template <typename Ctx>
  auto format(const phasecost::queues::ListQueueState<E> &q, Ctx &ctx) const -> decltype(ctx.out()) {
    return fmt::format_to(ctx.out(), "{}", q.items);
  }
};
