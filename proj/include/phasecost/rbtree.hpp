#pragma once

// Join-based red-black trees storing data at the leaves, viewed abstractly as
// sequences through their in-order traversal.
//
// Shape invariants (checked dynamically by audit):
//   * Empty and Leaf are black with black height 0;
//   * a Red node has black children of equal black height n, and height n;
//   * a Black node has children of equal black height n, and height n + 1.
// There is no ordering invariant: this is a sequence, not a search tree.
// Trees are persistent; subtrees are shared between versions.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <fmt/format.h>

#include "phasecost/cost.hpp"
#include "phasecost/harness.hpp"
#include "phasecost/phase.hpp"
#include "phasecost/sealing.hpp"
#include "phasecost/show.hpp"

namespace phasecost::rbtree {

enum class Color { Red, Black };
enum class NodeKind { Empty, Leaf, Red, Black };

template <typename E> class RBTree {
  struct Node {
    NodeKind kind = NodeKind::Empty;
    std::optional<E> elem;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::size_t black_height = 0;
    std::size_t size = 0;
  };

public:
  using element_type = E;

  RBTree() : node_(empty_node()) {}

  [[nodiscard]] static RBTree empty() { return {}; }

  [[nodiscard]] static RBTree singleton(E e) {
    auto n = std::make_shared<Node>();
    n->kind = NodeKind::Leaf;
    n->elem = std::move(e);
    n->size = 1;
    return RBTree(std::move(n));
  }

  /// Build an internal node without any balance check. The cached black height
  /// is taken from the left child; audit reports any inconsistency.
  [[nodiscard]] static RBTree node_unchecked(Color c, RBTree l, RBTree r) {
    auto n = std::make_shared<Node>();
    n->kind = c == Color::Red ? NodeKind::Red : NodeKind::Black;
    n->black_height = l.black_height() + (c == Color::Black ? 1 : 0);
    n->size = l.size() + r.size();
    n->left = std::move(l.node_);
    n->right = std::move(r.node_);
    return RBTree(std::move(n));
  }

  [[nodiscard]] NodeKind kind() const noexcept { return node_->kind; }
  [[nodiscard]] Color color() const noexcept { return kind() == NodeKind::Red ? Color::Red : Color::Black; }
  [[nodiscard]] bool is_red() const noexcept { return kind() == NodeKind::Red; }
  [[nodiscard]] bool is_empty() const noexcept { return kind() == NodeKind::Empty; }
  [[nodiscard]] bool is_leaf() const noexcept { return kind() == NodeKind::Leaf; }
  [[nodiscard]] bool is_internal() const noexcept {
    return kind() == NodeKind::Red || kind() == NodeKind::Black;
  }
  [[nodiscard]] std::size_t black_height() const noexcept { return node_->black_height; }
  [[nodiscard]] std::size_t size() const noexcept { return node_->size; }

  [[nodiscard]] RBTree left() const {
    if (!is_internal())
      throw std::logic_error("RBTree::left on a terminal node");
    return RBTree(node_->left);
  }
  [[nodiscard]] RBTree right() const {
    if (!is_internal())
      throw std::logic_error("RBTree::right on a terminal node");
    return RBTree(node_->right);
  }
  [[nodiscard]] const E &leaf_value() const {
    if (!is_leaf())
      throw std::logic_error("RBTree::leaf_value on a non-leaf");
    return *node_->elem;
  }

  /// Structural equality, including colors.
  friend bool operator==(const RBTree &a, const RBTree &b) {
    if (a.node_ == b.node_)
      return true;
    if (a.kind() != b.kind() || a.size() != b.size())
      return false;
    switch (a.kind()) {
    case NodeKind::Empty: return true;
    case NodeKind::Leaf: return a.leaf_value() == b.leaf_value();
    default: return a.left() == b.left() && a.right() == b.right();
    }
  }

private:
  explicit RBTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static const std::shared_ptr<const Node> &empty_node() {
    static const std::shared_ptr<const Node> e = std::make_shared<const Node>();
    return e;
  }

  std::shared_ptr<const Node> node_;
};

// -- traversal and audit ----------------------------------------------------------

namespace detail {
template <typename E> void collect(const RBTree<E> &t, std::vector<E> &out) {
  if (t.is_leaf())
    out.push_back(t.leaf_value());
  else if (t.is_internal()) {
    collect(t.left(), out);
    collect(t.right(), out);
  }
}
} // namespace detail

/// In-order sequence of leaves.
template <typename E> [[nodiscard]] std::vector<E> elements(const RBTree<E> &t) {
  std::vector<E> out;
  out.reserve(t.size());
  detail::collect(t, out);
  return out;
}

template <typename E> [[nodiscard]] const AbstractionRef<RBTree<E>, std::vector<E>> &elements_fn() {
  static const auto fn = make_abstraction<RBTree<E>, std::vector<E>>(
      "elements", [](const RBTree<E> &t) { return elements(t); });
  return fn;
}

struct Shape {
  Color color;
  std::size_t black_height;
  std::size_t size;
};

namespace detail {
template <typename E> Shape audit_rec(const RBTree<E> &t, std::string &err, const std::string &path) {
  auto fail = [&](const std::string &what) {
    if (err.empty())
      err = what + " at " + (path.empty() ? std::string("root") : path);
  };
  Shape s{};
  switch (t.kind()) {
  case NodeKind::Empty: s = {Color::Black, 0, 0}; break;
  case NodeKind::Leaf: s = {Color::Black, 0, 1}; break;
  case NodeKind::Red:
  case NodeKind::Black: {
    const Shape l = audit_rec(t.left(), err, path + "L");
    const Shape r = audit_rec(t.right(), err, path + "R");
    if (l.black_height != r.black_height)
      fail("children with unequal black height");
    if (t.is_red() && (l.color == Color::Red || r.color == Color::Red))
      fail("red node with a red child");
    s = {t.color(), l.black_height + (t.is_red() ? 0 : 1), l.size + r.size};
    break;
  }
  }
  if (t.black_height() != s.black_height)
    fail("stale cached black height");
  if (t.size() != s.size)
    fail("stale cached size");
  return s;
}
} // namespace detail

/// First violated red-black or cache invariant, or nullopt for a valid tree.
template <typename E> [[nodiscard]] std::optional<std::string> audit(const RBTree<E> &t) {
  std::string err;
  detail::audit_rec(t, err, "");
  if (err.empty())
    return std::nullopt;
  return err;
}

// -- append ----------------------------------------------------------------------

namespace detail {

// Every node built and every recoloring costs one unit.
template <typename E> RBTree<E> build(Color c, RBTree<E> l, RBTree<E> r, Cost &cost) {
  cost += Cost{1};
  return RBTree<E>::node_unchecked(c, std::move(l), std::move(r));
}

template <typename E> RBTree<E> blacken(const RBTree<E> &t, Cost &cost) {
  if (!t.is_red())
    return t;
  return build(Color::Black, t.left(), t.right(), cost);
}

// Precondition: r is black and black_height(t) >= black_height(r). The result
// has the black height of t, and may be a red node with a red right child.
template <typename E> RBTree<E> join_right(const RBTree<E> &t, const RBTree<E> &r, Cost &cost) {
  if (!t.is_red() && t.black_height() == r.black_height())
    return build(Color::Red, t, r, cost);
  RBTree<E> joined = join_right(t.right(), r, cost);
  if (!t.is_red() && joined.is_red() && joined.right().is_red()) {
    const RBTree<E> inner = joined.right();
    return build(Color::Red, build(Color::Black, t.left(), joined.left(), cost),
                 build(Color::Black, inner.left(), inner.right(), cost), cost);
  }
  return build(t.color(), t.left(), std::move(joined), cost);
}

template <typename E> RBTree<E> join_left(const RBTree<E> &l, const RBTree<E> &t, Cost &cost) {
  if (!t.is_red() && t.black_height() == l.black_height())
    return build(Color::Red, l, t, cost);
  RBTree<E> joined = join_left(l, t.left(), cost);
  if (!t.is_red() && joined.is_red() && joined.left().is_red()) {
    const RBTree<E> inner = joined.left();
    return build(Color::Red, build(Color::Black, inner.left(), inner.right(), cost),
                 build(Color::Black, joined.right(), t.right(), cost), cost);
  }
  return build(t.color(), std::move(joined), t.right(), cost);
}

} // namespace detail

/// Concatenate two sequences. Abstractly this is just the black node
/// constructor; concretely it rebalances along one spine.
template <typename E> [[nodiscard]] Charged<RBTree<E>> append(const RBTree<E> &t1, const RBTree<E> &t2) {
  if (t1.is_empty())
    return ret(t2);
  if (t2.is_empty())
    return ret(t1);
  Cost cost{};
  const RBTree<E> a = detail::blacken(t1, cost);
  const RBTree<E> b = detail::blacken(t2, cost);
  RBTree<E> out;
  if (a.black_height() == b.black_height()) {
    out = detail::build(Color::Red, a, b, cost);
  } else if (a.black_height() > b.black_height()) {
    out = detail::join_right(a, b, cost);
    if (out.is_red() && out.right().is_red())
      out = detail::build(Color::Black, out.left(), out.right(), cost);
  } else {
    out = detail::join_left(a, b, cost);
    if (out.is_red() && out.left().is_red())
      out = detail::build(Color::Black, out.left(), out.right(), cost);
  }
  return {cost, std::move(out)};
}

/// Sealed upper bound on append: 4 * (|bh(t1) - bh(t2)| + 2) units.
///
/// With d the height difference after blackening the roots (at most one more
/// than the input difference), append rebuilds at most 2d spine nodes, builds
/// one join node, performs at most d rotations of two extra nodes each, and
/// recolors at most three roots: 4d + 4 <= 4 * (diff + 2). The worst case seen
/// on random pairs of trees up to 256 leaves is 4 * diff + 3.
[[nodiscard]] inline Cost append_bound(std::size_t bh1, std::size_t bh2) {
  const std::size_t diff = bh1 > bh2 ? bh1 - bh2 : bh2 - bh1;
  return Cost{4 * (diff + 2)};
}

template <typename E> [[nodiscard]] Sealed<RBTree<E>> sealed_append(const RBTree<E> &t1, const RBTree<E> &t2);

/// Left-to-right fold of appends over singletons.
template <typename E> [[nodiscard]] Charged<RBTree<E>> from_list(const std::vector<E> &l) {
  Charged<RBTree<E>> acc = ret(RBTree<E>::empty());
  for (const auto &e : l)
    acc = phasecost::bind(acc, [&](const RBTree<E> &t) { return append(t, RBTree<E>::singleton(e)); });
  return acc;
}

/// Abstract equality of trees: equal element sequences.
template <typename E> [[nodiscard]] bool elements_equal(const RBTree<E> &a, const RBTree<E> &b) {
  return abstract_equal(a, b, elements_fn<E>());
}

/// Seals are compared by their element sequences, not by tree shape.
template <typename E> [[nodiscard]] ValueRelation<RBTree<E>> elements_relation() {
  return [](const RBTree<E> &a, const RBTree<E> &b) { return elements_equal(a, b); };
}

template <typename E> [[nodiscard]] Sealed<RBTree<E>> sealed_append(const RBTree<E> &t1, const RBTree<E> &t2) {
  auto impl = append(t1, t2);
  // The specification is the plain black-node constructor, charged at the bound.
  Charged<RBTree<E>> spec{append_bound(t1.black_height(), t2.black_height()),
                          RBTree<E>::node_unchecked(Color::Black, t1, t2)};
  return seal(std::move(impl), std::move(spec), elements_relation<E>());
}

// -- maps out of the sequence ------------------------------------------------------

/// Structural fold replacing Empty, Leaf and internal nodes by the target's
/// empty, singleton and append. Cost is whatever the target's appends charge.
template <typename E, typename R>
[[nodiscard]] Charged<R> mapreduce(const RBTree<E> &t, const MonoidOps<R, E> &target) {
  switch (t.kind()) {
  case NodeKind::Empty: return ret(target.empty);
  case NodeKind::Leaf: return ret(target.singleton(t.leaf_value()));
  default: break;
  }
  auto l = mapreduce(t.left(), target);
  auto r = mapreduce(t.right(), target);
  auto joined = target.append(l.value, r.value);
  return {l.cost + r.cost + joined.cost, std::move(joined.value)};
}

template <typename E> [[nodiscard]] MonoidOps<std::size_t, E> counting_monoid() {
  return {0, [](std::size_t a, std::size_t b) { return ret(a + b); }, [](const E &) -> std::size_t { return 1; }};
}

/// Length computed by the universal map into (N, 0, +).
template <typename E> [[nodiscard]] Charged<std::size_t> length(const RBTree<E> &t) {
  return mapreduce(t, counting_monoid<E>());
}

/// Length read from the cached size: one unit.
template <typename E> [[nodiscard]] Charged<std::size_t> length_fast(const RBTree<E> &t) {
  return {Cost{1}, t.size()};
}

namespace detail {
template <typename E, typename F> std::optional<Charged<E>> reduce_rec(F &f, const RBTree<E> &t) {
  switch (t.kind()) {
  case NodeKind::Empty: return std::nullopt;
  case NodeKind::Leaf: return Charged<E>{Cost{1}, t.leaf_value()};
  default: break;
  }
  auto l = reduce_rec(f, t.left());
  auto r = reduce_rec(f, t.right());
  if (!l)
    return r;
  if (!r)
    return l;
  Charged<E> combined = std::invoke(f, l->value, r->value);
  combined.cost = l->cost + r->cost + combined.cost;
  return combined;
}
} // namespace detail

/// Combine the leaves with f. One unit per leaf visited plus whatever f
/// charges at internal nodes; Empty subtrees contribute the unit for free.
/// With a unit-cost f the total is at most 2 * size - 1 on nonempty trees.
template <typename E, typename F> [[nodiscard]] Charged<E> reduce(F &&f, const E &unit, const RBTree<E> &t) {
  auto r = detail::reduce_rec(f, t);
  if (!r)
    return ret(unit);
  return *r;
}

namespace concrete {
/// Only meaningful on the representation: elements-equal trees may differ here.
template <typename E> [[nodiscard]] bool root_is_red(const RBTree<E> &t) noexcept { return t.is_red(); }
} // namespace concrete

} // namespace phasecost::rbtree

template <typename E> struct fmt::formatter<phasecost::rbtree::RBTree<E>> : fmt::formatter<std::string_view> {
  template <typename Ctx>
  auto format(const phasecost::rbtree::RBTree<E> &t, Ctx &ctx) const -> decltype(ctx.out()) {
    using phasecost::rbtree::NodeKind;
    switch (t.kind()) {
    case NodeKind::Empty: return fmt::format_to(ctx.out(), "E");
    case NodeKind::Leaf: return fmt::format_to(ctx.out(), "{}", phasecost::show(t.leaf_value()));
    case NodeKind::Red: return fmt::format_to(ctx.out(), "R({}, {})", t.left(), t.right());
    case NodeKind::Black: return fmt::format_to(ctx.out(), "B({}, {})", t.left(), t.right());
    }
    return ctx.out();
  }
};
