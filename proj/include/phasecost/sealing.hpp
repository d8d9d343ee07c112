#pragma once

// Sealing: an implementation computation packaged under a specification
// computation that bounds its cost from above and agrees with it behaviorally.
//
// The abstract view of a seal is its specification; the extracted (concrete)
// view is its implementation. Seals are checked at construction, so every
// Sealed value in existence satisfies impl <= spec.

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include "phasecost/cost.hpp"
#include "phasecost/show.hpp"

namespace phasecost {

template <typename T> class Sealed;

template <typename T> struct is_sealed : std::false_type {};
template <typename T> struct is_sealed<Sealed<T>> : std::true_type {};
template <typename T> inline constexpr bool is_sealed_v = is_sealed<T>::value;

/// Relation used to compare implementation and specification results.
template <typename T> using ValueRelation = std::function<bool(const T &, const T &)>;

template <typename T> ValueRelation<T> default_relation();

/// Why a seal was refused. Both flags may be set.
struct BoundViolation {
  Cost impl_cost;
  Cost spec_cost;
  bool cost_overrun = false;
  bool behavior_mismatch = false;

  [[nodiscard]] std::string describe() const {
    std::string s = "seal refused:";
    if (cost_overrun)
      s += fmt::format(" impl cost {} exceeds spec cost {}", impl_cost.units(), spec_cost.units());
    if (behavior_mismatch)
      s += " implementation and specification behave differently";
    return s;
  }

  friend bool operator==(const BoundViolation &, const BoundViolation &) = default;
};

class BoundViolationError : public std::runtime_error {
public:
  explicit BoundViolationError(BoundViolation v) : std::runtime_error(v.describe()), v_(v) {}
  [[nodiscard]] const BoundViolation &violation() const noexcept { return v_; }

private:
  BoundViolation v_;
};

template <typename T>
[[nodiscard]] std::optional<BoundViolation> check_bound(const Charged<T> &impl, const Charged<T> &spec,
                                                        const ValueRelation<T> &rel) {
  BoundViolation v{impl.cost, spec.cost, !(impl.cost <= spec.cost), !rel(impl.value, spec.value)};
  if (v.cost_overrun || v.behavior_mismatch)
    return v;
  return std::nullopt;
}

template <typename T> class Sealed {
public:
  using value_type = T;

  [[nodiscard]] const Charged<T> &impl() const noexcept { return impl_; }
  [[nodiscard]] const Charged<T> &spec() const noexcept { return spec_; }
  [[nodiscard]] const ValueRelation<T> &beh_eq() const noexcept { return rel_; }

  /// Structural equality of both computations. The relation is not compared.
  friend bool operator==(const Sealed &a, const Sealed &b) {
    return a.impl_ == b.impl_ && a.spec_ == b.spec_;
  }

private:
  Sealed(Charged<T> impl, Charged<T> spec, ValueRelation<T> rel)
      : impl_(std::move(impl)), spec_(std::move(spec)), rel_(std::move(rel)) {}

  template <typename U>
  friend Sealed<U> seal(Charged<U> impl, Charged<U> spec, ValueRelation<U> rel);

  Charged<T> impl_;
  Charged<T> spec_;
  ValueRelation<T> rel_;
};

/// Seals order by their specifications: the abstract phase sees nothing else.
template <typename T> [[nodiscard]] bool sealed_leq(const Sealed<T> &a, const Sealed<T> &b) {
  return leq(a.spec(), b.spec(), a.beh_eq());
}

template <typename T> ValueRelation<T> default_relation() {
  if constexpr (is_sealed_v<T>)
    return [](const T &a, const T &b) { return sealed_leq(a, b); };
  else
    return std::equal_to<T>{};
}

template <typename T>
[[nodiscard]] std::optional<BoundViolation> try_seal(const Charged<T> &impl, const Charged<T> &spec,
                                                     const ValueRelation<T> &rel = default_relation<T>()) {
  return check_bound(impl, spec, rel);
}

/// Throws BoundViolationError unless leq(impl, spec, rel).
template <typename T>
[[nodiscard]] Sealed<T> seal(Charged<T> impl, Charged<T> spec, ValueRelation<T> rel) {
  if (auto v = check_bound(impl, spec, rel))
    throw BoundViolationError(*v);
  return Sealed<T>(std::move(impl), std::move(spec), std::move(rel));
}

template <typename T> [[nodiscard]] Sealed<T> seal(Charged<T> impl, Charged<T> spec) {
  return seal(std::move(impl), std::move(spec), default_relation<T>());
}

/// Re-check the seal premise on an existing value.
template <typename T> [[nodiscard]] bool is_valid(const Sealed<T> &s) {
  return !check_bound(s.impl(), s.spec(), s.beh_eq()).has_value();
}

template <typename T> [[nodiscard]] Sealed<T> seal_return(T v) {
  auto m = ret(std::move(v));
  return seal(m, m);
}

template <typename T> [[nodiscard]] Sealed<T> seal_return(T v, ValueRelation<T> rel) {
  auto m = ret(std::move(v));
  return seal(m, m, std::move(rel));
}

template <typename T> [[nodiscard]] const Charged<T> &unseal_abstract(const Sealed<T> &s) noexcept {
  return s.spec();
}

template <typename T> [[nodiscard]] const Charged<T> &unseal_concrete(const Sealed<T> &s) noexcept {
  return s.impl();
}

/// Seal the implementation again at a weaker specification.
template <typename T> [[nodiscard]] Sealed<T> reseal(const Sealed<T> &s, Charged<T> spec2) {
  if (auto v = check_bound(s.spec(), spec2, s.beh_eq()))
    throw BoundViolationError(*v);
  return seal(s.impl(), std::move(spec2), s.beh_eq());
}

template <typename T> [[nodiscard]] Sealed<T> seal_charge(Cost c, const Sealed<T> &s) {
  return seal(charge(c, s.impl()), charge(c, s.spec()), s.beh_eq());
}

/// Functorial action. f must send related values to related values.
template <typename T, typename F>
[[nodiscard]] auto seal_map(F &&f, const Sealed<T> &s) {
  using U = std::decay_t<std::invoke_result_t<F &, const T &>>;
  return seal(fmap(f, s.impl()), fmap(f, s.spec()), default_relation<U>());
}

template <typename T, typename F>
[[nodiscard]] auto seal_map(F &&f, const Sealed<T> &s, ValueRelation<std::decay_t<std::invoke_result_t<F &, const T &>>> rel) {
  return seal(fmap(f, s.impl()), fmap(f, s.spec()), std::move(rel));
}

/// Flatten a seal of seals: the implementation path follows impl of impl, the
/// specification path spec of spec, and costs add along each path.
template <typename T> [[nodiscard]] Sealed<T> seal_join(const Sealed<Sealed<T>> &s) {
  const Sealed<T> &inner_impl = s.impl().value;
  const Sealed<T> &inner_spec = s.spec().value;
  Charged<T> impl{s.impl().cost + inner_impl.impl().cost, inner_impl.impl().value};
  Charged<T> spec{s.spec().cost + inner_spec.spec().cost, inner_spec.spec().value};
  // Transitivity guarantees this; failure means an invalid Sealed was forged.
  if (auto v = check_bound(impl, spec, inner_impl.beh_eq()))
    throw std::logic_error("seal_join: broken seal: " + v->describe());
  return seal(std::move(impl), std::move(spec), inner_impl.beh_eq());
}

/// Sequencing inside the sealing monad.
template <typename T, typename K> [[nodiscard]] auto seal_bind(const Sealed<T> &s, K &&k) {
  using Inner = std::decay_t<std::invoke_result_t<K &, const T &>>;
  static_assert(is_sealed_v<Inner>, "continuation must return a Sealed value");
  return seal_join(seal_map(std::forward<K>(k), s));
}

} // namespace phasecost

template <typename T> struct fmt::formatter<phasecost::Sealed<T>> : fmt::formatter<std::string_view> {
  template <typename Ctx>
  auto format(const phasecost::Sealed<T> &s, Ctx &ctx) const -> decltype(ctx.out()) {
    return fmt::format_to(ctx.out(), "seal({}, {})", phasecost::show(s.impl()),
                          phasecost::show(s.spec()));
  }
};
