#pragma once

// Abstraction functions, glued (concrete, abstract) pairs and phase projections.
//
// A glued value keeps a concrete representation next to its abstract model and
// refuses to exist unless the abstraction function maps the former onto the
// latter. The abstract-phase quotient of a concrete type is the kernel of its
// abstraction function; abstract_equal exposes that equivalence.

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

#include "phasecost/show.hpp"

namespace phasecost {

enum class EvaluationMode { Full, Abstract, Concrete, Behavioral };

/// Behavioral evaluation also hides implementation detail, so it implies the abstract phase.
[[nodiscard]] constexpr bool is_abstract(EvaluationMode m) noexcept {
  return m == EvaluationMode::Abstract || m == EvaluationMode::Behavioral;
}
[[nodiscard]] constexpr bool erases_cost(EvaluationMode m) noexcept {
  return m == EvaluationMode::Behavioral;
}

[[nodiscard]] constexpr std::string_view to_string(EvaluationMode m) noexcept {
  switch (m) {
  case EvaluationMode::Full: return "full";
  case EvaluationMode::Abstract: return "abstract";
  case EvaluationMode::Concrete: return "concrete";
  case EvaluationMode::Behavioral: return "behavioral";
  }
  return "full";
}

[[nodiscard]] inline std::optional<EvaluationMode> parse_mode(std::string_view s) noexcept {
  for (auto m : {EvaluationMode::Full, EvaluationMode::Abstract, EvaluationMode::Concrete,
                 EvaluationMode::Behavioral})
    if (to_string(m) == s)
      return m;
  return std::nullopt;
}

template <typename C, typename A> struct AbstractionFn {
  using concrete_type = C;
  using abstract_type = A;

  std::string name;
  std::function<A(const C &)> apply;
  std::function<bool(const A &, const A &)> abs_eq = std::equal_to<A>{};

  [[nodiscard]] A operator()(const C &c) const { return apply(c); }
};

template <typename C, typename A> using AbstractionRef = std::shared_ptr<const AbstractionFn<C, A>>;

template <typename C, typename A, typename F>
[[nodiscard]] AbstractionRef<C, A> make_abstraction(std::string name, F &&apply) {
  return std::make_shared<const AbstractionFn<C, A>>(
      AbstractionFn<C, A>{std::move(name), std::forward<F>(apply), std::equal_to<A>{}});
}

template <typename C, typename A, typename F, typename Eq>
[[nodiscard]] AbstractionRef<C, A> make_abstraction(std::string name, F &&apply, Eq &&abs_eq) {
  return std::make_shared<const AbstractionFn<C, A>>(
      AbstractionFn<C, A>{std::move(name), std::forward<F>(apply), std::forward<Eq>(abs_eq)});
}

/// Raised when a claimed abstract value is not the image of the concrete one.
/// Carries both sides as the caller rendered them.
class CoherenceError : public std::logic_error {
public:
  CoherenceError(std::string abstraction, std::string computed, std::string claimed)
      : std::logic_error("incoherent glue along " + abstraction + ": image " + computed +
                         " but claimed " + claimed),
        computed_(std::move(computed)), claimed_(std::move(claimed)) {}

  [[nodiscard]] const std::string &computed() const noexcept { return computed_; }
  [[nodiscard]] const std::string &claimed() const noexcept { return claimed_; }

private:
  std::string computed_;
  std::string claimed_;
};

template <typename C, typename A> class GluedValue {
public:
  [[nodiscard]] const C &concrete() const noexcept { return concrete_; }
  [[nodiscard]] const A &abstract_() const noexcept { return abstract_value_; }
  [[nodiscard]] const AbstractionRef<C, A> &alpha() const noexcept { return alpha_; }

  /// Same components and the very same abstraction function.
  friend bool operator==(const GluedValue &x, const GluedValue &y) {
    return x.alpha_ == y.alpha_ && x.concrete_ == y.concrete_ &&
           x.abstract_value_ == y.abstract_value_;
  }

private:
  GluedValue(C c, A a, AbstractionRef<C, A> alpha)
      : concrete_(std::move(c)), abstract_value_(std::move(a)), alpha_(std::move(alpha)) {}

  template <typename C2, typename A2>
  friend GluedValue<C2, A2> glue(C2 c, A2 a, AbstractionRef<C2, A2> alpha);

  C concrete_;
  A abstract_value_;
  AbstractionRef<C, A> alpha_;
};

/// Fails fast with CoherenceError unless alpha(c) is abstractly equal to a.
template <typename C, typename A>
[[nodiscard]] GluedValue<C, A> glue(C c, A a, AbstractionRef<C, A> alpha) {
  if (!alpha)
    throw std::invalid_argument("glue: null abstraction function");
  A image = alpha->apply(c);
  if (!alpha->abs_eq(image, a))
    throw CoherenceError(alpha->name, show(image), show(a));
  return GluedValue<C, A>(std::move(c), std::move(a), std::move(alpha));
}

/// Glue a concrete value with its own image.
template <typename C, typename A>
[[nodiscard]] GluedValue<C, A> glue_image(C c, AbstractionRef<C, A> alpha) {
  A image = alpha->apply(c);
  return glue(std::move(c), std::move(image), std::move(alpha));
}

template <typename C, typename A>
[[nodiscard]] std::tuple<C, A, AbstractionRef<C, A>> fracture(const GluedValue<C, A> &g) {
  return {g.concrete(), g.abstract_(), g.alpha()};
}

template <typename C, typename A>
[[nodiscard]] GluedValue<C, A> glue(std::tuple<C, A, AbstractionRef<C, A>> parts) {
  auto &[c, a, alpha] = parts;
  return glue(std::move(c), std::move(a), std::move(alpha));
}

/// What a glued value looks like from inside a given mode. Full sees both parts,
/// Abstract and Behavioral see only the model, Concrete only the representation.
template <typename C, typename A> struct Projection {
  std::optional<C> concrete;
  std::optional<A> abstract_;

  friend bool operator==(const Projection &, const Projection &) = default;
};

template <typename C, typename A>
[[nodiscard]] Projection<C, A> project(const GluedValue<C, A> &g, EvaluationMode mode) {
  switch (mode) {
  case EvaluationMode::Abstract:
  case EvaluationMode::Behavioral: return {std::nullopt, g.abstract_()};
  case EvaluationMode::Concrete: return {g.concrete(), std::nullopt};
  case EvaluationMode::Full: break;
  }
  return {g.concrete(), g.abstract_()};
}

template <typename C, typename A>
[[nodiscard]] const A &project_abstract(const GluedValue<C, A> &g) noexcept {
  return g.abstract_();
}
template <typename C, typename A>
[[nodiscard]] const C &project_concrete(const GluedValue<C, A> &g) noexcept {
  return g.concrete();
}

template <typename C, typename A>
[[nodiscard]] bool abstract_equal(const C &x, const C &y, const AbstractionFn<C, A> &alpha) {
  return alpha.abs_eq(alpha.apply(x), alpha.apply(y));
}

template <typename C, typename A>
[[nodiscard]] bool abstract_equal(const C &x, const C &y, const AbstractionRef<C, A> &alpha) {
  return abstract_equal(x, y, *alpha);
}

/// Membership of x in the specification type pinned to spec: both agree once
/// projected to the phase of interest. x and spec may be different
/// implementations of one interface as long as the projection accepts both.
template <typename X, typename S, typename Project, typename EqP>
[[nodiscard]] bool spec_member(const X &x, const S &spec, Project &&project_to_phase, EqP &&eq) {
  return std::invoke(eq, std::invoke(project_to_phase, x), std::invoke(project_to_phase, spec));
}

/// Apply an operation on the concrete side, then re-glue against the abstract
/// result. A CoherenceError here means the operation does not preserve alpha.
template <typename C, typename A, typename FTop, typename FAbs>
[[nodiscard]] GluedValue<C, A> glued_apply(const GluedValue<C, A> &g, FTop &&f_top, FAbs &&f_abs) {
  return glue(std::invoke(f_top, g.concrete()), std::invoke(f_abs, g.abstract_()), g.alpha());
}

} // namespace phasecost
