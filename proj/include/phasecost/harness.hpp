#pragma once

// Generic verification machinery: coherence squares (strict and lax),
// differential noninterference checks, and abstract-algebra law suites.
//
// Every check appends to a Report instead of throwing, so a single run can
// collect all counterexamples. Inputs come either from an explicit list
// (exhaustive small-scope sweeps) or from a generator driven by an Rng.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "phasecost/cost.hpp"
#include "phasecost/phase.hpp"
#include "phasecost/report.hpp"
#include "phasecost/rng.hpp"
#include "phasecost/show.hpp"

namespace phasecost {

/// Which groups of laws a mode observes. Behavioral erases cost, the abstract
/// phases hide representation invariants, and the concrete mode sees only the
/// representation and its costs (the abstract side is trivial there).
struct Checks {
  bool behavior = true;
  bool cost = true;
  bool structure = true;

  friend bool operator==(const Checks &, const Checks &) = default;
};

[[nodiscard]] constexpr Checks checks_for(EvaluationMode mode) noexcept {
  switch (mode) {
  case EvaluationMode::Full: return {true, true, true};
  case EvaluationMode::Abstract: return {true, true, false};
  case EvaluationMode::Behavioral: return {true, false, false};
  case EvaluationMode::Concrete: return {false, true, true};
  }
  return {};
}

template <typename T> using Generator = std::function<T(Rng &)>;

/// Draw n inputs from gen, in order.
template <typename T> [[nodiscard]] std::vector<T> sample(const Generator<T> &gen, Rng &rng, std::size_t n) {
  std::vector<T> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(gen(rng));
  return out;
}

template <typename CIn, typename AIn, typename COut, typename AOut> struct SquareSpec {
  std::string name;
  std::function<Charged<COut>(const CIn &)> f_top;
  std::function<Charged<AOut>(const AIn &)> f_abs;
  AbstractionRef<CIn, AIn> alpha_in;
  AbstractionRef<COut, AOut> alpha_out;
  bool lax = false;
  /// Optional input measure for the cost table.
  std::function<std::uint64_t(const CIn &)> size_of;
};

/// Strict: alpha_out . f_top and f_abs . alpha_in agree in behavior and cost.
/// Lax: the mapped implementation is below the specification in the cost order.
template <typename CIn, typename AIn, typename COut, typename AOut>
void check_square(const SquareSpec<CIn, AIn, COut, AOut> &sq, const std::vector<CIn> &inputs, Report &report,
                  CostTable *table = nullptr, Checks checks = {}) {
  const auto &alpha_in = *sq.alpha_in;
  const auto &alpha_out = *sq.alpha_out;
  for (const auto &x : inputs) {
    const Charged<COut> top = sq.f_top(x);
    const Charged<AOut> abs = sq.f_abs(alpha_in(x));
    const AOut image = alpha_out(top.value);
    if (checks.behavior)
      report.expect(alpha_out.abs_eq(image, abs.value), sq.name + ": behavior square", show(x),
                    show(abs.value), show(image));
    if (checks.cost) {
      const bool ok = sq.lax ? top.cost <= abs.cost : top.cost == abs.cost;
      report.expect(ok, sq.name + (sq.lax ? ": lax cost square" : ": strict cost square"), show(x),
                    show(abs.cost), show(top.cost));
      if (table && sq.size_of)
        table->record(sq.size_of(x), top.cost, abs.cost);
    }
  }
}

template <typename CIn, typename AIn, typename COut, typename AOut>
[[nodiscard]] Report check_square(const SquareSpec<CIn, AIn, COut, AOut> &sq, const Generator<CIn> &gen,
                                  std::size_t n, Rng &rng, Checks checks = {}) {
  Report report;
  report.suite = sq.name;
  CostTable table;
  check_square(sq, sample(gen, rng, n), report, &table, checks);
  report.cost_table = table.rows();
  return report;
}

template <typename In, typename Out> struct NamedImpl {
  std::string name;
  std::function<Out(const In &)> run;
};

/// Bind a generic client (impl, input) -> output to each implementation.
template <typename In, typename Out, typename Client, typename... Impls>
[[nodiscard]] std::vector<NamedImpl<In, Out>> instantiate(const Client &client, const Impls &...impls) {
  return {NamedImpl<In, Out>{impls.name(), [client, impls](const In &x) -> Out { return client(impls, x); }}...};
}

/// Every pair of implementations must produce abstractly equal outputs.
template <typename In, typename Out, typename OutEq>
void check_noninterference(const std::string &client, const std::vector<NamedImpl<In, Out>> &impls,
                           OutEq &&out_eq, const std::vector<In> &inputs, Report &report) {
  for (const auto &x : inputs) {
    std::vector<Out> outs;
    outs.reserve(impls.size());
    for (const auto &impl : impls)
      outs.push_back(impl.run(x));
    if (impls.size() < 2) {
      report.expect(true, client + ": noninterference", show(x), "", "");
      continue;
    }
    for (std::size_t i = 0; i < impls.size(); ++i)
      for (std::size_t j = i + 1; j < impls.size(); ++j)
        report.expect(std::invoke(out_eq, outs[i], outs[j]),
                      client + ": noninterference " + impls[i].name + " vs " + impls[j].name, show(x),
                      show(outs[i]), show(outs[j]));
  }
}

template <typename In, typename Out, typename OutEq>
[[nodiscard]] Report check_noninterference(const std::string &client, const std::vector<NamedImpl<In, Out>> &impls,
                                           OutEq &&out_eq, const Generator<In> &gen, std::size_t n, Rng &rng) {
  Report report;
  report.suite = client;
  check_noninterference(client, impls, std::forward<OutEq>(out_eq), sample(gen, rng, n), report);
  return report;
}

/// A monoid presented by its operations; append may carry cost.
template <typename X, typename E> struct MonoidOps {
  X empty;
  std::function<Charged<X>(const X &, const X &)> append;
  std::function<X(const E &)> singleton;
};

/// Associativity and unit laws, asserted only on abstraction images.
template <typename X, typename A>
void check_abstract_monoid(const std::string &name, const X &empty,
                           const std::function<Charged<X>(const X &, const X &)> &append,
                           const AbstractionFn<X, A> &alpha, const std::vector<std::tuple<X, X, X>> &triples,
                           Report &report) {
  for (const auto &[a, b, c] : triples) {
    const X ab = append(a, b).value;
    const X bc = append(b, c).value;
    const A lhs = alpha(append(ab, c).value);
    const A rhs = alpha(append(a, bc).value);
    const std::string in = show(alpha(a)) + ", " + show(alpha(b)) + ", " + show(alpha(c));
    report.expect(alpha.abs_eq(lhs, rhs), name + ": abstract associativity", in, show(lhs), show(rhs));
    const A ia = alpha(a);
    const A left = alpha(append(empty, a).value);
    const A right = alpha(append(a, empty).value);
    report.expect(alpha.abs_eq(left, ia), name + ": abstract left identity", show(ia), show(ia), show(left));
    report.expect(alpha.abs_eq(right, ia), name + ": abstract right identity", show(ia), show(ia), show(right));
  }
}

template <typename X, typename A>
[[nodiscard]] Report check_abstract_monoid(const std::string &name, const X &empty,
                                           const std::function<Charged<X>(const X &, const X &)> &append,
                                           const AbstractionFn<X, A> &alpha, const Generator<X> &gen, std::size_t n,
                                           Rng &rng) {
  Report report;
  report.suite = name;
  std::vector<std::tuple<X, X, X>> triples;
  triples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    X a = gen(rng);
    X b = gen(rng);
    X c = gen(rng);
    triples.emplace_back(std::move(a), std::move(b), std::move(c));
  }
  check_abstract_monoid(name, empty, append, alpha, triples, report);
  return report;
}

/// f preserves empty, append and singleton up to the destination's abstraction.
template <typename X, typename Y, typename E, typename B>
void check_abstract_hom(const std::string &name, const std::function<Charged<Y>(const X &)> &f,
                        const MonoidOps<X, E> &src, const MonoidOps<Y, E> &dst, const AbstractionFn<Y, B> &alpha_dst,
                        const std::vector<std::pair<X, X>> &pairs, const std::vector<E> &elems, Report &report) {
  {
    const B got = alpha_dst(f(src.empty).value);
    const B want = alpha_dst(dst.empty);
    report.expect(alpha_dst.abs_eq(got, want), name + ": preserves empty", "empty", show(want), show(got));
  }
  for (const auto &[a, b] : pairs) {
    const B got = alpha_dst(f(src.append(a, b).value).value);
    const B want = alpha_dst(dst.append(f(a).value, f(b).value).value);
    report.expect(alpha_dst.abs_eq(got, want), name + ": preserves append",
                  show(alpha_dst(f(a).value)) + ", " + show(alpha_dst(f(b).value)), show(want), show(got));
  }
  for (const auto &e : elems) {
    const B got = alpha_dst(f(src.singleton(e)).value);
    const B want = alpha_dst(dst.singleton(e));
    report.expect(alpha_dst.abs_eq(got, want), name + ": preserves singleton", show(e), show(want), show(got));
  }
}

/// The canonical map out of a sequence: a left fold of the target's
/// operations over the element list.
template <typename Y, typename E>
[[nodiscard]] Y fold_oracle(const MonoidOps<Y, E> &target, const std::vector<E> &elems) {
  Y acc = target.empty;
  for (const auto &e : elems)
    acc = target.append(acc, target.singleton(e)).value;
  return acc;
}

/// mapreduce agrees with the fold oracle on every sample, and all supplied
/// homomorphisms agree with each other.
template <typename X, typename Y, typename E, typename YEq>
void check_universal_property(const std::string &name,
                              const std::function<Charged<Y>(const X &, const MonoidOps<Y, E> &)> &mapreduce,
                              const std::function<std::vector<E>(const X &)> &elements,
                              const MonoidOps<Y, E> &target, YEq &&y_eq, const std::vector<X> &inputs,
                              Report &report,
                              const std::vector<std::pair<std::string, std::function<Y(const X &)>>> &other_homs = {}) {
  for (const auto &x : inputs) {
    const std::vector<E> elems = elements(x);
    const Y got = mapreduce(x, target).value;
    const Y want = fold_oracle(target, elems);
    report.expect(std::invoke(y_eq, got, want), name + ": mapreduce agrees with fold", show(elems), show(want),
                  show(got));
    for (const auto &[hname, h] : other_homs) {
      const Y other = h(x);
      report.expect(std::invoke(y_eq, got, other), name + ": uniqueness against " + hname, show(elems), show(got),
                    show(other));
    }
  }
}

/// f must give equal results on abstractly equal inputs.
template <typename X, typename A, typename R, typename REq = std::equal_to<>>
void check_factors_through_abstract(const std::string &name, const std::function<R(const X &)> &f,
                                    const AbstractionFn<X, A> &alpha, const std::vector<std::pair<X, X>> &pairs,
                                    Report &report, REq &&r_eq = {}) {
  for (const auto &[x, y] : pairs) {
    if (!abstract_equal(x, y, alpha))
      continue;
    const R fx = f(x);
    const R fy = f(y);
    report.expect(std::invoke(r_eq, fx, fy), name + ": factors through abstraction", show(alpha(x)), show(fx),
                  show(fy));
  }
}

} // namespace phasecost
