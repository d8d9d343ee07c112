#pragma once

// Cost as a writer effect over the ordered monoid of natural numbers.

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

namespace phasecost {

/// Abstract cost units. Addition is checked: overflow throws instead of wrapping.
class Cost {
public:
  constexpr Cost() noexcept = default;
  constexpr explicit Cost(std::uint64_t units) noexcept : units_(units) {}

  [[nodiscard]] constexpr std::uint64_t units() const noexcept { return units_; }

  friend constexpr Cost operator+(Cost a, Cost b) {
    if (a.units_ > std::numeric_limits<std::uint64_t>::max() - b.units_)
      throw std::overflow_error("cost overflow: " + std::to_string(a.units_) + " + " +
                                std::to_string(b.units_));
    return Cost{a.units_ + b.units_};
  }
  constexpr Cost &operator+=(Cost other) { return *this = *this + other; }

  friend constexpr bool operator==(Cost, Cost) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(Cost, Cost) noexcept = default;

private:
  std::uint64_t units_ = 0;
};

inline namespace literals {
constexpr Cost operator""_cost(unsigned long long units) noexcept { return Cost{units}; }
} // namespace literals

/// A value together with the cost accumulated while producing it.
template <typename T> struct Charged {
  using value_type = T;

  Cost cost;
  T value;

  friend bool operator==(const Charged &, const Charged &) = default;
};

template <typename T> struct is_charged : std::false_type {};
template <typename T> struct is_charged<Charged<T>> : std::true_type {};
template <typename T> inline constexpr bool is_charged_v = is_charged<T>::value;

template <typename T> [[nodiscard]] Charged<std::decay_t<T>> ret(T &&v) {
  return {Cost{}, std::forward<T>(v)};
}

template <typename T> [[nodiscard]] Charged<T> charge(Cost c, Charged<T> m) {
  m.cost = c + m.cost;
  return m;
}

/// Sequencing. Costs of the two stages add.
template <typename T, typename K>
  requires std::invocable<K &, const T &>
[[nodiscard]] auto bind(const Charged<T> &m, K &&k) {
  using Result = std::invoke_result_t<K &, const T &>;
  static_assert(is_charged_v<Result>, "continuation must return a Charged value");
  Result next = std::invoke(k, m.value);
  next.cost = m.cost + next.cost;
  return next;
}

template <typename T, typename F>
  requires std::invocable<F &, const T &>
[[nodiscard]] auto fmap(F &&f, const Charged<T> &m) {
  using U = std::decay_t<std::invoke_result_t<F &, const T &>>;
  return Charged<U>{m.cost, std::invoke(f, m.value)};
}

/// Behavioral view: forget the cost.
template <typename T> [[nodiscard]] const T &erase(const Charged<T> &m) noexcept {
  return m.value;
}
template <typename T> [[nodiscard]] T erase(Charged<T> &&m) noexcept { return std::move(m.value); }

/// Cost order: a's cost is bounded by b's and the two behave alike.
template <typename T, typename Eq = std::equal_to<>>
[[nodiscard]] bool leq(const Charged<T> &a, const Charged<T> &b, Eq &&eq = {}) {
  return a.cost <= b.cost && std::invoke(eq, a.value, b.value);
}

} // namespace phasecost
