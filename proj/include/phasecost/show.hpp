#pragma once

// Rendering of values for failure records and diagnostics.

#include <string>
#include <string_view>
#include <utility>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "phasecost/cost.hpp"

namespace phasecost {

template <typename T> [[nodiscard]] std::string show(const T &v) {
  if constexpr (fmt::is_formattable<T>::value)
    return fmt::format("{}", v);
  else
    return "<unprintable>";
}

} // namespace phasecost

template <> struct fmt::formatter<phasecost::Cost> : fmt::formatter<std::uint64_t> {
  template <typename Ctx> auto format(phasecost::Cost c, Ctx &ctx) const -> decltype(ctx.out()) {
    return fmt::formatter<std::uint64_t>::format(c.units(), ctx);
  }
};

template <typename T> struct fmt::formatter<phasecost::Charged<T>> : fmt::formatter<std::string_view> {
  template <typename Ctx>
  auto format(const phasecost::Charged<T> &m, Ctx &ctx) const -> decltype(ctx.out()) {
    return fmt::format_to(ctx.out(), "({}, {})", m.cost, phasecost::show(m.value));
  }
};
