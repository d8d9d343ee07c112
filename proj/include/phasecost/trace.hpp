#pragma once

// Operation traces over a registered interface. Traces drive both the
// exhaustive small-scope sweeps and randomly generated clients.

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "phasecost/rng.hpp"
#include "phasecost/show.hpp"

namespace phasecost {

template <typename Arg> struct OpCall {
  std::string op;
  std::vector<Arg> args;

  friend bool operator==(const OpCall &, const OpCall &) = default;
};

template <typename Arg> using OpTrace = std::vector<OpCall<Arg>>;

/// Operation names and their arities.
class Interface {
public:
  Interface &add(std::string op, std::size_t arity) {
    arity_[std::move(op)] = arity;
    return *this;
  }

  [[nodiscard]] bool contains(const std::string &op) const { return arity_.count(op) != 0; }
  [[nodiscard]] std::size_t arity(const std::string &op) const {
    auto it = arity_.find(op);
    if (it == arity_.end())
      throw std::out_of_range("unknown operation: " + op);
    return it->second;
  }
  [[nodiscard]] const std::map<std::string, std::size_t> &ops() const noexcept { return arity_; }

  template <typename Arg> [[nodiscard]] bool validates(const OpTrace<Arg> &trace) const {
    for (const auto &call : trace) {
      auto it = arity_.find(call.op);
      if (it == arity_.end() || it->second != call.args.size())
        return false;
    }
    return true;
  }

private:
  std::map<std::string, std::size_t> arity_;
};

/// Every trace of length <= max_len whose arguments are drawn from alphabet.
/// The empty trace is included.
template <typename Arg>
[[nodiscard]] std::vector<OpTrace<Arg>> all_traces(const Interface &iface, const std::vector<Arg> &alphabet,
                                                   std::size_t max_len) {
  std::vector<OpCall<Arg>> letters;
  for (const auto &[op, arity] : iface.ops()) {
    std::vector<std::vector<Arg>> arg_lists{{}};
    for (std::size_t i = 0; i < arity; ++i) {
      std::vector<std::vector<Arg>> next;
      for (const auto &prefix : arg_lists)
        for (const auto &a : alphabet) {
          auto extended = prefix;
          extended.push_back(a);
          next.push_back(std::move(extended));
        }
      arg_lists = std::move(next);
    }
    for (auto &args : arg_lists)
      letters.push_back({op, std::move(args)});
  }

  std::vector<OpTrace<Arg>> out{{}};
  std::vector<OpTrace<Arg>> frontier{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<OpTrace<Arg>> next;
    next.reserve(frontier.size() * letters.size());
    for (const auto &t : frontier)
      for (const auto &letter : letters) {
        auto extended = t;
        extended.push_back(letter);
        next.push_back(std::move(extended));
      }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

template <typename Arg, typename ArgGen>
[[nodiscard]] OpTrace<Arg> random_trace(const Interface &iface, Rng &rng, std::size_t len, ArgGen &&gen_arg) {
  std::vector<std::string> names;
  for (const auto &[op, arity] : iface.ops())
    names.push_back(op);
  OpTrace<Arg> trace;
  trace.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    const auto &op = names[rng.below(names.size())];
    OpCall<Arg> call{op, {}};
    for (std::size_t k = 0; k < iface.arity(op); ++k)
      call.args.push_back(gen_arg(rng));
    trace.push_back(std::move(call));
  }
  return trace;
}

} // namespace phasecost

template <typename Arg> struct fmt::formatter<phasecost::OpCall<Arg>> : fmt::formatter<std::string_view> {
  template <typename Ctx>
  auto format(const phasecost::OpCall<Arg> &c, Ctx &ctx) const -> decltype(ctx.out()) {
    return fmt::format_to(ctx.out(), "{}{}", c.op, c.args);
  }
};
