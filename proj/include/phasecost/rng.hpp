#pragma once

// Deterministic random streams. Every suite derives its own stream from
// (global seed, suite name), so results never depend on scheduling.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace phasecost {

[[nodiscard]] constexpr std::uint64_t fnv1a(std::string_view s) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// mt19937_64 with portable bounded draws (std distributions are
/// implementation-defined, which would break byte-identical reports).
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}
  Rng(std::uint64_t seed, std::string_view stream) : Rng(seed ^ splitmix64(fnv1a(stream))) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do
      x = engine_();
    while (x >= limit);
    return x % n;
  }

  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return (engine_() >> 63) != 0; }

  /// Geometric size with the given mean, capped at max.
  std::size_t geometric(double mean, std::size_t max) {
    const double p = 1.0 / (mean + 1.0);
    std::size_t n = 0;
    const std::uint64_t threshold = static_cast<std::uint64_t>(p * 18446744073709551616.0);
    while (n < max && engine_() >= threshold)
      ++n;
    return n;
  }

  std::vector<int> ints(std::size_t n, int lo, int hi) {
    std::vector<int> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      out.push_back(static_cast<int>(range(lo, hi)));
    return out;
  }

  /// Fisher-Yates with our own bounded draw.
  template <typename T> void shuffle(std::vector<T> &v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

  Rng fork(std::string_view label) { return Rng(next(), label); }

private:
  std::mt19937_64 engine_;
};

} // namespace phasecost
