#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <utility>

namespace gr::rng {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Counter-based generator: every draw is a pure function of
/// (seed, stream, counter). Streams decorrelate independent consumers
/// (items, clusters, optimizer starts); counters index draws within a stream.
constexpr std::uint64_t value(std::uint64_t seed, std::uint64_t stream,
                              std::uint64_t counter) {
  std::uint64_t x = mix64(seed ^ mix64(stream ^ 0x2545f4914f6cdd1dull));
  return mix64(x ^ mix64(counter));
}

/// Uniform draw in [0, 1) with 53 random bits.
inline double uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  return static_cast<double>(value(seed, stream, counter) >> 11) * 0x1.0p-53;
}

/// Standard normal via Box-Muller; consumes counters 2c and 2c+1.
inline double gaussian(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  // u1 in (0,1] so the log is finite.
  double u1 = (static_cast<double>(value(seed, stream, 2 * counter) >> 11) + 1.0) * 0x1.0p-53;
  double u2 = uniform(seed, stream, 2 * counter + 1);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Stateful convenience wrapper over the counter scheme.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

  std::uint64_t next_u64() { return value(seed_, stream_, counter_++); }

  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double next_gaussian() {
    double z = gaussian(seed_, stream_, counter_);
    ++counter_;
    return z;
  }

  /// Uniform integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  template <class T>
  void shuffle(std::span<T> xs) {
    for (std::size_t i = xs.size(); i > 1; --i) {
      std::swap(xs[i - 1], xs[below(i)]);
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace gr::rng
