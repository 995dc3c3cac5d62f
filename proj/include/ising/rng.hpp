#pragma once

#include <cstdint>
#include <limits>

namespace ising {

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based random stream keyed by (seed, stream index). Each Monte Carlo
// sample owns stream (seed, sample index), so results do not depend on how
// samples are scheduled across threads. Output is SplitMix64 and bit-identical
// on every platform.
class CounterStream {
 public:
  using result_type = std::uint64_t;

  CounterStream(std::uint64_t seed, std::uint64_t index) noexcept
      : state_(splitmix64_mix(seed ^ 0x6a09e667f3bcc909ULL) ^ splitmix64_mix(index + 0x9e3779b97f4a7c15ULL)) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return splitmix64_mix(state_);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p_one) noexcept { return uniform() < p_one; }

 private:
  std::uint64_t state_;
};

}  // namespace ising
