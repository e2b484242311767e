#pragma once

#include <cmath>
#include <cstdint>

namespace corrgraph {

// Seed plus substream index. Identical (seed, stream) gives identical draws,
// which is what makes parallel Monte Carlo runs reproducible: trial t of an
// experiment always uses stream base+t, no matter which worker executes it.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  RngSeed with_stream(std::uint64_t s) const { return RngSeed{seed, s}; }
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

// xoshiro256++ with substreams. The state is derived by running splitmix64
// on seed XOR (golden-ratio mix of the stream index), so distinct streams of
// the same master seed are decorrelated.
class SplitRng {
 public:
  explicit SplitRng(RngSeed s) {
    std::uint64_t init =
        s.seed ^ ((s.stream + 0x243F6A8885A308D3ULL) * 0x9E3779B97F4A7C15ULL);
    for (auto& w : state_) w = detail::splitmix64(init);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0,1) with 53 random bits.
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double q) { return next_double() < q; }

  // Uniform in [0, n), unbiased (Lemire with rejection).
  std::uint64_t below(std::uint64_t n) {
    std::uint64_t x = next_u64();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < n) {
      std::uint64_t threshold = (0 - n) % n;
      while (lo < threshold) {
        x = next_u64();
        m = static_cast<__uint128_t>(x) * n;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  // Number of failures before the next success of a Bernoulli(q) sequence.
  // Used to skip over absent pairs when sampling sparse graphs.
  std::uint64_t geometric_skip(double q) {
    double u = next_double();
    if (u <= 0.0) return 0;
    return static_cast<std::uint64_t>(std::floor(std::log1p(-u) / std::log1p(-q)));
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

}  // namespace corrgraph
