#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>

namespace loscov {

// User-facing seed: a 64-bit value plus a stream index. Identical
// (value, stream) pairs always reproduce the same draw sequence,
// independent of platform and thread count. Substreams are derived by
// hashing, never by splitting a shared sequence, so consuming one
// substream cannot perturb another.
struct RandomSeed {
  std::uint64_t value = 0;
  std::uint64_t stream = 0;

  [[nodiscard]] RandomSeed substream(std::uint64_t tag) const;
};

namespace rngdetail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

// SplitMix64 finalizer (Stafford mix13). Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

// Folds one key field into a stream key.
constexpr std::uint64_t chain(std::uint64_t key, std::uint64_t field) {
  return mix64((key + kGolden) ^ mix64(field + kGolden));
}

constexpr std::uint64_t splitmix_next(std::uint64_t& state) {
  state += kGolden;
  return mix64(state);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace rngdetail

inline RandomSeed RandomSeed::substream(std::uint64_t tag) const {
  return RandomSeed{value, rngdetail::chain(stream, tag)};
}

// xoshiro256++ keyed by a 64-bit stream key (state expanded via SplitMix64).
// All variate transforms are inverse-CDF / hand-rolled so that sequences are
// bit-identical across standard libraries.
class StreamRng {
 public:
  explicit StreamRng(std::uint64_t key) {
    std::uint64_t sm = key;
    for (auto& word : state_) word = rngdetail::splitmix_next(sm);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0)
      state_[0] = rngdetail::kGolden;
  }

  std::uint64_t next_u64() {
    using rngdetail::rotl;
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

  // Uniform on [0, 1), 53 random mantissa bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  // Inverse-CDF exponential with the given mean; mean <= 0 yields 0.
  double exponential(double mean) {
    if (mean <= 0.0) {
      uniform01();  // keep stream consumption independent of the mean
      return 0.0;
    }
    return -mean * std::log1p(-uniform01());
  }

  // Uniform index in [0, n).
  std::size_t pick_index(std::size_t n) {
    assert(n > 0);
    auto i = static_cast<std::size_t>(uniform01() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

  // Poisson count with arbitrary nonnegative mean. Knuth's product method
  // for small means, Hormann's PTRS transformed rejection for large ones.
  std::uint64_t poisson(double mean) {
    if (!(mean > 0.0)) return 0;
    if (mean <= 30.0) return poisson_knuth(mean);
    return poisson_ptrs(mean);
  }

 private:
  std::uint64_t poisson_knuth(double mean) {
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform01();
    } while (p > limit);
    return k - 1;
  }

  std::uint64_t poisson_ptrs(double mean) {
    const double log_mean = std::log(mean);
    const double b = 0.931 + 2.53 * std::sqrt(mean);
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
      const double u = uniform01() - 0.5;
      const double v = uniform01();
      const double us = 0.5 - std::fabs(u);
      const double kr = std::floor((2.0 * a / us + b) * u + mean + 0.43);
      if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kr);
      if (kr < 0.0 || (us < 0.013 && v > us)) continue;
      if (std::log(v) + std::log(inv_alpha) - std::log(a / (us * us) + b) <=
          kr * log_mean - mean - std::lgamma(kr + 1.0)) {
        return static_cast<std::uint64_t>(kr);
      }
    }
  }

  std::uint64_t state_[4];
};

inline StreamRng make_rng(std::uint64_t key) { return StreamRng(key); }

}  // namespace loscov
