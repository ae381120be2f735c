#pragma once

#include <cstdint>
#include <cstddef>
#include <utility>
#include <vector>

namespace latentfs {

// splitmix64; used only to expand a user seed into generator state.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// xoshiro256++ 1.0 (Blackman and Vigna reference algorithm, public domain).
// Preferred over the standard library engines because the whole stream is
// plain integer arithmetic: a reimplementation in any language reproduces
// it bit for bit. State is seeded through splitmix64 as the authors advise.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto &word : s_) word = sm.next();
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // 53-bit uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform strictly inside (0, 1); safe to feed into the normal quantile.
  double next_open() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal deviate via the inverse CDF (one uniform per deviate).
  double next_normal();

  // Uniform integer in [0, bound), bound > 0, by modulo reduction. The
  // modulo bias is below 2^-53 for every bound used here and keeping the
  // reduction branch-free makes the stream trivial to reproduce elsewhere.
  std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

// Inverse of the standard normal CDF, Wichura's PPND16 rational
// approximation (Applied Statistics algorithm 241), good to about 1e-15
// relative over (0, 1). Out-of-range arguments return +-infinity.
double normal_quantile(double p);

// Fisher-Yates shuffle driven by next_below, highest index first.
template <typename T>
void shuffle(std::vector<T> &values, Xoshiro256pp &rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_below(i));
    std::swap(values[i - 1], values[j]);
  }
}

}  // namespace latentfs
