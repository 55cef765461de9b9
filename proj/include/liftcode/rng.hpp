#ifndef LIFTCODE_RNG_HPP_
#define LIFTCODE_RNG_HPP_

#include <cstdint>
#include <vector>

namespace liftcode {

// Seedable, splittable generator: xoshiro256** seeded through splitmix64.
// Per-trial streams are derived from (seed, stream index) so that parallel
// and serial runs of a Monte-Carlo experiment see identical randomness.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : SplitRng(seed, 0) {}

  SplitRng(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 walk over (seed, stream) fills the xoshiro state.
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    for (auto& s : state_) s = splitmix64(x);
    // xoshiro must not start at the all-zero state
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[3] = 1;
  }

  static SplitRng for_stream(std::uint64_t seed, std::uint64_t stream) {
    return SplitRng(seed, stream);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform in [0, n), n >= 1. Rejection keeps the distribution exact.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  bool coin(double p) {
    // 53-bit uniform in [0,1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53 < p;
  }

  // k distinct values from [0, n), in random order.
  std::vector<std::uint64_t> sample_distinct(std::uint64_t n, std::uint64_t k) {
    std::vector<std::uint64_t> out;
    out.reserve(k);
    // rejection; fine for the small k / large n uses in this project
    while (out.size() < k) {
      std::uint64_t v = below(n);
      bool dup = false;
      for (std::uint64_t u : out) {
        if (u == v) { dup = true; break; }
      }
      if (!dup) out.push_back(v);
    }
    return out;
  }

 private:
  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

}  // namespace liftcode

#endif  // LIFTCODE_RNG_HPP_
