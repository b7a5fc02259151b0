#ifndef HOMOPOLYMER_RNG_HPP
#define HOMOPOLYMER_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>

namespace homopoly {

// Philox 4x32-10 (Salmon et al., SC 2011).  Counter-based: output block k of
// stream s depends only on (key(s), k), so replicas can be split without
// coordination and any draw can be reproduced from (seed, stream, counter).

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline void philox_round(std::array<std::uint32_t, 4>& ctr,
                         std::array<std::uint32_t, 2>& key) {
  constexpr std::uint32_t kM0 = 0xD2511F53u, kM1 = 0xCD9E8D57u;
  const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * ctr[0];
  const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * ctr[2];
  const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
  const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
  const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
  const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
  ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  key[0] += 0x9E3779B9u;
  key[1] += 0xBB67AE85u;
}

} // namespace detail

class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}

  RngStream(std::uint64_t seed, std::uint64_t stream) {
    // Key derivation mixes seed and stream id so that distinct streams from
    // the same seed are statistically independent.
    std::uint64_t s = seed;
    std::uint64_t a = detail::splitmix64(s);
    s ^= stream * 0xD1342543DE82EF95ULL + 0x2545F4914F6CDD1DULL;
    std::uint64_t b = detail::splitmix64(s);
    key_ = {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32)};
    counter_hi_ = b;
    counter_lo_ = 0;
    buf_pos_ = 4;
    have_spare_normal_ = false;
    spare_normal_ = 0.0;
  }

  // Derive the stream for replica r of a run seeded with `seed`.
  static RngStream for_replica(std::uint64_t seed, std::uint64_t replica) {
    return RngStream(seed, replica);
  }

  std::uint32_t next_u32() {
    if (buf_pos_ >= 4) refill();
    return buf_[buf_pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  // Uniform on [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1]; safe as an argument to log().
  double next_double_pos() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  double next_exponential(double rate) {
    return -std::log(next_double_pos()) / rate;
  }

  // Marsaglia polar method with a cached spare.
  double next_normal() {
    if (have_spare_normal_) {
      have_spare_normal_ = false;
      return spare_normal_;
    }
    double u, v, s;
    do {
      u = 2.0 * next_double() - 1.0;
      v = 2.0 * next_double() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_normal_ = v * m;
    have_spare_normal_ = true;
    return u * m;
  }

  // Unbiased uniform draw from {0, ..., n-1}, n <= 2^32.
  std::uint32_t next_below(std::uint32_t n) {
    const std::uint64_t span = 1ULL << 32;
    const std::uint64_t limit = span - span % n;
    std::uint64_t u;
    do {
      u = next_u32();
    } while (u >= limit);
    return static_cast<std::uint32_t>(u % n);
  }

 private:
  void refill() {
    std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(counter_lo_),
        static_cast<std::uint32_t>(counter_lo_ >> 32),
        static_cast<std::uint32_t>(counter_hi_),
        static_cast<std::uint32_t>(counter_hi_ >> 32)};
    std::array<std::uint32_t, 2> key = key_;
    for (int round = 0; round < 10; ++round) detail::philox_round(ctr, key);
    buf_ = ctr;
    buf_pos_ = 0;
    ++counter_lo_;
    if (counter_lo_ == 0) ++counter_hi_;
  }

  std::array<std::uint32_t, 2> key_;
  std::uint64_t counter_lo_, counter_hi_;
  std::array<std::uint32_t, 4> buf_;
  unsigned buf_pos_;
  bool have_spare_normal_;
  double spare_normal_;
};

} // namespace homopoly

#endif
