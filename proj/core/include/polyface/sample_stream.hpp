#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace polyface {

namespace detail {

inline void philox_mulhilo(uint32_t a, uint32_t b, uint32_t& lo, uint32_t& hi) {
  const uint64_t p = static_cast<uint64_t>(a) * b;
  lo = static_cast<uint32_t>(p);
  hi = static_cast<uint32_t>(p >> 32);
}

// Philox4x32-10 block function (Salmon et al., SC'11 counter-based RNG).
inline std::array<uint32_t, 4> philox_block(std::array<uint32_t, 4> ctr,
                                            std::array<uint32_t, 2> key) {
  constexpr uint32_t M0 = 0xD2511F53u, M1 = 0xCD9E8D57u;
  constexpr uint32_t W0 = 0x9E3779B9u, W1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    uint32_t lo0, hi0, lo1, hi1;
    philox_mulhilo(M0, ctr[0], lo0, hi0);
    philox_mulhilo(M1, ctr[2], lo1, hi1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    key[0] += W0;
    key[1] += W1;
  }
  return ctr;
}

}  // namespace detail

/// Per-sample generator: every draw is a pure function of (seed, sample
/// index, draw position), so results are identical at any thread count and
/// in any accumulation order.
class SampleRng {
 public:
  SampleRng(uint64_t seed, uint64_t sample_index)
      : key_{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)},
        sample_lo_(static_cast<uint32_t>(sample_index)),
        sample_hi_(static_cast<uint32_t>(sample_index >> 32)) {}

  uint32_t next_u32() {
    if (pos_ == 4) {
      buf_ = detail::philox_block({static_cast<uint32_t>(block_),
                                   static_cast<uint32_t>(block_ >> 32), sample_lo_, sample_hi_},
                                  key_);
      ++block_;
      pos_ = 0;
    }
    return buf_[pos_++];
  }

  uint64_t next_u64() {
    const uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (second value cached).
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(1.0 - uniform()));
    const double theta = 6.283185307179586476925286766559 * uniform();
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::array<uint32_t, 2> key_;
  uint32_t sample_lo_, sample_hi_;
  uint64_t block_ = 0;
  std::array<uint32_t, 4> buf_{};
  int pos_ = 4;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Seed-indexed family of independent per-sample generators.
struct SampleStream {
  uint64_t seed = 0;
  SampleRng at(uint64_t sample_index) const { return SampleRng(seed, sample_index); }
};

/// Deterministically derives an independent sub-seed (for auxiliary streams).
inline uint64_t derive_seed(uint64_t seed, uint64_t tag) {
  const auto block = detail::philox_block(
      {static_cast<uint32_t>(tag), static_cast<uint32_t>(tag >> 32), 0x5eedu, 0xd00du},
      {static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32)});
  return (static_cast<uint64_t>(block[0]) << 32) | block[1];
}

}  // namespace polyface
