#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace ridge {

// Philox4x32-10 counter-based generator. A (seed, stream) pair plus a block
// counter fully determines every output, so independent streams can be
// evaluated in any order on any number of threads and still reproduce the
// same values. Constants follow Salmon et al., "Parallel random numbers:
// as easy as 1, 2, 3".
class Philox {
 public:
  Philox(std::uint64_t seed, std::uint64_t stream)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_lo_(static_cast<std::uint32_t>(stream)),
        stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

  std::uint32_t next_u32() {
    if (index_ == 4) {
      block_ = round10(block_counter_++);
      index_ = 0;
    }
    return block_[index_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
  }

  // Uniform in [0, 1) with 53 random bits.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller (pinned transform so that identical
  // seeds give identical streams regardless of the C++ library).
  double next_normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - next_uniform();  // (0, 1]
    const double u2 = next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  using Block = std::array<std::uint32_t, 4>;

  static std::uint32_t mulhi(std::uint32_t a, std::uint32_t b) {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b)) >> 32);
  }

  Block round10(std::uint64_t block_counter) const {
    Block ctr{static_cast<std::uint32_t>(block_counter),
              static_cast<std::uint32_t>(block_counter >> 32), stream_lo_, stream_hi_};
    std::uint32_t k0 = key_[0], k1 = key_[1];
    for (int round = 0; round < 10; ++round) {
      const std::uint32_t lo0 = 0xD2511F53u * ctr[0];
      const std::uint32_t hi0 = mulhi(0xD2511F53u, ctr[0]);
      const std::uint32_t lo1 = 0xCD9E8D57u * ctr[2];
      const std::uint32_t hi1 = mulhi(0xCD9E8D57u, ctr[2]);
      ctr = Block{hi1 ^ ctr[1] ^ k0, lo1, hi0 ^ ctr[3] ^ k1, lo0};
      k0 += 0x9E3779B9u;
      k1 += 0xBB67AE85u;
    }
    return ctr;
  }

  std::array<std::uint32_t, 2> key_;
  std::uint32_t stream_lo_ = 0;
  std::uint32_t stream_hi_ = 0;
  std::uint64_t block_counter_ = 0;
  Block block_{};
  int index_ = 4;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace ridge
