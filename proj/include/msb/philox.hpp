#pragma once

#include <array>
#include <cstdint>

namespace msb {

// Philox4x32-10 counter-based generator. Stateless: every 128-bit counter
// block under a 64-bit key yields four independent 32-bit words, so draws
// can be indexed by (key, block) and are reproducible under any scheduling.
struct Philox {
  static constexpr std::uint32_t kM0 = 0xD2511F53u;
  static constexpr std::uint32_t kM1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kW0 = 0x9E3779B9u;
  static constexpr std::uint32_t kW1 = 0xBB67AE85u;

  static std::array<std::uint32_t, 4> block(std::uint64_t key,
                                            std::uint64_t ctr_hi,
                                            std::uint64_t ctr_lo) {
    std::uint32_t c0 = static_cast<std::uint32_t>(ctr_lo);
    std::uint32_t c1 = static_cast<std::uint32_t>(ctr_lo >> 32);
    std::uint32_t c2 = static_cast<std::uint32_t>(ctr_hi);
    std::uint32_t c3 = static_cast<std::uint32_t>(ctr_hi >> 32);
    std::uint32_t k0 = static_cast<std::uint32_t>(key);
    std::uint32_t k1 = static_cast<std::uint32_t>(key >> 32);
    for (int round = 0; round < 10; ++round) {
      const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * c0;
      const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * c2;
      const std::uint32_t hi0 = static_cast<std::uint32_t>(p0 >> 32);
      const std::uint32_t lo0 = static_cast<std::uint32_t>(p0);
      const std::uint32_t hi1 = static_cast<std::uint32_t>(p1 >> 32);
      const std::uint32_t lo1 = static_cast<std::uint32_t>(p1);
      const std::uint32_t n0 = hi1 ^ c1 ^ k0;
      const std::uint32_t n1 = lo1;
      const std::uint32_t n2 = hi0 ^ c3 ^ k1;
      const std::uint32_t n3 = lo0;
      c0 = n0;
      c1 = n1;
      c2 = n2;
      c3 = n3;
      k0 += kW0;
      k1 += kW1;
    }
    return {c0, c1, c2, c3};
  }

  // two uniforms in (0, 1) from one block
  static std::array<double, 2> uniform2(std::uint64_t key, std::uint64_t ctr_hi,
                                        std::uint64_t ctr_lo) {
    const auto w = block(key, ctr_hi, ctr_lo);
    const std::uint64_t a =
        (static_cast<std::uint64_t>(w[0]) << 32) | w[1];
    const std::uint64_t b =
        (static_cast<std::uint64_t>(w[2]) << 32) | w[3];
    return {to_unit(a), to_unit(b)};
  }

  static double to_unit(std::uint64_t u) {
    return static_cast<double>(u >> 11) * 0x1.0p-53 + 0x1.0p-54;
  }
};

}  // namespace msb
