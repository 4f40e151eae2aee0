#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

namespace msb::kernels::detail {

// One-lane backend. std::fma keeps the rounding behavior identical to the
// fused SIMD paths.
struct ScalarOps {
  using vec = double;
  using mask = bool;
  using idx = int;
  static constexpr int W = 1;

  static vec set1(double x) { return x; }
  static vec load(const double* p) { return *p; }
  static void store(double* p, vec v) { *p = v; }

  static vec add(vec a, vec b) { return a + b; }
  static vec sub(vec a, vec b) { return a - b; }
  static vec mul(vec a, vec b) { return a * b; }
  static vec div(vec a, vec b) { return a / b; }
  static vec fma(vec a, vec b, vec c) { return std::fma(a, b, c); }
  static vec neg(vec a) { return -a; }
  static vec abs(vec a) { return std::fabs(a); }
  static vec min(vec a, vec b) { return b < a ? b : a; }
  static vec max(vec a, vec b) { return a < b ? b : a; }
  static vec sqrt(vec a) { return std::sqrt(a); }
  static vec round(vec a) { return std::nearbyint(a); }

  static mask lt(vec a, vec b) { return a < b; }
  static mask le(vec a, vec b) { return a <= b; }
  static mask gt(vec a, vec b) { return a > b; }
  static mask ge(vec a, vec b) { return a >= b; }
  static mask eq(vec a, vec b) { return a == b; }
  static mask isnan(vec a) { return a != a; }
  static mask bor(mask a, mask b) { return a || b; }
  static vec blend(mask m, vec a, vec b) { return m ? a : b; }

  static vec inf() { return std::numeric_limits<double>::infinity(); }
  static vec neg_inf() { return -std::numeric_limits<double>::infinity(); }
  static vec nan() { return std::numeric_limits<double>::quiet_NaN(); }

  // 2^k for integral k in [-1022, 1023]
  static vec pow2k(vec kd) {
    const auto k = static_cast<std::int64_t>(kd);
    return std::bit_cast<double>((k + 1023) << 52);
  }

  // x = m * 2^e with m in [1, 2); x positive, normal
  static void split_norm(vec x, vec& m, vec& e) {
    const auto bits = std::bit_cast<std::uint64_t>(x);
    const auto be = static_cast<std::int64_t>((bits >> 52) & 0x7FF);
    e = static_cast<double>(be - 1023);
    m = std::bit_cast<double>((bits & 0x000FFFFFFFFFFFFFULL) |
                              0x3FF0000000000000ULL);
  }

  static idx segment_index(vec t, const double* edges, int nseg) {
    int i = 0;
    while (i + 1 < nseg && t >= edges[i + 1]) ++i;
    return i;
  }

  static vec gather(const double* base, idx i) { return base[i]; }
};

}  // namespace msb::kernels::detail
