#pragma once

#include <arm_neon.h>

#include <cstdint>

namespace msb::kernels::detail {

// 2-lane aarch64 NEON backend.
struct NeonOps {
  using vec = float64x2_t;
  using mask = uint64x2_t;
  struct idx {
    int i0;
    int i1;
  };
  static constexpr int W = 2;

  static vec set1(double x) { return vdupq_n_f64(x); }
  static vec load(const double* p) { return vld1q_f64(p); }
  static void store(double* p, vec v) { vst1q_f64(p, v); }

  static vec add(vec a, vec b) { return vaddq_f64(a, b); }
  static vec sub(vec a, vec b) { return vsubq_f64(a, b); }
  static vec mul(vec a, vec b) { return vmulq_f64(a, b); }
  static vec div(vec a, vec b) { return vdivq_f64(a, b); }
  static vec fma(vec a, vec b, vec c) { return vfmaq_f64(c, a, b); }
  static vec neg(vec a) { return vnegq_f64(a); }
  static vec abs(vec a) { return vabsq_f64(a); }
  static vec min(vec a, vec b) { return vminq_f64(a, b); }
  static vec max(vec a, vec b) { return vmaxq_f64(a, b); }
  static vec sqrt(vec a) { return vsqrtq_f64(a); }
  static vec round(vec a) { return vrndnq_f64(a); }

  static mask lt(vec a, vec b) { return vcltq_f64(a, b); }
  static mask le(vec a, vec b) { return vcleq_f64(a, b); }
  static mask gt(vec a, vec b) { return vcgtq_f64(a, b); }
  static mask ge(vec a, vec b) { return vcgeq_f64(a, b); }
  static mask eq(vec a, vec b) { return vceqq_f64(a, b); }
  static mask isnan(vec a) {
    return vmvnq_u64_workaround(vceqq_f64(a, a));
  }
  static mask bor(mask a, mask b) { return vorrq_u64(a, b); }
  static vec blend(mask m, vec a, vec b) { return vbslq_f64(m, a, b); }

  static vec inf() { return set1(__builtin_inf()); }
  static vec neg_inf() { return set1(-__builtin_inf()); }
  static vec nan() { return set1(__builtin_nan("")); }

  // no vmvnq for u64; complement via u32 view
  static uint64x2_t vmvnq_u64_workaround(uint64x2_t v) {
    return vreinterpretq_u64_u32(vmvnq_u32(vreinterpretq_u32_u64(v)));
  }

  static vec pow2k(vec kd) {
    const int64x2_t k = vcvtq_s64_f64(round(kd));
    const int64x2_t bits = vshlq_n_s64(vaddq_s64(k, vdupq_n_s64(1023)), 52);
    return vreinterpretq_f64_s64(bits);
  }

  static void split_norm(vec x, vec& m, vec& e) {
    const uint64x2_t bits = vreinterpretq_u64_f64(x);
    const uint64x2_t be = vshrq_n_u64(bits, 52);
    e = vsubq_f64(vcvtq_f64_u64(be), vdupq_n_f64(1023.0));
    const uint64x2_t mant = vorrq_u64(
        vandq_u64(bits, vdupq_n_u64(0x000FFFFFFFFFFFFFULL)),
        vdupq_n_u64(0x3FF0000000000000ULL));
    m = vreinterpretq_f64_u64(mant);
  }

  static idx segment_index(vec t, const double* edges, int nseg) {
    idx r{0, 0};
    const double t0 = vgetq_lane_f64(t, 0);
    const double t1 = vgetq_lane_f64(t, 1);
    for (int j = 1; j < nseg; ++j) {
      if (t0 >= edges[j]) ++r.i0;
      if (t1 >= edges[j]) ++r.i1;
    }
    return r;
  }

  static vec gather(const double* base, idx i) {
    float64x2_t v = vdupq_n_f64(base[i.i0]);
    return vsetq_lane_f64(base[i.i1], v, 1);
  }
};

}  // namespace msb::kernels::detail
