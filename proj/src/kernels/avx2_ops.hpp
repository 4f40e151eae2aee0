#pragma once

#include <immintrin.h>

#include <cstdint>

namespace msb::kernels::detail {

// 4-lane AVX2+FMA backend.
struct Avx2Ops {
  using vec = __m256d;
  using mask = __m256d;  // compare results, all-ones lanes
  using idx = __m128i;   // 32-bit lane indices for gathers
  static constexpr int W = 4;

  static vec set1(double x) { return _mm256_set1_pd(x); }
  static vec load(const double* p) { return _mm256_loadu_pd(p); }
  static void store(double* p, vec v) { _mm256_storeu_pd(p, v); }

  static vec add(vec a, vec b) { return _mm256_add_pd(a, b); }
  static vec sub(vec a, vec b) { return _mm256_sub_pd(a, b); }
  static vec mul(vec a, vec b) { return _mm256_mul_pd(a, b); }
  static vec div(vec a, vec b) { return _mm256_div_pd(a, b); }
  static vec fma(vec a, vec b, vec c) { return _mm256_fmadd_pd(a, b, c); }
  static vec neg(vec a) { return _mm256_xor_pd(a, _mm256_set1_pd(-0.0)); }
  static vec abs(vec a) {
    return _mm256_andnot_pd(_mm256_set1_pd(-0.0), a);
  }
  static vec min(vec a, vec b) { return _mm256_min_pd(a, b); }
  static vec max(vec a, vec b) { return _mm256_max_pd(a, b); }
  static vec sqrt(vec a) { return _mm256_sqrt_pd(a); }
  static vec round(vec a) {
    return _mm256_round_pd(a, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  }

  static mask lt(vec a, vec b) { return _mm256_cmp_pd(a, b, _CMP_LT_OQ); }
  static mask le(vec a, vec b) { return _mm256_cmp_pd(a, b, _CMP_LE_OQ); }
  static mask gt(vec a, vec b) { return _mm256_cmp_pd(a, b, _CMP_GT_OQ); }
  static mask ge(vec a, vec b) { return _mm256_cmp_pd(a, b, _CMP_GE_OQ); }
  static mask eq(vec a, vec b) { return _mm256_cmp_pd(a, b, _CMP_EQ_OQ); }
  static mask isnan(vec a) { return _mm256_cmp_pd(a, a, _CMP_UNORD_Q); }
  static mask bor(mask a, mask b) { return _mm256_or_pd(a, b); }
  static vec blend(mask m, vec a, vec b) { return _mm256_blendv_pd(b, a, m); }

  static vec inf() { return set1(__builtin_inf()); }
  static vec neg_inf() { return set1(-__builtin_inf()); }
  static vec nan() { return set1(__builtin_nan("")); }

  static vec pow2k(vec kd) {
    // integral kd in [-1022, 1023]; mantissa bits of kd + 1.5*2^52 hold k
    const __m256i bi =
        _mm256_castpd_si256(_mm256_add_pd(kd, _mm256_set1_pd(0x1.8p52)));
    const __m256i k =
        _mm256_sub_epi64(bi, _mm256_set1_epi64x(0x4338000000000000LL));
    return _mm256_castsi256_pd(
        _mm256_slli_epi64(_mm256_add_epi64(k, _mm256_set1_epi64x(1023)), 52));
  }

  static void split_norm(vec x, vec& m, vec& e) {
    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i be = _mm256_srli_epi64(bits, 52);
    const __m256d bed = _mm256_sub_pd(
        _mm256_castsi256_pd(
            _mm256_or_si256(be, _mm256_set1_epi64x(0x4330000000000000LL))),
        _mm256_set1_pd(0x1p52));
    e = _mm256_sub_pd(bed, _mm256_set1_pd(1023.0));
    m = _mm256_castsi256_pd(_mm256_or_si256(
        _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
        _mm256_set1_epi64x(0x3FF0000000000000LL)));
  }

  static idx segment_index(vec t, const double* edges, int nseg) {
    __m256d acc = _mm256_setzero_pd();
    const __m256d one = _mm256_set1_pd(1.0);
    for (int j = 1; j < nseg; ++j)
      acc = _mm256_add_pd(
          acc, _mm256_and_pd(ge(t, _mm256_set1_pd(edges[j])), one));
    return _mm256_cvtpd_epi32(acc);
  }

  static vec gather(const double* base, idx i) {
    return _mm256_i32gather_pd(base, i, 8);
  }
};

}  // namespace msb::kernels::detail
