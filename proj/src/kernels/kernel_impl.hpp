#pragma once

// Algorithm bodies for the batched math kernels, templated over a backend ops
// struct (scalar / AVX2 / NEON). Every backend runs the same polynomial in the
// same order, so lane width only affects performance.
//
//   norm_cdf : center |z|<=1 via 0.5 + z*P(z^2); tails via Phi(-t) =
//              G(t)*exp(-t^2/2) with G fitted per segment (see normal_coeffs)
//   norm_ppf : rational approximations on three branches (central, near tail,
//              far tail) in the classical lower-tail parameterization
//   exp      : 2^k * P(r), r = x - k*ln2 with split-constant reduction;
//              results below 2^-1022 flush to zero
//   log      : exponent/mantissa split, atanh-form core polynomial

#include <cstdint>

#include "normal_coeffs.hpp"

namespace msb::kernels::detail {

inline constexpr double kExpInvLn2 = 1.4426950408889634074;
inline constexpr double kExpLn2Hi = 0.693147180369123816490;   // high 32 bits
inline constexpr double kExpLn2Lo = 1.90821492927058770002e-10;
inline constexpr double kExpZeroBelow = -708.0;
inline constexpr double kExpInfAbove = 709.782712893384;
inline constexpr double kSqrtHalf = 0.70710678118654752440;

template <class K, int N>
inline typename K::vec poly(const double (&c)[N], typename K::vec u) {
  auto acc = K::set1(c[N - 1]);
  for (int i = N - 2; i >= 0; --i) acc = K::fma(acc, u, K::set1(c[i]));
  return acc;
}

// u = (2x - (a+b)) / (b-a), the fit variable for the interval [a, b]
template <class K>
inline typename K::vec unitize(typename K::vec x, double a, double b) {
  const double scale = 2.0 / (b - a);
  const double shift = -(a + b) / (b - a);
  return K::fma(x, K::set1(scale), K::set1(shift));
}

template <class K>
inline typename K::vec exp_impl(typename K::vec x) {
  using V = typename K::vec;
  V kd = K::round(K::mul(x, K::set1(kExpInvLn2)));
  // kd in [-1022, 1025] once the flush/overflow masks below are applied
  V r = K::fma(kd, K::set1(-kExpLn2Hi), x);
  r = K::fma(kd, K::set1(-kExpLn2Lo), r);
  V p = poly<K>(EXP_CORE, unitize<K>(r, EXP_CORE_A, EXP_CORE_B));
  V kclamp = K::min(kd, K::set1(1023.0));
  V res = K::mul(p, K::pow2k(K::max(kclamp, K::set1(-1022.0))));
  res = K::blend(K::gt(kd, K::set1(1022.5)), K::mul(res, K::set1(2.0)), res);
  res = K::blend(K::lt(x, K::set1(kExpZeroBelow)), K::set1(0.0), res);
  res = K::blend(K::gt(x, K::set1(kExpInfAbove)), K::inf(), res);
  return K::blend(K::isnan(x), x, res);
}

template <class K>
inline typename K::vec log_impl(typename K::vec x) {
  using V = typename K::vec;
  auto denorm = K::lt(x, K::set1(2.2250738585072014e-308));
  V xs = K::blend(denorm, K::mul(x, K::set1(0x1p54)), x);
  V ebias = K::blend(denorm, K::set1(54.0), K::set1(0.0));
  V m, e;
  K::split_norm(xs, m, e);  // xs = m * 2^e, m in [1, 2)
  auto big = K::gt(m, K::set1(1.4142135623730951));
  m = K::blend(big, K::mul(m, K::set1(0.5)), m);
  e = K::sub(K::blend(big, K::add(e, K::set1(1.0)), e), ebias);
  V s = K::div(K::sub(m, K::set1(1.0)), K::add(m, K::set1(1.0)));
  V q = K::mul(s, s);
  V lnm = K::mul(K::mul(K::set1(2.0), s),
                 poly<K>(LOG_CORE, unitize<K>(q, LOG_CORE_A, LOG_CORE_B)));
  V res = K::fma(e, K::set1(kExpLn2Hi),
                 K::fma(e, K::set1(kExpLn2Lo), lnm));
  res = K::blend(K::eq(x, K::set1(0.0)), K::neg_inf(), res);
  res = K::blend(K::lt(x, K::set1(0.0)), K::nan(), res);
  res = K::blend(K::eq(x, K::inf()), K::inf(), res);
  return K::blend(K::isnan(x), x, res);
}

template <class K>
inline typename K::vec norm_cdf_impl(typename K::vec z) {
  using V = typename K::vec;
  V t = K::abs(z);
  // center branch, |z| <= 1
  V tc = K::min(t, K::set1(1.0));
  V s = K::mul(tc, tc);
  V center = K::fma(
      z, poly<K>(PHI_CENTER, unitize<K>(s, PHI_CENTER_A, PHI_CENTER_B)),
      K::set1(0.5));
  // tail branch: Phi(-t) = G(t) * exp(-t^2/2)
  V tt = K::min(K::max(t, K::set1(1.0)), K::set1(37.8));
  auto idx = K::segment_index(tt, PHI_TAIL_EDGES, PHI_TAIL_NSEG);
  V a = K::gather(PHI_TAIL_EDGES, idx);
  V b = K::gather(PHI_TAIL_EDGES + 1, idx);
  V two = K::set1(2.0);
  V u = K::div(K::sub(K::mul(two, tt), K::add(a, b)), K::sub(b, a));
  V g = K::gather(PHI_TAIL_COEF + (PHI_TAIL_N - 1) * PHI_TAIL_NSEG, idx);
  for (int d = PHI_TAIL_N - 2; d >= 0; --d)
    g = K::fma(g, u, K::gather(PHI_TAIL_COEF + d * PHI_TAIL_NSEG, idx));
  V th = K::mul(t, t);
  V terr = K::fma(t, t, K::neg(th));  // exact product residual
  V ex = K::mul(exp_impl<K>(K::mul(K::set1(-0.5), th)),
                K::fma(K::set1(-0.5), terr, K::set1(1.0)));
  V tail = K::mul(g, ex);
  V res = K::blend(K::gt(z, K::set1(0.0)), K::sub(K::set1(1.0), tail), tail);
  res = K::blend(K::le(t, K::set1(1.0)), center, res);
  return K::blend(K::isnan(z), z, res);
}

// lower-tail inverse normal, three-branch rational form
inline constexpr double PPF_A[8] = {
    3.387132872796366608,    133.14166789178437745,  1971.5909503065514427,
    13731.693765509461125,   45921.953931549871457,  67265.770927008700853,
    33430.575583588128105,   2509.0809287301226727};
inline constexpr double PPF_B[8] = {
    1.0,                     42.313330701600911252,  687.1870074920579083,
    5394.1960214247511077,   21213.794301586595867,  39307.89580009271061,
    28729.085735721942674,   5226.495278852854561};
inline constexpr double PPF_C[8] = {
    1.42343711074968357734,  4.6303378461565452959,  5.7694972214606914055,
    3.64784832476320460504,  1.27045825245236838258, 0.24178072517745061177,
    0.0227238449892691845833, 7.7454501427834140764e-4};
inline constexpr double PPF_D[8] = {
    1.0,                     2.05319162663775882187, 1.6763848301838038494,
    0.68976733498510000455,  0.14810397642748007459, 0.0151986665636164571966,
    5.475938084995344946e-4, 1.05075007164441684324e-9};
inline constexpr double PPF_E[8] = {
    6.6579046435011037772,   5.4637849111641143699,  1.7848265399172913358,
    0.29656057182850489123,  0.026532189526576123093, 0.0012426609473880784386,
    2.71155556874348757815e-5, 2.01033439929228813265e-7};
inline constexpr double PPF_F[8] = {
    1.0,                     0.59983220655588793769, 0.13692988092273580531,
    0.0148753612908506148525, 7.868691311456132591e-4, 1.8463183175100546818e-5,
    1.4215117583164458887e-7, 2.04426310338993978564e-15};

template <class K>
inline typename K::vec norm_ppf_impl(typename K::vec p) {
  using V = typename K::vec;
  V q = K::sub(p, K::set1(0.5));
  auto central = K::le(K::abs(q), K::set1(0.425));
  V rc = K::fma(K::neg(q), q, K::set1(0.180625));
  V res_c = K::mul(q, K::div(poly<K>(PPF_A, rc), poly<K>(PPF_B, rc)));
  V pm = K::min(p, K::sub(K::set1(1.0), p));
  V r = K::sqrt(K::neg(log_impl<K>(K::max(pm, K::set1(0.0)))));
  auto far = K::gt(r, K::set1(5.0));
  V rm = K::sub(r, K::blend(far, K::set1(5.0), K::set1(1.6)));
  V num = K::blend(far, poly<K>(PPF_E, rm), poly<K>(PPF_C, rm));
  V den = K::blend(far, poly<K>(PPF_F, rm), poly<K>(PPF_D, rm));
  V res_t = K::div(num, den);
  res_t = K::blend(K::lt(q, K::set1(0.0)), K::neg(res_t), res_t);
  V res = K::blend(central, res_c, res_t);
  res = K::blend(K::eq(p, K::set1(0.0)), K::neg_inf(), res);
  res = K::blend(K::eq(p, K::set1(1.0)), K::inf(), res);
  auto bad = K::bor(K::lt(p, K::set1(0.0)), K::gt(p, K::set1(1.0)));
  res = K::blend(bad, K::nan(), res);
  return K::blend(K::isnan(p), p, res);
}

template <class K, typename K::vec (*F)(typename K::vec)>
inline void map_array(const double* in, double* out, std::size_t n) {
  constexpr int W = K::W;
  std::size_t i = 0;
  for (; i + W <= n; i += W) K::store(out + i, F(K::load(in + i)));
  if (i < n) {
    double bi[W];
    double bo[W];
    const std::size_t rem = n - i;
    for (int j = 0; j < W; ++j)
      bi[j] = in[i + (static_cast<std::size_t>(j) < rem ? j : 0)];
    K::store(bo, F(K::load(bi)));
    for (std::size_t j = 0; j < rem; ++j) out[i + j] = bo[j];
  }
}

}  // namespace msb::kernels::detail
