#include <algorithm>
#include <limits>
#include <cmath>

#include "msb/gaussian.hpp"

namespace msb {

namespace {

// Gauss-Legendre rules used by the Drezner-Wesolowsky-Genz bivariate scheme.
constexpr double kW6[3] = {0.1713244923791705, 0.3607615730481384,
                           0.4679139345726904};
constexpr double kX6[3] = {-0.9324695142031522, -0.6612093864662647,
                           -0.238619186083197};
constexpr double kW12[6] = {0.04717533638651177, 0.1069393259953183,
                            0.1600783285433464,  0.2031674267230659,
                            0.2334925365383547,  0.2491470458134029};
constexpr double kX12[6] = {-0.9815606342467191, -0.904117256370475,
                            -0.769902674194305,  -0.5873179542866171,
                            -0.3678314989981802, -0.1252334085114692};
constexpr double kW20[10] = {0.01761400713915212, 0.04060142980038694,
                             0.06267204833410906, 0.08327674157670475,
                             0.1019301198172404,  0.1181945319615184,
                             0.1316886384491766,  0.1420961093183821,
                             0.1491729864726037,  0.1527533871307259};
constexpr double kX20[10] = {-0.9931285991850949, -0.9639719272779138,
                             -0.9122344282513259, -0.8391169718222188,
                             -0.7463319064601508, -0.636053680726515,
                             -0.5108670019508271, -0.3737060887154196,
                             -0.2277858511416451, -0.07652652113349733};

constexpr double kTwoPi = 6.283185307179586476925286766559;

// P(X > sh, Y > sk) for standard bivariate normal with correlation r.
double bvn_upper(double sh, double sk, double r) {
  const double* w;
  const double* x;
  int lg;
  const double ar = std::fabs(r);
  if (ar < 0.3) {
    w = kW6;
    x = kX6;
    lg = 3;
  } else if (ar < 0.75) {
    w = kW12;
    x = kX12;
    lg = 6;
  } else {
    w = kW20;
    x = kX20;
    lg = 10;
  }
  double h = sh;
  double k = sk;
  double hk = h * k;
  double bvn = 0.0;
  if (ar < 0.925) {
    const double hs = (h * h + k * k) / 2;
    const double asr = std::asin(r);
    for (int i = 0; i < lg; ++i) {
      double sn = std::sin(asr * (x[i] + 1) / 2);
      bvn += w[i] * std::exp((sn * hk - hs) / (1 - sn * sn));
      sn = std::sin(asr * (-x[i] + 1) / 2);
      bvn += w[i] * std::exp((sn * hk - hs) / (1 - sn * sn));
    }
    bvn = bvn * asr / (2 * kTwoPi) + std_normal_cdf(-h) * std_normal_cdf(-k);
  } else {
    if (r < 0) {
      k = -k;
      hk = -hk;
    }
    if (ar < 1) {
      const double as = (1 - r) * (1 + r);
      double a = std::sqrt(as);
      const double bs = (h - k) * (h - k);
      const double c = (4 - hk) / 8;
      const double d = (12 - hk) / 16;
      bvn = a * std::exp(-(bs / as + hk) / 2) *
            (1 - c * (bs - as) * (1 - d * bs / 5) / 3 + c * d * as * as / 5);
      if (hk > -160.0) {
        const double b = std::sqrt(bs);
        bvn -= std::exp(-hk / 2) * std::sqrt(kTwoPi) * std_normal_cdf(-b / a) *
               b * (1 - c * bs * (1 - d * bs / 5) / 3);
      }
      a /= 2;
      for (int i = 0; i < lg; ++i) {
        double xs = a * (x[i] + 1);
        xs *= xs;
        double rs = std::sqrt(1 - xs);
        bvn += a * w[i] *
               (std::exp(-bs / (xs * 2) - hk / (rs + 1)) / rs -
                std::exp(-(bs / xs + hk) / 2) * (c * xs * (d * xs + 1) + 1));
        xs = as * (1 - x[i]) * (1 - x[i]) / 4;
        rs = std::sqrt(1 - xs);
        bvn += a * w[i] * std::exp(-(bs / xs + hk) / 2) *
               (std::exp(-hk * xs / (2 * (rs + 1) * (rs + 1))) / rs -
                (c * xs * (d * xs + 1) + 1));
      }
      bvn = -bvn / kTwoPi;
    }
    if (r > 0) {
      bvn += std_normal_cdf(-std::max(h, k));
    } else {
      bvn = -bvn;
      if (k > h) {
        if (h < 0)
          bvn += std_normal_cdf(k) - std_normal_cdf(h);
        else
          bvn += std_normal_cdf(-h) - std_normal_cdf(-k);
      }
    }
  }
  return bvn;
}

}  // namespace

double bvn_cdf(double a, double b, double rho) {
  if (std::isnan(a) || std::isnan(b)) return std::numeric_limits<double>::quiet_NaN();
  rho = std::clamp(rho, -1.0, 1.0);
  if (std::isinf(a) || std::isinf(b)) {
    if (a == -std::numeric_limits<double>::infinity() ||
        b == -std::numeric_limits<double>::infinity())
      return 0.0;
    if (std::isinf(a) && std::isinf(b)) return 1.0;
    return std::isinf(a) ? std_normal_cdf(b) : std_normal_cdf(a);
  }
  const double v = bvn_upper(-a, -b, rho);
  return std::clamp(v, 0.0, 1.0);
}

}  // namespace msb
