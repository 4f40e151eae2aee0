#pragma once

#include <cstddef>
#include <cstdint>

namespace msb::kernels {

// Batched double-precision math used by the integration and simulation inner
// loops. Each function writes out[i] = f(in[i]) for i < n. Backends implement
// the same polynomial algorithms, so scalar and SIMD results agree to the
// last few ulps and are individually deterministic.
struct Batch {
  void (*norm_cdf)(const double* z, double* out, std::size_t n);
  void (*norm_ppf)(const double* p, double* out, std::size_t n);
  void (*exp)(const double* x, double* out, std::size_t n);
  void (*log)(const double* x, double* out, std::size_t n);
  const char* name;
};

enum class Backend { scalar, avx2, neon };

bool available(Backend backend);
const Batch& get(Backend backend);

// Active backend: best available unless overridden by MSB_SIMD
// (scalar | avx2 | neon | auto). Resolved once per process.
const Batch& active();
Backend active_backend();

// Scalar entry points (same algorithm as the batched scalar backend).
double norm_cdf(double z);
double norm_pdf(double z);
double norm_ppf(double p);

}  // namespace msb::kernels
