#include "msb/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "backends.hpp"

namespace msb::kernels {

using detail::kScalarBatch;

bool available(Backend backend) {
  switch (backend) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(MSB_HAVE_AVX2_BACKEND)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::neon:
#if defined(MSB_HAVE_NEON_BACKEND)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const Batch& get(Backend backend) {
  switch (backend) {
#if defined(MSB_HAVE_AVX2_BACKEND)
    case Backend::avx2:
      return detail::kAvx2Batch;
#endif
#if defined(MSB_HAVE_NEON_BACKEND)
    case Backend::neon:
      return detail::kNeonBatch;
#endif
    default:
      return kScalarBatch;
  }
}

namespace {

Backend resolve_backend() {
  if (const char* env = std::getenv("MSB_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Backend::scalar;
    if (std::strcmp(env, "avx2") == 0 && available(Backend::avx2))
      return Backend::avx2;
    if (std::strcmp(env, "neon") == 0 && available(Backend::neon))
      return Backend::neon;
    // unknown value or unavailable backend: fall through to auto
  }
  if (available(Backend::avx2)) return Backend::avx2;
  if (available(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

}  // namespace

Backend active_backend() {
  static const Backend backend = resolve_backend();
  return backend;
}

const Batch& active() { return get(active_backend()); }

}  // namespace msb::kernels
