#pragma once

#include "msb/kernels.hpp"

namespace msb::kernels::detail {

extern const Batch kScalarBatch;

#if defined(__x86_64__) || defined(_M_X64)
#define MSB_HAVE_AVX2_BACKEND 1
extern const Batch kAvx2Batch;
#endif

#if defined(__aarch64__)
#define MSB_HAVE_NEON_BACKEND 1
extern const Batch kNeonBatch;
#endif

}  // namespace msb::kernels::detail
