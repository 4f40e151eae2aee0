#include "backends.hpp"

#if defined(MSB_HAVE_NEON_BACKEND)

#include "kernel_impl.hpp"
#include "neon_ops.hpp"

namespace msb::kernels::detail {

namespace {
using K = NeonOps;

void cdf_n(const double* in, double* out, std::size_t n) {
  map_array<K, norm_cdf_impl<K>>(in, out, n);
}
void ppf_n(const double* in, double* out, std::size_t n) {
  map_array<K, norm_ppf_impl<K>>(in, out, n);
}
void exp_n(const double* in, double* out, std::size_t n) {
  map_array<K, exp_impl<K>>(in, out, n);
}
void log_n(const double* in, double* out, std::size_t n) {
  map_array<K, log_impl<K>>(in, out, n);
}
}  // namespace

const Batch kNeonBatch = {cdf_n, ppf_n, exp_n, log_n, "neon"};

}  // namespace msb::kernels::detail

#endif
