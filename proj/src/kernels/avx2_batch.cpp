#include "backends.hpp"

#if defined(MSB_HAVE_AVX2_BACKEND)

#include "avx2_ops.hpp"
#include "kernel_impl.hpp"

namespace msb::kernels::detail {

namespace {
using K = Avx2Ops;

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

const Batch kAvx2Batch = {cdf_n, ppf_n, exp_n, log_n, "avx2"};

}  // namespace msb::kernels::detail

#endif
