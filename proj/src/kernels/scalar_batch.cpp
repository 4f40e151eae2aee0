#include <cmath>

#include "backends.hpp"
#include "kernel_impl.hpp"
#include "scalar_ops.hpp"

namespace msb::kernels {
namespace detail {

namespace {
using K = ScalarOps;

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

const Batch kScalarBatch = {cdf_n, ppf_n, exp_n, log_n, "scalar"};

}  // namespace detail

double norm_cdf(double z) {
  return detail::norm_cdf_impl<detail::ScalarOps>(z);
}

double norm_ppf(double p) {
  return detail::norm_ppf_impl<detail::ScalarOps>(p);
}

double norm_pdf(double z) {
  return 0.39894228040143267794 * std::exp(-0.5 * z * z);
}

}  // namespace msb::kernels
