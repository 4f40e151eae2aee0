#include "msb/gaussian.hpp"
#include "msb/kernels.hpp"

namespace msb {

double std_normal_cdf(double z) { return kernels::norm_cdf(z); }

double std_normal_pdf(double z) { return kernels::norm_pdf(z); }

double std_normal_inv_cdf(double p) { return kernels::norm_ppf(p); }

}  // namespace msb
