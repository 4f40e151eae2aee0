#pragma once

#include <cstdint>
#include <vector>

namespace msb {

inline constexpr std::uint64_t kDefaultSeed = 20240901;
inline constexpr double kDefaultMvnTarget = 1e-7;

/// Orthant problem P(Z_i <= b_i) under a zero-mean correlation matrix.
/// Entries of b may be +infinity (coordinate drops out) or -infinity
/// (probability is zero).
struct MvnProblem {
  int n = 0;
  std::vector<double> b;     // upper limits, size n
  std::vector<double> corr;  // row-major n*n, unit diagonal
};

struct CdfEstimate {
  double value = 0.0;        // clamped to [0, 1]
  double error_bound = 0.0;  // ~3.5 sigma across lattice randomizations
  std::int64_t evaluations = 0;
};

double std_normal_cdf(double z);
double std_normal_pdf(double z);
double std_normal_inv_cdf(double p);

/// P(Z1 <= a, Z2 <= b) with correlation rho, |rho| <= 1.
double bvn_cdf(double a, double b, double rho);

/// Trivariate CDF; r21, r31, r32 are the pairwise correlations.
double tvn_cdf(double b1, double b2, double b3, double r21, double r31,
               double r32);

/// Dimensions 1-3 use the closed-form/quadrature routines above; higher
/// dimensions integrate the separated conditional form over a randomized
/// Korobov lattice until the error estimate meets target_abs_error.
CdfEstimate mvn_cdf(const MvnProblem& p, double target_abs_error = kDefaultMvnTarget,
                    std::uint64_t seed = kDefaultSeed);

}  // namespace msb
