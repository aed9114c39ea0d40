#pragma once

#include <optional>

#include "glide2d/geometry.hpp"
#include "glide2d/jacobians.hpp"
#include "glide2d/mat2.hpp"

namespace glide2d {

/// sigma_min <= this ratio times sigma_max reports an infinite condition number.
inline constexpr double kCondInfiniteRatio = 1e-15;

/// Condition number sigma_max / sigma_min from the closed-form 2x2 SVD.
/// Returns +infinity near rank deficiency and nullopt for the zero matrix
/// (condition number undefined).
std::optional<double> condition_number_svd(const Mat2& m);

/// kappa(A) for equal bar lengths, from the half-angle closed form
/// t = 1/|tan((theta2 - theta1)/2)|, normalized to max(t, 1/t) >= 1.
/// +infinity on the parallel-singular locus theta1 - theta2 = k*pi.
double kappa_A_closed_form(double theta1, double theta2);

/// kappa(B) = beta_max / beta_min with beta_i = |cos(theta_i - alpha_i)|.
/// +infinity when either cosine vanishes.
double kappa_B_closed_form(double theta1, double theta2, double alpha1, double alpha2);

/// Residuals of the two isotropy conditions on J^-1, with c_i = cos(theta_i - alpha_i):
///   scale_residual        = ||p-c||/c1 - ||p-d||/c2   (length)
///   orthogonality_residual = (p-c) . (p-d)            (length^2)
/// Both vanish exactly when J^-1 is isotropic.
struct IsotropyResiduals {
  double scale_residual = 0.0;
  double orthogonality_residual = 0.0;
};

/// nullopt at a serial singularity (a c_i vanishes; the residuals are undefined).
std::optional<IsotropyResiduals> isotropy_conditions_jinv(const ManipConfig& config,
                                                          const DesignParams& design);

/// True iff both residuals are below tol*L1 resp. tol*L1^2.
bool is_isotropic(const ManipConfig& config, const DesignParams& design, double tol = 1e-9);

struct ConditioningReport {
  double kappa_a = 1.0;     // may be +infinity
  double kappa_b = 1.0;
  double kappa_jinv = 1.0;  // +infinity when B is singular
  double eta_max = 0.0;     // eigenvalues of A*A^T, descending
  double eta_min = 0.0;
  double beta1 = 0.0;       // singular values of B in leg order
  double beta2 = 0.0;
  std::optional<IsotropyResiduals> residuals;  // absent at serial singularities
};

ConditioningReport conditioning_report(const ManipConfig& config, const DesignParams& design);

}  // namespace glide2d
