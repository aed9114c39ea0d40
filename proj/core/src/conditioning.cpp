#include "glide2d/conditioning.hpp"

#include <cmath>
#include <limits>

namespace glide2d {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::optional<double> condition_number_svd(const Mat2& m) {
  const auto [smax, smin] = singular_values(m);
  if (smax == 0.0) return std::nullopt;
  if (smin <= kCondInfiniteRatio * smax) return kInf;
  return smax / smin;
}

double kappa_A_closed_form(double theta1, double theta2) {
  const double half = 0.5 * wrap_angle(theta2 - theta1);
  const double s = std::abs(std::sin(half));
  const double c = std::abs(std::cos(half));
  if (s <= 1e-15 || c <= 1e-15) return kInf;
  const double t = c / s;
  return t >= 1.0 ? t : 1.0 / t;
}

double kappa_B_closed_form(double theta1, double theta2, double alpha1, double alpha2) {
  const double b1 = std::abs(std::cos(theta1 - alpha1));
  const double b2 = std::abs(std::cos(theta2 - alpha2));
  if (b1 <= 1e-15 || b2 <= 1e-15) return kInf;
  return b1 >= b2 ? b1 / b2 : b2 / b1;
}

std::optional<IsotropyResiduals> isotropy_conditions_jinv(const ManipConfig& config,
                                                          const DesignParams& design) {
  const double c1 = std::cos(config.theta1 - design.alpha1);
  const double c2 = std::cos(config.theta2 - design.alpha2);
  if (std::abs(c1) <= 1e-15 || std::abs(c2) <= 1e-15) return std::nullopt;
  IsotropyResiduals r;
  r.scale_residual = (config.p - config.c).norm() / c1 - (config.p - config.d).norm() / c2;
  r.orthogonality_residual = (config.p - config.c).dot(config.p - config.d);
  return r;
}

bool is_isotropic(const ManipConfig& config, const DesignParams& design, double tol) {
  const auto r = isotropy_conditions_jinv(config, design);
  if (!r) return false;
  return std::abs(r->scale_residual) < tol * design.L1 &&
         std::abs(r->orthogonality_residual) < tol * design.L1 * design.L1;
}

ConditioningReport conditioning_report(const ManipConfig& config, const DesignParams& design) {
  ConditioningReport out;
  const Mat2 A = matrix_A(config);
  const Mat2 B = matrix_B(config, design);

  const SymEig2 aat = sym_eig(A * A.transpose());
  out.eta_max = aat.eig_max;
  out.eta_min = aat.eig_min;
  out.beta1 = std::abs(B.a);
  out.beta2 = std::abs(B.d);

  out.kappa_a = condition_number_svd(A).value_or(kInf);
  out.kappa_b = condition_number_svd(B).value_or(kInf);
  const auto jinv = inverse_kinematic_jacobian(config, design);
  out.kappa_jinv = jinv ? condition_number_svd(*jinv).value_or(kInf) : kInf;
  out.residuals = isotropy_conditions_jinv(config, design);
  return out;
}

}  // namespace glide2d
