#include "glide2d/report.hpp"

namespace glide2d {

ManipReport make_report(const ManipConfig& config, const DesignParams& design, double tol) {
  ManipReport out;
  out.theta1 = config.theta1;
  out.theta2 = config.theta2;

  const JacobianBundle bundle = jacobian_bundle(config, design, tol);
  out.det_a = bundle.det_a;
  out.det_b = bundle.det_b;

  const ConditioningReport cond = conditioning_report(config, design);
  out.kappa_a = cond.kappa_a;
  out.kappa_b = cond.kappa_b;
  out.kappa_jinv = cond.kappa_jinv;
  out.eta_max = cond.eta_max;
  out.eta_min = cond.eta_min;
  out.beta1 = cond.beta1;
  out.beta2 = cond.beta2;
  out.residuals = cond.residuals;

  out.singularity = classify_singularity(config, design, tol);
  if (bundle.J) {
    out.amplification = amplification_factors(*bundle.J);
    out.ellipsoid = velocity_ellipsoid(*bundle.J);
  }
  out.isotropic = is_isotropic(config, design);
  return out;
}

}  // namespace glide2d
