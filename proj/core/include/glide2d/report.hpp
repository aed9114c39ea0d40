#pragma once

#include <optional>

#include "glide2d/conditioning.hpp"
#include "glide2d/geometry.hpp"
#include "glide2d/jacobians.hpp"
#include "glide2d/manipulability.hpp"

namespace glide2d {

/// Everything the analyses derive from one posture. Amplification factors and
/// the ellipsoid are absent when J does not exist (singular posture).
struct ManipReport {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double det_a = 0.0;
  double det_b = 0.0;
  double kappa_a = 1.0;  // condition numbers; may be +infinity
  double kappa_b = 1.0;
  double kappa_jinv = 1.0;
  double eta_max = 0.0;
  double eta_min = 0.0;
  double beta1 = 0.0;
  double beta2 = 0.0;
  SingularityClass singularity = SingularityClass::Regular;
  std::optional<IsotropyResiduals> residuals;
  std::optional<AmplificationFactors> amplification;
  std::optional<Ellipsoid2> ellipsoid;
  bool isotropic = false;
};

ManipReport make_report(const ManipConfig& config, const DesignParams& design,
                        double tol = kSingularityTol);

}  // namespace glide2d
