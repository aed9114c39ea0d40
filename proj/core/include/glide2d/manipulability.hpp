#pragma once

#include <optional>

#include "glide2d/mat2.hpp"

namespace glide2d {

/// Image of the unit actuator-velocity ball under J, described through
/// (J J^T)^-1: the set { p_dot : p_dot^T (J J^T)^-1 p_dot <= 1 }.
///
/// gamma_i are the square roots of the eigenvalues of (J J^T)^-1, sorted
/// descending; axis_i the matching orthonormal eigenvectors. The geometric
/// extent of the ellipse along axis_i is 1/gamma_i.
struct Ellipsoid2 {
  double gamma1 = 1.0;  // gamma1 >= gamma2 > 0
  double gamma2 = 1.0;
  Vec2 axis1{1.0, 0.0};
  Vec2 axis2{0.0, 1.0};
};

/// Velocity amplification factors actuator -> effector: lambda_i = 1/gamma_i,
/// sorted ascending. They equal the singular values of J.
struct AmplificationFactors {
  double lambda1 = 1.0;  // lambda1 <= lambda2
  double lambda2 = 1.0;
};

/// Strict design constraint on both amplification factors.
struct AmplificationBounds {
  double lo = 1.0 / 3.0;
  double hi = 3.0;
};

/// nullopt when J is singular within tolerance (sigma_min <= 1e-15 sigma_max).
std::optional<Ellipsoid2> velocity_ellipsoid(const Mat2& J);

std::optional<AmplificationFactors> amplification_factors(const Mat2& J);

bool within_amplification_bounds(const AmplificationFactors& f, double lo = 1.0 / 3.0,
                                 double hi = 3.0);
inline bool within_amplification_bounds(const AmplificationFactors& f,
                                        const AmplificationBounds& b) {
  return within_amplification_bounds(f, b.lo, b.hi);
}

/// Force-side amplification factors (reciprocals), sorted ascending.
AmplificationFactors force_amplification(const AmplificationFactors& f);

}  // namespace glide2d
