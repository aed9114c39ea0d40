#include "glide2d/manipulability.hpp"

#include <cmath>

namespace glide2d {

namespace {
constexpr double kSingularRatio = 1e-15;
}

std::optional<Ellipsoid2> velocity_ellipsoid(const Mat2& J) {
  const auto [smax, smin] = singular_values(J);
  if (smax == 0.0 || smin <= kSingularRatio * smax) return std::nullopt;

  const Mat2 jjt = J * J.transpose();
  const Mat2 inv = *jjt.inverse();
  const SymEig2 e = sym_eig(inv);

  Ellipsoid2 out;
  out.gamma1 = std::sqrt(e.eig_max);
  out.gamma2 = std::sqrt(e.eig_min);
  out.axis1 = e.v_max;
  out.axis2 = e.v_min;
  return out;
}

std::optional<AmplificationFactors> amplification_factors(const Mat2& J) {
  const auto [smax, smin] = singular_values(J);
  if (smax == 0.0 || smin <= kSingularRatio * smax) return std::nullopt;
  return AmplificationFactors{smin, smax};
}

bool within_amplification_bounds(const AmplificationFactors& f, double lo, double hi) {
  return f.lambda1 > lo && f.lambda1 < hi && f.lambda2 > lo && f.lambda2 < hi;
}

AmplificationFactors force_amplification(const AmplificationFactors& f) {
  return {1.0 / f.lambda2, 1.0 / f.lambda1};
}

}  // namespace glide2d
