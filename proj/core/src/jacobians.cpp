#include "glide2d/jacobians.hpp"

#include <algorithm>
#include <cmath>

namespace glide2d {

const char* to_string(SingularityClass s) {
  switch (s) {
    case SingularityClass::Regular: return "Regular";
    case SingularityClass::ParallelSingular: return "ParallelSingular";
    case SingularityClass::SerialSingular: return "SerialSingular";
    case SingularityClass::DoublySingular: return "DoublySingular";
    case SingularityClass::Structural: return "Structural";
  }
  return "?";
}

Mat2 matrix_A(const ManipConfig& config) {
  return Mat2::from_rows(config.p - config.c, config.p - config.d);
}

Mat2 matrix_B(const ManipConfig& config, const DesignParams& design) {
  return Mat2::diagonal(design.L1 * std::cos(config.theta1 - design.alpha1),
                        design.L2 * std::cos(config.theta2 - design.alpha2));
}

namespace {

double det_threshold(const DesignParams& design, double tol) {
  return tol * design.L1 * design.L2;
}

}  // namespace

std::optional<Mat2> kinematic_jacobian(const ManipConfig& config, const DesignParams& design,
                                       double tol) {
  const Mat2 A = matrix_A(config);
  if (std::abs(A.det()) <= det_threshold(design, tol)) return std::nullopt;
  const Mat2 B = matrix_B(config, design);
  return (*A.inverse()) * B;
}

std::optional<Mat2> inverse_kinematic_jacobian(const ManipConfig& config,
                                               const DesignParams& design, double tol) {
  const Mat2 B = matrix_B(config, design);
  if (std::abs(B.det()) <= det_threshold(design, tol)) return std::nullopt;
  return (*B.inverse()) * matrix_A(config);
}

JacobianBundle jacobian_bundle(const ManipConfig& config, const DesignParams& design,
                               double tol) {
  JacobianBundle out;
  out.A = matrix_A(config);
  out.B = matrix_B(config, design);
  out.det_a = out.A.det();
  out.det_b = out.B.det();
  const double thresh = det_threshold(design, tol);
  if (std::abs(out.det_a) > thresh) out.J = (*out.A.inverse()) * out.B;
  if (std::abs(out.det_b) > thresh) out.J_inv = (*out.B.inverse()) * out.A;
  return out;
}

SingularityClass classify_singularity(const ManipConfig& config, const DesignParams& design,
                                      double tol) {
  const double scale = std::max(design.L1, design.L2);
  if ((config.d - config.c).norm() < kStructuralTol * scale) return SingularityClass::Structural;

  const double thresh = det_threshold(design, tol);
  const bool parallel = std::abs(matrix_A(config).det()) <= thresh;
  const bool serial = std::abs(matrix_B(config, design).det()) <= thresh;
  if (parallel && serial) return SingularityClass::DoublySingular;
  if (parallel) return SingularityClass::ParallelSingular;
  if (serial) return SingularityClass::SerialSingular;
  return SingularityClass::Regular;
}

double Mat3::det() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Mat3 hybrid_jacobian_3axis(const Mat2& J) {
  Mat3 out;
  out.m[0][0] = J.a;
  out.m[0][1] = J.b;
  out.m[1][0] = J.c;
  out.m[1][1] = J.d;
  out.m[2][2] = 1.0;
  return out;
}

}  // namespace glide2d
