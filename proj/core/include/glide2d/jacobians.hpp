#pragma once

#include <optional>

#include "glide2d/geometry.hpp"
#include "glide2d/mat2.hpp"

namespace glide2d {

/// Relative determinant threshold: |det| <= tol * L1 * L2 counts as singular.
inline constexpr double kSingularityTol = 1e-9;

enum class SingularityClass {
  Regular,
  ParallelSingular,  // rank loss of A: C, D, P aligned
  SerialSingular,    // rank loss of B: a bar perpendicular to its rail
  DoublySingular,
  Structural,  // coincident elbows
};

const char* to_string(SingularityClass s);

/// Velocity-model matrices for one posture: A p_dot = B rho_dot.
/// J and J_inv are absent when the corresponding determinant vanishes
/// within tolerance, so callers must handle singular postures explicitly.
struct JacobianBundle {
  Mat2 A;
  Mat2 B;
  double det_a = 0.0;
  double det_b = 0.0;
  std::optional<Mat2> J;      // A^-1 B, maps rho_dot to p_dot
  std::optional<Mat2> J_inv;  // B^-1 A, maps p_dot to rho_dot
};

/// Parallel Jacobian: rows (p-c)^T and (p-d)^T. det = L1*L2*sin(theta2-theta1).
Mat2 matrix_A(const ManipConfig& config);

/// Serial Jacobian: diag(L1*cos(theta1-alpha1), L2*cos(theta2-alpha2)).
Mat2 matrix_B(const ManipConfig& config, const DesignParams& design);

std::optional<Mat2> kinematic_jacobian(const ManipConfig& config, const DesignParams& design,
                                       double tol = kSingularityTol);
std::optional<Mat2> inverse_kinematic_jacobian(const ManipConfig& config,
                                               const DesignParams& design,
                                               double tol = kSingularityTol);

JacobianBundle jacobian_bundle(const ManipConfig& config, const DesignParams& design,
                               double tol = kSingularityTol);

/// Structural dominates; then Parallel / Serial / Doubly by which determinants
/// vanish within tol * L1 * L2; otherwise Regular.
SingularityClass classify_singularity(const ManipConfig& config, const DesignParams& design,
                                      double tol = kSingularityTol);

struct Mat3 {
  double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
  double det() const;
};

/// Embeds the planar Jacobian into the 3-axis machine model with a decoupled
/// vertical prismatic axis: block-diagonal [[J, 0], [0, 1]].
Mat3 hybrid_jacobian_3axis(const Mat2& J);

}  // namespace glide2d
