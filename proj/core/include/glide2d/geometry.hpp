#pragma once

#include <string>
#include <vector>

#include "glide2d/expected.hpp"
#include "glide2d/mat2.hpp"

namespace glide2d {

/// Coincident-elbow detection threshold, relative to max(L1, L2).
inline constexpr double kStructuralTol = 1e-9;

/// Full geometric definition of one mechanism.
///
/// Two prismatic actuators ride rails anchored at `a` and `b`, oriented at
/// `alpha1` / `alpha2` from the horizontal. The slider positions (elbows) are
/// C = a + rho1*u(alpha1) and D = b + rho2*u(alpha2); rigid bars of lengths
/// L1 and L2 connect the elbows to the common end point P.
struct DesignParams {
  Vec2 a{0.0, 0.0};
  Vec2 b{0.0, 0.0};
  double alpha1 = 0.0;  // radians, in (-pi, pi]
  double alpha2 = 0.0;
  double L1 = 1.0;
  double L2 = 1.0;
  double rho_min = 0.0;
  double rho_max = 4.0;

  Vec2 anchor(int leg) const { return leg == 0 ? a : b; }
  double rail_angle(int leg) const { return leg == 0 ? alpha1 : alpha2; }
  Vec2 rail_dir(int leg) const { return unit_vector(rail_angle(leg)); }
  double bar_length(int leg) const { return leg == 0 ? L1 : L2; }

  /// Default stroke span used when a config file omits the limits.
  static double default_rho_max(double L1, double L2) { return 4.0 * (L1 > L2 ? L1 : L2); }
};

/// Returns a copy with both rail angles wrapped into (-pi, pi].
DesignParams normalized(DesignParams d);

/// Human-readable invariant violations; empty means the design is valid.
std::vector<std::string> validate_design(const DesignParams& d);

/// Discrete posture selectors. Working modes pick the inverse-kinematics root
/// per leg (+1 the larger rho root, -1 the smaller); the assembly mode picks
/// the forward-kinematics circle-intersection root as the sign of the
/// perpendicular offset of P from the elbow segment CD.
struct BranchSelector {
  int working_mode_1 = -1;
  int working_mode_2 = -1;
  int assembly_mode = +1;
};

/// One resolved posture.
struct ManipConfig {
  double rho1 = 0.0;
  double rho2 = 0.0;
  Vec2 p{0.0, 0.0};
  Vec2 c{0.0, 0.0};
  Vec2 d{0.0, 0.0};
  double theta1 = 0.0;  // orientation of bar CP vs horizontal
  double theta2 = 0.0;  // orientation of bar DP vs horizontal
};

enum class FkError {
  NoAssembly,             // elbow circles do not intersect
  StructuralSingularity,  // coincident elbows, P undetermined
};

struct IkError {
  enum class Kind { NoRealRoot, StrokeViolation };
  int leg = 0;  // 0-based failing leg
  Kind kind = Kind::NoRealRoot;
};

/// Closes the loop for given strokes by intersecting the two elbow circles
/// (centers C, D; radii L1, L2) and picking the root selected by
/// branch.assembly_mode. Stroke limits are a caller precondition.
Expected<ManipConfig, FkError> forward_kinematics(const DesignParams& design, double rho1,
                                                  double rho2, const BranchSelector& branch);

/// Solves the per-leg quadratic in rho_i from ||p - (anchor + rho_i*u_i)|| = L_i
/// and picks the root selected by the leg's working mode. Fails with the leg
/// index when a leg has no real root or the selected root leaves the strokes.
Expected<ManipConfig, IkError> inverse_kinematics(const DesignParams& design, Vec2 p,
                                                  const BranchSelector& branch);

/// All stroke-feasible working-mode combinations for a point, at most four.
/// Ordering is deterministic: leg-1 root ascending major, leg-2 minor.
/// Tangent (double) roots are emitted once. Empty means unreachable.
std::vector<ManipConfig> ik_all_solutions(const DesignParams& design, Vec2 p);

/// Branch selector that reproduces `config` through both kinematic maps.
BranchSelector consistent_branch(const ManipConfig& config, const DesignParams& design);

}  // namespace glide2d
