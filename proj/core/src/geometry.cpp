#include "glide2d/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace glide2d {

DesignParams normalized(DesignParams d) {
  d.alpha1 = wrap_angle(d.alpha1);
  d.alpha2 = wrap_angle(d.alpha2);
  return d;
}

std::vector<std::string> validate_design(const DesignParams& d) {
  std::vector<std::string> issues;
  if (!(d.L1 > 0.0)) issues.push_back("L1 must be > 0");
  if (!(d.L2 > 0.0)) issues.push_back("L2 must be > 0");
  if (!(d.rho_min < d.rho_max)) issues.push_back("rho_min must be < rho_max");
  if (!std::isfinite(d.alpha1) || !std::isfinite(d.alpha2))
    issues.push_back("rail angles must be finite");
  if (!std::isfinite(d.a.x) || !std::isfinite(d.a.y) || !std::isfinite(d.b.x) ||
      !std::isfinite(d.b.y))
    issues.push_back("anchor coordinates must be finite");
  return issues;
}

Expected<ManipConfig, FkError> forward_kinematics(const DesignParams& design, double rho1,
                                                  double rho2, const BranchSelector& branch) {
  const Vec2 c = design.a + rho1 * design.rail_dir(0);
  const Vec2 d = design.b + rho2 * design.rail_dir(1);
  const Vec2 e = d - c;
  const double dist = e.norm();
  const double scale = std::max(design.L1, design.L2);

  if (dist < kStructuralTol * scale) return FkError::StructuralSingularity;
  if (dist > design.L1 + design.L2 || dist < std::abs(design.L1 - design.L2))
    return FkError::NoAssembly;

  // Intersection of circles (C, L1) and (D, L2): foot of P on CD at distance t
  // from C, then offset h along the left normal of CD.
  const double t = (dist * dist + design.L1 * design.L1 - design.L2 * design.L2) / (2.0 * dist);
  double h2 = design.L1 * design.L1 - t * t;
  if (h2 < 0.0) h2 = 0.0;  // tangent case, clamp rounding residue
  const double h = std::sqrt(h2);

  const Vec2 ehat = e * (1.0 / dist);
  const Vec2 nhat = ehat.perp();
  const double side = branch.assembly_mode >= 0 ? 1.0 : -1.0;
  const Vec2 p = c + t * ehat + (side * h) * nhat;

  ManipConfig q;
  q.rho1 = rho1;
  q.rho2 = rho2;
  q.p = p;
  q.c = c;
  q.d = d;
  q.theta1 = (p - c).angle();
  q.theta2 = (p - d).angle();
  return q;
}

namespace {

struct LegRoots {
  int count = 0;
  double r[2] = {0.0, 0.0};  // ascending when count == 2
};

// Real solutions of ||p - (anchor + rho*u)|| = L in rho. A double root
// (tangency) is reported once.
LegRoots leg_roots(const DesignParams& design, int leg, Vec2 p) {
  const Vec2 u = design.rail_dir(leg);
  const Vec2 w = p - design.anchor(leg);
  const double L = design.bar_length(leg);
  const double proj = u.dot(w);
  const double disc = proj * proj - w.norm2() + L * L;
  LegRoots out;
  if (disc < 0.0) return out;
  const double sd = std::sqrt(disc);
  if (sd <= 1e-12 * L) {
    out.count = 1;
    out.r[0] = proj;
  } else {
    out.count = 2;
    out.r[0] = proj - sd;
    out.r[1] = proj + sd;
  }
  return out;
}

ManipConfig config_from_rho(const DesignParams& design, Vec2 p, double rho1, double rho2) {
  ManipConfig q;
  q.rho1 = rho1;
  q.rho2 = rho2;
  q.p = p;
  q.c = design.a + rho1 * design.rail_dir(0);
  q.d = design.b + rho2 * design.rail_dir(1);
  q.theta1 = (p - q.c).angle();
  q.theta2 = (p - q.d).angle();
  return q;
}

}  // namespace

Expected<ManipConfig, IkError> inverse_kinematics(const DesignParams& design, Vec2 p,
                                                  const BranchSelector& branch) {
  double rho[2];
  const int modes[2] = {branch.working_mode_1, branch.working_mode_2};
  for (int leg = 0; leg < 2; ++leg) {
    const LegRoots roots = leg_roots(design, leg, p);
    if (roots.count == 0) return IkError{leg, IkError::Kind::NoRealRoot};
    const double r = (roots.count == 1) ? roots.r[0]
                                        : (modes[leg] >= 0 ? roots.r[1] : roots.r[0]);
    if (r < design.rho_min || r > design.rho_max)
      return IkError{leg, IkError::Kind::StrokeViolation};
    rho[leg] = r;
  }
  return config_from_rho(design, p, rho[0], rho[1]);
}

std::vector<ManipConfig> ik_all_solutions(const DesignParams& design, Vec2 p) {
  double roots1[2], roots2[2];
  int n1 = 0, n2 = 0;
  const LegRoots l1 = leg_roots(design, 0, p);
  const LegRoots l2 = leg_roots(design, 1, p);
  for (int i = 0; i < l1.count; ++i)
    if (l1.r[i] >= design.rho_min && l1.r[i] <= design.rho_max) roots1[n1++] = l1.r[i];
  for (int i = 0; i < l2.count; ++i)
    if (l2.r[i] >= design.rho_min && l2.r[i] <= design.rho_max) roots2[n2++] = l2.r[i];

  std::vector<ManipConfig> out;
  out.reserve(static_cast<size_t>(n1) * n2);
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) out.push_back(config_from_rho(design, p, roots1[i], roots2[j]));
  return out;
}

BranchSelector consistent_branch(const ManipConfig& config, const DesignParams& design) {
  BranchSelector b;
  const double proj1 = design.rail_dir(0).dot(config.p - design.a);
  const double proj2 = design.rail_dir(1).dot(config.p - design.b);
  b.working_mode_1 = config.rho1 >= proj1 ? +1 : -1;
  b.working_mode_2 = config.rho2 >= proj2 ? +1 : -1;
  b.assembly_mode = (config.d - config.c).cross(config.p - config.c) >= 0.0 ? +1 : -1;
  return b;
}

}  // namespace glide2d
