#pragma once

#include <optional>
#include <vector>

#include "glide2d/expected.hpp"
#include "glide2d/geometry.hpp"
#include "glide2d/manipulability.hpp"
#include "glide2d/report.hpp"

namespace glide2d {

enum class AtlasSpace { JointSpace, Workspace };

enum class CellStatus {
  Feasible,         // loop closes, regular, amplification within bounds
  NoClosure,        // forward/inverse kinematics has no solution here
  Singular,         // structural, parallel or serial within tolerance
  OutOfBounds,      // regular but an amplification factor violates the bounds
  StrokeViolation,  // workspace only: selected root leaves the stroke limits
};

const char* to_string(CellStatus s);

struct Rect {
  double u0 = 0.0, u1 = 0.0;
  double v0 = 0.0, v1 = 0.0;
  double width() const { return u1 - u0; }
  double height() const { return v1 - v0; }
};

/// One grid cell, sampled at its center. The report is present exactly for
/// Feasible and OutOfBounds cells.
struct CellRecord {
  Vec2 coords;
  CellStatus status = CellStatus::NoClosure;
  std::optional<ManipReport> report;
};

/// Rectangular discretization of joint space (u,v = rho1,rho2) or workspace
/// (u,v = x,y). Cells are stored row-major: index = iv * nu + iu.
struct GridAtlas {
  AtlasSpace space = AtlasSpace::JointSpace;
  Rect bounds;
  int nu = 0;
  int nv = 0;
  BranchSelector branch;
  AmplificationBounds amp_bounds;
  std::vector<CellRecord> cells;

  double du() const { return bounds.width() / nu; }
  double dv() const { return bounds.height() / nv; }
  Vec2 cell_center(int iu, int iv) const {
    return {bounds.u0 + (iu + 0.5) * du(), bounds.v0 + (iv + 0.5) * dv()};
  }
  const CellRecord& at(int iu, int iv) const { return cells[size_t(iv) * nu + iu]; }
  double feasible_fraction() const;
};

enum class AtlasError { InvalidBounds };

/// Samples the joint-space rectangle with nu x nv cell centers: runs forward
/// kinematics per cell, classifies, and applies the amplification bounds.
/// Bounds must be nondegenerate, lie within the stroke limits, and nu,nv >= 2.
Expected<GridAtlas, AtlasError> sample_joint_space(const DesignParams& design,
                                                   const BranchSelector& branch, Rect bounds,
                                                   int nu, int nv,
                                                   AmplificationBounds amp = {});

/// Same per-cell pipeline backed by inverse kinematics; additionally reports
/// StrokeViolation where the selected roots leave [rho_min, rho_max].
Expected<GridAtlas, AtlasError> sample_workspace(const DesignParams& design,
                                                 const BranchSelector& branch, Rect bounds,
                                                 int nu, int nv,
                                                 AmplificationBounds amp = {});

}  // namespace glide2d
