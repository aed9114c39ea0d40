#include "glide2d/grid.hpp"

#include <cmath>

namespace glide2d {

const char* to_string(CellStatus s) {
  switch (s) {
    case CellStatus::Feasible: return "Feasible";
    case CellStatus::NoClosure: return "NoClosure";
    case CellStatus::Singular: return "Singular";
    case CellStatus::OutOfBounds: return "OutOfBounds";
    case CellStatus::StrokeViolation: return "StrokeViolation";
  }
  return "?";
}

double GridAtlas::feasible_fraction() const {
  if (cells.empty()) return 0.0;
  size_t n = 0;
  for (const CellRecord& cell : cells)
    if (cell.status == CellStatus::Feasible) ++n;
  return double(n) / double(cells.size());
}

namespace {

bool valid_grid(Rect bounds, int nu, int nv) {
  return nu >= 2 && nv >= 2 && bounds.width() > 0.0 && bounds.height() > 0.0 &&
         std::isfinite(bounds.u0) && std::isfinite(bounds.u1) && std::isfinite(bounds.v0) &&
         std::isfinite(bounds.v1);
}

// Classification shared by both samplers once a posture exists.
void fill_from_config(CellRecord& cell, const ManipConfig& q, const DesignParams& design,
                      AmplificationBounds amp) {
  ManipReport report = make_report(q, design);
  if (report.singularity != SingularityClass::Regular || !report.amplification) {
    cell.status = CellStatus::Singular;
    return;
  }
  const bool ok = within_amplification_bounds(*report.amplification, amp);
  cell.status = ok ? CellStatus::Feasible : CellStatus::OutOfBounds;
  cell.report = std::move(report);
}

GridAtlas make_atlas(AtlasSpace space, Rect bounds, int nu, int nv, const BranchSelector& branch,
                     AmplificationBounds amp) {
  GridAtlas atlas;
  atlas.space = space;
  atlas.bounds = bounds;
  atlas.nu = nu;
  atlas.nv = nv;
  atlas.branch = branch;
  atlas.amp_bounds = amp;
  atlas.cells.resize(size_t(nu) * nv);
  return atlas;
}

}  // namespace

Expected<GridAtlas, AtlasError> sample_joint_space(const DesignParams& design,
                                                   const BranchSelector& branch, Rect bounds,
                                                   int nu, int nv, AmplificationBounds amp) {
  if (!valid_grid(bounds, nu, nv) || bounds.u0 < design.rho_min || bounds.u1 > design.rho_max ||
      bounds.v0 < design.rho_min || bounds.v1 > design.rho_max)
    return AtlasError::InvalidBounds;

  GridAtlas atlas = make_atlas(AtlasSpace::JointSpace, bounds, nu, nv, branch, amp);
  for (int iv = 0; iv < nv; ++iv) {
    for (int iu = 0; iu < nu; ++iu) {
      CellRecord& cell = atlas.cells[size_t(iv) * nu + iu];
      cell.coords = atlas.cell_center(iu, iv);
      const auto q = forward_kinematics(design, cell.coords.x, cell.coords.y, branch);
      if (!q) {
        cell.status = q.error() == FkError::NoAssembly ? CellStatus::NoClosure
                                                       : CellStatus::Singular;
        continue;
      }
      fill_from_config(cell, *q, design, amp);
    }
  }
  return atlas;
}

Expected<GridAtlas, AtlasError> sample_workspace(const DesignParams& design,
                                                 const BranchSelector& branch, Rect bounds,
                                                 int nu, int nv, AmplificationBounds amp) {
  if (!valid_grid(bounds, nu, nv)) return AtlasError::InvalidBounds;

  GridAtlas atlas = make_atlas(AtlasSpace::Workspace, bounds, nu, nv, branch, amp);
  for (int iv = 0; iv < nv; ++iv) {
    for (int iu = 0; iu < nu; ++iu) {
      CellRecord& cell = atlas.cells[size_t(iv) * nu + iu];
      cell.coords = atlas.cell_center(iu, iv);
      const auto q = inverse_kinematics(design, cell.coords, branch);
      if (!q) {
        cell.status = q.error().kind == IkError::Kind::NoRealRoot ? CellStatus::NoClosure
                                                                  : CellStatus::StrokeViolation;
        continue;
      }
      fill_from_config(cell, *q, design, amp);
    }
  }
  return atlas;
}

}  // namespace glide2d
