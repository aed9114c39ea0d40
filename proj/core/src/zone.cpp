#include "glide2d/zone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace glide2d {

namespace {

// Maximal square of set cells. feasible is row-major nu x nv; returns the
// block (iu0, iv0, k) with ties broken by smallest (row, col) of the
// lower-left cell. k == 0 means no set cell.
struct SquareBlock {
  int iu0 = 0, iv0 = 0, k = 0;
};

SquareBlock max_square(const std::vector<char>& feasible, int nu, int nv) {
  std::vector<int> dp(size_t(nu) * nv, 0);
  SquareBlock best;
  for (int iv = 0; iv < nv; ++iv) {
    for (int iu = 0; iu < nu; ++iu) {
      const size_t idx = size_t(iv) * nu + iu;
      if (!feasible[idx]) continue;
      int k = 1;
      if (iu > 0 && iv > 0) {
        const int up = dp[idx - nu];
        const int left = dp[idx - 1];
        const int diag = dp[idx - nu - 1];
        k = 1 + std::min({up, left, diag});
      }
      dp[idx] = k;
      const int row0 = iv - k + 1;
      const int col0 = iu - k + 1;
      if (k > best.k || (k == best.k && (row0 < best.iv0 || (row0 == best.iv0 && col0 < best.iu0))))
        best = {col0, row0, k};
    }
  }
  return best;
}

ZoneResult zone_from_block(const SquareBlock& block, Rect bounds, double cell, double frac) {
  ZoneResult z;
  z.iu0 = block.iu0;
  z.iv0 = block.iv0;
  z.cells = block.k;
  z.rect.u0 = bounds.u0 + block.iu0 * cell;
  z.rect.v0 = bounds.v0 + block.iv0 * cell;
  z.rect.u1 = z.rect.u0 + block.k * cell;
  z.rect.v1 = z.rect.v0 + block.k * cell;
  z.side = block.k * cell;
  z.area = z.side * z.side;
  z.center = {0.5 * (z.rect.u0 + z.rect.u1), 0.5 * (z.rect.v0 + z.rect.v1)};
  z.feasible_fraction = frac;
  return z;
}

}  // namespace

Expected<ZoneResult, ZoneError> useful_zone(const GridAtlas& atlas) {
  if (atlas.space != AtlasSpace::JointSpace) return ZoneError::NotJointSpace;
  const double du = atlas.du(), dv = atlas.dv();
  if (std::abs(du - dv) > 1e-12 * std::max(du, dv)) return ZoneError::NonSquareCells;

  std::vector<char> feasible(atlas.cells.size());
  for (size_t i = 0; i < atlas.cells.size(); ++i)
    feasible[i] = atlas.cells[i].status == CellStatus::Feasible;

  const SquareBlock best = max_square(feasible, atlas.nu, atlas.nv);
  if (best.k == 0) return ZoneError::EmptyZone;
  return zone_from_block(best, atlas.bounds, du, atlas.feasible_fraction());
}

Expected<ZoneImage, FkError> map_zone_to_workspace(const DesignParams& design,
                                                   const BranchSelector& branch,
                                                   const ZoneResult& zone,
                                                   int boundary_samples_per_edge) {
  ZoneImage image;
  const int k = zone.cells;
  const double cell = zone.side / k;

  image.points.reserve(size_t(k) * k);
  for (int iv = 0; iv < k; ++iv) {
    for (int iu = 0; iu < k; ++iu) {
      const double u = zone.rect.u0 + (iu + 0.5) * cell;
      const double v = zone.rect.v0 + (iv + 0.5) * cell;
      const auto q = forward_kinematics(design, u, v, branch);
      if (!q) return q.error();
      image.points.push_back(q->p);
    }
  }

  // Perimeter, counter-clockwise from the lower-left corner; each corner once.
  const int n = std::max(1, boundary_samples_per_edge);
  std::vector<Vec2> perimeter;
  perimeter.reserve(size_t(n) * 4 + 1);
  for (int i = 0; i < n; ++i)
    perimeter.push_back({zone.rect.u0 + zone.side * i / n, zone.rect.v0});
  for (int i = 0; i < n; ++i)
    perimeter.push_back({zone.rect.u1, zone.rect.v0 + zone.side * i / n});
  for (int i = 0; i < n; ++i)
    perimeter.push_back({zone.rect.u1 - zone.side * i / n, zone.rect.v1});
  for (int i = 0; i < n; ++i)
    perimeter.push_back({zone.rect.u0, zone.rect.v1 - zone.side * i / n});

  image.boundary.reserve(perimeter.size() + 1);
  for (const Vec2 uv : perimeter) {
    const auto q = forward_kinematics(design, uv.x, uv.y, branch);
    if (!q) return q.error();
    image.boundary.push_back(q->p);
  }
  image.boundary.push_back(image.boundary.front());
  return image;
}

Expected<ZoneResult, ZoneError> inscribed_square(const ZoneImage& image, int raster_res) {
  if (image.boundary.size() < 4) return ZoneError::EmptyZone;

  double x0 = std::numeric_limits<double>::infinity(), y0 = x0;
  double x1 = -x0, y1 = -x0;
  for (const Vec2 p : image.boundary) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const double span = std::max(x1 - x0, y1 - y0);
  if (!(span > 0.0) || raster_res < 2) return ZoneError::EmptyZone;

  const double cell = span / raster_res;
  const int nx = std::max(2, int(std::ceil((x1 - x0) / cell)));
  const int ny = std::max(2, int(std::ceil((y1 - y0) / cell)));

  std::vector<char> inside(size_t(nx) * ny, 0);
  size_t count = 0;
  for (int iy = 0; iy < ny; ++iy) {
    for (int ix = 0; ix < nx; ++ix) {
      const Vec2 center{x0 + (ix + 0.5) * cell, y0 + (iy + 0.5) * cell};
      if (point_in_polygon(center, image.boundary)) {
        inside[size_t(iy) * nx + ix] = 1;
        ++count;
      }
    }
  }

  const SquareBlock best = max_square(inside, nx, ny);
  if (best.k == 0) return ZoneError::EmptyZone;
  return zone_from_block(best, Rect{x0, x0 + nx * cell, y0, y0 + ny * cell}, cell,
                         double(count) / double(size_t(nx) * ny));
}

Expected<UsefulWorkspace, PipelineError> useful_workspace_pipeline(const DesignParams& design,
                                                                   const BranchSelector& branch,
                                                                   const AtlasProtocol& protocol) {
  const Rect joint_bounds{design.rho_min, design.rho_max, design.rho_min, design.rho_max};
  const auto atlas = sample_joint_space(design, branch, joint_bounds, protocol.joint_res,
                                        protocol.joint_res, protocol.amp);
  if (!atlas) return PipelineError::InvalidBounds;

  const auto zone = useful_zone(*atlas);
  if (!zone) return PipelineError::EmptyZone;

  const auto image = map_zone_to_workspace(design, branch, *zone, protocol.boundary_samples);
  if (!image) return PipelineError::MappingFailed;

  const auto square = inscribed_square(*image, protocol.raster_res);
  if (!square) return PipelineError::EmptyZone;

  UsefulWorkspace out;
  out.joint_zone = *zone;
  out.image = *image;
  out.workspace_square = *square;
  out.feasible_fraction = zone->feasible_fraction;
  return out;
}

Expected<ComparisonReport, CompareError> compare_designs(const DesignParams& design_a,
                                                         const BranchSelector& branch_a,
                                                         const DesignParams& design_b,
                                                         const BranchSelector& branch_b,
                                                         const AtlasProtocol& protocol) {
  const double spacing_a = (design_a.a - design_a.b).norm();
  const double spacing_b = (design_b.a - design_b.b).norm();
  const double scale = std::max(spacing_a, spacing_b);
  if (std::abs(spacing_a - spacing_b) > 1e-9 * scale ||
      std::abs(design_a.L1 - design_b.L1) > 1e-9 * design_a.L1 ||
      std::abs(design_a.L2 - design_b.L2) > 1e-9 * design_a.L2)
    return CompareError{CompareError::Kind::ProtocolMismatch, PipelineError::InvalidBounds};

  const auto a = useful_workspace_pipeline(design_a, branch_a, protocol);
  if (!a) return CompareError{CompareError::Kind::PipelineFailedA, a.error()};
  const auto b = useful_workspace_pipeline(design_b, branch_b, protocol);
  if (!b) return CompareError{CompareError::Kind::PipelineFailedB, b.error()};

  ComparisonReport report;
  report.a = *a;
  report.b = *b;
  report.area_ratio = a->workspace_square.area / b->workspace_square.area;
  return report;
}

}  // namespace glide2d
