#pragma once

#include <vector>

#include "glide2d/contour.hpp"
#include "glide2d/expected.hpp"
#include "glide2d/grid.hpp"

namespace glide2d {

/// Largest axis-aligned square of Feasible cells, both as a geometric square
/// and as the cell block it covers.
struct ZoneResult {
  Rect rect;
  Vec2 center;
  double side = 0.0;
  double area = 0.0;
  double feasible_fraction = 0.0;  // of the source grid
  int iu0 = 0;                     // lower-left cell of the block
  int iv0 = 0;
  int cells = 0;                   // block is cells x cells
};

enum class ZoneError { EmptyZone, NotJointSpace, NonSquareCells };

/// Dynamic-programming maximal-square search over the binary feasibility
/// grid. Ties break to the smallest (row, col) of the square's lower-left
/// cell. Requires a joint-space atlas with square cells.
Expected<ZoneResult, ZoneError> useful_zone(const GridAtlas& atlas);

/// Forward-kinematics image of a joint-space zone: one point per covered cell
/// center plus the ordered image of the square's perimeter (closed polyline,
/// first == last).
struct ZoneImage {
  std::vector<Vec2> points;
  std::vector<Vec2> boundary;
};

Expected<ZoneImage, FkError> map_zone_to_workspace(const DesignParams& design,
                                                   const BranchSelector& branch,
                                                   const ZoneResult& zone,
                                                   int boundary_samples_per_edge = 64);

/// Largest axis-aligned square inside the image region: rasterizes the
/// region's boundary polygon onto a square-cell grid (about raster_res cells
/// across the larger bounding-box side) and reuses the maximal-square search.
Expected<ZoneResult, ZoneError> inscribed_square(const ZoneImage& image, int raster_res = 201);

/// Shared protocol for the joint-atlas -> zone -> image -> inscribed-square
/// pipeline. Joint bounds are the full stroke square of each design.
struct AtlasProtocol {
  int joint_res = 201;
  AmplificationBounds amp;
  int boundary_samples = 64;
  int raster_res = 201;
};

struct UsefulWorkspace {
  ZoneResult joint_zone;
  ZoneImage image;
  ZoneResult workspace_square;
  double feasible_fraction = 0.0;
};

enum class PipelineError { InvalidBounds, EmptyZone, MappingFailed };

Expected<UsefulWorkspace, PipelineError> useful_workspace_pipeline(const DesignParams& design,
                                                                   const BranchSelector& branch,
                                                                   const AtlasProtocol& protocol);

struct ComparisonReport {
  UsefulWorkspace a;
  UsefulWorkspace b;
  double area_ratio = 0.0;  // inscribed workspace-square areas, a / b
};

struct CompareError {
  enum class Kind { ProtocolMismatch, PipelineFailedA, PipelineFailedB };
  Kind kind = Kind::ProtocolMismatch;
  PipelineError detail = PipelineError::EmptyZone;
};

/// Runs the pipeline for both designs and reports the inscribed-square area
/// ratio. Preconditions checked: equal anchor spacing ||a-b|| and equal bar
/// lengths (the shared comparison protocol).
Expected<ComparisonReport, CompareError> compare_designs(const DesignParams& design_a,
                                                         const BranchSelector& branch_a,
                                                         const DesignParams& design_b,
                                                         const BranchSelector& branch_b,
                                                         const AtlasProtocol& protocol);

}  // namespace glide2d
