#pragma once

#include <span>
#include <vector>

#include "glide2d/grid.hpp"

namespace glide2d {

/// Scalar fields a contour can be extracted from. All are defined only on
/// cells that carry a report (Feasible / OutOfBounds).
enum class AtlasField { Lambda1, Lambda2, KappaA, KappaB };

const char* to_string(AtlasField f);
double field_value(const ManipReport& report, AtlasField field);

struct ContourPolyline {
  double level = 0.0;
  bool closed = false;
  std::vector<Vec2> points;  // first != last even when closed
};

/// Even-odd test; the polygon needs no explicit closing vertex.
bool point_in_polygon(Vec2 p, std::span<const Vec2> polygon);

/// Marching-squares iso-curves of `field` over the atlas cell centers, with
/// linear interpolation on mesh edges. Cells without a report (and, when a
/// mask polygon is given, centers outside it) do not contribute. Ambiguous
/// saddle cells are resolved by the mean of the four corner values. Output is
/// deterministic: levels in input order, polylines in row-major discovery
/// order.
std::vector<ContourPolyline> iso_value_curves(const GridAtlas& atlas, AtlasField field,
                                              std::span<const double> levels,
                                              std::span<const Vec2> mask_polygon = {});

}  // namespace glide2d
