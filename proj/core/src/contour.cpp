#include "glide2d/contour.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace glide2d {

const char* to_string(AtlasField f) {
  switch (f) {
    case AtlasField::Lambda1: return "lambda1";
    case AtlasField::Lambda2: return "lambda2";
    case AtlasField::KappaA: return "kappaA";
    case AtlasField::KappaB: return "kappaB";
  }
  return "?";
}

double field_value(const ManipReport& report, AtlasField field) {
  switch (field) {
    case AtlasField::Lambda1: return report.amplification ? report.amplification->lambda1 : 0.0;
    case AtlasField::Lambda2: return report.amplification ? report.amplification->lambda2 : 0.0;
    case AtlasField::KappaA: return report.kappa_a;
    case AtlasField::KappaB: return report.kappa_b;
  }
  return 0.0;
}

bool point_in_polygon(Vec2 p, std::span<const Vec2> polygon) {
  bool inside = false;
  const size_t n = polygon.size();
  for (size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 pi = polygon[i];
    const Vec2 pj = polygon[j];
    if ((pi.y > p.y) != (pj.y > p.y)) {
      const double x_cross = pi.x + (p.y - pi.y) * (pj.x - pi.x) / (pj.y - pi.y);
      if (p.x < x_cross) inside = !inside;
    }
  }
  return inside;
}

namespace {

// The atlas cell centers form the node mesh; a mesh cell spans nodes
// (i,j)..(i+1,j+1). Contour vertices live on mesh edges, keyed so that both
// adjacent cells produce bit-identical vertices and stitching is exact.
// Horizontal edge (i,j)-(i+1,j): key = 2*(j*nu+i); vertical (i,j)-(i,j+1): +1.

struct Segment {
  uint64_t e0, e1;
};

struct LevelExtractor {
  const GridAtlas& atlas;
  const std::vector<double>& value;
  const std::vector<char>& ok;
  double level;
  std::unordered_map<uint64_t, Vec2> verts;
  std::vector<Segment> segs;

  uint64_t hkey(int i, int j) const { return (uint64_t(j) * atlas.nu + i) * 2; }
  uint64_t vkey(int i, int j) const { return (uint64_t(j) * atlas.nu + i) * 2 + 1; }

  Vec2 node(int i, int j) const { return atlas.cell_center(i, j); }
  double val(int i, int j) const { return value[size_t(j) * atlas.nu + i]; }

  void vertex_on(uint64_t key, int i0, int j0, int i1, int j1) {
    if (verts.count(key)) return;
    const double v0 = val(i0, j0), v1 = val(i1, j1);
    const double t = (level - v0) / (v1 - v0);
    const Vec2 p0 = node(i0, j0), p1 = node(i1, j1);
    verts.emplace(key, p0 + t * (p1 - p0));
  }

  void run() {
    const int nu = atlas.nu, nv = atlas.nv;
    for (int j = 0; j + 1 < nv; ++j) {
      for (int i = 0; i + 1 < nu; ++i) {
        if (!(ok[size_t(j) * nu + i] && ok[size_t(j) * nu + i + 1] &&
              ok[size_t(j + 1) * nu + i] && ok[size_t(j + 1) * nu + i + 1]))
          continue;
        const double v00 = val(i, j), v10 = val(i + 1, j);
        const double v11 = val(i + 1, j + 1), v01 = val(i, j + 1);
        const int mask = (v00 >= level ? 1 : 0) | (v10 >= level ? 2 : 0) |
                         (v11 >= level ? 4 : 0) | (v01 >= level ? 8 : 0);
        if (mask == 0 || mask == 15) continue;

        const uint64_t B = hkey(i, j), T = hkey(i, j + 1);
        const uint64_t L = vkey(i, j), R = vkey(i + 1, j);
        auto add = [&](uint64_t a, uint64_t b) {
          if (a == B || b == B) vertex_on(B, i, j, i + 1, j);
          if (a == T || b == T) vertex_on(T, i, j + 1, i + 1, j + 1);
          if (a == L || b == L) vertex_on(L, i, j, i, j + 1);
          if (a == R || b == R) vertex_on(R, i + 1, j, i + 1, j + 1);
          segs.push_back({a, b});
        };

        switch (mask) {
          case 1: case 14: add(L, B); break;
          case 2: case 13: add(B, R); break;
          case 3: case 12: add(L, R); break;
          case 4: case 11: add(R, T); break;
          case 6: case 9:  add(B, T); break;
          case 7: case 8:  add(L, T); break;
          case 5:  // corners (i,j) and (i+1,j+1) inside
            if (0.25 * (v00 + v10 + v11 + v01) >= level) {
              add(B, R);
              add(T, L);
            } else {
              add(L, B);
              add(R, T);
            }
            break;
          case 10:  // corners (i+1,j) and (i,j+1) inside
            if (0.25 * (v00 + v10 + v11 + v01) >= level) {
              add(L, B);
              add(R, T);
            } else {
              add(B, R);
              add(T, L);
            }
            break;
        }
      }
    }
  }
};

// Chains segments that share mesh-edge keys into polylines.
std::vector<ContourPolyline> stitch(const LevelExtractor& ex, double level) {
  const auto& segs = ex.segs;
  std::unordered_map<uint64_t, std::array<int, 2>> touch;
  touch.reserve(segs.size() * 2);
  for (int s = 0; s < int(segs.size()); ++s) {
    for (uint64_t e : {segs[s].e0, segs[s].e1}) {
      auto [it, inserted] = touch.try_emplace(e, std::array<int, 2>{-1, -1});
      auto& slot = it->second;
      (slot[0] < 0 ? slot[0] : slot[1]) = s;
    }
  }

  std::vector<char> used(segs.size(), 0);
  std::vector<ContourPolyline> out;
  for (int s0 = 0; s0 < int(segs.size()); ++s0) {
    if (used[s0]) continue;
    used[s0] = 1;
    std::vector<uint64_t> chain{segs[s0].e0, segs[s0].e1};
    bool closed = false;

    // Extend forward from the back edge, then (if open) backward from the front.
    for (int dir = 0; dir < 2; ++dir) {
      while (true) {
        const uint64_t tip = dir == 0 ? chain.back() : chain.front();
        int next = -1;
        const auto it = touch.find(tip);
        if (it != touch.end()) {
          for (int cand : it->second)
            if (cand >= 0 && !used[cand]) next = cand;
        }
        if (next < 0) break;
        used[next] = 1;
        const uint64_t far = segs[next].e0 == tip ? segs[next].e1 : segs[next].e0;
        if (dir == 0)
          chain.push_back(far);
        else
          chain.insert(chain.begin(), far);
        if (chain.front() == chain.back()) {
          closed = true;
          chain.pop_back();
          break;
        }
      }
      if (closed) break;
    }

    ContourPolyline line;
    line.level = level;
    line.closed = closed;
    line.points.reserve(chain.size());
    for (uint64_t e : chain) line.points.push_back(ex.verts.at(e));
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace

std::vector<ContourPolyline> iso_value_curves(const GridAtlas& atlas, AtlasField field,
                                              std::span<const double> levels,
                                              std::span<const Vec2> mask_polygon) {
  const int nu = atlas.nu, nv = atlas.nv;
  std::vector<double> value(size_t(nu) * nv, 0.0);
  std::vector<char> ok(size_t(nu) * nv, 0);
  for (int j = 0; j < nv; ++j) {
    for (int i = 0; i < nu; ++i) {
      const CellRecord& cell = atlas.at(i, j);
      if (!cell.report) continue;
      if (!mask_polygon.empty() && !point_in_polygon(cell.coords, mask_polygon)) continue;
      const double v = field_value(*cell.report, field);
      if (!std::isfinite(v)) continue;
      value[size_t(j) * nu + i] = v;
      ok[size_t(j) * nu + i] = 1;
    }
  }

  std::vector<ContourPolyline> out;
  for (double level : levels) {
    LevelExtractor ex{atlas, value, ok, level, {}, {}};
    ex.run();
    auto lines = stitch(ex, level);
    out.insert(out.end(), std::make_move_iterator(lines.begin()),
               std::make_move_iterator(lines.end()));
  }
  return out;
}

}  // namespace glide2d
