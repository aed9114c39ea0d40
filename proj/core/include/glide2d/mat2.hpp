#pragma once

#include <cmath>
#include <optional>
#include <utility>

namespace glide2d {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Wraps an angle into (-pi, pi].
inline double wrap_angle(double a) {
  double w = std::remainder(a, kTwoPi);
  if (w <= -kPi) w += kTwoPi;
  return w;
}

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr double dot(Vec2 o) const { return x * o.x + y * o.y; }
  constexpr double cross(Vec2 o) const { return x * o.y - y * o.x; }
  constexpr double norm2() const { return x * x + y * y; }
  double norm() const { return std::hypot(x, y); }
  Vec2 normalized() const {
    const double n = norm();
    return {x / n, y / n};
  }
  /// Counter-clockwise quarter turn (the plane rotation E = [[0,-1],[1,0]]).
  constexpr Vec2 perp() const { return {-y, x}; }
  double angle() const { return std::atan2(y, x); }
};

inline constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

inline Vec2 unit_vector(double angle) { return {std::cos(angle), std::sin(angle)}; }

/// 2x2 matrix, row-major: [[a, b], [c, d]].
struct Mat2 {
  double a = 0.0, b = 0.0;
  double c = 0.0, d = 0.0;

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Mat2 from_rows(Vec2 r0, Vec2 r1) { return {r0.x, r0.y, r1.x, r1.y}; }
  static constexpr Mat2 diagonal(double d0, double d1) { return {d0, 0.0, 0.0, d1}; }

  constexpr double det() const { return a * d - b * c; }
  constexpr double trace() const { return a + d; }
  constexpr Mat2 transpose() const { return {a, c, b, d}; }
  constexpr Vec2 row(int i) const { return i == 0 ? Vec2{a, b} : Vec2{c, d}; }
  constexpr Vec2 apply(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

  constexpr Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
  }
  constexpr Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
  constexpr Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }

  double frobenius_norm() const { return std::sqrt(a * a + b * b + c * c + d * d); }

  std::optional<Mat2> inverse() const {
    const double dt = det();
    if (dt == 0.0) return std::nullopt;
    return Mat2{d / dt, -b / dt, -c / dt, a / dt};
  }

  constexpr double max_abs() const {
    double m = std::abs(a) > std::abs(b) ? std::abs(a) : std::abs(b);
    if (std::abs(c) > m) m = std::abs(c);
    if (std::abs(d) > m) m = std::abs(d);
    return m;
  }
};

/// Singular values (sigma_max, sigma_min) of a 2x2 matrix, closed form.
///
/// sigma_max comes from the eigenvalues of M*M^T; sigma_min is recovered as
/// |det M| / sigma_max, which avoids the cancellation in (q1 - q2)/2 when the
/// matrix is nearly rank deficient.
inline std::pair<double, double> singular_values(const Mat2& m) {
  const double q1 = m.a * m.a + m.b * m.b + m.c * m.c + m.d * m.d;
  const double x = m.a * m.a + m.b * m.b - m.c * m.c - m.d * m.d;
  const double y = 2.0 * (m.a * m.c + m.b * m.d);
  const double q2 = std::hypot(x, y);
  const double smax = std::sqrt(0.5 * (q1 + q2));
  const double smin = smax > 0.0 ? std::abs(m.det()) / smax : 0.0;
  return {smax, smin};
}

/// Eigendecomposition of a symmetric 2x2 matrix [[a,b],[b,d]].
/// The off-diagonal is read from .b; the caller guarantees symmetry.
struct SymEig2 {
  double eig_max = 0.0;
  double eig_min = 0.0;
  Vec2 v_max{1.0, 0.0};
  Vec2 v_min{0.0, 1.0};
};

inline SymEig2 sym_eig(const Mat2& m) {
  const double half_tr = 0.5 * (m.a + m.d);
  const double off = 0.5 * (m.a - m.d);
  const double disc = std::hypot(off, m.b);
  SymEig2 e;
  e.eig_max = half_tr + disc;
  e.eig_min = e.eig_max != 0.0 ? (m.a * m.d - m.b * m.b) / e.eig_max : half_tr - disc;
  if (m.b != 0.0) {
    Vec2 v{m.b, e.eig_max - m.a};
    if (v.norm2() == 0.0) v = Vec2{e.eig_max - m.d, m.b};
    e.v_max = v.normalized();
  } else {
    e.v_max = (m.a >= m.d) ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
  }
  e.v_min = e.v_max.perp();
  return e;
}

}  // namespace glide2d
