#include <doctest.h>

#include <cmath>
#include <random>

#include "glide2d/jacobians.hpp"
#include "support/oracles.hpp"

using namespace glide2d;

namespace {

DesignParams isotropic_design() {
  DesignParams d;
  d.a = {0.0, 0.0};
  d.b = {2.0, -2.0};
  d.alpha1 = 0.0;
  d.alpha2 = kPi / 2.0;
  d.L1 = d.L2 = 1.0;
  d.rho_max = 4.0;
  return d;
}

ManipConfig isotropic_posture(const DesignParams& d) {
  return *forward_kinematics(d, 1.0, 1.0, {});
}

}  // namespace

TEST_CASE("matrix_A: rows are the bar vectors") {
  const DesignParams d = isotropic_design();
  const Mat2 A = matrix_A(isotropic_posture(d));
  CHECK(A.a == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(A.b == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(A.c == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(A.d == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(A.det() == doctest::Approx(1.0).epsilon(1e-12));

  // Aligned bars: rank loss.
  CHECK(matrix_A(testing::synthetic_config(0.4, 0.4)).det() == doctest::Approx(0.0));

  CHECK(matrix_A(testing::synthetic_config(0.0, kPi / 3.0)).det() ==
        doctest::Approx(std::sin(kPi / 3.0)).epsilon(1e-12));
}

TEST_CASE("det(A) = L1 L2 sin(theta2 - theta1) on random postures") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  std::uniform_real_distribution<double> length(0.3, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const double t1 = angle(rng), t2 = angle(rng);
    const double L1 = length(rng), L2 = length(rng);
    const ManipConfig q = testing::synthetic_config(t1, t2, L1, L2, {0.7, -0.4});
    const double expected = L1 * L2 * std::sin(t2 - t1);
    CHECK(matrix_A(q).det() ==
          doctest::Approx(expected).epsilon(1e-12).scale(std::max(1.0, L1 * L2)));
  }
}

TEST_CASE("matrix_B: diagonal closed form") {
  const DesignParams d = isotropic_design();
  const Mat2 B = matrix_B(isotropic_posture(d), d);
  CHECK(B.a == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(B.d == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(B.b == 0.0);
  CHECK(B.c == 0.0);

  // Bar perpendicular to its rail: that diagonal entry vanishes.
  DesignParams d2 = d;
  d2.alpha1 = 0.0;
  const ManipConfig perp = testing::synthetic_config(kPi / 2.0, 0.0);
  const Mat2 B2 = matrix_B(perp, d2);
  CHECK(std::abs(B2.a) < 1e-15);
  CHECK(std::abs(B2.det()) < 1e-15);

  DesignParams d3;
  d3.alpha1 = 0.0;
  d3.alpha2 = kPi / 2.0;
  d3.L1 = d3.L2 = 2.0;
  const Mat2 B3 = matrix_B(testing::synthetic_config(kPi / 4.0, kPi / 2.0, 2.0, 2.0), d3);
  CHECK(B3.a == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(B3.d == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("matrix_B equals the projection form on real postures") {
  // Diagonal entries must match (p-c).(c-a)/||c-a|| and (p-d).(d-b)/||d-b||.
  std::mt19937 rng(12);
  int done = 0;
  while (done < 200) {
    const DesignParams d = testing::random_design(rng);
    const auto q = testing::random_posture(rng, d);
    if (!q || q->rho1 < 0.05 || q->rho2 < 0.05) continue;
    const Mat2 B = matrix_B(*q, d);
    const double b00 = (q->p - q->c).dot((q->c - d.a) * (1.0 / (q->c - d.a).norm()));
    const double b11 = (q->p - q->d).dot((q->d - d.b) * (1.0 / (q->d - d.b).norm()));
    CHECK(B.a == doctest::Approx(b00).epsilon(1e-9));
    CHECK(B.d == doctest::Approx(b11).epsilon(1e-9));
    ++done;
  }
}

TEST_CASE("kinematic jacobian: identity at the isotropic posture") {
  const DesignParams d = isotropic_design();
  const auto J = kinematic_jacobian(isotropic_posture(d), d);
  REQUIRE(J.has_value());
  CHECK((*J - Mat2::identity()).max_abs() < 1e-12);

  const auto Jinv = inverse_kinematic_jacobian(isotropic_posture(d), d);
  REQUIRE(Jinv.has_value());
  CHECK((*Jinv - Mat2::identity()).max_abs() < 1e-12);
}

TEST_CASE("kinematic jacobian matches finite differences of FK") {
  std::mt19937 rng(13);
  int done = 0;
  while (done < 100) {
    const DesignParams d = testing::random_design(rng);
    const auto q = testing::random_posture(rng, d);
    if (!q) continue;
    const JacobianBundle bundle = jacobian_bundle(*q, d);
    if (std::abs(bundle.det_a) < 0.1 || std::abs(bundle.det_b) < 0.1) continue;
    const BranchSelector branch = consistent_branch(*q, d);
    const auto fd = testing::fd_jacobian(d, q->rho1, q->rho2, branch);
    if (!fd) continue;
    REQUIRE(bundle.J.has_value());
    CHECK((*bundle.J - *fd).max_abs() < 1e-5);
    ++done;
  }
}

TEST_CASE("jacobians are absent at singular postures") {
  const DesignParams d = isotropic_design();

  // Anti-aligned bars: parallel singularity.
  const ManipConfig par = testing::synthetic_config(0.2, 0.2 + kPi);
  CHECK(!kinematic_jacobian(par, d).has_value());

  // Bar 1 perpendicular to rail 1: serial singularity.
  const ManipConfig ser = testing::synthetic_config(kPi / 2.0, 0.0);
  CHECK(!inverse_kinematic_jacobian(ser, d).has_value());
}

TEST_CASE("bundle invariants: row norms, diagonality, J * Jinv = I") {
  std::mt19937 rng(14);
  int done = 0;
  while (done < 200) {
    const DesignParams d = testing::random_design(rng);
    const auto q = testing::random_posture(rng, d);
    if (!q) continue;
    const JacobianBundle bundle = jacobian_bundle(*q, d);
    CHECK(bundle.A.row(0).norm() == doctest::Approx(d.L1).epsilon(1e-9));
    CHECK(bundle.A.row(1).norm() == doctest::Approx(d.L2).epsilon(1e-9));
    CHECK(bundle.B.b == 0.0);
    CHECK(bundle.B.c == 0.0);
    if (bundle.J && bundle.J_inv)
      CHECK(((*bundle.J) * (*bundle.J_inv) - Mat2::identity()).max_abs() < 1e-9);
    ++done;
  }
}

TEST_CASE("velocity model: both projection equations hold") {
  // For rho_dot = Jinv p_dot, each scalar equation
  // (p-c).p_dot = (p-c).(c-a)/||c-a|| rho_dot_1 (and the leg-2 analogue)
  // must hold to machine precision.
  std::mt19937 rng(15);
  std::uniform_real_distribution<double> vel(-1.0, 1.0);
  int done = 0;
  while (done < 200) {
    const DesignParams d = testing::random_design(rng);
    const auto q = testing::random_posture(rng, d);
    if (!q || q->rho1 < 0.05 || q->rho2 < 0.05) continue;
    const auto Jinv = inverse_kinematic_jacobian(*q, d);
    if (!Jinv) continue;

    const Vec2 p_dot{vel(rng), vel(rng)};
    const Vec2 rho_dot = Jinv->apply(p_dot);
    const double lhs1 = (q->p - q->c).dot(p_dot);
    const double rhs1 = (q->p - q->c).dot((q->c - d.a) * (1.0 / (q->c - d.a).norm())) * rho_dot.x;
    const double lhs2 = (q->p - q->d).dot(p_dot);
    const double rhs2 = (q->p - q->d).dot((q->d - d.b) * (1.0 / (q->d - d.b).norm())) * rho_dot.y;
    CHECK(lhs1 == doctest::Approx(rhs1).epsilon(1e-12).scale(std::max(1.0, std::abs(lhs1))));
    CHECK(lhs2 == doctest::Approx(rhs2).epsilon(1e-12).scale(std::max(1.0, std::abs(lhs2))));
    ++done;
  }
}

TEST_CASE("singularity classification") {
  const DesignParams d = isotropic_design();

  CHECK(classify_singularity(isotropic_posture(d), d) == SingularityClass::Regular);

  // theta1 - theta2 = k*pi for k in {-2..2} is parallel-singular (away from
  // the serial locus). Unequal bars keep the elbows apart at even k.
  DesignParams uneq = d;
  uneq.L2 = 1.3;
  for (int k = -2; k <= 2; ++k) {
    const ManipConfig q = testing::synthetic_config(0.3, 0.3 + k * kPi, 1.0, 1.3, {5.0, 5.0});
    CHECK(classify_singularity(q, uneq) == SingularityClass::ParallelSingular);
  }

  // With equal bars, aligned same-direction bars coincide the elbows instead.
  CHECK(classify_singularity(testing::synthetic_config(0.3, 0.3 + kTwoPi), d) ==
        SingularityClass::Structural);

  // The second assembly mode of rho = (1,1) puts bar 1 perpendicular to rail 1.
  BranchSelector lower;
  lower.assembly_mode = -1;
  const auto q = forward_kinematics(d, 1.0, 1.0, lower);
  REQUIRE(q.has_value());
  CHECK(q->theta1 == doctest::Approx(-kPi / 2.0).epsilon(1e-12));
  CHECK(classify_singularity(*q, d) == SingularityClass::SerialSingular);

  // Coincident elbows dominate everything.
  ManipConfig structural = testing::synthetic_config(0.1, 0.1);
  structural.d = structural.c;
  CHECK(classify_singularity(structural, d) == SingularityClass::Structural);
}

TEST_CASE("hybrid 3-axis jacobian: block-diagonal embedding") {
  const Mat3 id3 = hybrid_jacobian_3axis(Mat2::identity());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(id3.m[i][j] == (i == j ? 1.0 : 0.0));

  const Mat2 J{1.0, 0.2, 0.0, 1.0};
  const Mat3 h = hybrid_jacobian_3axis(J);
  CHECK(h.m[0][1] == 0.2);
  CHECK(h.m[2][2] == 1.0);
  CHECK(h.m[0][2] == 0.0);
  CHECK(h.m[2][0] == 0.0);
  CHECK(h.det() == doctest::Approx(J.det()).epsilon(1e-15));
}
