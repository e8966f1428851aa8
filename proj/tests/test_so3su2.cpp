#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liekit/so3su2.hpp"

#include <Eigen/Geometry>

#include <cmath>
#include <numbers>
#include <random>

using namespace liekit;

namespace {

constexpr cplx I1(0, 1);

double diff(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs(ComplexMatrix(a - b)); }

// Hamilton product written out component-wise, the textbook table
Quaternion hamilton(const Quaternion& p, const Quaternion& q) {
  return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d, p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
          p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b, p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

Quaternion random_quaternion(std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  return {n(rng), n(rng), n(rng), n(rng)};
}

}  // namespace

TEST_CASE("SO(2) and SO(3) rotations match Eigen's AngleAxis") {
  for (double t : {-2.5, -0.4, 0.0, 1.1, 3.0}) {
    CHECK(is_unitary(so2_rotation(t), 1e-14));
    const Eigen::Vector3d axes[3] = {Eigen::Vector3d::UnitX(), Eigen::Vector3d::UnitY(), Eigen::Vector3d::UnitZ()};
    for (int k = 0; k < 3; ++k) {
      const Eigen::Matrix3d oracle = Eigen::AngleAxisd(t, axes[k]).toRotationMatrix();
      CHECK(diff(so3_rotation(kAxes[k], t), oracle.cast<cplx>()) < 1e-15);
    }
  }
  std::mt19937_64 rng(2);
  std::normal_distribution<double> n;
  for (int k = 0; k < 20; ++k) {
    const Eigen::Vector3d ax = Eigen::Vector3d(n(rng), n(rng), n(rng)).normalized();
    CHECK((axis_angle_rotation(ax, 0.9) - Eigen::AngleAxisd(0.9, ax).toRotationMatrix()).cwiseAbs().maxCoeff() <
          1e-14);
  }
}

TEST_CASE("Pauli matrices: Hermitian, traceless, squares to one, eigenvalues +-1") {
  for (Axis ax : kAxes) {
    const ComplexMatrix s = pauli(ax);
    CHECK(is_hermitian(s, 0.0));
    CHECK(std::abs(s.trace()) == 0.0);
    CHECK(diff(s * s, ComplexMatrix::Identity(2, 2)) == 0.0);
    const auto e = eig_hermitian(s);
    CHECK(std::abs(e.eigenvalues(0) + 1) < 1e-14);
    CHECK(std::abs(e.eigenvalues(1) - 1) < 1e-14);
    CHECK(to_complex(exact_pauli(ax)) == s);
  }
  // [sigma_x, sigma_y] = 2i sigma_z, exactly
  CHECK(exact_commutator(exact_pauli(Axis::x), exact_pauli(Axis::y)) ==
        ExactMatrix(GaussInt(0, 2) * exact_pauli(Axis::z)));
}

TEST_CASE("SO(3) generators") {
  ComplexMatrix xx = ComplexMatrix::Zero(3, 3);
  xx(1, 2) = I1;
  xx(2, 1) = -I1;
  CHECK(so3_generator(Axis::x) == xx);
  CHECK(to_complex(exact_so3_generator(Axis::y)) == so3_generator(Axis::y));
  // [X_x, X_y] = -i X_z for this layout
  CHECK(diff(commutator(so3_generator(Axis::x), so3_generator(Axis::y)), ComplexMatrix(-I1 * so3_generator(Axis::z))) ==
        0.0);
}

TEST_CASE("quat_mul is the Hamilton product") {
  const Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  CHECK(quat_mul(i, j) == k);
  CHECK(quat_mul(j, k) == i);
  CHECK(quat_mul(k, i) == j);
  CHECK(quat_mul(i, i) == Quaternion{-1, 0, 0, 0});
  std::mt19937_64 rng(8);
  for (int n = 0; n < 50; ++n) {
    const Quaternion p = random_quaternion(rng), q = random_quaternion(rng);
    CHECK(quat_distance(quat_mul(p, q), hamilton(p, q)) < 1e-14);
    CHECK(quat_mul(p, q).norm() == doctest::Approx(p.norm() * q.norm()).epsilon(1e-13));
    CHECK(quat_distance(quat_mul(p, quat_conj(p)), Quaternion{p.norm() * p.norm(), 0, 0, 0}) < 1e-12);
  }
}

TEST_CASE("printed 2x2 unit matrices multiply in reverse order") {
  const ComplexMatrix I = quaternion_unit_matrix(Axis::x), J = quaternion_unit_matrix(Axis::y),
                      K = quaternion_unit_matrix(Axis::z);
  for (const ComplexMatrix& m : {I, J, K}) CHECK(diff(m * m, ComplexMatrix(-ComplexMatrix::Identity(2, 2))) == 0.0);
  CHECK(diff(I * J, ComplexMatrix(-K)) == 0.0);
  std::mt19937_64 rng(3);
  for (int n = 0; n < 20; ++n) {
    const Quaternion p = random_quaternion(rng), q = random_quaternion(rng);
    CHECK(diff(quat_matrix(quat_mul(p, q)), ComplexMatrix(quat_matrix(q) * quat_matrix(p))) < 1e-13);
  }
}

TEST_CASE("vector embedding and extraction") {
  const Eigen::Vector3d v(1.5, -2, 0.25);
  const Quaternion q = embed_vector(v);
  CHECK(q.a == 0.0);
  CHECK((extract_vector(q) - v).norm() == 0.0);
  CHECK_THROWS_AS(extract_vector(Quaternion{0.5, 1, 0, 0}), PreconditionError);
}

TEST_CASE("conjugation by su2_from_axis_angle rotates by theta") {
  std::mt19937_64 rng(12);
  std::normal_distribution<double> n;
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  for (int k = 0; k < 200; ++k) {
    const Eigen::Vector3d ax = Eigen::Vector3d(n(rng), n(rng), n(rng)).normalized();
    const double th = ang(rng);
    const Eigen::Vector3d v(n(rng), n(rng), n(rng));
    const Quaternion q = su2_from_axis_angle(ax, th);
    CHECK(q.norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK((rotate_by_conjugation(q, v) - Eigen::AngleAxisd(th, ax) * v).norm() < 1e-12);
    CHECK((rotate_by_conjugation(-q, v) - rotate_by_conjugation(q, v)).norm() < 1e-13);
    CHECK((rotate_by_conjugation(paper_t(ax, th), v) - Eigen::AngleAxisd(2 * th, ax) * v).norm() < 1e-12);
  }
  CHECK_THROWS_AS(rotate_by_conjugation(Quaternion{2, 0, 0, 0}, Eigen::Vector3d::UnitX()), PreconditionError);
}

TEST_CASE("quaternions_for_rotation returns the two preimages") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> n;
  for (int k = 0; k < 100; ++k) {
    const Eigen::Vector3d ax = Eigen::Vector3d(n(rng), n(rng), n(rng)).normalized();
    const double th = 3.0 * (k % 7) / 7.0 + 0.01;
    const Eigen::Matrix3d r = Eigen::AngleAxisd(th, ax).toRotationMatrix();
    const auto pre = quaternions_for_rotation(r);
    CHECK(pre[0].a >= 0.0);
    CHECK(quat_distance(pre[1], -pre[0]) < 1e-15);
    CHECK((rotation_from_quaternion(pre[0]) - r).cwiseAbs().maxCoeff() < 1e-12);
    const Quaternion q = su2_from_axis_angle(ax, th);
    CHECK(std::min(quat_distance(pre[0], q), quat_distance(pre[1], q)) < 1e-12);
  }
  CHECK_THROWS(quaternions_for_rotation(Eigen::Matrix3d(Eigen::Vector3d(1, 1, -1).asDiagonal())));
}

TEST_CASE("coordinate paper_t rotates about its axis by 2 theta") {
  for (Axis ax : kAxes) {
    const Eigen::Matrix3d r = rotation_from_quaternion(paper_t(ax, 0.3));
    CHECK(diff(r.cast<cplx>(), so3_rotation(ax, 0.6)) < 1e-14);
  }
}

TEST_CASE("SU(2) matrix form") {
  const cplx alpha = std::polar(0.6, 0.3), beta = std::polar(0.8, -1.1);
  const ComplexMatrix u = su2_matrix(alpha, beta);
  CHECK(is_unitary(u, 1e-14));
  CHECK(std::abs(u.determinant() - 1.0) < 1e-14);
  CHECK_THROWS_AS(su2_matrix(1.0, 1.0), PreconditionError);
}

TEST_CASE("U(1) image") {
  CHECK(diff(u1_image(I1), so2_rotation(std::numbers::pi / 2)) < 1e-15);
  const cplx z = std::polar(1.0, 0.7), w = std::polar(1.0, -2.1);
  CHECK(diff(u1_image(z * w), ComplexMatrix(u1_image(z) * u1_image(w))) < 1e-14);
}

TEST_CASE("isospin ladders on proton and neutron") {
  const ComplexMatrix up = ladder(Ladder::plus), down = ladder(Ladder::minus);
  CHECK(diff(up, ComplexMatrix((pauli(Axis::x) + I1 * pauli(Axis::y)) / 2.0)) == 0.0);
  const auto p = apply_isospin(up, neutron());
  CHECK_FALSE(p.annihilated);
  CHECK((p.state.components - proton().components).norm() < 1e-15);
  CHECK(apply_isospin(up, proton()).annihilated);
  CHECK(apply_isospin(down, neutron()).annihilated);
  CHECK((apply_isospin(down, proton()).state.components - neutron().components).norm() < 1e-15);
}

TEST_CASE("axis parsing") {
  CHECK(parse_axis("y") == Axis::y);
  CHECK(std::string(to_string(Axis::z)) == "z");
  CHECK_THROWS_AS(parse_axis("w"), PreconditionError);
}
