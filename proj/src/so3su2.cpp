#include "liekit/so3su2.hpp"

#include <cmath>

namespace liekit {

namespace {

constexpr cplx I1(0, 1);

int axis_index(Axis axis) { return static_cast<int>(axis); }

Eigen::Vector3d unit_vector(Axis axis) { return Eigen::Vector3d::Unit(axis_index(axis)); }

void require_unit_axis(const Eigen::Vector3d& axis, double tol, const char* what) {
  if (!axis.allFinite() || std::abs(axis.norm() - 1.0) > tol)
    throw PreconditionError(std::string(what) + ": axis must be a unit vector");
}

Quaternion from_axis(const Eigen::Vector3d& u, double cos_part, double sin_part) {
  return {cos_part, sin_part * u.x(), sin_part * u.y(), sin_part * u.z()};
}

}  // namespace

const char* to_string(Axis axis) {
  switch (axis) {
    case Axis::x: return "x";
    case Axis::y: return "y";
    case Axis::z: return "z";
  }
  return "?";
}

Axis parse_axis(const std::string& s) {
  if (s == "x") return Axis::x;
  if (s == "y") return Axis::y;
  if (s == "z") return Axis::z;
  throw PreconditionError("unknown axis '" + s + "'");
}

ComplexMatrix so2_rotation(double theta) {
  ComplexMatrix r(2, 2);
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

ComplexMatrix so3_rotation(Axis axis, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  ComplexMatrix r(3, 3);
  switch (axis) {
    case Axis::x: r << 1, 0, 0, 0, c, -s, 0, s, c; break;
    case Axis::y: r << c, 0, s, 0, 1, 0, -s, 0, c; break;
    case Axis::z: r << c, -s, 0, s, c, 0, 0, 0, 1; break;
  }
  return r;
}

Eigen::Matrix3d axis_angle_rotation(const Eigen::Vector3d& axis, double theta) {
  require_unit_axis(axis, 1e-10, "axis_angle_rotation");
  Eigen::Matrix3d k;
  k << 0, -axis.z(), axis.y(), axis.z(), 0, -axis.x(), -axis.y(), axis.x(), 0;
  return Eigen::Matrix3d::Identity() + std::sin(theta) * k + (1 - std::cos(theta)) * k * k;
}

ComplexMatrix pauli(Axis axis) { return to_complex(exact_pauli(axis)); }

ComplexMatrix so3_generator(Axis axis) { return to_complex(exact_so3_generator(axis)); }

ComplexMatrix so2_generator() {
  ComplexMatrix x(2, 2);
  x << 0.0, I1, -I1, 0.0;
  return x;
}

ExactMatrix exact_pauli(Axis axis) {
  ExactMatrix m(2, 2);
  switch (axis) {
    case Axis::x: m << GaussInt(0), GaussInt(1), GaussInt(1), GaussInt(0); break;
    case Axis::y: m << GaussInt(0), GaussInt(0, -1), GaussInt(0, 1), GaussInt(0); break;
    case Axis::z: m << GaussInt(1), GaussInt(0), GaussInt(0), GaussInt(-1); break;
  }
  return m;
}

ExactMatrix exact_so3_generator(Axis axis) {
  // (X_k)_{ij} = i eps_{kij} in the printed layout, e.g. (X_x)_{yz} = +i
  ExactMatrix m = ExactMatrix::Constant(3, 3, GaussInt(0));
  const int k = axis_index(axis) + 1;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j && i != k && j != k) m(i - 1, j - 1) = GaussInt(0, levi_civita(k, i, j));
  return m;
}

GeneratorBasis so2_basis() { return GeneratorBasis("so(2)", {so2_generator()}); }

GeneratorBasis pauli_basis() {
  return GeneratorBasis("pauli", {pauli(Axis::x), pauli(Axis::y), pauli(Axis::z)});
}

GeneratorBasis half_pauli_basis() {
  return GeneratorBasis("pauli/2", {pauli(Axis::x) / 2.0, pauli(Axis::y) / 2.0, pauli(Axis::z) / 2.0});
}

GeneratorBasis so3_basis() {
  return GeneratorBasis("so(3)", {so3_generator(Axis::x), so3_generator(Axis::y), so3_generator(Axis::z)});
}

double Quaternion::norm() const { return std::sqrt(a * a + b * b + c * c + d * d); }

Quaternion quat_mul(const Quaternion& p, const Quaternion& q) {
  return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
          p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
          p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
          p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

Quaternion quat_conj(const Quaternion& q) { return {q.a, -q.b, -q.c, -q.d}; }

double quat_distance(const Quaternion& p, const Quaternion& q) {
  return std::max({std::abs(p.a - q.a), std::abs(p.b - q.b), std::abs(p.c - q.c), std::abs(p.d - q.d)});
}

ComplexMatrix quaternion_unit_matrix(Axis axis) {
  ComplexMatrix m(2, 2);
  switch (axis) {
    case Axis::x: m << 0.0, I1, I1, 0.0; break;
    case Axis::y: m << 0.0, 1.0, -1.0, 0.0; break;
    case Axis::z: m << I1, 0.0, 0.0, -I1; break;
  }
  return m;
}

ComplexMatrix quat_matrix(const Quaternion& q) {
  return q.a * ComplexMatrix::Identity(2, 2) + q.b * quaternion_unit_matrix(Axis::x) +
         q.c * quaternion_unit_matrix(Axis::y) + q.d * quaternion_unit_matrix(Axis::z);
}

Quaternion embed_vector(const Eigen::Vector3d& v) { return {0.0, v.x(), v.y(), v.z()}; }

Eigen::Vector3d extract_vector(const Quaternion& q, double tol) {
  if (std::abs(q.a) > tol) throw PreconditionError("extract_vector: quaternion has a non-zero real part");
  return {q.b, q.c, q.d};
}

Eigen::Vector3d rotate_by_conjugation(const Quaternion& t, const Eigen::Vector3d& v, double tol) {
  if (std::abs(t.norm() - 1.0) > tol) throw PreconditionError("rotate_by_conjugation: t is not a unit quaternion");
  const Quaternion m = quat_mul(quat_mul(t, embed_vector(v)), quat_conj(t));
  // the real part of t m t* is exactly zero in exact arithmetic; roundoff scales with |v|
  return extract_vector(m, tol * std::max(1.0, v.norm()) + 1e-15 * v.norm());
}

Eigen::Matrix3d rotation_from_quaternion(const Quaternion& t, double tol) {
  Eigen::Matrix3d r;
  for (int k = 0; k < 3; ++k) r.col(k) = rotate_by_conjugation(t, Eigen::Vector3d::Unit(k), tol);
  return r;
}

std::array<Quaternion, 2> quaternions_for_rotation(const Eigen::Matrix3d& r, double tol) {
  if (!((r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <= tol) ||
      std::abs(r.determinant() - 1.0) > tol)
    throw PreconditionError("quaternions_for_rotation: not a proper rotation");
  // Shepperd: divide by the largest of 4w^2, 4x^2, 4y^2, 4z^2 for stability
  const double tr = r.trace();
  Quaternion q;
  if (tr >= r(0, 0) && tr >= r(1, 1) && tr >= r(2, 2)) {
    q.a = 0.5 * std::sqrt(1 + tr);
    q.b = (r(2, 1) - r(1, 2)) / (4 * q.a);
    q.c = (r(0, 2) - r(2, 0)) / (4 * q.a);
    q.d = (r(1, 0) - r(0, 1)) / (4 * q.a);
  } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
    q.b = 0.5 * std::sqrt(1 + r(0, 0) - r(1, 1) - r(2, 2));
    q.a = (r(2, 1) - r(1, 2)) / (4 * q.b);
    q.c = (r(0, 1) + r(1, 0)) / (4 * q.b);
    q.d = (r(0, 2) + r(2, 0)) / (4 * q.b);
  } else if (r(1, 1) >= r(2, 2)) {
    q.c = 0.5 * std::sqrt(1 - r(0, 0) + r(1, 1) - r(2, 2));
    q.a = (r(0, 2) - r(2, 0)) / (4 * q.c);
    q.b = (r(0, 1) + r(1, 0)) / (4 * q.c);
    q.d = (r(1, 2) + r(2, 1)) / (4 * q.c);
  } else {
    q.d = 0.5 * std::sqrt(1 - r(0, 0) - r(1, 1) + r(2, 2));
    q.a = (r(1, 0) - r(0, 1)) / (4 * q.d);
    q.b = (r(0, 2) + r(2, 0)) / (4 * q.d);
    q.c = (r(1, 2) + r(2, 1)) / (4 * q.d);
  }
  if (q.a < 0) q = -q;
  return {q, -q};
}

Quaternion su2_from_axis_angle(const Eigen::Vector3d& axis, double theta, double tol) {
  require_unit_axis(axis, tol, "su2_from_axis_angle");
  return from_axis(axis, std::cos(theta / 2), std::sin(theta / 2));
}

Quaternion paper_t(const Eigen::Vector3d& axis, double theta, double tol) {
  require_unit_axis(axis, tol, "paper_t");
  return from_axis(axis, std::cos(theta), std::sin(theta));
}

Quaternion paper_t(Axis axis, double theta) { return paper_t(unit_vector(axis), theta); }

ComplexMatrix su2_matrix(cplx alpha, cplx beta, double tol) {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > tol)
    throw PreconditionError("su2_matrix: |alpha|^2 + |beta|^2 must be 1");
  ComplexMatrix m(2, 2);
  m << alpha, -std::conj(beta), beta, std::conj(alpha);
  return m;
}

ComplexMatrix u1_image(cplx z) {
  ComplexMatrix m(2, 2);
  m << z.real(), -z.imag(), z.imag(), z.real();
  return m;
}

ComplexMatrix ladder(Ladder which) {
  const double sign = which == Ladder::plus ? 1.0 : -1.0;
  return (pauli(Axis::x) + sign * I1 * pauli(Axis::y)) / 2.0;
}

IsospinState proton() { return {Eigen::Vector2cd(1.0, 0.0)}; }
IsospinState neutron() { return {Eigen::Vector2cd(0.0, 1.0)}; }

IsospinResult apply_isospin(const ComplexMatrix& op, const IsospinState& s, double tol) {
  if (op.rows() != 2 || op.cols() != 2) throw PreconditionError("apply_isospin: operator must be 2x2");
  const Eigen::Vector2cd out = op * s.components;
  if (out.cwiseAbs().maxCoeff() <= tol) return {true, {Eigen::Vector2cd::Zero()}};
  return {false, {out}};
}

}  // namespace liekit
