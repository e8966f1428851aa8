#pragma once

// SO(2), SO(3) and SU(2): rotation matrices and generators, Pauli matrices,
// quaternions and the conjugation double cover, isospin ladder operators.

#include "liekit/exact.hpp"
#include "liekit/liecore.hpp"
#include "liekit/numkernel.hpp"

#include <Eigen/Dense>

#include <array>
#include <optional>
#include <string>

namespace liekit {

enum class Axis { x, y, z };

const char* to_string(Axis axis);
Axis parse_axis(const std::string& s);  // "x" | "y" | "z", throws PreconditionError
inline constexpr Axis kAxes[3] = {Axis::x, Axis::y, Axis::z};

/// [[cos, -sin], [sin, cos]]
ComplexMatrix so2_rotation(double theta);
/// R_x, R_y, R_z as right-handed rotations; R_x(t) = [[1,0,0],[0,cos,-sin],[0,sin,cos]].
ComplexMatrix so3_rotation(Axis axis, double theta);
/// Rotation by theta about a unit axis (Rodrigues), for comparisons with the double cover.
Eigen::Matrix3d axis_angle_rotation(const Eigen::Vector3d& axis, double theta);

ComplexMatrix pauli(Axis axis);
ComplexMatrix so3_generator(Axis axis);  // X_x = [[0,0,0],[0,0,i],[0,-i,0]], cyclic
ComplexMatrix so2_generator();           // -i R'(0) = [[0,i],[-i,0]]

ExactMatrix exact_pauli(Axis axis);
ExactMatrix exact_so3_generator(Axis axis);

GeneratorBasis so2_basis();
GeneratorBasis pauli_basis();       // {sigma_x, sigma_y, sigma_z}
GeneratorBasis half_pauli_basis();  // {sigma / 2}
GeneratorBasis so3_basis();         // {X_x, X_y, X_z}

/// a + bI + cJ + dK with Hamilton's rule I J = K.
struct Quaternion {
  double a = 0, b = 0, c = 0, d = 0;

  double norm() const;
  Quaternion operator-() const { return {-a, -b, -c, -d}; }
  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

Quaternion quat_mul(const Quaternion& p, const Quaternion& q);
Quaternion quat_conj(const Quaternion& q);
double quat_distance(const Quaternion& p, const Quaternion& q);

/// Printed 2x2 unit matrices I = [[0,i],[i,0]], J = [[0,1],[-1,0]], K = [[i,0],[0,-i]].
ComplexMatrix quaternion_unit_matrix(Axis axis);
/// a 1 + b I + c J + d K. These matrices multiply in the opposite order to
/// quat_mul: image(p q) = image(q) image(p).
ComplexMatrix quat_matrix(const Quaternion& q);

Quaternion embed_vector(const Eigen::Vector3d& v);
/// Throws PreconditionError if |a| > tol.
Eigen::Vector3d extract_vector(const Quaternion& q, double tol = kDefaultTol);

/// extract(t embed(v) conj(t)); throws unless |t| = 1 within tol.
Eigen::Vector3d rotate_by_conjugation(const Quaternion& t, const Eigen::Vector3d& v, double tol = kDefaultTol);
/// The 3x3 matrix of v -> t v conj(t).
Eigen::Matrix3d rotation_from_quaternion(const Quaternion& t, double tol = kDefaultTol);

/// Both unit quaternions whose conjugation gives the proper rotation r: {q, -q}, q.a >= 0.
std::array<Quaternion, 2> quaternions_for_rotation(const Eigen::Matrix3d& r, double tol = 1e-9);

/// cos(theta/2) + sin(theta/2) u; conjugation rotates by theta.
Quaternion su2_from_axis_angle(const Eigen::Vector3d& axis, double theta, double tol = kDefaultTol);
/// cos(theta) + sin(theta) u verbatim; conjugation rotates by 2 theta.
Quaternion paper_t(const Eigen::Vector3d& axis, double theta, double tol = kDefaultTol);
/// t_x, t_y, t_z of the printed family: paper_t about a coordinate axis.
Quaternion paper_t(Axis axis, double theta);

/// [[alpha, -conj(beta)], [beta, conj(alpha)]]; throws unless |alpha|^2 + |beta|^2 = 1 within tol.
ComplexMatrix su2_matrix(cplx alpha, cplx beta, double tol = kDefaultTol);

/// 2x2 real image of a complex number: 1 -> identity, i -> [[0,-1],[1,0]].
ComplexMatrix u1_image(cplx z);

enum class Ladder { plus, minus };

/// I+- = (sigma_x +- i sigma_y) / 2
ComplexMatrix ladder(Ladder which);

struct IsospinState {
  Eigen::Vector2cd components;
};

IsospinState proton();   // (1, 0)
IsospinState neutron();  // (0, 1)

/// A ladder operator applied to a state either yields a state or annihilates it.
struct IsospinResult {
  bool annihilated = false;
  IsospinState state;
};

IsospinResult apply_isospin(const ComplexMatrix& op, const IsospinState& s, double tol = kDefaultTol);

}  // namespace liekit
