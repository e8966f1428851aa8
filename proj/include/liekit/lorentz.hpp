#pragma once

// Lorentz and Poincare: metric, the four-component classification, rotation
// and boost generators, their algebra and N+- split, chiral 2D representations
// with the parity action, and a 5x5 affine Poincare representation.

#include "liekit/exact.hpp"
#include "liekit/liecore.hpp"
#include "liekit/numkernel.hpp"
#include "liekit/so3su2.hpp"

#include <array>

namespace liekit {

/// diag(-1, 1, 1, 1)
ComplexMatrix minkowski_metric();

/// max |L eta L^T - eta|
double lorentz_residual(const ComplexMatrix& l);
/// Throws PreconditionError unless l is 4x4 with real entries (within tol).
bool verify_lorentz(const ComplexMatrix& l, double tol = kDefaultTol);

struct LorentzClassification {
  int det_sign = 1;
  int time_sign = 1;  // sign of L^0_0
  int category = 1;   // 1: (+,+)  2: (-,+)  3: (+,-)  4: (-,-)
  double det = 1;
  double lambda00 = 1;
};

/// Throws PreconditionError if |L^0_0| < 1 - tol.
LorentzClassification classify(const ComplexMatrix& l, double tol = kDefaultTol);

ComplexMatrix parity_tp();         // diag(1, -1, -1, -1)
ComplexMatrix time_reversal_tt();  // diag(-1, 1, 1, 1)

enum class GeneratorKind { rotation, boost };

/// printed: J_i = diag(0, X_i) and K_x = i(E01 + E10) etc., with group elements
/// e^{+i theta G}. normalized: J and K negated, the sign convention under which
/// the printed commutation relations hold.
enum class Convention { printed, normalized };

const char* to_string(Convention c);

ComplexMatrix lorentz_generator(GeneratorKind kind, Axis axis, Convention c = Convention::printed);
/// J_x exactly as printed, including the entry 1 at (1, 1).
ComplexMatrix printed_rotation_generator_x_verbatim();
ExactMatrix exact_lorentz_generator(GeneratorKind kind, Axis axis);

/// {J_x, J_y, J_z, K_x, K_y, K_z}
GeneratorBasis lorentz_basis(Convention c = Convention::printed);

/// mat_exp(i theta K_axis) with the printed K.
ComplexMatrix boost(Axis axis, double theta);
/// mat_exp(i theta J_axis) with the printed J.
ComplexMatrix lorentz_rotation(Axis axis, double theta);

/// dx/dt of the worldline L (1, 0, 0, 0)^T along `axis`.
double coordinate_speed(const ComplexMatrix& l, Axis axis);

using Triple = std::array<ComplexMatrix, 3>;

/// Worst residual of each printed relation over all i, j:
/// [J_i, J_j] = i eps J_k, [J_i, K_j] = i eps K_k, [K_i, K_j] = -i eps J_k.
struct LorentzAlgebraResiduals {
  double jj = 0;
  double jk = 0;
  double kk = 0;
  double max() const { return std::max({jj, jk, kk}); }
};

LorentzAlgebraResiduals lorentz_algebra_residuals(const Triple& j, const Triple& k);

/// N+-_i = J_i +- i K_i. Residuals of [N+, N+] = 2i eps N+, [N-, N-] = 2i eps N-,
/// [N-_i, N+_j] = 0, and N+ + N- - 2J.
struct NDecompositionResiduals {
  double plus_plus = 0;
  double minus_minus = 0;
  double minus_plus = 0;
  double sum_identity = 0;
};

NDecompositionResiduals n_decomposition(const Triple& j, const Triple& k);

Triple rotation_generators(Convention c = Convention::printed);
Triple boost_generators(Convention c = Convention::printed);

enum class Handedness { left, right };

const char* to_string(Handedness h);

/// left: J = sigma / 2, K = -i sigma / 2; right: K = +i sigma / 2.
struct ChiralRep {
  Handedness handedness = Handedness::left;
  Triple j;
  Triple k;
};

ChiralRep chiral_rep(Handedness h);
/// J -> J, K -> -K, handedness swapped.
ChiralRep parity_flip(const ChiralRep& rep);

/// max |J_i - i K_i| for left, max |J_i + i K_i| for right (the N that must vanish).
double vanishing_n_residual(const ChiralRep& rep);

/// 5x5 matrices acting on (t, x, y, z, 1). P_mu = -i E_{mu,4}, so translations
/// are mat_exp(i a^mu P_mu) = [[1, a], [0, 1]].
struct PoincareAffineRep {
  Triple j;
  Triple k;
  std::array<ComplexMatrix, 4> p;  // P_t, P_x, P_y, P_z
};

PoincareAffineRep poincare_affine(Convention c = Convention::printed);
/// Generator embedding: lorentz4 in the top-left block, zeros elsewhere.
ComplexMatrix embed_affine(const ComplexMatrix& lorentz4);
ComplexMatrix translation(const Eigen::Vector4d& a);

struct PoincareResiduals {
  double jp = 0;                  // [J_i, P_j] = i eps P_k
  double pp = 0;                  // [P_mu, P_nu] = 0
  double jpt = 0;                 // [J_i, P_t] = 0
  double kpt = 0;                 // [K_i, P_t] = -i P_i
  double jk_delta_verbatim = 0;   // [J_i, K_j] = i delta P_t as printed
  double kp_delta_plus = 0;       // [K_i, P_j] = +i delta P_t
  double kp_delta_minus = 0;      // [K_i, P_j] = -i delta P_t
  double p_nilpotent = 0;         // P_mu^2 = 0
};

PoincareResiduals poincare_commutators(const PoincareAffineRep& rep);

}  // namespace liekit
