#pragma once

// Matrix Lie groups: generators from curves, the exponential map, structure
// constants by least squares, bracket property sweeps, rescale isomorphisms.

#include "liekit/numkernel.hpp"

#include "json.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liekit {

/// alpha -> D(alpha). `derivative`, when set, gives dD/dalpha_j exactly and
/// replaces finite differences.
struct ParamCurve {
  Eigen::Index dim = 0;
  int param_count = 1;
  std::function<ComplexMatrix(const RealVector&)> evaluate;
  bool at_zero_is_identity = true;
  std::function<ComplexMatrix(const RealVector&, int)> derivative;
};

struct GeneratorEstimate {
  ComplexMatrix generator;
  double error_estimate = 0;
};

/// X_j = -i dD/dalpha_j (0): central differences at h and h/2 combined by one
/// Richardson step; the error estimate is the size of that correction.
GeneratorEstimate extract_generator(const ParamCurve& curve, int j, double h = 1e-5);

class GeneratorBasis {
public:
  /// Throws PreconditionError on an empty list, mixed dimensions, or a rank-deficient Gram matrix.
  GeneratorBasis(std::string name, std::vector<ComplexMatrix> generators, double tol = 1e-10);

  const std::string& name() const noexcept { return name_; }
  const std::vector<ComplexMatrix>& generators() const noexcept { return generators_; }
  int size() const noexcept { return static_cast<int>(generators_.size()); }
  Eigen::Index dim() const { return generators_.front().rows(); }
  const ComplexMatrix& operator[](int a) const { return generators_.at(static_cast<std::size_t>(a)); }

  GeneratorBasis scaled(double s) const;

  /// sum_a c_a X_a
  ComplexMatrix combine(const RealVector& c) const;

private:
  std::string name_;
  std::vector<ComplexMatrix> generators_;
};

/// mat_exp(i sum_j alpha_j X_j)
ComplexMatrix exp_map(const GeneratorBasis& basis, const RealVector& alpha);

class NotClosedError : public std::runtime_error {
public:
  NotClosedError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

/// [X_a, X_b] = i f_ab^c X_c
struct StructureConstants {
  int size = 0;
  std::vector<cplx> f;
  double residual = 0;  // worst least-squares residual over all pairs

  cplx at(int a, int b, int c) const { return f[static_cast<std::size_t>((a * size + b) * size + c)]; }
  cplx& at(int a, int b, int c) { return f[static_cast<std::size_t>((a * size + b) * size + c)]; }
  double max_imag() const;
  double max_abs_difference(const StructureConstants& other) const;
};

inline constexpr double kClosureTol = 1e-8;

/// Throws NotClosedError when some bracket is farther than `closure_tol` from the span.
StructureConstants structure_constants(const GeneratorBasis& basis, double closure_tol = kClosureTol);

struct BracketReport {
  int trials = 0;
  double self_bracket = 0;  // [A, A]
  double bilinearity = 0;
  double antisymmetry = 0;
  double jacobi = 0;
};

/// Random real combinations with coefficients in [-1, 1].
BracketReport verify_bracket_properties(const GeneratorBasis& basis, int trials, std::uint64_t seed);

double jacobi_residual(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c);

/// The s (any sign) with f(b1) = s f(b2), using f(s b) = s f(b); empty if no scalar fits.
std::optional<double> rescale_factor(const GeneratorBasis& b1, const GeneratorBasis& b2, double tol = 1e-10);

/// rescale_factor restricted to s > 0.
std::optional<double> algebras_isomorphic_by_rescale(const GeneratorBasis& b1, const GeneratorBasis& b2,
                                                     double tol = 1e-10);

/// Indices in {1, 2, 3}; throws std::out_of_range otherwise.
int levi_civita(int i, int j, int k);
int kronecker_delta(int i, int j);

/// {"name": ..., "generators": [matrix, ...]}
nlohmann::json basis_to_json(const GeneratorBasis& basis);
GeneratorBasis basis_from_json(const nlohmann::json& j);

/// f as nested [a][b][c] arrays of [re, im].
nlohmann::json structure_constants_to_json(const StructureConstants& f);

}  // namespace liekit
