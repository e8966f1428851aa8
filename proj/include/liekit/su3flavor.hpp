#pragma once

// SU(3) flavor: Gell-Mann matrices, the det(e^{itX}) = 1 check, su(3)
// structure constants, fundamental weights and hypercharge.

#include "liekit/exact.hpp"  // Rational
#include "liekit/liecore.hpp"
#include "liekit/numkernel.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace liekit {

/// lambda_1..lambda_8; lambda_8 = diag(1, 1, -2) / sqrt(3). Throws std::out_of_range outside 1..8.
ComplexMatrix gell_mann(int alpha);

GeneratorBasis gell_mann_basis();  // {lambda_a}
GeneratorBasis su3_basis();        // {lambda_a / 2}

struct DeterminantReport {
  double max_deviation = 0;  // max |det(mat_exp(i t X)) - 1|
  int worst_generator = -1;
  double worst_t = 0;
};

/// Draws t uniformly in [-pi, pi] for each trial and generator.
DeterminantReport verify_traceless_determinant_identity(const GeneratorBasis& basis, int trials, std::uint64_t seed);

struct WeightPoint {
  double i3 = 0;  // eigenvalue of lambda_3 / 2
  double x8 = 0;  // eigenvalue of lambda_8 / 2
  std::string label;
};

/// e1, e2, e3 on the standard basis vectors, read from the diagonal generators.
std::vector<WeightPoint> fundamental_weights();

/// Header `label,i3,x8`; with_y appends the column y = (2 / sqrt(3)) x8.
std::string weights_csv(const std::vector<WeightPoint>& weights, bool with_y = false);

StructureConstants su3_structure_constants();

struct FlavorQuantumNumbers {
  Rational baryon_number;
  Rational strangeness;
  Rational hypercharge;
};

/// Y = B + S
FlavorQuantumNumbers hypercharge(Rational baryon_number, Rational strangeness);

}  // namespace liekit
