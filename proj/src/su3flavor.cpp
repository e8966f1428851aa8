#include "liekit/su3flavor.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>

namespace liekit {

ComplexMatrix gell_mann(int alpha) {
  if (alpha < 1 || alpha > 8) throw std::out_of_range("gell_mann: index must be in 1..8");
  const cplx i(0, 1);
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  switch (alpha) {
    case 1: m(0, 1) = m(1, 0) = 1.0; break;
    case 2: m(0, 1) = -i; m(1, 0) = i; break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    case 4: m(0, 2) = m(2, 0) = 1.0; break;
    case 5: m(0, 2) = -i; m(2, 0) = i; break;
    case 6: m(1, 2) = m(2, 1) = 1.0; break;
    case 7: m(1, 2) = -i; m(2, 1) = i; break;
    case 8: {
      const double s = 1.0 / std::sqrt(3.0);
      m(0, 0) = s;
      m(1, 1) = s;
      m(2, 2) = -2.0 * s;
      break;
    }
  }
  return m;
}

GeneratorBasis gell_mann_basis() {
  std::vector<ComplexMatrix> g;
  for (int a = 1; a <= 8; ++a) g.push_back(gell_mann(a));
  return GeneratorBasis("gell-mann", std::move(g));
}

GeneratorBasis su3_basis() { return gell_mann_basis().scaled(0.5); }

DeterminantReport verify_traceless_determinant_identity(const GeneratorBasis& basis, int trials,
                                                        std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
  DeterminantReport rep;
  for (int t = 0; t < trials; ++t)
    for (int a = 0; a < basis.size(); ++a) {
      const double s = angle(rng);
      const cplx det = mat_exp(cplx(0, s) * basis[a]).determinant();
      const double dev = std::abs(det - 1.0);
      if (rep.worst_generator < 0 || dev > rep.max_deviation) {
        rep.max_deviation = dev;
        rep.worst_generator = a;
        rep.worst_t = s;
      }
    }
  return rep;
}

std::vector<WeightPoint> fundamental_weights() {
  const ComplexMatrix x3 = gell_mann(3) / 2.0;
  const ComplexMatrix x8 = gell_mann(8) / 2.0;
  std::vector<WeightPoint> out;
  for (int k = 0; k < 3; ++k)
    out.push_back({x3(k, k).real(), x8(k, k).real(), "e" + std::to_string(k + 1)});
  return out;
}

std::string weights_csv(const std::vector<WeightPoint>& weights, bool with_y) {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "label,i3,x8" << (with_y ? ",y" : "") << '\n';
  for (const auto& w : weights) {
    os << w.label << ',' << w.i3 << ',' << w.x8;
    if (with_y) os << ',' << 2.0 / std::sqrt(3.0) * w.x8;
    os << '\n';
  }
  return os.str();
}

StructureConstants su3_structure_constants() { return structure_constants(su3_basis(), 1e-10); }

FlavorQuantumNumbers hypercharge(Rational baryon_number, Rational strangeness) {
  return {baryon_number, strangeness, baryon_number + strangeness};
}

}  // namespace liekit
