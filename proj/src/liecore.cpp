#include "liekit/liecore.hpp"

#include "liekit/matrix_io.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace liekit {

GeneratorEstimate extract_generator(const ParamCurve& curve, int j, double h) {
  if (!curve.evaluate) throw PreconditionError("extract_generator: curve has no evaluate function");
  if (j < 0 || j >= curve.param_count) throw PreconditionError("extract_generator: parameter index out of range");
  if (!(h > 0)) throw PreconditionError("extract_generator: step must be positive");

  const RealVector zero = RealVector::Zero(curve.param_count);
  const ComplexMatrix at_zero = curve.evaluate(zero);
  require_square(at_zero, "extract_generator");
  if (!curve.at_zero_is_identity ||
      max_abs(ComplexMatrix(at_zero - ComplexMatrix::Identity(at_zero.rows(), at_zero.cols()))) > 1e-10)
    throw PreconditionError("extract_generator: curve(0) is not the identity");

  const cplx minus_i(0, -1);
  if (curve.derivative) return {minus_i * curve.derivative(zero, j), 0.0};

  const auto central = [&](double step) {
    RealVector plus = zero;
    RealVector minus = zero;
    plus(j) = step;
    minus(j) = -step;
    return ComplexMatrix((curve.evaluate(plus) - curve.evaluate(minus)) / (2 * step));
  };
  const ComplexMatrix coarse = central(h);
  const ComplexMatrix fine = central(h / 2);
  const ComplexMatrix extrapolated = (4.0 * fine - coarse) / 3.0;
  return {minus_i * extrapolated, max_abs(ComplexMatrix(extrapolated - fine))};
}

GeneratorBasis::GeneratorBasis(std::string name, std::vector<ComplexMatrix> generators, double tol)
    : name_(std::move(name)), generators_(std::move(generators)) {
  if (generators_.empty()) throw PreconditionError("generator basis: empty");
  const Eigen::Index d = generators_.front().rows();
  for (const auto& g : generators_) {
    require_square(g, "generator basis");
    if (g.rows() != d) throw PreconditionError("generator basis: generators differ in dimension");
    if (!all_finite(g)) throw PreconditionError("generator basis: non-finite entry");
  }
  const auto n = static_cast<Eigen::Index>(generators_.size());
  ComplexMatrix gram(n, n);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      gram(a, b) = (generators_[static_cast<std::size_t>(a)].adjoint() * generators_[static_cast<std::size_t>(b)]).trace();
  const auto eig = eig_hermitian(gram, 1e-8);
  const double top = eig.eigenvalues(n - 1);
  if (!(top > 0) || eig.eigenvalues(0) <= tol * top)
    throw PreconditionError("generator basis '" + name_ + "': generators are linearly dependent");
}

GeneratorBasis GeneratorBasis::scaled(double s) const {
  std::vector<ComplexMatrix> g;
  g.reserve(generators_.size());
  for (const auto& x : generators_) g.push_back(s * x);
  return GeneratorBasis(name_, std::move(g));
}

ComplexMatrix GeneratorBasis::combine(const RealVector& c) const {
  if (c.size() != size()) throw PreconditionError("generator basis: coefficient count mismatch");
  ComplexMatrix out = ComplexMatrix::Zero(dim(), dim());
  for (int a = 0; a < size(); ++a) out += c(a) * (*this)[a];
  return out;
}

ComplexMatrix exp_map(const GeneratorBasis& basis, const RealVector& alpha) {
  if (alpha.size() != basis.size()) throw PreconditionError("exp_map: need one parameter per generator");
  return mat_exp(cplx(0, 1) * basis.combine(alpha));
}

double StructureConstants::max_imag() const {
  double m = 0;
  for (const auto& v : f) m = std::max(m, std::abs(v.imag()));
  return m;
}

double StructureConstants::max_abs_difference(const StructureConstants& other) const {
  if (other.size != size) throw PreconditionError("structure constants: size mismatch");
  double m = 0;
  for (std::size_t k = 0; k < f.size(); ++k) m = std::max(m, std::abs(f[k] - other.f[k]));
  return m;
}

StructureConstants structure_constants(const GeneratorBasis& basis, double closure_tol) {
  const int n = basis.size();
  const Eigen::Index d = basis.dim();
  ComplexMatrix columns(d * d, n);
  for (int a = 0; a < n; ++a) columns.col(a) = basis[a].reshaped();
  const Eigen::ColPivHouseholderQR<ComplexMatrix> qr(columns);

  StructureConstants out;
  out.size = n;
  out.f.assign(static_cast<std::size_t>(n) * n * n, cplx(0, 0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const ComplexMatrix br = commutator(basis[a], basis[b]);
      const ComplexVector v = br.reshaped();
      const ComplexVector coeffs = qr.solve(v);
      const double r = max_abs(ComplexVector(columns * coeffs - v)) / std::max(1.0, max_abs(v));
      out.residual = std::max(out.residual, r);
      if (r > closure_tol)
        throw NotClosedError("structure constants: basis '" + basis.name() + "' is not closed under the bracket", r);
      for (int c = 0; c < n; ++c) out.at(a, b, c) = coeffs(c) / cplx(0, 1);
    }
  return out;
}

double jacobi_residual(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
  const ComplexMatrix sum = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                            commutator(c, commutator(a, b));
  return max_abs(sum);
}

BracketReport verify_bracket_properties(const GeneratorBasis& basis, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const auto draw = [&] {
    RealVector c(basis.size());
    for (Eigen::Index k = 0; k < c.size(); ++k) c(k) = unit(rng);
    return basis.combine(c);
  };
  BracketReport rep;
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const ComplexMatrix a = draw();
    const ComplexMatrix b = draw();
    const ComplexMatrix c = draw();
    const double alpha = unit(rng);
    const double beta = unit(rng);
    rep.self_bracket = std::max(rep.self_bracket, max_abs(commutator(a, a)));
    const ComplexMatrix lhs = commutator(ComplexMatrix(alpha * a + beta * b), c);
    const ComplexMatrix rhs = alpha * commutator(a, c) + beta * commutator(b, c);
    rep.bilinearity = std::max(rep.bilinearity, max_abs(ComplexMatrix(lhs - rhs)));
    rep.antisymmetry = std::max(rep.antisymmetry, max_abs(ComplexMatrix(commutator(a, b) + commutator(b, a))));
    rep.jacobi = std::max(rep.jacobi, jacobi_residual(a, b, c));
  }
  return rep;
}

std::optional<double> rescale_factor(const GeneratorBasis& b1, const GeneratorBasis& b2, double tol) {
  if (b1.size() != b2.size()) return std::nullopt;
  const StructureConstants f1 = structure_constants(b1);
  const StructureConstants f2 = structure_constants(b2);
  double num = 0;
  double den = 0;
  double scale = 1.0;
  for (std::size_t k = 0; k < f1.f.size(); ++k) {
    num += (std::conj(f2.f[k]) * f1.f[k]).real();
    den += std::norm(f2.f[k]);
    scale = std::max(scale, std::abs(f1.f[k]));
  }
  if (den == 0) {
    // abelian b2: only an abelian b1 matches, with any scale
    for (const auto& v : f1.f)
      if (std::abs(v) > tol) return std::nullopt;
    return 1.0;
  }
  const double s = num / den;
  if (s == 0) return std::nullopt;
  for (std::size_t k = 0; k < f1.f.size(); ++k)
    if (std::abs(f1.f[k] - s * f2.f[k]) > tol * scale) return std::nullopt;
  return s;
}

std::optional<double> algebras_isomorphic_by_rescale(const GeneratorBasis& b1, const GeneratorBasis& b2,
                                                     double tol) {
  const auto s = rescale_factor(b1, b2, tol);
  if (s && *s > 0) return s;
  return std::nullopt;
}

int levi_civita(int i, int j, int k) {
  for (int v : {i, j, k})
    if (v < 1 || v > 3) throw std::out_of_range("levi_civita: indices must be in {1, 2, 3}");
  return (i - j) * (j - k) * (k - i) / 2;
}

int kronecker_delta(int i, int j) { return i == j ? 1 : 0; }

nlohmann::json basis_to_json(const GeneratorBasis& basis) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : basis.generators()) gens.push_back(matrix_to_json(g));
  return {{"name", basis.name()}, {"generators", std::move(gens)}};
}

GeneratorBasis basis_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
    throw FormatError("generator basis: expected object with a \"generators\" array");
  std::vector<ComplexMatrix> gens;
  for (const auto& m : j["generators"]) gens.push_back(matrix_from_json(m));
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  try {
    return GeneratorBasis(name, std::move(gens));
  } catch (const PreconditionError& e) {
    throw FormatError(e.what());
  }
}

nlohmann::json structure_constants_to_json(const StructureConstants& f) {
  nlohmann::json out = nlohmann::json::array();
  for (int a = 0; a < f.size; ++a) {
    nlohmann::json row = nlohmann::json::array();
    for (int b = 0; b < f.size; ++b) {
      nlohmann::json cell = nlohmann::json::array();
      for (int c = 0; c < f.size; ++c) {
        const cplx v = f.at(a, b, c);
        // normalise -0.0 so reports do not depend on the sign of zero
        cell.push_back({v.real() == 0 ? 0.0 : v.real(), v.imag() == 0 ? 0.0 : v.imag()});
      }
      row.push_back(std::move(cell));
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace liekit
