#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liekit/liecore.hpp"
#include "liekit/lorentz.hpp"
#include "liekit/so3su2.hpp"
#include "liekit/su3flavor.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace liekit;

namespace {

constexpr cplx I1(0, 1);

double diff(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs(ComplexMatrix(a - b)); }

ParamCurve curve_of(Eigen::Index dim, std::function<ComplexMatrix(double)> f) {
  ParamCurve c;
  c.dim = dim;
  c.evaluate = [f](const RealVector& a) { return f(a(0)); };
  return c;
}

// oracle: solve [X_a, X_b] = i f X_c by brute-force trace projection on an orthogonal basis
cplx projected_constant(const GeneratorBasis& b, int x, int y, int z) {
  const ComplexMatrix c = b[x] * b[y] - b[y] * b[x];
  return (b[z].adjoint() * c).trace() / (I1 * (b[z].adjoint() * b[z]).trace());
}

}  // namespace

TEST_CASE("generator of the SO(2) curve") {
  const auto est = extract_generator(curve_of(2, so2_rotation), 0);
  CHECK(diff(est.generator, so2_generator()) < 1e-9);
  CHECK(est.error_estimate < 1e-6);
  CHECK(is_hermitian(est.generator, 1e-9));
}

TEST_CASE("generator of the constant identity curve is zero") {
  const auto est = extract_generator(curve_of(3, [](double) { return ComplexMatrix::Identity(3, 3); }), 0);
  CHECK(max_abs(est.generator) == 0.0);
}

TEST_CASE("generators of R_x, R_y, R_z are the SO(3) generators") {
  for (Axis ax : kAxes) {
    const auto est = extract_generator(curve_of(3, [ax](double t) { return so3_rotation(ax, t); }), 0);
    CHECK(diff(est.generator, so3_generator(ax)) < 1e-9);
  }
}

TEST_CASE("boost curve gives the non-Hermitian boost generator") {
  const auto est = extract_generator(curve_of(4, [](double t) { return liekit::boost(Axis::x, t); }), 0);
  CHECK(diff(est.generator, lorentz_generator(GeneratorKind::boost, Axis::x)) < 1e-9);
  CHECK_FALSE(is_hermitian(est.generator, 1e-6));
}

TEST_CASE("exact derivative replaces finite differences") {
  ParamCurve c = curve_of(2, so2_rotation);
  c.derivative = [](const RealVector& a, int) {
    ComplexMatrix d(2, 2);
    d << -std::sin(a(0)), -std::cos(a(0)), std::cos(a(0)), -std::sin(a(0));
    return d;
  };
  CHECK(diff(extract_generator(c, 0).generator, so2_generator()) < 1e-15);
}

TEST_CASE("exp_map reproduces the rotation curves") {
  const GeneratorBasis so3 = so3_basis();
  for (double t : {-2.0, -0.3, 0.7, 3.0}) {
    RealVector a = RealVector::Zero(3);
    a(2) = t;
    CHECK(diff(exp_map(so3, a), so3_rotation(Axis::z, t)) < 1e-13);
  }
  RealVector one(1);
  one(0) = std::numbers::pi / 2;
  ComplexMatrix quarter(2, 2);
  quarter << 0, -1, 1, 0;
  CHECK(diff(exp_map(so2_basis(), one), quarter) < 1e-15);
}

TEST_CASE("GeneratorBasis validation") {
  CHECK_THROWS_AS(GeneratorBasis("empty", {}), PreconditionError);
  CHECK_THROWS_AS(GeneratorBasis("mixed", {pauli(Axis::x), so3_generator(Axis::x)}), PreconditionError);
  CHECK_THROWS_AS(GeneratorBasis("dependent", {pauli(Axis::x), ComplexMatrix(2.0 * pauli(Axis::x))}), PreconditionError);
  const GeneratorBasis b = pauli_basis().scaled(0.5);
  CHECK(diff(b[1], half_pauli_basis()[1]) == 0.0);
}

TEST_CASE("structure constants agree with trace projection") {
  for (const GeneratorBasis& b : {pauli_basis(), half_pauli_basis(), so3_basis(), su3_basis()}) {
    const StructureConstants f = structure_constants(b);
    CHECK(f.residual < 1e-12);
    CHECK(f.max_imag() < 1e-12);
    for (int x = 0; x < b.size(); ++x)
      for (int y = 0; y < b.size(); ++y)
        for (int z = 0; z < b.size(); ++z) CHECK(std::abs(f.at(x, y, z) - projected_constant(b, x, y, z)) < 1e-12);
  }
}

TEST_CASE("Pauli f = 2 eps, half-Pauli f = eps, printed SO(3) f = -eps") {
  const auto p = structure_constants(pauli_basis());
  const auto h = structure_constants(half_pauli_basis());
  const auto s = structure_constants(so3_basis());
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        const double e = levi_civita(a + 1, b + 1, c + 1);
        CHECK(std::abs(p.at(a, b, c) - 2 * e) < 1e-12);
        CHECK(std::abs(h.at(a, b, c) - e) < 1e-12);
        CHECK(std::abs(s.at(a, b, c) + e) < 1e-12);
      }
}

TEST_CASE("non-closed set throws NotClosedError with its residual") {
  const GeneratorBasis b("xy", {pauli(Axis::x), pauli(Axis::y)});
  try {
    structure_constants(b);
    FAIL("closed");
  } catch (const NotClosedError& e) {
    CHECK(e.residual() > 0.5);
  }
}

TEST_CASE("bracket properties hold for su(2), su(3), Lorentz") {
  for (const GeneratorBasis& b : {half_pauli_basis(), su3_basis(), lorentz_basis()}) {
    const BracketReport r = verify_bracket_properties(b, 100, 3);
    CHECK(r.trials == 100);
    CHECK(r.self_bracket < 1e-13);
    CHECK(r.antisymmetry < 1e-13);
    CHECK(r.bilinearity < 1e-12);
    CHECK(r.jacobi < 1e-11);
  }
  CHECK(verify_bracket_properties(pauli_basis(), 10, 1).jacobi ==
        verify_bracket_properties(pauli_basis(), 10, 1).jacobi);
}

TEST_CASE("jacobi_residual vanishes for matrices and is computed per triple") {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> n;
  ComplexMatrix a(3, 3), b(3, 3), c(3, 3);
  for (auto* m : {&a, &b, &c})
    for (Eigen::Index i = 0; i < 9; ++i) m->data()[i] = cplx(n(rng), n(rng));
  CHECK(jacobi_residual(a, b, c) < 1e-12);
}

TEST_CASE("rescale factors between Pauli and half-Pauli bases") {
  const auto half = rescale_factor(half_pauli_basis(), pauli_basis());
  REQUIRE(half.has_value());
  CHECK(*half == doctest::Approx(0.5).epsilon(1e-12));
  const auto two = algebras_isomorphic_by_rescale(pauli_basis(), half_pauli_basis());
  REQUIRE(two.has_value());
  CHECK(*two == doctest::Approx(2.0).epsilon(1e-12));
  // SO(3) has f = -eps, Pauli 2 eps: only the negative factor fits
  const auto signed_factor = rescale_factor(pauli_basis(), so3_basis());
  REQUIRE(signed_factor.has_value());
  CHECK(*signed_factor == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK_FALSE(algebras_isomorphic_by_rescale(pauli_basis(), so3_basis()).has_value());
  CHECK_FALSE(rescale_factor(pauli_basis(), su3_basis()).has_value());
}

TEST_CASE("levi_civita and kronecker_delta") {
  CHECK(levi_civita(1, 2, 3) == 1);
  CHECK(levi_civita(2, 1, 3) == -1);
  CHECK(levi_civita(3, 1, 2) == 1);
  CHECK(levi_civita(1, 1, 2) == 0);
  CHECK_THROWS_AS(levi_civita(0, 1, 2), std::out_of_range);
  CHECK(kronecker_delta(2, 2) == 1);
  CHECK(kronecker_delta(1, 3) == 0);
}

TEST_CASE("basis JSON round trip") {
  const GeneratorBasis b = su3_basis();
  const GeneratorBasis back = basis_from_json(nlohmann::json::parse(basis_to_json(b).dump()));
  CHECK(back.name() == b.name());
  REQUIRE(back.size() == 8);
  for (int a = 0; a < 8; ++a) CHECK(back[a] == b[a]);
  const auto fj = structure_constants_to_json(structure_constants(pauli_basis()));
  CHECK(fj.size() == 3);
}
