#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liekit/exact.hpp"
#include "liekit/matrix_io.hpp"
#include "liekit/numkernel.hpp"
#include "liekit/random_matrices.hpp"

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <filesystem>
#include <limits>
#include <numbers>
#include <random>

using namespace liekit;

namespace {

constexpr cplx I1(0, 1);

ComplexMatrix m2(cplx a, cplx b, cplx c, cplx d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

double diff(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs(ComplexMatrix(a - b)); }

}  // namespace

TEST_CASE("is_hermitian and is_unitary on the worked examples") {
  CHECK(is_hermitian(m2(0, 1, 1, 0), 1e-12));
  CHECK(is_hermitian(ComplexMatrix::Zero(3, 3), 0.0));
  ComplexMatrix kx = ComplexMatrix::Zero(4, 4);
  kx(0, 1) = kx(1, 0) = I1;
  CHECK_FALSE(is_hermitian(kx, 1e-12));

  CHECK(is_unitary(ComplexMatrix::Identity(3, 3), 1e-12));
  CHECK(is_unitary(m2(0, -1, 1, 0), 1e-12));
  CHECK_FALSE(is_unitary(m2(1, 1, 0, -1), 1e-6));
}

TEST_CASE("is_positive_semidefinite") {
  const ComplexMatrix d = m2(1, 1, 0, -1);
  CHECK(is_positive_semidefinite(ComplexMatrix(d.adjoint() * d), 1e-12));
  CHECK(is_positive_semidefinite(ComplexMatrix::Identity(2, 2), 1e-12));
  CHECK_FALSE(is_positive_semidefinite(m2(1, 0, 0, -1), 1e-12));
  CHECK_THROWS_AS(is_positive_semidefinite(m2(0, 1, 0, 0), 1e-12), PreconditionError);
}

TEST_CASE("eig_hermitian matches the examples") {
  auto e = eig_hermitian(m2(0, 1, 1, 0));
  CHECK(e.eigenvalues(0) == doctest::Approx(-1).epsilon(1e-14));
  CHECK(e.eigenvalues(1) == doctest::Approx(1).epsilon(1e-14));

  ComplexMatrix xz = ComplexMatrix::Zero(3, 3);
  xz(0, 1) = I1;
  xz(1, 0) = -I1;
  e = eig_hermitian(xz);
  CHECK(std::abs(e.eigenvalues(0) + 1) < 1e-14);
  CHECK(std::abs(e.eigenvalues(1)) < 1e-14);
  CHECK(std::abs(e.eigenvalues(2) - 1) < 1e-14);

  e = eig_hermitian(ComplexMatrix::Identity(3, 3));
  CHECK((e.eigenvalues.array() - 1).abs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(eig_hermitian(m2(0, 1, 0, 0)), PreconditionError);
}

TEST_CASE("eig_hermitian agrees with Eigen's SelfAdjointEigenSolver on random matrices") {
  std::mt19937_64 rng(11);
  for (int n : {1, 2, 3, 5, 8, 12}) {
    for (int trial = 0; trial < 5; ++trial) {
      const ComplexMatrix h = random_hermitian(n, rng);
      const auto mine = eig_hermitian(h);
      Eigen::SelfAdjointEigenSolver<ComplexMatrix> oracle(h);
      const double scale = std::max(1.0, oracle.eigenvalues().cwiseAbs().maxCoeff());
      CHECK((mine.eigenvalues - oracle.eigenvalues()).cwiseAbs().maxCoeff() <= 1e-12 * scale);
      CHECK(diff(mine.reconstruct(), h) <= 1e-12 * scale);
      CHECK(diff(mine.eigenvectors.adjoint() * mine.eigenvectors, ComplexMatrix::Identity(n, n)) <= 1e-12);
    }
  }
}

TEST_CASE("eig_hermitian handles degenerate spectra") {
  std::mt19937_64 rng(5);
  const ComplexMatrix u = random_unitary(4, rng);
  RealVector d(4);
  d << 2, 2, -1, -1;
  const ComplexMatrix h = u * d.cast<cplx>().asDiagonal() * u.adjoint();
  const auto e = eig_hermitian(h);
  CHECK(std::abs(e.eigenvalues(0) + 1) < 1e-12);
  CHECK(std::abs(e.eigenvalues(3) - 2) < 1e-12);
  CHECK(diff(e.reconstruct(), h) < 1e-12);
}

TEST_CASE("mat_exp examples") {
  CHECK(diff(mat_exp(ComplexMatrix::Zero(3, 3)), ComplexMatrix::Identity(3, 3)) == 0.0);
  // X = -i R'(0) for the 2D rotation
  const ComplexMatrix x = m2(0, I1, -I1, 0);
  CHECK(diff(mat_exp(ComplexMatrix(I1 * (std::numbers::pi / 2) * x)), m2(0, -1, 1, 0)) < 1e-14);
  const double th = 0.37;
  CHECK(diff(mat_exp(ComplexMatrix(I1 * th * m2(1, 0, 0, -1))), m2(std::polar(1.0, th), 0, 0, std::polar(1.0, -th))) <
        1e-15);
}

TEST_CASE("mat_exp agrees with Eigen's MatrixExponential") {
  std::mt19937_64 rng(3);
  for (int n : {2, 3, 4, 6}) {
    for (double scale : {0.01, 1.0, 5.0}) {
      const ComplexMatrix a = scale * random_gaussian_matrix(n, n, rng);
      const ComplexMatrix oracle = a.exp();
      CHECK(diff(mat_exp(a), oracle) <= 1e-12 * std::max(1.0, max_abs(oracle)));
    }
  }
}

TEST_CASE("mat_exp of i times a Hermitian matrix is unitary") {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 10; ++k) CHECK(is_unitary(mat_exp(ComplexMatrix(I1 * random_hermitian(4, rng))), 1e-12));
}

TEST_CASE("mat_log inverts mat_exp and agrees with Eigen") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 8; ++k) {
    const ComplexMatrix a = 0.8 * random_gaussian_matrix(3, 3, rng) / 3.0;
    const ComplexMatrix e = mat_exp(a);
    const ComplexMatrix l = mat_log(e);
    CHECK(diff(l, ComplexMatrix(e.log())) < 1e-10);
    CHECK(diff(mat_exp(l), e) < 1e-12);
  }
  CHECK(diff(mat_log(ComplexMatrix::Identity(2, 2)), ComplexMatrix::Zero(2, 2)) == 0.0);
}

TEST_CASE("psd_sqrt examples") {
  CHECK(diff(psd_sqrt(ComplexMatrix::Identity(2, 2)), ComplexMatrix::Identity(2, 2)) < 1e-15);
  CHECK(diff(psd_sqrt(m2(4, 0, 0, 9)), m2(2, 0, 0, 3)) < 1e-15);
  const ComplexMatrix s = m2(2, 1, 1, 3);
  const ComplexMatrix r = psd_sqrt(s);
  CHECK(diff(r * r, s) < 1e-14);
  CHECK(diff(r, ComplexMatrix(s.sqrt())) < 1e-14);
  CHECK(diff(psd_inverse_sqrt(s) * r, ComplexMatrix::Identity(2, 2)) < 1e-14);
  CHECK_THROWS_AS(psd_sqrt(m2(1, 0, 0, -1)), PreconditionError);
  CHECK_THROWS_AS(psd_inverse_sqrt(m2(1, 0, 0, 0)), PreconditionError);
}

TEST_CASE("non-square and non-finite input is rejected") {
  CHECK_THROWS_AS(mat_exp(ComplexMatrix::Zero(2, 3)), PreconditionError);
  ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(mat_exp(bad), PreconditionError);
  CHECK_THROWS_AS(eig_hermitian(ComplexMatrix::Zero(2, 3)), PreconditionError);
}

TEST_CASE("random_invertible respects the condition bound") {
  std::mt19937_64 rng(1);
  for (int k = 0; k < 50; ++k) {
    const ComplexMatrix s = random_invertible(3, 1e3, rng);
    Eigen::JacobiSVD<ComplexMatrix> svd(s);
    const auto& sv = svd.singularValues();
    CHECK(sv(0) / sv(2) <= 1e3 * (1 + 1e-9));
  }
}

TEST_CASE("exact Gaussian-integer arithmetic") {
  ExactMatrix a(2, 2), b(2, 2);
  a << GaussInt(0), GaussInt(1), GaussInt(1), GaussInt(0);
  b << GaussInt(0), GaussInt(0, -1), GaussInt(0, 1), GaussInt(0);
  const ExactMatrix c = exact_commutator(a, b);
  // [sigma_x, sigma_y] = 2i sigma_z
  CHECK(c(0, 0) == GaussInt(0, 2));
  CHECK(c(1, 1) == GaussInt(0, -2));
  CHECK(exact_trace(c) == GaussInt(0));
  CHECK(exact_is_zero(ExactMatrix(exact_commutator(a, a))));
  CHECK(to_exact(to_complex(b)) == b);
  CHECK_THROWS_AS(to_exact(m2(0.5, 0, 0, 0)), PreconditionError);
  CHECK(exact_adjoint(b) == b);
}

TEST_CASE("exact structure constants of the Pauli basis") {
  std::vector<ExactMatrix> basis(3, ExactMatrix(2, 2));
  basis[0] << GaussInt(0), GaussInt(1), GaussInt(1), GaussInt(0);
  basis[1] << GaussInt(0), GaussInt(0, -1), GaussInt(0, 1), GaussInt(0);
  basis[2] << GaussInt(1), GaussInt(0), GaussInt(0), GaussInt(-1);
  const auto f = exact_structure_constants(basis);
  CHECK(f.at(0, 1, 2) == Rational(2));
  CHECK(f.at(1, 0, 2) == Rational(-2));
  CHECK(f.at(0, 0, 2) == Rational(0));
}

TEST_CASE("matrix JSON round trip is bit exact") {
  std::mt19937_64 rng(77);
  const ComplexMatrix m = random_gaussian_matrix(3, 3, rng);
  const ComplexMatrix back = matrix_from_json(nlohmann::json::parse(matrix_to_json(m).dump()));
  CHECK(back == m);
}

TEST_CASE("matrix parser rejects malformed input") {
  using nlohmann::json;
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"dim": 2, "entries": [[[1,0],[0,0]]]})")), FormatError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"dim": 1, "entries": [[[1,0],[2,0]]]})")), FormatError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"dim": 1, "entries": [[["nan",0]]]})")), FormatError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"entries": []})")), FormatError);
  CHECK(matrix_from_json(json::parse(R"({"dim": 1, "entries": [[[1.5,-2]]]})"))(0, 0) == cplx(1.5, -2));
}

TEST_CASE("file helpers report I/O failures") {
  CHECK_THROWS_AS(read_json_file("/nonexistent/dir/file.json"), std::ios_base::failure);
  CHECK_THROWS_AS(write_text_file("/nonexistent/dir/file.json", "{}"), std::ios_base::failure);
  const auto path = (std::filesystem::temp_directory_path() / "liekit_numkernel_io.json").string();
  write_text_file(path, matrix_to_json(m2(1, I1, -I1, 2)).dump());
  CHECK(matrix_from_json(read_json_file(path)) == m2(1, I1, -I1, 2));
  std::filesystem::remove(path);
}
