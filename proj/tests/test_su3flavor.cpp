#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liekit/su3flavor.hpp"

#include <cmath>
#include <map>
#include <tuple>

using namespace liekit;

namespace {

constexpr cplx I1(0, 1);

}  // namespace

TEST_CASE("Gell-Mann matrices: Hermitian, traceless, tr(l_a l_b) = 2 delta") {
  for (int a = 1; a <= 8; ++a) {
    CHECK(is_hermitian(gell_mann(a), 0.0));
    CHECK(std::abs(gell_mann(a).trace()) < 1e-15);
    for (int b = 1; b <= 8; ++b)
      CHECK(std::abs((gell_mann(a) * gell_mann(b)).trace() - (a == b ? 2.0 : 0.0)) < 1e-14);
  }
  CHECK(std::abs(gell_mann(8)(2, 2) + 2 / std::sqrt(3.0)) < 1e-15);
  CHECK_THROWS_AS(gell_mann(0), std::out_of_range);
  CHECK_THROWS_AS(gell_mann(9), std::out_of_range);
}

TEST_CASE("su(3) constants against the standard table, by trace projection") {
  // f_abc = -i/4 tr([l_a, l_b] l_c), the textbook oracle
  auto oracle = [](int a, int b, int c) {
    const ComplexMatrix x = gell_mann(a), y = gell_mann(b);
    return (-I1 / 4.0 * ((x * y - y * x) * gell_mann(c)).trace()).real();
  };
  const double h = std::sqrt(3.0) / 2;
  const std::map<std::tuple<int, int, int>, double> table = {
      {{1, 2, 3}, 1.0}, {{1, 4, 7}, 0.5}, {{1, 5, 6}, -0.5}, {{2, 4, 6}, 0.5}, {{2, 5, 7}, 0.5},
      {{3, 4, 5}, 0.5}, {{3, 6, 7}, -0.5}, {{4, 5, 8}, h}, {{6, 7, 8}, h}};
  for (const auto& [k, v] : table) CHECK(oracle(std::get<0>(k), std::get<1>(k), std::get<2>(k)) == doctest::Approx(v));

  const StructureConstants f = su3_structure_constants();
  CHECK(f.residual < 1e-12);
  for (int a = 1; a <= 8; ++a)
    for (int b = 1; b <= 8; ++b)
      for (int c = 1; c <= 8; ++c) {
        CHECK(std::abs(f.at(a - 1, b - 1, c - 1) - oracle(a, b, c)) < 1e-12);
        CHECK(std::abs(f.at(a - 1, b - 1, c - 1) + f.at(b - 1, a - 1, c - 1)) < 1e-14);
      }
}

TEST_CASE("det exp(itX) = 1 for traceless X, not otherwise") {
  const DeterminantReport r = verify_traceless_determinant_identity(gell_mann_basis(), 50, 1);
  CHECK(r.max_deviation < 1e-12);
  ComplexMatrix p = ComplexMatrix::Zero(3, 3);
  p(0, 0) = 1;
  const DeterminantReport bad = verify_traceless_determinant_identity(GeneratorBasis("p", {p}), 20, 1);
  CHECK(bad.max_deviation > 0.1);
  CHECK(bad.worst_generator == 0);
  // det e^A = e^{tr A}
  CHECK(std::abs(mat_exp(ComplexMatrix(I1 * 0.7 * p)).determinant() - std::exp(I1 * 0.7)) < 1e-14);
}

TEST_CASE("fundamental weights") {
  const auto w = fundamental_weights();
  REQUIRE(w.size() == 3);
  const double r3 = std::sqrt(3.0);
  CHECK(std::abs(w[0].i3 - 0.5) < 1e-15);
  CHECK(std::abs(w[0].x8 - r3 / 6) < 1e-15);
  CHECK(std::abs(w[1].i3 + 0.5) < 1e-15);
  CHECK(std::abs(w[1].x8 - r3 / 6) < 1e-15);
  CHECK(std::abs(w[2].i3) < 1e-15);
  CHECK(std::abs(w[2].x8 + r3 / 3) < 1e-15);
  // weights are the diagonals of lambda_3/2 and lambda_8/2
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(w[k].i3 - gell_mann(3)(k, k).real() / 2) < 1e-15);
    CHECK(std::abs(w[k].x8 - gell_mann(8)(k, k).real() / 2) < 1e-15);
  }
}

TEST_CASE("weights CSV") {
  const std::string csv = weights_csv(fundamental_weights());
  CHECK(csv.rfind("label,i3,x8\n", 0) == 0);
  int lines = 0;
  for (char c : csv) lines += c == '\n';
  CHECK(lines == 4);
  const std::string with_y = weights_csv(fundamental_weights(), true);
  CHECK(with_y.rfind("label,i3,x8,y\n", 0) == 0);
}

TEST_CASE("hypercharge Y = B + S") {
  const auto s = hypercharge(Rational(1, 3), Rational(-1));
  CHECK(s.hypercharge == Rational(-2, 3));
  CHECK(hypercharge(Rational(1, 3), Rational(0)).hypercharge == Rational(1, 3));
  CHECK(hypercharge(Rational(1), Rational(0)).hypercharge == Rational(1));
}
