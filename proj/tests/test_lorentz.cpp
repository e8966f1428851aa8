#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "liekit/lorentz.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace liekit;

namespace {

constexpr cplx I1(0, 1);

double diff(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs(ComplexMatrix(a - b)); }

ComplexMatrix br(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

// textbook boost along x: t' = cosh t - sinh x with the printed sign
ComplexMatrix boost_x_closed_form(double th) {
  ComplexMatrix m = ComplexMatrix::Identity(4, 4);
  m(0, 0) = m(1, 1) = std::cosh(th);
  m(0, 1) = m(1, 0) = -std::sinh(th);
  return m;
}

}  // namespace

TEST_CASE("metric and discrete transformations") {
  const ComplexMatrix eta = minkowski_metric();
  CHECK(eta(0, 0) == cplx(-1.0));
  CHECK(eta(3, 3) == cplx(1.0));
  CHECK(lorentz_residual(parity_tp()) == 0.0);
  CHECK(lorentz_residual(time_reversal_tt()) == 0.0);
  CHECK(verify_lorentz(ComplexMatrix::Identity(4, 4)));
  ComplexMatrix scale = 2.0 * ComplexMatrix::Identity(4, 4);
  CHECK_FALSE(verify_lorentz(scale));
  CHECK_THROWS_AS(verify_lorentz(ComplexMatrix::Identity(3, 3)), PreconditionError);
  CHECK_THROWS_AS(verify_lorentz(ComplexMatrix(I1 * ComplexMatrix::Identity(4, 4))), PreconditionError);
}

TEST_CASE("classification of the four components") {
  const ComplexMatrix tp = parity_tp(), tt = time_reversal_tt();
  CHECK(classify(ComplexMatrix::Identity(4, 4)).category == 1);
  CHECK(classify(tp).category == 2);
  CHECK(classify(tp * tt).category == 3);
  CHECK(classify(tt).category == 4);
  const auto c = classify(ComplexMatrix(tt * liekit::boost(Axis::y, 0.4)));
  CHECK(c.det_sign == -1);
  CHECK(c.time_sign == -1);
  CHECK(c.lambda00 == doctest::Approx(-std::cosh(0.4)));
}

TEST_CASE("boosts agree with the closed form and preserve the metric") {
  for (double th : {-2.0, -0.5, 0.3, std::numbers::pi / 2}) {
    CHECK(diff(liekit::boost(Axis::x, th), boost_x_closed_form(th)) < 1e-13 * std::cosh(th));
    for (Axis ax : kAxes) {
      CHECK(lorentz_residual(liekit::boost(ax, th)) < 1e-12 * std::cosh(th) * std::cosh(th));
      CHECK(lorentz_residual(lorentz_rotation(ax, th)) < 1e-14);
      CHECK(classify(liekit::boost(ax, th)).category == 1);
    }
  }
  // composition of collinear boosts adds rapidities
  CHECK(diff(liekit::boost(Axis::z, 0.3) * liekit::boost(Axis::z, 0.5), liekit::boost(Axis::z, 0.8)) < 1e-14);
}

TEST_CASE("coordinate speed of boost(x, pi/2)") {
  const ComplexMatrix b = liekit::boost(Axis::x, std::numbers::pi / 2);
  CHECK(coordinate_speed(b, Axis::x) == doctest::Approx(-0.917152335667274).epsilon(1e-12));
  CHECK(std::abs(coordinate_speed(b, Axis::y)) < 1e-15);
}

TEST_CASE("printed generators: finite differences of the boost and rotation curves") {
  const double h = 1e-6;
  for (Axis ax : kAxes) {
    const ComplexMatrix dk = (liekit::boost(ax, h) - liekit::boost(ax, -h)) / (2 * h);
    CHECK(diff(ComplexMatrix(-I1 * dk), lorentz_generator(GeneratorKind::boost, ax)) < 1e-9);
    const ComplexMatrix dj = (lorentz_rotation(ax, h) - lorentz_rotation(ax, -h)) / (2 * h);
    CHECK(diff(ComplexMatrix(-I1 * dj), lorentz_generator(GeneratorKind::rotation, ax)) < 1e-9);
    CHECK(diff(lorentz_generator(GeneratorKind::boost, ax, Convention::normalized),
               ComplexMatrix(-lorentz_generator(GeneratorKind::boost, ax))) == 0.0);
    CHECK(to_complex(exact_lorentz_generator(GeneratorKind::boost, ax)) == lorentz_generator(GeneratorKind::boost, ax));
  }
  CHECK(printed_rotation_generator_x_verbatim()(1, 1) == cplx(1.0));
}

TEST_CASE("Lorentz algebra: brute-force brackets in the normalized convention") {
  const Triple j = rotation_generators(Convention::normalized), k = boost_generators(Convention::normalized);
  double worst = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      ComplexMatrix jj = br(j[a], j[b]), jk = br(j[a], k[b]), kk = br(k[a], k[b]);
      for (int c = 0; c < 3; ++c) {
        const double e = levi_civita(a + 1, b + 1, c + 1);
        jj -= I1 * e * j[c];
        jk -= I1 * e * k[c];
        kk += I1 * e * j[c];
      }
      worst = std::max({worst, max_abs(jj), max_abs(jk), max_abs(kk)});
    }
  CHECK(worst == 0.0);
  CHECK(lorentz_algebra_residuals(j, k).max() == 0.0);
  // the printed signs are off by an overall sign of J and K
  CHECK(lorentz_algebra_residuals(rotation_generators(), boost_generators()).max() == doctest::Approx(2.0));
}

TEST_CASE("N+- decomposition") {
  const auto n = n_decomposition(rotation_generators(Convention::normalized), boost_generators(Convention::normalized));
  CHECK(n.plus_plus < 1e-14);
  CHECK(n.minus_minus < 1e-14);
  CHECK(n.minus_plus < 1e-14);
  CHECK(n.sum_identity < 1e-14);
}

TEST_CASE("chiral representations and parity") {
  const ChiralRep l = chiral_rep(Handedness::left), r = chiral_rep(Handedness::right);
  CHECK(vanishing_n_residual(l) == 0.0);
  CHECK(vanishing_n_residual(r) == 0.0);
  const ChiralRep pl = parity_flip(l);
  CHECK(pl.handedness == Handedness::right);
  for (int a = 0; a < 3; ++a) {
    CHECK(pl.j[a] == l.j[a]);
    CHECK(pl.k[a] == r.k[a]);
  }
  // the chiral generators satisfy the same algebra
  CHECK(lorentz_algebra_residuals(l.j, l.k).max() < 1e-15);
  CHECK(lorentz_algebra_residuals(r.j, r.k).max() < 1e-15);
}

TEST_CASE("parity conjugation in exact arithmetic") {
  const ExactMatrix tp = to_exact(parity_tp());
  for (Axis ax : kAxes) {
    const ExactMatrix j = exact_lorentz_generator(GeneratorKind::rotation, ax);
    const ExactMatrix k = exact_lorentz_generator(GeneratorKind::boost, ax);
    CHECK(ExactMatrix(tp * j * tp.transpose()) == j);
    CHECK(ExactMatrix(tp * k * tp.transpose()) == ExactMatrix(-k));
  }
}

TEST_CASE("random products stay in the proper orthochronous component") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-0.2, 0.2);
  for (int n = 0; n < 20; ++n) {
    ComplexMatrix l = ComplexMatrix::Identity(4, 4);
    for (int k = 0; k < 50; ++k)
      l = l * (k % 2 ? liekit::boost(kAxes[k % 3], u(rng)) : lorentz_rotation(kAxes[(k + 1) % 3], u(rng)));
    CHECK(lorentz_residual(l) / std::max(1.0, max_abs(l) * max_abs(l)) < 1e-12);
    CHECK(classify(l).category == 1);
  }
}

TEST_CASE("Poincare affine representation") {
  const PoincareAffineRep rep = poincare_affine(Convention::normalized);
  const PoincareResiduals r = poincare_commutators(rep);
  CHECK(r.jp < 1e-15);
  CHECK(r.pp < 1e-15);
  CHECK(r.jpt < 1e-15);
  CHECK(r.kpt < 1e-15);
  CHECK(r.p_nilpotent == 0.0);
  CHECK(r.jk_delta_verbatim == doctest::Approx(1.0));
  CHECK(r.kp_delta_minus < 1e-15);
  CHECK(poincare_commutators(poincare_affine(Convention::printed)).kp_delta_plus < 1e-15);

  // brute force: [K_x, P_t] = -i P_x
  CHECK(diff(br(rep.k[0], rep.p[0]), ComplexMatrix(-I1 * rep.p[1])) < 1e-15);

  const Eigen::Vector4d a(1, 2, 3, 4);
  const ComplexMatrix t = translation(a);
  Eigen::VectorXcd x(5);
  x << 0.5, -1, 0, 2, 1;
  const Eigen::VectorXcd y = t * x;
  for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(y(mu) - (x(mu) + a(mu))) < 1e-15);
  // exponentiating an embedded generator gives the Lorentz block plus a fixed homogeneous coordinate
  const ComplexMatrix kx = lorentz_generator(GeneratorKind::boost, Axis::x);
  const ComplexMatrix e = embed_affine(kx);
  CHECK(e(4, 4) == cplx(0.0));
  const ComplexMatrix g = mat_exp(ComplexMatrix(I1 * 0.2 * e));
  CHECK(std::abs(g(4, 4) - 1.0) < 1e-15);
  CHECK(diff(g.topLeftCorner(4, 4), liekit::boost(Axis::x, 0.2)) < 1e-14);
}
