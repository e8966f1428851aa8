#include "liekit/lorentz.hpp"

#include <cmath>

namespace liekit {

namespace {

constexpr cplx I1(0, 1);

int axis_index(Axis a) { return static_cast<int>(a); }

double eps(int i, int j, int k) { return levi_civita(i + 1, j + 1, k + 1); }

double sign(Convention c) { return c == Convention::printed ? 1.0 : -1.0; }

}  // namespace

ComplexMatrix minkowski_metric() {
  ComplexMatrix eta = ComplexMatrix::Identity(4, 4);
  eta(0, 0) = -1.0;
  return eta;
}

double lorentz_residual(const ComplexMatrix& l) {
  if (l.rows() != 4 || l.cols() != 4) throw PreconditionError("lorentz: expected a 4x4 matrix");
  const ComplexMatrix eta = minkowski_metric();
  return max_abs(ComplexMatrix(l * eta * l.transpose() - eta));
}

bool verify_lorentz(const ComplexMatrix& l, double tol) {
  if (l.rows() != 4 || l.cols() != 4) throw PreconditionError("verify_lorentz: expected a 4x4 matrix");
  if (l.imag().cwiseAbs().maxCoeff() > tol) throw PreconditionError("verify_lorentz: entries must be real");
  return lorentz_residual(l) <= tol;
}

LorentzClassification classify(const ComplexMatrix& l, double tol) {
  if (l.rows() != 4 || l.cols() != 4) throw PreconditionError("classify: expected a 4x4 matrix");
  LorentzClassification out;
  out.det = l.real().determinant();
  out.lambda00 = l(0, 0).real();
  if (std::abs(out.lambda00) < 1.0 - tol)
    throw PreconditionError("classify: |L^0_0| < 1, not a Lorentz transformation");
  out.det_sign = out.det > 0 ? 1 : -1;
  out.time_sign = out.lambda00 > 0 ? 1 : -1;
  if (out.det_sign > 0) out.category = out.time_sign > 0 ? 1 : 3;
  else out.category = out.time_sign > 0 ? 2 : 4;
  return out;
}

ComplexMatrix parity_tp() {
  ComplexMatrix t = -ComplexMatrix::Identity(4, 4);
  t(0, 0) = 1.0;
  return t;
}

ComplexMatrix time_reversal_tt() { return minkowski_metric(); }

const char* to_string(Convention c) { return c == Convention::printed ? "printed" : "normalized"; }

ExactMatrix exact_lorentz_generator(GeneratorKind kind, Axis axis) {
  ExactMatrix m = ExactMatrix::Constant(4, 4, GaussInt(0));
  const int a = axis_index(axis) + 1;
  if (kind == GeneratorKind::rotation) {
    m.block(1, 1, 3, 3) = exact_so3_generator(axis);
  } else {
    m(0, a) = kI;
    m(a, 0) = kI;
  }
  return m;
}

ComplexMatrix lorentz_generator(GeneratorKind kind, Axis axis, Convention c) {
  return sign(c) * to_complex(exact_lorentz_generator(kind, axis));
}

ComplexMatrix printed_rotation_generator_x_verbatim() {
  ComplexMatrix m = lorentz_generator(GeneratorKind::rotation, Axis::x);
  m(1, 1) = 1.0;
  return m;
}

Triple rotation_generators(Convention c) {
  return {lorentz_generator(GeneratorKind::rotation, Axis::x, c), lorentz_generator(GeneratorKind::rotation, Axis::y, c),
          lorentz_generator(GeneratorKind::rotation, Axis::z, c)};
}

Triple boost_generators(Convention c) {
  return {lorentz_generator(GeneratorKind::boost, Axis::x, c), lorentz_generator(GeneratorKind::boost, Axis::y, c),
          lorentz_generator(GeneratorKind::boost, Axis::z, c)};
}

GeneratorBasis lorentz_basis(Convention c) {
  const Triple j = rotation_generators(c);
  const Triple k = boost_generators(c);
  return GeneratorBasis(std::string("lorentz-") + to_string(c), {j[0], j[1], j[2], k[0], k[1], k[2]});
}

ComplexMatrix boost(Axis axis, double theta) {
  return mat_exp(cplx(0, theta) * lorentz_generator(GeneratorKind::boost, axis));
}

ComplexMatrix lorentz_rotation(Axis axis, double theta) {
  return mat_exp(cplx(0, theta) * lorentz_generator(GeneratorKind::rotation, axis));
}

double coordinate_speed(const ComplexMatrix& l, Axis axis) {
  const ComplexVector u = l.col(0);
  return u(axis_index(axis) + 1).real() / u(0).real();
}

LorentzAlgebraResiduals lorentz_algebra_residuals(const Triple& j, const Triple& k) {
  LorentzAlgebraResiduals r;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      ComplexMatrix jj = commutator(j[a], j[b]);
      ComplexMatrix jk = commutator(j[a], k[b]);
      ComplexMatrix kk = commutator(k[a], k[b]);
      for (int c = 0; c < 3; ++c) {
        const double e = eps(a, b, c);
        if (e == 0) continue;
        jj -= I1 * e * j[c];
        jk -= I1 * e * k[c];
        kk += I1 * e * j[c];
      }
      r.jj = std::max(r.jj, max_abs(jj));
      r.jk = std::max(r.jk, max_abs(jk));
      r.kk = std::max(r.kk, max_abs(kk));
    }
  return r;
}

NDecompositionResiduals n_decomposition(const Triple& j, const Triple& k) {
  Triple np, nm;
  for (int a = 0; a < 3; ++a) {
    np[a] = j[a] + I1 * k[a];
    nm[a] = j[a] - I1 * k[a];
  }
  NDecompositionResiduals r;
  for (int a = 0; a < 3; ++a) {
    r.sum_identity = std::max(r.sum_identity, max_abs(ComplexMatrix(np[a] + nm[a] - 2.0 * j[a])));
    for (int b = 0; b < 3; ++b) {
      ComplexMatrix pp = commutator(np[a], np[b]);
      ComplexMatrix mm = commutator(nm[a], nm[b]);
      for (int c = 0; c < 3; ++c) {
        const double e = eps(a, b, c);
        if (e == 0) continue;
        pp -= 2.0 * I1 * e * np[c];
        mm -= 2.0 * I1 * e * nm[c];
      }
      r.plus_plus = std::max(r.plus_plus, max_abs(pp));
      r.minus_minus = std::max(r.minus_minus, max_abs(mm));
      r.minus_plus = std::max(r.minus_plus, max_abs(commutator(nm[a], np[b])));
    }
  }
  return r;
}

const char* to_string(Handedness h) { return h == Handedness::left ? "left" : "right"; }

ChiralRep chiral_rep(Handedness h) {
  const double s = h == Handedness::left ? -1.0 : 1.0;
  ChiralRep rep;
  rep.handedness = h;
  for (int a = 0; a < 3; ++a) {
    const ComplexMatrix sigma = pauli(kAxes[a]);
    rep.j[a] = sigma / 2.0;
    rep.k[a] = s * I1 * sigma / 2.0;
  }
  return rep;
}

ChiralRep parity_flip(const ChiralRep& rep) {
  ChiralRep out = rep;
  out.handedness = rep.handedness == Handedness::left ? Handedness::right : Handedness::left;
  for (auto& k : out.k) k = -k;
  return out;
}

double vanishing_n_residual(const ChiralRep& rep) {
  const double s = rep.handedness == Handedness::left ? -1.0 : 1.0;
  double r = 0;
  for (int a = 0; a < 3; ++a) r = std::max(r, max_abs(ComplexMatrix(rep.j[a] + s * I1 * rep.k[a])));
  return r;
}

ComplexMatrix embed_affine(const ComplexMatrix& lorentz4) {
  if (lorentz4.rows() != 4 || lorentz4.cols() != 4) throw PreconditionError("embed_affine: expected 4x4");
  ComplexMatrix m = ComplexMatrix::Zero(5, 5);
  m.topLeftCorner(4, 4) = lorentz4;
  return m;
}

ComplexMatrix translation(const Eigen::Vector4d& a) {
  ComplexMatrix m = ComplexMatrix::Identity(5, 5);
  for (int mu = 0; mu < 4; ++mu) m(mu, 4) = a(mu);
  return m;
}

PoincareAffineRep poincare_affine(Convention c) {
  PoincareAffineRep rep;
  const Triple j = rotation_generators(c);
  const Triple k = boost_generators(c);
  for (int a = 0; a < 3; ++a) {
    rep.j[a] = embed_affine(j[a]);
    rep.k[a] = embed_affine(k[a]);
  }
  for (int mu = 0; mu < 4; ++mu) {
    rep.p[mu] = ComplexMatrix::Zero(5, 5);
    rep.p[mu](mu, 4) = -I1;
  }
  return rep;
}

PoincareResiduals poincare_commutators(const PoincareAffineRep& rep) {
  PoincareResiduals r;
  const auto& pt = rep.p[0];
  for (int mu = 0; mu < 4; ++mu) {
    r.p_nilpotent = std::max(r.p_nilpotent, max_abs(ComplexMatrix(rep.p[mu] * rep.p[mu])));
    for (int nu = 0; nu < 4; ++nu) r.pp = std::max(r.pp, max_abs(commutator(rep.p[mu], rep.p[nu])));
  }
  for (int a = 0; a < 3; ++a) {
    r.jpt = std::max(r.jpt, max_abs(commutator(rep.j[a], pt)));
    r.kpt = std::max(r.kpt, max_abs(ComplexMatrix(commutator(rep.k[a], pt) + I1 * rep.p[a + 1])));
    for (int b = 0; b < 3; ++b) {
      ComplexMatrix jp = commutator(rep.j[a], rep.p[b + 1]);
      for (int c = 0; c < 3; ++c) jp -= I1 * eps(a, b, c) * rep.p[c + 1];
      r.jp = std::max(r.jp, max_abs(jp));

      const double d = kronecker_delta(a, b);
      r.jk_delta_verbatim =
          std::max(r.jk_delta_verbatim, max_abs(ComplexMatrix(commutator(rep.j[a], rep.k[b]) - I1 * d * pt)));
      const ComplexMatrix kp = commutator(rep.k[a], rep.p[b + 1]);
      r.kp_delta_plus = std::max(r.kp_delta_plus, max_abs(ComplexMatrix(kp - I1 * d * pt)));
      r.kp_delta_minus = std::max(r.kp_delta_minus, max_abs(ComplexMatrix(kp + I1 * d * pt)));
    }
  }
  return r;
}

}  // namespace liekit
