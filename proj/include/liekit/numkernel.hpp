#pragma once

// Dense complex-matrix kernel shared by every module: predicates, a cyclic
// Jacobi Hermitian eigensolver, the matrix exponential and logarithm, and the
// PSD square root. Everything is templated on the real scalar type; the rest
// of the library instantiates it with double.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace liekit {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;
using RealVector = RVector<double>;
using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-10;

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an iterative kernel fails to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw PreconditionError(std::string(what) + ": matrix must be square and non-empty");
}

/// Largest absolute entry; 0 for an empty matrix.
template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0;
  return m.cwiseAbs().maxCoeff();
}

template <typename DerivedA, typename DerivedB>
typename DerivedA::PlainObject commutator(const Eigen::MatrixBase<DerivedA>& a,
                                          const Eigen::MatrixBase<DerivedB>& b) {
  return a * b - b * a;
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto v = m(i, j);
      if (!std::isfinite(std::real(v)) || !std::isfinite(std::imag(v))) return false;
    }
  return true;
}

template <typename Real>
CMatrix<Real> identity(Eigen::Index n) {
  return CMatrix<Real>::Identity(n, n);
}

/// Elementwise comparison within an absolute tolerance.
template <typename DerivedA, typename DerivedB>
bool approx_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                  typename DerivedA::RealScalar tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= tol;
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, typename Derived::RealScalar tol) {
  require_square(m, "is_hermitian");
  return max_abs(m - m.adjoint()) <= tol;
}

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, typename Derived::RealScalar tol) {
  require_square(m, "is_unitary");
  using Plain = typename Derived::PlainObject;
  return max_abs(m * m.adjoint() - Plain::Identity(m.rows(), m.cols())) <= tol;
}

template <typename Real>
struct HermitianEigenDecomposition {
  RVector<Real> eigenvalues;   // ascending
  CMatrix<Real> eigenvectors;  // orthonormal columns

  CMatrix<Real> reconstruct() const {
    return eigenvectors * eigenvalues.template cast<std::complex<Real>>().asDiagonal() *
           eigenvectors.adjoint();
  }
};

namespace detail {

template <typename Real>
Real hermitian_scale(const CMatrix<Real>& m) {
  return std::max<Real>(Real(1), max_abs(m));
}

template <typename Real>
Real off_diagonal_norm(const CMatrix<Real>& a) {
  Real s = 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace detail

/// Cyclic Jacobi diagonalisation of a Hermitian matrix.
///
/// Each (p, q) step first removes the phase of a_pq with a diagonal unitary,
/// then applies the real rotation that annihilates the now-real pivot. Sweeps
/// run in fixed row-major pivot order, so the result is deterministic.
/// Throws PreconditionError when |M - M^dagger| exceeds tol relative to max(1, max|M|).
template <typename Derived>
HermitianEigenDecomposition<typename Derived::RealScalar> eig_hermitian(
    const Eigen::MatrixBase<Derived>& m,
    typename Derived::RealScalar tol = typename Derived::RealScalar(kDefaultTol)) {
  using Real = typename Derived::RealScalar;
  using C = std::complex<Real>;
  require_square(m, "eig_hermitian");
  CMatrix<Real> a = m.template cast<C>();
  if (!all_finite(a)) throw PreconditionError("eig_hermitian: non-finite entry");
  const Real scale = detail::hermitian_scale(a);
  if (max_abs(CMatrix<Real>(a - a.adjoint())) > tol * scale)
    throw PreconditionError("eig_hermitian: matrix is not Hermitian");
  a = (a + a.adjoint()) / Real(2);

  const Eigen::Index n = a.rows();
  CMatrix<Real> v = CMatrix<Real>::Identity(n, n);
  const Real eps = std::numeric_limits<Real>::epsilon();
  const Real frob = std::max(a.norm(), std::numeric_limits<Real>::min());

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    if (detail::off_diagonal_norm(a) <= eps * frob) break;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Real b = std::abs(a(p, q));
        if (b <= std::numeric_limits<Real>::min()) continue;
        const C phase = a(p, q) / b;  // e^{i phi}
        const Real app = std::real(a(p, p));
        const Real aqq = std::real(a(q, q));
        const Real theta = (aqq - app) / (Real(2) * b);
        const Real t = (theta >= 0 ? Real(1) : Real(-1)) /
                       (std::abs(theta) + std::sqrt(theta * theta + Real(1)));
        const Real c = Real(1) / std::sqrt(t * t + Real(1));
        const Real s = t * c;
        // G = diag(1, conj(phase)) * [[c, s], [-s, c]]
        const C g_pp = c;
        const C g_pq = s;
        const C g_qp = -s * std::conj(phase);
        const C g_qq = c * std::conj(phase);
        for (Eigen::Index k = 0; k < n; ++k) {
          const C akp = a(k, p);
          const C akq = a(k, q);
          a(k, p) = akp * g_pp + akq * g_qp;
          a(k, q) = akp * g_pq + akq * g_qq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const C apk = a(p, k);
          const C aqk = a(q, k);
          a(p, k) = std::conj(g_pp) * apk + std::conj(g_qp) * aqk;
          a(q, k) = std::conj(g_pq) * apk + std::conj(g_qq) * aqk;
        }
        a(p, q) = C(0);
        a(q, p) = C(0);
        a(p, p) = C(std::real(a(p, p)));
        a(q, q) = C(std::real(a(q, q)));
        for (Eigen::Index k = 0; k < n; ++k) {
          const C vkp = v(k, p);
          const C vkq = v(k, q);
          v(k, p) = vkp * g_pp + vkq * g_qp;
          v(k, q) = vkp * g_pq + vkq * g_qq;
        }
      }
    }
  }
  if (sweep == kMaxSweeps) throw ConvergenceError("eig_hermitian: Jacobi sweeps did not converge");

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return std::real(a(x, x)) < std::real(a(y, y));
  });
  HermitianEigenDecomposition<Real> out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = std::real(a(src, src));
    out.eigenvectors.col(k) = v.col(src);
  }
  return out;
}

/// True iff M is Hermitian within tol and its smallest eigenvalue is >= -tol.
template <typename Derived>
bool is_positive_semidefinite(const Eigen::MatrixBase<Derived>& m,
                              typename Derived::RealScalar tol) {
  require_square(m, "is_positive_semidefinite");
  if (!is_hermitian(m, tol))
    throw PreconditionError("is_positive_semidefinite: matrix is not Hermitian");
  const auto eig = eig_hermitian(m, std::max(tol, typename Derived::RealScalar(kDefaultTol)));
  return eig.eigenvalues.minCoeff() >= -tol;
}

namespace detail {

template <typename Real>
Real one_norm(const CMatrix<Real>& m) {
  if (m.size() == 0) return 0;
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

}  // namespace detail

/// Matrix exponential by scaling and squaring with a truncated Taylor series.
/// The argument is scaled so its 1-norm is at most 1/2 before summing.
template <typename Derived>
CMatrix<typename Derived::RealScalar> mat_exp(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Derived::RealScalar;
  require_square(m, "mat_exp");
  CMatrix<Real> a = m.template cast<std::complex<Real>>();
  if (!all_finite(a)) throw PreconditionError("mat_exp: non-finite entry");
  const Eigen::Index n = a.rows();

  const Real norm = detail::one_norm(a);
  int squarings = 0;
  if (norm > Real(0.5)) squarings = static_cast<int>(std::ceil(std::log2(norm / Real(0.5))));
  a /= std::ldexp(Real(1), squarings);

  const Real eps = std::numeric_limits<Real>::epsilon();
  CMatrix<Real> sum = CMatrix<Real>::Identity(n, n);
  CMatrix<Real> term = CMatrix<Real>::Identity(n, n);
  for (int k = 1; k <= 60; ++k) {
    term = (term * a) / Real(k);
    sum += term;
    if (detail::one_norm(term) <= eps * Real(0.01)) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/// Principal matrix logarithm by inverse scaling and squaring: repeated
/// Denman-Beavers square roots bring the argument near the identity, then a
/// Mercator series is summed. Requires no eigenvalues on the closed negative
/// real axis; throws ConvergenceError otherwise.
template <typename Derived>
CMatrix<typename Derived::RealScalar> mat_log(const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Derived::RealScalar;
  require_square(m, "mat_log");
  CMatrix<Real> a = m.template cast<std::complex<Real>>();
  if (!all_finite(a)) throw PreconditionError("mat_log: non-finite entry");
  const Eigen::Index n = a.rows();
  const CMatrix<Real> id = CMatrix<Real>::Identity(n, n);
  const Real eps = std::numeric_limits<Real>::epsilon();

  int roots = 0;
  while (detail::one_norm(CMatrix<Real>(a - id)) > Real(0.25)) {
    if (++roots > 64) throw ConvergenceError("mat_log: square-root reduction did not converge");
    CMatrix<Real> y = a;
    CMatrix<Real> z = id;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      Eigen::PartialPivLU<CMatrix<Real>> ly(y), lz(z);
      const CMatrix<Real> yn = (y + lz.inverse()) / Real(2);
      const CMatrix<Real> zn = (z + ly.inverse()) / Real(2);
      const Real delta = detail::one_norm(CMatrix<Real>(yn - y));
      y = yn;
      z = zn;
      if (!all_finite(y)) break;
      if (delta <= Real(10) * eps * std::max(Real(1), detail::one_norm(y))) {
        converged = true;
        break;
      }
    }
    if (!converged) throw ConvergenceError("mat_log: Denman-Beavers iteration failed");
    a = y;
  }

  const CMatrix<Real> x = a - id;
  CMatrix<Real> sum = CMatrix<Real>::Zero(n, n);
  CMatrix<Real> power = id;
  for (int k = 1; k <= 200; ++k) {
    power = power * x;
    const CMatrix<Real> term = power / Real(k);
    if (k % 2 == 1)
      sum += term;
    else
      sum -= term;
    if (detail::one_norm(term) <= eps * Real(0.01)) break;
  }
  return (sum * std::ldexp(Real(1), roots)).eval();
}

/// Hermitian PSD square root R with R*R = M. Eigenvalues in [-tol*scale, 0) are
/// clamped to zero; anything more negative is an error.
template <typename Derived>
CMatrix<typename Derived::RealScalar> psd_sqrt(const Eigen::MatrixBase<Derived>& m,
                                       typename Derived::RealScalar tol =
                                           typename Derived::RealScalar(kDefaultTol)) {
  using Real = typename Derived::RealScalar;
  using C = std::complex<Real>;
  const auto eig = eig_hermitian(m, tol);
  const Real scale = std::max<Real>(Real(1), eig.eigenvalues.cwiseAbs().maxCoeff());
  RVector<Real> roots(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < roots.size(); ++k) {
    const Real w = eig.eigenvalues(k);
    if (w < -tol * scale) throw PreconditionError("psd_sqrt: matrix has a negative eigenvalue");
    roots(k) = std::sqrt(std::max(w, Real(0)));
  }
  return eig.eigenvectors * roots.template cast<C>().asDiagonal() * eig.eigenvectors.adjoint();
}

/// Inverse of the PSD square root for a positive definite M. Throws when the
/// smallest eigenvalue is below tol times the largest.
template <typename Derived>
CMatrix<typename Derived::RealScalar> psd_inverse_sqrt(const Eigen::MatrixBase<Derived>& m,
                                               typename Derived::RealScalar tol =
                                                   typename Derived::RealScalar(kDefaultTol)) {
  using Real = typename Derived::RealScalar;
  using C = std::complex<Real>;
  const auto eig = eig_hermitian(m, tol);
  const Real top = eig.eigenvalues.cwiseAbs().maxCoeff();
  if (!(eig.eigenvalues.minCoeff() > tol * std::max(top, Real(1))))
    throw PreconditionError("psd_inverse_sqrt: matrix is singular or indefinite");
  RVector<Real> inv(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < inv.size(); ++k) inv(k) = Real(1) / std::sqrt(eig.eigenvalues(k));
  return eig.eigenvectors * inv.template cast<C>().asDiagonal() * eig.eigenvectors.adjoint();
}

}  // namespace liekit
