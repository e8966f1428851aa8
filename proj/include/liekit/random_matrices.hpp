#pragma once

// Seeded random matrices for property checks. All generators take the engine
// by reference so a single seed drives a whole run.

#include "liekit/numkernel.hpp"

#include <cmath>
#include <random>

namespace liekit {

template <typename Rng>
ComplexMatrix random_gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = cplx(re, im);
    }
  return m;
}

/// Haar-distributed unitary: QR of a complex Gaussian matrix with R's diagonal phases removed.
template <typename Rng>
ComplexMatrix random_unitary(Eigen::Index n, Rng& rng) {
  const ComplexMatrix z = random_gaussian_matrix(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    const cplx d = r(k, k);
    const double a = std::abs(d);
    if (a > 0) q.col(k) *= d / a;
  }
  return q;
}

template <typename Rng>
ComplexMatrix random_hermitian(Eigen::Index n, Rng& rng) {
  const ComplexMatrix z = random_gaussian_matrix(n, n, rng);
  return (z + z.adjoint()) / 2.0;
}

template <typename Rng>
ComplexMatrix random_invertible(Eigen::Index n, double max_condition, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const ComplexMatrix u = random_unitary(n, rng);
  const ComplexMatrix v = random_unitary(n, rng);
  RealVector s(n);
  const double log_max = std::log(max_condition);
  for (Eigen::Index k = 0; k < n; ++k) s(k) = std::exp(unit(rng) * log_max);
  return u * s.cast<cplx>().asDiagonal() * v.adjoint();
}

}  // namespace liekit
