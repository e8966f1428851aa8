#include "liekit/exact.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace liekit {

ExactMatrix to_exact(const ComplexMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double re = std::round(m(i, j).real());
      const double im = std::round(m(i, j).imag());
      if (std::abs(re - m(i, j).real()) > 1e-12 || std::abs(im - m(i, j).imag()) > 1e-12)
        throw PreconditionError("to_exact: entry is not a Gaussian integer");
      out(i, j) = GaussInt(static_cast<std::int64_t>(re), static_cast<std::int64_t>(im));
    }
  return out;
}

ComplexMatrix to_complex(const ExactMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = cplx(static_cast<double>(m(i, j).re), static_cast<double>(m(i, j).im));
  return out;
}

ExactMatrix exact_adjoint(const ExactMatrix& m) {
  ExactMatrix out(m.cols(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(j, i) = conj(m(i, j));
  return out;
}

ExactMatrix exact_commutator(const ExactMatrix& a, const ExactMatrix& b) {
  const ExactMatrix ab = a * b;
  const ExactMatrix ba = b * a;
  return ab - ba;
}

GaussInt exact_trace(const ExactMatrix& m) {
  GaussInt t;
  for (Eigen::Index i = 0; i < std::min(m.rows(), m.cols()); ++i) t += m(i, i);
  return t;
}

bool exact_is_zero(const ExactMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != GaussInt{}) return false;
  return true;
}

ExactStructureConstants exact_structure_constants(const std::vector<ExactMatrix>& basis) {
  const int n = static_cast<int>(basis.size());
  std::vector<ExactMatrix> adj;
  adj.reserve(basis.size());
  for (const auto& x : basis) adj.push_back(exact_adjoint(x));

  std::vector<std::int64_t> norms(basis.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const ExactMatrix prod = basis[static_cast<std::size_t>(a)] * adj[static_cast<std::size_t>(b)];
      const GaussInt t = exact_trace(prod);
      if (a == b) {
        if (t.im != 0 || t.re <= 0) throw PreconditionError("exact_structure_constants: zero generator");
        norms[static_cast<std::size_t>(a)] = t.re;
      } else if (t != GaussInt{}) {
        throw PreconditionError("exact_structure_constants: basis is not trace-orthogonal");
      }
    }

  ExactStructureConstants out;
  out.size = n;
  out.f.assign(static_cast<std::size_t>(n * n * n), Rational(0));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const ExactMatrix br = exact_commutator(basis[static_cast<std::size_t>(a)],
                                              basis[static_cast<std::size_t>(b)]);
      // [X_a, X_b] = i f X_c  =>  tr(br X_c^dagger) = i f norm_c
      std::int64_t common = 1;
      std::vector<Rational> row(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c) {
        const ExactMatrix prod = br * adj[static_cast<std::size_t>(c)];
        const GaussInt t = exact_trace(prod);
        if (t.re != 0) throw PreconditionError("exact_structure_constants: non-real structure constant");
        row[static_cast<std::size_t>(c)] = Rational(t.im, norms[static_cast<std::size_t>(c)]);
        common = std::lcm(common, row[static_cast<std::size_t>(c)].denominator());
      }
      // common * br == sum_c i (common f_c) X_c, checked exactly
      ExactMatrix lhs = br * GaussInt(common);
      ExactMatrix rhs = ExactMatrix::Constant(br.rows(), br.cols(), GaussInt{});
      for (int c = 0; c < n; ++c) {
        const Rational scaled = row[static_cast<std::size_t>(c)] * common;
        rhs += basis[static_cast<std::size_t>(c)] * (kI * GaussInt(scaled.numerator()));
      }
      if (!exact_is_zero(ExactMatrix(lhs - rhs)))
        throw PreconditionError("exact_structure_constants: bracket leaves the span");
      for (int c = 0; c < n; ++c)
        out.f[static_cast<std::size_t>((a * n + b) * n + c)] = row[static_cast<std::size_t>(c)];
    }
  return out;
}

}  // namespace liekit
