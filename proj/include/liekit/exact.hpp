#pragma once

// Exact Gaussian-integer matrices for identities that must hold without
// rounding: Pauli brackets, SO(3) generator brackets, parity conjugation of
// the Lorentz generators.

#include "liekit/numkernel.hpp"

#include <boost/rational.hpp>

#include <cstdint>
#include <ostream>
#include <vector>

namespace liekit {

/// a + b i with integer parts.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr GaussInt() = default;
  constexpr GaussInt(std::int64_t r) : re(r) {}  // NOLINT(google-explicit-constructor)
  constexpr GaussInt(std::int64_t r, std::int64_t i) : re(r), im(i) {}

  friend constexpr GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
  friend constexpr GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
  friend constexpr GaussInt operator-(GaussInt a) { return {-a.re, -a.im}; }
  friend constexpr GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  constexpr GaussInt& operator+=(GaussInt b) { return *this = *this + b; }
  constexpr GaussInt& operator-=(GaussInt b) { return *this = *this - b; }
  constexpr GaussInt& operator*=(GaussInt b) { return *this = *this * b; }
  friend constexpr bool operator==(GaussInt a, GaussInt b) { return a.re == b.re && a.im == b.im; }
  friend constexpr bool operator!=(GaussInt a, GaussInt b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, GaussInt g) {
    return os << '(' << g.re << (g.im < 0 ? "" : "+") << g.im << "i)";
  }
};

constexpr GaussInt conj(GaussInt g) { return {g.re, -g.im}; }
constexpr GaussInt kI{0, 1};

}  // namespace liekit

namespace Eigen {
template <>
struct NumTraits<liekit::GaussInt> : GenericNumTraits<std::int64_t> {
  using Real = std::int64_t;
  using NonInteger = std::complex<double>;
  using Nested = liekit::GaussInt;
  using Literal = liekit::GaussInt;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 0,
    ReadCost = 2,
    AddCost = 2,
    MulCost = 6
  };
};
}  // namespace Eigen

namespace liekit {

using ExactMatrix = Eigen::Matrix<GaussInt, Eigen::Dynamic, Eigen::Dynamic>;
using Rational = boost::rational<std::int64_t>;

/// Converts a matrix whose entries are Gaussian integers (to within 1e-12);
/// throws PreconditionError otherwise.
ExactMatrix to_exact(const ComplexMatrix& m);
ComplexMatrix to_complex(const ExactMatrix& m);
ExactMatrix exact_adjoint(const ExactMatrix& m);
ExactMatrix exact_commutator(const ExactMatrix& a, const ExactMatrix& b);
GaussInt exact_trace(const ExactMatrix& m);
bool exact_is_zero(const ExactMatrix& m);

/// f[a][b][c] with [X_a, X_b] = i f_ab^c X_c, computed in exact arithmetic for
/// a basis that is orthogonal under the trace inner product tr(X Y^dagger).
/// Throws when the basis is not orthogonal, a constant is not real, or a
/// bracket leaves the span.
struct ExactStructureConstants {
  int size = 0;
  std::vector<Rational> f;

  Rational at(int a, int b, int c) const {
    return f[static_cast<std::size_t>((a * size + b) * size + c)];
  }
};

ExactStructureConstants exact_structure_constants(const std::vector<ExactMatrix>& basis);

}  // namespace liekit
