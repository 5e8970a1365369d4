#pragma once

#include <array>
#include <complex>

#include "xdisc/rational.hpp"

namespace xdisc {

/// 2x2 complex matrix, row-major entries (z11, z12, z21, z22).
struct CMatrix2 {
  std::array<cplx, 4> e{};

  constexpr CMatrix2() = default;
  constexpr CMatrix2(cplx z11, cplx z12, cplx z21, cplx z22) : e{z11, z12, z21, z22} {}

  static constexpr CMatrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr CMatrix2 zero() { return {}; }
  static constexpr CMatrix2 diag(cplx a, cplx b) { return {a, 0.0, 0.0, b}; }

  cplx& operator()(int i, int j) { return e[2 * i + j]; }
  cplx operator()(int i, int j) const { return e[2 * i + j]; }

  cplx det() const { return e[0] * e[3] - e[1] * e[2]; }
  cplx trace() const { return e[0] + e[3]; }
  CMatrix2 transpose() const { return {e[0], e[2], e[1], e[3]}; }
  CMatrix2 adjoint() const { return {std::conj(e[0]), std::conj(e[2]), std::conj(e[1]), std::conj(e[3])}; }
  CMatrix2 conjugate() const { return {std::conj(e[0]), std::conj(e[1]), std::conj(e[2]), std::conj(e[3])}; }
  /// Classical adjugate: a * adjugate(a) = det(a) I.
  CMatrix2 adjugate() const { return {e[3], -e[1], -e[2], e[0]}; }
  /// Throws Errc::SingularResolvent when |det| <= 1e-300.
  CMatrix2 inverse() const;

  CMatrix2& operator+=(const CMatrix2& o);
  CMatrix2& operator-=(const CMatrix2& o);
  CMatrix2& operator*=(cplx s);

  friend CMatrix2 operator+(CMatrix2 a, const CMatrix2& b) { return a += b; }
  friend CMatrix2 operator-(CMatrix2 a, const CMatrix2& b) { return a -= b; }
  friend CMatrix2 operator-(const CMatrix2& a) { return CMatrix2{} - a; }
  friend CMatrix2 operator*(CMatrix2 a, cplx s) { return a *= s; }
  friend CMatrix2 operator*(cplx s, CMatrix2 a) { return a *= s; }
  friend CMatrix2 operator*(const CMatrix2& a, const CMatrix2& b);

  bool operator==(const CMatrix2&) const = default;
};

/// Max-modulus entry of a - b.
double max_abs_diff(const CMatrix2& a, const CMatrix2& b);
double max_abs(const CMatrix2& a);

struct SingularValues {
  double s1;
  double s2;
};

/// Closed-form singular values, s1 >= s2 >= 0.
SingularValues svd2(const CMatrix2& a);

/// Operator norm, the largest singular value.
double op_norm(const CMatrix2& a);

struct Takagi {
  CMatrix2 u;  // unitary
  double s1;
  double s2;
};

/// Symmetric a = U diag(s1, s2) U^t with U unitary and s1 >= s2 >= 0.
/// Throws Errc::NotSymmetric when |a12 - a21| > 1e-12 * max(1, |a|).
Takagi takagi2(const CMatrix2& a);

/// Hermitian PSD square root. Eigenvalues down to -1e-12 are clamped to 0.
/// Throws Errc::NotHermitian, Errc::NegativeEigenvalue.
CMatrix2 psd_sqrt2(const CMatrix2& h);

/// Exchanges the two columns.
CMatrix2 tau_swap(const CMatrix2& a);

/// ||a a^* - I|| in the max-entry sense.
double unitarity_defect(const CMatrix2& a);

}  // namespace xdisc
