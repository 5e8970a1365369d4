#pragma once

#include <array>

#include "xdisc/automorphisms.hpp"
#include "xdisc/matrix2.hpp"
#include "xdisc/rational.hpp"

namespace xdisc {

/// 2x2 matrix of rational maps in lambda, row-major. Every operation reduces
/// its entries, which keeps degrees at their true value through nested
/// automorphism applications.
struct RationalMatrix2 {
  std::array<RationalMap, 4> e;

  static RationalMatrix2 constant(const CMatrix2& m);
  static RationalMatrix2 diag(const RationalMap& a, const RationalMap& b);

  RationalMap& operator()(int i, int j) { return e[2 * i + j]; }
  const RationalMap& operator()(int i, int j) const { return e[2 * i + j]; }

  CMatrix2 operator()(cplx lambda) const;
  RationalMap det() const;
  RationalMatrix2 transpose() const;
  /// Throws Errc::SingularResolvent when the determinant is identically zero.
  RationalMatrix2 inverse() const;
};

RationalMatrix2 operator+(const RationalMatrix2& a, const RationalMatrix2& b);
RationalMatrix2 operator-(const RationalMatrix2& a, const RationalMatrix2& b);
RationalMatrix2 operator*(const RationalMatrix2& a, const RationalMatrix2& b);
RationalMatrix2 operator*(const RationalMap& s, const RationalMatrix2& a);

/// Exact Phi_a(X(lambda)).
RationalMatrix2 phi_a_apply(const PhiA& phi, const RationalMatrix2& x);
/// U X U^t.
RationalMatrix2 lu_apply(const CMatrix2& u, const RationalMatrix2& x);

}  // namespace xdisc
