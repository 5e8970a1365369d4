#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "xdisc/domains.hpp"
#include "xdisc/matrix2.hpp"
#include "xdisc/rational.hpp"

namespace xdisc {

/// The Cartan automorphism
///   x -> (1 - a a^*)^{-1/2} (x - a) (1 - a^* x)^{-1} (1 - a^* a)^{1/2}
/// with its two constant factors precomputed. Phi_a(a) = 0, Phi_a(0) = -a and
/// Phi_a^{-1} = Phi_{-a}.
class PhiA {
 public:
  /// Throws Errc::ParameterNotContractive unless s1(a) < 1.
  explicit PhiA(const CMatrix2& a);

  const CMatrix2& a() const noexcept { return a_; }
  const CMatrix2& left() const noexcept { return left_; }
  const CMatrix2& right() const noexcept { return right_; }

  /// Throws Errc::SingularResolvent if 1 - a^* x is not invertible.
  CMatrix2 operator()(const CMatrix2& x) const;

 private:
  CMatrix2 a_;
  CMatrix2 left_;   // (1 - a a^*)^{-1/2}
  CMatrix2 right_;  // (1 - a^* a)^{1/2}
};

CMatrix2 phi_a_apply(const CMatrix2& a, const CMatrix2& x);

/// x -> U x U^t. Throws Errc::ParameterInvalid unless U is unitary within 1e-12.
CMatrix2 lu_apply(const CMatrix2& u, const CMatrix2& x);

struct PhiStep {
  CMatrix2 a;
};
struct LuStep {
  CMatrix2 u;
};
using AutStep = std::variant<PhiStep, LuStep>;

/// Symbolic chain of generators of Aut(R_II), applied left to right.
struct AutR2 {
  std::vector<AutStep> steps;

  /// Every Phi parameter symmetric; such chains preserve R_II.
  bool preserves_r2() const;
};

CMatrix2 aut_chain_apply(const AutR2& chain, const CMatrix2& x);

/// Tetrablock automorphism induced by Phi_A, A = diag(a, b), followed by the
/// torus action (x1, x2, x3) -> (omega x1, eta x2, omega eta x3) and an
/// optional swap of x1 and x2.
struct AutE {
  cplx a{};
  cplx b{};
  cplx omega{1.0};
  cplx eta{1.0};
  bool swap = false;
};

/// Throws Errc::DenominatorVanishes when |1 - conj(a) x1 - conj(b) x2 + conj(ab) x3| < 1e-13,
/// Errc::ParameterInvalid for |a|, |b| >= 1 or non-unimodular torus factors.
PointND aut_e_apply(const AutE& psi, const PointND& x);

/// G2 automorphism induced by a disc automorphism nu:
/// (z + w, z w) -> (nu(z) + nu(w), nu(z) nu(w)), evaluated from (s, p) alone.
std::pair<cplx, cplx> aut_g2_apply(const DiscAutomorphism& nu, cplx s, cplx p);

/// The same action on rational discs (s(lambda), p(lambda)).
std::pair<RationalMap, RationalMap> aut_g2_apply(const DiscAutomorphism& nu, const RationalMap& s,
                                                 const RationalMap& p);

}  // namespace xdisc
