#include "xdisc/automorphisms.hpp"

#include <cmath>

#include "xdisc/error.hpp"

namespace xdisc {

PhiA::PhiA(const CMatrix2& a) : a_(a) {
  if (!(op_norm(a) < 1.0)) throw Error(Errc::ParameterNotContractive, "Phi_a needs a strict contraction");
  const CMatrix2 id = CMatrix2::identity();
  left_ = psd_sqrt2(id - a * a.adjoint()).inverse();
  right_ = psd_sqrt2(id - a.adjoint() * a);
}

CMatrix2 PhiA::operator()(const CMatrix2& x) const {
  const CMatrix2 resolvent = CMatrix2::identity() - a_.adjoint() * x;
  if (std::abs(resolvent.det()) < 1e-300) throw Error(Errc::SingularResolvent, "1 - a^* x is singular");
  return left_ * (x - a_) * resolvent.inverse() * right_;
}

CMatrix2 phi_a_apply(const CMatrix2& a, const CMatrix2& x) { return PhiA(a)(x); }

CMatrix2 lu_apply(const CMatrix2& u, const CMatrix2& x) {
  if (unitarity_defect(u) > 1e-12) throw Error(Errc::ParameterInvalid, "L_U needs a unitary U");
  return u * x * u.transpose();
}

bool AutR2::preserves_r2() const {
  for (const auto& s : steps)
    if (const auto* phi = std::get_if<PhiStep>(&s))
      if (std::abs(phi->a.e[1] - phi->a.e[2]) > 1e-12) return false;
  return true;
}

CMatrix2 aut_chain_apply(const AutR2& chain, const CMatrix2& x) {
  CMatrix2 y = x;
  for (const auto& s : chain.steps) {
    if (const auto* phi = std::get_if<PhiStep>(&s))
      y = phi_a_apply(phi->a, y);
    else
      y = lu_apply(std::get<LuStep>(s).u, y);
  }
  return y;
}

PointND aut_e_apply(const AutE& psi, const PointND& x) {
  if (x.size() != 3) throw Error(Errc::DimensionMismatch, "tetrablock points have 3 coordinates");
  if (!(std::abs(psi.a) < 1.0) || !(std::abs(psi.b) < 1.0))
    throw Error(Errc::ParameterInvalid, "tetrablock automorphism parameters must lie in the disc");
  if (std::abs(std::abs(psi.omega) - 1.0) > 1e-12 || std::abs(std::abs(psi.eta) - 1.0) > 1e-12)
    throw Error(Errc::ParameterInvalid, "torus factors must be unimodular");
  const cplx a = psi.a, b = psi.b, ac = std::conj(a), bc = std::conj(b);
  const cplx x1 = x[0], x2 = x[1], x3 = x[2];
  const cplx den = 1.0 - ac * x1 - bc * x2 + ac * bc * x3;
  if (std::abs(den) < 1e-13) throw Error(Errc::DenominatorVanishes, "tetrablock automorphism denominator vanishes");
  cplx y1 = (x1 - a - bc * x3 + a * bc * x2) / den;
  cplx y2 = (x2 - b - ac * x3 + ac * b * x1) / den;
  cplx y3 = (x3 - a * x2 - b * x1 + a * b) / den;
  y1 *= psi.omega;
  y2 *= psi.eta;
  y3 *= psi.omega * psi.eta;
  if (psi.swap) std::swap(y1, y2);
  return {{y1, y2, y3}};
}

// With nu(z) = omega (z - alpha) / (1 - conj(alpha) z):
//   (1 - ca z)(1 - ca w)            = 1 - ca s + ca^2 p
//   sum (z - alpha)(1 - ca w)       = (1 + |alpha|^2) s - 2 ca p - 2 alpha
//   (z - alpha)(w - alpha)          = p - alpha s + alpha^2
std::pair<cplx, cplx> aut_g2_apply(const DiscAutomorphism& nu, cplx s, cplx p) {
  const cplx al = nu.alpha(), ca = std::conj(al), w = nu.omega();
  const cplx den = 1.0 - ca * s + ca * ca * p;
  const cplx s2 = w * ((1.0 + std::norm(al)) * s - 2.0 * ca * p - 2.0 * al) / den;
  const cplx p2 = w * w * (p - al * s + al * al) / den;
  return {s2, p2};
}

std::pair<RationalMap, RationalMap> aut_g2_apply(const DiscAutomorphism& nu, const RationalMap& s,
                                                 const RationalMap& p) {
  const cplx al = nu.alpha(), ca = std::conj(al), w = nu.omega();
  const RationalMap one = RationalMap::constant(1.0);
  const RationalMap den = one - ca * s + (ca * ca) * p;
  const RationalMap s_num = (1.0 + std::norm(al)) * s - (2.0 * ca) * p - RationalMap::constant(2.0 * al);
  const RationalMap p_num = p - al * s + RationalMap::constant(al * al);
  return {w * s_num / den, (w * w) * p_num / den};
}

}  // namespace xdisc
