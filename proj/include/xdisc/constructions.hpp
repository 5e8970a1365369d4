#pragma once

// Explicit extremal families in the ball, G2 and R_II. Also the lift from G2
// discs to symmetric matrix discs and the shape check for 3-extremals in G2.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "xdisc/automorphisms.hpp"
#include "xdisc/disc.hpp"
#include "xdisc/extremality.hpp"
#include "xdisc/rational_matrix.hpp"

namespace xdisc {

/// A constructed disc and what is claimed about it. Classification results
/// only give necessary forms, so `candidate` is set whenever extremality is
/// not guaranteed and must be certified at chosen nodes.
struct Family {
  Disc disc;
  std::string name;
  int order = 0;  // the m in "m-extremal" the family is associated with
  bool candidate = true;
  std::string claim;
};

/// lambda -> (a1 lambda, sqrt(1 - a1^2) lambda m(lambda), 0, ..., 0) into B_n.
/// Throws Errc::ParameterOutOfRange for a1 outside [0,1] or n < 2.
Family ball_three_extremal(double a1, const DiscAutomorphism& m, int n = 2);

/// F(z) = z1^2 / (2 - a1^2) + 2 sqrt(1 - a1^2) / (2 - a1^2) z2, which sends
/// ball_three_extremal(a1, identity) to lambda^2.
PolyMap ball_three_extremal_left_inverse(double a1, int n = 2);

/// lambda -> (a1 lambda^k, sqrt(1 - a1^2) lambda^(k+1)) into B_2.
/// Throws Errc::ParameterOutOfRange unless k >= 2 and 0 < a1 < 1.
Family ball_nongeodesic(int k, double a1);

/// Componentwise B * f. Throws Errc::UnsupportedTarget outside
/// {Disc, Polydisc, Ball, CartanI, CartanII}.
Disc multiply_blaschke(const Disc& f, const BlaschkeProduct& b);

/// phi = (2 f12, -det f), so that iota(phi) = pi(tau f).
/// Throws Errc::NotSymmetric when f12 and f21 differ by more than 1e-9.
Disc g2_from_r2_disc(const Disc& f);

/// A matrix disc of rational maps as a Disc into `target`.
Disc to_disc(const RationalMatrix2& m, DomainId target = DomainId::cartan2());
RationalMatrix2 to_rational_matrix(const Disc& f);

struct Lem1Params {
  std::vector<CMatrix2> a_list;  // a_1, ..., a_n
  CMatrix2 u = CMatrix2::identity();
  RationalMap z = RationalMap::identity();
  int fit_factor = 4;  // samples per unit of expected degree
};

/// Least-squares rational fit of minimal degree <= max_degree to samples of
/// `f` on the unit circle (n_samples points), accepted when the residual at
/// off-grid points inside the closed disc is <= tol * max(1, |f|).
/// Throws Errc::FitResidualTooLarge.
RationalMap fit_rational(const std::function<cplx(cplx)>& f, int max_degree, int n_samples, double tol = 1e-9);

/// Phi_{a1}(l Phi_{a2}(... l Phi_{an}(U diag(l, Z(l)) U^t))), evaluated pointwise.
CMatrix2 lem1_matrix(const Lem1Params& p, cplx lambda);

/// The nested disc fitted to rational maps and mapped into G2.
/// Throws Errc::ParameterInvalid, Errc::FitResidualTooLarge.
Family family_lem1(const Lem1Params& p);

struct ThlaParams {
  int which = 1;
  BlaschkeProduct b;                            // cases 1 and 2
  std::optional<DiscAutomorphism> automorphism;  // case 1
  CMatrix2 a1 = CMatrix2::zero();               // cases 3 and 4 (a)
  CMatrix2 a2 = CMatrix2::zero();               // case 3
  CMatrix2 u = CMatrix2::identity();            // cases 3 and 4
  DiscAutomorphism m;                           // case 4
};

/// The four normal forms of 3-extremals through the royal variety:
///   1: (0, B), B of degree <= 2, optionally moved by a G2 automorphism
///   2: (2B, B^2), B of degree <= 2
///   3: pi(tau Phi_{a1}(l Phi_{a2}(U l)))
///   4: pi(tau Phi_a(U diag(l, l m(l)) U^t))
/// Throws Errc::ParameterInvalid.
Family family_thla(const ThlaParams& p);

/// (B1 + B2, B1 B2). Throws Errc::DegreeTooHigh for degrees above 2.
Family family_thlb(const BlaschkeProduct& b1, const BlaschkeProduct& b2);

struct LiftResult {
  Disc f;                // symmetric disc into the closed R_II
  bool warning = false;  // the diagonal entries vanish somewhere on the circle
};

/// Symmetric rational f with g2_from_r2_disc(f) = phi: f12 = phi1 / 2 and
/// f11 f22 = q = phi1^2 / 4 - phi2, split as f11 = r, f22 = b r where b is
/// the Blaschke product of the zeros of q in the disc and q / b = r^2.
/// Throws Errc::PoleOnClosedDisc, Errc::OddMultiplicityZero (q / b has no
/// rational square root), Errc::BranchInconsistent (round trip fails).
LiftResult lift_to_r2(const Disc& phi);

struct ShapeReport {
  int degree = 0;
  bool degree_ok = false;
  bool inner = false;
  int royal_intersections = 0;  // zeros of s^2 - 4p in the disc, with multiplicity
  bool identically_royal = false;
};

/// Throws Errc::PoleOnClosedDisc, Errc::DimensionMismatch.
ShapeReport verify_three_extremal_shape(const Disc& phi);

}  // namespace xdisc
