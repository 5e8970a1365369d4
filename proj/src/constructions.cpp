#include "xdisc/constructions.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "xdisc/error.hpp"

namespace xdisc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

RationalMap lam() { return RationalMap::identity(); }

void require_symmetric_contraction(const CMatrix2& a, const char* what) {
  if (std::abs(a(0, 1) - a(1, 0)) > 1e-12)
    throw Error(Errc::ParameterInvalid, std::string(what) + " must be symmetric");
  if (!(op_norm(a) < 1.0)) throw Error(Errc::ParameterInvalid, std::string(what) + " must be a strict contraction");
}

void require_unitary(const CMatrix2& u) {
  if (unitarity_defect(u) > 1e-12) throw Error(Errc::ParameterInvalid, "U must be unitary");
}

// pi(x(l)) for a symmetric matrix disc known pointwise, fitted at its minimal degree.
Family g2_family_pointwise(const std::function<CMatrix2(cplx)>& x, int max_degree, std::string name,
                           std::string claim) {
  for (int k = 0; k < 64; ++k) {
    const CMatrix2 v = x(std::polar(0.97, kTwoPi * (k + 0.5) / 64));
    if (std::abs(v(0, 1) - v(1, 0)) > 1e-9 * std::max(1.0, std::abs(v(0, 1))))
      throw Error(Errc::NotSymmetric, "f12 and f21 differ");
  }
  const int samples = 4 * max_degree + 8;
  const RationalMap s = fit_rational(
      [&](cplx l) {
        const CMatrix2 v = x(l);
        return v(0, 1) + v(1, 0);
      },
      max_degree, samples);
  const RationalMap prod = fit_rational([&](cplx l) { return -x(l).det(); }, max_degree, samples);
  return {Disc({s, prod}, DomainId::sym_bidisc()), std::move(name), 3, true, std::move(claim)};
}

}  // namespace

Family ball_three_extremal(double a1, const DiscAutomorphism& m, int n) {
  if (!(a1 >= 0.0 && a1 <= 1.0)) throw Error(Errc::ParameterOutOfRange, "a1 must lie in [0,1]");
  if (n < 2) throw Error(Errc::ParameterOutOfRange, "the ball needs dimension n >= 2");
  std::vector<RationalMap> comps(static_cast<std::size_t>(n), RationalMap::constant(0.0));
  comps[0] = RationalMap(Poly{0.0, a1});
  comps[1] = std::sqrt(1.0 - a1 * a1) * (lam() * m.to_rational());
  return {Disc(std::move(comps), DomainId::ball(n)), "ball3", 3, false, "3-extremal in the ball"};
}

PolyMap ball_three_extremal_left_inverse(double a1, int n) {
  const double d = 2.0 - a1 * a1;
  PolyMap f;
  f.dim = n;
  std::vector<int> sq(static_cast<std::size_t>(n), 0), lin(static_cast<std::size_t>(n), 0);
  sq[0] = 2;
  lin[1] = 1;
  f.terms.push_back({1.0 / d, sq});
  f.terms.push_back({2.0 * std::sqrt(1.0 - a1 * a1) / d, lin});
  return f;
}

Family ball_nongeodesic(int k, double a1) {
  if (k < 2) throw Error(Errc::ParameterOutOfRange, "k must be at least 2");
  if (!(a1 > 0.0 && a1 < 1.0)) throw Error(Errc::ParameterOutOfRange, "a1 must lie in (0,1)");
  std::vector<RationalMap> comps{RationalMap(Poly::monomial(a1, k)),
                                 RationalMap(Poly::monomial(std::sqrt(1.0 - a1 * a1), k + 1))};
  return {Disc(std::move(comps), DomainId::ball(2)), "ball-k2", k + 2, false,
          "(k+2)-extremal in the ball which is not a (k+2)-complex geodesic"};
}

Disc multiply_blaschke(const Disc& f, const BlaschkeProduct& b) {
  using K = DomainId::Kind;
  const K kind = f.target().kind();
  if (kind != K::Disc && kind != K::Polydisc && kind != K::Ball && kind != K::CartanI && kind != K::CartanII)
    throw Error(Errc::UnsupportedTarget, "cannot multiply a disc into " + f.target().name() + " by a Blaschke product");
  return scale(f, b.to_rational());
}

Disc to_disc(const RationalMatrix2& m, DomainId target) {
  return Disc({m.e.begin(), m.e.end()}, target);
}

RationalMatrix2 to_rational_matrix(const Disc& f) {
  if (f.size() != 4) throw Error(Errc::DimensionMismatch, "matrix discs have 4 components");
  return {{f[0], f[1], f[2], f[3]}};
}

Disc g2_from_r2_disc(const Disc& f) {
  const RationalMatrix2 m = to_rational_matrix(f);
  if (coefficient_distance(m(0, 1), m(1, 0)) > 1e-9)
    throw Error(Errc::NotSymmetric, "f12 and f21 differ as rational maps");
  const RationalMap& f11 = m(0, 0);
  const RationalMap& f12 = m(0, 1);
  const RationalMap& f22 = m(1, 1);

  // The product is fitted from pointwise values: subtracting the symbolic
  // products cancels digits that the minimal form needs.
  std::vector<cplx> poles;
  for (const RationalMap* r : {&f11, &f12, &f22})
    if (r->den().degree() >= 1)
      for (cplx z : poly_roots(r->den())) poles.push_back(z);
  double radius = 1.0, best = -1.0;
  for (double r : {1.0, 0.9, 0.8, 0.7, 0.6, 0.5}) {
    double gap = 1.0;
    for (cplx z : poles) gap = std::min(gap, std::abs(std::abs(z) - r));
    if (gap > best) {
      best = gap;
      radius = r;
    }
    if (gap >= 0.1) break;
  }
  const int bound = 2 * f12.degree() + f11.degree() + f22.degree();
  auto prod = fit_minimal_degree(
      [&](cplx z) {
        const cplx v = f12(z);
        return v * v - f11(z) * f22(z);
      },
      bound, radius, 1e-12);
  if (!prod) prod = rational_reduce(f12 * f12 - f11 * f22);
  return Disc({rational_reduce(2.0 * f12), *prod}, DomainId::sym_bidisc());
}

RationalMap fit_rational(const std::function<cplx(cplx)>& f, int max_degree, int n_samples, double tol) {
  n_samples = std::max({n_samples, 2 * max_degree + 2, 8});
  std::vector<cplx> pts(static_cast<std::size_t>(n_samples)), vals(pts.size());
  for (int k = 0; k < n_samples; ++k) {
    pts[k] = std::polar(1.0, kTwoPi * k / n_samples);
    vals[k] = f(pts[k]);
  }
  std::vector<cplx> check_pts, check_vals;
  double scale = 1.0;
  for (double r : {0.5, 0.93, 1.0})
    for (int k = 0; k < 32; ++k) {
      check_pts.push_back(std::polar(r, kTwoPi * (k + 0.37) / 32));
      check_vals.push_back(f(check_pts.back()));
      scale = std::max(scale, std::abs(check_vals.back()));
    }

  double best = std::numeric_limits<double>::infinity();
  for (int d = 0; d <= max_degree; ++d) {
    // unknowns n_0..n_d, c_1..c_d with den = 1 + sum c_j l^j
    Eigen::MatrixXcd a(n_samples, 2 * d + 1);
    Eigen::VectorXcd rhs(n_samples);
    for (int k = 0; k < n_samples; ++k) {
      cplx pw = 1.0;
      for (int j = 0; j <= d; ++j, pw *= pts[k]) a(k, j) = pw;
      pw = pts[k];
      for (int j = 1; j <= d; ++j, pw *= pts[k]) a(k, d + j) = -vals[k] * pw;
      rhs(k) = vals[k];
    }
    const Eigen::VectorXcd sol = a.colPivHouseholderQr().solve(rhs);
    std::vector<cplx> num(sol.data(), sol.data() + d + 1), den{1.0};
    for (int j = 1; j <= d; ++j) den.push_back(sol(d + j));
    const RationalMap r{Poly(num), Poly(den)};
    double err = 0.0;
    for (std::size_t k = 0; k < check_pts.size(); ++k) err = std::max(err, std::abs(r(check_pts[k]) - check_vals[k]));
    err /= scale;
    best = std::min(best, err);
    if (err <= tol) return rational_reduce(r);
  }
  throw Error(Errc::FitResidualTooLarge, "no rational fit of degree <= " + std::to_string(max_degree) +
                                             " (best residual " + std::to_string(best) + ")");
}

CMatrix2 lem1_matrix(const Lem1Params& p, cplx lambda) {
  CMatrix2 x = p.u * CMatrix2::diag(lambda, p.z(lambda)) * p.u.transpose();
  for (std::size_t k = p.a_list.size(); k-- > 0;) {
    x = phi_a_apply(p.a_list[k], x);
    if (k > 0) x = lambda * x;
  }
  return x;
}

Family family_lem1(const Lem1Params& p) {
  if (p.a_list.empty()) throw Error(Errc::ParameterInvalid, "need at least one automorphism parameter");
  for (const auto& a : p.a_list) require_symmetric_contraction(a, "a_k");
  require_unitary(p.u);
  if (p.fit_factor < 1) throw Error(Errc::ParameterInvalid, "fit factor must be positive");
  const RationalMap z = rational_reduce(p.z);
  if (has_pole_on_closed_disc(z)) throw Error(Errc::ParameterInvalid, "Z has a pole on the closed disc");
  if (std::abs(z(0.0)) > 1e-12) throw Error(Errc::ParameterInvalid, "Z must fix the origin");
  for (int k = 0; k < 256; ++k)
    if (std::abs(z(std::polar(1.0, kTwoPi * k / 256))) > 1.0 + 1e-12)
      throw Error(Errc::ParameterInvalid, "Z must map the circle into the closed disc");

  const int n = static_cast<int>(p.a_list.size());
  const int max_degree = 1 + z.degree() + 2 * (n - 1);
  const int samples = p.fit_factor * max_degree;
  const RationalMap s = fit_rational(
      [&](cplx l) {
        const CMatrix2 x = lem1_matrix(p, l);
        return x(0, 1) + x(1, 0);
      },
      max_degree, samples);
  const RationalMap prod = fit_rational([&](cplx l) { return -lem1_matrix(p, l).det(); }, max_degree, samples);
  return {Disc({s, prod}, DomainId::sym_bidisc()), "lem1", n + 1, true,
          "necessary form of a weak " + std::to_string(n + 1) + "-extremal in G2"};
}

Family family_thla(const ThlaParams& p) {
  switch (p.which) {
    case 1: {
      if (p.b.degree() > 2) throw Error(Errc::ParameterInvalid, "case 1 needs a Blaschke product of degree <= 2");
      RationalMap s = RationalMap::constant(0.0), prod = p.b.to_rational();
      if (p.automorphism) std::tie(s, prod) = aut_g2_apply(*p.automorphism, s, prod);
      return {Disc({rational_reduce(s), rational_reduce(prod)}, DomainId::sym_bidisc()), "thla1", 3, true,
              "normal form (0, B) up to an automorphism of G2"};
    }
    case 2: {
      if (p.b.degree() > 2) throw Error(Errc::ParameterInvalid, "case 2 needs a Blaschke product of degree <= 2");
      const RationalMap b = p.b.to_rational();
      return {Disc({rational_reduce(2.0 * b), rational_reduce(b * b)}, DomainId::sym_bidisc()), "thla2", 3, true,
              "disc inside the royal variety"};
    }
    case 3: {
      require_symmetric_contraction(p.a1, "a1");
      require_symmetric_contraction(p.a2, "a2");
      require_unitary(p.u);
      if (std::abs(p.u(0, 1) - p.u(1, 0)) > 1e-12) throw Error(Errc::ParameterInvalid, "U must be symmetric");
      const PhiA outer(p.a1), inner(p.a2);
      // entries of l Phi_a2(U l) have degree <= 3, so pi of the outer map has degree <= 12
      return g2_family_pointwise([&](cplx l) { return outer(l * inner(l * p.u)); }, 12, "thla3",
                                 "normal form pi(tau Phi_a1(l Phi_a2(U l)))");
    }
    case 4: {
      require_symmetric_contraction(p.a1, "a");
      require_unitary(p.u);
      const PhiA outer(p.a1);
      return g2_family_pointwise(
          [&](cplx l) { return outer(lu_apply(p.u, CMatrix2{l, 0.0, 0.0, l * p.m(l)})); }, 8, "thla4",
          "normal form pi(tau Phi_a(U diag(l, l m(l)) U^t))");
    }
    default: throw Error(Errc::ParameterInvalid, "case must be 1, 2, 3 or 4");
  }
}

Family family_thlb(const BlaschkeProduct& b1, const BlaschkeProduct& b2) {
  if (b1.degree() > 2 || b2.degree() > 2)
    throw Error(Errc::DegreeTooHigh, "both Blaschke products must have degree <= 2");
  const RationalMap r1 = b1.to_rational(), r2 = b2.to_rational();
  return {Disc({rational_reduce(r1 + r2), rational_reduce(r1 * r2)}, DomainId::sym_bidisc()), "thlb", 3, true,
          "normal form (B1 + B2, B1 B2) of a 3-extremal avoiding the royal variety"};
}

namespace {

// Polynomial square root by the power series recursion from the constant
// term. Stable when every root lies on or outside the unit circle.
std::optional<Poly> poly_sqrt(const Poly& c) {
  const Poly t = c.trimmed(1e-13);
  const int n = t.degree();
  if (n < 0) return Poly{};
  if (n % 2 != 0 || std::abs(t[0]) <= 1e-12 * t.max_abs_coeff()) return std::nullopt;
  const int k = n / 2;
  std::vector<cplx> s(static_cast<std::size_t>(k) + 1);
  s[0] = std::sqrt(t[0]);
  for (int j = 1; j <= k; ++j) {
    cplx acc = t[j];
    for (int i = 1; i < j; ++i) acc -= s[i] * s[j - i];
    s[j] = acc / (2.0 * s[0]);
  }
  Poly root(std::move(s));
  const Poly back = root * root;
  double err = 0.0;
  for (int j = 0; j <= n; ++j) err = std::max(err, std::abs(back[j] - t[j]));
  if (err > 1e-6 * t.max_abs_coeff()) return std::nullopt;
  return root;
}

// Denominator d2 as a multiple s * d1, if it is one.
std::optional<cplx> proportional_to(const Poly& d2, const Poly& d1) {
  if (d1.degree() != d2.degree() || d1.degree() < 0) return std::nullopt;
  const cplx s = d2.leading() / d1.leading();
  for (int j = 0; j <= d1.degree(); ++j)
    if (std::abs(d2[j] - s * d1[j]) > 1e-13 * d2.max_abs_coeff()) return std::nullopt;
  return s;
}

}  // namespace

LiftResult lift_to_r2(const Disc& phi) {
  if (phi.target().kind() != DomainId::Kind::SymBidisc || phi.size() != 2)
    throw Error(Errc::DimensionMismatch, "lift_to_r2 expects a disc into G2");
  require_analytic_on_closed_disc(phi);

  const RationalMap f12 = rational_reduce(0.5 * phi[0]);
  LiftResult out;
  RationalMap f11 = RationalMap::constant(0.0), f22 = RationalMap::constant(0.0);

  // q = phi1^2/4 - phi2 = f11 f22, written as p / e^2 with exact polynomial
  // arithmetic whenever the components share a denominator.
  const Poly& n1 = phi[0].num();
  const Poly& d1 = phi[0].den();
  Poly p, e;
  if (const auto s = proportional_to(phi[1].den(), d1)) {
    p = 0.25 * (n1 * n1) - (phi[1].num() * (1.0 / *s)) * d1;
    e = d1;
  } else {
    const RationalMap q = rational_reduce(0.25 * phi[0] * phi[0] - phi[1]);
    const auto root = poly_sqrt(q.den());
    if (!root) throw Error(Errc::OddMultiplicityZero, "phi1^2/4 - phi2 has a pole of odd multiplicity");
    p = q.num();
    e = *root;
  }
  p = p.trimmed(1e-13);

  if (!p.is_zero() && p.max_abs_coeff() > 1e-14 * std::max(1.0, (n1 * n1).max_abs_coeff())) {
    // Zeros of q in the disc go to the Blaschke factor b, the rest to r with
    // f11 = r and f22 = b r. Double roots split by rounding, hence the wide
    // clustering radius followed by Newton refinement.
    std::vector<cplx> inside;
    if (p.degree() >= 1)
      for (const auto& c : cluster_roots(poly_roots(p), 1e-4)) {
        if (!(std::abs(c.center) < 1.0 + 1e-4)) continue;
        // A root of multiplicity m is a simple root of the (m-1)th derivative.
        Poly d = p;
        for (int i = 1; i < c.multiplicity; ++i) d = d.derivative();
        const Poly dd = d.derivative();
        cplx z = c.center;
        for (int it = 0; it < 4; ++it) {
          const cplx slope = dd(z);
          if (slope == cplx{}) break;
          const cplx step = d(z) / slope;
          if (!(std::abs(step) < 1e-4)) break;
          z -= step;
        }
        // Zeros on the circle itself stay in r; boundary values only see |b| = 1.
        if (!(std::abs(z) < 1.0 - 1e-7)) continue;
        if (c.multiplicity % 2 != 0)
          throw Error(Errc::OddMultiplicityZero, "phi1^2/4 - phi2 has a zero of odd multiplicity in the disc");
        inside.insert(inside.end(), static_cast<std::size_t>(c.multiplicity), z);
      }

    // b = bnum / h^2 with h = prod (1 - conj(a) z) over half the zeros, so
    // r = sqrt(rest) h / e and b r = bnum sqrt(rest) / (h e) exactly.
    // Forward deflation is stable smallest root first.
    std::stable_sort(inside.begin(), inside.end(), [](cplx x, cplx y) { return std::abs(x) < std::abs(y); });
    Poly rest = p, bnum{1.0}, h{1.0};
    for (std::size_t i = 0; i < inside.size(); ++i) {
      const cplx a = inside[i];
      rest = deflate(rest, a);
      bnum = bnum * Poly{-a, 1.0};
      // clusters are stored contiguously with even multiplicity
      if (i % 2 == 0) h = h * Poly{1.0, -std::conj(a)};
    }
    const auto t = poly_sqrt(rest);
    if (!t) throw Error(Errc::OddMultiplicityZero, "the zero-free part of phi1^2/4 - phi2 has no rational square root");
    f11 = rational_reduce(RationalMap(*t * h, e));
    f22 = rational_reduce(RationalMap(bnum * *t, h * e));
    if (t->degree() >= 1)
      for (cplx z : poly_roots(*t))
        if (std::abs(std::abs(z) - 1.0) < 1e-6) out.warning = true;
  }

  out.f = Disc({f11, f12, f12, f22}, DomainId::cartan2());
  const Disc back = g2_from_r2_disc(out.f);
  for (double rad : {0.5, 0.9, 1.0})
    for (int k = 0; k < 64; ++k) {
      const cplx l = std::polar(rad, kTwoPi * (k + 0.5) / 64);
      const PointND want = phi(l), got = back(l);
      for (int j = 0; j < 2; ++j)
        if (std::abs(want[j] - got[j]) > 1e-8 * std::max(1.0, std::abs(want[j])))
          throw Error(Errc::BranchInconsistent, "lift does not reproduce phi");
    }
  return out;
}

ShapeReport verify_three_extremal_shape(const Disc& phi) {
  if (phi.size() != 2) throw Error(Errc::DimensionMismatch, "expected a disc into G2");
  require_analytic_on_closed_disc(phi);
  ShapeReport rep;
  rep.degree = phi.degree();
  rep.degree_ok = rep.degree <= 4;
  rep.inner = true;
  for (int k = 0; k < 512 && rep.inner; ++k) {
    const PointND x = phi(std::polar(1.0, kTwoPi * k / 512));
    rep.inner = shilov_test(DomainId::sym_bidisc(), x, 1e-8);
  }
  const RationalMap royal = rational_reduce(phi[0] * phi[0] - 4.0 * phi[1]);
  rep.identically_royal = royal.is_zero();
  if (!rep.identically_royal && royal.num().degree() >= 1)
    for (cplx z : poly_roots(royal.num()))
      if (std::abs(z) < 1.0) ++rep.royal_intersections;
  return rep;
}

}  // namespace xdisc
