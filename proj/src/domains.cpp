#include "xdisc/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <regex>

#include "xdisc/error.hpp"

namespace xdisc {

DomainId::DomainId(Kind kind, int n) : kind_(kind), n_(n) {
  if ((kind == Kind::Polydisc || kind == Kind::Ball) && n < 1)
    throw Error(Errc::ParameterInvalid, "dimension must be at least 1");
  if (kind != Kind::Polydisc && kind != Kind::Ball) n_ = 1;
}

DomainId DomainId::parse(const std::string& s) {
  static const std::regex param(R"((Polydisc|Ball)\((\d+)\))");
  std::smatch m;
  if (std::regex_match(s, m, param)) {
    const int n = std::stoi(m[2]);
    return DomainId(m[1] == "Polydisc" ? Kind::Polydisc : Kind::Ball, n);
  }
  if (s == "Disc") return disc();
  if (s == "CartanI") return cartan1();
  if (s == "CartanII") return cartan2();
  if (s == "CartanIII") return cartan3();
  if (s == "SymBidisc") return sym_bidisc();
  if (s == "Tetrablock") return tetrablock();
  throw Error(Errc::ParseError, "unknown domain tag '" + s + "'");
}

std::string DomainId::name() const {
  switch (kind_) {
    case Kind::Disc: return "Disc";
    case Kind::Polydisc: return "Polydisc(" + std::to_string(n_) + ")";
    case Kind::Ball: return "Ball(" + std::to_string(n_) + ")";
    case Kind::CartanI: return "CartanI";
    case Kind::CartanII: return "CartanII";
    case Kind::CartanIII: return "CartanIII";
    case Kind::SymBidisc: return "SymBidisc";
    case Kind::Tetrablock: return "Tetrablock";
  }
  return "?";
}

int DomainId::ambient_dim() const noexcept {
  switch (kind_) {
    case Kind::Disc: return 1;
    case Kind::Polydisc:
    case Kind::Ball: return n_;
    case Kind::CartanI:
    case Kind::CartanII:
    case Kind::CartanIII: return 4;
    case Kind::SymBidisc: return 2;
    case Kind::Tetrablock: return 3;
  }
  return 0;
}

bool DomainId::is_cartan() const noexcept {
  return kind_ == Kind::CartanI || kind_ == Kind::CartanII || kind_ == Kind::CartanIII;
}

bool DomainId::is_balanced() const noexcept {
  return kind_ != Kind::SymBidisc && kind_ != Kind::Tetrablock;
}

PointND flatten(const CMatrix2& m) { return {{m.e[0], m.e[1], m.e[2], m.e[3]}}; }

CMatrix2 as_matrix(const PointND& x) {
  if (x.size() != 4) throw Error(Errc::DimensionMismatch, "a 2x2 matrix point needs 4 coordinates");
  return {x[0], x[1], x[2], x[3]};
}

namespace {

void require_dim(const DomainId& d, const PointND& x) {
  if (static_cast<int>(x.size()) != d.ambient_dim())
    throw Error(Errc::DimensionMismatch, d.name() + " expects " + std::to_string(d.ambient_dim()) +
                                             " coordinates, got " + std::to_string(x.size()));
}

constexpr double kShapeTol = 1e-12;

bool shape_ok(const DomainId& d, const PointND& x) {
  if (d.kind() == DomainId::Kind::CartanII) return std::abs(x[1] - x[2]) <= kShapeTol;
  if (d.kind() == DomainId::Kind::CartanIII)
    return std::abs(x[1] + x[2]) <= kShapeTol && std::abs(x[0]) <= kShapeTol && std::abs(x[3]) <= kShapeTol;
  return true;
}

}  // namespace

double membership_defect(const DomainId& d, const PointND& x) {
  require_dim(d, x);
  using K = DomainId::Kind;
  switch (d.kind()) {
    case K::Disc:
    case K::Polydisc: {
      double m = 0.0;
      for (cplx z : x.coords) m = std::max(m, std::abs(z));
      return m;
    }
    case K::Ball: {
      double s = 0.0;
      for (cplx z : x.coords) s += std::norm(z);
      return std::sqrt(s);
    }
    case K::CartanI:
    case K::CartanII:
    case K::CartanIII: return op_norm(as_matrix(x));
    case K::SymBidisc: {
      const cplx s = x[0], p = x[1];
      return std::abs(s - std::conj(s) * p) + std::norm(p);
    }
    case K::Tetrablock: {
      const cplx x1 = x[0], x2 = x[1], x3 = x[2];
      return std::abs(x1 - std::conj(x2) * x3) + std::abs(x2 - std::conj(x1) * x3) + std::norm(x3);
    }
  }
  return 0.0;
}

bool contains(const DomainId& d, const PointND& x, Closure mode) {
  const double defect = membership_defect(d, x);
  if (!shape_ok(d, x)) return false;
  return mode == Closure::Open ? defect < 1.0 : defect <= 1.0 + 1e-12;
}

double minkowski(const DomainId& d, const PointND& x, double tol) {
  if (!d.is_balanced()) throw Error(Errc::UnsupportedDomain, d.name() + " is not a balanced domain");
  require_dim(d, x);
  bool origin = true;
  for (cplx z : x.coords) origin = origin && z == cplx{};
  if (origin) return 0.0;
  auto inside_scaled = [&](double t) {
    PointND y = x;
    for (auto& z : y.coords) z /= t;
    return contains(d, y, Closure::Open);
  };
  double hi = 1.0;
  while (!inside_scaled(hi)) {
    hi *= 2.0;
    if (hi > 1e300) return std::numeric_limits<double>::infinity();
  }
  double lo = 0.0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (inside_scaled(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double boundary_gap(const DomainId& d, const PointND& x) {
  if (!d.is_balanced()) throw Error(Errc::UnsupportedDomain, d.name() + " is not a balanced domain");
  return 1.0 - membership_defect(d, x);
}

PointND pi_map(const CMatrix2& z) { return {{z.e[0], z.e[3], z.det()}}; }

PointND iota(cplx s, cplx p) { return {{s / 2.0, s / 2.0, p}}; }

std::pair<cplx, cplx> p_map(const PointND& x) {
  if (x.size() != 3) throw Error(Errc::DimensionMismatch, "p_map expects a tetrablock point");
  return {x[0] + x[1], x[2]};
}

double royal_defect(RoyalVariety which, const PointND& x) {
  if (which == RoyalVariety::Sigma) {
    if (x.size() != 2) throw Error(Errc::DimensionMismatch, "Sigma lives in the symmetrised bidisc");
    return std::abs(x[0] * x[0] - 4.0 * x[1]);
  }
  if (x.size() != 3) throw Error(Errc::DimensionMismatch, "T lives in the tetrablock");
  return std::abs(x[0] * x[1] - x[2]);
}

bool tetrablock_boundary_test(const CMatrix2& x, double tol) {
  if (std::abs(op_norm(x) - 1.0) > 1e-10)
    throw Error(Errc::NotOnCartanBoundary, "point is not on the boundary of R_I");
  return std::abs(std::abs(x.e[1]) - std::abs(x.e[2])) <= tol;
}

bool shilov_test(const DomainId& d, const PointND& x, double tol) {
  require_dim(d, x);
  using K = DomainId::Kind;
  switch (d.kind()) {
    case K::SymBidisc: {
      const cplx s = x[0], p = x[1];
      return std::abs(std::abs(p) - 1.0) <= tol && std::abs(s - std::conj(s) * p) <= tol &&
             std::abs(s) <= 2.0 + tol;
    }
    case K::CartanI: return unitarity_defect(as_matrix(x)) <= tol;
    case K::Tetrablock: {
      // Witness u = [[x1, b], [-x3 conj(b), x2]] with |b|^2 = 1 - |x1|^2; u is
      // unitary with pi(u) = x exactly when |x3| = 1 and x2 = x3 conj(x1).
      const cplx x1 = x[0], x3 = x[2];
      if (std::abs(std::abs(x3) - 1.0) > tol || std::abs(x1) > 1.0 + tol) return false;
      const double b = std::sqrt(std::max(0.0, 1.0 - std::norm(x1)));
      const cplx phase = x3 / std::abs(x3);
      const CMatrix2 u{x1, b, -phase * b, phase * std::conj(x1)};
      const PointND px = pi_map(u);
      double err = 0.0;
      for (int k = 0; k < 3; ++k) err = std::max(err, std::abs(px[k] - x[k]));
      return err <= tol && unitarity_defect(u) <= tol;
    }
    default: throw Error(Errc::UnsupportedDomain, "Shilov boundary test is offered for SymBidisc, CartanI and Tetrablock");
  }
}

}  // namespace xdisc
