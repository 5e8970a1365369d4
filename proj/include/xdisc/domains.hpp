#pragma once

// Membership and boundary predicates for the domains the library works with
// (balanced ones plus the symmetrised bidisc G2 and the tetrablock E), and the
// structural maps pi, iota and p between them.

#include <string>
#include <utility>
#include <vector>

#include "xdisc/matrix2.hpp"

namespace xdisc {

class DomainId {
 public:
  enum class Kind { Disc, Polydisc, Ball, CartanI, CartanII, CartanIII, SymBidisc, Tetrablock };

  constexpr DomainId() = default;
  /// n is only meaningful for Polydisc and Ball; throws ParameterInvalid for n < 1.
  DomainId(Kind kind, int n = 1);

  static DomainId disc() { return DomainId(Kind::Disc); }
  static DomainId polydisc(int n) { return DomainId(Kind::Polydisc, n); }
  static DomainId ball(int n) { return DomainId(Kind::Ball, n); }
  static DomainId cartan1() { return DomainId(Kind::CartanI); }
  static DomainId cartan2() { return DomainId(Kind::CartanII); }
  static DomainId cartan3() { return DomainId(Kind::CartanIII); }
  static DomainId sym_bidisc() { return DomainId(Kind::SymBidisc); }
  static DomainId tetrablock() { return DomainId(Kind::Tetrablock); }

  /// "Disc", "Polydisc(3)", "Ball(2)", "CartanI", "CartanII", "CartanIII",
  /// "SymBidisc", "Tetrablock".
  static DomainId parse(const std::string& s);
  std::string name() const;

  Kind kind() const noexcept { return kind_; }
  int n() const noexcept { return n_; }
  int ambient_dim() const noexcept;
  bool is_cartan() const noexcept;
  /// Disc, Polydisc, Ball and the Cartan domains.
  bool is_balanced() const noexcept;

  bool operator==(const DomainId&) const = default;

 private:
  Kind kind_ = Kind::Disc;
  int n_ = 1;
};

/// Point of the ambient space; Cartan points are flattened row-major.
struct PointND {
  std::vector<cplx> coords;

  std::size_t size() const noexcept { return coords.size(); }
  cplx operator[](std::size_t k) const { return coords[k]; }
  bool operator==(const PointND&) const = default;
};

PointND flatten(const CMatrix2& m);
CMatrix2 as_matrix(const PointND& x);

enum class Closure { Open, Closed };

/// Value of the defining function whose sub-level set {< 1} is the domain:
/// max|z_i| (Disc, Polydisc), Euclidean norm (Ball), s1 (Cartan),
/// |s - conj(s) p| + |p|^2 (SymBidisc), |x1 - conj(x2) x3| + |x2 - conj(x1) x3| + |x3|^2
/// (Tetrablock). Throws Errc::DimensionMismatch.
double membership_defect(const DomainId& d, const PointND& x);

/// Open: defect < 1; closed: defect <= 1 + 1e-12. CartanII additionally needs
/// ||x - x^t|| <= 1e-12, CartanIII ||x + x^t|| <= 1e-12.
bool contains(const DomainId& d, const PointND& x, Closure mode = Closure::Open);

/// Minkowski functional by bisection on the ray, accurate to tol.
/// Throws Errc::UnsupportedDomain for SymBidisc and Tetrablock.
double minkowski(const DomainId& d, const PointND& x, double tol = 1e-12);

/// Distance to the boundary in the norm whose unit ball is the domain's
/// gauge (1 - mu). Balanced domains only.
double boundary_gap(const DomainId& d, const PointND& x);

/// z -> (z11, z22, det z).
PointND pi_map(const CMatrix2& z);
/// (s, p) -> (s/2, s/2, p).
PointND iota(cplx s, cplx p);
/// x -> (x1 + x2, x3).
std::pair<cplx, cplx> p_map(const PointND& x);

enum class RoyalVariety { Sigma, T };

/// Sigma: |s^2 - 4p|; T: |x1 x2 - x3|. Throws Errc::DimensionMismatch.
double royal_defect(RoyalVariety which, const PointND& x);

/// For x on the boundary of R_I: true iff ||x12| - |x21|| <= tol, i.e. iff
/// pi(x) lies on the boundary of the tetrablock.
/// Throws Errc::NotOnCartanBoundary when |s1(x) - 1| > 1e-10.
bool tetrablock_boundary_test(const CMatrix2& x, double tol = 1e-10);

/// Shilov boundary membership for SymBidisc, CartanI (unitary group) and
/// Tetrablock (pi of a unitary). Throws Errc::DimensionMismatch,
/// Errc::UnsupportedDomain.
bool shilov_test(const DomainId& d, const PointND& x, double tol = 1e-10);

}  // namespace xdisc
