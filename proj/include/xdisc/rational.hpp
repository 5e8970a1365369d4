#pragma once

// Polynomials and rational maps over C, with the disc-specific pieces built
// on them (Moebius maps and Blaschke products). Also the Poincare distance.

#include <complex>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace xdisc {

using cplx = std::complex<double>;

/// Dense complex polynomial, coefficients in ascending degree.
/// Exact trailing zeros are trimmed on construction, so degree() is the
/// index of the last nonzero coefficient (-1 for the zero polynomial).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<cplx> coeffs);
  Poly(std::initializer_list<cplx> coeffs);

  static Poly constant(cplx c);
  static Poly monomial(cplx c, int power);
  /// lead * prod (z - r_k)
  static Poly from_roots(std::span<const cplx> roots, cplx lead = 1.0);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<cplx>& coeffs() const noexcept { return coeffs_; }
  cplx operator[](std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : cplx{};
  }
  cplx leading() const noexcept { return coeffs_.empty() ? cplx{} : coeffs_.back(); }
  double max_abs_coeff() const noexcept;

  cplx operator()(cplx z) const noexcept;
  Poly derivative() const;

  /// Drops leading coefficients below rel_tol * max|coeff|.
  Poly trimmed(double rel_tol) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(cplx s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, cplx s) { return a *= s; }
  friend Poly operator*(cplx s, Poly a) { return a *= s; }

 private:
  void trim_exact();
  std::vector<cplx> coeffs_;
};

enum class PolyOp { Add, Mul, Compose };

Poly poly_ops(const Poly& a, const Poly& b, PolyOp which);

/// a(b(z)).
Poly compose(const Poly& outer, const Poly& inner);

/// Quotient of p by (z - root); the remainder is discarded.
Poly deflate(const Poly& p, cplx root);

/// All deg(p) roots with multiplicity: companion-matrix eigenvalues, then one
/// Newton step per root (kept only when it lowers the residual).
/// Throws Errc::ConstantPolynomial for degree < 1.
std::vector<cplx> poly_roots(const Poly& p);

/// A group of numerically coincident roots.
struct RootCluster {
  cplx center;
  int multiplicity;
};

/// Groups roots lying within radius * max(1, |r|) of each other; the
/// cluster center is the mean, which is accurate for split multiple roots.
std::vector<RootCluster> cluster_roots(std::span<const cplx> roots, double radius = 1e-5);

/// num / den.
class RationalMap {
 public:
  RationalMap() : num_(), den_(Poly{1.0}) {}
  RationalMap(Poly num, Poly den);
  RationalMap(Poly num);  // NOLINT: polynomials are rational maps

  static RationalMap constant(cplx c) { return RationalMap(Poly::constant(c)); }
  static RationalMap identity() { return RationalMap(Poly{0.0, 1.0}); }

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  cplx operator()(cplx z) const;

  /// max(deg num, deg den) of the stored representation. Call
  /// rational_reduce first for the reduced degree.
  int degree() const noexcept;
  bool is_zero() const noexcept { return num_.is_zero(); }

  RationalMap operator-() const;
  friend RationalMap operator+(const RationalMap& a, const RationalMap& b);
  friend RationalMap operator-(const RationalMap& a, const RationalMap& b);
  friend RationalMap operator*(const RationalMap& a, const RationalMap& b);
  friend RationalMap operator/(const RationalMap& a, const RationalMap& b);
  friend RationalMap operator*(cplx s, const RationalMap& a);

 private:
  Poly num_;
  Poly den_;
};

RationalMap pow(const RationalMap& r, int k);

/// Cancels common roots of numerator and denominator (cluster centers paired
/// within 1e-9 * max(1, |root|)), trims negligible leading coefficients and
/// normalizes den(0) = 1 (or a monic denominator when den(0) = 0). Common
/// factors the root pairing misses (multiple roots split by rounding) are
/// caught by fit_minimal_degree with tolerance 1e-10.
RationalMap rational_reduce(const RationalMap& r);

/// Least-squares rational map num/den with den(0) = 1 of the smallest degree
/// d <= max_degree whose relative residual against f, at points of the
/// circle |z| = radius between the fitting nodes, is at most tol.
std::optional<RationalMap> fit_minimal_degree(const std::function<cplx(cplx)>& f, int max_degree, double radius,
                                              double tol);

/// outer(inner(z)), reduced.
RationalMap compose(const RationalMap& outer, const RationalMap& inner);

/// Largest coefficient difference after reduction and normalization.
double coefficient_distance(const RationalMap& a, const RationalMap& b);

/// True if the denominator of the reduced map vanishes on |z| <= 1 + tol.
bool has_pole_on_closed_disc(const RationalMap& r, double tol = 1e-12);

/// sup over 512 equispaced points of T of ||r| - 1| <= tol.
/// Throws Errc::PoleOnClosedDisc.
bool is_inner(const RationalMap& r, double tol);

/// The factor m_alpha(z) = (alpha - z) / (1 - conj(alpha) z).
class MoebiusMap {
 public:
  explicit MoebiusMap(cplx alpha);

  cplx alpha() const noexcept { return alpha_; }
  cplx operator()(cplx z) const noexcept;
  RationalMap to_rational() const;

 private:
  cplx alpha_;
};

/// nu(z) = omega (z - alpha) / (1 - conj(alpha) z), the general automorphism
/// of the disc.
class DiscAutomorphism {
 public:
  DiscAutomorphism() = default;
  DiscAutomorphism(cplx omega, cplx alpha);

  static DiscAutomorphism identity() { return {}; }
  static DiscAutomorphism rotation(cplx omega) { return {omega, 0.0}; }
  static DiscAutomorphism from_moebius(const MoebiusMap& m) { return {-1.0, m.alpha()}; }

  cplx omega() const noexcept { return omega_; }
  cplx alpha() const noexcept { return alpha_; }
  cplx operator()(cplx z) const noexcept;
  DiscAutomorphism inverse() const;
  RationalMap to_rational() const;

 private:
  cplx omega_{1.0};
  cplx alpha_{0.0};
};

/// unimodular * prod_k m_{z_k}.
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  /// Throws Errc::ParameterInvalid unless ||unimodular| - 1| <= 1e-14 and
  /// every zero lies in the open disc.
  BlaschkeProduct(cplx unimodular, std::vector<cplx> zeros);

  static BlaschkeProduct factor(cplx alpha) { return {1.0, {alpha}}; }
  static BlaschkeProduct power_of_z(int k);

  cplx unimodular() const noexcept { return unimodular_; }
  const std::vector<cplx>& zeros() const noexcept { return zeros_; }
  int degree() const noexcept { return static_cast<int>(zeros_.size()); }

  cplx operator()(cplx z) const noexcept;
  RationalMap to_rational() const;

 private:
  cplx unimodular_{1.0};
  std::vector<cplx> zeros_;
};

cplx blaschke_eval(const BlaschkeProduct& b, cplx z);
BlaschkeProduct blaschke_mul(const BlaschkeProduct& a, const BlaschkeProduct& b);

/// rho(z1, z2) = artanh |(z1 - z2) / (1 - conj(z1) z2)|.
/// Throws Errc::PointOnBoundary for |z| >= 1.
double poincare_distance(cplx z1, cplx z2);

}  // namespace xdisc
