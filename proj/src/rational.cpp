#include "xdisc/rational.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "xdisc/error.hpp"

namespace xdisc {

namespace {

constexpr double kTrimRel = 1e-13;
constexpr double kZeroRel = 1e-14;
constexpr double kPairTol = 1e-9;
constexpr double kFitTol = 1e-10;

double scale_of(cplx z) { return std::max(1.0, std::abs(z)); }

}  // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) { trim_exact(); }

Poly::Poly(std::initializer_list<cplx> coeffs) : coeffs_(coeffs) { trim_exact(); }

Poly Poly::constant(cplx c) { return Poly(std::vector<cplx>{c}); }

Poly Poly::monomial(cplx c, int power) {
  std::vector<cplx> v(static_cast<std::size_t>(power) + 1, cplx{});
  v.back() = c;
  return Poly(std::move(v));
}

Poly Poly::from_roots(std::span<const cplx> roots, cplx lead) {
  std::vector<cplx> v{lead};
  for (cplx r : roots) {
    std::vector<cplx> next(v.size() + 1, cplx{});
    for (std::size_t k = 0; k < v.size(); ++k) {
      next[k + 1] += v[k];
      next[k] -= r * v[k];
    }
    v = std::move(next);
  }
  return Poly(std::move(v));
}

void Poly::trim_exact() {
  while (!coeffs_.empty() && coeffs_.back() == cplx{}) coeffs_.pop_back();
}

double Poly::max_abs_coeff() const noexcept {
  double m = 0.0;
  for (cplx c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

cplx Poly::operator()(cplx z) const noexcept {
  cplx acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<cplx> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs_[k];
  return Poly(std::move(d));
}

Poly Poly::trimmed(double rel_tol) const {
  const double cut = rel_tol * max_abs_coeff();
  std::vector<cplx> v = coeffs_;
  while (!v.empty() && std::abs(v.back()) <= cut) v.pop_back();
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), cplx{});
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim_exact();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), cplx{});
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim_exact();
  return *this;
}

Poly& Poly::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  trim_exact();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<cplx> v(a.coeffs_.size() + b.coeffs_.size() - 1, cplx{});
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(v));
}

Poly compose(const Poly& outer, const Poly& inner) {
  Poly acc;
  const auto& c = outer.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Poly::constant(*it);
  return acc;
}

Poly poly_ops(const Poly& a, const Poly& b, PolyOp which) {
  switch (which) {
    case PolyOp::Add: return a + b;
    case PolyOp::Mul: return a * b;
    case PolyOp::Compose: return compose(a, b);
  }
  return {};
}

Poly deflate(const Poly& p, cplx root) {
  const int n = p.degree();
  if (n < 1) return {};
  const auto& a = p.coeffs();
  std::vector<cplx> q(static_cast<std::size_t>(n), cplx{});
  if (std::abs(root) <= 1.0) {
    // Horner from the top.
    q[n - 1] = a[n];
    for (int k = n - 1; k >= 1; --k) q[k - 1] = a[k] + root * q[k];
  } else {
    // From the bottom: a_0 = -r q_0, a_k = q_{k-1} - r q_k.
    q[0] = -a[0] / root;
    for (int k = 1; k < n; ++k) q[k] = (q[k - 1] - a[k]) / root;
  }
  return Poly(std::move(q));
}

std::vector<cplx> poly_roots(const Poly& p) {
  const int n = p.degree();
  if (n < 1) throw Error(Errc::ConstantPolynomial, "poly_roots needs degree >= 1");
  const auto& a = p.coeffs();
  std::vector<cplx> roots;
  if (n == 1) {
    roots.push_back(-a[0] / a[1]);
  } else {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int k = 1; k < n; ++k) companion(k, k - 1) = 1.0;
    for (int k = 0; k < n; ++k) companion(k, n - 1) = -a[k] / a[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    const auto& ev = solver.eigenvalues();
    roots.assign(ev.data(), ev.data() + n);
  }
  const Poly dp = p.derivative();
  for (auto& r : roots) {
    const cplx d = dp(r);
    if (d == cplx{}) continue;
    const cplx polished = r - p(r) / d;
    if (std::abs(p(polished)) < std::abs(p(r))) r = polished;
  }
  return roots;
}

std::vector<RootCluster> cluster_roots(std::span<const cplx> roots, double radius) {
  std::vector<RootCluster> clusters;
  std::vector<cplx> sums;
  for (cplx r : roots) {
    bool placed = false;
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      if (std::abs(r - clusters[c].center) <= radius * scale_of(r)) {
        sums[c] += r;
        ++clusters[c].multiplicity;
        clusters[c].center = sums[c] / static_cast<double>(clusters[c].multiplicity);
        placed = true;
        break;
      }
    }
    if (!placed) {
      clusters.push_back({r, 1});
      sums.push_back(r);
    }
  }
  return clusters;
}

// ---------------------------------------------------------------- RationalMap

RationalMap::RationalMap(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Errc::ZeroDenominator, "denominator is identically zero");
}

RationalMap::RationalMap(Poly num) : num_(std::move(num)), den_(Poly{1.0}) {}

cplx RationalMap::operator()(cplx z) const { return num_(z) / den_(z); }

int RationalMap::degree() const noexcept { return std::max(std::max(num_.degree(), 0), den_.degree()); }

RationalMap RationalMap::operator-() const { return RationalMap(-num_, den_); }

namespace {

// Denominators equal up to a scalar: returns the scalar s with b = s * a.
bool proportional(const Poly& a, const Poly& b, cplx& s) {
  if (a.degree() != b.degree()) return false;
  const int n = a.degree();
  int pivot = 0;
  for (int k = 0; k <= n; ++k)
    if (std::abs(a[k]) > std::abs(a[pivot])) pivot = k;
  s = b[pivot] / a[pivot];
  const double tol = 1e-13 * std::max(a.max_abs_coeff() * std::abs(s), b.max_abs_coeff());
  for (int k = 0; k <= n; ++k)
    if (std::abs(b[k] - s * a[k]) > tol) return false;
  return true;
}

// Radius of a sampling circle kept well away from the given poles.
double pole_free_radius(std::span<const cplx> poles) {
  double best_r = 1.0, best_gap = -1.0;
  for (double r : {1.0, 0.8, 1.25, 0.6, 1.6, 0.45, 2.0, 0.3, 3.0}) {
    double gap = std::numeric_limits<double>::infinity();
    for (cplx p : poles) gap = std::min(gap, std::abs(std::abs(p) - r) / r);
    if (gap > best_gap) {
      best_gap = gap;
      best_r = r;
    }
    if (gap >= 0.15) break;
  }
  return best_r;
}

RationalMap add_impl(const RationalMap& a, const RationalMap& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  cplx s;
  if (proportional(a.den(), b.den(), s)) {
    return rational_reduce(RationalMap(a.num() * s + b.num(), b.den()));
  }
  // Least common multiple of the denominators via shared root clusters.
  Poly da = a.den(), db = b.den();
  bool deflated = false;
  std::vector<cplx> poles;
  if (da.degree() >= 1 && db.degree() >= 1) {
    const auto ra = poly_roots(da);
    const auto rb = poly_roots(db);
    poles = ra;
    poles.insert(poles.end(), rb.begin(), rb.end());
    auto ca = cluster_roots(ra);
    auto cb = cluster_roots(rb);
    for (auto& x : ca) {
      for (auto& y : cb) {
        if (y.multiplicity == 0) continue;
        if (std::abs(x.center - y.center) > kPairTol * scale_of(x.center)) continue;
        const int k = std::min(x.multiplicity, y.multiplicity);
        for (int i = 0; i < k; ++i) {
          da = deflate(da, x.center);
          db = deflate(db, x.center);
        }
        deflated = deflated || k > 0;
        x.multiplicity -= k;
        y.multiplicity -= k;
      }
    }
  }
  if (deflated && std::abs(a.den()[0]) > 1e-12 * a.den().max_abs_coeff() &&
      std::abs(b.den()[0]) > 1e-12 * b.den().max_abs_coeff()) {
    // The shared factor is only known to the accuracy of its roots, so the
    // sum is rebuilt from exact pointwise values at the lcm degree.
    const int bound = std::max(a.num().degree() + db.degree(), a.den().degree() + db.degree());
    const auto fit = fit_minimal_degree([&](cplx z) { return a(z) + b(z); }, bound, pole_free_radius(poles), kFitTol);
    if (fit) return *fit;
    return rational_reduce(RationalMap(a.num() * b.den() + b.num() * a.den(), a.den() * b.den()));
  }
  // a.num/a.den + b.num/b.den with a.den = g*da, b.den = g*db, lcm = g*da*db = a.den*db.
  Poly num = a.num() * db + b.num() * da;
  Poly den = a.den() * db;
  return rational_reduce(RationalMap(std::move(num), std::move(den)));
}

}  // namespace

RationalMap operator+(const RationalMap& a, const RationalMap& b) { return add_impl(a, b); }

RationalMap operator-(const RationalMap& a, const RationalMap& b) { return add_impl(a, -b); }

RationalMap operator*(const RationalMap& a, const RationalMap& b) {
  if (a.is_zero() || b.is_zero()) return RationalMap();
  return rational_reduce(RationalMap(a.num() * b.num(), a.den() * b.den()));
}

RationalMap operator/(const RationalMap& a, const RationalMap& b) {
  if (b.is_zero()) throw Error(Errc::ZeroDenominator, "division by the zero rational map");
  return rational_reduce(RationalMap(a.num() * b.den(), a.den() * b.num()));
}

RationalMap operator*(cplx s, const RationalMap& a) { return RationalMap(a.num() * s, a.den()); }

RationalMap pow(const RationalMap& r, int k) {
  RationalMap acc = RationalMap::constant(1.0);
  for (int i = 0; i < k; ++i) acc = acc * r;
  return acc;
}

std::optional<RationalMap> fit_minimal_degree(const std::function<cplx(cplx)>& f, int max_degree, double radius,
                                              double tol) {
  const int m = 4 * (max_degree + 1) + 4;
  std::vector<cplx> mu(m), val(m), check_mu(m), check_val(m);
  double scale = 0.0;
  for (int k = 0; k < m; ++k) {
    mu[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / m);
    check_mu[k] = std::polar(1.0, 2.0 * std::numbers::pi * (k + 0.5) / m);
    val[k] = f(radius * mu[k]);
    check_val[k] = f(radius * check_mu[k]);
    scale = std::max({scale, std::abs(val[k]), std::abs(check_val[k])});
  }
  if (!std::isfinite(scale)) return std::nullopt;
  if (scale == 0.0) return RationalMap();

  // Fit in mu = z / radius, where the circle samples make the basis orthogonal.
  for (int d = 0; d <= max_degree; ++d) {
    Eigen::MatrixXcd a(m, 2 * d + 1);
    Eigen::VectorXcd rhs(m);
    for (int k = 0; k < m; ++k) {
      cplx pw = 1.0;
      for (int j = 0; j <= d; ++j, pw *= mu[k]) a(k, j) = pw;
      pw = mu[k];
      for (int j = 1; j <= d; ++j, pw *= mu[k]) a(k, d + j) = -val[k] * pw;
      rhs(k) = val[k];
    }
    const Eigen::VectorXcd sol = a.colPivHouseholderQr().solve(rhs);
    std::vector<cplx> num(static_cast<std::size_t>(d) + 1), den(static_cast<std::size_t>(d) + 1);
    den[0] = 1.0;
    double rpow = 1.0;
    for (int j = 0; j <= d; ++j, rpow /= radius) {
      num[j] = sol(j) * rpow;
      if (j > 0) den[j] = sol(d + j) * rpow;
    }
    const Poly pn = Poly(std::move(num)).trimmed(kTrimRel), pd = Poly(std::move(den)).trimmed(kTrimRel);
    double err = 0.0;
    for (int k = 0; k < m; ++k) {
      const cplx z = radius * check_mu[k];
      err = std::max(err, std::abs(pn(z) / pd(z) - check_val[k]));
    }
    if (err <= tol * scale) return RationalMap(pn, pd);
  }
  return std::nullopt;
}

RationalMap rational_reduce(const RationalMap& r) {
  Poly num = r.num().trimmed(kTrimRel);
  Poly den = r.den().trimmed(kTrimRel);
  if (den.is_zero()) throw Error(Errc::ZeroDenominator, "denominator is identically zero");
  if (num.is_zero() || num.max_abs_coeff() <= kZeroRel * den.max_abs_coeff()) return RationalMap();

  std::vector<cplx> poles;
  if (num.degree() >= 1 && den.degree() >= 1) {
    const auto rn = poly_roots(num);
    const auto rd = poly_roots(den);
    auto cn = cluster_roots(rn);
    auto cd = cluster_roots(rd);
    for (auto& x : cd) {
      for (auto& y : cn) {
        if (x.multiplicity == 0) break;
        if (y.multiplicity == 0) continue;
        if (std::abs(x.center - y.center) > kPairTol * scale_of(x.center)) continue;
        const int k = std::min(x.multiplicity, y.multiplicity);
        for (int i = 0; i < k; ++i) {
          num = deflate(num, x.center);
          den = deflate(den, x.center);
        }
        x.multiplicity -= k;
        y.multiplicity -= k;
      }
      if (x.multiplicity > 0) poles.push_back(x.center);
    }
  } else if (den.degree() >= 1) {
    poles = poly_roots(den);
  }

  const cplx d0 = den[0];
  const cplx s = std::abs(d0) > 1e-12 * den.max_abs_coeff() ? d0 : den.leading();
  RationalMap paired(num * (1.0 / s), den * (1.0 / s));
  const int deg = paired.degree();
  if (deg >= 1 && std::abs(d0) > 1e-12 * den.max_abs_coeff()) {
    // Deflating by cluster centres of split multiple roots leaves an error of
    // the size of the split, so the fit samples the unreduced quotient.
    const bool deflated = deg < std::max(r.num().degree(), r.den().degree());
    const Poly& rn = r.num();
    const Poly& rd = r.den();
    const auto fit = fit_minimal_degree([&](cplx z) { return rn(z) / rd(z); }, deflated ? deg : deg - 1,
                                        pole_free_radius(poles), kFitTol);
    if (fit) return *fit;
  }
  return paired;
}

RationalMap compose(const RationalMap& outer, const RationalMap& inner) {
  const Poly& n = outer.num();
  const Poly& d = outer.den();
  const int k = std::max(std::max(n.degree(), 0), d.degree());
  const Poly& N = inner.num();
  const Poly& D = inner.den();
  std::vector<Poly> npow{Poly{1.0}}, dpow{Poly{1.0}};
  for (int j = 1; j <= k; ++j) {
    npow.push_back(npow.back() * N);
    dpow.push_back(dpow.back() * D);
  }
  auto homogenize = [&](const Poly& p) {
    Poly acc;
    for (int j = 0; j <= p.degree(); ++j) acc += p[j] * (npow[j] * dpow[k - j]);
    return acc;
  };
  return rational_reduce(RationalMap(homogenize(n), homogenize(d)));
}

double coefficient_distance(const RationalMap& a, const RationalMap& b) {
  const RationalMap ra = rational_reduce(a);
  const RationalMap rb = rational_reduce(b);
  double err = 0.0;
  auto cmp = [&err](const Poly& p, const Poly& q) {
    const int n = std::max(p.degree(), q.degree());
    for (int k = 0; k <= n; ++k) err = std::max(err, std::abs(p[k] - q[k]));
  };
  cmp(ra.num(), rb.num());
  cmp(ra.den(), rb.den());
  return err;
}

bool has_pole_on_closed_disc(const RationalMap& r, double tol) {
  const RationalMap red = rational_reduce(r);
  if (red.den().degree() < 1) return false;
  for (cplx z : poly_roots(red.den()))
    if (std::abs(z) <= 1.0 + tol) return true;
  return false;
}

bool is_inner(const RationalMap& r, double tol) {
  if (has_pole_on_closed_disc(r)) throw Error(Errc::PoleOnClosedDisc, "is_inner needs a map analytic on the closed disc");
  constexpr int kSamples = 512;
  double worst = 0.0;
  for (int k = 0; k < kSamples; ++k) {
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * k / kSamples);
    worst = std::max(worst, std::abs(std::abs(r(z)) - 1.0));
  }
  return worst <= tol;
}

// ---------------------------------------------------------------- Moebius & Blaschke

MoebiusMap::MoebiusMap(cplx alpha) : alpha_(alpha) {
  if (!(std::abs(alpha) < 1.0)) throw Error(Errc::ParameterInvalid, "Moebius parameter must lie in the open disc");
}

cplx MoebiusMap::operator()(cplx z) const noexcept { return (alpha_ - z) / (1.0 - std::conj(alpha_) * z); }

RationalMap MoebiusMap::to_rational() const {
  return RationalMap(Poly{alpha_, -1.0}, Poly{1.0, -std::conj(alpha_)});
}

DiscAutomorphism::DiscAutomorphism(cplx omega, cplx alpha) : omega_(omega), alpha_(alpha) {
  if (std::abs(std::abs(omega) - 1.0) > 1e-12)
    throw Error(Errc::ParameterInvalid, "rotation factor must be unimodular");
  if (!(std::abs(alpha) < 1.0)) throw Error(Errc::ParameterInvalid, "automorphism parameter must lie in the open disc");
}

cplx DiscAutomorphism::operator()(cplx z) const noexcept {
  return omega_ * (z - alpha_) / (1.0 - std::conj(alpha_) * z);
}

DiscAutomorphism DiscAutomorphism::inverse() const { return {std::conj(omega_), -omega_ * alpha_}; }

RationalMap DiscAutomorphism::to_rational() const {
  return RationalMap(Poly{-omega_ * alpha_, omega_}, Poly{1.0, -std::conj(alpha_)});
}

BlaschkeProduct::BlaschkeProduct(cplx unimodular, std::vector<cplx> zeros)
    : unimodular_(unimodular), zeros_(std::move(zeros)) {
  if (std::abs(std::abs(unimodular_) - 1.0) > 1e-14)
    throw Error(Errc::ParameterInvalid, "Blaschke constant must be unimodular");
  for (cplx z : zeros_)
    if (!(std::abs(z) < 1.0)) throw Error(Errc::ParameterInvalid, "Blaschke zeros must lie in the open disc");
}

BlaschkeProduct BlaschkeProduct::power_of_z(int k) {
  // m_0(z) = -z, so z^k = (-1)^k m_0^k.
  return {k % 2 == 0 ? 1.0 : -1.0, std::vector<cplx>(static_cast<std::size_t>(k), cplx{})};
}

cplx BlaschkeProduct::operator()(cplx z) const noexcept {
  cplx acc = unimodular_;
  for (cplx a : zeros_) acc *= (a - z) / (1.0 - std::conj(a) * z);
  return acc;
}

RationalMap BlaschkeProduct::to_rational() const {
  Poly num = Poly::constant(unimodular_);
  Poly den{1.0};
  for (cplx a : zeros_) {
    num = num * Poly{a, -1.0};
    den = den * Poly{1.0, -std::conj(a)};
  }
  return RationalMap(std::move(num), std::move(den));
}

cplx blaschke_eval(const BlaschkeProduct& b, cplx z) { return b(z); }

BlaschkeProduct blaschke_mul(const BlaschkeProduct& a, const BlaschkeProduct& b) {
  std::vector<cplx> zeros = a.zeros();
  zeros.insert(zeros.end(), b.zeros().begin(), b.zeros().end());
  cplx u = a.unimodular() * b.unimodular();
  u /= std::abs(u);
  return {u, std::move(zeros)};
}

double poincare_distance(cplx z1, cplx z2) {
  if (!(std::abs(z1) < 1.0) || !(std::abs(z2) < 1.0))
    throw Error(Errc::PointOnBoundary, "Poincare distance needs points of the open disc");
  const double delta = std::abs((z1 - z2) / (1.0 - std::conj(z1) * z2));
  return std::atanh(delta);
}

}  // namespace xdisc
