#include "xdisc/matrix2.hpp"

#include <algorithm>
#include <cmath>

#include "xdisc/error.hpp"

namespace xdisc {

CMatrix2 CMatrix2::inverse() const {
  const cplx d = det();
  if (std::abs(d) <= 1e-300) throw Error(Errc::SingularResolvent, "matrix is not invertible");
  return adjugate() * (1.0 / d);
}

CMatrix2& CMatrix2::operator+=(const CMatrix2& o) {
  for (int k = 0; k < 4; ++k) e[k] += o.e[k];
  return *this;
}

CMatrix2& CMatrix2::operator-=(const CMatrix2& o) {
  for (int k = 0; k < 4; ++k) e[k] -= o.e[k];
  return *this;
}

CMatrix2& CMatrix2::operator*=(cplx s) {
  for (auto& z : e) z *= s;
  return *this;
}

CMatrix2 operator*(const CMatrix2& a, const CMatrix2& b) {
  return {a.e[0] * b.e[0] + a.e[1] * b.e[2], a.e[0] * b.e[1] + a.e[1] * b.e[3],
          a.e[2] * b.e[0] + a.e[3] * b.e[2], a.e[2] * b.e[1] + a.e[3] * b.e[3]};
}

double max_abs_diff(const CMatrix2& a, const CMatrix2& b) {
  double m = 0.0;
  for (int k = 0; k < 4; ++k) m = std::max(m, std::abs(a.e[k] - b.e[k]));
  return m;
}

double max_abs(const CMatrix2& a) { return max_abs_diff(a, CMatrix2{}); }

SingularValues svd2(const CMatrix2& a) {
  // With det a = |det a| e^{i theta}, (s1 +- s2)^2 = ||a||_F^2 +- 2|det a| and both are sums of squares:
  //   |a11 +- e^{i theta} conj(a22)|^2 + |a12 -+ e^{i theta} conj(a21)|^2.
  // Forming them this way avoids the cancellation when s1 is close to s2.
  const cplx d = a.det();
  const cplx ph = std::abs(d) > 0.0 ? d / std::abs(d) : cplx{1.0};
  const double sum = std::hypot(std::abs(a.e[0] + ph * std::conj(a.e[3])), std::abs(a.e[1] - ph * std::conj(a.e[2])));
  const double diff = std::hypot(std::abs(a.e[0] - ph * std::conj(a.e[3])), std::abs(a.e[1] + ph * std::conj(a.e[2])));
  const double s1 = 0.5 * (sum + diff);
  const double s2 = std::max(0.0, 0.5 * (sum - diff));
  return {s1, s2};
}

double op_norm(const CMatrix2& a) { return svd2(a).s1; }

namespace {

using Vec2 = std::array<cplx, 2>;

double vnorm(const Vec2& v) { return std::sqrt(std::norm(v[0]) + std::norm(v[1])); }

Vec2 mat_vec(const CMatrix2& a, const Vec2& v) {
  return {a.e[0] * v[0] + a.e[1] * v[1], a.e[2] * v[0] + a.e[3] * v[1]};
}

Vec2 conj(const Vec2& v) { return {std::conj(v[0]), std::conj(v[1])}; }

// Unit eigenvector of the Hermitian h = [[p, q], [conj(q), r]] for eigenvalue lam.
Vec2 hermitian_eigenvector(const CMatrix2& h, double lam) {
  const Vec2 c1{h.e[1], lam - h.e[0]};
  const Vec2 c2{lam - h.e[3], h.e[2]};
  const Vec2& v = vnorm(c1) >= vnorm(c2) ? c1 : c2;
  const double n = vnorm(v);
  if (n <= 1e-300) return {1.0, 0.0};
  return {v[0] / n, v[1] / n};
}

}  // namespace

Takagi takagi2(const CMatrix2& a) {
  const double scale = std::max(1.0, max_abs(a));
  if (std::abs(a.e[1] - a.e[2]) > 1e-12 * scale)
    throw Error(Errc::NotSymmetric, "Takagi factorization needs a symmetric matrix");
  const SingularValues sv = svd2(a);
  if (sv.s1 == 0.0) return {CMatrix2::identity(), 0.0, 0.0};

  // A Takagi vector u satisfies a conj(u) = s u. For any v in the s1^2
  // eigenspace of a a^*, x = v + a conj(v) / s1 is one (or i v is, when x = 0).
  const CMatrix2 h = a * a.adjoint();
  const Vec2 v = hermitian_eigenvector(h, sv.s1 * sv.s1);
  Vec2 x = mat_vec(a, conj(v));
  x = {v[0] + x[0] / sv.s1, v[1] + x[1] / sv.s1};
  if (vnorm(x) < 0.5) {
    const Vec2 iv{cplx(0, 1) * v[0], cplx(0, 1) * v[1]};
    Vec2 y = mat_vec(a, conj(iv));
    x = {iv[0] + y[0] / sv.s1, iv[1] + y[1] / sv.s1};
  }
  const double nx = vnorm(x);
  const Vec2 u1{x[0] / nx, x[1] / nx};

  // Orthogonal complement, then fix its phase so that a conj(u2) = s2 u2.
  Vec2 u2{-std::conj(u1[1]), std::conj(u1[0])};
  const Vec2 au2 = mat_vec(a, conj(u2));
  const cplx mu = std::conj(u2[0]) * au2[0] + std::conj(u2[1]) * au2[1];
  if (std::abs(mu) > 0.0) {
    const cplx ph = std::polar(1.0, 0.5 * std::arg(mu));
    u2 = {u2[0] * ph, u2[1] * ph};
  }
  // Use the Rayleigh values so the reconstruction is consistent with U.
  const Vec2 au1 = mat_vec(a, conj(u1));
  const double s1 = std::abs(std::conj(u1[0]) * au1[0] + std::conj(u1[1]) * au1[1]);
  const double s2 = std::abs(mu);
  return {CMatrix2{u1[0], u2[0], u1[1], u2[1]}, s1, std::min(s1, s2)};
}

CMatrix2 psd_sqrt2(const CMatrix2& h) {
  const double scale = std::max(1.0, max_abs(h));
  if (std::abs(h.e[1] - std::conj(h.e[2])) > 1e-12 * scale || std::abs(h.e[0].imag()) > 1e-12 * scale ||
      std::abs(h.e[3].imag()) > 1e-12 * scale)
    throw Error(Errc::NotHermitian, "square root needs a Hermitian matrix");
  const double p = h.e[0].real();
  const double r = h.e[3].real();
  const double tr = p + r;
  double det = p * r - std::norm(h.e[1]);
  const double gap = std::sqrt(std::max(0.0, 0.25 * (p - r) * (p - r) + std::norm(h.e[1])));
  const double lam_min = 0.5 * tr - gap;
  if (lam_min < -1e-12 * scale) throw Error(Errc::NegativeEigenvalue, "matrix is not positive semidefinite");
  det = std::max(det, 0.0);
  // For 2x2 PSD h: sqrt(h) = (h + sqrt(det) I) / sqrt(tr + 2 sqrt(det)).
  const double sd = std::sqrt(det);
  const double t2 = tr + 2.0 * sd;
  if (t2 <= 0.0) return CMatrix2::zero();
  CMatrix2 s{p + sd, h.e[1], std::conj(h.e[1]), r + sd};
  return s * (1.0 / std::sqrt(t2));
}

CMatrix2 tau_swap(const CMatrix2& a) { return {a.e[1], a.e[0], a.e[3], a.e[2]}; }

double unitarity_defect(const CMatrix2& a) { return max_abs_diff(a * a.adjoint(), CMatrix2::identity()); }

}  // namespace xdisc
