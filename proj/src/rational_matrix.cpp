#include "xdisc/rational_matrix.hpp"

#include "xdisc/error.hpp"

namespace xdisc {

RationalMatrix2 RationalMatrix2::constant(const CMatrix2& m) {
  RationalMatrix2 r;
  for (int k = 0; k < 4; ++k) r.e[k] = RationalMap::constant(m.e[k]);
  return r;
}

RationalMatrix2 RationalMatrix2::diag(const RationalMap& a, const RationalMap& b) {
  return {{a, RationalMap::constant(0.0), RationalMap::constant(0.0), b}};
}

CMatrix2 RationalMatrix2::operator()(cplx lambda) const {
  CMatrix2 m;
  for (int k = 0; k < 4; ++k) m.e[k] = e[k](lambda);
  return m;
}

RationalMap RationalMatrix2::det() const { return e[0] * e[3] - e[1] * e[2]; }

RationalMatrix2 RationalMatrix2::transpose() const { return {{e[0], e[2], e[1], e[3]}}; }

RationalMatrix2 RationalMatrix2::inverse() const {
  const RationalMap d = det();
  if (d.is_zero()) throw Error(Errc::SingularResolvent, "matrix of rational maps is singular");
  return {{e[3] / d, -e[1] / d, -e[2] / d, e[0] / d}};
}

RationalMatrix2 operator+(const RationalMatrix2& a, const RationalMatrix2& b) {
  RationalMatrix2 r;
  for (int k = 0; k < 4; ++k) r.e[k] = a.e[k] + b.e[k];
  return r;
}

RationalMatrix2 operator-(const RationalMatrix2& a, const RationalMatrix2& b) {
  RationalMatrix2 r;
  for (int k = 0; k < 4; ++k) r.e[k] = a.e[k] - b.e[k];
  return r;
}

RationalMatrix2 operator*(const RationalMatrix2& a, const RationalMatrix2& b) {
  RationalMatrix2 r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j);
  return r;
}

RationalMatrix2 operator*(const RationalMap& s, const RationalMatrix2& a) {
  RationalMatrix2 r;
  for (int k = 0; k < 4; ++k) r.e[k] = s * a.e[k];
  return r;
}

RationalMatrix2 phi_a_apply(const PhiA& phi, const RationalMatrix2& x) {
  const RationalMatrix2 a = RationalMatrix2::constant(phi.a());
  const RationalMatrix2 resolvent =
      RationalMatrix2::constant(CMatrix2::identity()) - RationalMatrix2::constant(phi.a().adjoint()) * x;
  return RationalMatrix2::constant(phi.left()) * (x - a) * resolvent.inverse() *
         RationalMatrix2::constant(phi.right());
}

RationalMatrix2 lu_apply(const CMatrix2& u, const RationalMatrix2& x) {
  if (unitarity_defect(u) > 1e-12) throw Error(Errc::ParameterInvalid, "L_U needs a unitary U");
  return RationalMatrix2::constant(u) * x * RationalMatrix2::constant(u.transpose());
}

}  // namespace xdisc
