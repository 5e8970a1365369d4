#include "xdisc/extremality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "xdisc/error.hpp"

namespace xdisc {

NodeSet::NodeSet(std::vector<cplx> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.size() < 2) throw Error(Errc::DegenerateNodes, "a node set needs at least 2 nodes");
  for (cplx z : nodes_)
    if (!(std::abs(z) < 1.0)) throw Error(Errc::ParameterOutOfRange, "nodes must lie in the open disc");
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    for (std::size_t j = i + 1; j < nodes_.size(); ++j)
      if (std::abs(nodes_[i] - nodes_[j]) < 1e-8)
        throw Error(Errc::DegenerateNodes, "nodes " + std::to_string(i) + " and " + std::to_string(j) +
                                               " are closer than 1e-8");
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::NotSolvable: return "NotSolvable";
    case Verdict::StrictlySolvable: return "StrictlySolvable";
    case Verdict::ExtremallySolvable: return "ExtremallySolvable";
  }
  return "?";
}

Verdict parse_verdict(const std::string& s) {
  if (s == "NotSolvable") return Verdict::NotSolvable;
  if (s == "StrictlySolvable") return Verdict::StrictlySolvable;
  if (s == "ExtremallySolvable") return Verdict::ExtremallySolvable;
  throw Error(Errc::ParseError, "unknown verdict '" + s + "'");
}

namespace {

std::vector<double> hermitian_spectrum(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

Verdict verdict_of(const std::vector<double>& ev, double eps) {
  if (ev.front() < -eps) return Verdict::NotSolvable;
  if (ev.front() <= eps) return Verdict::ExtremallySolvable;
  return Verdict::StrictlySolvable;
}

double band(const std::vector<double>& ev, double rel_tol) { return rel_tol * std::max(1.0, ev.back()); }

Eigen::MatrixXcd scalar_matrix(const NodeSet& nodes, std::span<const cplx> z) {
  const auto m = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXcd p(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j)
      p(i, j) = (1.0 - z[i] * std::conj(z[j])) / (1.0 - nodes[i] * std::conj(nodes[j]));
  return p;
}

// Schur algorithm: peel one node off with the factor (l - l1)/(1 - conj(l1) l)
// and the target Moebius map, `steps` times, then close with a unimodular constant.
RationalMap schur_interpolant(std::vector<cplx> nodes, std::vector<cplx> w, int steps) {
  if (steps == 0) {
    const cplx mean = std::accumulate(w.begin(), w.end(), cplx{}) / static_cast<double>(w.size());
    return RationalMap::constant(mean / std::abs(mean));
  }
  const auto pivot = static_cast<std::size_t>(
      std::min_element(w.begin(), w.end(), [](cplx a, cplx b) { return std::abs(a) < std::abs(b); }) - w.begin());
  const cplx l1 = nodes[pivot], w1 = w[pivot];
  std::vector<cplx> next_nodes, next_w;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    if (j == pivot) continue;
    const cplx mw = (w[j] - w1) / (1.0 - std::conj(w1) * w[j]);
    const cplx bl = (nodes[j] - l1) / (1.0 - std::conj(l1) * nodes[j]);
    next_nodes.push_back(nodes[j]);
    next_w.push_back(mw / bl);
  }
  const RationalMap f1 = schur_interpolant(std::move(next_nodes), std::move(next_w), steps - 1);
  const RationalMap b(Poly{-l1, 1.0}, Poly{1.0, -std::conj(l1)});
  const RationalMap u = b * f1;
  return rational_reduce((u + RationalMap::constant(w1)) / (RationalMap::constant(1.0) + std::conj(w1) * u));
}

}  // namespace

PickCertificate classify_pick_matrix(Eigen::MatrixXcd matrix, double rel_tol) {
  PickCertificate c;
  c.eigenvalues = hermitian_spectrum(matrix);
  c.matrix = std::move(matrix);
  c.tolerance = band(c.eigenvalues, rel_tol);
  c.verdict = verdict_of(c.eigenvalues, c.tolerance);
  c.rank = static_cast<int>(
      std::count_if(c.eigenvalues.begin(), c.eigenvalues.end(), [&](double e) { return e > c.tolerance; }));
  return c;
}

PickCertificate pick_scalar(const NodeSet& nodes, std::span<const cplx> targets, double rel_tol, bool reconstruct) {
  if (targets.size() != nodes.size())
    throw Error(Errc::SizeMismatch, std::to_string(nodes.size()) + " nodes but " + std::to_string(targets.size()) +
                                        " targets");
  PickCertificate c = classify_pick_matrix(scalar_matrix(nodes, targets), rel_tol);
  if (reconstruct && c.verdict == Verdict::ExtremallySolvable) {
    const RationalMap f = schur_interpolant(nodes.nodes(), {targets.begin(), targets.end()}, c.rank);
    c.interpolant = recognize_blaschke(f, 1e-7);
  }
  return c;
}

PickCertificate pick_block(const NodeSet& nodes, std::span<const CMatrix2> targets, double rel_tol) {
  if (targets.size() != nodes.size())
    throw Error(Errc::SizeMismatch, std::to_string(nodes.size()) + " nodes but " + std::to_string(targets.size()) +
                                        " targets");
  for (const auto& w : targets)
    if (op_norm(w) > 1.0 + 1e-12) throw Error(Errc::TargetNotContractive, "block target with s1 > 1");
  const auto m = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXcd p(2 * m, 2 * m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      const CMatrix2 blk = CMatrix2::identity() - targets[i] * targets[j].adjoint();
      const cplx k = 1.0 - nodes[i] * std::conj(nodes[j]);
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) p(2 * i + r, 2 * j + s) = blk(r, s) / k;
    }
  return classify_pick_matrix(std::move(p), rel_tol);
}

PickCertificate pick_row(const NodeSet& nodes, std::span<const PointND> targets, double rel_tol) {
  if (targets.size() != nodes.size())
    throw Error(Errc::SizeMismatch, std::to_string(nodes.size()) + " nodes but " + std::to_string(targets.size()) +
                                        " targets");
  for (const auto& w : targets) {
    if (w.size() != targets[0].size()) throw Error(Errc::SizeMismatch, "row targets of different lengths");
    double n2 = 0.0;
    for (cplx z : w.coords) n2 += std::norm(z);
    if (std::sqrt(n2) > 1.0 + 1e-12) throw Error(Errc::TargetNotContractive, "row target with norm > 1");
  }
  const auto m = static_cast<Eigen::Index>(nodes.size());
  Eigen::MatrixXcd p(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) {
      cplx inner{};
      for (std::size_t k = 0; k < targets[i].size(); ++k) inner += targets[i][k] * std::conj(targets[j][k]);
      p(i, j) = (1.0 - inner) / (1.0 - nodes[i] * std::conj(nodes[j]));
    }
  return classify_pick_matrix(std::move(p), rel_tol);
}

PickCertificate certify_disc(const Disc& f, const NodeSet& nodes, double rel_tol) {
  using K = DomainId::Kind;
  const K kind = f.target().kind();
  if (kind != K::Disc && kind != K::Polydisc && kind != K::Ball && kind != K::CartanI && kind != K::CartanII)
    throw Error(Errc::UnsupportedTarget, "no Pick certificate for " + f.target().name());
  require_analytic_on_closed_disc(f);

  std::vector<PointND> values;
  for (cplx l : nodes.nodes()) {
    values.push_back(f(l));
    if (!contains(f.target(), values.back(), Closure::Closed))
      throw Error(Errc::NodeOutsideDomainImage, "f(node) lies outside the closed " + f.target().name());
  }

  switch (kind) {
    case K::Disc: {
      std::vector<cplx> z;
      for (const auto& v : values) z.push_back(v[0]);
      return pick_scalar(nodes, z, rel_tol);
    }
    case K::Polydisc: {
      const auto m = static_cast<Eigen::Index>(nodes.size());
      const int n = f.target().n();
      Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n * m, n * m);
      Verdict v = Verdict::StrictlySolvable;
      for (int k = 0; k < n; ++k) {
        std::vector<cplx> z;
        for (const auto& val : values) z.push_back(val[k]);
        const PickCertificate ck = pick_scalar(nodes, z, rel_tol);
        sum.block(k * m, k * m, m, m) = ck.matrix;
        if (ck.verdict == Verdict::NotSolvable)
          v = Verdict::NotSolvable;
        else if (ck.verdict == Verdict::ExtremallySolvable && v != Verdict::NotSolvable)
          v = Verdict::ExtremallySolvable;
      }
      PickCertificate c = classify_pick_matrix(std::move(sum), rel_tol);
      c.verdict = v;
      return c;
    }
    case K::Ball: return pick_row(nodes, values, rel_tol);
    default: {
      std::vector<CMatrix2> w;
      for (const auto& v : values) w.push_back(as_matrix(v));
      PickCertificate c = pick_block(nodes, w, rel_tol);
      if (kind == K::CartanII)
        c.scope = c.verdict == Verdict::ExtremallySolvable
                      ? "certified in R_I; transfers to R_II"
                      : "certified in R_I; not conclusive for R_II";
      return c;
    }
  }
}

PolyMap PolyMap::coordinate(int dim, int index) {
  PolyMap f;
  f.dim = dim;
  std::vector<int> powers(static_cast<std::size_t>(dim), 0);
  powers.at(static_cast<std::size_t>(index)) = 1;
  f.terms.push_back({1.0, std::move(powers)});
  return f;
}

cplx PolyMap::operator()(const PointND& z) const {
  if (static_cast<int>(z.size()) != dim) throw Error(Errc::DimensionMismatch, "point has the wrong dimension");
  cplx sum{};
  for (const auto& t : terms) {
    cplx v = t.coeff;
    for (std::size_t k = 0; k < t.powers.size(); ++k) v *= std::pow(z[k], t.powers[k]);
    sum += v;
  }
  return sum;
}

RationalMap PolyMap::compose(const Disc& f) const {
  if (static_cast<int>(f.size()) != dim)
    throw Error(Errc::DimensionMismatch, "polynomial map on C^" + std::to_string(dim) + " applied to a disc in C^" +
                                             std::to_string(f.size()));
  RationalMap sum = RationalMap::constant(0.0);
  for (const auto& t : terms) {
    if (t.powers.size() != f.size()) throw Error(Errc::DimensionMismatch, "monomial has the wrong arity");
    RationalMap v = RationalMap::constant(t.coeff);
    for (std::size_t k = 0; k < t.powers.size(); ++k)
      if (t.powers[k] > 0) v = v * pow(f[k], t.powers[k]);
    sum = sum + v;
  }
  return rational_reduce(sum);
}

std::optional<BlaschkeProduct> recognize_blaschke(const RationalMap& r, double tol) {
  const RationalMap red = rational_reduce(r);
  if (red.is_zero() || has_pole_on_closed_disc(red)) return std::nullopt;
  std::vector<cplx> zeros;
  if (red.num().degree() >= 1) zeros = poly_roots(red.num());
  for (cplx z : zeros)
    if (!(std::abs(z) < 1.0)) return std::nullopt;
  cplx base = 1.0;
  for (cplx z : zeros) base *= MoebiusMap(z)(1.0);
  const cplx u = red(1.0) / base;
  if (std::abs(std::abs(u) - 1.0) > std::max(tol, 1e-9)) return std::nullopt;
  BlaschkeProduct b(u / std::abs(u), std::move(zeros));
  for (int k = 0; k < 64; ++k) {
    const cplx z = std::polar(0.9, 2.0 * std::numbers::pi * (k + 0.25) / 64);
    if (std::abs(b(z) - red(z)) > std::max(tol, 1e-9) * 1e3) return std::nullopt;
  }
  return b;
}

LeftInverseResult left_inverse_check(const PolyMap& F, const Disc& f, int m) {
  if (has_pole_on_closed_disc(f))
    throw Error(Errc::CompositionNotAnalytic, "f has a pole on the closed disc, F o f is not analytic there");
  LeftInverseResult res;
  res.composite = F.compose(f);
  res.degree = res.composite.degree();
  if (res.degree < 1) return res;
  res.inner = is_inner(res.composite, 1e-9);
  if (!res.inner) return res;
  res.blaschke = recognize_blaschke(res.composite, 1e-9);
  res.ok = res.blaschke.has_value() && res.degree <= m - 1;
  return res;
}

double four_extremal_functional(double a1, cplx gamma) {
  const double g2 = std::norm(gamma), a2 = a1 * a1;
  return (a2 - g2) * (a2 - g2) + g2 * (1.0 - g2) * (1.0 - a2);
}

ScanResult four_extremal_scan(std::span<const double> a1_grid, std::span<const cplx> gamma_grid) {
  if (a1_grid.empty() || gamma_grid.empty()) throw Error(Errc::EmptyGrid, "scan grids must be nonempty");
  ScanResult best{std::numeric_limits<double>::infinity(), 0.0, 0.0};
  for (double a : a1_grid) {
    if (!(a > 0.0 && a < 1.0)) throw Error(Errc::ParameterOutOfRange, "a1 must lie in (0,1)");
    for (cplx g : gamma_grid) {
      if (!(std::abs(g) < 1.0)) throw Error(Errc::ParameterOutOfRange, "gamma must lie in the open disc");
      const double e = four_extremal_functional(a, g);
      if (e < best.min_value) best = {e, a, g};
    }
  }
  return best;
}

Disc improvement_step(const Disc& g, double sigma, double t) {
  if (!g.target().is_balanced())
    throw Error(Errc::UnsupportedTarget, "improvement step needs a balanced target, got " + g.target().name());
  if (!(sigma > 0.0 && sigma < 1.0) || !(t > 0.0 && t < 1.0))
    throw Error(Errc::ParameterOutOfRange, "sigma and t must lie in (0,1)");
  require_analytic_on_closed_disc(g);

  // The gauge is a norm on balanced convex targets, so its maximum over the
  // closed disc is attained on the circle.
  double delta = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 256; ++k)
    delta = std::min(delta, boundary_gap(g.target(), g(std::polar(1.0, 2.0 * std::numbers::pi * k / 256))));

  const PointND gs = g(sigma), gts = g(t * sigma);
  PointND c;
  for (std::size_t k = 0; k < gs.size(); ++k) c.coords.push_back((gs[k] - gts[k]) / (t * sigma));
  const double size = membership_defect(g.target(), c);
  if (!(delta > 0.0) || !(size < delta))
    throw Error(Errc::PerturbationTooLarge, "correction of size " + std::to_string(size) +
                                                " does not fit in the boundary gap " + std::to_string(delta));

  std::vector<RationalMap> out;
  for (std::size_t k = 0; k < g.size(); ++k)
    out.push_back(rational_reduce(g[k] + RationalMap(Poly{0.0, c[k]})));
  return {std::move(out), g.target()};
}

double lempert_disc(cplx z1, cplx z2) { return poincare_distance(z1, z2); }

}  // namespace xdisc
