#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "xdisc/error.hpp"
#include "xdisc/extremality.hpp"
#include "xdisc/sampling.hpp"

using namespace xdisc;
using namespace std::complex_literals;

namespace {

template <class F>
Errc error_code(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an xdisc::Error");
  return Errc::IoError;
}

// Hermitian 2x2 eigenvalues from trace and determinant.
std::pair<double, double> eig2(double a, double d, cplx b) {
  const double mid = 0.5 * (a + d), rad = std::hypot(0.5 * (a - d), std::abs(b));
  return {mid - rad, mid + rad};
}

std::vector<cplx> random_nodes(Sampler& rng, int m) {
  for (;;) {
    std::vector<cplx> out;
    for (int k = 0; k < m; ++k) out.push_back(rng.in_disc(0.85));
    bool spread = true;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < i; ++j) spread = spread && std::abs(out[i] - out[j]) > 0.05;
    if (spread) return out;
  }
}

Disc identity_disc() { return Disc({RationalMap::identity()}, DomainId::disc()); }

}  // namespace

TEST_CASE("pick_scalar examples") {
  const NodeSet nodes({0.0, 0.5});
  const std::vector<cplx> same{0.0, 0.5};
  const PickCertificate a = pick_scalar(nodes, same);
  CHECK(std::abs(a.matrix(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(a.matrix(0, 1) - 1.0) < 1e-15);
  CHECK(std::abs(a.matrix(1, 1) - 1.0) < 1e-15);
  CHECK(a.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(a.eigenvalues[1] == doctest::Approx(2.0));
  CHECK(a.verdict == Verdict::ExtremallySolvable);
  CHECK(a.rank == 1);

  const std::vector<cplx> quarter{0.0, 0.25};
  const PickCertificate b = pick_scalar(nodes, quarter);
  CHECK(std::abs(b.matrix(1, 1) - 1.25) < 1e-15);
  const auto [lo_b, hi_b] = eig2(1.0, 1.25, 1.0);
  CHECK(b.eigenvalues[0] == doctest::Approx(lo_b));
  CHECK(b.eigenvalues[1] == doctest::Approx(hi_b));
  CHECK(lo_b * hi_b == doctest::Approx(0.25));
  CHECK(b.verdict == Verdict::StrictlySolvable);

  const std::vector<cplx> far{0.0, 0.9};
  const PickCertificate c = pick_scalar(nodes, far);
  CHECK((1.0 - 0.81) / 0.75 - 1.0 == doctest::Approx(-0.74666666666));
  CHECK(c.verdict == Verdict::NotSolvable);
  CHECK(c.min_eigenvalue() < 0.0);

  CHECK(error_code([&] { pick_scalar(nodes, std::vector<cplx>{0.0}); }) == Errc::SizeMismatch);
  CHECK(error_code([] { NodeSet({0.1, 0.1 + 1e-10}); }) == Errc::DegenerateNodes);
  CHECK_THROWS_AS(NodeSet({0.1, 1.0}), Error);
}

TEST_CASE("pick_scalar reconstructs the Blaschke interpolant in the singular case") {
  const NodeSet nodes({0.0, 0.3, -0.6i});
  std::vector<cplx> targets;
  for (cplx z : nodes.nodes()) targets.push_back(z * z);
  const PickCertificate cert = pick_scalar(nodes, targets, kPickRelTol, true);
  CHECK(cert.verdict == Verdict::ExtremallySolvable);
  CHECK(cert.rank == 2);
  REQUIRE(cert.interpolant.has_value());
  CHECK(cert.interpolant->degree() == 2);
  for (cplx z : {cplx{0.2, 0.1}, cplx{-0.5, 0.4}}) CHECK(std::abs((*cert.interpolant)(z) - z * z) < 1e-8);
}

TEST_CASE("pick_scalar rank on Blaschke data equals the degree") {
  Sampler rng(51);
  for (int d = 1; d <= 3; ++d) {
    for (int m = 2; m <= 4; ++m) {
      for (int trial = 0; trial < 10; ++trial) {
        const BlaschkeProduct b = rng.blaschke(d, 0.8);
        const std::vector<cplx> pts = random_nodes(rng, m);
        std::vector<cplx> targets;
        for (cplx z : pts) targets.push_back(b(z));
        const PickCertificate cert = pick_scalar(NodeSet(pts), targets);
        if (m > d) {
          CHECK(cert.verdict == Verdict::ExtremallySolvable);
          CHECK(cert.rank == d);
        } else {
          CHECK(cert.verdict == Verdict::StrictlySolvable);
          CHECK(cert.rank == m);
        }
      }
    }
  }
}

TEST_CASE("pick_block examples") {
  const NodeSet nodes({0.0, 0.4, -0.5});
  std::vector<CMatrix2> diag_targets;
  for (cplx l : nodes.nodes()) diag_targets.push_back(CMatrix2::diag(l, l * l));
  const PickCertificate a = pick_block(nodes, diag_targets);
  CHECK(a.matrix.rows() == 6);
  CHECK(a.min_eigenvalue() <= 1e-10);
  CHECK(a.min_eigenvalue() >= -1e-10);
  CHECK(a.verdict == Verdict::ExtremallySolvable);

  const std::vector<CMatrix2> zeros(3, CMatrix2::zero());
  const PickCertificate b = pick_block(nodes, zeros);
  CHECK(b.verdict == Verdict::StrictlySolvable);
  // block (i, j) is the Szego kernel times the identity
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const cplx k = 1.0 / (1.0 - nodes[i] * std::conj(nodes[j]));
      CHECK(std::abs(b.matrix(2 * i, 2 * j) - k) < 1e-15);
      CHECK(std::abs(b.matrix(2 * i, 2 * j + 1)) < 1e-15);
      CHECK(std::abs(b.matrix(2 * i + 1, 2 * j + 1) - k) < 1e-15);
    }

  const CMatrix2 w{0.0, 1.0, 1i, 0.0};
  const std::vector<CMatrix2> unitary_pair{w, w};
  CHECK(pick_block(NodeSet({0.1, -0.2}), unitary_pair).verdict == Verdict::ExtremallySolvable);

  const std::vector<CMatrix2> too_big{CMatrix2::diag(1.5, 0.0), CMatrix2::zero()};
  CHECK(error_code([&] { pick_block(NodeSet({0.1, -0.2}), too_big); }) == Errc::TargetNotContractive);
  CHECK(error_code([&] { pick_block(nodes, too_big); }) == Errc::SizeMismatch);
}

TEST_CASE("pick_block verdict is invariant under node reparametrization") {
  Sampler rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    // f(l) = diag(B1(l), B2(l)) with degrees 1 and 2 gives a singular block matrix on 3 nodes
    const BlaschkeProduct b1 = rng.blaschke(1, 0.7), b2 = rng.blaschke(1 + trial % 2, 0.7);
    const MoebiusMap m(rng.in_disc(0.6));
    const std::vector<cplx> pts = random_nodes(rng, 3);
    std::vector<cplx> moved;
    std::vector<CMatrix2> t0, t1;
    for (cplx l : pts) {
      moved.push_back(m(l));
      t0.push_back(CMatrix2::diag(b1(l), b2(l)));
      t1.push_back(CMatrix2::diag(b1(m(l)), b2(m(l))));
    }
    bool spread = true;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < i; ++j) spread = spread && std::abs(moved[i] - moved[j]) > 1e-3;
    if (!spread) continue;
    CHECK(pick_block(NodeSet(pts), t0).verdict == pick_block(NodeSet(moved), t1).verdict);
  }
}

TEST_CASE("certify_disc examples") {
  Sampler rng(53);
  for (int k = 0; k < 20; ++k)
    CHECK(certify_disc(identity_disc(), NodeSet(random_nodes(rng, 2))).verdict == Verdict::ExtremallySolvable);

  const Disc two({RationalMap::identity(), RationalMap::identity() * MoebiusMap(0.5).to_rational()}, DomainId::polydisc(2));
  CHECK(certify_disc(two, NodeSet({0.0, 0.3, -0.6})).verdict == Verdict::ExtremallySolvable);

  const Disc constant({RationalMap::constant(0.2 + 0.1i)}, DomainId::disc());
  CHECK(certify_disc(constant, NodeSet({0.1, 0.5})).verdict == Verdict::StrictlySolvable);

  const Disc pole({RationalMap(Poly{1.0}, Poly{0.5, -1.0})}, DomainId::disc());
  CHECK(error_code([&] { certify_disc(pole, NodeSet({0.1, 0.2})); }) == Errc::PoleOnClosedDisc);

  const Disc outside({RationalMap::constant(2.0)}, DomainId::disc());
  CHECK(error_code([&] { certify_disc(outside, NodeSet({0.1, 0.2})); }) == Errc::NodeOutsideDomainImage);
}

TEST_CASE("multiplying by a Moebius factor adds a node and keeps extremality") {
  Sampler rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<cplx> pts = random_nodes(rng, 3);
    const RationalMap m3 = MoebiusMap(pts[2]).to_rational();
    if (trial % 2 == 0) {
      const Disc f({RationalMap::identity()}, DomainId::disc());
      REQUIRE(certify_disc(f, NodeSet({pts[0], pts[1]})).verdict == Verdict::ExtremallySolvable);
      CHECK(certify_disc(scale(f, m3), NodeSet(pts)).verdict == Verdict::ExtremallySolvable);
    } else {
      const cplx u = rng.unimodular();
      const Disc f({RationalMap::identity(), RationalMap::constant(0.0), RationalMap::constant(0.0),
                    u * RationalMap::identity()},
                   DomainId::cartan1());
      REQUIRE(certify_disc(f, NodeSet({pts[0], pts[1]})).verdict == Verdict::ExtremallySolvable);
      CHECK(certify_disc(scale(f, m3), NodeSet(pts)).verdict == Verdict::ExtremallySolvable);
    }
  }
}

TEST_CASE("certify_disc on CartanII targets carries a scope note") {
  const Disc f({RationalMap::identity(), RationalMap::constant(0.0), RationalMap::constant(0.0), RationalMap::identity()},
               DomainId::cartan2());
  const PickCertificate cert = certify_disc(f, NodeSet({0.1, -0.3}));
  CHECK(cert.verdict == Verdict::ExtremallySolvable);
  CHECK_FALSE(cert.scope.empty());
}

TEST_CASE("left_inverse_check examples") {
  const double a1 = 0.6, c = std::sqrt(1 - a1 * a1);
  const Disc f({RationalMap(Poly{0.0, a1}), RationalMap(Poly{0.0, 0.0, c})}, DomainId::ball(2));
  PolyMap F{2, {{1.0 / (2 - a1 * a1), {2, 0}}, {2 * c / (2 - a1 * a1), {0, 1}}}};
  const LeftInverseResult r = left_inverse_check(F, f, 3);
  CHECK(r.ok);
  CHECK(r.degree == 2);
  REQUIRE(r.blaschke.has_value());
  for (cplx z : {cplx{0.3, 0.1}, cplx{-0.2, -0.6}}) CHECK(std::abs(r.composite(z) - z * z) < 1e-12);
  CHECK_FALSE(left_inverse_check(F, f, 2).ok);

  const RationalMap Z = MoebiusMap(0.3).to_rational() * RationalMap::identity();
  const Disc g({RationalMap::identity(), RationalMap::constant(0.0), RationalMap::constant(0.0), Z}, DomainId::cartan2());
  const LeftInverseResult s = left_inverse_check(PolyMap::coordinate(4, 0), g, 2);
  CHECK(s.ok);
  CHECK(s.degree == 1);

  const PolyMap constant{2, {{0.5, {0, 0}}}};
  CHECK_FALSE(left_inverse_check(constant, f, 3).ok);

  const Disc pole({RationalMap(Poly{1.0}, Poly{0.5, -1.0}), RationalMap::constant(0.0)}, DomainId::ball(2));
  CHECK(error_code([&] { left_inverse_check(F, pole, 3); }) == Errc::CompositionNotAnalytic);
}

TEST_CASE("left inverses survive precomposition with a Blaschke product") {
  Sampler rng(55);
  const double a1 = 0.4, c = std::sqrt(1 - a1 * a1);
  const Disc f({RationalMap(Poly{0.0, a1}), RationalMap(Poly{0.0, 0.0, c})}, DomainId::ball(2));
  const PolyMap F{2, {{1.0 / (2 - a1 * a1), {2, 0}}, {2 * c / (2 - a1 * a1), {0, 1}}}};
  REQUIRE(left_inverse_check(F, f, 3).ok);
  for (int k = 1; k <= 3; ++k) {
    const BlaschkeProduct b = rng.blaschke(k, 0.7);
    const LeftInverseResult r = left_inverse_check(F, compose(f, b.to_rational()), 2 * k + 1);
    CHECK(r.ok);
    CHECK(r.degree == 2 * k);
  }
}

TEST_CASE("four_extremal_functional and scan examples") {
  CHECK(four_extremal_functional(0.5, 0.5) == doctest::Approx(0.140625).epsilon(1e-15));
  CHECK(four_extremal_functional(0.5, 0.0) == doctest::Approx(0.0625).epsilon(1e-15));

  std::vector<double> a1s;
  for (int i = 0; i < 65; ++i) a1s.push_back(0.1 + 0.8 * i / 64.0);
  std::vector<cplx> gammas;
  for (int i = 0; i < 64; ++i) gammas.push_back(0.95 * i / 63.0);
  const ScanResult s = four_extremal_scan(a1s, gammas);
  CHECK(s.min_value > 0.0);
  CHECK(s.min_value == doctest::Approx(1e-4).epsilon(1e-12));
  CHECK(s.a1 == doctest::Approx(0.1));
  CHECK(std::abs(s.gamma) == 0.0);

  CHECK(error_code([&] { four_extremal_scan(std::vector<double>{}, gammas); }) == Errc::EmptyGrid);
}

TEST_CASE("four_extremal_functional is positive on random samples") {
  Sampler rng(56);
  for (int k = 0; k < 5000; ++k) CHECK(four_extremal_functional(rng.uniform(1e-3, 1.0 - 1e-3), rng.in_disc(0.999)) > 0.0);
}

TEST_CASE("improvement_step examples") {
  const Disc half({RationalMap(Poly{0.0, 0.5})}, DomainId::disc());
  const Disc g = improvement_step(half, 0.5, 0.9);
  CHECK(std::abs(g[0](1.0) - (0.5 + 0.025 / 0.45)) < 1e-14);
  CHECK(std::abs(g[0](0.45) - 0.25) < 1e-14);
  CHECK(std::abs(g[0](0.0)) < 1e-15);
  CHECK(poincare_distance(0.0, 0.45) < poincare_distance(0.0, 0.5));

  const Disc constant({RationalMap::constant(0.3i)}, DomainId::disc());
  const Disc same = improvement_step(constant, 0.4, 0.8);
  for (cplx z : {cplx{0.0}, cplx{0.7, 0.2}}) CHECK(std::abs(same[0](z) - 0.3i) < 1e-15);

  CHECK(error_code([&] { improvement_step(half, 0.5, 0.1); }) == Errc::PerturbationTooLarge);
  CHECK(error_code([&] { improvement_step(half, 1.5, 0.9); }) == Errc::ParameterOutOfRange);
}

TEST_CASE("accepted improvement steps stay inside the target") {
  Sampler rng(57);
  int accepted = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const cplx c0 = rng.in_disc(0.3), c1 = rng.in_disc(0.3);
    const Disc g({RationalMap(Poly{c0, c1}), RationalMap(Poly{c1, 0.0, c0})}, DomainId::polydisc(2));
    const double sigma = rng.uniform(0.2, 0.9), t = rng.uniform(0.7, 0.99);
    try {
      const Disc h = improvement_step(g, sigma, t);
      ++accepted;
      CHECK(sampled_membership(h, Closure::Open, 512));
      CHECK(max_abs_diff(CMatrix2{h[0](t * sigma), h[1](t * sigma), 0.0, 0.0}, CMatrix2{g[0](sigma), g[1](sigma), 0.0, 0.0}) < 1e-12);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::PerturbationTooLarge);
    }
  }
  CHECK(accepted > 50);
}

TEST_CASE("lempert_disc examples") {
  CHECK(lempert_disc(0.0, 0.0) == 0.0);
  CHECK(lempert_disc(0.0, 0.5) == doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-14));
  Sampler rng(58);
  for (int k = 0; k < 500; ++k) {
    const cplx z = rng.in_disc(0.95), w = rng.in_disc(0.95);
    const DiscAutomorphism nu(rng.unimodular(), rng.in_disc(0.9));
    CHECK(std::abs(lempert_disc(nu(z), nu(w)) - lempert_disc(z, w)) < 1e-12 * std::max(1.0, lempert_disc(z, w)));
  }
}

TEST_CASE("verdict names round trip") {
  for (Verdict v : {Verdict::NotSolvable, Verdict::StrictlySolvable, Verdict::ExtremallySolvable})
    CHECK(parse_verdict(to_string(v)) == v);
}
