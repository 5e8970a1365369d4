#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "xdisc/error.hpp"
#include "xdisc/rational.hpp"

using namespace xdisc;
using namespace std::complex_literals;

namespace {

constexpr double kPi = std::numbers::pi;

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol; }

// Brute-force evaluation of sum c_k z^k with explicit powers, independent of Horner.
cplx eval_powers(const std::vector<cplx>& c, cplx z) {
  cplx acc = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * std::pow(z, static_cast<double>(k));
  return acc;
}

// Poincare distance through the hyperbolic cosine form, a different identity
// from the artanh one used by the library.
double rho_cosh(cplx z, cplx w) {
  const double x = 1.0 + 2.0 * std::norm(z - w) / ((1.0 - std::norm(z)) * (1.0 - std::norm(w)));
  return 0.5 * std::acosh(x);
}

cplx random_in_disc(std::mt19937_64& gen, double r_max) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::polar(r_max * std::sqrt(u(gen)), 2.0 * kPi * u(gen));
}

}  // namespace

TEST_CASE("poly_ops examples") {
  CHECK(poly_ops(Poly{1.0, 1.0}, Poly{1.0, -1.0}, PolyOp::Add).coeffs() == std::vector<cplx>{2.0});
  CHECK(poly_ops(Poly{0.0, 1.0}, Poly{0.0, 1.0}, PolyOp::Mul).coeffs() == std::vector<cplx>{0.0, 0.0, 1.0});
  CHECK(poly_ops(Poly{0.0, 0.0, 1.0}, Poly{1.0, 1.0}, PolyOp::Compose).coeffs() == std::vector<cplx>{1.0, 2.0, 1.0});
}

TEST_CASE("poly products and compositions agree pointwise and respect degree bounds") {
  std::mt19937_64 gen(11);
  std::normal_distribution<double> n01;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<cplx> a(1 + trial % 4), b(2 + trial % 3);
    for (auto& c : a) c = {n01(gen), n01(gen)};
    for (auto& c : b) c = {n01(gen), n01(gen)};
    const Poly pa(a), pb(b);
    const Poly prod = pa * pb, comp = compose(pa, pb);
    CHECK(prod.degree() == pa.degree() + pb.degree());
    if (pa.degree() >= 1) CHECK(comp.degree() == pa.degree() * pb.degree());
    for (int k = 0; k < 8; ++k) {
      const cplx z = random_in_disc(gen, 1.2);
      CHECK(close(prod(z), eval_powers(a, z) * eval_powers(b, z), 1e-11));
      CHECK(close(comp(z), eval_powers(a, eval_powers(b, z)), 1e-10 * std::max(1.0, std::abs(comp(z)))));
    }
  }
}

TEST_CASE("poly_roots examples") {
  auto sorted = [](std::vector<cplx> r) {
    std::sort(r.begin(), r.end(), [](cplx x, cplx y) { return x.real() < y.real(); });
    return r;
  };
  const auto r1 = sorted(poly_roots(Poly{-1.0, 0.0, 1.0}));
  REQUIRE(r1.size() == 2);
  CHECK(close(r1[0], -1.0, 1e-12));
  CHECK(close(r1[1], 1.0, 1e-12));

  const auto r2 = poly_roots(Poly{0.0, 0.0, 1.0});
  REQUIRE(r2.size() == 2);
  CHECK(close(r2[0], 0.0, 1e-8));
  CHECK(close(r2[1], 0.0, 1e-8));

  const auto r3 = sorted(poly_roots(Poly{0.0, -0.5, 1.0}));
  REQUIRE(r3.size() == 2);
  CHECK(close(r3[0], 0.0, 1e-12));
  CHECK(close(r3[1], 0.5, 1e-12));

  CHECK_THROWS_AS(poly_roots(Poly{3.0}), Error);
}

TEST_CASE("roots re-expand to the monic polynomial and have small residuals") {
  std::mt19937_64 gen(12);
  std::normal_distribution<double> n01;
  for (int deg = 1; deg <= 8; ++deg) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<cplx> c(static_cast<std::size_t>(deg) + 1);
      for (auto& x : c) x = {n01(gen), n01(gen)};
      const Poly p(c);
      const auto roots = poly_roots(p);
      REQUIRE(static_cast<int>(roots.size()) == deg);
      for (cplx r : roots) CHECK(std::abs(p(r)) <= 1e-10 * p.max_abs_coeff() * std::max(1.0, std::pow(std::abs(r), deg)));
      const Poly back = Poly::from_roots(roots);
      const cplx lead = p.leading();
      double err = 0.0, scale = 0.0;
      for (int k = 0; k <= deg; ++k) {
        err = std::max(err, std::abs(back[k] - p[k] / lead));
        scale = std::max(scale, std::abs(p[k] / lead));
      }
      CHECK(err <= 1e-8 * scale);
    }
  }
}

TEST_CASE("rational_reduce examples") {
  const RationalMap a = rational_reduce(RationalMap(Poly{0.0, -1.0, 1.0}, Poly{0.0, 1.0}));
  CHECK(a.degree() == 1);
  CHECK(close(a(0.3), -0.7, 1e-14));

  CHECK(rational_reduce(RationalMap(Poly{0.0, 0.0, 1.0})).degree() == 2);

  const RationalMap c = rational_reduce(RationalMap(Poly{0.0, 1.0, 0.0, 1.0}, Poly{1.0, 0.0, 1.0}));
  CHECK(c.degree() == 1);
  CHECK(close(c(0.25 + 0.5i), 0.25 + 0.5i, 1e-13));

  CHECK_THROWS_AS(rational_reduce(RationalMap(Poly{1.0}, Poly{})), Error);
}

TEST_CASE("rational_reduce is idempotent and preserves values") {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<cplx> shared{random_in_disc(gen, 3.0) + 1.5, random_in_disc(gen, 3.0) - 1.5};
    std::vector<cplx> zn{random_in_disc(gen, 2.0), random_in_disc(gen, 2.0)};
    std::vector<cplx> zd{random_in_disc(gen, 0.5) * 3.0 + 2.0};
    std::vector<cplx> all_n = zn, all_d = zd;
    all_n.insert(all_n.end(), shared.begin(), shared.end());
    all_d.insert(all_d.end(), shared.begin(), shared.end());
    const RationalMap raw(Poly::from_roots(all_n, 0.7 - 0.2i), Poly::from_roots(all_d));
    const RationalMap once = rational_reduce(raw);
    const RationalMap twice = rational_reduce(once);
    CHECK(once.degree() == 2);
    CHECK(twice.degree() == once.degree());
    CHECK(coefficient_distance(once, twice) <= 1e-13);
    for (int k = 0; k < 6; ++k) {
      const cplx z = random_in_disc(gen, 1.0);
      const cplx want = eval_powers(raw.num().coeffs(), z) / eval_powers(raw.den().coeffs(), z);
      CHECK(close(once(z), want, 1e-10 * std::max(1.0, std::abs(want))));
    }
  }
}

TEST_CASE("arithmetic on rational maps matches pointwise arithmetic") {
  const RationalMap f(Poly{1.0, 2.0}, Poly{3.0, -1.0});
  const RationalMap g(Poly{0.0, 1.0, 1.0}, Poly{2.0, 0.5});
  for (cplx z : {cplx{0.1, 0.2}, cplx{-0.5, 0.3}, cplx{0.9, 0.0}}) {
    const cplx fz = (1.0 + 2.0 * z) / (3.0 - z), gz = (z + z * z) / (2.0 + 0.5 * z);
    CHECK(close((f + g)(z), fz + gz, 1e-13));
    CHECK(close((f - g)(z), fz - gz, 1e-13));
    CHECK(close((f * g)(z), fz * gz, 1e-13));
    CHECK(close((f / g)(z), fz / gz, 1e-12));
    CHECK(close(compose(f, g)(z), (1.0 + 2.0 * gz) / (3.0 - gz), 1e-13));
  }
  CHECK_THROWS_AS(f / RationalMap(), Error);
}

TEST_CASE("blaschke_eval examples") {
  const cplx alpha{0.3, -0.4};
  CHECK(close(BlaschkeProduct::factor(alpha)(alpha), 0.0, 1e-15));
  CHECK(close(MoebiusMap(0.0)(0.3), -0.3, 1e-15));
  CHECK(close(MoebiusMap(0.5)(0.0), 0.5, 1e-15));
  CHECK(close(blaschke_eval(BlaschkeProduct::factor(0.5), 0.0), 0.5, 1e-15));
}

TEST_CASE("Blaschke products are unimodular on the circle and contractive inside") {
  std::mt19937_64 gen(14);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<cplx> zeros;
    for (int k = 0; k < 1 + trial % 4; ++k) zeros.push_back(random_in_disc(gen, 0.95));
    const BlaschkeProduct b(std::polar(1.0, 0.1 * trial), zeros);
    const RationalMap r = b.to_rational();
    for (int j = 0; j < 256; ++j) {
      const cplx t = std::polar(1.0, 2.0 * kPi * j / 256);
      CHECK(std::abs(std::abs(b(t)) - 1.0) <= 1e-12);
      CHECK(close(r(t), b(t), 1e-12));
    }
    for (int j = 0; j < 16; ++j) CHECK(std::abs(b(random_in_disc(gen, 0.99))) < 1.0);
    // factor-by-factor evaluation with the (alpha - z) / (1 - conj(alpha) z) orientation
    const cplx z = random_in_disc(gen, 0.9);
    cplx want = b.unimodular();
    for (cplx a : zeros) want *= (a - z) / (1.0 - std::conj(a) * z);
    CHECK(close(b(z), want, 1e-14));
  }
}

TEST_CASE("blaschke_mul examples") {
  const BlaschkeProduct a = BlaschkeProduct::factor(0.0), b = BlaschkeProduct::factor(0.5);
  const BlaschkeProduct ab = blaschke_mul(a, b);
  CHECK(ab.degree() == 2);
  CHECK(close(ab(0.0), 0.0, 1e-15));
  const BlaschkeProduct rot = blaschke_mul(b, BlaschkeProduct(1i, {}));
  CHECK(rot.zeros() == b.zeros());
  CHECK(close(rot(0.2), 1i * b(0.2), 1e-15));
  CHECK_THROWS_AS(BlaschkeProduct(1.0, {1.0}), Error);
  CHECK_THROWS_AS(BlaschkeProduct(0.5, {}), Error);
}

TEST_CASE("is_inner examples") {
  CHECK(is_inner(RationalMap(Poly{0.0, 0.0, 1.0}), 1e-12));
  CHECK_FALSE(is_inner(RationalMap(Poly{0.0, 0.5}), 1e-12));
  CHECK(is_inner(MoebiusMap(0.5).to_rational(), 1e-12));
  CHECK_THROWS_AS(is_inner(RationalMap(Poly{1.0}, Poly{0.5, -1.0}), 1e-12), Error);
}

TEST_CASE("poincare_distance examples and metric properties") {
  CHECK(poincare_distance(0.0, 0.0) == doctest::Approx(0.0));
  CHECK(poincare_distance(0.0, 0.5) == doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-14));
  CHECK(poincare_distance(0.0, 0.5) == doctest::Approx(0.549306).epsilon(1e-6));
  CHECK_THROWS_AS(poincare_distance(0.0, 1.0), Error);

  std::mt19937_64 gen(15);
  for (int k = 0; k < 1000; ++k) {
    const cplx a = random_in_disc(gen, 0.99), b = random_in_disc(gen, 0.99), c = random_in_disc(gen, 0.99);
    const double ab = poincare_distance(a, b), bc = poincare_distance(b, c), ac = poincare_distance(a, c);
    CHECK(ab == doctest::Approx(poincare_distance(b, a)).epsilon(1e-12));
    CHECK(ab == doctest::Approx(rho_cosh(a, b)).epsilon(1e-8));
    CHECK(ab + bc - ac >= -1e-12);
  }
}

TEST_CASE("disc automorphisms compose with their inverse to the identity") {
  const DiscAutomorphism nu(std::polar(1.0, 0.7), {0.3, 0.2});
  const DiscAutomorphism inv = nu.inverse();
  for (cplx z : {cplx{0.1, 0.1}, cplx{-0.6, 0.2}, cplx{0.0, 0.9}}) {
    CHECK(close(inv(nu(z)), z, 1e-14));
    CHECK(close(nu.to_rational()(z), nu(z), 1e-14));
  }
  CHECK(close(nu(nu.alpha()), 0.0, 1e-15));
}

TEST_CASE("fit_minimal_degree recovers the degree of a sampled map") {
  const RationalMap target(Poly{0.2, -1.0, 0.5}, Poly{1.0, 0.0, 0.3});
  const auto fit = fit_minimal_degree([&](cplx z) { return target(z); }, 5, 1.0, 1e-11);
  REQUIRE(fit.has_value());
  CHECK(fit->degree() == 2);
  CHECK(coefficient_distance(*fit, target) <= 1e-11);
}
