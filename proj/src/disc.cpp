#include "xdisc/disc.hpp"

#include <algorithm>
#include <numbers>

#include "xdisc/error.hpp"

namespace xdisc {

Disc::Disc(std::vector<RationalMap> components, DomainId target)
    : components_(std::move(components)), target_(target) {
  if (static_cast<int>(components_.size()) != target_.ambient_dim())
    throw Error(Errc::DimensionMismatch, target_.name() + " discs need " + std::to_string(target_.ambient_dim()) +
                                             " components, got " + std::to_string(components_.size()));
}

PointND Disc::operator()(cplx lambda) const {
  PointND x;
  x.coords.reserve(components_.size());
  for (const auto& c : components_) x.coords.push_back(c(lambda));
  return x;
}

CMatrix2 Disc::matrix(cplx lambda) const { return as_matrix((*this)(lambda)); }

int Disc::degree() const {
  int d = 0;
  for (const auto& c : components_) d = std::max(d, rational_reduce(c).degree());
  return d;
}

bool has_pole_on_closed_disc(const Disc& f) {
  return std::any_of(f.components().begin(), f.components().end(),
                     [](const RationalMap& r) { return has_pole_on_closed_disc(r); });
}

void require_analytic_on_closed_disc(const Disc& f) {
  if (has_pole_on_closed_disc(f)) throw Error(Errc::PoleOnClosedDisc, "disc has a pole on the closed unit disc");
}

bool sampled_membership(const Disc& f, Closure mode, int n) {
  std::vector<double> radii{0.0, 0.5, 0.9};
  if (mode == Closure::Closed) radii.push_back(1.0);
  for (double r : radii) {
    for (int k = 0; k < n; ++k) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * (k + 0.5) / n);
      if (!contains(f.target(), f(z), mode)) return false;
    }
  }
  return true;
}

Disc scale(const Disc& f, const RationalMap& factor) {
  std::vector<RationalMap> out;
  for (const auto& c : f.components()) out.push_back(factor * c);
  return {std::move(out), f.target()};
}

Disc compose(const Disc& f, const RationalMap& g) {
  std::vector<RationalMap> out;
  for (const auto& c : f.components()) out.push_back(compose(c, g));
  return {std::move(out), f.target()};
}

double coefficient_distance(const Disc& a, const Disc& b) {
  if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "discs have different dimensions");
  double err = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) err = std::max(err, coefficient_distance(a[k], b[k]));
  return err;
}

}  // namespace xdisc
