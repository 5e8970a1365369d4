#pragma once

#include <vector>

#include "xdisc/domains.hpp"
#include "xdisc/rational.hpp"

namespace xdisc {

/// A rational analytic disc f: D -> target, one RationalMap per ambient
/// coordinate (matrix targets row-major).
class Disc {
 public:
  Disc() = default;
  /// Throws Errc::DimensionMismatch when the component count does not match
  /// the target's ambient dimension.
  Disc(std::vector<RationalMap> components, DomainId target);

  const std::vector<RationalMap>& components() const noexcept { return components_; }
  const RationalMap& operator[](std::size_t k) const { return components_[k]; }
  std::size_t size() const noexcept { return components_.size(); }
  const DomainId& target() const noexcept { return target_; }

  PointND operator()(cplx lambda) const;
  CMatrix2 matrix(cplx lambda) const;

  /// Max post-reduction degree over the components.
  int degree() const;

 private:
  std::vector<RationalMap> components_;
  DomainId target_;
};

/// Some component has a pole on the closed unit disc.
bool has_pole_on_closed_disc(const Disc& f);

/// Throws Errc::PoleOnClosedDisc.
void require_analytic_on_closed_disc(const Disc& f);

/// f(r e^{i theta}) in the target at n points on each of the radii
/// 0, 0.5, 0.9 (open) or on the unit circle too (closed).
bool sampled_membership(const Disc& f, Closure mode, int n = 64);

/// lambda -> B(lambda) f(lambda) style products with a scalar map.
Disc scale(const Disc& f, const RationalMap& factor);

/// lambda -> f(g(lambda)).
Disc compose(const Disc& f, const RationalMap& g);

/// Max coefficient distance over components after reduction.
double coefficient_distance(const Disc& a, const Disc& b);

}  // namespace xdisc
