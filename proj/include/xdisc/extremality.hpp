#pragma once

// Pick-matrix certificates for extremal solvability, left inverses of
// m-complex geodesics, the infeasibility functional for 4-extremals in the
// ball and the one-step improvement of discs used for the Lempert function.

#include <Eigen/Dense>

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xdisc/disc.hpp"
#include "xdisc/matrix2.hpp"
#include "xdisc/rational.hpp"

namespace xdisc {

/// m >= 2 pairwise distinct interpolation nodes in the open disc.
class NodeSet {
 public:
  /// Throws Errc::DegenerateNodes (fewer than 2 nodes, or two nodes closer
  /// than 1e-8) or Errc::ParameterOutOfRange (a node with |z| >= 1).
  explicit NodeSet(std::vector<cplx> nodes);

  const std::vector<cplx>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  cplx operator[](std::size_t k) const { return nodes_[k]; }

 private:
  std::vector<cplx> nodes_;
};

enum class Verdict { NotSolvable, StrictlySolvable, ExtremallySolvable };

const char* to_string(Verdict v) noexcept;
Verdict parse_verdict(const std::string& s);

struct PickCertificate {
  Eigen::MatrixXcd matrix;
  std::vector<double> eigenvalues;  // ascending
  Verdict verdict = Verdict::StrictlySolvable;
  int rank = 0;
  double tolerance = 0.0;  // absolute band epsilon used for the verdict
  std::string scope;       // caveat attached to the verdict, empty if none
  std::optional<BlaschkeProduct> interpolant;

  double min_eigenvalue() const { return eigenvalues.empty() ? 0.0 : eigenvalues.front(); }
};

constexpr double kPickRelTol = 1e-9;

/// Classifies a Hermitian matrix: epsilon = rel_tol * max(1, largest eigenvalue).
PickCertificate classify_pick_matrix(Eigen::MatrixXcd matrix, double rel_tol = kPickRelTol);

/// [(1 - z_i conj(z_j)) / (1 - l_i conj(l_j))]. With reconstruct set, an
/// ExtremallySolvable certificate carries the unique Blaschke interpolant,
/// recovered by the Schur algorithm. Throws Errc::SizeMismatch.
PickCertificate pick_scalar(const NodeSet& nodes, std::span<const cplx> targets, double rel_tol = kPickRelTol,
                            bool reconstruct = false);

/// 2m x 2m matrix with blocks (I - W_i W_j^*) / (1 - l_i conj(l_j)).
/// Throws Errc::SizeMismatch, Errc::TargetNotContractive.
PickCertificate pick_block(const NodeSet& nodes, std::span<const CMatrix2> targets, double rel_tol = kPickRelTol);

/// Row-contraction version for ball targets: entries (1 - <w_i, w_j>) / (1 - l_i conj(l_j)).
PickCertificate pick_row(const NodeSet& nodes, std::span<const PointND> targets, double rel_tol = kPickRelTol);

/// Evaluates f at the nodes and certifies the data for its target:
/// Disc (scalar), Polydisc (direct sum of the coordinate Picks), Ball (row
/// contraction), CartanI and CartanII (block; for CartanII only an
/// ExtremallySolvable verdict is conclusive, noted in `scope`).
/// Throws Errc::PoleOnClosedDisc, Errc::NodeOutsideDomainImage, Errc::UnsupportedTarget.
PickCertificate certify_disc(const Disc& f, const NodeSet& nodes, double rel_tol = kPickRelTol);

/// Polynomial F on the ambient space of a disc: sum of coeff * prod z_k^{p_k}.
struct PolyMap {
  struct Term {
    cplx coeff;
    std::vector<int> powers;
  };
  int dim = 0;
  std::vector<Term> terms;

  static PolyMap coordinate(int dim, int index);

  cplx operator()(const PointND& z) const;
  /// Exact composite F o f. Throws Errc::DimensionMismatch.
  RationalMap compose(const Disc& f) const;
};

/// Recognizes a rational inner map as a finite Blaschke product.
std::optional<BlaschkeProduct> recognize_blaschke(const RationalMap& r, double tol = 1e-9);

struct LeftInverseResult {
  bool ok = false;
  RationalMap composite;  // reduced F o f
  int degree = 0;
  bool inner = false;
  std::optional<BlaschkeProduct> blaschke;
};

/// ok iff F o f is inner (tol 1e-9), nonconstant and of degree <= m - 1.
/// Throws Errc::CompositionNotAnalytic when f has a pole on the closed disc.
LeftInverseResult left_inverse_check(const PolyMap& F, const Disc& f, int m);

/// (a1^2 - |g|^2)^2 + |g|^2 (1 - |g|^2) (1 - a1^2).
double four_extremal_functional(double a1, cplx gamma);

struct ScanResult {
  double min_value;
  double a1;
  cplx gamma;
};

/// Minimum of four_extremal_functional over the product grid.
/// Throws Errc::EmptyGrid, Errc::ParameterOutOfRange.
ScanResult four_extremal_scan(std::span<const double> a1_grid, std::span<const cplx> gamma_grid);

/// g~(l) = g(l) + l / (t sigma) (g(sigma) - g(t sigma)), so g~(0) = g(0) and
/// g~(t sigma) = g(sigma). Balanced targets only. Throws
/// Errc::PerturbationTooLarge when the gauge of the correction is not below
/// the distance of g(closed disc) to the boundary (sampled at 256 points).
Disc improvement_step(const Disc& g, double sigma, double t);

/// Lempert function of the disc, which is the Poincare distance.
double lempert_disc(cplx z1, cplx z2);

}  // namespace xdisc
