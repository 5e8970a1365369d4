#pragma once

#include <cstdint>
#include <random>

#include "xdisc/matrix2.hpp"
#include "xdisc/rational.hpp"

namespace xdisc {

/// Seeded random draws of the objects the checks and tests need.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi);
  double gaussian();
  cplx complex_gaussian();
  /// Uniform in the disc of radius r_max (area measure).
  cplx in_disc(double r_max = 1.0);
  cplx unimodular();

  CMatrix2 gaussian_matrix();
  /// Symmetric with s1 uniform in [0, max_norm).
  CMatrix2 symmetric_contraction(double max_norm);
  /// Any matrix with s1 uniform in [0, max_norm).
  CMatrix2 contraction(double max_norm);
  /// Haar on SU(2) times a random phase.
  CMatrix2 unitary();
  /// V V^t for a random unitary V.
  CMatrix2 unitary_symmetric();

  /// Zeros uniform in the disc of radius r_max, random unimodular constant.
  BlaschkeProduct blaschke(int degree, double r_max = 0.9);

  std::mt19937_64& engine() noexcept { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// Independent stream for check number `index` under a run seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace xdisc
