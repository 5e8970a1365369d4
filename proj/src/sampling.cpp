#include "xdisc/sampling.hpp"

#include <cmath>
#include <numbers>

namespace xdisc {

double Sampler::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }

double Sampler::gaussian() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }

cplx Sampler::complex_gaussian() {
  const double re = gaussian();
  return {re, gaussian()};
}

cplx Sampler::in_disc(double r_max) {
  const double r = r_max * std::sqrt(uniform(0.0, 1.0));
  return std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
}

cplx Sampler::unimodular() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

CMatrix2 Sampler::gaussian_matrix() {
  CMatrix2 m;
  for (auto& e : m.e) e = complex_gaussian();
  return m;
}

CMatrix2 Sampler::symmetric_contraction(double max_norm) {
  CMatrix2 m = gaussian_matrix();
  m.e[2] = m.e[1];
  return (uniform(0.0, max_norm) / op_norm(m)) * m;
}

CMatrix2 Sampler::contraction(double max_norm) {
  const CMatrix2 m = gaussian_matrix();
  return (uniform(0.0, max_norm) / op_norm(m)) * m;
}

CMatrix2 Sampler::unitary() {
  cplx a = complex_gaussian(), b = complex_gaussian();
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  a /= n;
  b /= n;
  const cplx ph = unimodular();
  return {a, b, -ph * std::conj(b), ph * std::conj(a)};
}

CMatrix2 Sampler::unitary_symmetric() {
  const CMatrix2 v = unitary();
  return v * v.transpose();
}

BlaschkeProduct Sampler::blaschke(int degree, double r_max) {
  std::vector<cplx> zeros;
  for (int k = 0; k < degree; ++k) zeros.push_back(in_disc(r_max));
  return {unimodular(), std::move(zeros)};
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace xdisc
