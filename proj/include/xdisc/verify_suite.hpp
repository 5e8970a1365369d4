#pragma once

// The reproduction suite behind `xdisc verify-paper` and the acceptance
// test: ten seeded property checks, each reduced to a max_error compared
// against a declared tolerance.

#include <cstdint>
#include <string>
#include <vector>

#include "xdisc/json_io.hpp"

namespace xdisc {

struct CheckResult {
  std::string id;
  bool pass = false;
  double max_error = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  double tol_scale = 1.0;
  std::vector<CheckResult> checks;  // sorted by id

  int passed() const;
  int failed() const { return static_cast<int>(checks.size()) - passed(); }
  bool all_pass() const { return failed() == 0; }
};

constexpr std::uint64_t kDefaultSeed = 20240611;

/// tol_scale multiplies every upper tolerance and divides every lower bound,
/// so values below 1 tighten all checks.
VerifyReport run_verify_suite(std::uint64_t seed = kDefaultSeed, double tol_scale = 1.0);

json to_json(const VerifyReport& r);

/// "PASS 03-left-inverse max_error=... tolerance=... | detail".
std::string format_line(const CheckResult& c);

}  // namespace xdisc
