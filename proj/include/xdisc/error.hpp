#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace xdisc {

enum class Errc {
  ConstantPolynomial,
  ZeroDenominator,
  PoleOnClosedDisc,
  PointOnBoundary,
  NotSymmetric,
  NotHermitian,
  NegativeEigenvalue,
  DimensionMismatch,
  UnsupportedDomain,
  NotOnCartanBoundary,
  ParameterNotContractive,
  SingularResolvent,
  DenominatorVanishes,
  SizeMismatch,
  TargetNotContractive,
  NodeOutsideDomainImage,
  CompositionNotAnalytic,
  EmptyGrid,
  PerturbationTooLarge,
  DegenerateNodes,
  ParameterOutOfRange,
  UnsupportedTarget,
  FitResidualTooLarge,
  ParameterInvalid,
  DegreeTooHigh,
  OddMultiplicityZero,
  BranchInconsistent,
  IoError,
  ParseError,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace xdisc
