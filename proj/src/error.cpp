#include "xdisc/error.hpp"

namespace xdisc {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ConstantPolynomial: return "ConstantPolynomial";
    case Errc::ZeroDenominator: return "ZeroDenominator";
    case Errc::PoleOnClosedDisc: return "PoleOnClosedDisc";
    case Errc::PointOnBoundary: return "PointOnBoundary";
    case Errc::NotSymmetric: return "NotSymmetric";
    case Errc::NotHermitian: return "NotHermitian";
    case Errc::NegativeEigenvalue: return "NegativeEigenvalue";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::UnsupportedDomain: return "UnsupportedDomain";
    case Errc::NotOnCartanBoundary: return "NotOnCartanBoundary";
    case Errc::ParameterNotContractive: return "ParameterNotContractive";
    case Errc::SingularResolvent: return "SingularResolvent";
    case Errc::DenominatorVanishes: return "DenominatorVanishes";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::TargetNotContractive: return "TargetNotContractive";
    case Errc::NodeOutsideDomainImage: return "NodeOutsideDomainImage";
    case Errc::CompositionNotAnalytic: return "CompositionNotAnalytic";
    case Errc::EmptyGrid: return "EmptyGrid";
    case Errc::PerturbationTooLarge: return "PerturbationTooLarge";
    case Errc::DegenerateNodes: return "DegenerateNodes";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::UnsupportedTarget: return "UnsupportedTarget";
    case Errc::FitResidualTooLarge: return "FitResidualTooLarge";
    case Errc::ParameterInvalid: return "ParameterInvalid";
    case Errc::DegreeTooHigh: return "DegreeTooHigh";
    case Errc::OddMultiplicityZero: return "OddMultiplicityZero";
    case Errc::BranchInconsistent: return "BranchInconsistent";
    case Errc::IoError: return "IoError";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace xdisc
