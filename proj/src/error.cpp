#include "bajra/error.hpp"

namespace bajra {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyProfile: return "EmptyProfile";
    case Errc::MismatchedLengths: return "MismatchedLengths";
    case Errc::NegativeWeight: return "NegativeWeight";
    case Errc::ZeroWeightVector: return "ZeroWeightVector";
    case Errc::NonFiniteValue: return "NonFiniteValue";
    case Errc::DomainViolation: return "DomainViolation";
    case Errc::WrongDimension: return "WrongDimension";
    case Errc::MismatchedShapes: return "MismatchedShapes";
    case Errc::NonPositiveDecision: return "NonPositiveDecision";
    case Errc::ConstantDecisions: return "ConstantDecisions";
    case Errc::RankDeficientSamples: return "RankDeficientSamples";
    case Errc::TooFewParties: return "TooFewParties";
    case Errc::InvalidGame: return "InvalidGame";
    case Errc::BadArguments: return "BadArguments";
    case Errc::NonMonotoneRatio: return "NonMonotoneRatio";
    case Errc::ZeroCrossingInF2: return "ZeroCrossingInF2";
    case Errc::ParseError: return "ParseError";
    case Errc::RootNotBracketed: return "RootNotBracketed";
    case Errc::OutsideCone: return "OutsideCone";
    case Errc::ConvergenceFailure: return "ConvergenceFailure";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_numeric_failure(Errc code) noexcept {
  return code == Errc::RootNotBracketed || code == Errc::OutsideCone ||
         code == Errc::ConvergenceFailure || code == Errc::Internal;
}

}  // namespace bajra
