#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bajra {

enum class Errc {
  // validation of caller input
  EmptyProfile,
  MismatchedLengths,
  NegativeWeight,
  ZeroWeightVector,
  NonFiniteValue,
  DomainViolation,
  WrongDimension,
  MismatchedShapes,
  NonPositiveDecision,
  ConstantDecisions,
  RankDeficientSamples,
  TooFewParties,
  InvalidGame,
  BadArguments,
  // map construction
  NonMonotoneRatio,
  ZeroCrossingInF2,
  ParseError,
  // numerics
  RootNotBracketed,
  OutsideCone,
  ConvergenceFailure,
  Internal,
};

std::string_view to_string(Errc code) noexcept;

/// True for errors caused by the numeric machinery rather than by the input.
bool is_numeric_failure(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace bajra
