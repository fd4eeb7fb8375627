#pragma once

#include <optional>
#include <string_view>

#include "bajra/profiles.hpp"

namespace bajra {

/// Conservative aggregators: the output is always one of the inputs.
enum class SelectiveRule {
  PrimacyEffect,            // pe
  RecencyEffect,            // re
  FirstDominatingDecision,  // fdd
  FirstDominant,            // fd
};

std::string_view to_string(SelectiveRule rule) noexcept;
/// Parses the CLI names `pe`, `re`, `fdd`, `fd`.
std::optional<SelectiveRule> parse_selective_rule(std::string_view name) noexcept;

Point select(SelectiveRule rule, const DecisionProfile& p);

/// alpha(x, lambda) = sum of the weights.
double arithmetic_effort(const DecisionProfile& p);

}  // namespace bajra
