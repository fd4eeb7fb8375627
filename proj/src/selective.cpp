#include "bajra/selective.hpp"

#include <algorithm>

namespace bajra {

namespace {

// first index attaining max(w): every earlier weight is strictly smaller
std::size_t first_argmax(const std::vector<double>& w) {
  return static_cast<std::size_t>(std::max_element(w.begin(), w.end()) - w.begin());
}

}  // namespace

std::string_view to_string(SelectiveRule rule) noexcept {
  switch (rule) {
    case SelectiveRule::PrimacyEffect: return "pe";
    case SelectiveRule::RecencyEffect: return "re";
    case SelectiveRule::FirstDominatingDecision: return "fdd";
    case SelectiveRule::FirstDominant: return "fd";
  }
  return "?";
}

std::optional<SelectiveRule> parse_selective_rule(std::string_view name) noexcept {
  if (name == "pe") return SelectiveRule::PrimacyEffect;
  if (name == "re") return SelectiveRule::RecencyEffect;
  if (name == "fdd") return SelectiveRule::FirstDominatingDecision;
  if (name == "fd") return SelectiveRule::FirstDominant;
  return std::nullopt;
}

Point select(SelectiveRule rule, const DecisionProfile& p) {
  const auto& w = p.weights();
  switch (rule) {
    case SelectiveRule::PrimacyEffect: {
      const auto it = std::find_if(w.begin(), w.end(), [](double x) { return x != 0.0; });
      return p.decision(static_cast<std::size_t>(it - w.begin()));
    }
    case SelectiveRule::RecencyEffect: {
      const auto it = std::find_if(w.rbegin(), w.rend(), [](double x) { return x != 0.0; });
      return p.decision(p.size() - 1 - static_cast<std::size_t>(it - w.rbegin()));
    }
    case SelectiveRule::FirstDominatingDecision:
      return p.decision(first_argmax(w));
    case SelectiveRule::FirstDominant: {
      std::vector<double> pooled(p.size(), 0.0);
      for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
          if (p.decision(j) == p.decision(i)) pooled[i] += w[j];
        }
      }
      return p.decision(first_argmax(pooled));
    }
  }
  return p.decision(0);
}

double arithmetic_effort(const DecisionProfile& p) { return p.total_weight(); }

}  // namespace bajra
