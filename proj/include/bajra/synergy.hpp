#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "bajra/domain.hpp"
#include "bajra/families.hpp"
#include "bajra/maps.hpp"
#include "bajra/profiles.hpp"

namespace bajra {

using EffortFunction = std::function<double(const DecisionProfile&)>;

/// beta_f as an effort function.
EffortFunction effort_of(MapPtr map);

/// sigma_E(x, lambda) = E(x, lambda) - sum of the weights.
double synergy(const EffortFunction& effort, const DecisionProfile& p);

/// |sigma| at or below this counts as sign 0.
inline constexpr double kSynergySignBand = 1e-8;

int sign_with_band(double value, double band = kSynergySignBand) noexcept;

/// sign(sigma_{gamma_{p,q}}(x, lambda)) from the closed-form Gini effort. The
/// decisions must be positive and not all equal, the weights strictly positive.
int gini_synergy_sign(GiniParams params, const DecisionProfile& p);

struct NullSynergyReport {
  bool zero_synergy = true;
  bool associative = true;
  bool flat_formula_matches = true;
  double max_abs_synergy = 0.0;  // relative to the total weight
  std::size_t trials = 0;
};

/// Probes the three equivalent characterizations of quasi-arithmetic means on
/// random profiles: sigma == 0, associativity with the arithmetic effort, and
/// B_f = f^-1(sum lambda f / sum lambda).
NullSynergyReport check_null_synergy(const AdmissibleMap& map, std::size_t trials, Rng& rng);

/// A weighted-vote game with the threshold effort rule: a coalition at or
/// above the quota is worth the whole house, otherwise its own votes.
struct CoalitionGame {
  std::vector<double> party_weights;
  double quota = 51.0;
  double total = 100.0;
};

/// Validates: positive weights summing to `total`, 0 < quota <= total.
CoalitionGame make_game(std::vector<double> weights, double quota = 51.0, double total = 100.0);

using Coalition = std::vector<std::size_t>;

/// Party letters: 0 -> "A", 1 -> "B", ...
std::string coalition_label(const Coalition& c);

double threshold_effort(const CoalitionGame& game, const Coalition& c);

struct SynergyReport {
  Coalition coalition;
  double threshold_effort;
  double sum_individual;  // sum of the members' stand-alone threshold efforts
  double synergy;
};

/// Every coalition with at least two members, ordered by size then
/// lexicographically.
std::vector<SynergyReport> coalition_table(const CoalitionGame& game);

struct StabilityReport {
  std::vector<Coalition> stable;
  /// Pairs with zero synergy.
  std::vector<Coalition> irrelevant;
};

/// A pair {i, j} is stable when both members prefer it to every other pair
/// they could join and to staying alone (synergy 0). Weak preference uses
/// >=, strict uses >.
StabilityReport stable_coalitions(const CoalitionGame& game, bool strict = false);

/// CSV with columns coalition,threshold_effort,sum_individual,synergy.
std::string coalition_csv(const std::vector<SynergyReport>& table);

}  // namespace bajra
