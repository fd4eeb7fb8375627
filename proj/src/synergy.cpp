#include "bajra/synergy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <fmt/format.h>

#include "bajra/error.hpp"
#include "bajra/means.hpp"
#include "bajra/properties.hpp"

namespace bajra {

EffortFunction effort_of(MapPtr map) {
  return [map = std::move(map)](const DecisionProfile& p) { return effort(*map, p); };
}

double synergy(const EffortFunction& effort_fn, const DecisionProfile& p) {
  return effort_fn(p) - p.total_weight();
}

int sign_with_band(double value, double band) noexcept {
  if (std::abs(value) <= band) return 0;
  return value > 0.0 ? 1 : -1;
}

int gini_synergy_sign(GiniParams params, const DecisionProfile& p) {
  for (double w : p.weights()) {
    if (!(w > 0.0)) throw Error(Errc::BadArguments, "synergy sign needs strictly positive weights");
  }
  if (p.dim() != 1) throw Error(Errc::WrongDimension, "Gini means take scalar decisions");
  const auto& xs = p.decisions();
  if (std::all_of(xs.begin(), xs.end(), [&](const Point& x) { return x == xs.front(); })) {
    throw Error(Errc::ConstantDecisions, "synergy sign needs nonconstant decisions");
  }
  return sign_with_band(gini_effort(params, p) - p.total_weight());
}

NullSynergyReport check_null_synergy(const AdmissibleMap& map, std::size_t trials, Rng& rng) {
  NullSynergyReport r;
  r.trials = trials;
  std::uniform_int_distribution<std::size_t> size(2, 5);
  for (std::size_t t = 0; t < trials; ++t) {
    const DecisionProfile xp = random_profile(map.domain(), size(rng), rng);
    const DecisionProfile yp = random_profile(map.domain(), size(rng), rng);

    const AggregationOutcome whole = aggregate(map, xp);
    const double alpha = xp.total_weight();
    const double sigma = (whole.effort - alpha) / alpha;
    r.max_abs_synergy = std::max(r.max_abs_synergy, std::abs(sigma));
    if (std::abs(sigma) > kDecisionTol.rel) r.zero_synergy = false;

    const Point joint = mean(map, xp.concatenated(yp));
    const Point chained = mean(map, singleton(whole.decision, alpha).concatenated(yp));
    if (!close(joint, chained, kDecisionTol)) r.associative = false;

    // f^-1 of the normalized image sum: defined only if that point is in f(D)
    Vec centroid = image_sum(map, xp);
    for (double& c : centroid) c /= alpha;
    const RaySolution flat = ray_solve(map, centroid);
    if (!close(flat.effort, 1.0, kDecisionTol) || !close(flat.decision, whole.decision, kDecisionTol)) {
      r.flat_formula_matches = false;
    }
  }
  return r;
}

CoalitionGame make_game(std::vector<double> weights, double quota, double total) {
  if (weights.empty()) throw Error(Errc::TooFewParties, "game has no parties");
  CompensatedSum s;
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(Errc::InvalidGame, "party weights must be positive");
    }
    s.add(w);
  }
  if (!(total > 0.0) || !(quota > 0.0) || quota > total) {
    throw Error(Errc::InvalidGame, "need 0 < quota <= total");
  }
  if (!close(s.value(), total, Tolerance{1e-12, 1e-9})) {
    throw Error(Errc::InvalidGame,
                fmt::format("party weights sum to {} but the house has {}", s.value(), total));
  }
  return {std::move(weights), quota, total};
}

std::string coalition_label(const Coalition& c) {
  std::string s;
  for (std::size_t i : c) {
    if (i < 26) {
      s += static_cast<char>('A' + i);
    } else {
      s += fmt::format("P{}", i + 1);
    }
  }
  return s;
}

double threshold_effort(const CoalitionGame& game, const Coalition& c) {
  double votes = 0.0;
  for (std::size_t i : c) votes += game.party_weights.at(i);
  return votes >= game.quota ? game.total : votes;
}

std::vector<SynergyReport> coalition_table(const CoalitionGame& game) {
  const std::size_t n = game.party_weights.size();
  if (n > 20) throw Error(Errc::InvalidGame, "too many parties to enumerate");
  std::vector<Coalition> coalitions;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Coalition c;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) c.push_back(i);
    }
    if (c.size() >= 2) coalitions.push_back(std::move(c));
  }
  std::sort(coalitions.begin(), coalitions.end(), [](const Coalition& a, const Coalition& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  std::vector<SynergyReport> table;
  for (auto& c : coalitions) {
    double alone = 0.0;
    for (std::size_t i : c) alone += threshold_effort(game, {i});
    const double together = threshold_effort(game, c);
    table.push_back({std::move(c), together, alone, together - alone});
  }
  return table;
}

StabilityReport stable_coalitions(const CoalitionGame& game, bool strict) {
  const std::size_t n = game.party_weights.size();
  if (n < 3) throw Error(Errc::TooFewParties, "stability needs at least three parties");
  std::vector<std::vector<double>> s(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      s[i][j] = s[j][i] = threshold_effort(game, {i, j}) - threshold_effort(game, {i}) -
                          threshold_effort(game, {j});
    }
  }
  const auto prefers = [strict](double a, double b) { return strict ? a > b : a >= b; };

  StabilityReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (s[i][j] == 0.0) report.irrelevant.push_back({i, j});
      bool stable = prefers(s[i][j], 0.0);
      for (std::size_t k = 0; k < n && stable; ++k) {
        if (k == i || k == j) continue;
        stable = prefers(s[i][j], s[i][k]) && prefers(s[i][j], s[j][k]);
      }
      if (stable) report.stable.push_back({i, j});
    }
  }
  return report;
}

std::string coalition_csv(const std::vector<SynergyReport>& table) {
  std::ostringstream out;
  out << "coalition,threshold_effort,sum_individual,synergy\n";
  for (const auto& r : table) {
    out << fmt::format("{},{},{},{}\n", coalition_label(r.coalition), r.threshold_effort,
                       r.sum_individual, r.synergy);
  }
  return out.str();
}

}  // namespace bajra
