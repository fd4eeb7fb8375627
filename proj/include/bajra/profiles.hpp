#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

#include "bajra/numeric.hpp"

namespace bajra {

/// n weighted decisions (x, lambda) with lambda in W_n: nonnegative, finite,
/// not all zero. Immutable once built.
class DecisionProfile {
 public:
  /// Validates and stores the entries in the given order.
  DecisionProfile(std::vector<Point> decisions, std::vector<double> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  /// Dimension of each decision.
  std::size_t dim() const noexcept { return decisions_.front().size(); }

  const std::vector<Point>& decisions() const noexcept { return decisions_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const Point& decision(std::size_t i) const { return decisions_.at(i); }
  double weight(std::size_t i) const { return weights_.at(i); }

  double total_weight() const noexcept;

  /// Profile with every weight multiplied by t > 0.
  DecisionProfile scaled(double t) const;
  /// Entries of `this` followed by the entries of `tail`.
  DecisionProfile concatenated(const DecisionProfile& tail) const;
  /// Reordered so that entry i of the result is entry perm[i] of `this`.
  DecisionProfile permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const DecisionProfile&, const DecisionProfile&) = default;

 private:
  std::vector<Point> decisions_;
  std::vector<double> weights_;
};

DecisionProfile make_profile(std::vector<Point> decisions,
                             std::vector<double> weights);
/// Scalar convenience overload.
DecisionProfile make_profile(const std::vector<double>& decisions,
                             std::vector<double> weights);
DecisionProfile singleton(Point decision, double weight);

/// Drops zero-weight entries and merges bitwise-equal decisions into the
/// first occurrence, summing their weights.
DecisionProfile normalize_profile(const DecisionProfile& p);

struct SignedWeightSplit {
  std::vector<double> positive_part;
  std::vector<double> negative_part;
};

SignedWeightSplit split_signed_weights(std::span<const double> lambda);

/// `{"decisions": [[...], ...] | [x, ...], "weights": [...]}`
DecisionProfile profile_from_json(const nlohmann::json& j);
nlohmann::json to_json(const DecisionProfile& p);

/// Reads one decision; a bare number is a 1-D point.
Point point_from_json(const nlohmann::json& j);

}  // namespace bajra
