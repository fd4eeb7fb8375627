#include "bajra/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bajra/error.hpp"

namespace bajra {

DecisionProfile::DecisionProfile(std::vector<Point> decisions,
                                 std::vector<double> weights)
    : decisions_(std::move(decisions)), weights_(std::move(weights)) {
  if (decisions_.size() != weights_.size()) {
    throw Error(Errc::MismatchedLengths,
                std::to_string(decisions_.size()) + " decisions vs " +
                    std::to_string(weights_.size()) + " weights");
  }
  if (weights_.empty()) throw Error(Errc::EmptyProfile, "profile has no entries");
  const std::size_t d = decisions_.front().size();
  if (d == 0) throw Error(Errc::WrongDimension, "decisions must have dimension >= 1");
  bool any_positive = false;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (decisions_[i].size() != d) {
      throw Error(Errc::WrongDimension, "decision " + std::to_string(i) +
                                            " has a different dimension");
    }
    for (double c : decisions_[i]) {
      if (!std::isfinite(c)) {
        throw Error(Errc::NonFiniteValue, "decision " + std::to_string(i));
      }
    }
    const double w = weights_[i];
    if (!std::isfinite(w)) throw Error(Errc::NonFiniteValue, "weight " + std::to_string(i));
    if (w < 0.0) throw Error(Errc::NegativeWeight, "weight " + std::to_string(i));
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) throw Error(Errc::ZeroWeightVector, "all weights are zero");
}

double DecisionProfile::total_weight() const noexcept {
  CompensatedSum s;
  for (double w : weights_) s.add(w);
  return s.value();
}

DecisionProfile DecisionProfile::scaled(double t) const {
  std::vector<double> w = weights_;
  for (double& x : w) x *= t;
  return {decisions_, std::move(w)};
}

DecisionProfile DecisionProfile::concatenated(const DecisionProfile& tail) const {
  std::vector<Point> x = decisions_;
  std::vector<double> w = weights_;
  x.insert(x.end(), tail.decisions_.begin(), tail.decisions_.end());
  w.insert(w.end(), tail.weights_.begin(), tail.weights_.end());
  return {std::move(x), std::move(w)};
}

DecisionProfile DecisionProfile::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != size()) throw Error(Errc::MismatchedLengths, "permutation size");
  std::vector<Point> x;
  std::vector<double> w;
  x.reserve(size());
  w.reserve(size());
  for (std::size_t i : perm) {
    x.push_back(decisions_.at(i));
    w.push_back(weights_.at(i));
  }
  return {std::move(x), std::move(w)};
}

DecisionProfile make_profile(std::vector<Point> decisions, std::vector<double> weights) {
  return {std::move(decisions), std::move(weights)};
}

DecisionProfile make_profile(const std::vector<double>& decisions,
                             std::vector<double> weights) {
  std::vector<Point> x;
  x.reserve(decisions.size());
  for (double d : decisions) x.push_back(Point{d});
  return {std::move(x), std::move(weights)};
}

DecisionProfile singleton(Point decision, double weight) {
  return {{std::move(decision)}, {weight}};
}

DecisionProfile normalize_profile(const DecisionProfile& p) {
  std::vector<Point> x;
  std::vector<double> w;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.weight(i) == 0.0) continue;
    // exact equality: axiom (v) only merges identical decisions
    auto it = std::find(x.begin(), x.end(), p.decision(i));
    if (it == x.end()) {
      x.push_back(p.decision(i));
      w.push_back(p.weight(i));
    } else {
      w[static_cast<std::size_t>(it - x.begin())] += p.weight(i);
    }
  }
  return {std::move(x), std::move(w)};
}

SignedWeightSplit split_signed_weights(std::span<const double> lambda) {
  SignedWeightSplit s;
  s.positive_part.reserve(lambda.size());
  s.negative_part.reserve(lambda.size());
  for (double l : lambda) {
    s.positive_part.push_back(l > 0.0 ? l : 0.0);
    s.negative_part.push_back(l < 0.0 ? -l : 0.0);
  }
  return s;
}

Point point_from_json(const nlohmann::json& j) {
  if (j.is_number()) return Point{j.get<double>()};
  if (!j.is_array()) throw Error(Errc::ParseError, "decision must be a number or an array");
  Point x;
  for (const auto& c : j) {
    if (!c.is_number()) throw Error(Errc::ParseError, "decision coordinates must be numbers");
    x.push_back(c.get<double>());
  }
  return x;
}

DecisionProfile profile_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("decisions") || !j.contains("weights")) {
    throw Error(Errc::ParseError, "profile needs \"decisions\" and \"weights\"");
  }
  const auto& jd = j.at("decisions");
  const auto& jw = j.at("weights");
  if (!jd.is_array() || !jw.is_array()) {
    throw Error(Errc::ParseError, "\"decisions\" and \"weights\" must be arrays");
  }
  std::vector<Point> x;
  for (const auto& d : jd) x.push_back(point_from_json(d));
  std::vector<double> w;
  for (const auto& v : jw) {
    if (!v.is_number()) throw Error(Errc::ParseError, "weights must be numbers");
    w.push_back(v.get<double>());
  }
  return {std::move(x), std::move(w)};
}

nlohmann::json to_json(const DecisionProfile& p) {
  return {{"decisions", p.decisions()}, {"weights", p.weights()}};
}

}  // namespace bajra
