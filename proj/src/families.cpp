#include "bajra/families.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "bajra/error.hpp"

namespace bajra {

namespace {

// Beyond this |p ln x| the power sums are accumulated in the log domain.
constexpr double kLogDomainThreshold = 30.0;

struct LogPowerSums {
  double log_phi;
  double psi_over_phi;  // weighted mean of ln x with weights lambda_i x_i^p
};

void require_positive_scalars(const DecisionProfile& prof) {
  if (prof.dim() != 1) throw Error(Errc::WrongDimension, "Gini means take scalar decisions");
  for (const Point& x : prof.decisions()) {
    if (!(x[0] > 0.0)) throw Error(Errc::NonPositiveDecision, "Gini means need x > 0");
  }
}

LogPowerSums log_power_sums(const DecisionProfile& prof, double p) {
  std::vector<double> log_terms;
  std::vector<double> logs;
  double max_exponent = 0.0;
  for (std::size_t i = 0; i < prof.size(); ++i) {
    if (prof.weight(i) == 0.0) continue;
    const double lx = std::log(prof.decision(i)[0]);
    logs.push_back(lx);
    log_terms.push_back(std::log(prof.weight(i)) + p * lx);
    max_exponent = std::max(max_exponent, std::abs(p * lx));
  }

  double log_phi;
  if (max_exponent > kLogDomainThreshold) {
    const double top = *std::max_element(log_terms.begin(), log_terms.end());
    CompensatedSum s;
    for (double t : log_terms) s.add(std::exp(t - top));
    log_phi = top + std::log(s.value());
  } else {
    CompensatedSum s;
    for (double t : log_terms) s.add(std::exp(t));
    log_phi = std::log(s.value());
  }
  CompensatedSum mean_log;
  for (std::size_t i = 0; i < logs.size(); ++i) {
    mean_log.add(std::exp(log_terms[i] - log_phi) * logs[i]);
  }
  return {log_phi, mean_log.value()};
}

// Orders (p, q) so that p >= q, folding near-equal pairs onto the diagonal.
GiniParams canonical(GiniParams g) {
  if (g.p < g.q) std::swap(g.p, g.q);
  if (g.p - g.q < kGiniDegenerateGap) {
    const double m = 0.5 * (g.p + g.q);
    return {m, m};
  }
  return g;
}

}  // namespace

PowerSums power_sums(const DecisionProfile& prof, double p) {
  require_positive_scalars(prof);
  CompensatedSum phi, psi;
  for (std::size_t i = 0; i < prof.size(); ++i) {
    const double x = prof.decision(i)[0];
    const double term = prof.weight(i) * std::pow(x, p);
    phi.add(term);
    psi.add(term * std::log(x));
  }
  return {phi.value(), psi.value()};
}

double gini_mean(GiniParams params, const DecisionProfile& prof) {
  require_positive_scalars(prof);
  const GiniParams g = canonical(params);
  if (g.p == g.q) {
    return std::exp(log_power_sums(prof, g.p).psi_over_phi);
  }
  const double lp = log_power_sums(prof, g.p).log_phi;
  const double lq = log_power_sums(prof, g.q).log_phi;
  return std::exp((lp - lq) / (g.p - g.q));
}

double gini_effort(GiniParams params, const DecisionProfile& prof) {
  require_positive_scalars(prof);
  const GiniParams g = canonical(params);
  if (g.p == g.q) {
    const LogPowerSums s = log_power_sums(prof, g.p);
    return std::exp(s.log_phi - g.p * s.psi_over_phi);
  }
  const double lp = log_power_sums(prof, g.p).log_phi;
  const double lq = log_power_sums(prof, g.q).log_phi;
  return std::exp((g.p * lq - g.q * lp) / (g.p - g.q));
}

MapPtr gini_map(GiniParams params) {
  constexpr Interval positive{0.0, std::numeric_limits<double>::infinity()};
  const std::string name = fmt::format("gini:{},{}", params.p, params.q);
  // the generator keeps the caller's order, so gini:q,p is the swap of gini:p,q
  const GiniParams g = canonical(params);
  const double p = g.p == g.q ? g.p : params.p;
  const double q = g.p == g.q ? g.q : params.q;
  if (p == q) {
    return ratio_map([p](double x) { return std::pow(x, p) * std::log(x); },
                     [p](double x) { return std::pow(x, p); }, positive, name);
  }
  return ratio_map([p](double x) { return std::pow(x, p); },
                   [q](double x) { return std::pow(x, q); }, positive, name);
}

MapPtr power_map(double p) {
  constexpr Interval positive{0.0, std::numeric_limits<double>::infinity()};
  const std::string name = fmt::format("power:{}", p);
  if (p == 0.0) {
    return quasi_arithmetic_map([](double x) { return std::log(x); }, positive, name);
  }
  return quasi_arithmetic_map([p](double x) { return std::pow(x, p); }, positive, name);
}

MapPtr quasi_arithmetic_map(ScalarFn g, Interval interval, std::string name) {
  return ratio_map(std::move(g), [](double) { return 1.0; }, interval, std::move(name));
}

HyperboloidMap::HyperboloidMap() : domain_(Domain::whole_space(2)) {}

Vec HyperboloidMap::evaluate(const Point& x) const {
  return {x[0], x[1], std::sqrt(1.0 + x[0] * x[0] + x[1] * x[1])};
}

RaySolution HyperboloidMap::solve_ray(std::span<const double> v) const {
  // Delta = v3^2 - v1^2 - v2^2 as (v3 - r)(v3 + r) with r = |(v1, v2)|
  const double r = std::hypot(v[0], v[1]);
  if (!(v[2] > r)) throw Error(Errc::OutsideCone, "hyperboloid: Delta <= 0 or v3 <= 0");
  const double delta = (v[2] - r) * (v[2] + r);
  const double eta = std::sqrt(delta);
  return {Point{v[0] / eta, v[1] / eta}, eta};
}

MapPtr hyperboloid_map() { return std::make_shared<HyperboloidMap>(); }

}  // namespace bajra
