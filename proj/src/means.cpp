#include "bajra/means.hpp"

#include <cmath>

#include "bajra/error.hpp"

namespace bajra {

Vec image_sum(const AdmissibleMap& map, const DecisionProfile& p) {
  std::vector<CompensatedSum> acc(map.range_dim());
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.weight(k) == 0.0) continue;
    const Vec fx = evaluate(map, p.decision(k));
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i].add(p.weight(k) * fx[i]);
  }
  Vec out;
  out.reserve(acc.size());
  for (const auto& a : acc) out.push_back(a.value());
  return out;
}

AggregationOutcome aggregate(const AdmissibleMap& map, const DecisionProfile& p) {
  if (p.dim() != map.domain().dim()) {
    throw Error(Errc::DomainViolation, "decision dimension does not match " + map.name());
  }
  // zero-weight entries are skipped by image_sum, but still must lie in D
  for (const Point& x : p.decisions()) {
    if (!map.domain().contains(x)) {
      throw Error(Errc::DomainViolation, "decision outside the domain of " + map.name());
    }
  }
  const Vec v = image_sum(map, p);
  RaySolution sol = ray_solve(map, v);
  return {std::move(sol.decision), sol.effort};
}

bool same_outcome(const AggregationOutcome& a, const AggregationOutcome& b, Tolerance tol) {
  return close(a.decision, b.decision, tol) && close(a.effort, b.effort, tol);
}

AggregationOutcome aggregate_with_delegation(const AdmissibleMap& map,
                                             std::span<const DecisionProfile> groups) {
  if (groups.empty()) throw Error(Errc::EmptyProfile, "no groups to delegate");
  std::vector<Point> y;
  std::vector<double> mu;
  for (const auto& g : groups) {
    AggregationOutcome o = aggregate(map, g);
    y.push_back(std::move(o.decision));
    mu.push_back(o.effort);
  }
  return aggregate(map, make_profile(std::move(y), std::move(mu)));
}

MatrixDelegation delegate_matrix(const AdmissibleMap& map, const std::vector<Point>& x,
                                 const std::vector<std::vector<double>>& columns,
                                 std::span<const double> t) {
  if (columns.empty() || columns.size() != t.size()) {
    throw Error(Errc::MismatchedShapes, "need one coefficient per weight column");
  }
  const std::size_t n = x.size();
  std::vector<CompensatedSum> combined(n);
  std::vector<Point> y;
  std::vector<double> mu_t;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) throw Error(Errc::MismatchedShapes, "weight column length");
    AggregationOutcome o = aggregate(map, make_profile(x, columns[j]));
    y.push_back(std::move(o.decision));
    mu_t.push_back(o.effort * t[j]);
    for (std::size_t i = 0; i < n; ++i) combined[i].add(columns[j][i] * t[j]);
  }
  // validates t in W_m
  (void)make_profile(std::vector<Point>(t.size(), x.front()), {t.begin(), t.end()});

  std::vector<double> lt;
  lt.reserve(n);
  for (const auto& c : combined) lt.push_back(c.value());

  MatrixDelegation out{aggregate(map, make_profile(x, std::move(lt))),
                       aggregate(map, make_profile(std::move(y), std::move(mu_t))), false};
  out.consistent = same_outcome(out.direct, out.delegated);
  return out;
}

CasuativityReport check_casuativity(const AdmissibleMap& map, const DecisionProfile& p,
                                    const Point& y, double mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    throw Error(Errc::NegativeWeight, "casuativity needs a positive weight");
  }
  Point before = aggregate(map, p).decision;
  Point after = aggregate(map, p.concatenated(singleton(y, mu))).decision;
  CasuativityReport r{close(before, after, kDecisionTol), close(y, before, kDecisionTol),
                      std::move(before), std::move(after)};
  return r;
}

}  // namespace bajra
