#pragma once

#include <span>
#include <vector>

#include "bajra/maps.hpp"
#include "bajra/profiles.hpp"

namespace bajra {

/// Uniform notion of equality for decisions and efforts.
inline constexpr Tolerance kDecisionTol{1e-9, 1e-12};

/// (u, eta) = (B_f(x, lambda), beta_f(x, lambda)).
struct AggregationOutcome {
  Point decision;
  double effort;
};

/// sum_k lambda_k f(x_k), compensated per coordinate.
Vec image_sum(const AdmissibleMap& map, const DecisionProfile& p);

/// Generalized Bajraktarevic mean and its effort.
AggregationOutcome aggregate(const AdmissibleMap& map, const DecisionProfile& p);

inline Point mean(const AdmissibleMap& map, const DecisionProfile& p) {
  return aggregate(map, p).decision;
}
inline double effort(const AdmissibleMap& map, const DecisionProfile& p) {
  return aggregate(map, p).effort;
}

bool same_outcome(const AggregationOutcome& a, const AggregationOutcome& b,
                  Tolerance tol = kDecisionTol);

/// Aggregates each group, then aggregates the group results weighted by their
/// efforts.
AggregationOutcome aggregate_with_delegation(const AdmissibleMap& map,
                                             std::span<const DecisionProfile> groups);

/// Both sides of B_f(x, Lambda t) = B_f(y, mu . t).
struct MatrixDelegation {
  AggregationOutcome direct;     // aggregate(x, Lambda t)
  AggregationOutcome delegated;  // aggregate(y, mu . t)
  bool consistent;
};

/// `columns` holds the m weight vectors lambda^(1..m), each of length n.
MatrixDelegation delegate_matrix(const AdmissibleMap& map, const std::vector<Point>& x,
                                 const std::vector<std::vector<double>>& columns,
                                 std::span<const double> t);

struct CasuativityReport {
  bool mean_unchanged;
  bool y_equals_mean;
  Point mean_before;
  Point mean_after;
};

/// Appends (y, mu) to the profile and compares the means.
CasuativityReport check_casuativity(const AdmissibleMap& map, const DecisionProfile& p,
                                    const Point& y, double mu);

}  // namespace bajra
