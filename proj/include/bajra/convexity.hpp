#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "bajra/domain.hpp"
#include "bajra/maps.hpp"
#include "bajra/profiles.hpp"

namespace bajra {

/// Is `query` in the f-convex hull of the finite set `generators`?
struct HullQuery {
  std::vector<Point> generators;
  Point query;
};

struct HullMembership {
  bool member = false;
  /// min over lambda >= 0 of || sum lambda_i f(s_i)/|f(s_i)| - f(y)/|f(y)| ||.
  double residual = 0.0;
  /// Convex weights realizing the query as B_f(S, lambda) (when a member).
  std::vector<double> weights;
};

inline constexpr double kHullTol = 1e-9;

/// Solves the cone feasibility problem f(y) in cone(f(S)) with a
/// Lawson-Hanson nonnegative least-squares active-set iteration.
HullMembership hull_membership(const AdmissibleMap& map, const HullQuery& q,
                               double tol = kHullTol);

bool in_fconvex_hull(const AdmissibleMap& map, const HullQuery& q, double tol = kHullTol);

/// B_f(S, lambda) for `count` weight vectors drawn uniformly from the simplex.
std::vector<Point> sample_fconvex_hull(const AdmissibleMap& map,
                                       const std::vector<Point>& generators,
                                       std::size_t count, Rng& rng);

/// A subset of D given by a membership predicate and a sampler of its points.
struct Region {
  std::function<bool(const Point&)> contains;
  std::function<Point(Rng&)> sample;
};

struct ConvexityVerdict {
  Verdict verdict = Verdict::Pass;
  std::optional<DecisionProfile> witness;
  std::optional<Point> witness_mean;
  std::size_t trials = 0;
};

/// Sampling certificate of f-convexity: draws profiles from the region and
/// checks that their means stay inside.
ConvexityVerdict check_fconvexity(const AdmissibleMap& map, const Region& region,
                                  std::size_t trials, Rng& rng);

/// Nonnegative least squares min ||A x - b||, x >= 0, with A given column-wise.
std::vector<double> nnls(const std::vector<std::vector<double>>& columns,
                         const std::vector<double>& b);

}  // namespace bajra
