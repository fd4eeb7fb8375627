#pragma once

#include <string>

#include "bajra/expr.hpp"
#include "bajra/maps.hpp"
#include "bajra/profiles.hpp"

namespace bajra {

/// Selects G_{p,q}; p == q is the logarithmic branch.
struct GiniParams {
  double p;
  double q;
};

/// Below this |p - q| both the closed forms and the generator use the p == q
/// branch at (p + q) / 2.
inline constexpr double kGiniDegenerateGap = 1e-8;

/// phi_p = sum lambda_i x_i^p and psi_p = sum lambda_i x_i^p ln x_i.
struct PowerSums {
  double phi;
  double psi;
};

/// Plain (compensated) power sums; decisions must be positive scalars.
PowerSums power_sums(const DecisionProfile& prof, double p);

double gini_mean(GiniParams params, const DecisionProfile& prof);
double gini_effort(GiniParams params, const DecisionProfile& prof);

/// Generator (x^p, x^q) on (0, inf), or (x^p ln x, x^p) when p == q. Means come
/// from the generic ratio-map solver, independent of the closed forms above.
MapPtr gini_map(GiniParams params);

/// Weighted power mean G_{p,0}; p == 0 is the geometric mean.
MapPtr power_map(double p);

/// (g, 1) on an open interval: the weighted quasi-arithmetic mean.
MapPtr quasi_arithmetic_map(ScalarFn g, Interval interval, std::string name = "quasi");

/// f(x, y) = (x, y, sqrt(1 + x^2 + y^2)) on R^2, closed-form ray solver.
class HyperboloidMap final : public AdmissibleMap {
 public:
  HyperboloidMap();

  std::string name() const override { return "hyperboloid"; }
  const Domain& domain() const override { return domain_; }
  std::size_t range_dim() const override { return 3; }
  Vec evaluate(const Point& x) const override;
  RaySolution solve_ray(std::span<const double> v) const override;

 private:
  Domain domain_;
};

MapPtr hyperboloid_map();

}  // namespace bajra
