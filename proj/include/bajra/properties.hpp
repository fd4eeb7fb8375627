#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bajra/domain.hpp"
#include "bajra/maps.hpp"
#include "bajra/profiles.hpp"

namespace bajra {

/// n decisions sampled from the domain with weights uniform in [wmin, wmax].
DecisionProfile random_profile(const Domain& domain, std::size_t n, Rng& rng,
                               double wmin = 0.1, double wmax = 1.0);

struct PropertyTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::string first_failure;
};

struct PropertyReport {
  std::vector<PropertyTally> tallies;

  bool all_passed() const noexcept;
  std::size_t failures() const noexcept;
  const PropertyTally* find(const std::string& name) const noexcept;
  void merge(PropertyReport other);
};

/// The five decision-making axioms for B_f together with the five effort
/// axioms for beta_f: reflexivity, (null)homogeneity, symmetry, elimination
/// and reduction.
PropertyReport check_axioms(const AdmissibleMap& map, std::size_t trials, Rng& rng);

/// Delegation for B_f and beta_f with (y0, mu0) = (B_f(y, mu), beta_f(y, mu)),
/// its matrix form, and that any other mu0 changes the outcome.
PropertyReport check_delegation(const AdmissibleMap& map, std::size_t trials, Rng& rng);

/// Casuativity and two-point strictness.
PropertyReport check_casuativity_laws(const AdmissibleMap& map, std::size_t trials, Rng& rng);

/// ray_solve(t f(x)) = (x, t).
PropertyReport check_ray_round_trip(const AdmissibleMap& map, std::size_t trials, Rng& rng);

/// Everything above.
PropertyReport run_property_suite(const AdmissibleMap& map, std::size_t trials, Rng& rng);

}  // namespace bajra
