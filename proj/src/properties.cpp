#include "bajra/properties.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>

#include "bajra/means.hpp"

namespace bajra {

DecisionProfile random_profile(const Domain& domain, std::size_t n, Rng& rng, double wmin,
                               double wmax) {
  std::uniform_real_distribution<double> weight(wmin, wmax);
  std::vector<Point> x;
  std::vector<double> w;
  x.reserve(n);
  w.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    x.push_back(domain.sample(rng));
    w.push_back(weight(rng));
  }
  return make_profile(std::move(x), std::move(w));
}

bool PropertyReport::all_passed() const noexcept { return failures() == 0; }

std::size_t PropertyReport::failures() const noexcept {
  std::size_t n = 0;
  for (const auto& t : tallies) n += t.failed;
  return n;
}

const PropertyTally* PropertyReport::find(const std::string& name) const noexcept {
  for (const auto& t : tallies) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

void PropertyReport::merge(PropertyReport other) {
  for (auto& t : other.tallies) tallies.push_back(std::move(t));
}

namespace {

// Runs `check` once and books the outcome; exceptions count as failures.
template <typename Check>
void record(PropertyTally& tally, Check&& check) {
  std::string why;
  bool ok = false;
  try {
    ok = check();
    if (!ok) why = "property violated";
  } catch (const std::exception& e) {
    why = e.what();
  }
  if (ok) {
    ++tally.passed;
  } else {
    if (tally.failed == 0) tally.first_failure = why;
    ++tally.failed;
  }
}

PropertyTally named(const char* name) { return {name, 0, 0, {}}; }

std::size_t random_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double random_scale(Rng& rng) {
  return std::exp(std::uniform_real_distribution<double>(std::log(0.1), std::log(10.0))(rng));
}

}  // namespace

PropertyReport check_axioms(const AdmissibleMap& map, std::size_t trials, Rng& rng) {
  PropertyTally reflexivity{named("reflexivity")}, homogeneity{named("nullhomogeneity")},
      symmetry{named("symmetry")}, elimination{named("elimination")}, reduction{named("reduction")};
  const Domain& dom = map.domain();

  for (std::size_t t = 0; t < trials; ++t) {
    const DecisionProfile p = random_profile(dom, random_size(rng, 2, 6), rng);
    const Point y = dom.sample(rng);
    const double lambda = random_scale(rng);
    const double scale = random_scale(rng);
    std::vector<std::size_t> perm(p.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::size_t slot = random_size(rng, 0, p.size());
    const Point ghost = dom.sample(rng);
    const double split = std::uniform_real_distribution<double>(0.05, 0.95)(rng);

    record(reflexivity, [&] {
      const AggregationOutcome o = aggregate(map, singleton(y, lambda));
      return close(o.decision, y, kDecisionTol) && close(o.effort, lambda, kDecisionTol);
    });

    const AggregationOutcome base = aggregate(map, p);

    record(homogeneity, [&] {
      const AggregationOutcome o = aggregate(map, p.scaled(scale));
      return close(o.decision, base.decision, kDecisionTol) &&
             close(o.effort, scale * base.effort, kDecisionTol);
    });

    record(symmetry, [&] { return same_outcome(aggregate(map, p.permuted(perm)), base); });

    record(elimination, [&] {
      std::vector<Point> x = p.decisions();
      std::vector<double> w = p.weights();
      x.insert(x.begin() + static_cast<std::ptrdiff_t>(slot), ghost);
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(slot), 0.0);
      return same_outcome(aggregate(map, make_profile(std::move(x), std::move(w))), base);
    });

    record(reduction, [&] {
      // x_1 = x_2 with weights summing to the original lambda_1
      std::vector<Point> x = p.decisions();
      std::vector<double> w = p.weights();
      x.insert(x.begin(), x.front());
      w.insert(w.begin(), split * w.front());
      w[1] *= (1.0 - split);
      return same_outcome(aggregate(map, make_profile(std::move(x), std::move(w))), base);
    });
  }
  return {{reflexivity, homogeneity, symmetry, elimination, reduction}};
}

PropertyReport check_delegation(const AdmissibleMap& map, std::size_t trials, Rng& rng) {
  PropertyTally group{named("delegation")}, matrix{named("matrix_delegation")}, associated{named("associated_pair")};
  const Domain& dom = map.domain();
  std::uniform_real_distribution<double> unit(0.1, 1.0);
  std::uniform_real_distribution<double> perturb(0.1, 0.5);

  for (std::size_t t = 0; t < trials; ++t) {
    const DecisionProfile xp = random_profile(dom, random_size(rng, 1, 4), rng);
    const DecisionProfile yp = random_profile(dom, random_size(rng, 1, 4), rng);

    const std::size_t n = random_size(rng, 1, 4);
    const std::size_t m = random_size(rng, 1, 3);
    std::vector<Point> shared;
    for (std::size_t i = 0; i < n; ++i) shared.push_back(dom.sample(rng));
    std::vector<std::vector<double>> columns(m, std::vector<double>(n));
    for (auto& c : columns) {
      for (double& v : c) v = unit(rng);
    }
    std::vector<double> coeff(m);
    for (double& v : coeff) v = unit(rng);

    const double sign = (rng() & 1U) ? 1.0 : -1.0;
    const double other_factor = 1.0 + sign * perturb(rng);
    std::vector<DecisionProfile> probes;
    for (int k = 0; k < 3; ++k) probes.push_back(random_profile(dom, random_size(rng, 1, 3), rng));

    record(group, [&] {
      const AggregationOutcome sub = aggregate(map, yp);
      const AggregationOutcome flat = aggregate(map, xp.concatenated(yp));
      const AggregationOutcome delegated =
          aggregate(map, xp.concatenated(singleton(sub.decision, sub.effort)));
      const DecisionProfile groups[] = {xp, yp};
      const AggregationOutcome nested = aggregate_with_delegation(map, groups);
      return same_outcome(flat, delegated) && same_outcome(flat, nested);
    });

    record(matrix, [&] { return delegate_matrix(map, shared, columns, coeff).consistent; });

    record(associated, [&] {
      const AggregationOutcome sub = aggregate(map, yp);
      for (const DecisionProfile& probe : probes) {
        const Point right = mean(map, probe.concatenated(singleton(sub.decision, sub.effort)));
        const Point wrong =
            mean(map, probe.concatenated(singleton(sub.decision, sub.effort * other_factor)));
        if (!close(right, wrong, kDecisionTol)) return true;
      }
      return false;
    });
  }
  return {{group, matrix, associated}};
}

PropertyReport check_casuativity_laws(const AdmissibleMap& map, std::size_t trials, Rng& rng) {
  PropertyTally casuative{named("casuativity")}, strict{named("two_point_strictness")};
  const Domain& dom = map.domain();
  std::uniform_real_distribution<double> unit(0.1, 1.0);

  for (std::size_t t = 0; t < trials; ++t) {
    const DecisionProfile p = random_profile(dom, random_size(rng, 1, 5), rng);
    const bool append_mean = (rng() & 1U) != 0;
    const Point other = dom.sample(rng);
    const double mu = random_scale(rng);
    const Point x1 = dom.sample(rng);
    Point x2 = dom.sample(rng);
    const double w1 = unit(rng), w2 = unit(rng);

    record(casuative, [&] {
      const Point y = append_mean ? mean(map, p) : other;
      const CasuativityReport r = check_casuativity(map, p, y, mu);
      return r.mean_unchanged == r.y_equals_mean;
    });

    record(strict, [&] {
      if (close(x1, x2, kDecisionTol)) return true;  // needs distinct endpoints
      const Point m = mean(map, make_profile({x1, x2}, {w1, w2}));
      return !close(m, x1, kDecisionTol) && !close(m, x2, kDecisionTol);
    });
  }
  return {{casuative, strict}};
}

PropertyReport check_ray_round_trip(const AdmissibleMap& map, std::size_t trials, Rng& rng) {
  PropertyTally trip{named("ray_round_trip")};
  for (std::size_t t = 0; t < trials; ++t) {
    const Point x = map.domain().sample(rng);
    const double scale = random_scale(rng);
    record(trip, [&] {
      Vec v = evaluate(map, x);
      for (double& c : v) c *= scale;
      const RaySolution s = ray_solve(map, v);
      return close(s.decision, x, kDecisionTol) && close(s.effort, scale, kDecisionTol);
    });
  }
  return {{trip}};
}

PropertyReport run_property_suite(const AdmissibleMap& map, std::size_t trials, Rng& rng) {
  PropertyReport r = check_axioms(map, trials, rng);
  r.merge(check_delegation(map, trials, rng));
  r.merge(check_casuativity_laws(map, trials, rng));
  r.merge(check_ray_round_trip(map, trials, rng));
  return r;
}

}  // namespace bajra
