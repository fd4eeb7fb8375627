// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "bajra/convexity.hpp"
#include "bajra/equality.hpp"
#include "bajra/families.hpp"
#include "bajra/means.hpp"
#include "bajra/properties.hpp"
#include "bajra/registry.hpp"
#include "bajra/synergy.hpp"

using namespace bajra;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
};

const char* const kAxiomMaps[] = {"gini:1,0", "gini:2,-1", "gini:1.5,1.5", "hyperboloid", "quasi:ln"};

bool tallies_clean(const PropertyReport& r, Outcome& out, const std::string& map, std::size_t min_cases) {
  for (const auto& t : r.tallies) {
    out.require(t.failed == 0, fmt::format("{} {}: {}", map, t.name, t.first_failure));
    out.require(t.passed >= min_cases, fmt::format("{} {}: only {} cases", map, t.name, t.passed));
  }
  return out.ok;
}

Outcome hyperboloid_value(double& budget_ms) {
  budget_ms = 1;
  Outcome out;
  const MapPtr h = hyperboloid_map();
  const DecisionProfile p = make_profile(std::vector<Point>{{1, 0}, {0, 1}}, {1, 1});
  const auto t0 = std::chrono::steady_clock::now();
  const AggregationOutcome o = aggregate(*h, p);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const double r = std::sqrt(6.0) / 6;
  out.require(std::abs(o.decision[0] - r) <= 1e-10 && std::abs(o.decision[1] - r) <= 1e-10,
              fmt::format("decision ({}, {})", o.decision[0], o.decision[1]));
  out.require(std::abs(o.effort - std::sqrt(6.0)) <= 1e-10, fmt::format("effort {}", o.effort));
  out.require(ms < 1, fmt::format("aggregate took {:.3f} ms", ms));
  if (out.ok) out.detail = fmt::format("u = ({:.10f}, {:.10f}), eta = {:.10f}", o.decision[0], o.decision[1], o.effort);
  return out;
}

Outcome parliament(double& budget_ms) {
  budget_ms = 10;
  Outcome out;
  const auto one = coalition_table(make_game({45, 35, 20}));
  const std::vector<double> want1{20, 35, 45, 0};
  for (std::size_t i = 0; i < 4; ++i)
    out.require(one[i].synergy == want1[i], fmt::format("situation I row {} = {}", i, one[i].synergy));
  const auto stable = stable_coalitions(make_game({45, 35, 20})).stable;
  out.require(stable.size() == 1 && coalition_label(stable[0]) == "BC", "situation I stable set is not {BC}");

  const auto two = coalition_table(make_game({55, 30, 15}));
  const std::vector<double> want2{-30, -15, 0};
  for (std::size_t i = 0; i < 3; ++i)
    out.require(two[i].synergy == want2[i], fmt::format("situation II row {} = {}", i, two[i].synergy));
  out.require(two[3].synergy == -45, fmt::format("situation II grand coalition = {}", two[3].synergy));
  if (out.ok) out.detail = "I: 20 35 45 0, stable BC; II: -30 -15 0, ABC -45 by the threshold rule";
  return out;
}

Outcome gini_sign_law(double& budget_ms) {
  budget_ms = 2000;
  Outcome out;
  std::mt19937_64 rng(20241);
  std::uniform_real_distribution<double> par(-3, 3), x(0.1, 10), w(std::nextafter(0.0, 1.0), 1.0);
  std::uniform_int_distribution<int> len(2, 6);
  std::size_t zero = 0;
  for (int t = 0; t < 1000; ++t) {
    const double p = par(rng), q = par(rng);
    const int n = len(rng);
    std::vector<double> xs, ws;
    for (int i = 0; i < n; ++i) {
      xs.push_back(x(rng));
      ws.push_back(w(rng));
    }
    const DecisionProfile prof = make_profile(xs, ws);
    const int want = p * q > 0 ? -1 : (p * q < 0 ? 1 : 0);
    const double sigma = synergy(effort_of(gini_map({p, q})), prof);
    const int got = sign_with_band(sigma);
    if (got == 0) ++zero;
    out.require(got == want, fmt::format("(p, q) = ({}, {}), n = {}: sigma = {:.3e}, expected sign {}", p, q, n,
                                         sigma, want));
  }
  if (out.ok) out.detail = fmt::format("1000 cases, {} inside the zero band", zero);
  return out;
}

Outcome axiom_suite(double& budget_ms) {
  budget_ms = 5000;
  Outcome out;
  Rng rng(20242);
  for (const char* spec : kAxiomMaps) tallies_clean(check_axioms(*make_map(spec), 500, rng), out, spec, 500);
  if (out.ok) out.detail = "5 maps x 500 profiles x 5 axioms (mean and effort)";
  return out;
}

Outcome delegation(double& budget_ms) {
  budget_ms = 0;
  Outcome out;
  Rng rng(20243);
  for (const char* spec : kAxiomMaps) tallies_clean(check_delegation(*make_map(spec), 200, rng), out, spec, 200);
  if (out.ok) out.detail = "5 maps x 200 instances: grouped, matrix form, associated pair";
  return out;
}

Outcome casuativity(double& budget_ms) {
  budget_ms = 0;
  Outcome out;
  Rng rng(20244);
  for (const char* spec : kAxiomMaps)
    tallies_clean(check_casuativity_laws(*make_map(spec), 200, rng), out, spec, 200);
  if (out.ok) out.detail = "5 maps x 200 casuativity + 200 two-point strictness cases";
  return out;
}

Outcome null_synergy(double& budget_ms) {
  budget_ms = 0;
  Outcome out;
  Rng rng(20245);
  struct Case {
    const char* spec;
    bool quasi;
  };
  const Case cases[] = {{"quasi:ln", true},       {"quasi:x,-inf,inf", true}, {"quasi:exp(x),-inf,inf", true},
                        {"power:2", true},        {"power:-1", true},         {"gini:1,0", true},
                        {"gini:1,-1", false},     {"hyperboloid", false},     {"gini:2,-1", false},
                        {"gini:1.5,1.5", false}};
  for (const Case& c : cases) {
    const NullSynergyReport r = check_null_synergy(*make_map(c.spec), 300, rng);
    out.require(r.zero_synergy == r.associative && r.associative == r.flat_formula_matches,
                fmt::format("{}: booleans disagree ({}, {}, {})", c.spec, r.zero_synergy, r.associative,
                            r.flat_formula_matches));
    out.require(r.zero_synergy == c.quasi, fmt::format("{}: reported {}", c.spec, r.zero_synergy));
    out.require(r.trials == 300, fmt::format("{}: {} trials", c.spec, r.trials));
  }
  if (out.ok) out.detail = "6 quasi-arithmetic maps (true x3), 4 others (false x3), 300 trials each";
  return out;
}

std::vector<DecisionProfile> probes(const Domain& d, std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<DecisionProfile> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_profile(d, 2 + i % 5, rng));
  return out;
}

Outcome equality(double& budget_ms) {
  budget_ms = 0;
  Outcome out;
  const MapPtr g10 = make_map("gini:1,0"), g01 = make_map("gini:0,1"), g20 = make_map("gini:2,0");
  const std::vector<Point> samples{{0.5}, {1}, {2}, {3}, {7}};
  const auto fresh = probes(g10->domain(), 1000, 20246);
  const EqualityVerdict same = test_mean_equality(*g10, *g01, samples, fresh);
  out.require(same.equal, "gini:1,0 vs gini:0,1 judged unequal");
  if (same.linear_map) {
    const Matrix& a = *same.linear_map;
    const double err = std::max({std::abs(a[0][0]), std::abs(a[0][1] - 1), std::abs(a[1][0] - 1), std::abs(a[1][1])});
    out.require(err <= 1e-10, fmt::format("swap matrix entrywise error {:.3e}", err));
  }
  out.require(same.max_mean_discrepancy <= 1e-8 && same.max_effort_discrepancy <= 1e-8,
              fmt::format("probe discrepancies {:.3e} / {:.3e}", same.max_mean_discrepancy,
                          same.max_effort_discrepancy));

  const DecisionProfile witness = make_profile(std::vector<double>{1, 2}, {1, 1});
  const EqualityVerdict diff = test_mean_equality(*g10, *g20, samples, {witness});
  out.require(!diff.equal, "gini:1,0 vs gini:2,0 judged equal");
  const double m1 = mean(*g10, witness)[0], m2 = mean(*g20, witness)[0];
  out.require(std::abs(m1 - 1.5) <= 1e-12 && std::abs(m2 - std::sqrt(2.5)) <= 1e-12,
              fmt::format("witness means {} vs {}", m1, m2));

  // effort agreement wherever the means agree, across both pairs
  std::size_t agreeing = 0;
  for (const MapPtr& other : {g01, g20}) {
    for (const DecisionProfile& p : fresh) {
      const auto a = aggregate(*g10, p), b = aggregate(*other, p);
      if (discrepancy(a.decision, b.decision) > 1e-8) continue;
      ++agreeing;
      out.require(std::abs(a.effort - b.effort) <= 1e-8 * std::max(1.0, a.effort),
                  fmt::format("efforts {} vs {} with equal means", a.effort, b.effort));
    }
  }
  if (out.ok)
    out.detail = fmt::format("swap recovered, witness 1.5 vs {:.7f}, {} probes with equal means and efforts", m2,
                             agreeing);
  return out;
}

Outcome hull(double& budget_ms) {
  budget_ms = 0;
  Outcome out;
  const MapPtr h = hyperboloid_map();
  const std::vector<Point> s{{1, 0}, {0, 1}};
  const double r = std::sqrt(6.0) / 6;
  out.require(in_fconvex_hull(*h, {s, {r, r}}), "hyperboloid mean point rejected");
  out.require(!in_fconvex_hull(*h, {s, {1, 1}}), "(1,1) accepted");
  Rng rng(20247);
  std::size_t members = 0;
  for (const Point& p : sample_fconvex_hull(*h, s, 500, rng)) members += in_fconvex_hull(*h, {s, p});
  out.require(members == 500, fmt::format("{} of 500 samples are members", members));
  if (out.ok) out.detail = "mean point in, (1,1) out, 500/500 samples in";
  return out;
}

Outcome dual_path(double& budget_ms) {
  budget_ms = 0;
  Outcome out;
  std::mt19937_64 rng(20248);
  std::uniform_real_distribution<double> par(-4, 4), lx(-3, 3), w(0.05, 1);
  double worst = 0;
  for (int t = 0; t < 500; ++t) {
    const bool near = t >= 400;  // last 100: |p - q| = 1e-9
    const double p = par(rng), q = near ? p + 1e-9 : par(rng);
    std::vector<double> xs, ws;
    for (int i = 0; i < 2 + t % 5; ++i) {
      xs.push_back(std::exp(lx(rng)));
      ws.push_back(w(rng));
    }
    const DecisionProfile prof = make_profile(xs, ws);
    const AggregationOutcome o = aggregate(*gini_map({p, q}), prof);
    const double gm = gini_mean({p, q}, prof), ge = gini_effort({p, q}, prof);
    const double dm = std::abs(o.decision[0] - gm) / gm, de = std::abs(o.effort - ge) / ge;
    worst = std::max({worst, dm, de});
    out.require(dm <= 1e-9 && de <= 1e-9,
                fmt::format("(p, q) = ({}, {}): mean {} vs {}, effort {} vs {}", p, q, o.decision[0], gm, o.effort, ge));
  }
  if (out.ok) out.detail = fmt::format("400 generic + 100 near-degenerate profiles, worst relative gap {:.2e}", worst);
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome(double&)> run;
  };
  const Criterion criteria[] = {
      {"hyperboloid mean value", hyperboloid_value},
      {"parliament tables", parliament},
      {"gini synergy-sign law", gini_sign_law},
      {"axiom suite", axiom_suite},
      {"delegation", delegation},
      {"casuativity and two-point strictness", casuativity},
      {"null-synergy equivalence", null_synergy},
      {"equality testing", equality},
      {"f-convex hull", hull},
      {"dual-path gini oracle", dual_path},
  };
  int failed = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    double budget_ms = 0;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = c.run(budget_ms);
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (budget_ms > 0 && ms >= budget_ms) {
      o.ok = false;
      o.detail = fmt::format("over budget ({:.1f} ms >= {:.0f} ms)", ms, budget_ms);
    }
    failed += !o.ok;
    fmt::print("{} {:2d} {:<38} {:9.2f} ms  {}\n", o.ok ? "PASS" : "FAIL", index, c.name, ms, o.detail);
  }
  fmt::print("{} of {} criteria passed\n", index - failed, index);
  return failed == 0 ? 0 : 1;
}
