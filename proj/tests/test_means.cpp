#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "bajra/error.hpp"
#include "bajra/families.hpp"
#include "bajra/means.hpp"
#include "bajra/properties.hpp"
#include "bajra/registry.hpp"

using namespace bajra;

namespace {

// Hyperboloid mean straight from its closed form.
AggregationOutcome hyperboloid_oracle(const std::vector<Point>& x, const std::vector<double>& w) {
  double a = 0, b = 0, c = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    a += w[i] * x[i][0];
    b += w[i] * x[i][1];
    c += w[i] * std::sqrt(1 + x[i][0] * x[i][0] + x[i][1] * x[i][1]);
  }
  const double eta = std::sqrt(c * c - a * a - b * b);
  return {{a / eta, b / eta}, eta};
}

double weighted_average(const std::vector<double>& x, const std::vector<double>& w) {
  double s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * x[i];
  return s / std::accumulate(w.begin(), w.end(), 0.0);
}

}  // namespace

TEST_CASE("aggregate examples") {
  const MapPtr h = hyperboloid_map();
  const auto s = aggregate(*h, singleton(Point{0.3, -2}, 1.7));
  CHECK(s.decision[0] == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(s.decision[1] == doctest::Approx(-2).epsilon(1e-12));
  CHECK(s.effort == doctest::Approx(1.7).epsilon(1e-12));

  const auto o = aggregate(*h, make_profile(std::vector<Point>{{1, 0}, {0, 1}}, {1, 1}));
  CHECK(o.decision[0] == doctest::Approx(std::sqrt(6.0) / 6).epsilon(1e-12));
  CHECK(o.decision[1] == doctest::Approx(std::sqrt(6.0) / 6).epsilon(1e-12));
  CHECK(o.effort == doctest::Approx(std::sqrt(6.0)).epsilon(1e-12));
  // off the segment joining (1,0) and (0,1)
  CHECK(o.decision[0] + o.decision[1] != doctest::Approx(1.0));

  const MapPtr g = gini_map({1, 0});
  const auto a = aggregate(*g, make_profile(std::vector<double>{2, 4}, {1, 1}));
  CHECK(a.decision[0] == doctest::Approx(3).epsilon(1e-12));
  CHECK(a.effort == doctest::Approx(2).epsilon(1e-12));

  CHECK_THROWS_AS(aggregate(*g, make_profile(std::vector<double>{-1, 4}, {1, 1})), Error);
  CHECK_THROWS_AS(aggregate(*h, make_profile(std::vector<double>{1, 4}, {1, 1})), Error);
}

TEST_CASE("aggregate matches closed-form oracles on random profiles") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> c(-3, 3), pos(0.05, 20), w(0.01, 5);
  const MapPtr h = hyperboloid_map();
  const MapPtr g = gini_map({1, 0});
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + t % 6;
    std::vector<Point> xs;
    std::vector<double> ws, scalars;
    for (std::size_t i = 0; i < n; ++i) {
      xs.push_back({c(rng), c(rng)});
      scalars.push_back(pos(rng));
      ws.push_back(w(rng));
    }
    const auto want = hyperboloid_oracle(xs, ws);
    const auto got = aggregate(*h, make_profile(xs, ws));
    CHECK(close(got.decision, want.decision, kDecisionTol));
    CHECK(got.effort == doctest::Approx(want.effort).epsilon(1e-10));
    // reverse triangle inequality for future timelike vectors
    CHECK(got.effort >= std::accumulate(ws.begin(), ws.end(), 0.0) * (1 - 1e-12));

    const auto ga = aggregate(*g, make_profile(scalars, ws));
    CHECK(ga.decision[0] == doctest::Approx(weighted_average(scalars, ws)).epsilon(1e-12));
    CHECK(ga.effort == doctest::Approx(std::accumulate(ws.begin(), ws.end(), 0.0)).epsilon(1e-12));
  }
}

TEST_CASE("image_sum skips zero weights and compensates") {
  const MapPtr g = gini_map({1, 0});
  const Vec v = image_sum(*g, make_profile(std::vector<double>{1e16, 1, 1, 1e16}, {1, 1, 1, 0}));
  CHECK(v[0] == 1e16 + 2);
  CHECK(v[1] == 3);
}

TEST_CASE("aggregate_with_delegation") {
  const MapPtr h = hyperboloid_map();
  const DecisionProfile g1 = make_profile(std::vector<Point>{{1, 0}, {0, 1}}, {1, 1});
  const DecisionProfile g2 = make_profile(std::vector<Point>{{1, 0}}, {2});
  const std::vector<DecisionProfile> one{g1};
  CHECK(same_outcome(aggregate_with_delegation(*h, one), aggregate(*h, g1)));

  const std::vector<DecisionProfile> two{g1, g2};
  const auto flat = aggregate(*h, make_profile(std::vector<Point>{{1, 0}, {0, 1}, {1, 0}}, {1, 1, 2}));
  const auto oracle = hyperboloid_oracle({{1, 0}, {0, 1}, {1, 0}}, {1, 1, 2});
  CHECK(same_outcome(flat, oracle));
  CHECK(same_outcome(aggregate_with_delegation(*h, two), flat));

  const MapPtr g = gini_map({2, 1});
  std::vector<DecisionProfile> singles;
  for (double x : {0.5, 2.0, 7.0}) singles.push_back(singleton(Point{x}, x));
  CHECK(same_outcome(aggregate_with_delegation(*g, singles),
                     aggregate(*g, make_profile(std::vector<double>{0.5, 2, 7}, {0.5, 2, 7}))));
  CHECK_THROWS_AS(aggregate_with_delegation(*g, std::vector<DecisionProfile>{}), Error);
}

TEST_CASE("delegate_matrix") {
  const MapPtr g = gini_map({1, 0});
  const std::vector<Point> x{{2}, {4}};
  auto r = delegate_matrix(*g, x, {{1, 0}, {0, 1}}, std::vector<double>{1, 1});
  CHECK(r.consistent);
  CHECK(r.direct.decision[0] == doctest::Approx(3));

  r = delegate_matrix(*g, x, {{0.3, 0.7}}, std::vector<double>{1});
  CHECK(r.consistent);
  CHECK(same_outcome(r.direct, aggregate(*g, make_profile(std::vector<double>{2, 4}, {0.3, 0.7}))));

  const MapPtr h = hyperboloid_map();
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> c(-2, 2), w(0.1, 1);
  for (int t = 0; t < 50; ++t) {
    const std::vector<Point> xs{{c(rng), c(rng)}, {c(rng), c(rng)}, {c(rng), c(rng)}};
    const std::vector<std::vector<double>> cols{{w(rng), w(rng), w(rng)}, {w(rng), w(rng), w(rng)}};
    const std::vector<double> tt{w(rng), w(rng)};
    r = delegate_matrix(*h, xs, cols, tt);
    CHECK(r.consistent);
    CHECK(close(r.direct.decision, r.delegated.decision, kDecisionTol));
    std::vector<double> lt(3);
    for (int i = 0; i < 3; ++i) lt[i] = cols[0][i] * tt[0] + cols[1][i] * tt[1];
    CHECK(same_outcome(r.direct, hyperboloid_oracle(xs, lt)));
  }
  CHECK_THROWS_AS(delegate_matrix(*g, x, {{1, 0, 1}}, std::vector<double>{1}), Error);
  CHECK_THROWS_AS(delegate_matrix(*g, x, {{1, 0}}, std::vector<double>{1, 1}), Error);
}

TEST_CASE("check_casuativity") {
  const MapPtr g = gini_map({1, 0});
  const DecisionProfile p = make_profile(std::vector<double>{0, 2}, {1, 1});
  // 0 lies outside (0, inf): use the whole-line arithmetic map instead
  const MapPtr arith = make_map("quasi:x,-inf,inf");
  auto r = check_casuativity(*arith, p, Point{5}, 1);
  CHECK_FALSE(r.mean_unchanged);
  CHECK_FALSE(r.y_equals_mean);
  CHECK(r.mean_before[0] == doctest::Approx(1));
  CHECK(r.mean_after[0] == doctest::Approx(7.0 / 3));

  r = check_casuativity(*arith, p, Point{1}, 4);
  CHECK(r.mean_unchanged);
  CHECK(r.y_equals_mean);

  const MapPtr h = hyperboloid_map();
  const DecisionProfile hp = make_profile(std::vector<Point>{{1, 0}, {0, 1}}, {1, 1});
  r = check_casuativity(*h, hp, Point{0, 0}, 1);
  CHECK_FALSE(r.mean_unchanged);
  CHECK_FALSE(r.y_equals_mean);
  r = check_casuativity(*h, hp, mean(*h, hp), 0.25);
  CHECK(r.mean_unchanged);
  CHECK(r.y_equals_mean);
  CHECK_THROWS_AS(check_casuativity(*g, make_profile(std::vector<double>{1, 2}, {1, 1}), Point{1}, 0),
                  Error);
}

TEST_CASE("axiom, delegation and casuativity suites hold") {
  Rng rng(2024);
  for (const char* spec : {"gini:1,0", "gini:2,-1", "gini:0.5,0.5", "gini:-3,-1", "hyperboloid",
                           "quasi:exp(x),-inf,inf", "ratio:exp(x),1+x^2,0,5"}) {
    const MapPtr m = make_map(spec);
    const PropertyReport r = run_property_suite(*m, 100, rng);
    for (const auto& t : r.tallies) {
      CHECK_MESSAGE(t.failed == 0, (std::string(spec) + " " + t.name + ": " + t.first_failure));
      CHECK(t.passed > 0);
    }
    for (const char* name : {"reflexivity", "nullhomogeneity", "symmetry", "elimination", "reduction",
                             "delegation", "matrix_delegation", "associated_pair", "casuativity",
                             "two_point_strictness", "ray_round_trip"}) {
      CHECK_MESSAGE(r.find(name) != nullptr, name);
    }
  }
}

TEST_CASE("axioms checked independently of the suite") {
  Rng rng(5);
  std::uniform_real_distribution<double> s(0.1, 10);
  for (const char* spec : {"gini:3,1", "hyperboloid", "power:-1"}) {
    const MapPtr m = make_map(spec);
    for (int t = 0; t < 100; ++t) {
      const DecisionProfile p = random_profile(m->domain(), 4, rng);
      const auto base = aggregate(*m, p);
      const double k = s(rng);
      const auto scaled = aggregate(*m, p.scaled(k));
      CHECK(close(scaled.decision, base.decision, kDecisionTol));
      CHECK(scaled.effort == doctest::Approx(k * base.effort).epsilon(1e-9));

      std::vector<std::size_t> perm{3, 1, 0, 2};
      CHECK(same_outcome(aggregate(*m, p.permuted(perm)), base));

      // duplicate the first decision with its weight split in two
      std::vector<Point> xs(p.decisions().begin(), p.decisions().end());
      std::vector<double> ws(p.weights().begin(), p.weights().end());
      xs.push_back(xs[0]);
      ws.push_back(ws[0] * 0.25);
      ws[0] *= 0.75;
      CHECK(same_outcome(aggregate(*m, make_profile(xs, ws)), base));

      // append a zero-weight decision
      xs.pop_back();
      ws.pop_back();
      ws[0] /= 0.75;
      xs.push_back(m->domain().sample(rng));
      ws.push_back(0.0);
      CHECK(same_outcome(aggregate(*m, make_profile(xs, ws)), base));
    }
  }
}

TEST_CASE("two-point strictness") {
  Rng rng(77);
  for (const char* spec : {"gini:1,0", "gini:5,4", "hyperboloid"}) {
    const MapPtr m = make_map(spec);
    for (int t = 0; t < 100; ++t) {
      const Point a = m->domain().sample(rng), b = m->domain().sample(rng);
      std::uniform_real_distribution<double> w(0.01, 1);
      const Point u = mean(*m, make_profile(std::vector<Point>{a, b}, {w(rng), w(rng)}));
      CHECK_FALSE(close(u, a, kDecisionTol));
      CHECK_FALSE(close(u, b, kDecisionTol));
    }
  }
}
