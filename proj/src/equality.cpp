#include "bajra/equality.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "bajra/error.hpp"
#include "bajra/means.hpp"

namespace bajra {

LinearFit fit_linear_map(const AdmissibleMap& f, const AdmissibleMap& g,
                         const std::vector<Point>& samples) {
  const auto df = static_cast<Eigen::Index>(f.range_dim());
  const auto dg = static_cast<Eigen::Index>(g.range_dim());
  const auto k = static_cast<Eigen::Index>(samples.size());
  if (k < df) throw Error(Errc::RankDeficientSamples, "fewer samples than range_dim(f)");

  Eigen::MatrixXd fm(k, df), gm(k, dg);
  for (Eigen::Index i = 0; i < k; ++i) {
    const Point& x = samples[static_cast<std::size_t>(i)];
    const Vec fx = evaluate(f, x);
    const Vec gx = evaluate(g, x);
    for (Eigen::Index j = 0; j < df; ++j) fm(i, j) = fx[static_cast<std::size_t>(j)];
    for (Eigen::Index j = 0; j < dg; ++j) gm(i, j) = gx[static_cast<std::size_t>(j)];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(fm);
  qr.setThreshold(1e-10);
  if (qr.rank() < df) {
    throw Error(Errc::RankDeficientSamples, "f-images of the samples do not span");
  }
  const Eigen::MatrixXd at = qr.solve(gm);  // df x dg

  LinearFit fit;
  fit.rank = static_cast<std::size_t>(qr.rank());
  fit.matrix.assign(static_cast<std::size_t>(dg), std::vector<double>(static_cast<std::size_t>(df)));
  for (Eigen::Index r = 0; r < dg; ++r) {
    for (Eigen::Index c = 0; c < df; ++c) {
      fit.matrix[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = at(c, r);
    }
  }
  const Eigen::MatrixXd resid = gm - fm * at;
  for (Eigen::Index i = 0; i < k; ++i) {
    const double scale = gm.row(i).norm();
    const double r = resid.row(i).norm();
    fit.max_residual = std::max(fit.max_residual, scale > 0.0 ? r / scale : r);
  }
  return fit;
}

double discrepancy(std::span<const double> a, std::span<const double> b) noexcept {
  return distance(a, b) / std::max({1.0, norm(a), norm(b)});
}

EqualityVerdict test_mean_equality(const AdmissibleMap& f, const AdmissibleMap& g,
                                   const std::vector<Point>& fit_samples,
                                   const std::vector<DecisionProfile>& probes,
                                   EqualityTolerances tol) {
  if (!(f.domain() == g.domain())) {
    throw Error(Errc::DomainViolation, "maps do not share a domain");
  }
  const LinearFit fit = fit_linear_map(f, g, fit_samples);
  EqualityVerdict v;
  v.linear_map = fit.matrix;
  v.rank = fit.rank;
  v.max_fit_residual = fit.max_residual;
  for (const DecisionProfile& p : probes) {
    const AggregationOutcome a = aggregate(f, p);
    const AggregationOutcome b = aggregate(g, p);
    const double dm = discrepancy(a.decision, b.decision);
    const double de = std::abs(a.effort - b.effort) / std::max({1.0, a.effort, b.effort});
    if (!v.worst_probe || dm > v.max_mean_discrepancy) v.worst_probe = p;
    v.max_mean_discrepancy = std::max(v.max_mean_discrepancy, dm);
    v.max_effort_discrepancy = std::max(v.max_effort_discrepancy, de);
  }
  v.equal = v.max_fit_residual <= tol.fit && v.max_mean_discrepancy <= tol.mean &&
            v.max_effort_discrepancy <= tol.effort;
  return v;
}

namespace {

bool combination_vanishes(const AdmissibleMap& map, const std::vector<Point>& x,
                          const SignedWeightSplit& split) {
  const auto nonzero = [](const std::vector<double>& w) {
    return std::any_of(w.begin(), w.end(), [](double c) { return c != 0.0; });
  };
  const bool has_pos = nonzero(split.positive_part);
  const bool has_neg = nonzero(split.negative_part);
  if (!has_pos && !has_neg) return true;
  // a nonzero nonnegative combination cannot vanish: 0 is not in conv f(D)
  if (has_pos != has_neg) return false;
  const AggregationOutcome pos = aggregate(map, make_profile(x, split.positive_part));
  const AggregationOutcome neg = aggregate(map, make_profile(x, split.negative_part));
  return same_outcome(pos, neg, kDecisionTol);
}

}  // namespace

bool verify_signed_claim(const AdmissibleMap& f, const AdmissibleMap& g,
                         const std::vector<Point>& x, std::span<const double> lambda) {
  if (x.size() != lambda.size()) throw Error(Errc::MismatchedLengths, "signed claim");
  const SignedWeightSplit split = split_signed_weights(lambda);
  return combination_vanishes(f, x, split) == combination_vanishes(g, x, split);
}

}  // namespace bajra
