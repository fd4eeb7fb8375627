#include "bajra/convexity.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "bajra/error.hpp"
#include "bajra/means.hpp"

namespace bajra {

std::vector<double> nnls(const std::vector<std::vector<double>>& columns,
                         const std::vector<double>& b) {
  const auto m = static_cast<Eigen::Index>(b.size());
  const auto n = static_cast<Eigen::Index>(columns.size());
  Eigen::MatrixXd a(m, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    if (columns[static_cast<std::size_t>(j)].size() != b.size()) {
      throw Error(Errc::MismatchedShapes, "nnls column length");
    }
    for (Eigen::Index i = 0; i < m; ++i) a(i, j) = columns[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  }
  const Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(b.data(), m);

  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  std::vector<bool> passive(static_cast<std::size_t>(n), false);
  const double gradient_tol = 1e-14 * std::max(1.0, rhs.norm()) * std::max(1.0, a.norm());

  const auto solve_passive = [&](Eigen::VectorXd& s) {
    std::vector<Eigen::Index> idx;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (passive[static_cast<std::size_t>(j)]) idx.push_back(j);
    }
    Eigen::MatrixXd ap(m, static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) ap.col(static_cast<Eigen::Index>(k)) = a.col(idx[k]);
    const Eigen::VectorXd sp = ap.colPivHouseholderQr().solve(rhs);
    s.setZero(n);
    for (std::size_t k = 0; k < idx.size(); ++k) s(idx[k]) = sp(static_cast<Eigen::Index>(k));
  };

  const int max_outer = static_cast<int>(3 * n + 10);
  for (int outer = 0; outer < max_outer; ++outer) {
    const Eigen::VectorXd w = a.transpose() * (rhs - a * x);
    Eigen::Index best = -1;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!passive[static_cast<std::size_t>(j)] && w(j) > gradient_tol && (best < 0 || w(j) > w(best))) {
        best = j;
      }
    }
    if (best < 0) break;
    passive[static_cast<std::size_t>(best)] = true;

    Eigen::VectorXd s;
    for (int inner = 0; inner <= n; ++inner) {
      solve_passive(s);
      bool feasible = true;
      double step = 1.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (passive[static_cast<std::size_t>(j)] && s(j) <= 0.0) {
          feasible = false;
          const double denom = x(j) - s(j);
          if (denom > 0.0) step = std::min(step, x(j) / denom);
        }
      }
      if (feasible) break;
      x += step * (s - x);
      for (Eigen::Index j = 0; j < n; ++j) {
        if (passive[static_cast<std::size_t>(j)] && x(j) <= 1e-15) {
          passive[static_cast<std::size_t>(j)] = false;
          x(j) = 0.0;
        }
      }
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      x(j) = passive[static_cast<std::size_t>(j)] ? std::max(0.0, s(j)) : 0.0;
    }
  }
  return {x.data(), x.data() + n};
}

HullMembership hull_membership(const AdmissibleMap& map, const HullQuery& q, double tol) {
  if (q.generators.empty()) throw Error(Errc::EmptyProfile, "hull needs generators");
  const Vec target = evaluate(map, q.query);
  const double target_norm = norm(target);
  std::vector<std::vector<double>> columns;
  std::vector<double> scales;
  for (const Point& s : q.generators) {
    Vec fs = evaluate(map, s);
    const double sn = norm(fs);
    for (double& c : fs) c /= sn;
    columns.push_back(std::move(fs));
    scales.push_back(sn);
  }
  std::vector<double> b = target;
  for (double& c : b) c /= target_norm;

  const std::vector<double> coeff = nnls(columns, b);
  std::vector<double> fitted(b.size(), 0.0);
  for (std::size_t j = 0; j < coeff.size(); ++j) {
    for (std::size_t i = 0; i < b.size(); ++i) fitted[i] += coeff[j] * columns[j][i];
  }

  HullMembership out;
  out.residual = distance(fitted, b);
  out.member = out.residual <= tol;
  if (out.member) {
    double total = 0.0;
    for (std::size_t j = 0; j < coeff.size(); ++j) {
      out.weights.push_back(coeff[j] / scales[j]);
      total += out.weights.back();
    }
    for (double& w : out.weights) w /= total;
  }
  return out;
}

bool in_fconvex_hull(const AdmissibleMap& map, const HullQuery& q, double tol) {
  return hull_membership(map, q, tol).member;
}

std::vector<Point> sample_fconvex_hull(const AdmissibleMap& map,
                                       const std::vector<Point>& generators,
                                       std::size_t count, Rng& rng) {
  if (generators.empty()) throw Error(Errc::EmptyProfile, "hull needs generators");
  std::exponential_distribution<double> expo(1.0);
  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    // normalized exponentials are uniform on the simplex
    std::vector<double> w(generators.size());
    double total = 0.0;
    for (double& x : w) {
      x = expo(rng);
      total += x;
    }
    for (double& x : w) x /= total;
    out.push_back(mean(map, make_profile(generators, std::move(w))));
  }
  return out;
}

ConvexityVerdict check_fconvexity(const AdmissibleMap& map, const Region& region,
                                  std::size_t trials, Rng& rng) {
  ConvexityVerdict v;
  v.trials = trials;
  std::uniform_int_distribution<std::size_t> size(2, 5);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t n = size(rng);
    std::vector<Point> x;
    std::vector<double> w;
    for (std::size_t i = 0; i < n; ++i) {
      x.push_back(region.sample(rng));
      w.push_back(weight(rng) + 1e-3);
    }
    DecisionProfile p = make_profile(std::move(x), std::move(w));
    Point m = mean(map, p);
    if (!region.contains(m)) {
      v.verdict = Verdict::Fail;
      v.witness = std::move(p);
      v.witness_mean = std::move(m);
      return v;
    }
  }
  return v;
}

}  // namespace bajra
