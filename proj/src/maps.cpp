#include "bajra/maps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "bajra/error.hpp"

namespace bajra {

Vec evaluate(const AdmissibleMap& map, const Point& x) {
  if (!map.domain().contains(x)) {
    throw Error(Errc::DomainViolation, "point outside the domain of " + map.name());
  }
  return map.evaluate(x);
}

RaySolution ray_solve(const AdmissibleMap& map, std::span<const double> v) {
  if (v.size() != map.range_dim()) {
    throw Error(Errc::WrongDimension, "vector does not live in the range of " + map.name());
  }
  for (double c : v) {
    if (!std::isfinite(c)) throw Error(Errc::NonFiniteValue, "ray target is not finite");
  }
  RaySolution sol = map.solve_ray(v);
  if (!(sol.effort > 0.0) || !std::isfinite(sol.effort) || !map.domain().contains(sol.decision)) {
    throw Error(Errc::OutsideCone, "ray solver of " + map.name() + " left the domain");
  }
  const Vec image = map.evaluate(sol.decision);
  double residual = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    residual = std::hypot(residual, sol.effort * image[i] - v[i]);
  }
  if (!(residual <= kRayResidualTol * norm(v))) {
    throw Error(Errc::ConvergenceFailure,
                "ray residual " + std::to_string(residual / norm(v)) + " for " + map.name());
  }
  return sol;
}

// ---------------------------------------------------------------------------
// RatioMap

RatioMap::RatioMap(ScalarFn f1, ScalarFn f2, Interval interval, std::string name,
                   RatioMapOptions opts)
    : f1_(std::move(f1)),
      f2_(std::move(f2)),
      interval_(interval),
      domain_(Domain({interval})),
      name_(std::move(name)),
      opts_(opts) {
  const std::vector<double> xs = domain_.grid(opts_.monotonicity_samples);
  int f2_positive = 0, f2_negative = 0;
  for (double x : xs) {
    const double a = f1_(x), b = f2_(x);
    if (b == 0.0) {
      throw Error(Errc::ZeroCrossingInF2, name_ + ": f2 vanishes at " + std::to_string(x));
    }
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(a / b)) continue;
    (b > 0.0 ? f2_positive : f2_negative)++;
    grid_.push_back(x);
    grid_ratio_.push_back(a / b);
  }
  if (f2_positive > 0 && f2_negative > 0) {
    throw Error(Errc::ZeroCrossingInF2, name_ + ": f2 changes sign");
  }
  if (grid_.size() < 2) {
    throw Error(Errc::NonMonotoneRatio, name_ + ": too few finite samples of f1/f2");
  }
  f2_sign_ = f2_negative > 0 ? -1.0 : 1.0;

  std::size_t up = 0, down = 0;
  for (std::size_t i = 1; i < grid_ratio_.size(); ++i) {
    const double step = grid_ratio_[i] - grid_ratio_[i - 1];
    const double tol = opts_.monotonicity_tol *
                       std::max({1.0, std::abs(grid_ratio_[i]), std::abs(grid_ratio_[i - 1])});
    if (step > tol) ++up;
    if (step < -tol) ++down;
  }
  if ((up > 0 && down > 0) || (up == 0 && down == 0)) {
    throw Error(Errc::NonMonotoneRatio, name_ + ": f1/f2 is not strictly monotone");
  }
  increasing_ = up > 0;
}

Vec RatioMap::evaluate(const Point& x) const { return {f1_(x[0]), f2_(x[0])}; }

std::pair<double, double> RatioMap::bracket(double target) const {
  // h is increasing in x and vanishes at the solution
  const auto h = [&](double x) {
    const double d = ratio(x) - target;
    return increasing_ ? d : -d;
  };
  const auto it = std::find_if(grid_ratio_.begin(), grid_ratio_.end(), [&](double r) {
    return increasing_ ? r >= target : r <= target;
  });
  const auto idx = static_cast<std::size_t>(it - grid_ratio_.begin());
  if (idx > 0 && idx < grid_.size()) return {grid_[idx - 1], grid_[idx]};

  const bool go_left = idx == 0;
  double inner = go_left ? grid_.front() : grid_.back();
  const double edge = go_left ? interval_.lo : interval_.hi;
  for (int step = 0; step < opts_.root.max_iter; ++step) {
    double next;
    if (std::isfinite(edge)) {
      next = 0.5 * (inner + edge);
    } else {
      const double jump = std::max(1.0, std::abs(inner));
      next = go_left ? inner - jump : inner + jump;
    }
    if (next == inner || !interval_.contains(next)) break;
    const double value = h(next);
    if (!std::isfinite(value)) break;
    if (go_left ? value <= 0.0 : value >= 0.0) {
      return go_left ? std::pair{next, inner} : std::pair{inner, next};
    }
    inner = next;
  }
  throw Error(Errc::RootNotBracketed,
              name_ + ": ratio " + std::to_string(target) + " is outside the range of f1/f2");
}

RaySolution RatioMap::solve_ray(std::span<const double> v) const {
  const double v1 = v[0], v2 = v[1];
  if (!(v2 * f2_sign_ > 0.0)) {
    throw Error(Errc::OutsideCone, name_ + ": vector is not in the image cone");
  }
  const double target = v1 / v2;
  const auto [lo, hi] = bracket(target);
  // f(u) x v: vanishes exactly when f(u) lies on the ray of v
  const auto cross = [&](double u) { return f1_(u) * v2 - f2_(u) * v1; };
  const double u = find_root(cross, lo, hi, opts_.root);
  return {Point{u}, v2 / f2_(u)};
}

MapPtr ratio_map(ScalarFn f1, ScalarFn f2, Interval interval, std::string name,
                 RatioMapOptions opts) {
  return std::make_shared<RatioMap>(std::move(f1), std::move(f2), interval, std::move(name),
                                    opts);
}

// ---------------------------------------------------------------------------
// LinearImageMap

LinearImageMap::LinearImageMap(MapPtr base, std::vector<std::vector<double>> matrix)
    : base_(std::move(base)), matrix_(std::move(matrix)) {
  const std::size_t cols = base_->range_dim();
  if (matrix_.empty()) throw Error(Errc::MismatchedShapes, "empty linear map");
  Eigen::MatrixXd a(static_cast<Eigen::Index>(matrix_.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    if (matrix_[i].size() != cols) throw Error(Errc::MismatchedShapes, "linear map row width");
    for (std::size_t j = 0; j < cols; ++j) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = matrix_[i][j];
    }
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
  if (cod.rank() < static_cast<Eigen::Index>(cols)) {
    throw Error(Errc::RankDeficientSamples, "linear map is not injective on the image space");
  }
  const Eigen::MatrixXd pinv = cod.pseudoInverse();
  pseudo_inverse_.assign(cols, std::vector<double>(matrix_.size()));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < matrix_.size(); ++j) {
      pseudo_inverse_[i][j] = pinv(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
}

std::string LinearImageMap::name() const { return "linear(" + base_->name() + ")"; }

Vec LinearImageMap::evaluate(const Point& x) const {
  const Vec fx = base_->evaluate(x);
  Vec out(matrix_.size(), 0.0);
  for (std::size_t i = 0; i < matrix_.size(); ++i) {
    CompensatedSum s;
    for (std::size_t j = 0; j < fx.size(); ++j) s.add(matrix_[i][j] * fx[j]);
    out[i] = s.value();
  }
  return out;
}

RaySolution LinearImageMap::solve_ray(std::span<const double> v) const {
  Vec w(pseudo_inverse_.size(), 0.0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    CompensatedSum s;
    for (std::size_t j = 0; j < v.size(); ++j) s.add(pseudo_inverse_[i][j] * v[j]);
    w[i] = s.value();
  }
  return base_->solve_ray(w);
}

// ---------------------------------------------------------------------------
// Planar admissibility

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

AdmissibilityCertificate check_admissibility_2d(const PlanarFn& f,
                                                std::span<const double> grid, double tol) {
  std::vector<double> xs(grid.begin(), grid.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.size() < 2) throw Error(Errc::BadArguments, "grid needs two distinct points");

  AdmissibilityCertificate cert;
  cert.samples_used = xs.size();
  std::vector<std::array<double, 2>> images;
  images.reserve(xs.size());
  for (double x : xs) {
    const auto fx = f(x);
    if (!std::isfinite(fx[0]) || !std::isfinite(fx[1])) {
      cert.verdict = Verdict::Inconclusive;
      return cert;
    }
    images.push_back(fx);
  }

  int sign = 0;
  double min_det = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      const auto& a = images[i];
      const auto& b = images[j];
      const double scale = std::abs(a[0] * b[1]) + std::abs(b[0] * a[1]);
      const double det = a[0] * b[1] - b[0] * a[1];
      const double normalized = scale > 0.0 ? std::abs(det) / scale : 0.0;
      if (normalized <= tol) {
        cert.verdict = Verdict::Fail;
        cert.witness = std::pair{xs[i], xs[j]};
        cert.min_normalized_det = normalized;
        return cert;
      }
      min_det = std::min(min_det, normalized);
      const int s = det > 0.0 ? 1 : -1;
      if (sign == 0) sign = s;
      if (s != sign) cert.sign_consistent = false;
    }
  }
  // nonzero determinants already make every pair of rays disjoint
  cert.verdict = Verdict::Pass;
  cert.min_normalized_det = min_det;
  return cert;
}

AdmissibilityCertificate check_admissibility_2d(const AdmissibleMap& map,
                                                std::span<const double> grid, double tol) {
  if (map.range_dim() != 2 || map.domain().dim() != 1) {
    throw Error(Errc::WrongDimension, "planar certificate needs f: I -> R^2");
  }
  std::vector<double> xs(grid.begin(), grid.end());
  if (xs.empty()) xs = map.domain().grid(kDefaultAdmissibilityGrid);
  for (double x : xs) {
    if (!map.domain().contains(Point{x})) {
      throw Error(Errc::DomainViolation, "grid point outside the domain");
    }
  }
  const PlanarFn f = [&map](double x) {
    const Vec v = map.evaluate(Point{x});
    return std::array<double, 2>{v[0], v[1]};
  };
  return check_admissibility_2d(f, xs, tol);
}

}  // namespace bajra
