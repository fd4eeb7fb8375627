#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bajra/domain.hpp"
#include "bajra/numeric.hpp"

namespace bajra {

using ScalarFn = std::function<double(double)>;

/// The unique (u, eta) with eta * f(u) = v.
struct RaySolution {
  Point decision;
  double effort;
};

/// A generator f: D -> X that is injective with an observable, conically
/// convex image. Implementations realize the extended inverse f^(-1) through
/// `solve_ray`.
class AdmissibleMap {
 public:
  virtual ~AdmissibleMap() = default;

  virtual std::string name() const = 0;
  virtual const Domain& domain() const = 0;
  virtual std::size_t range_dim() const = 0;

  /// f(x). The caller guarantees x lies in the domain.
  virtual Vec evaluate(const Point& x) const = 0;

  /// Throws OutsideCone (or RootNotBracketed for ratio maps) when v is not
  /// in cone(f(D)), ConvergenceFailure when the solver gives up.
  virtual RaySolution solve_ray(std::span<const double> v) const = 0;
};

using MapPtr = std::shared_ptr<const AdmissibleMap>;

/// Relative residual bound enforced on every ray solution.
inline constexpr double kRayResidualTol = 1e-10;

/// f(x) with a domain check (DomainViolation).
Vec evaluate(const AdmissibleMap& map, const Point& x);

/// Checked ray solve: validates the dimension of v and the
/// residual ||eta f(u) - v|| <= 1e-10 ||v||.
RaySolution ray_solve(const AdmissibleMap& map, std::span<const double> v);

/// Settings for validating a ratio generator on its interval.
struct RatioMapOptions {
  std::size_t monotonicity_samples = 512;
  double monotonicity_tol = 1e-12;
  RootOptions root{};
};

/// f = (f1, f2) on an open interval with f2 nowhere zero and f1/f2 strictly
/// monotone. The ray solver inverts f1/f2 by bracketing and Brent iteration.
class RatioMap final : public AdmissibleMap {
 public:
  RatioMap(ScalarFn f1, ScalarFn f2, Interval interval, std::string name = "ratio",
           RatioMapOptions opts = {});

  std::string name() const override { return name_; }
  const Domain& domain() const override { return domain_; }
  std::size_t range_dim() const override { return 2; }
  Vec evaluate(const Point& x) const override;
  RaySolution solve_ray(std::span<const double> v) const override;

  bool increasing() const noexcept { return increasing_; }
  double f2_sign() const noexcept { return f2_sign_; }

 private:
  double ratio(double x) const { return f1_(x) / f2_(x); }
  std::pair<double, double> bracket(double target) const;

  ScalarFn f1_;
  ScalarFn f2_;
  Interval interval_;
  Domain domain_;
  std::string name_;
  RatioMapOptions opts_;
  bool increasing_ = true;
  double f2_sign_ = 1.0;
  std::vector<double> grid_;
  std::vector<double> grid_ratio_;
};

MapPtr ratio_map(ScalarFn f1, ScalarFn f2, Interval interval,
                 std::string name = "ratio", RatioMapOptions opts = {});

/// g = A o f for a linear A with full column rank on the image of f. The ray
/// solver maps v back through the least-squares inverse of A.
class LinearImageMap final : public AdmissibleMap {
 public:
  /// `matrix` is row-major, rows x base->range_dim().
  LinearImageMap(MapPtr base, std::vector<std::vector<double>> matrix);

  std::string name() const override;
  const Domain& domain() const override { return base_->domain(); }
  std::size_t range_dim() const override { return matrix_.size(); }
  Vec evaluate(const Point& x) const override;
  RaySolution solve_ray(std::span<const double> v) const override;

 private:
  MapPtr base_;
  std::vector<std::vector<double>> matrix_;
  std::vector<std::vector<double>> pseudo_inverse_;
};

enum class Verdict { Pass, Fail, Inconclusive };

std::string_view to_string(Verdict v) noexcept;

/// Sampling certificate for a planar generator over a finite grid.
struct AdmissibilityCertificate {
  Verdict verdict = Verdict::Inconclusive;
  /// A pair of grid points whose images are linearly dependent (on Fail).
  std::optional<std::pair<double, double>> witness;
  std::size_t samples_used = 0;
  /// All pairwise determinants share one sign. A continuous admissible map
  /// must have this; a passing grid without it is suspicious.
  bool sign_consistent = true;
  /// Smallest |det| / (|f1(x) f2(y)| + |f2(x) f1(y)|) seen, in [0, 1].
  double min_normalized_det = 0.0;
};

using PlanarFn = std::function<std::array<double, 2>(double)>;

inline constexpr std::size_t kDefaultAdmissibilityGrid = 256;

/// Evaluates det[f(x) f(y)] for every grid pair x < y. Fails with a witness
/// when some |det| <= tol * |f(x)| |f(y)|; inconclusive when an image is not
/// finite.
AdmissibilityCertificate check_admissibility_2d(const PlanarFn& f,
                                                std::span<const double> grid,
                                                double tol = 1e-12);
/// For maps with 1-D domain and 2-D range. An empty grid means the default
/// 256-point grid over the map's domain.
AdmissibilityCertificate check_admissibility_2d(const AdmissibleMap& map,
                                                std::span<const double> grid = {},
                                                double tol = 1e-12);

}  // namespace bajra
