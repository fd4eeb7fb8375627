#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace bajra {

/// A decision: a point of D. Scalar decisions are points of length 1.
using Point = std::vector<double>;
/// An element of the image space X.
using Vec = std::vector<double>;

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// Relative tolerance with an absolute floor: |a - b| <= max(abs, rel * scale).
struct Tolerance {
  double rel = 1e-9;
  double abs = 1e-12;
};

bool close(double a, double b, Tolerance tol = {}) noexcept;
/// Compares in the Euclidean norm, scaled by the larger of the two norms.
bool close(std::span<const double> a, std::span<const double> b,
           Tolerance tol = {}) noexcept;

double norm(std::span<const double> v) noexcept;
double distance(std::span<const double> a, std::span<const double> b) noexcept;

struct RootOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_iter = 200;
};

/// Brent's bisection/secant/inverse-quadratic hybrid. `g(lo)` and `g(hi)` must
/// differ in sign (or one of them vanish); throws RootNotBracketed otherwise
/// and ConvergenceFailure when the iteration budget runs out.
double find_root(const std::function<double(double)>& g, double lo, double hi,
                 const RootOptions& opts = {});

}  // namespace bajra
