#include "bajra/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bajra/error.hpp"

namespace bajra {

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    carry_ += (sum_ - t) + x;
  } else {
    carry_ += (x - t) + sum_;
  }
  sum_ = t;
}

bool close(double a, double b, Tolerance tol) noexcept {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= std::max(tol.abs, tol.rel * scale);
}

double norm(std::span<const double> v) noexcept {
  double s = 0.0;
  for (double x : v) s = std::hypot(s, x);
  return s;
}

double distance(std::span<const double> a, std::span<const double> b) noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    s = std::hypot(s, a[i] - b[i]);
  }
  return s;
}

bool close(std::span<const double> a, std::span<const double> b,
           Tolerance tol) noexcept {
  if (a.size() != b.size()) return false;
  const double scale = std::max(norm(a), norm(b));
  return distance(a, b) <= std::max(tol.abs, tol.rel * scale);
}

double find_root(const std::function<double(double)>& g, double lo, double hi,
                 const RootOptions& opts) {
  double a = lo, b = hi;
  double fa = g(a), fb = g(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if (!std::isfinite(fa) || !std::isfinite(fb) ||
      std::signbit(fa) == std::signbit(fb)) {
    throw Error(Errc::RootNotBracketed, "no sign change on the bracket");
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 0; iter < opts.max_iter; ++iter) {
    if (std::signbit(fb) == std::signbit(fc)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol =
        2.0 * eps * std::abs(b) + 0.5 * (opts.abs_tol + opts.rel_tol * std::abs(b));
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) return b;

    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) {
        q = -q;
      } else {
        p = -p;
      }
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = d;
      }
    } else {
      d = m;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::abs(d) > tol ? d : std::copysign(tol, m);
    fb = g(b);
    if (!std::isfinite(fb)) {
      throw Error(Errc::ConvergenceFailure, "non-finite residual during root search");
    }
  }
  throw Error(Errc::ConvergenceFailure, "root search exceeded iteration budget");
}

}  // namespace bajra
