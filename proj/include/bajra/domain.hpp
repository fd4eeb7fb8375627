#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "bajra/numeric.hpp"

namespace bajra {

using Rng = std::mt19937_64;

/// Open interval (lo, hi); either end may be infinite.
struct Interval {
  double lo;
  double hi;

  bool contains(double x) const noexcept { return lo < x && x < hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// D as a product of open intervals.
class Domain {
 public:
  explicit Domain(std::vector<Interval> bounds);

  static Domain interval(double lo, double hi) { return Domain({{lo, hi}}); }
  static Domain positive_reals();
  static Domain whole_space(std::size_t dim);

  std::size_t dim() const noexcept { return bounds_.size(); }
  const std::vector<Interval>& bounds() const noexcept { return bounds_; }
  bool contains(const Point& x) const noexcept;

  /// Random point at "desk scale": uniform inside finite boxes,
  /// log-uniform in [0.1, 10] away from a single finite end, uniform in
  /// [-3, 3] for the whole line.
  Point sample(Rng& rng) const;

  /// `count` increasing points spread across a 1-D domain (deterministic).
  std::vector<double> grid(std::size_t count) const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  std::vector<Interval> bounds_;
};

}  // namespace bajra
