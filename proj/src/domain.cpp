#include "bajra/domain.hpp"

#include <cmath>
#include <limits>

#include "bajra/error.hpp"

namespace bajra {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sample_coordinate(const Interval& iv, Rng& rng) {
  const bool lo_finite = std::isfinite(iv.lo);
  const bool hi_finite = std::isfinite(iv.hi);
  if (lo_finite && hi_finite) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (;;) {
      const double x = iv.lo + (iv.hi - iv.lo) * u(rng);
      if (iv.contains(x)) return x;
    }
  }
  if (!lo_finite && !hi_finite) {
    return std::uniform_real_distribution<double>(-3.0, 3.0)(rng);
  }
  const double offset =
      std::exp(std::uniform_real_distribution<double>(std::log(0.1), std::log(10.0))(rng));
  return lo_finite ? iv.lo + offset : iv.hi - offset;
}

}  // namespace

Domain::Domain(std::vector<Interval> bounds) : bounds_(std::move(bounds)) {
  if (bounds_.empty()) throw Error(Errc::WrongDimension, "domain needs dimension >= 1");
  for (const auto& iv : bounds_) {
    if (std::isnan(iv.lo) || std::isnan(iv.hi) || !(iv.lo < iv.hi)) {
      throw Error(Errc::BadArguments, "interval endpoints must satisfy lo < hi");
    }
  }
}

Domain Domain::positive_reals() { return interval(0.0, kInf); }

Domain Domain::whole_space(std::size_t dim) {
  return Domain(std::vector<Interval>(dim, Interval{-kInf, kInf}));
}

bool Domain::contains(const Point& x) const noexcept {
  if (x.size() != bounds_.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!bounds_[i].contains(x[i])) return false;
  }
  return true;
}

Point Domain::sample(Rng& rng) const {
  Point x;
  x.reserve(bounds_.size());
  for (const auto& iv : bounds_) x.push_back(sample_coordinate(iv, rng));
  return x;
}

std::vector<double> Domain::grid(std::size_t count) const {
  if (dim() != 1) throw Error(Errc::WrongDimension, "grid needs a 1-D domain");
  const Interval& iv = bounds_.front();
  const bool lo_finite = std::isfinite(iv.lo);
  const bool hi_finite = std::isfinite(iv.hi);
  std::vector<double> xs;
  xs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double t = (static_cast<double>(i) + 0.5) / static_cast<double>(count);
    double x;
    if (lo_finite && hi_finite) {
      x = iv.lo + (iv.hi - iv.lo) * t;
    } else if (lo_finite) {
      x = iv.lo + std::exp(-10.0 + 20.0 * t);
    } else if (hi_finite) {
      x = iv.hi - std::exp(10.0 - 20.0 * t);
    } else {
      x = std::sinh(-10.0 + 20.0 * t);
    }
    if (iv.contains(x) && (xs.empty() || x > xs.back())) xs.push_back(x);
  }
  return xs;
}

}  // namespace bajra
