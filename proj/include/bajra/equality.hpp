#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bajra/maps.hpp"
#include "bajra/profiles.hpp"

namespace bajra {

using Matrix = std::vector<std::vector<double>>;  // row-major

/// Least-squares A minimizing sum ||g(x_i) - A f(x_i)||^2.
struct LinearFit {
  Matrix matrix;  // range_dim(g) x range_dim(f)
  /// max_i ||g(x_i) - A f(x_i)|| / ||g(x_i)||
  double max_residual = 0.0;
  std::size_t rank = 0;
};

/// Throws RankDeficientSamples unless the f-images of the samples span
/// R^range_dim(f).
LinearFit fit_linear_map(const AdmissibleMap& f, const AdmissibleMap& g,
                         const std::vector<Point>& samples);

struct EqualityTolerances {
  double fit = 1e-8;
  double mean = 1e-8;
  double effort = 1e-8;
};

/// A numerical judgment: `equal` means "consistent with B_f = B_g on the
/// probes", not a proof.
struct EqualityVerdict {
  bool equal = false;
  std::optional<Matrix> linear_map;
  std::size_t rank = 0;
  double max_fit_residual = 0.0;
  double max_mean_discrepancy = 0.0;
  double max_effort_discrepancy = 0.0;
  /// The probe with the largest mean discrepancy.
  std::optional<DecisionProfile> worst_probe;
};

/// ||a - b|| / max(1, ||a||, ||b||)
double discrepancy(std::span<const double> a, std::span<const double> b) noexcept;

EqualityVerdict test_mean_equality(const AdmissibleMap& f, const AdmissibleMap& g,
                                   const std::vector<Point>& fit_samples,
                                   const std::vector<DecisionProfile>& probes,
                                   EqualityTolerances tol = {});

/// Checks sum lambda_i f(x_i) = 0  <=>  sum lambda_i g(x_i) = 0 for signed
/// weights, deciding each side by comparing B and beta on lambda+ and lambda-.
bool verify_signed_claim(const AdmissibleMap& f, const AdmissibleMap& g,
                         const std::vector<Point>& x, std::span<const double> lambda);

}  // namespace bajra
