#pragma once

#include <span>

namespace cesaro {

/// Ordinary least squares y ≈ intercept + slope·x with standard errors.
/// Errors are zero when the fit is exact or has no residual degrees of freedom.
struct LineFit {
  double intercept = 0.0;
  double slope = 0.0;
  double intercept_stderr = 0.0;
  double slope_stderr = 0.0;
};

/// Requires at least two points with distinct x.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace cesaro
