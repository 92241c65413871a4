#pragma once

// Gamma, log-Gamma and Beta on the positive reals.
//
// Everything is evaluated in log space. lnΓ uses upward argument shifting to
// x >= 10 followed by the Stirling series with Binet's correction
//   lnΓ(z) = (z - 1/2) ln z - z + ln(2π)/2 + ω(z),  0 < ω(z) < 1/(12z).
// Differences lnΓ(x+v) - lnΓ(x) are formed without cancellation, which keeps
// B(n+1, v) accurate for n up to 1e6 and beyond.

#include "cesaro/error.hpp"

namespace cesaro {

/// Strictly positive real argument.
class PosReal {
 public:
  explicit PosReal(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

double log_gamma(PosReal x);
inline double log_gamma(double x) { return log_gamma(PosReal(x)); }

/// lnΓ(x + v) - lnΓ(x) for x > 0, v >= 0.
double log_gamma_ratio(double x, double v);

double log_beta(PosReal u, PosReal v);
inline double log_beta(double u, double v) { return log_beta(PosReal(u), PosReal(v)); }

double beta(PosReal u, PosReal v);
inline double beta(double u, double v) { return beta(PosReal(u), PosReal(v)); }

/// Binet's function ω(x) = lnΓ(x) - [(x - 1/2) ln x - x + ln(2π)/2].
double binet(PosReal x);

/// r(x) in Γ(x) = √(2π) x^(x-1/2) e^(-x) [1 + r(x)].
double stirling_remainder(PosReal x);
inline double stirling_remainder(double x) { return stirling_remainder(PosReal(x)); }

/// e^(1/(12x)) - 1, an upper bound for |r(x)|.
double stirling_remainder_bound(PosReal x);
inline double stirling_remainder_bound(double x) { return stirling_remainder_bound(PosReal(x)); }

}  // namespace cesaro
