#include "cesaro/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace cesaro {
namespace {

constexpr double kShiftThreshold = 10.0;
const double kHalfLog2Pi = 0.5 * std::log(2.0 * std::numbers::pi);

// B_{2k} / (2k (2k - 1)), k = 1..8
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,       -1.0 / 360.0,         1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0,     -691.0 / 360360.0,    1.0 / 156.0,  -3617.0 / 122400.0,
};

// Series for ω(z), z >= 10. The first omitted term is below 2e-17 / z.
double binet_series(double z) {
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  double sum = 0.0;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) sum = sum * inv2 + *it;
  return sum * inv;
}

double stirling_main(double z) { return (z - 0.5) * std::log(z) - z + kHalfLog2Pi; }

// ln(x (x+1) ... (x+k-1))
double log_rising(double x, int k) {
  double prod = 1.0;
  for (int i = 0; i < k; ++i) prod *= x + i;
  return std::log(prod);
}

int shift_count(double x) {
  return x >= kShiftThreshold ? 0 : static_cast<int>(std::ceil(kShiftThreshold - x));
}

}  // namespace

PosReal::PosReal(double value) : value_(value) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw DomainError("argument must be a finite positive real, got " + std::to_string(value));
}

double log_gamma(PosReal x) {
  const double v = x.value();
  // (v-1)! is exact in double for v <= 20
  if (v <= 20.0 && v == std::floor(v)) {
    double fact = 1.0;
    for (double i = 2.0; i < v; i += 1.0) fact *= i;
    return std::log(fact);
  }
  const int k = shift_count(v);
  const double z = v + k;
  const double base = stirling_main(z) + binet_series(z);
  return k == 0 ? base : base - log_rising(v, k);
}

double log_gamma_ratio(double x, double v) {
  if (!(x > 0.0)) throw DomainError("log_gamma_ratio: x must be positive");
  if (!(v >= 0.0)) throw DomainError("log_gamma_ratio: v must be nonnegative");
  if (v == 0.0) return 0.0;
  if (v <= 16.0 && v == std::floor(v) && x < 1e15) return log_rising(x, static_cast<int>(v));
  const int k = shift_count(x);
  if (k > 0 && x + v < 2.0 * kShiftThreshold) {
    return log_gamma(PosReal(x + v)) - log_gamma(PosReal(x));
  }
  const double z = x + k;
  // (z+v-1/2) ln(z+v) - (z-1/2) ln z - v, rearranged to avoid cancellation
  const double main = (z - 0.5) * std::log1p(v / z) + v * std::log(z + v) - v;
  const double ratio = main + binet_series(z + v) - binet_series(z);
  if (k == 0) return ratio;
  return ratio - log_rising(x + v, k) + log_rising(x, k);
}

double log_beta(PosReal u, PosReal v) {
  const double big = std::max(u.value(), v.value());
  const double small = std::min(u.value(), v.value());
  return log_gamma(PosReal(small)) - log_gamma_ratio(big, small);
}

double beta(PosReal u, PosReal v) { return std::exp(log_beta(u, v)); }

double binet(PosReal x) {
  const double v = x.value();
  if (v >= kShiftThreshold) return binet_series(v);
  return log_gamma(x) - stirling_main(v);
}

double stirling_remainder(PosReal x) { return std::expm1(binet(x)); }

double stirling_remainder_bound(PosReal x) { return std::expm1(1.0 / (12.0 * x.value())); }

}  // namespace cesaro
