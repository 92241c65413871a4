#include "cesaro/estimates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cesaro/error.hpp"
#include "cesaro/measures.hpp"
#include "cesaro/spaces.hpp"

namespace cesaro {
namespace {

// Neumaier summation
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
    else comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

double est_ratio(double c, double t, std::size_t n_max) {
  if (!(c > 0.0)) throw DomainError("est_ratio: c must be positive");
  if (!(t > 0.0 && t < 1.0)) throw DomainError("est_ratio: t must lie in (0,1)");
  if (static_cast<double>(n_max) < 50.0 / (1.0 - t))
    throw DomainError("est_ratio: n_max too small for t this close to 1 (need n_max >= 50/(1-t))");
  const double log_t2 = 2.0 * std::log(t);
  CompensatedSum sum;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double nd = static_cast<double>(n);
    sum.add(std::exp((c - 1.0) * std::log(nd) + nd * log_t2));
  }
  return std::pow((1.0 - t) * (1.0 + t), c) * sum.value();
}

std::pair<double, double> est_ratio_check(double c, std::span<const double> t_grid, std::size_t n_max) {
  if (t_grid.empty()) throw DomainError("est_ratio_check: empty t grid");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double t : t_grid) {
    const double rho = est_ratio(c, t, n_max);
    lo = std::min(lo, rho);
    hi = std::max(hi, rho);
  }
  return {lo, hi};
}

double hurwitz_tail(double p, std::size_t a) {
  if (!(p > 1.0)) throw DomainError("hurwitz_tail: p must exceed 1");
  if (a == 0) throw DomainError("hurwitz_tail: a must be positive");
  constexpr std::size_t kCutoff = 64;
  CompensatedSum sum;
  std::size_t m = a;
  for (; m < kCutoff; ++m) sum.add(std::pow(static_cast<double>(m), -p));
  const double b = static_cast<double>(m);
  const double fb = std::pow(b, -p);
  const double inv = 1.0 / b;
  const double inv2 = inv * inv;
  double em = b * fb / (p - 1.0) + 0.5 * fb;
  em += p * fb * inv / 12.0;
  em -= p * (p + 1.0) * (p + 2.0) * fb * inv * inv2 / 720.0;
  em += p * (p + 1.0) * (p + 2.0) * (p + 3.0) * (p + 4.0) * fb * inv * inv2 * inv2 / 30240.0;
  sum.add(em);
  return sum.value();
}

Prop1Check prop1_bound_check(double alpha, std::size_t size, const NormOptions& options) {
  const SpaceIndex space = SpaceIndex::in_open_range(alpha);
  if (size == 0) throw DomainError("prop1_bound_check: size must be positive");
  Prop1Check out;
  out.bound = std::sqrt(2.0 * (2.0 + alpha)) / alpha;
  out.section_norm = section_norm(SectionOp(Measure::lebesgue(), space, space, size), options).value;

  // Σ_{j=1}^{n+1} j^-(2-α)/2 <= (2/α)(n+1)^(α/2), n = 0..size
  const double q = (2.0 - alpha) / 2.0;
  double partial = 0.0;
  for (std::size_t n = 0; n <= size; ++n) {
    const double np1 = static_cast<double>(n) + 1.0;
    partial += std::pow(np1, -q);
    const double rhs = (2.0 / alpha) * std::pow(np1, alpha / 2.0);
    if (partial > rhs) ++out.partial_sum_violations;
    out.max_partial_sum_ratio = std::max(out.max_partial_sum_ratio, partial / rhs);
  }

  // (k+1)^(α/2) Σ_{n≥k} (n+1)^-(2+α)/2 <= 1/(k+1) + 2/α <= (2+α)/α, k = size..0
  const double p = (2.0 + alpha) / 2.0;
  double tail = hurwitz_tail(p, size + 2);
  const double final_bound = (2.0 + alpha) / alpha;
  for (std::size_t k = size + 1; k-- > 0;) {
    const double kp1 = static_cast<double>(k) + 1.0;
    tail += std::pow(kp1, -p);
    const double lhs = std::pow(kp1, alpha / 2.0) * tail;
    const double step_bound = 1.0 / kp1 + 2.0 / alpha;
    if (lhs > step_bound) ++out.tail_sum_violations;
    if (lhs > final_bound) ++out.tail_bound_violations;
    out.max_tail_sum_ratio = std::max(out.max_tail_sum_ratio, lhs / step_bound);
  }
  return out;
}

}  // namespace cesaro
