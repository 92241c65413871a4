#pragma once

// Numerical checks of the auxiliary estimates behind the boundedness proofs.

#include <cstddef>
#include <span>
#include <utility>

#include "cesaro/operators.hpp"

namespace cesaro {

/// ρ(t) = (1-t²)^c Σ_{n=1}^{n_max} n^(c-1) t^(2n).
/// Throws DomainError when n_max < 50/(1-t), i.e. the partial sum would drop
/// more than e^-100 of the series.
double est_ratio(double c, double t, std::size_t n_max);

/// (min ρ, max ρ) over the grid. c > 0, every t in (0,1).
std::pair<double, double> est_ratio_check(double c, std::span<const double> t_grid, std::size_t n_max);

struct Prop1Check {
  double section_norm = 0.0;  // Cesàro section norm D_α → D_α at the given size
  double bound = 0.0;         // √(2(2+α))/α
  std::size_t partial_sum_violations = 0;  // Σ_{k≤n}(k+1)^-(2-α)/2 > (2/α)(n+1)^(α/2)
  std::size_t tail_sum_violations = 0;     // Σ_{n≥k}(k+1)^(α/2)/(n+1)^((2+α)/2) > 1/(k+1) + 2/α
  std::size_t tail_bound_violations = 0;   // same sum > (2+α)/α
  double max_partial_sum_ratio = 0.0;      // worst lhs/rhs
  double max_tail_sum_ratio = 0.0;
};

/// Checks the pointwise inequalities for all n, k <= size and the Cesàro
/// section norm against the bound. 0 < alpha < 2.
Prop1Check prop1_bound_check(double alpha, std::size_t size, const NormOptions& options = {});

/// Σ_{m=a}^∞ m^-p for p > 1, a >= 1 (Euler–Maclaurin past a cutoff).
double hurwitz_tail(double p, std::size_t a);

}  // namespace cesaro
