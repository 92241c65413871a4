#pragma once

// Dirichlet-type spaces D_α on truncated Taylor coefficient sequences,
//   ‖f‖²_{D_α} = Σ (n+1)^(1-α) |a_n|²,
// and the test-function families used to probe C_μ.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

namespace cesaro {

class SpaceIndex {
 public:
  explicit SpaceIndex(double alpha);

  /// Same as the constructor but requires 0 < alpha < 2.
  static SpaceIndex in_open_range(double alpha);

  double alpha() const noexcept { return alpha_; }
  bool in_open_range() const noexcept { return alpha_ > 0.0 && alpha_ < 2.0; }

  /// (n+1)^(1-α)
  double weight(std::size_t n) const;

 private:
  double alpha_;
};

/// Finite coefficient vector (a_0, ..., a_{N-1}), N >= 1, entries finite.
class CoeffVec {
 public:
  explicit CoeffVec(std::vector<double> coeffs);

  std::size_t size() const noexcept { return coeffs_.size(); }
  double operator[](std::size_t n) const { return coeffs_[n]; }
  std::span<const double> values() const noexcept { return coeffs_; }

  friend bool operator==(const CoeffVec&, const CoeffVec&) = default;

 private:
  std::vector<double> coeffs_;
};

double norm(const CoeffVec& f, SpaceIndex space);

/// a_n = √(ε/(1+ε)) (n+1)^(-(2-α+ε)/2), n < N. Requires 0 < ε < α < 2.
CoeffVec counterexample_family(SpaceIndex alpha, double eps, std::size_t length);

/// ã_n = Ω_N^(-1/2) b^(n+1) for n = 0..N with Ω_N = Σ_{k≤N} (k+1)^(1-α) b^(2(k+1)).
/// Returns N+1 coefficients of unit D_α norm.
CoeffVec truncated_geometric_family(SpaceIndex alpha, double b, std::size_t last_index);

/// â_n = (1-b²)^((2-α)/2) b^(n+1), n < length.
CoeffVec weak_null_family(SpaceIndex alpha, double b, std::size_t length);

/// Same, truncated at weak_null_length(b).
CoeffVec weak_null_family(SpaceIndex alpha, double b);

/// ⌈20/(1-b)⌉; the dropped tail of b^(2n) is below e^-40.
std::size_t weak_null_length(double b);

/// CSV with header `index,value`.
void write_csv(std::ostream& out, const CoeffVec& f);

}  // namespace cesaro
