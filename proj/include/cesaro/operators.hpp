#pragma once

// Finite sections of the generalized Cesàro operator
//   C_μ(f)_n = μ[n] Σ_{k≤n} a_k
// acting D_α → D_β. Conjugating by the space weights turns the D_α → D_β
// operator norm into the spectral norm of the lower-triangular matrix
//   A[n][k] = (n+1)^((1-β)/2) μ[n] (k+1)^(-(1-α)/2),  k ≤ n,
// which is applied in O(N) with prefix sums (A) and suffix sums (Aᵀ).

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cesaro/measures.hpp"
#include "cesaro/spaces.hpp"

namespace cesaro {

/// N×N section of C_μ between D_α and D_β. Only output rows in
/// [first_row, last_row] are active; the rest are zero.
class SectionOp {
 public:
  SectionOp(const Measure& measure, SpaceIndex alpha, SpaceIndex beta, std::size_t size);

  const Measure& measure() const noexcept { return measure_; }
  SpaceIndex alpha() const noexcept { return alpha_; }
  SpaceIndex beta() const noexcept { return beta_; }
  std::size_t size() const noexcept { return moments_.size(); }
  const MomentSeq& moments() const noexcept { return moments_; }
  std::size_t first_row() const noexcept { return first_row_; }
  std::size_t last_row() const noexcept { return last_row_; }
  bool is_zero() const noexcept { return first_row_ > last_row_; }

  /// Row scale of the conjugated matrix, zero outside the active rows.
  double row_scale(std::size_t n) const noexcept { return row_scale_[n]; }
  double column_scale(std::size_t k) const noexcept { return column_scale_[k]; }

 private:
  friend SectionOp truncate(const SectionOp& op, std::size_t last_kept);
  friend SectionOp tail_part(const SectionOp& op, std::size_t last_dropped);
  void restrict_rows(std::size_t first, std::size_t last);

  Measure measure_;
  SpaceIndex alpha_;
  SpaceIndex beta_;
  MomentSeq moments_;
  std::size_t first_row_ = 0;
  std::size_t last_row_ = 0;
  std::vector<double> row_scale_;
  std::vector<double> column_scale_;
};

/// out_n = μ[n] Σ_{k≤n} a_k on active rows; `f` shorter than the section is zero-padded.
CoeffVec apply(const SectionOp& op, const CoeffVec& f);

/// Keeps output rows 0..last_kept. Requires last_kept < size.
SectionOp truncate(const SectionOp& op, std::size_t last_kept);

/// op - truncate(op, last_dropped): rows last_dropped+1 .. size-1.
SectionOp tail_part(const SectionOp& op, std::size_t last_dropped);

/// Dense conjugated matrix A (size × size).
Eigen::MatrixXd weighted_matrix(const SectionOp& op);

enum class NormMethod { power_iteration, dense_svd };

enum class MethodChoice { automatic, power_iteration, dense_svd };

std::string to_string(NormMethod m);

struct OpNormEstimate {
  double value = 0.0;
  int iterations = 0;
  double residual = 0.0;  // relative change of the last Rayleigh estimate
  NormMethod method = NormMethod::power_iteration;
  bool converged = true;
};

struct NormOptions {
  double tol = 1e-12;
  int max_iter = 100000;
  MethodChoice method = MethodChoice::automatic;
  std::size_t dense_limit = 512;  // automatic: dense SVD up to this size
};

/// Largest singular value of weighted_matrix(op). Power iteration on AᵀA starts
/// from the all-ones vector and stops once successive Rayleigh quotients differ
/// by less than tol (relative); the result is then a lower bound within residual.
/// A non-converged estimate is returned with converged = false.
OpNormEstimate section_norm(const SectionOp& op, const NormOptions& options = {});

struct ProfileEntry {
  std::size_t size;
  OpNormEstimate estimate;
};

/// Section norms for strictly increasing sizes, ordered by size.
std::vector<ProfileEntry> norm_growth_profile(const Measure& measure, SpaceIndex alpha,
                                              SpaceIndex beta, std::span<const std::size_t> sizes,
                                              const NormOptions& options = {}, unsigned threads = 1);

/// CSV with header `N,norm,method,iterations,residual`.
void write_profile_csv(std::ostream& out, std::span<const ProfileEntry> profile);

}  // namespace cesaro
