#pragma once

// Verdict engines for the boundedness and compactness characterizations of
// C_μ : D_α → D_β, 0 < α, β < 2, with s = 1 + (α - β)/2:
//
//   bounded  ⇔ μ([t,1)) = O((1-t)^s)  ⇔ μ[n] = O((n+1)^-s)
//   compact  ⇔ μ([t,1)) = o((1-t)^s)  ⇔ μ[n] = o((n+1)^-s)
//
// Each engine samples a ratio on a dyadic grid and classifies it by the log
// slope per dyadic step, with a symmetric deadband σ = 0.02·ln 2.

#include <cstddef>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cesaro/measures.hpp"
#include "cesaro/operators.hpp"
#include "cesaro/spaces.hpp"

namespace cesaro {

inline constexpr double kDeadband = 0.02 * std::numbers::ln2;

enum class Engine { carleson, moments, norm, compactness };

/// bounded: ratio stays finite and does not vanish; vanishing: ratio → 0
/// (compact, for the compactness engine); unbounded: ratio → ∞.
enum class VerdictKind { bounded, vanishing, unbounded, inconclusive };

std::string to_string(Engine e);

/// Engine-specific name, e.g. "bounded_carleson", "not_compact".
std::string verdict_label(Engine e, VerdictKind k);

struct EvidenceSample {
  double parameter;  // t, n, N or M depending on the engine
  double ratio;
};

struct Verdict {
  Engine engine = Engine::carleson;
  VerdictKind kind = VerdictKind::inconclusive;
  std::vector<EvidenceSample> evidence;
  double fitted_slope = 0.0;  // ln-change per dyadic step; -inf when the ratio reached 0
  double slope_stderr = 0.0;

  std::string label() const { return verdict_label(engine, kind); }
};

/// Tri-state rule shared by all engines.
VerdictKind classify_slope(double slope, double stderr_);

/// s = 1 + (α - β)/2; both indices in (0,2).
double carleson_exponent(double alpha, double beta);

/// r_j = μ([t_j,1)) / (1-t_j)^s on t_j = 1 - 2^-j, j = 1..grid_depth, slope
/// fitted over the deepest half. grid_depth >= 8, s > 0.
Verdict classify_carleson(const Measure& m, double s, int grid_depth = 30);

/// q_n = μ[n] (n+1)^s on n = 2^i <= n_max, slope fitted over the last half
/// against log₂(n+1). n_max >= 64.
Verdict classify_moments(const Measure& m, double s, std::size_t n_max = std::size_t{1} << 20);

struct BoundednessOptions {
  NormOptions norm;
  double plateau_tol = 1e-9;  // relative increment counted as converged
  unsigned threads = 1;
};

/// Section-norm profile over `sizes` (at least 3, strictly increasing).
/// bounded when every relative increment in the last quarter is below
/// plateau_tol; otherwise the limiting growth exponent is extrapolated from
/// the local log-log slopes with a c/ln²N section correction and classified.
Verdict classify_boundedness(const Measure& m, SpaceIndex alpha, SpaceIndex beta,
                             std::span<const std::size_t> sizes, const BoundednessOptions& options = {});

/// Tail-operator norms ‖op - truncate(op, M)‖ on the `size`-section for each
/// M in `rows` (strictly increasing, max < size). compact (VerdictKind::vanishing)
/// once a tail norm drops below tol·‖op‖ or the extrapolated decay exponent is
/// below -σ; not compact (VerdictKind::bounded) on a plateau. `boundedness` must
/// be a bounded norm-engine verdict.
Verdict classify_compactness(const Measure& m, SpaceIndex alpha, SpaceIndex beta, std::size_t size,
                             std::span<const std::size_t> rows, double tol, const Verdict& boundedness,
                             const NormOptions& norm = {});

/// Measure under test. `tails` feeds the Carleson engine, `moments` the
/// moment, norm and compactness engines; they coincide except in
/// deliberately inconsistent fixtures.
struct Subject {
  std::string name;
  Measure tails;
  Measure moments;

  static Subject of(std::string name, const Measure& m) { return Subject{std::move(name), m, m}; }
};

struct EquivalenceConfig {
  int grid_depth = 30;
  std::size_t n_max = std::size_t{1} << 20;
  std::vector<std::size_t> sizes = {64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384};
  NormOptions norm;
  double plateau_tol = 1e-9;
  std::size_t compact_size = 65536;
  std::vector<std::size_t> compact_rows = {64, 128, 256, 512, 1024};
  double compact_tol = 1e-6;
};

struct EquivalenceReport {
  std::string measure;
  std::string tail_expr;
  std::string moment_expr;
  double alpha = 0.0;
  double beta = 0.0;
  double s = 0.0;
  Verdict carleson;
  Verdict moments;
  Verdict norm;
  std::optional<Verdict> compactness;
  bool bounded_agree = true;
  std::optional<bool> compact_agree;  // set when the boundedness engines agree on bounded
  std::vector<std::string> warnings;

  bool falsified() const { return !bounded_agree || (compact_agree && !*compact_agree); }
};

/// Runs the three boundedness engines and, for bounded subjects, the three
/// compactness engines; inconclusive engines are left out of the agreement
/// checks with a warning.
EquivalenceReport check_equivalence(const Subject& subject, double alpha, double beta,
                                    const EquivalenceConfig& config = {});

}  // namespace cesaro
