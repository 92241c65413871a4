#include "cesaro/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "cesaro/csv.hpp"
#include "cesaro/error.hpp"
#include "cesaro/slope_fit.hpp"

namespace cesaro {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// deepest half of a sample, at least `min_points`
std::size_t window_start(std::size_t count, std::size_t min_points) {
  const std::size_t half = count / 2;
  const std::size_t keep = std::min(count, std::max(half, min_points));
  return count - keep;
}

// Fits local slopes ≈ d + c·correction over the last half (at least three) and
// returns d with its standard error.
LineFit extrapolate_exponent(const std::vector<double>& slopes, const std::vector<double>& correction) {
  const std::size_t start = window_start(slopes.size(), 3);
  std::span<const double> x(correction.data() + start, correction.size() - start);
  std::span<const double> y(slopes.data() + start, slopes.size() - start);
  if (x.size() < 2) {
    LineFit flat;
    flat.intercept = y.empty() ? 0.0 : y.back();
    return flat;
  }
  return fit_line(x, y);
}

}  // namespace

std::string to_string(Engine e) {
  switch (e) {
    case Engine::carleson: return "carleson";
    case Engine::moments: return "moments";
    case Engine::norm: return "norm";
    case Engine::compactness: return "compactness";
  }
  return "unknown";
}

std::string verdict_label(Engine e, VerdictKind k) {
  if (k == VerdictKind::inconclusive) return "inconclusive";
  switch (e) {
    case Engine::carleson:
      return k == VerdictKind::bounded ? "bounded_carleson"
             : k == VerdictKind::vanishing ? "vanishing_carleson"
                                           : "not_carleson";
    case Engine::moments:
      return k == VerdictKind::bounded ? "bounded" : k == VerdictKind::vanishing ? "vanishing" : "unbounded";
    case Engine::norm: return k == VerdictKind::unbounded ? "unbounded" : "bounded";
    case Engine::compactness: return k == VerdictKind::vanishing ? "compact" : "not_compact";
  }
  return "unknown";
}

VerdictKind classify_slope(double slope, double stderr_) {
  if (std::isnan(slope)) return VerdictKind::inconclusive;
  if (std::abs(slope - kDeadband) < stderr_ || std::abs(slope + kDeadband) < stderr_)
    return VerdictKind::inconclusive;
  if (slope <= -kDeadband) return VerdictKind::vanishing;
  if (slope >= kDeadband) return VerdictKind::unbounded;
  return VerdictKind::bounded;
}

double carleson_exponent(double alpha, double beta) {
  if (!(alpha > 0.0 && alpha < 2.0) || !(beta > 0.0 && beta < 2.0))
    throw DomainError("carleson_exponent: alpha and beta must lie in (0,2)");
  return 1.0 + 0.5 * (alpha - beta);
}

Verdict classify_carleson(const Measure& m, double s, int grid_depth) {
  if (!(s > 0.0)) throw DomainError("classify_carleson: s must be positive");
  if (grid_depth < 8) throw DomainError("classify_carleson: grid_depth must be at least 8");
  Verdict v;
  v.engine = Engine::carleson;
  std::vector<double> js;
  std::vector<double> logs;
  for (int j = 1; j <= grid_depth; ++j) {
    const double gap = std::ldexp(1.0, -j);
    const double tail = m.tail_gap(gap);
    const double log_ratio = tail > 0.0 ? std::log(tail) + s * j * std::numbers::ln2 : kNegInf;
    v.evidence.push_back({1.0 - gap, std::exp(log_ratio)});
    js.push_back(j);
    logs.push_back(log_ratio);
  }
  const std::size_t start = static_cast<std::size_t>(grid_depth - grid_depth / 2);
  if (std::isinf(logs.back())) {
    // the tail is exactly zero near 1
    v.kind = VerdictKind::vanishing;
    v.fitted_slope = kNegInf;
    return v;
  }
  const auto fit = fit_line(std::span(js).subspan(start), std::span(logs).subspan(start));
  v.fitted_slope = fit.slope;
  v.slope_stderr = fit.slope_stderr;
  v.kind = classify_slope(fit.slope, fit.slope_stderr);
  return v;
}

Verdict classify_moments(const Measure& m, double s, std::size_t n_max) {
  if (n_max < 64) throw DomainError("classify_moments: n_max must be at least 64");
  Verdict v;
  v.engine = Engine::moments;
  std::vector<double> xs;
  std::vector<double> logs;
  for (std::size_t n = 1; n <= n_max; n *= 2) {
    const double np1 = static_cast<double>(n) + 1.0;
    const double log_q = m.log_moment(n) + s * std::log(np1);
    v.evidence.push_back({static_cast<double>(n), std::exp(log_q)});
    xs.push_back(std::log2(np1));
    logs.push_back(log_q);
    if (n > n_max / 2) break;
  }
  if (std::isinf(logs.back())) {
    v.kind = VerdictKind::vanishing;
    v.fitted_slope = kNegInf;
    return v;
  }
  const std::size_t start = window_start(xs.size(), 2);
  const auto fit = fit_line(std::span(xs).subspan(start), std::span(logs).subspan(start));
  v.fitted_slope = fit.slope;
  v.slope_stderr = fit.slope_stderr;
  v.kind = classify_slope(fit.slope, fit.slope_stderr);
  return v;
}

Verdict classify_boundedness(const Measure& m, SpaceIndex alpha, SpaceIndex beta,
                             std::span<const std::size_t> sizes, const BoundednessOptions& options) {
  if (sizes.size() < 3) throw DomainError("classify_boundedness: need at least three section sizes");
  const auto profile = norm_growth_profile(m, alpha, beta, sizes, options.norm, options.threads);
  Verdict v;
  v.engine = Engine::norm;
  for (const auto& e : profile) v.evidence.push_back({static_cast<double>(e.size), e.estimate.value});

  std::vector<double> slopes;
  std::vector<double> correction;
  for (std::size_t i = 0; i + 1 < profile.size(); ++i) {
    const double n0 = static_cast<double>(profile[i].size);
    const double n1 = static_cast<double>(profile[i + 1].size);
    slopes.push_back(std::log(profile[i + 1].estimate.value / profile[i].estimate.value) / std::log2(n1 / n0));
    const double mid = 0.5 * (std::log(n0) + std::log(n1));
    correction.push_back(1.0 / (mid * mid));
  }

  const std::size_t increments = slopes.size();
  const std::size_t quarter = std::max<std::size_t>(1, (increments + 3) / 4);
  bool plateau = true;
  for (std::size_t i = increments - quarter; i < increments; ++i) {
    const double prev = profile[i].estimate.value;
    if ((profile[i + 1].estimate.value - prev) >= options.plateau_tol * prev) plateau = false;
  }
  const auto fit = extrapolate_exponent(slopes, correction);
  v.fitted_slope = fit.intercept;
  v.slope_stderr = fit.intercept_stderr;
  if (plateau) {
    v.kind = VerdictKind::bounded;
    return v;
  }
  const VerdictKind k = classify_slope(fit.intercept, fit.intercept_stderr);
  // nested sections never shrink, so a negative exponent is read as convergence
  v.kind = k == VerdictKind::vanishing ? VerdictKind::bounded : k;
  return v;
}

Verdict classify_compactness(const Measure& m, SpaceIndex alpha, SpaceIndex beta, std::size_t size,
                             std::span<const std::size_t> rows, double tol, const Verdict& boundedness,
                             const NormOptions& norm) {
  if (boundedness.engine != Engine::norm || boundedness.kind != VerdictKind::bounded)
    throw std::logic_error("classify_compactness: requires a bounded verdict from classify_boundedness");
  if (rows.size() < 2) throw DomainError("classify_compactness: need at least two truncation rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && rows[i] <= rows[i - 1]) throw DomainError("classify_compactness: rows must be strictly increasing");
  }
  if (rows.back() >= size) throw DomainError("classify_compactness: truncation rows must be below the section size");
  if (!(tol > 0.0)) throw DomainError("classify_compactness: tol must be positive");

  const SectionOp op(m, alpha, beta, size);
  const double full = section_norm(op, norm).value;
  Verdict v;
  v.engine = Engine::compactness;
  std::vector<double> tails;
  for (std::size_t r : rows) {
    const double t = section_norm(tail_part(op, r), norm).value;
    tails.push_back(t);
    v.evidence.push_back({static_cast<double>(r), t / full});
  }
  if (tails.back() <= tol * full) {
    v.kind = VerdictKind::vanishing;
    v.fitted_slope = kNegInf;
    return v;
  }
  std::vector<double> slopes;
  std::vector<double> correction;
  const double log_size = std::log(static_cast<double>(size));
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    const double m0 = static_cast<double>(rows[i]);
    const double m1 = static_cast<double>(rows[i + 1]);
    slopes.push_back(std::log(tails[i + 1] / tails[i]) / std::log2(m1 / m0));
    const double gap = log_size - 0.5 * (std::log(m0) + std::log(m1));
    correction.push_back(1.0 / (gap * gap));
  }
  const auto fit = extrapolate_exponent(slopes, correction);
  v.fitted_slope = fit.intercept;
  v.slope_stderr = fit.intercept_stderr;
  const VerdictKind k = classify_slope(fit.intercept, fit.intercept_stderr);
  v.kind = k == VerdictKind::unbounded ? VerdictKind::inconclusive : k;
  return v;
}

namespace {

// Agreement over conclusive engines; returns false on any mismatch.
bool agree(const std::vector<std::pair<std::string, std::optional<bool>>>& votes, const std::string& what,
           std::vector<std::string>& warnings) {
  std::optional<bool> first;
  bool ok = true;
  std::size_t conclusive = 0;
  for (const auto& [engine, vote] : votes) {
    if (!vote) {
      warnings.push_back(engine + " engine inconclusive; excluded from " + what + " agreement");
      continue;
    }
    ++conclusive;
    if (!first) first = vote;
    else if (*first != *vote) ok = false;
  }
  if (conclusive < 2) warnings.push_back(what + " agreement is vacuous: fewer than two conclusive engines");
  return ok;
}

std::optional<bool> bounded_vote(const Verdict& v) {
  if (v.kind == VerdictKind::inconclusive) return std::nullopt;
  return v.kind != VerdictKind::unbounded;
}

std::optional<bool> vanishing_vote(const Verdict& v) {
  if (v.kind == VerdictKind::inconclusive) return std::nullopt;
  return v.kind == VerdictKind::vanishing;
}

}  // namespace

EquivalenceReport check_equivalence(const Subject& subject, double alpha, double beta,
                                    const EquivalenceConfig& config) {
  EquivalenceReport r;
  r.measure = subject.name;
  r.tail_expr = subject.tails.to_string();
  r.moment_expr = subject.moments.to_string();
  r.alpha = alpha;
  r.beta = beta;
  r.s = carleson_exponent(alpha, beta);
  const SpaceIndex a = SpaceIndex::in_open_range(alpha);
  const SpaceIndex b = SpaceIndex::in_open_range(beta);

  r.carleson = classify_carleson(subject.tails, r.s, config.grid_depth);
  r.moments = classify_moments(subject.moments, r.s, config.n_max);
  BoundednessOptions bopts;
  bopts.norm = config.norm;
  bopts.plateau_tol = config.plateau_tol;
  r.norm = classify_boundedness(subject.moments, a, b, config.sizes, bopts);

  const std::vector<std::pair<std::string, std::optional<bool>>> bounded_votes = {
      {"carleson", bounded_vote(r.carleson)},
      {"moments", bounded_vote(r.moments)},
      {"norm", bounded_vote(r.norm)},
  };
  r.bounded_agree = agree(bounded_votes, "boundedness", r.warnings);

  bool consensus_bounded = r.bounded_agree;
  for (const auto& [engine, vote] : bounded_votes)
    if (vote && !*vote) consensus_bounded = false;
  if (!consensus_bounded || r.norm.kind != VerdictKind::bounded) return r;

  r.compactness = classify_compactness(subject.moments, a, b, config.compact_size, config.compact_rows,
                                       config.compact_tol, r.norm, config.norm);
  r.compact_agree = agree(
      {
          {"carleson", vanishing_vote(r.carleson)},
          {"moments", vanishing_vote(r.moments)},
          {"compactness", vanishing_vote(*r.compactness)},
      },
      "compactness", r.warnings);
  return r;
}

}  // namespace cesaro
