#include "cesaro/operators.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include <Eigen/SVD>

#include "cesaro/csv.hpp"
#include "cesaro/error.hpp"
#include "cesaro/parallel.hpp"

namespace cesaro {

SectionOp::SectionOp(const Measure& measure, SpaceIndex alpha, SpaceIndex beta, std::size_t size)
    : measure_(measure), alpha_(alpha), beta_(beta) {
  if (size == 0) throw DomainError("section size must be at least 1");
  moments_ = measure.moments(size);
  last_row_ = size - 1;
  row_scale_.resize(size);
  column_scale_.resize(size);
  const double row_exp = (1.0 - beta.alpha()) / 2.0;
  const double col_exp = -(1.0 - alpha.alpha()) / 2.0;
  for (std::size_t n = 0; n < size; ++n) {
    const double np1 = static_cast<double>(n) + 1.0;
    row_scale_[n] = std::pow(np1, row_exp) * moments_[n];
    column_scale_[n] = std::pow(np1, col_exp);
  }
}

void SectionOp::restrict_rows(std::size_t first, std::size_t last) {
  first_row_ = std::max(first_row_, first);
  last_row_ = std::min(last_row_, last);
  for (std::size_t n = 0; n < row_scale_.size(); ++n)
    if (n < first_row_ || n > last_row_) row_scale_[n] = 0.0;
}

SectionOp truncate(const SectionOp& op, std::size_t last_kept) {
  if (last_kept >= op.size()) throw std::out_of_range("truncate: row index must be below the section size");
  SectionOp out = op;
  out.restrict_rows(0, last_kept);
  return out;
}

SectionOp tail_part(const SectionOp& op, std::size_t last_dropped) {
  if (last_dropped >= op.size()) throw std::out_of_range("tail_part: row index must be below the section size");
  SectionOp out = op;
  out.restrict_rows(last_dropped + 1, op.size() - 1);
  return out;
}

CoeffVec apply(const SectionOp& op, const CoeffVec& f) {
  if (f.size() > op.size()) throw std::length_error("apply: coefficient vector is longer than the section");
  std::vector<double> out(op.size(), 0.0);
  double prefix = 0.0;
  for (std::size_t n = 0; n < op.size(); ++n) {
    if (n < f.size()) prefix += f[n];
    if (n >= op.first_row() && n <= op.last_row()) out[n] = op.moments()[n] * prefix;
  }
  return CoeffVec(std::move(out));
}

Eigen::MatrixXd weighted_matrix(const SectionOp& op) {
  const auto n = static_cast<Eigen::Index>(op.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k <= i; ++k)
      a(i, k) = op.row_scale(static_cast<std::size_t>(i)) * op.column_scale(static_cast<std::size_t>(k));
  return a;
}

std::string to_string(NormMethod m) {
  return m == NormMethod::dense_svd ? "dense_svd" : "power_iteration";
}

namespace {

OpNormEstimate dense_norm(const SectionOp& op) {
  OpNormEstimate est;
  est.method = NormMethod::dense_svd;
  if (op.is_zero()) return est;
  Eigen::BDCSVD<Eigen::MatrixXd> svd(weighted_matrix(op));
  est.value = svd.singularValues()(0);
  return est;
}

OpNormEstimate power_norm(const SectionOp& op, const NormOptions& options) {
  OpNormEstimate est;
  est.method = NormMethod::power_iteration;
  if (op.is_zero()) return est;

  // rows and columns past last_row never contribute
  const std::size_t n = op.last_row() + 1;
  // normalized row scales keep tiny moments (down to subnormals) out of
  // underflow in Σy² and off the slow denormal path
  double scale = 0.0;
  for (std::size_t i = op.first_row(); i < n; ++i) scale = std::max(scale, std::abs(op.row_scale(i)));
  if (scale == 0.0) return est;
  std::vector<double> row(n);
  for (std::size_t i = 0; i < n; ++i) row[i] = op.row_scale(i) / scale;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  double lambda_prev = 0.0;
  est.converged = false;
  for (int it = 1; it <= options.max_iter; ++it) {
    double prefix = 0.0;
    double lambda = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      prefix += op.column_scale(i) * x[i];
      y[i] = row[i] * prefix;
      lambda += y[i] * y[i];
    }
    est.iterations = it;
    if (lambda == 0.0) {
      est.value = 0.0;
      est.residual = 0.0;
      est.converged = true;
      return est;
    }
    est.value = scale * std::sqrt(lambda);
    est.residual = std::abs(lambda - lambda_prev) / lambda;
    if (est.residual < options.tol) {
      est.converged = true;
      return est;
    }
    lambda_prev = lambda;

    double suffix = 0.0;
    double zz = 0.0;
    for (std::size_t k = n; k-- > 0;) {
      suffix += row[k] * y[k];
      x[k] = op.column_scale(k) * suffix;
      zz += x[k] * x[k];
    }
    const double inv = 1.0 / std::sqrt(zz);
    for (double& v : x) v *= inv;
  }
  return est;
}

}  // namespace

OpNormEstimate section_norm(const SectionOp& op, const NormOptions& options) {
  if (!(options.tol > 0.0)) throw DomainError("section_norm: tol must be positive");
  if (options.max_iter < 1) throw DomainError("section_norm: max_iter must be positive");
  bool dense = false;
  switch (options.method) {
    case MethodChoice::automatic: dense = op.size() <= options.dense_limit; break;
    case MethodChoice::dense_svd: dense = true; break;
    case MethodChoice::power_iteration: dense = false; break;
  }
  return dense ? dense_norm(op) : power_norm(op, options);
}

std::vector<ProfileEntry> norm_growth_profile(const Measure& measure, SpaceIndex alpha,
                                              SpaceIndex beta, std::span<const std::size_t> sizes,
                                              const NormOptions& options, unsigned threads) {
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0) throw DomainError("profile sizes must be positive");
    if (i > 0 && sizes[i] <= sizes[i - 1]) throw DomainError("profile sizes must be strictly increasing");
  }
  std::vector<ProfileEntry> profile(sizes.size());
  parallel_for(sizes.size(), threads, [&](std::size_t i) {
    profile[i] = ProfileEntry{sizes[i], section_norm(SectionOp(measure, alpha, beta, sizes[i]), options)};
  });
  return profile;
}

void write_profile_csv(std::ostream& out, std::span<const ProfileEntry> profile) {
  write_csv_row(out, {"N", "norm", "method", "iterations", "residual"});
  for (const auto& e : profile) {
    write_csv_row(out, {std::to_string(e.size), format_number(e.estimate.value), to_string(e.estimate.method),
                        std::to_string(e.estimate.iterations), format_number(e.estimate.residual)});
  }
}

}  // namespace cesaro
