#include "cesaro/spaces.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "cesaro/csv.hpp"
#include "cesaro/error.hpp"

namespace cesaro {
namespace {

void require_geometric_base(double b) {
  if (!(b > 0.0 && b < 1.0)) throw DomainError("b must lie in (0,1)");
}

}  // namespace

SpaceIndex::SpaceIndex(double alpha) : alpha_(alpha) {
  if (!std::isfinite(alpha)) throw DomainError("space index must be finite");
}

SpaceIndex SpaceIndex::in_open_range(double alpha) {
  SpaceIndex s(alpha);
  if (!s.in_open_range())
    throw DomainError("space index must lie in (0,2), got " + format_number(alpha));
  return s;
}

double SpaceIndex::weight(std::size_t n) const {
  return std::pow(static_cast<double>(n) + 1.0, 1.0 - alpha_);
}

CoeffVec::CoeffVec(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("coefficient vector must be nonempty");
  for (double a : coeffs_)
    if (!std::isfinite(a)) throw DomainError("coefficients must be finite");
}

double norm(const CoeffVec& f, SpaceIndex space) {
  double sum = 0.0;
  for (std::size_t n = 0; n < f.size(); ++n) sum += space.weight(n) * f[n] * f[n];
  return std::sqrt(sum);
}

CoeffVec counterexample_family(SpaceIndex alpha, double eps, std::size_t length) {
  const double a = alpha.alpha();
  if (!alpha.in_open_range()) throw DomainError("counterexample family needs 0 < alpha < 2");
  if (!(eps > 0.0 && eps < a)) throw DomainError("counterexample family needs 0 < eps < alpha");
  if (length == 0) throw DomainError("length must be positive");
  const double scale = std::sqrt(eps / (1.0 + eps));
  const double exponent = -(2.0 - a + eps) / 2.0;
  std::vector<double> coeffs(length);
  for (std::size_t n = 0; n < length; ++n)
    coeffs[n] = scale * std::pow(static_cast<double>(n) + 1.0, exponent);
  return CoeffVec(std::move(coeffs));
}

CoeffVec truncated_geometric_family(SpaceIndex alpha, double b, std::size_t last_index) {
  require_geometric_base(b);
  std::vector<double> powers(last_index + 1);
  double omega = 0.0;
  for (std::size_t k = 0; k <= last_index; ++k) {
    powers[k] = std::pow(b, static_cast<double>(k) + 1.0);
    omega += alpha.weight(k) * powers[k] * powers[k];
  }
  const double scale = 1.0 / std::sqrt(omega);
  for (double& p : powers) p *= scale;
  return CoeffVec(std::move(powers));
}

CoeffVec weak_null_family(SpaceIndex alpha, double b, std::size_t length) {
  require_geometric_base(b);
  if (length == 0) throw DomainError("length must be positive");
  const double scale = std::pow((1.0 - b) * (1.0 + b), (2.0 - alpha.alpha()) / 2.0);
  std::vector<double> coeffs(length);
  for (std::size_t n = 0; n < length; ++n)
    coeffs[n] = scale * std::pow(b, static_cast<double>(n) + 1.0);
  return CoeffVec(std::move(coeffs));
}

CoeffVec weak_null_family(SpaceIndex alpha, double b) {
  require_geometric_base(b);
  return weak_null_family(alpha, b, weak_null_length(b));
}

std::size_t weak_null_length(double b) {
  require_geometric_base(b);
  return static_cast<std::size_t>(std::ceil(20.0 / (1.0 - b)));
}

void write_csv(std::ostream& out, const CoeffVec& f) {
  write_csv_row(out, {"index", "value"});
  for (std::size_t n = 0; n < f.size(); ++n) write_csv_row(out, {std::to_string(n), format_number(f[n])});
}

}  // namespace cesaro
