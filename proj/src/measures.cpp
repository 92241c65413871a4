#include "cesaro/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cesaro/csv.hpp"
#include "cesaro/error.hpp"
#include "cesaro/quadrature.hpp"
#include "cesaro/specfun.hpp"

namespace cesaro {
namespace {

constexpr int kMaxSeriesTerms = 4000;
constexpr int kDyadicPanels = 64;

// Σ_k binom(p,k) (-x)^k / (q + k) for 0 <= x <= 1/2, q > 0.
double binomial_series(double p, double q, double x) {
  double coef = 1.0;
  double xk = 1.0;
  double sum = 1.0 / q;
  for (int k = 1; k < kMaxSeriesTerms; ++k) {
    coef *= (k - 1 - p) / k;
    if (coef == 0.0) break;  // p is a nonnegative integer
    xk *= x;
    const double term = coef * xk / (q + k);
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// c ∫_{1-w}^{1} (1-u)^γ u^δ du, given both u = 1-w and w.
double density_tail(const PowerLaw& d, double u, double w) {
  if (w <= 0.0) return 0.0;
  const double a = d.gamma + 1.0;
  if (d.delta == 0.0) return d.c * std::pow(w, a) / a;
  if (w <= 0.5) {
    // substitute x = 1-u: ∫₀^w x^γ (1-x)^δ dx
    return d.c * std::pow(w, a) * binomial_series(d.delta, a, w);
  }
  // complement of ∫₀^u y^δ (1-y)^γ dy
  const double total = beta(d.delta + 1.0, a);
  if (u <= 0.0) return d.c * total;
  const double head = std::pow(u, d.delta + 1.0) * binomial_series(d.gamma, d.delta + 1.0, u);
  return d.c * std::max(0.0, total - head);
}

void validate(const Atom& a) {
  if (!(a.location >= 0.0 && a.location < 1.0))
    throw DomainError("atom location must lie in [0,1)");
  if (!(a.mass > 0.0) || !std::isfinite(a.mass)) throw DomainError("atom mass must be positive");
}

void validate(const PowerLaw& d) {
  if (!(d.c > 0.0) || !std::isfinite(d.c)) throw DomainError("density coefficient c must be positive");
  if (!(d.gamma > -1.0) || !std::isfinite(d.gamma))
    throw DomainError("density exponent gamma must exceed -1");
  if (!(d.delta >= 0.0) || !std::isfinite(d.delta))
    throw DomainError("density exponent delta must be nonnegative");
}

}  // namespace

Measure::Measure(std::vector<Atom> atoms, std::vector<PowerLaw> densities)
    : atoms_(std::move(atoms)), densities_(std::move(densities)) {
  for (const auto& a : atoms_) validate(a);
  for (const auto& d : densities_) validate(d);
}

Measure Measure::lebesgue() { return Measure({}, {PowerLaw{1.0, 0.0, 0.0}}); }

double Measure::total_mass() const {
  double sum = 0.0;
  for (const auto& a : atoms_) sum += a.mass;
  for (const auto& d : densities_) sum += d.c * beta(d.delta + 1.0, d.gamma + 1.0);
  return sum;
}

double Measure::tail(double t) const {
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("tail: t must lie in [0,1)");
  double sum = 0.0;
  for (const auto& a : atoms_)
    if (a.location >= t) sum += a.mass;
  const double w = 1.0 - t;
  for (const auto& d : densities_) sum += density_tail(d, t, w);
  return sum;
}

double Measure::tail_gap(double w) const {
  if (!(w > 0.0 && w <= 1.0)) throw DomainError("tail_gap: gap must lie in (0,1]");
  double sum = 0.0;
  for (const auto& a : atoms_)
    if (1.0 - a.location <= w) sum += a.mass;
  const double u = 1.0 - w;
  for (const auto& d : densities_) sum += density_tail(d, u, w);
  return sum;
}

double Measure::moment(std::size_t n) const {
  const double nd = static_cast<double>(n);
  double sum = 0.0;
  for (const auto& a : atoms_) sum += a.mass * std::pow(a.location, nd);
  for (const auto& d : densities_) sum += d.c * std::exp(log_beta(nd + d.delta + 1.0, d.gamma + 1.0));
  return sum;
}

double Measure::log_moment(std::size_t n) const {
  const double nd = static_cast<double>(n);
  std::vector<double> logs;
  logs.reserve(atoms_.size() + densities_.size());
  for (const auto& a : atoms_) {
    if (a.location == 0.0) {
      if (n == 0) logs.push_back(std::log(a.mass));
    } else {
      logs.push_back(std::log(a.mass) + nd * std::log(a.location));
    }
  }
  for (const auto& d : densities_)
    logs.push_back(std::log(d.c) + log_beta(nd + d.delta + 1.0, d.gamma + 1.0));
  if (logs.empty()) return -std::numeric_limits<double>::infinity();
  const double peak = *std::max_element(logs.begin(), logs.end());
  double sum = 0.0;
  for (double l : logs) sum += std::exp(l - peak);
  return peak + std::log(sum);
}

MomentSeq Measure::moments(std::size_t count) const {
  std::vector<double> values(count);
  for (std::size_t n = 0; n < count; ++n) values[n] = moment(n);
  return MomentSeq(std::move(values));
}

std::string Measure::to_string() const {
  std::string out;
  auto sep = [&out] {
    if (!out.empty()) out += " + ";
  };
  for (const auto& a : atoms_) {
    sep();
    out += "atom(" + format_decimal(a.location) + "," + format_decimal(a.mass) + ")";
  }
  for (const auto& d : densities_) {
    sep();
    out += "powlaw(c=" + format_decimal(d.c) + ",gamma=" + format_decimal(d.gamma) +
           ",delta=" + format_decimal(d.delta) + ")";
  }
  return out;
}

Measure operator+(const Measure& lhs, const Measure& rhs) {
  auto atoms = lhs.atoms_;
  atoms.insert(atoms.end(), rhs.atoms_.begin(), rhs.atoms_.end());
  auto densities = lhs.densities_;
  densities.insert(densities.end(), rhs.densities_.begin(), rhs.densities_.end());
  return Measure(std::move(atoms), std::move(densities));
}

double moment_by_parts(const Measure& m, std::size_t n, std::size_t quad_points) {
  if (n == 0) throw DomainError("moment_by_parts: the parts identity needs n >= 1");
  const GaussLegendre rule(quad_points);

  // panels in the gap variable w = 1 - t ∈ (0, 1]
  std::vector<double> breaks;
  breaks.reserve(kDyadicPanels + m.atoms().size() + 1);
  for (int j = 0; j <= kDyadicPanels; ++j) breaks.push_back(std::ldexp(1.0, -j));
  for (const auto& a : m.atoms()) {
    const double w = 1.0 - a.location;
    if (w > std::ldexp(1.0, -kDyadicPanels)) breaks.push_back(w);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  const double nd = static_cast<double>(n);
  auto integrand = [&](double w) {
    // n t^(n-1) with t = 1 - w
    const double weight = nd * std::exp((nd - 1.0) * std::log1p(-w));
    return weight * m.tail_gap(w);
  };

  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) sum += rule.integrate(integrand, breaks[i], breaks[i + 1]);
  return sum;
}

}  // namespace cesaro
