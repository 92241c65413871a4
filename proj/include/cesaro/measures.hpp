#pragma once

// Positive finite measures on [0,1) built from point masses and power-law
// densities c (1-t)^γ t^δ dt. Every such measure has closed-form moments
//   μ[n] = Σ mass·t₀ⁿ + Σ c·B(n+δ+1, γ+1)
// and tails μ([t,1)) given by incomplete Beta integrals.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cesaro {

struct Atom {
  double location;  // t₀ ∈ [0,1)
  double mass;      // > 0

  friend bool operator==(const Atom&, const Atom&) = default;
};

struct PowerLaw {
  double c;      // > 0
  double gamma;  // > -1
  double delta;  // >= 0

  friend bool operator==(const PowerLaw&, const PowerLaw&) = default;
};

/// Moment sequence μ[0..N-1].
class MomentSeq {
 public:
  MomentSeq() = default;
  explicit MomentSeq(std::vector<double> values) : values_(std::move(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t n) const { return values_[n]; }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

class Measure {
 public:
  /// Throws DomainError when an atom or density violates the invariants.
  Measure(std::vector<Atom> atoms, std::vector<PowerLaw> densities);

  /// dt on [0,1).
  static Measure lebesgue();

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const std::vector<PowerLaw>& densities() const noexcept { return densities_; }

  double total_mass() const;

  /// μ([t,1)) for t ∈ [0,1).
  double tail(double t) const;

  /// μ([1-w,1)) for a gap w ∈ (0,1]; keeps full precision as t → 1⁻.
  double tail_gap(double w) const;

  double moment(std::size_t n) const;

  /// ln μ[n]; finite even where μ[n] underflows (-inf when μ[n] = 0).
  double log_moment(std::size_t n) const;

  MomentSeq moments(std::size_t count) const;

  /// Expression in the measure grammar; parse(to_string()) == *this.
  std::string to_string() const;

  friend bool operator==(const Measure&, const Measure&) = default;
  friend Measure operator+(const Measure& lhs, const Measure& rhs);

 private:
  std::vector<Atom> atoms_;
  std::vector<PowerLaw> densities_;
};

/// Parses `term ("+" term)*` with
///   term := "atom(" t0 "," mass ")"
///         | "powlaw(c=" c ",gamma=" γ ",delta=" δ ")"
///         | "lebesgue"
/// Whitespace between tokens is ignored. Throws ParseError or SemanticError.
Measure parse_measure(std::string_view expr);

/// n ∫₀¹ t^(n-1) μ([t,1)) dt by composite Gauss–Legendre with `quad_points`
/// nodes on each dyadic panel of 1-t (split at atom locations). n >= 1.
double moment_by_parts(const Measure& m, std::size_t n, std::size_t quad_points = 32);

}  // namespace cesaro
