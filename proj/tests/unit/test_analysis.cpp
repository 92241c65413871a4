#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <doctest.h>

#include "cesaro/analysis.hpp"
#include "cesaro/error.hpp"
#include "cesaro/specfun.hpp"

using namespace cesaro;

namespace {

const std::vector<std::size_t> kSizes = {64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384};
const std::vector<std::size_t> kRows = {64, 128, 256, 512, 1024};

Measure powlaw(double c, double gamma, double delta) { return Measure({}, {{c, gamma, delta}}); }

}  // namespace

TEST_SUITE("analysis") {
  TEST_CASE("carleson exponent") {
    CHECK(carleson_exponent(0.7, 0.7) == 1.0);
    CHECK(carleson_exponent(1.5, 0.5) == 1.5);
    CHECK(carleson_exponent(0.5, 1.5) == 0.5);
    for (double a = 0.1; a < 2.0; a += 0.3)
      for (double b = 0.1; b < 2.0; b += 0.3) CHECK(carleson_exponent(a, b) + carleson_exponent(b, a) == doctest::Approx(2.0));
    CHECK_THROWS_AS(carleson_exponent(2.5, 1.0), DomainError);
    CHECK_THROWS_AS(carleson_exponent(1.0, 0.0), DomainError);
  }

  TEST_CASE("tri-state slope rule") {
    CHECK(classify_slope(0.0, 0.0) == VerdictKind::bounded);
    CHECK(classify_slope(0.5, 0.0) == VerdictKind::unbounded);
    CHECK(classify_slope(-0.5, 0.0) == VerdictKind::vanishing);
    CHECK(classify_slope(kDeadband, 0.0) == VerdictKind::unbounded);
    CHECK(classify_slope(-kDeadband, 0.0) == VerdictKind::vanishing);
    CHECK(classify_slope(kDeadband * 0.99, 0.01 * kDeadband) == VerdictKind::bounded);
    CHECK(classify_slope(kDeadband * 0.99, 0.05 * kDeadband) == VerdictKind::inconclusive);
    CHECK(classify_slope(std::nan(""), 0.0) == VerdictKind::inconclusive);
    CHECK(verdict_label(Engine::carleson, VerdictKind::unbounded) == "not_carleson");
    CHECK(verdict_label(Engine::compactness, VerdictKind::bounded) == "not_compact");
    CHECK(verdict_label(Engine::norm, VerdictKind::inconclusive) == "inconclusive");
  }

  TEST_CASE("carleson engine examples") {
    const Verdict leb = classify_carleson(Measure::lebesgue(), 1.0, 30);
    CHECK(leb.label() == "bounded_carleson");
    REQUIRE(leb.evidence.size() == 30);
    for (const auto& e : leb.evidence) CHECK(e.ratio == doctest::Approx(1.0).epsilon(1e-12));

    const Verdict grow = classify_carleson(Measure::lebesgue(), 1.25, 30);
    CHECK(grow.label() == "not_carleson");
    CHECK(grow.evidence[19].ratio == doctest::Approx(std::pow(2.0, 20.0 / 4.0)).epsilon(1e-10));
    CHECK(grow.fitted_slope == doctest::Approx(0.25 * std::log(2.0)).epsilon(1e-9));

    for (double s : {0.5, 1.0, 1.5}) {
      const double sp = s + 0.25;
      const Verdict v = classify_carleson(powlaw(sp, sp - 1.0, 0.0), s, 30);
      CAPTURE(s);
      CHECK(v.label() == "vanishing_carleson");
      for (std::size_t j = 0; j < v.evidence.size(); ++j)
        CHECK(v.evidence[j].ratio == doctest::Approx(std::pow(2.0, -0.25 * (j + 1.0))).epsilon(1e-10));
    }

    const Verdict atom = classify_carleson(parse_measure("atom(0.5,1)"), 1.0, 30);
    CHECK(atom.label() == "vanishing_carleson");
    CHECK(std::isinf(atom.fitted_slope));
    CHECK_THROWS_AS(classify_carleson(Measure::lebesgue(), 1.0, 7), DomainError);
    CHECK_THROWS_AS(classify_carleson(Measure::lebesgue(), 0.0, 30), DomainError);
  }

  TEST_CASE("moment engine examples") {
    const Verdict leb = classify_moments(Measure::lebesgue(), 1.0);
    CHECK(leb.label() == "bounded");
    for (const auto& e : leb.evidence) CHECK(e.ratio == doctest::Approx(1.0).epsilon(1e-12));

    for (double s : {0.3, 1.0, 1.9}) CHECK(classify_moments(parse_measure("atom(0.5,1)"), s).label() == "vanishing");

    for (double s : {0.5, 0.8, 1.0, 1.2, 1.5}) {
      CAPTURE(s);
      const Measure m = powlaw(1.0, s - 1.0, 0.0);
      CHECK(classify_moments(m, s).label() == "bounded");
      const double q = m.moment(100000) * std::pow(100001.0, s);
      CHECK(std::abs(q / std::exp(log_gamma(s)) - 1.0) < 0.01);
    }
    CHECK(classify_moments(Measure::lebesgue(), 1.25).label() == "unbounded");
    CHECK_THROWS_AS(classify_moments(Measure::lebesgue(), 1.0, 32), DomainError);
  }

  TEST_CASE("norm engine examples") {
    const Verdict leb = classify_boundedness(Measure::lebesgue(), SpaceIndex(1.0), SpaceIndex(1.0), kSizes);
    CHECK(leb.label() == "bounded");
    for (const auto& e : leb.evidence) CHECK(e.ratio <= std::sqrt(6.0));

    CHECK(classify_boundedness(Measure::lebesgue(), SpaceIndex(1.5), SpaceIndex(0.5), kSizes).label() ==
          "unbounded");
    CHECK(classify_boundedness(parse_measure("atom(0.5,1)"), SpaceIndex(1.0), SpaceIndex(1.0), kSizes).label() ==
          "bounded");

    const std::vector<std::size_t> two = {64, 128};
    CHECK_THROWS_AS(classify_boundedness(Measure::lebesgue(), SpaceIndex(1.0), SpaceIndex(1.0), two), DomainError);
  }

  TEST_CASE("compactness engine examples") {
    const SpaceIndex one(1.0);
    const std::vector<std::size_t> atom_rows = {16, 32, 64, 128, 256, 512};
    const Verdict atom_bounded = classify_boundedness(parse_measure("atom(0.5,1)"), one, one, kSizes);
    const Verdict atom = classify_compactness(parse_measure("atom(0.5,1)"), one, one, 2048, atom_rows, 1e-6,
                                              atom_bounded);
    CHECK(atom.label() == "compact");
    CHECK(atom.evidence.back().ratio < 1e-6);
    for (std::size_t i = 1; i < atom.evidence.size(); ++i) CHECK(atom.evidence[i].ratio < atom.evidence[i - 1].ratio);

    const Verdict leb_bounded = classify_boundedness(Measure::lebesgue(), one, one, kSizes);
    const Verdict leb = classify_compactness(Measure::lebesgue(), one, one, 65536, kRows, 1e-6, leb_bounded);
    CHECK(leb.label() == "not_compact");

    for (const auto& [a, b] : std::vector<std::pair<double, double>>{{1.0, 1.0}, {1.2, 0.8}, {0.8, 1.2}}) {
      const double s = carleson_exponent(a, b);
      const Measure m = powlaw(1.0, s - 1.0 + 0.25, 0.0);
      const Verdict bounded = classify_boundedness(m, SpaceIndex(a), SpaceIndex(b), kSizes);
      REQUIRE(bounded.kind == VerdictKind::bounded);
      CAPTURE(s);
      CHECK(classify_compactness(m, SpaceIndex(a), SpaceIndex(b), 65536, kRows, 1e-6, bounded).label() == "compact");
    }

    const Verdict unbounded = classify_boundedness(Measure::lebesgue(), SpaceIndex(1.5), SpaceIndex(0.5), kSizes);
    CHECK_THROWS_AS(classify_compactness(Measure::lebesgue(), SpaceIndex(1.5), SpaceIndex(0.5), 2048, atom_rows, 1e-6,
                                         unbounded),
                    std::logic_error);
    const std::vector<std::size_t> bad = {16, 2048};
    CHECK_THROWS_AS(classify_compactness(Measure::lebesgue(), one, one, 2048, bad, 1e-6, leb_bounded), DomainError);
  }

  TEST_CASE("equivalence for lebesgue at alpha = beta") {
    for (double a : {0.5, 1.0, 1.5}) {
      const auto r = check_equivalence(Subject::of("lebesgue", Measure::lebesgue()), a, a);
      CAPTURE(a);
      CHECK(r.carleson.label() == "bounded_carleson");
      CHECK(r.moments.label() == "bounded");
      CHECK(r.norm.label() == "bounded");
      REQUIRE(r.compactness);
      CHECK(r.compactness->label() == "not_compact");
      CHECK(r.bounded_agree);
      CHECK(r.compact_agree == true);
      CHECK_FALSE(r.falsified());
    }
  }

  TEST_CASE("equivalence for atoms") {
    for (const char* expr : {"atom(0.5,1)", "atom(0.9,1)"}) {
      const auto r = check_equivalence(Subject::of(expr, parse_measure(expr)), 1.2, 0.8);
      CAPTURE(expr);
      CHECK(r.norm.label() == "bounded");
      REQUIRE(r.compactness);
      CHECK(r.compactness->label() == "compact");
      CHECK_FALSE(r.falsified());
    }
  }

  TEST_CASE("unbounded subjects skip the compactness engines") {
    const auto r = check_equivalence(Subject::of("lebesgue", Measure::lebesgue()), 1.5, 0.5);
    CHECK(r.norm.label() == "unbounded");
    CHECK_FALSE(r.compactness);
    CHECK_FALSE(r.compact_agree);
    CHECK_FALSE(r.falsified());
  }

  TEST_CASE("mismatched tails and moments are reported as a falsification") {
    // tails of a critical measure, moments of a measure that is not Carleson
    const Subject fake{"fake", powlaw(1.0, 0.0, 0.0), powlaw(1.0, -0.5, 0.0)};
    const auto r = check_equivalence(fake, 1.0, 1.0);
    CHECK_FALSE(r.bounded_agree);
    CHECK(r.falsified());
  }
}
