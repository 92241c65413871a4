#include <random>
#include <string>

#include <doctest.h>

#include "cesaro/error.hpp"
#include "cesaro/measures.hpp"

using namespace cesaro;

TEST_SUITE("parser") {
  TEST_CASE("grammar examples") {
    CHECK(parse_measure("lebesgue") == Measure({}, {{1.0, 0.0, 0.0}}));
    CHECK(parse_measure("atom(0.5,1.0)") == Measure({{0.5, 1.0}}, {}));
    CHECK(parse_measure("powlaw(c=2,gamma=-0.5,delta=1.25)") == Measure({}, {{2.0, -0.5, 1.25}}));
    CHECK(parse_measure("  atom( 0.25 , 3 ) +\tlebesgue + powlaw( c = 1 , gamma = 0 , delta = 0 ) ") ==
          Measure({{0.25, 3.0}}, {{1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}}));
    CHECK(parse_measure("atom(.5,+1.)") == Measure({{0.5, 1.0}}, {}));
  }

  TEST_CASE("semantic errors name the offending token") {
    auto semantic = [](const char* expr, const std::string& token, std::size_t position) {
      CAPTURE(expr);
      try {
        (void)parse_measure(expr);
        FAIL("expected a semantic error");
      } catch (const SemanticError& e) {
        CHECK(e.token() == token);
        CHECK(e.position() == position);
      }
    };
    semantic("atom(1.0,1.0)", "1.0", 5);
    semantic("atom(0.5,0)", "0", 9);
    semantic("atom(-0.1,1)", "-0.1", 5);
    semantic("powlaw(c=0,gamma=0,delta=0)", "0", 9);
    semantic("powlaw(c=1,gamma=-1,delta=0)", "-1", 17);
    semantic("powlaw(c=1,gamma=0,delta=-0.5)", "-0.5", 25);
    semantic("lebesgue + atom(2,1)", "2", 16);
  }

  TEST_CASE("syntax errors report a position") {
    auto syntax = [](const char* expr, std::size_t position) {
      CAPTURE(expr);
      try {
        (void)parse_measure(expr);
        FAIL("expected a syntax error");
      } catch (const ParseError& e) {
        CHECK(e.position() == position);
      }
    };
    syntax("", 0);
    syntax("dirac(0.5)", 0);
    syntax("atom(0.5 1)", 9);
    syntax("atom(0.5,1", 10);
    syntax("atom(1e-3,1)", 6);
    syntax("lebesgue +", 10);
    syntax("lebesgue lebesgue", 9);
    syntax("powlaw(gamma=0,c=1,delta=0)", 7);
    syntax("atom(.,1)", 5);
  }

  TEST_CASE("pretty-print round trip") {
    std::mt19937_64 rng(20261015);
    std::uniform_real_distribution<double> loc(0.0, 1.0);
    std::uniform_real_distribution<double> pos(1e-3, 10.0);
    std::uniform_real_distribution<double> gam(-0.999, 5.0);
    std::uniform_int_distribution<int> count(0, 3);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<Atom> atoms;
      std::vector<PowerLaw> dens;
      const int na = count(rng);
      const int nd = na == 0 ? 1 + count(rng) : count(rng);
      for (int i = 0; i < na; ++i) atoms.push_back({loc(rng), pos(rng)});
      for (int i = 0; i < nd; ++i) dens.push_back({pos(rng), gam(rng), pos(rng) - 1e-3});
      const Measure m(atoms, dens);
      const std::string text = m.to_string();
      CAPTURE(text);
      CHECK(parse_measure(text) == m);
      CHECK(parse_measure(parse_measure(text).to_string()) == m);
    }
  }
}
