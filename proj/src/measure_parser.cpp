// Recursive-descent parser for measure expressions.

#include <cctype>
#include <charconv>
#include <string>
#include <string_view>
#include <system_error>

#include "cesaro/error.hpp"
#include "cesaro/measures.hpp"

namespace cesaro {
namespace {

struct Number {
  double value;
  std::string text;
  std::size_t position;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Measure parse() {
    std::vector<Atom> atoms;
    std::vector<PowerLaw> densities;
    term(atoms, densities);
    skip_ws();
    while (pos_ < src_.size() && src_[pos_] == '+') {
      ++pos_;
      term(atoms, densities);
      skip_ws();
    }
    if (pos_ != src_.size()) fail("expected '+' or end of expression");
    return Measure(std::move(atoms), std::move(densities));
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  bool accept_word(std::string_view word) {
    skip_ws();
    if (src_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view word) {
    if (!accept_word(word)) fail("expected '" + std::string(word) + "'");
  }

  Number number() {
    skip_ws();
    const std::size_t start = pos_;
    std::size_t p = pos_;
    if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
    const std::size_t int_start = p;
    while (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) ++p;
    std::size_t digits = p - int_start;
    if (p < src_.size() && src_[p] == '.') {
      ++p;
      const std::size_t frac_start = p;
      while (p < src_.size() && std::isdigit(static_cast<unsigned char>(src_[p]))) ++p;
      digits += p - frac_start;
    }
    if (digits == 0) fail("expected a decimal literal");
    std::string text(src_.substr(start, p - start));
    const char* first = text.data();
    if (*first == '+') ++first;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) fail("malformed decimal literal");
    pos_ = p;
    return Number{value, std::move(text), start};
  }

  void term(std::vector<Atom>& atoms, std::vector<PowerLaw>& densities) {
    skip_ws();
    if (accept_word("atom")) {
      expect("(");
      const Number t0 = number();
      expect(",");
      const Number mass = number();
      expect(")");
      if (!(t0.value >= 0.0 && t0.value < 1.0))
        throw SemanticError("atom location must lie in [0,1)", t0.text, t0.position);
      if (!(mass.value > 0.0)) throw SemanticError("atom mass must be positive", mass.text, mass.position);
      atoms.push_back(Atom{t0.value, mass.value});
    } else if (accept_word("powlaw")) {
      expect("(");
      expect("c");
      expect("=");
      const Number c = number();
      expect(",");
      expect("gamma");
      expect("=");
      const Number gamma = number();
      expect(",");
      expect("delta");
      expect("=");
      const Number delta = number();
      expect(")");
      if (!(c.value > 0.0)) throw SemanticError("density coefficient c must be positive", c.text, c.position);
      if (!(gamma.value > -1.0))
        throw SemanticError("gamma must exceed -1 for a finite measure", gamma.text, gamma.position);
      if (!(delta.value >= 0.0))
        throw SemanticError("delta must be nonnegative", delta.text, delta.position);
      densities.push_back(PowerLaw{c.value, gamma.value, delta.value});
    } else if (accept_word("lebesgue")) {
      densities.push_back(PowerLaw{1.0, 0.0, 0.0});
    } else {
      fail("expected 'atom(', 'powlaw(' or 'lebesgue'");
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Measure parse_measure(std::string_view expr) { return Parser(expr).parse(); }

}  // namespace cesaro
