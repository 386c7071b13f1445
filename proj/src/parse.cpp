#include <cctype>

#include "ndiag/errors.hpp"
#include "ndiag/polynomial.hpp"

namespace ndiag {

namespace {

class PolynomialParser {
public:
  PolynomialParser(std::string_view text, int dimension) : text_(text), dimension_(dimension) {}

  Polynomial parse() {
    Polynomial::TermMap terms;
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    add_term(terms, negative);
    skip_space();
    while (!at_end()) {
      char op = peek();
      if (op != '+' && op != '-') throw ParseError(std::string("unexpected '") + op + "'", pos_);
      ++pos_;
      add_term(terms, op == '-');
      skip_space();
    }
    return Polynomial(dimension_, std::move(terms));
  }

private:
  void add_term(Polynomial::TermMap& terms, bool negative) {
    skip_space();
    Rational coeff(1);
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coefficient();
      have_coeff = true;
    }
    ExponentVector alpha(dimension_);
    bool have_factor = false;
    for (;;) {
      skip_space();
      std::size_t save = pos_;
      if (!at_end() && peek() == '*') {
        if (!have_coeff && !have_factor) throw ParseError("unexpected '*'", pos_);
        ++pos_;
        skip_space();
        if (at_end() || !is_var_start(peek()))
          throw ParseError("expected variable after '*'", pos_);
      }
      if (at_end() || !is_var_start(peek())) {
        pos_ = save;
        break;
      }
      auto [axis, power] = parse_factor();
      alpha[axis] += power;
      have_factor = true;
    }
    if (!have_coeff && !have_factor) throw ParseError("expected term", pos_);
    if (negative) coeff = -coeff;
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms.try_emplace(alpha, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  Rational parse_coefficient() {
    std::size_t start = pos_;
    std::string num = digits();
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected denominator", pos_);
      std::string den = digits();
      if (den.find_first_not_of('0') == std::string::npos)
        throw ParseError("zero denominator", start);
      return Rational::parse(num + "/" + den);
    }
    return Rational::parse(num);
  }

  std::pair<int, int> parse_factor() {
    std::size_t start = pos_;
    char c = peek();
    ++pos_;
    int index = 0;
    if (c == 'x' && !at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      index = small_int();
    } else {
      static constexpr std::string_view aliases = "xyzw";
      index = static_cast<int>(aliases.find(c)) + 1;
      if (dimension_ > 4)
        throw ParseError(std::string("alias '") + c + "' is only available for dimension <= 4", start);
    }
    if (index < 1 || index > dimension_)
      throw ParseError("variable index " + std::to_string(index) + " out of range for dimension " +
                           std::to_string(dimension_),
                       start);
    int power = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected exponent after '^'", pos_);
      power = small_int();
    }
    return {index - 1, power};
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // Variable indices and exponents.
  int small_int() {
    std::size_t start = pos_;
    std::string d = digits();
    if (d.size() > 6) throw ParseError("integer too large", start);
    return std::stoi(d);
  }

  static bool is_var_start(char c) { return c == 'x' || c == 'y' || c == 'z' || c == 'w'; }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  int dimension_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, int dimension) {
  if (dimension < 1) throw InputError("dimension must be >= 1");
  return PolynomialParser(text, dimension).parse();
}

}  // namespace ndiag
