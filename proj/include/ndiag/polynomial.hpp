#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ndiag/exponent.hpp"
#include "ndiag/rational.hpp"

namespace ndiag {

/// Sparse multivariate polynomial over exact rationals in x1..xn.
///
/// Invariants: every stored coefficient is nonzero and every stored exponent
/// is nonnegative with length `dimension()`. Values are immutable once
/// built; all arithmetic returns new polynomials.
class Polynomial {
public:
  using TermMap = std::map<ExponentVector, Rational>;

  explicit Polynomial(int dimension);
  Polynomial(int dimension, TermMap terms);

  static Polynomial zero(int dimension) { return Polynomial(dimension); }
  static Polynomial constant(int dimension, const Rational& c);
  static Polynomial monomial(const ExponentVector& alpha, const Rational& c);
  /// s = x1 + ... + xn.
  static Polynomial sum_of_variables(int dimension);

  int dimension() const { return dimension_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Max |alpha| over stored terms; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const ExponentVector& alpha) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Polynomial scaled(const Rational& c) const;
  /// p - c x^alpha.
  Polynomial minus_monomial(const ExponentVector& alpha, const Rational& c) const;
  /// Substitute x_{axis} = value; the result keeps the same dimension.
  Polynomial substitute(std::size_t axis, const Rational& value) const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Canonical form: descending lexicographic term order, reduced fractions,
  /// variables named x1..xn. Parses back to the same term map.
  std::string to_string() const;

private:
  int dimension_;
  TermMap terms_;
};

Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);
Polynomial scale(const Rational& c, const Polynomial& p);
Polynomial subtract_monomial(const Polynomial& p, const ExponentVector& alpha, const Rational& c);

/// Parses the polynomial grammar
///   expr   := term (('+'|'-') term)*
///   term   := [coeff] ('*'? factor)*
///   factor := var ('^' uint)?
///   coeff  := int | int '/' uint
///   var    := 'x' uint | 'x' | 'y' | 'z' | 'w'
/// Aliases x,y,z,w name x1..x4 and need dimension >= their index.
/// A leading sign on the first term is accepted.
Polynomial parse_polynomial(std::string_view text, int dimension);

/// Result of dividing p - 1 by s - 1 under lex order with x1 greatest.
struct HyperplaneDivision {
  Polynomial quotient;
  /// Contains no monomial divisible by x1.
  Polynomial remainder;
};

HyperplaneDivision divide_by_hyperplane(const Polynomial& p);

/// q = (p - 1)/(s - 1); throws InputError when p is not 1 on the hyperplane.
Polynomial hyperplane_quotient(const Polynomial& p);

struct HyperplaneMembership {
  bool member = false;
  /// A term with a negative coefficient, when one exists.
  std::optional<std::pair<ExponentVector, Rational>> negative_term;
  /// A rational point with x1+...+xn = 1 where p != 1, when p is not
  /// constant 1 on the hyperplane.
  std::optional<std::vector<Rational>> off_hyperplane_witness;
};

/// Membership in H: nonnegative coefficients and p = 1 on x1+...+xn = 1.
HyperplaneMembership is_in_H(const Polynomial& p);

}  // namespace ndiag
