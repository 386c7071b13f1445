#include "ndiag/polynomial.hpp"

#include <algorithm>

#include "ndiag/errors.hpp"

namespace ndiag {

namespace {

void require_same_dimension(const Polynomial& a, const Polynomial& b) {
  if (a.dimension() != b.dimension())
    throw InputError("dimension mismatch: " + std::to_string(a.dimension()) + " vs " +
                     std::to_string(b.dimension()));
}

void accumulate(Polynomial::TermMap& terms, const ExponentVector& alpha, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(alpha, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

}  // namespace

Polynomial::Polynomial(int dimension) : dimension_(dimension) {
  if (dimension < 1) throw InputError("polynomial dimension must be >= 1");
}

Polynomial::Polynomial(int dimension, TermMap terms) : Polynomial(dimension) {
  for (auto& [alpha, c] : terms) {
    if (alpha.size() != static_cast<std::size_t>(dimension))
      throw InputError("exponent " + alpha.to_string() + " has wrong length for dimension " +
                       std::to_string(dimension));
    if (!alpha.is_nonnegative())
      throw InputError("negative exponent " + alpha.to_string() + " in polynomial");
    if (!c.is_zero()) terms_.emplace(alpha, c);
  }
}

Polynomial Polynomial::constant(int dimension, const Rational& c) {
  Polynomial p(dimension);
  if (!c.is_zero()) p.terms_.emplace(ExponentVector(dimension), c);
  return p;
}

Polynomial Polynomial::monomial(const ExponentVector& alpha, const Rational& c) {
  return Polynomial(static_cast<int>(alpha.size()), TermMap{{alpha, c}});
}

Polynomial Polynomial::sum_of_variables(int dimension) {
  Polynomial p(dimension);
  for (int j = 0; j < dimension; ++j) p.terms_.emplace(ExponentVector::unit(dimension, j), Rational(1));
  return p;
}

std::optional<int> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = 0;
  for (const auto& [alpha, c] : terms_) d = std::max(d, alpha.total());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.total();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.total() == d; });
}

Rational Polynomial::coefficient(const ExponentVector& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_same_dimension(a, b);
  Polynomial r = a;
  for (const auto& [alpha, c] : b.terms_) accumulate(r.terms_, alpha, c);
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  require_same_dimension(a, b);
  Polynomial r = a;
  for (const auto& [alpha, c] : b.terms_) accumulate(r.terms_, alpha, -c);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_dimension(a, b);
  Polynomial r(a.dimension_);
  for (const auto& [alpha, c] : a.terms_)
    for (const auto& [beta, e] : b.terms_) accumulate(r.terms_, alpha + beta, c * e);
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(dimension_);
  if (c.is_zero()) return r;
  for (const auto& [alpha, v] : terms_) r.terms_.emplace(alpha, v * c);
  return r;
}

Polynomial Polynomial::minus_monomial(const ExponentVector& alpha, const Rational& c) const {
  if (alpha.size() != static_cast<std::size_t>(dimension_))
    throw InputError("dimension mismatch in subtract_monomial");
  if (!alpha.is_nonnegative()) throw InputError("negative exponent in subtract_monomial");
  Polynomial r = *this;
  accumulate(r.terms_, alpha, -c);
  return r;
}

Polynomial Polynomial::substitute(std::size_t axis, const Rational& value) const {
  Polynomial r(dimension_);
  for (const auto& [alpha, c] : terms_) {
    Rational factor(1);
    for (int i = 0; i < alpha[axis]; ++i) factor *= value;
    ExponentVector beta = alpha;
    beta[axis] = 0;
    accumulate(r.terms_, beta, c * factor);
  }
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != static_cast<std::size_t>(dimension_))
    throw InputError("point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(dimension_));
  Rational total(0);
  for (const auto& [alpha, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < alpha.size(); ++i)
      for (int k = 0; k < alpha[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [alpha, c] = *it;
    bool negative = c.sign() < 0;
    Rational magnitude = negative ? -c : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string mono;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      if (alpha[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (alpha[i] > 1) mono += "^" + std::to_string(alpha[i]);
    }
    if (mono.empty())
      out += magnitude.to_string();
    else if (magnitude == Rational(1))
      out += mono;
    else
      out += magnitude.to_string() + "*" + mono;
  }
  return out;
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }
Polynomial scale(const Rational& c, const Polynomial& p) { return p.scaled(c); }
Polynomial subtract_monomial(const Polynomial& p, const ExponentVector& alpha, const Rational& c) {
  return p.minus_monomial(alpha, c);
}

HyperplaneDivision divide_by_hyperplane(const Polynomial& p) {
  const int n = p.dimension();
  Polynomial::TermMap work = (p - Polynomial::constant(n, Rational(1))).terms();
  Polynomial::TermMap quotient;
  // The leading term of s - 1 is x1. Reducing the lex-largest term only adds
  // lex-smaller terms, so scanning from the top terminates.
  while (!work.empty()) {
    auto top = std::prev(work.end());
    if (top->first[0] == 0) break;
    ExponentVector beta = top->first.shifted(0, -1);
    Rational c = top->second;
    work.erase(top);
    accumulate(quotient, beta, c);
    for (int j = 1; j < n; ++j) accumulate(work, beta.shifted(j, 1), -c);
    accumulate(work, beta, c);
  }
  return {Polynomial(n, std::move(quotient)), Polynomial(n, std::move(work))};
}

Polynomial hyperplane_quotient(const Polynomial& p) {
  auto division = divide_by_hyperplane(p);
  if (!division.remainder.is_zero())
    throw InputError("polynomial is not identically 1 on x1+...+xn = 1: remainder " +
                     division.remainder.to_string());
  return division.quotient;
}

namespace {

// Point in the given axes at which r is nonzero (r must be nonzero and only
// involve those axes). Other axes are left at zero.
void find_nonzero_point(const Polynomial& r, std::vector<std::size_t> axes,
                        std::vector<Rational>& point) {
  if (axes.empty()) return;
  std::size_t last = axes.back();
  axes.pop_back();
  // Leading coefficient in x_last is a nonzero polynomial in the remaining
  // axes; making it nonzero leaves a nonzero univariate polynomial in x_last.
  int top = 0;
  for (const auto& [alpha, c] : r.terms()) top = std::max(top, alpha[last]);
  Polynomial::TermMap lead_terms;
  for (const auto& [alpha, c] : r.terms())
    if (alpha[last] == top) lead_terms.emplace(alpha.shifted(last, -top), c);
  find_nonzero_point(Polynomial(r.dimension(), std::move(lead_terms)), axes, point);

  Polynomial univariate = r;
  for (std::size_t a : axes) univariate = univariate.substitute(a, point[a]);
  for (int t = 0; t <= top; ++t) {
    point[last] = Rational(t);
    if (!univariate.substitute(last, point[last]).is_zero()) return;
  }
}

}  // namespace

HyperplaneMembership is_in_H(const Polynomial& p) {
  HyperplaneMembership result;
  for (const auto& [alpha, c] : p.terms()) {
    if (c.sign() < 0) {
      result.negative_term = std::make_pair(alpha, c);
      break;
    }
  }
  auto division = divide_by_hyperplane(p);
  if (!division.remainder.is_zero()) {
    const int n = p.dimension();
    std::vector<Rational> point(n, Rational(0));
    std::vector<std::size_t> axes;
    for (int j = 1; j < n; ++j) axes.push_back(j);
    find_nonzero_point(division.remainder, axes, point);
    Rational rest(1);
    for (int j = 1; j < n; ++j) rest -= point[j];
    point[0] = rest;
    result.off_hyperplane_witness = std::move(point);
  }
  result.member = !result.negative_term && !result.off_hyperplane_witness;
  return result;
}

}  // namespace ndiag
