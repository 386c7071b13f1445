#pragma once

#include <string_view>
#include <vector>

#include "ndiag/polynomial.hpp"

namespace ndiag {

/// Monomial map z -> (c_j z^{beta_j})_j between balls. Each complex
/// coefficient is stored as its squared modulus |c_j|^2 > 0; phases play no
/// role in properness or degree.
struct MapComponent {
  Rational squared_modulus;
  ExponentVector exponent;
};

class MonomialMap {
public:
  /// Throws InputError on an empty component list, wrong exponent length,
  /// negative exponents or nonpositive squared moduli.
  MonomialMap(int dimension, std::vector<MapComponent> components);

  int dimension() const { return dimension_; }
  const std::vector<MapComponent>& components() const { return components_; }
  /// Target dimension N.
  std::size_t size() const { return components_.size(); }
  /// Largest total degree of a component.
  int degree() const;

private:
  int dimension_;
  std::vector<MapComponent> components_;
};

/// One component per line: `[|c|^2=] <rational> : <monomial in z1..zn>`,
/// where the monomial is `1` or factors `zj` / `zj^e` joined by `*`.
/// Blank lines and `#` comments are skipped. With dimension 0 the dimension
/// is the largest variable index used.
MonomialMap parse_monomial_map(std::string_view text, int dimension = 0);

/// ||f(z)||^2 with x_j = |z_j|^2.
Polynomial squared_norm(const MonomialMap& f);

bool is_proper(const MonomialMap& f);

/// One component per term of p, squared modulus = coefficient. Throws
/// InputError when p has a nonpositive coefficient.
MonomialMap lift_to_map(const Polynomial& p);

struct CorollaryReport {
  int n = 0;
  std::size_t components = 0;  // N
  int d = 0;
  Rational bound;
  bool holds = false;
  bool tight = false;
};

/// Degree bound for proper monomial maps: d <= 2N-3 for n = 2 and
/// d <= (N-1)/(n-1) for n >= 3. Throws InputError for maps that are not
/// proper or n = 1, TheoremContradiction when the bound fails.
CorollaryReport corollary_report(const MonomialMap& f);

}  // namespace ndiag
