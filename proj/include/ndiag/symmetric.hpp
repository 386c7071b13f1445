#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ndiag/diagram.hpp"
#include "ndiag/polynomial.hpp"

namespace ndiag {

/// Sign function on H_d = {(a,b,c) >= 0 : a+b+c = d}.
class SymmetricDiagram2D {
public:
  explicit SymmetricDiagram2D(int degree);
  /// Throws InputError if a point lies off H_d.
  SymmetricDiagram2D(int degree, NewtonDiagram::SupportMap values);

  int degree() const { return degree_; }
  const NewtonDiagram::SupportMap& support() const { return values_; }
  /// Zero off H_d.
  Sign at(const ExponentVector& alpha) const;

  /// H_d in lexicographic order.
  static std::vector<ExponentVector> domain(int degree);

  friend bool operator==(const SymmetricDiagram2D&, const SymmetricDiagram2D&) = default;

private:
  int degree_;
  NewtonDiagram::SupportMap values_;
};

/// Signs of the coefficients of a homogeneous Q(x1,x2,x3).
SymmetricDiagram2D symmetric_from_homogeneous(const Polynomial& q);

/// Points of H_{d+1} whose three downs carry a nonzero value and not both P
/// and N.
std::vector<ExponentVector> symmetric_nodes(const SymmetricDiagram2D& d);
std::size_t symmetric_node_count(const SymmetricDiagram2D& d);

/// One-dimensional view along (x_k, x_m): entry c (0..d) is the first
/// nonzero value, by increasing x_k, among points with x_k + x_m = c.
std::vector<Sign> symmetric_view(const SymmetricDiagram2D& d, int k, int m);

/// Adjacent pairs (row[c-1], row[c]), c = 0..len, with zeros past the ends,
/// other than (0,0), (P,N) and (N,P).
std::size_t row_node_count(const std::vector<Sign>& row);

struct ViewDeficit {
  int k = -1;
  int m = -1;
  std::size_t nodes = 0;     // #(D)
  std::ptrdiff_t deficit = 0;  // #(D) - #(V) for (k, m)
};

/// The ordered pair with the largest deficit (first in (k, m) order on
/// ties). Checks the dichotomy: #(D) = 3 forces a single nonzero point,
/// otherwise the deficit is at least 2; a failure throws
/// TheoremContradiction. The all-zero diagram is rejected with InputError.
ViewDeficit symmetric_view_deficit(const SymmetricDiagram2D& d);

/// Q(x1, x2, -1) read as an ordinary 2-dimensional diagram: (a,b,c) maps to
/// (a,b) with the sign flipped when c is odd.
NewtonDiagram dehomogenize(const SymmetricDiagram2D& d);

struct HomogeneousCheck {
  std::size_t nodes = 0;      // #(D)
  std::size_t monomials = 0;  // N((x1+x2+x3) Q)
  bool holds = false;
};

HomogeneousCheck homogeneous_monomial_check(const Polynomial& q);

}  // namespace ndiag
