#include "ndiag/symmetric.hpp"

#include "ndiag/errors.hpp"

namespace ndiag {

namespace {

bool on_simplex(const ExponentVector& a, int degree) {
  return a.size() == 3 && a.is_nonnegative() && a.total() == degree;
}

}  // namespace

SymmetricDiagram2D::SymmetricDiagram2D(int degree) : degree_(degree) {
  if (degree < 0) throw InputError("symmetric diagram degree must be >= 0");
}

SymmetricDiagram2D::SymmetricDiagram2D(int degree, NewtonDiagram::SupportMap values)
    : SymmetricDiagram2D(degree) {
  for (auto& [alpha, s] : values) {
    if (!on_simplex(alpha, degree))
      throw InputError("point " + alpha.to_string() + " is not on H_" + std::to_string(degree));
    if (s != Sign::Zero) values_.emplace(alpha, s);
  }
}

Sign SymmetricDiagram2D::at(const ExponentVector& alpha) const {
  auto it = values_.find(alpha);
  return it == values_.end() ? Sign::Zero : it->second;
}

std::vector<ExponentVector> SymmetricDiagram2D::domain(int degree) {
  std::vector<ExponentVector> out;
  for (int a = 0; a <= degree; ++a)
    for (int b = 0; a + b <= degree; ++b) out.push_back(ExponentVector{a, b, degree - a - b});
  return out;
}

SymmetricDiagram2D symmetric_from_homogeneous(const Polynomial& q) {
  if (q.dimension() != 3) throw InputError("symmetric diagrams need a polynomial in 3 variables");
  if (q.is_zero()) throw InputError("symmetric diagram of the zero polynomial has no degree");
  if (!q.is_homogeneous()) throw InputError("polynomial is not homogeneous");
  NewtonDiagram::SupportMap values;
  for (const auto& [alpha, c] : q.terms()) values.emplace(alpha, sign_of(c));
  return SymmetricDiagram2D(*q.degree(), std::move(values));
}

std::vector<ExponentVector> symmetric_nodes(const SymmetricDiagram2D& d) {
  std::vector<ExponentVector> out;
  for (const auto& alpha : SymmetricDiagram2D::domain(d.degree() + 1)) {
    bool p = false, n = false;
    for (int axis = 0; axis < 3; ++axis) {
      Sign s = d.at(alpha.shifted(axis, -1));
      p |= s == Sign::P;
      n |= s == Sign::N;
    }
    if (p != n) out.push_back(alpha);
  }
  return out;
}

std::size_t symmetric_node_count(const SymmetricDiagram2D& d) { return symmetric_nodes(d).size(); }

std::vector<Sign> symmetric_view(const SymmetricDiagram2D& d, int k, int m) {
  if (k < 0 || k > 2 || m < 0 || m > 2 || k == m)
    throw InputError("invalid view axis pair (" + std::to_string(k + 1) + "," + std::to_string(m + 1) + ")");
  const int other = 3 - k - m;
  std::vector<Sign> row(d.degree() + 1, Sign::Zero);
  for (int c = 0; c <= d.degree(); ++c) {
    for (int a = 0; a <= c; ++a) {
      ExponentVector alpha(3);
      alpha[k] = a;
      alpha[m] = c - a;
      alpha[other] = d.degree() - c;
      Sign s = d.at(alpha);
      if (s != Sign::Zero) {
        row[c] = s;
        break;
      }
    }
  }
  return row;
}

std::size_t row_node_count(const std::vector<Sign>& row) {
  std::size_t count = 0;
  const int len = static_cast<int>(row.size());
  for (int c = 0; c <= len; ++c) {
    Sign lo = c > 0 ? row[c - 1] : Sign::Zero;
    Sign hi = c < len ? row[c] : Sign::Zero;
    bool both_zero = lo == Sign::Zero && hi == Sign::Zero;
    bool mixed = lo != Sign::Zero && hi != Sign::Zero && lo != hi;
    if (!both_zero && !mixed) ++count;
  }
  return count;
}

ViewDeficit symmetric_view_deficit(const SymmetricDiagram2D& d) {
  if (d.support().empty()) throw InputError("the all-zero symmetric diagram has no nodes");
  ViewDeficit best;
  best.nodes = symmetric_node_count(d);
  bool first = true;
  for (int k = 0; k < 3; ++k) {
    for (int m = 0; m < 3; ++m) {
      if (k == m) continue;
      auto deficit = static_cast<std::ptrdiff_t>(best.nodes) -
                     static_cast<std::ptrdiff_t>(row_node_count(symmetric_view(d, k, m)));
      if (first || deficit > best.deficit) {
        best.k = k;
        best.m = m;
        best.deficit = deficit;
        first = false;
      }
    }
  }
  auto describe = [&] {
    std::string out = "degree " + std::to_string(d.degree()) + ":";
    for (const auto& [alpha, s] : d.support()) out += std::string(" ") + sign_char(s) + alpha.to_string();
    return out;
  };
  if (best.nodes == 3 && d.support().size() != 1)
    throw TheoremContradiction("symmetric diagram with 3 nodes has more than one nonzero point", describe());
  if (best.nodes != 3 && best.deficit < 2)
    throw TheoremContradiction("no view of the symmetric diagram hides 2 nodes", describe());
  return best;
}

NewtonDiagram dehomogenize(const SymmetricDiagram2D& d) {
  NewtonDiagram::SupportMap support;
  for (const auto& [alpha, s] : d.support()) {
    Sign v = s;
    if (alpha[2] % 2 == 1) v = s == Sign::P ? Sign::N : Sign::P;
    support.emplace(ExponentVector{alpha[0], alpha[1]}, v);
  }
  return NewtonDiagram(2, std::move(support));
}

HomogeneousCheck homogeneous_monomial_check(const Polynomial& q) {
  HomogeneousCheck out;
  out.nodes = symmetric_node_count(symmetric_from_homogeneous(q));
  out.monomials = (Polynomial::sum_of_variables(3) * q).term_count();
  out.holds = out.monomials >= out.nodes;
  return out;
}

}  // namespace ndiag
