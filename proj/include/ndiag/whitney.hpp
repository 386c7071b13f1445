#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ndiag/polynomial.hpp"

namespace ndiag {

/// p - c x^alpha + c x^alpha s, where c is the full coefficient of x^alpha.
/// Requires p in H and x^alpha a term of p of degree deg p.
Polynomial whitney_step(const Polynomial& p, const ExponentVector& alpha);

/// Which maximal-degree term each step moves.
struct WhitneyChooser {
  enum class Kind { Lex, Seeded };
  Kind kind = Kind::Lex;
  std::uint64_t seed = 0;

  static WhitneyChooser lex() { return {}; }
  static WhitneyChooser seeded(std::uint64_t seed) { return {Kind::Seeded, seed}; }
  /// "lex" or "seed:<u64>".
  static WhitneyChooser parse(std::string_view text);
  std::string to_string() const;
};

struct WhitneyTrace {
  int dimension = 0;
  std::vector<ExponentVector> moves;
  Polynomial result{1};
};

/// Starts from s and applies d-1 steps. Lex moves the lexicographically
/// largest maximal-degree term; Seeded picks uniformly with mt19937_64.
WhitneyTrace generate(int n, int d, const WhitneyChooser& chooser = WhitneyChooser::lex());

/// Starts from s and applies the given moves in order.
WhitneyTrace generate_from_moves(int n, const std::vector<ExponentVector>& moves);

/// p in H and q = (p-1)/(s-1) has exactly one term in each degree 0..deg p - 1.
bool is_sharp_whitney(const Polynomial& p);

struct DegreeBoundReport {
  int n = 0;
  int d = 0;
  std::size_t terms = 0;  // N
  Rational bound;         // 2N-3 for n = 2, (N-1)/(n-1) otherwise
  bool tight = false;     // d == bound
};

/// Throws InputError for n = 1, constant p or p outside H, and
/// TheoremContradiction if d exceeds the bound.
DegreeBoundReport check_degree_bound(const Polynomial& p);

}  // namespace ndiag
