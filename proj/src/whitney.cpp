#include "ndiag/whitney.hpp"

#include <charconv>
#include <map>
#include <random>

#include "ndiag/errors.hpp"

namespace ndiag {

Polynomial whitney_step(const Polynomial& p, const ExponentVector& alpha) {
  if (alpha.size() != static_cast<std::size_t>(p.dimension()))
    throw InputError("move " + alpha.to_string() + " has wrong length");
  Rational c = p.coefficient(alpha);
  if (c.is_zero()) throw InputError("x^" + alpha.to_string() + " is not a term of p");
  if (alpha.total() != p.degree()) throw InputError("x^" + alpha.to_string() + " is not of maximal degree");
  if (!is_in_H(p).member) throw InputError("whitney_step needs p in H");
  Polynomial m = Polynomial::monomial(alpha, c);
  return p - m + m * Polynomial::sum_of_variables(p.dimension());
}

WhitneyChooser WhitneyChooser::parse(std::string_view text) {
  if (text == "lex") return lex();
  constexpr std::string_view prefix = "seed:";
  if (text.substr(0, prefix.size()) == prefix) {
    auto digits = text.substr(prefix.size());
    std::uint64_t seed = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
    if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty()) return seeded(seed);
  }
  throw InputError("chooser must be 'lex' or 'seed:<u64>', got '" + std::string(text) + "'");
}

std::string WhitneyChooser::to_string() const {
  return kind == Kind::Lex ? "lex" : "seed:" + std::to_string(seed);
}

WhitneyTrace generate(int n, int d, const WhitneyChooser& chooser) {
  if (n < 2) throw InputError("generate needs n >= 2");
  if (d < 1) throw InputError("generate needs d >= 1");
  WhitneyTrace trace{n, {}, Polynomial::sum_of_variables(n)};
  std::mt19937_64 rng(chooser.seed);
  for (int step = 1; step < d; ++step) {
    std::vector<ExponentVector> top;
    const int deg = *trace.result.degree();
    for (const auto& [alpha, c] : trace.result.terms())
      if (alpha.total() == deg) top.push_back(alpha);
    ExponentVector pick = top.back();
    if (chooser.kind == WhitneyChooser::Kind::Seeded) {
      std::uniform_int_distribution<std::size_t> dist(0, top.size() - 1);
      pick = top[dist(rng)];
    }
    trace.result = whitney_step(trace.result, pick);
    trace.moves.push_back(pick);
  }
  return trace;
}

WhitneyTrace generate_from_moves(int n, const std::vector<ExponentVector>& moves) {
  if (n < 2) throw InputError("generate needs n >= 2");
  WhitneyTrace trace{n, {}, Polynomial::sum_of_variables(n)};
  for (const auto& alpha : moves) {
    trace.result = whitney_step(trace.result, alpha);
    trace.moves.push_back(alpha);
  }
  return trace;
}

bool is_sharp_whitney(const Polynomial& p) {
  if (!is_in_H(p).member) return false;
  auto deg = p.degree();
  if (!deg || *deg < 1) return false;
  Polynomial q = hyperplane_quotient(p);
  std::map<int, int> per_degree;
  for (const auto& [alpha, c] : q.terms()) ++per_degree[alpha.total()];
  if (static_cast<int>(per_degree.size()) != *deg) return false;
  int expected = 0;
  for (const auto& [k, count] : per_degree)
    if (k != expected++ || count != 1) return false;
  return true;
}

DegreeBoundReport check_degree_bound(const Polynomial& p) {
  const int n = p.dimension();
  if (n == 1) throw InputError("no degree bound holds for n = 1");
  auto deg = p.degree();
  if (!deg || *deg == 0) throw InputError("degree bound needs a nonconstant polynomial");
  auto membership = is_in_H(p);
  if (!membership.member) throw InputError("polynomial is not in H");
  DegreeBoundReport report;
  report.n = n;
  report.d = *deg;
  report.terms = p.term_count();
  const long N = static_cast<long>(report.terms);
  report.bound = n == 2 ? Rational(2 * N - 3) : Rational(N - 1, n - 1);
  report.tight = Rational(report.d) == report.bound;
  if (Rational(report.d) > report.bound)
    throw TheoremContradiction("degree " + std::to_string(report.d) + " exceeds bound " +
                                   report.bound.to_string(),
                               p.to_string());
  return report;
}

}  // namespace ndiag
