#include "ndiag/crmap.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "ndiag/errors.hpp"

namespace ndiag {

MonomialMap::MonomialMap(int dimension, std::vector<MapComponent> components)
    : dimension_(dimension), components_(std::move(components)) {
  if (dimension < 1) throw InputError("map dimension must be >= 1");
  if (components_.empty()) throw InputError("a monomial map needs at least one component");
  for (const auto& c : components_) {
    if (c.exponent.size() != static_cast<std::size_t>(dimension))
      throw InputError("component exponent " + c.exponent.to_string() + " has wrong length");
    if (!c.exponent.is_nonnegative()) throw InputError("negative exponent in map component");
    if (c.squared_modulus.sign() <= 0) throw InputError("squared moduli must be positive");
  }
}

int MonomialMap::degree() const {
  int d = 0;
  for (const auto& c : components_) d = std::max(d, c.exponent.total());
  return d;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct RawComponent {
  Rational modulus;
  std::vector<std::pair<int, int>> factors;  // (1-based index, power)
};

int parse_uint(std::string_view s, std::size_t line, std::string_view what) {
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("line " + std::to_string(line) + ": bad " + std::string(what) + " '" + std::string(s) + "'", 0);
  return std::stoi(std::string(s));
}

RawComponent parse_line(std::string_view text, std::size_t line) {
  constexpr std::string_view prefix = "|c|^2=";
  text = trim(text);
  if (text.substr(0, prefix.size()) == prefix) text = trim(text.substr(prefix.size()));
  auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw ParseError("line " + std::to_string(line) + ": expected '<rational> : <monomial>'", 0);
  RawComponent out;
  auto coeff = trim(text.substr(0, colon));
  try {
    out.modulus = Rational::parse(coeff);
  } catch (const ParseError&) {
    throw ParseError("line " + std::to_string(line) + ": bad squared modulus '" + std::string(coeff) + "'", 0);
  }
  auto mono = trim(text.substr(colon + 1));
  if (mono == "1") return out;
  std::size_t pos = 0;
  while (pos <= mono.size()) {
    auto star = mono.find('*', pos);
    auto factor = trim(mono.substr(pos, star == std::string_view::npos ? std::string_view::npos : star - pos));
    if (factor.size() < 2 || factor[0] != 'z')
      throw ParseError("line " + std::to_string(line) + ": expected factor z<index>[^power], got '" +
                           std::string(factor) + "'",
                       0);
    auto caret = factor.find('^');
    int index = parse_uint(factor.substr(1, caret == std::string_view::npos ? std::string_view::npos : caret - 1),
                           line, "variable index");
    int power = caret == std::string_view::npos ? 1 : parse_uint(factor.substr(caret + 1), line, "power");
    if (index < 1) throw ParseError("line " + std::to_string(line) + ": variable index starts at 1", 0);
    out.factors.emplace_back(index, power);
    if (star == std::string_view::npos) break;
    pos = star + 1;
  }
  return out;
}

}  // namespace

MonomialMap parse_monomial_map(std::string_view text, int dimension) {
  std::vector<RawComponent> raw;
  std::size_t line_no = 0;
  int max_index = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    raw.push_back(parse_line(line, line_no));
    for (auto [index, power] : raw.back().factors) max_index = std::max(max_index, index);
  }
  if (dimension == 0) dimension = std::max(1, max_index);
  if (max_index > dimension)
    throw InputError("variable z" + std::to_string(max_index) + " exceeds dimension " + std::to_string(dimension));
  std::vector<MapComponent> components;
  for (auto& r : raw) {
    ExponentVector beta(dimension);
    for (auto [index, power] : r.factors) beta[index - 1] += power;
    components.push_back({r.modulus, beta});
  }
  return MonomialMap(dimension, std::move(components));
}

Polynomial squared_norm(const MonomialMap& f) {
  Polynomial p(f.dimension());
  for (const auto& c : f.components()) p = p + Polynomial::monomial(c.exponent, c.squared_modulus);
  return p;
}

bool is_proper(const MonomialMap& f) { return is_in_H(squared_norm(f)).member; }

MonomialMap lift_to_map(const Polynomial& p) {
  std::vector<MapComponent> components;
  for (const auto& [alpha, c] : p.terms()) {
    if (c.sign() <= 0) throw InputError("cannot lift a nonpositive coefficient to a squared modulus");
    components.push_back({c, alpha});
  }
  return MonomialMap(p.dimension(), std::move(components));
}

CorollaryReport corollary_report(const MonomialMap& f) {
  const int n = f.dimension();
  if (n == 1) throw InputError("no degree bound holds for n = 1");
  if (!is_proper(f)) throw InputError("map is not proper: its squared norm is not in H");
  CorollaryReport report;
  report.n = n;
  report.components = f.size();
  report.d = f.degree();
  const long N = static_cast<long>(report.components);
  report.bound = n == 2 ? Rational(2 * N - 3) : Rational(N - 1, n - 1);
  report.holds = Rational(report.d) <= report.bound;
  report.tight = Rational(report.d) == report.bound;
  if (!report.holds)
    throw TheoremContradiction("proper monomial map of degree " + std::to_string(report.d) +
                                   " exceeds bound " + report.bound.to_string(),
                               squared_norm(f).to_string());
  return report;
}

}  // namespace ndiag
