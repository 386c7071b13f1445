#include "ndiag/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>

#include "ndiag/dump.hpp"
#include "ndiag/errors.hpp"
#include "ndiag/symmetric.hpp"

namespace ndiag {

namespace {

constexpr std::uint8_t kZero = 0, kP = 1, kN = 2;

Sign digit_sign(std::uint8_t digit) {
  return digit == kP ? Sign::P : (digit == kN ? Sign::N : Sign::Zero);
}

void lattice_points(int n, int max_total, std::vector<int>& cur, std::vector<ExponentVector>& out) {
  if (static_cast<int>(cur.size()) == n) {
    out.emplace_back(cur);
    return;
  }
  int used = std::accumulate(cur.begin(), cur.end(), 0);
  for (int v = 0; used + v <= max_total; ++v) {
    cur.push_back(v);
    lattice_points(n, max_total, cur, out);
    cur.pop_back();
  }
}

std::vector<ExponentVector> lattice_points(int n, int max_total) {
  std::vector<ExponentVector> out;
  std::vector<int> cur;
  if (max_total >= 0) lattice_points(n, max_total, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::string budget_message(double estimate) {
  std::ostringstream out;
  out << "search space of " << estimate << " assignments exceeds the budget of " << kAssignmentBudget;
  return out.str();
}

}  // namespace

SearchSpace::SearchSpace(int n_, int d_) : n(n_), d(d_) {
  if (n < 1) throw InputError("search dimension must be >= 1");
  if (d < 1) throw InputError("search size must be >= 1");
  points = lattice_points(n, d - 1);
}

double SearchSpace::assignments() const { return std::pow(3.0, static_cast<double>(points.size())); }

double SearchSpace::pruned_estimate() const {
  return std::pow(3.0, static_cast<double>(points.size()) - 1);
}

void SearchSpace::require_budget(bool pruned) const {
  double estimate = pruned ? pruned_estimate() : assignments();
  if (estimate > kAssignmentBudget)
    throw BudgetExceeded(budget_message(estimate) + " (3^" +
                         std::to_string(points.size() - (pruned ? 1 : 0)) + " for n=" +
                         std::to_string(n) + ", d=" + std::to_string(d) + ")");
}

NewtonDiagram SearchSpace::decode(const std::vector<std::uint8_t>& code) const {
  NewtonDiagram::SupportMap support;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (code[i] != kZero) support.emplace(points[i], digit_sign(code[i]));
  return NewtonDiagram(n, std::move(support));
}

namespace {

// Index tables for classifying candidates alpha >= 0, |alpha| <= d straight
// from a sign code.
class FastSpace {
public:
  explicit FastSpace(const SearchSpace& space) : space_(space) {
    std::map<ExponentVector, int> index;
    for (std::size_t i = 0; i < space.points.size(); ++i) index[space.points[i]] = static_cast<int>(i);
    determined_at_.resize(space.points.size());
    for (const auto& alpha : lattice_points(space.n, space.d)) {
      Candidate c;
      auto it = index.find(alpha);
      c.self = it == index.end() ? -1 : it->second;
      int last = c.self;
      for (int j = 0; j < space.n; ++j) {
        if (alpha[j] == 0) continue;
        int down = index.at(alpha.shifted(j, -1));
        c.downs.push_back(down);
        last = std::max(last, down);
      }
      c.origin = alpha.total() == 0;
      determined_at_[last].push_back(static_cast<int>(candidates_.size()));
      candidates_.push_back(std::move(c));
    }
    for (const auto& p : space.points) totals_.push_back(p.total());
  }

  const SearchSpace& space() const { return space_; }
  std::size_t size() const { return space_.points.size(); }

  // 0 none, 1 sink, 2 source.
  int classify(const std::vector<std::uint8_t>& code, int cand) const {
    const Candidate& c = candidates_[cand];
    std::uint8_t v = c.self >= 0 ? code[c.self] : kZero;
    bool any = v != kZero, has_p = false, has_n = false;
    for (int down : c.downs) {
      std::uint8_t w = code[down];
      any |= w != kZero;
      has_p |= w == kP;
      has_n |= w == kN;
    }
    if (!any) return 0;
    if (v != kP && !has_n) return 1;
    if (v != kN && !has_p) return 2;
    return 0;
  }

  bool is_origin(int cand) const { return candidates_[cand].origin; }
  const std::vector<int>& determined_at(std::size_t i) const { return determined_at_[i]; }

  int size_of(const std::vector<std::uint8_t>& code) const {
    int top = -1;
    for (std::size_t i = 0; i < code.size(); ++i)
      if (code[i] != kZero) top = std::max(top, totals_[i]);
    return top + 1;
  }

  bool one_point_per_degree(const std::vector<std::uint8_t>& code, int size) const {
    std::vector<int> per(size, 0);
    for (std::size_t i = 0; i < code.size(); ++i)
      if (code[i] != kZero) ++per[totals_[i]];
    return std::all_of(per.begin(), per.end(), [](int c) { return c == 1; });
  }

private:
  struct Candidate {
    int self = -1;
    std::vector<int> downs;
    bool origin = false;
  };

  const SearchSpace& space_;
  std::vector<Candidate> candidates_;
  std::vector<std::vector<int>> determined_at_;
  std::vector<int> totals_;
};

using LeafFn = std::function<void(const std::vector<std::uint8_t>&, int nodes)>;

// Depth-first walk over sign codes in counter order with the origin fixed
// to P and the given prefix fixed on points 1..prefix.size().
class Walker {
public:
  Walker(const FastSpace& space, const std::vector<std::uint8_t>& prefix, const LeafFn& leaf)
      : space_(space), prefix_(prefix), leaf_(leaf), code_(space.size(), kZero) {}

  std::uint64_t run() {
    descend(0, 0);
    return leaves_;
  }

private:
  void descend(std::size_t i, int nodes) {
    if (i == code_.size()) {
      ++leaves_;
      leaf_(code_, nodes);
      return;
    }
    std::uint8_t lo = kZero, hi = kN;
    if (i == 0) lo = hi = kP;
    else if (i <= prefix_.size()) lo = hi = prefix_[i - 1];
    for (std::uint8_t digit = lo; digit <= hi; ++digit) {
      code_[i] = digit;
      int added = 0;
      bool ok = true;
      for (int cand : space_.determined_at(i)) {
        int kind = space_.classify(code_, cand);
        if (kind == 2 && !space_.is_origin(cand)) {
          ok = false;
          break;
        }
        if (kind) ++added;
      }
      if (ok) descend(i + 1, nodes + added);
    }
    code_[i] = kZero;
  }

  const FastSpace& space_;
  const std::vector<std::uint8_t>& prefix_;
  const LeafFn& leaf_;
  std::vector<std::uint8_t> code_;
  std::uint64_t leaves_ = 0;
};

// Runs one walker per prefix over the first ceil(log3 workers) free points
// and returns the per-task aggregates in prefix order.
template <class Agg>
std::vector<Agg> run_tasks(const FastSpace& space, unsigned workers,
                           const std::function<void(Agg&, const std::vector<std::uint8_t>&, int)>& on_leaf,
                           std::uint64_t& leaves) {
  workers = std::max(1u, workers);
  std::size_t depth = 0;
  for (unsigned span = 1; span < workers; span *= 3) ++depth;
  depth = std::min(depth, space.size() - 1);
  std::size_t tasks = 1;
  for (std::size_t i = 0; i < depth; ++i) tasks *= 3;

  std::vector<Agg> results(tasks);
  std::vector<std::uint64_t> task_leaves(tasks, 0);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t t = next++; t < tasks; t = next++) {
      std::vector<std::uint8_t> prefix(depth);
      std::size_t rest = t;
      for (std::size_t i = depth; i-- > 0;) {
        prefix[i] = static_cast<std::uint8_t>(rest % 3);
        rest /= 3;
      }
      Agg& agg = results[t];
      LeafFn leaf = [&](const std::vector<std::uint8_t>& code, int nodes) { on_leaf(agg, code, nodes); };
      task_leaves[t] = Walker(space, prefix, leaf).run();
    }
  };
  unsigned threads = static_cast<unsigned>(std::min<std::size_t>(workers, tasks));
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  leaves = 0;
  for (auto l : task_leaves) leaves += l;
  return results;
}

}  // namespace

std::vector<NewtonDiagram> enumerate_valid_diagrams(int n, int d, EnumerationOptions options) {
  SearchSpace space(n, d);
  space.require_budget(options.pruned);
  std::vector<NewtonDiagram> out;
  if (!options.pruned) {
    const std::size_t k = space.points.size();
    std::vector<std::uint8_t> code(k, kZero);
    for (;;) {
      NewtonDiagram diagram = space.decode(code);
      if (check_sink_source_structure(diagram)) out.push_back(std::move(diagram));
      std::size_t i = k;
      while (i > 0 && code[i - 1] == kN) code[--i] = kZero;
      if (i == 0) break;
      ++code[i - 1];
    }
    return out;
  }
  FastSpace fast(space);
  using Codes = std::vector<std::vector<std::uint8_t>>;
  std::uint64_t leaves = 0;
  auto parts = run_tasks<Codes>(
      fast, options.workers,
      [](Codes& agg, const std::vector<std::uint8_t>& code, int) { agg.push_back(code); }, leaves);
  for (const auto& part : parts)
    for (const auto& code : part) out.push_back(space.decode(code));
  return out;
}

namespace {

struct RawCensus {
  std::uint64_t valid = 0;
  int min_nodes = -1;
  std::vector<std::vector<std::uint8_t>> minimizers;
};

using CensusMap = std::map<int, RawCensus>;

void merge_census(CensusMap& into, const CensusMap& from) {
  for (const auto& [size, part] : from) {
    RawCensus& c = into[size];
    c.valid += part.valid;
    if (c.min_nodes < 0 || part.min_nodes < c.min_nodes) {
      c.min_nodes = part.min_nodes;
      c.minimizers = part.minimizers;
    } else if (part.min_nodes == c.min_nodes) {
      c.minimizers.insert(c.minimizers.end(), part.minimizers.begin(), part.minimizers.end());
    }
  }
}

}  // namespace

BoundReport verify_bound(int n, int d, EnumerationOptions options) {
  SearchSpace space(n, d);
  space.require_budget(true);
  FastSpace fast(space);
  BoundReport report;
  report.n = n;
  report.d = d;
  report.points = space.points.size();
  report.assignments = 1;
  for (std::size_t i = 0; i < report.points; ++i) report.assignments *= 3;

  auto parts = run_tasks<CensusMap>(
      fast, options.workers,
      [&fast](CensusMap& agg, const std::vector<std::uint8_t>& code, int nodes) {
        RawCensus& c = agg[fast.size_of(code)];
        ++c.valid;
        if (c.min_nodes < 0 || nodes < c.min_nodes) {
          c.min_nodes = nodes;
          c.minimizers.clear();
        }
        if (nodes == c.min_nodes) c.minimizers.push_back(code);
      },
      report.leaves);
  CensusMap total;
  for (const auto& part : parts) merge_census(total, part);

  for (auto& [size, raw] : total) {
    SizeCensus& c = report.by_size[size];
    c.size = size;
    c.valid = raw.valid;
    c.min_nodes = static_cast<std::size_t>(raw.min_nodes);
    c.minimizers = raw.minimizers.size();
    if (n >= 3) c.bound = static_cast<std::size_t>((n - 1) * size + 2);
    for (const auto& code : raw.minimizers) {
      if (fast.one_point_per_degree(code, size)) ++c.one_point_per_degree;
      c.minimizer_diagrams.push_back(space.decode(code));
    }
    if (c.bound && c.min_nodes < *c.bound)
      throw TheoremContradiction("size " + std::to_string(size) + " diagram with " +
                                     std::to_string(c.min_nodes) + " nodes is below the bound " +
                                     std::to_string(*c.bound),
                                 diagram_json(c.minimizer_diagrams.front()).dump());
    if (n >= 4 && c.one_point_per_degree != c.minimizers) {
      for (std::size_t i = 0; i < raw.minimizers.size(); ++i)
        if (!fast.one_point_per_degree(raw.minimizers[i], size))
          throw TheoremContradiction("minimizer without one point per degree for n >= 4",
                                     diagram_json(c.minimizer_diagrams[i]).dump());
    }
  }
  return report;
}

namespace {

void for_each_simple_diagram(int height, int width, const std::function<void(SimpleDiagram&&)>& fn) {
  if (height < 1 || width < 1) throw InputError("simple diagram box must be at least 1x1");
  const int cells = height * width;
  double total = std::pow(3.0, cells);
  if (total > kAssignmentBudget) throw BudgetExceeded(budget_message(total));
  std::vector<ExponentVector> points;
  for (int r = 0; r < height; ++r)
    for (int p = 0; p < width; ++p) points.push_back(ExponentVector{p, r + width - 1 - p});
  std::vector<std::uint8_t> code(cells, kZero);
  for (;;) {
    NewtonDiagram::SupportMap support;
    for (int i = 0; i < cells; ++i)
      if (code[i] != kZero) support.emplace(points[i], digit_sign(code[i]));
    NewtonDiagram d(2, std::move(support));
    if (!d.empty() && is_simple(d)) fn(SimpleDiagram(std::move(d)));
    int i = cells;
    while (i > 0 && code[i - 1] == kN) code[--i] = kZero;
    if (i == 0) break;
    ++code[i - 1];
  }
}

}  // namespace

std::vector<SimpleDiagram> enumerate_simple_diagrams(int height, int width) {
  std::vector<SimpleDiagram> out;
  for_each_simple_diagram(height, width, [&](SimpleDiagram&& f) { out.push_back(std::move(f)); });
  return out;
}

SimpleDiagram random_simple_diagram(std::mt19937_64& rng, int max_height, int max_width) {
  std::uniform_int_distribution<int> sign_dist(0, 2);
  std::uniform_int_distribution<int> width_dist(1, max_width);
  std::uniform_int_distribution<int> height_dist(1, max_height);
  const int width = width_dist(rng);
  const int height = height_dist(rng);
  const int base = width - 1;
  NewtonDiagram::SupportMap support;
  auto at = [&](int p, int row) {
    auto it = support.find(ExponentVector{p, row - p});
    return it == support.end() ? Sign::Zero : it->second;
  };
  while (support.empty())
    for (int p = 0; p < width; ++p)
      if (Sign s = digit_sign(static_cast<std::uint8_t>(sign_dist(rng))); s != Sign::Zero)
        support[ExponentVector{p, base - p}] = s;
  for (int row = base + 1; row < base + height; ++row) {
    for (int p = 0; p <= row; ++p) {
      if (at(p - 1, row - 1) == Sign::Zero && at(p, row - 1) == Sign::Zero) continue;
      if (Sign s = digit_sign(static_cast<std::uint8_t>(sign_dist(rng))); s != Sign::Zero)
        support[ExponentVector{p, row - p}] = s;
    }
  }
  return SimpleDiagram(NewtonDiagram(2, std::move(support)));
}

void check_simple_diagram(const SimpleDiagram& f, LemmaReport& report) {
  auto dump = [&] { return diagram_json(f.diagram()).dump() + "\n" + render_ascii(f.diagram()); };
  FaceNodeCount count = face_node_count(f);
  int slack = count.weighted() - (f.height() + 1);
  if (slack < 0) throw TheoremContradiction("2f+e+c below height+1", dump());
  report.min_slack = std::min(report.min_slack, slack);
  FillResult filled = fill_traced(f);
  report.fill_steps += filled.steps.size();
  if (face_node_count(filled.filled).weighted() > count.weighted())
    throw TheoremContradiction("fill increased 2f+e+c", dump());
  RowAccounting acc = row_accounting(filled.filled);
  if (!acc.consistent) throw TheoremContradiction("row accounting inconsistent after fill", dump());
  if (!acc.sign_change_bound) ++report.sign_change_shortfalls;
}

LemmaReport lemma_check(int max_height, int max_width, std::uint64_t random_count, std::uint64_t seed) {
  LemmaReport report;
  report.max_height = max_height;
  report.max_width = max_width;
  report.min_slack = 1 << 30;
  for_each_simple_diagram(max_height, max_width, [&](SimpleDiagram&& f) {
    check_simple_diagram(f, report);
    ++report.enumerated;
  });
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < random_count; ++i) {
    check_simple_diagram(random_simple_diagram(rng), report);
    ++report.random;
  }
  return report;
}

SymmetricReport symmetric_dichotomy(int max_degree) {
  if (max_degree < 0) throw InputError("symmetric degree must be >= 0");
  SymmetricReport report;
  report.max_degree = max_degree;
  for (int degree = 0; degree <= max_degree; ++degree) {
    auto domain = SymmetricDiagram2D::domain(degree);
    double total = std::pow(3.0, static_cast<double>(domain.size()));
    if (total > kAssignmentBudget) throw BudgetExceeded(budget_message(total));
    std::vector<std::uint8_t> code(domain.size(), kZero);
    for (;;) {
      std::size_t i = code.size();
      while (i > 0 && code[i - 1] == kN) code[--i] = kZero;
      if (i == 0) break;
      ++code[i - 1];
      NewtonDiagram::SupportMap values;
      for (std::size_t j = 0; j < domain.size(); ++j)
        if (code[j] != kZero) values.emplace(domain[j], digit_sign(code[j]));
      SymmetricDiagram2D d(degree, std::move(values));
      ViewDeficit v = symmetric_view_deficit(d);
      ++report.diagrams;
      if (v.nodes == 3) ++report.single_point;
      else ++report.hidden_two;
      if (node_count(dehomogenize(d)) != v.nodes) ++report.dehomogenized_mismatch;
    }
  }
  return report;
}

AuditReport hidden_node_audit(int n, int d, EnumerationOptions options) {
  if (n < 4) throw InputError("the hidden-node audit needs n >= 4");
  AuditReport report;
  report.n = n;
  report.d = d;
  for (const auto& diagram : enumerate_valid_diagrams(n, d, options)) {
    ++report.diagrams;
    const std::size_t total = node_count(diagram);
    std::size_t best = 0;
    for (int k = 0; k < n; ++k)
      for (int m = 0; m < n; ++m)
        if (k != m) best = std::max(best, total - node_count(view(diagram, k, m)));

    bool facial = false;
    for (int k = 0; k < n && !facial; ++k)
      for (int m = k + 1; m < n && !facial; ++m)
        for (const auto& f : complete_simple_set(diagram, k, m))
          if (face_node_count(f).facial > 0) {
            facial = true;
            break;
          }
    bool big_top = false;
    for (const auto& face : top_horizontal_faces(diagram))
      if (face_nodes(diagram, face).size() > 3) big_top = true;
    if (facial || big_top) ++report.clause2_triggered;
    if (facial) ++report.facial_triggers;
    if (big_top) ++report.top_face_triggers;

    const auto size = static_cast<std::size_t>(diagram.size());
    int clause = 0;
    if (best < size) {
      clause = 1;
      ++report.clause1_failures;
    } else if ((facial || big_top) && best < size + 1) {
      clause = 2;
      ++report.clause2_failures;
    }
    if (clause) {
      ++report.failure_count;
      if (report.failures.size() < 5) report.failures.push_back({clause, best, diagram});
    }
  }
  return report;
}

}  // namespace ndiag
