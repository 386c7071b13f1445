#include "ndiag/faces2d.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "ndiag/dump.hpp"
#include "ndiag/errors.hpp"

namespace ndiag {

namespace {

ExponentVector planar(int p, int row) { return ExponentVector{p, row - p}; }

int lowest_row(const NewtonDiagram& d) {
  int low = d.top_degree();
  for (const auto& [alpha, s] : d.support()) low = std::min(low, alpha.total());
  return low;
}

int row_count(const NewtonDiagram& d) {
  std::set<int> rows;
  for (const auto& [alpha, s] : d.support()) rows.insert(alpha.total());
  return static_cast<int>(rows.size());
}

// Positions (x1 entries) of the support in one row, ascending.
std::vector<int> row_positions(const NewtonDiagram::SupportMap& support, int row) {
  std::vector<int> out;
  for (const auto& [alpha, s] : support)
    if (alpha.total() == row) out.push_back(alpha[0]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_simple(const NewtonDiagram& d) {
  if (d.dimension() != 2 || d.empty()) return false;
  const int low = lowest_row(d);
  for (const auto& [alpha, s] : d.support()) {
    if (alpha.total() == low) continue;
    if (d.at(alpha.shifted(0, -1)) == Sign::Zero && d.at(alpha.shifted(1, -1)) == Sign::Zero)
      return false;
  }
  return true;
}

SimpleDiagram::SimpleDiagram(NewtonDiagram d, Unchecked)
    : diagram_(std::move(d)), height_(row_count(diagram_)), base_row_(lowest_row(diagram_)) {}

SimpleDiagram::SimpleDiagram(NewtonDiagram d) : SimpleDiagram(std::move(d), Unchecked{}) {
  if (diagram_.dimension() != 2) throw InputError("simple diagrams are 2-dimensional");
  if (diagram_.empty()) throw InputError("simple diagram has no support");
  if (!is_simple(diagram_)) throw InputError("diagram has a bottom node above its lowest nonzero row");
}

SimpleDiagram SimpleDiagram::unchecked(NewtonDiagram d) {
  return SimpleDiagram(std::move(d), Unchecked{});
}

ExponentVector SimpleDiagram::lift(const ExponentVector& p) const {
  if (axis_k < 0) return p;
  ExponentVector out = slice;
  out[axis_k] = p[0];
  out[axis_m] = p[1];
  return out;
}

FaceNodeCount face_node_count(const NewtonDiagram& d) {
  if (d.dimension() != 2) throw InputError("face node count needs a 2-dimensional diagram");
  FaceNodeCount count;
  count.height = row_count(d);
  for (const auto& node : nodes(d)) {
    switch (node.geometry) {
      case Geometry::VerticalFacial: ++count.facial; break;
      case Geometry::VerticalEdge:
      case Geometry::HorizontalEdge: ++count.edge; break;
      case Geometry::TopCorner: ++count.corner; break;
      default: break;
    }
  }
  return count;
}

FaceNodeCount face_node_count(const SimpleDiagram& f) { return face_node_count(f.diagram()); }

std::vector<SimpleDiagram> complete_simple_set(const NewtonDiagram& d, int k, int m) {
  const int n = d.dimension();
  if (n < 2 || k < 0 || k >= n || m < 0 || m >= n || k == m)
    throw InputError("invalid edge (" + std::to_string(k + 1) + "," + std::to_string(m + 1) + ")");
  if (!check_sink_source_structure(d))
    throw InputError("complete simple sets need a unique source at the origin");

  auto other_degree = [&](const ExponentVector& a) { return a.total() - a[k] - a[m]; };
  std::vector<SimpleDiagram> out;
  int row = 0;
  while (row <= d.top_degree()) {
    const ExponentVector* start = nullptr;
    for (const auto& [alpha, s] : d.support()) {
      if (alpha.total() != row) continue;
      if (!start || other_degree(alpha) < other_degree(*start)) start = &alpha;
    }
    if (!start) {
      ++row;
      continue;
    }
    ExponentVector key = *start;
    key[k] = 0;
    key[m] = 0;

    std::set<ExponentVector> plane;
    for (const auto& [alpha, s] : d.support()) {
      ExponentVector a = alpha;
      a[k] = 0;
      a[m] = 0;
      if (a == key) plane.insert(alpha);
    }
    std::vector<ExponentVector> comp{*start};
    std::set<ExponentVector> seen{*start};
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int axis : {k, m})
        for (int dir : {1, -1}) {
          ExponentVector next = comp[i].shifted(axis, dir);
          if (plane.count(next) && seen.insert(next).second) comp.push_back(next);
        }
    }

    NewtonDiagram::SupportMap part;
    int top = row;
    for (const auto& alpha : comp) {
      if (alpha.total() < row) continue;
      part.emplace(ExponentVector{alpha[k], alpha[m]}, d.at(alpha));
      top = std::max(top, alpha.total());
    }
    SimpleDiagram f = SimpleDiagram::unchecked(NewtonDiagram(2, std::move(part)));
    f.axis_k = k;
    f.axis_m = m;
    f.slice = key;
    out.push_back(std::move(f));
    row = top + 1;
  }
  return out;
}

bool is_filled(const SimpleDiagram& f) {
  const NewtonDiagram& d = f.diagram();
  if (d.empty()) return false;
  auto low = row_positions(d.support(), f.base_row());
  if (low.back() - low.front() + 1 != static_cast<int>(low.size())) return false;
  for (const auto& [alpha, s] : d.support()) {
    if (alpha.total() >= f.top_row()) continue;
    if (d.at(alpha.shifted(0, 1)) == Sign::Zero || d.at(alpha.shifted(1, 1)) == Sign::Zero)
      return false;
  }
  return true;
}

namespace {

class Filler {
public:
  explicit Filler(const SimpleDiagram& f)
      : support_(f.diagram().support()), base_(f.base_row()), top_(f.top_row()), original_(f) {}

  FillResult run() {
    fill_lowest_row();
    while (fill_next_zero()) {
    }
    SimpleDiagram result = SimpleDiagram::unchecked(NewtonDiagram(2, support_));
    result.axis_k = original_.axis_k;
    result.axis_m = original_.axis_m;
    result.slice = original_.slice;
    if (!is_filled(result)) fail("fill ended on an unfilled diagram");
    return {std::move(result), std::move(steps_)};
  }

private:
  Sign at(int row, int p) const {
    auto it = support_.find(planar(p, row));
    return it == support_.end() ? Sign::Zero : it->second;
  }

  bool over_nonzero(int row, int p) const {
    return at(row - 1, p - 1) != Sign::Zero || at(row - 1, p) != Sign::Zero;
  }

  int weight() const { return face_node_count(NewtonDiagram(2, support_)).weighted(); }

  static Sign flip(Sign s) { return s == Sign::P ? Sign::N : Sign::P; }

  void assign(int row, const std::vector<int>& positions, Sign first) {
    Sign s = first;
    for (int p : positions) {
      support_[planar(p, row)] = s;
      s = flip(s);
    }
  }

  void clear(int row, const std::vector<int>& positions) {
    for (int p : positions) support_.erase(planar(p, row));
  }

  // Weight after filling `positions` alternately, starting with P or N.
  std::pair<int, int> trial(int row, const std::vector<int>& positions) {
    assign(row, positions, Sign::P);
    int wp = weight();
    assign(row, positions, Sign::N);
    int wn = weight();
    clear(row, positions);
    return {wp, wn};
  }

  void commit(int row, const std::vector<int>& positions, int before) {
    auto [wp, wn] = trial(row, positions);
    Sign first = wn < wp ? Sign::N : Sign::P;
    int after = std::min(wp, wn);
    if (after > before) fail("fill step raises 2f+e+c from " + std::to_string(before) + " to " +
                             std::to_string(after) + " in row " + std::to_string(row));
    assign(row, positions, first);
    steps_.push_back({row, positions, first, before, after});
  }

  void fill_lowest_row() {
    auto pos = row_positions(support_, base_);
    for (std::size_t i = 0; i + 1 < pos.size(); ++i) {
      if (pos[i + 1] - pos[i] <= 1) continue;
      std::vector<int> gap;
      for (int p = pos[i] + 1; p < pos[i + 1]; ++p) gap.push_back(p);
      commit(base_, gap, weight());
    }
  }

  bool fill_next_zero() {
    for (int row = base_ + 1; row <= top_; ++row) {
      auto below = row_positions(support_, row - 1);
      std::set<int> zeros;
      for (int p : below)
        for (int q : {p, p + 1})
          if (at(row, q) == Sign::Zero) zeros.insert(q);
      if (zeros.empty()) continue;
      if (row_positions(support_, row).empty()) return false;

      for (int z : zeros) {
        bool left = at(row, z - 1) != Sign::Zero;
        bool right = at(row, z + 1) != Sign::Zero;
        if (!left && !right) continue;
        int before = weight();
        if (left && right) {
          commit(row, {z}, before);
          return true;
        }
        auto [wp, wn] = trial(row, {z});
        if (std::min(wp, wn) <= before) {
          commit(row, {z}, before);
          return true;
        }
        int dir = left ? 1 : -1;
        std::vector<int> run{z};
        for (int q = z + dir;; q += dir) {
          if (at(row, q) != Sign::Zero || !over_nonzero(row, q)) break;
          run.push_back(q);
          if (at(row, q + dir) != Sign::Zero || classify_node(NewtonDiagram(2, support_), planar(q, row)))
            break;
        }
        commit(row, run, before);
        return true;
      }
      fail("no zero next to a nonzero point in row " + std::to_string(row));
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw TheoremContradiction(what, diagram_json(original_.diagram()).dump());
  }

  NewtonDiagram::SupportMap support_;
  int base_;
  int top_;
  const SimpleDiagram& original_;
  std::vector<FillStep> steps_;
};

}  // namespace

FillResult fill_traced(const SimpleDiagram& f) {
  if (!is_simple(f.diagram())) throw InputError("fill needs a simple diagram");
  return Filler(f).run();
}

SimpleDiagram fill(const SimpleDiagram& f) { return fill_traced(f).filled; }

std::vector<int> sign_changes_per_row(const SimpleDiagram& f) {
  if (!is_filled(f)) throw InputError("sign changes are defined for filled diagrams only");
  const NewtonDiagram& d = f.diagram();
  std::vector<int> out;
  for (int row = f.base_row(); row <= f.top_row(); ++row) {
    int changes = 0;
    Sign prev = Sign::Zero;
    for (int p : row_positions(d.support(), row)) {
      Sign s = d.at(planar(p, row));
      if (prev != Sign::Zero && s != prev) ++changes;
      prev = s;
    }
    out.push_back(changes);
  }
  return out;
}

RowAccounting row_accounting(const SimpleDiagram& f) {
  RowAccounting acc;
  acc.sign_changes = sign_changes_per_row(f);
  const NewtonDiagram& d = f.diagram();
  for (int row = f.base_row(); row <= f.top_row(); ++row)
    acc.lengths.push_back(static_cast<int>(row_positions(d.support(), row).size()));
  auto top = row_positions(d.support(), f.top_row());
  for (int p = top.front(); p <= top.back() + 1; ++p)
    if (classify_node(d, planar(p, f.top_row() + 1))) ++acc.nodes_above_top;
  const int s1 = acc.sign_changes.front();
  const int sd = acc.sign_changes.back();
  const int ld = acc.lengths.back();
  acc.lower_bound = ld + 1 - sd + std::abs(sd - s1);
  acc.weighted = face_node_count(f).weighted();
  acc.consistent = acc.nodes_above_top == ld + 1 - sd && acc.weighted >= acc.nodes_above_top &&
                   acc.lower_bound >= f.height() + 1;
  acc.sign_change_bound = acc.weighted >= acc.lower_bound;
  return acc;
}

}  // namespace ndiag
