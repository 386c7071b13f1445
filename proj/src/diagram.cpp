#include "ndiag/diagram.hpp"

#include <algorithm>
#include <set>

#include "ndiag/errors.hpp"

namespace ndiag {

char sign_char(Sign s) {
  switch (s) {
    case Sign::P: return 'P';
    case Sign::N: return 'N';
    default: return '.';
  }
}

Sign sign_of(const Rational& r) {
  int s = r.sign();
  return s > 0 ? Sign::P : (s < 0 ? Sign::N : Sign::Zero);
}

std::string_view to_string(NodeKind kind) { return kind == NodeKind::Sink ? "sink" : "source"; }

std::string_view to_string(Geometry geometry) {
  switch (geometry) {
    case Geometry::BottomCorner: return "bottom-corner";
    case Geometry::TopCorner: return "top-corner";
    case Geometry::VerticalEdge: return "vertical-edge";
    case Geometry::HorizontalEdge: return "horizontal-edge";
    case Geometry::VerticalFacial: return "vertical-facial";
    case Geometry::HorizontalFacial: return "horizontal-facial";
    case Geometry::Other: return "other";
  }
  return "other";
}

NewtonDiagram::NewtonDiagram(int dimension) : dimension_(dimension), lower_(dimension) {
  if (dimension < 1) throw InputError("diagram dimension must be >= 1");
}

NewtonDiagram::NewtonDiagram(int dimension, SupportMap support) : NewtonDiagram(dimension) {
  for (auto& [alpha, s] : support) {
    if (alpha.size() != static_cast<std::size_t>(dimension))
      throw InputError("point " + alpha.to_string() + " has wrong length for dimension " +
                       std::to_string(dimension));
    if (s != Sign::Zero) support_.emplace(alpha, s);
  }
  if (support_.empty()) return;
  lower_ = support_.begin()->first;
  top_ = support_.begin()->first.total();
  for (const auto& [alpha, s] : support_) {
    for (int j = 0; j < dimension; ++j) lower_[j] = std::min(lower_[j], alpha[j]);
    top_ = std::max(top_, alpha.total());
  }
}

NewtonDiagram NewtonDiagram::from_quotient(const Polynomial& q) {
  SupportMap support;
  for (const auto& [alpha, c] : q.terms()) support.emplace(alpha, sign_of(c));
  return NewtonDiagram(q.dimension(), std::move(support));
}

Sign NewtonDiagram::at(const ExponentVector& alpha) const {
  auto it = support_.find(alpha);
  return it == support_.end() ? Sign::Zero : it->second;
}

int NewtonDiagram::size() const { return support_.empty() ? 0 : top_ - lower_.total() + 1; }

ExponentVector down(const ExponentVector& alpha, int axis) {
  if (axis < 0 || static_cast<std::size_t>(axis) >= alpha.size())
    throw InputError("axis " + std::to_string(axis) + " out of range");
  return alpha.shifted(axis, -1);
}

std::optional<NodeKind> classify_node(const NewtonDiagram& d, const ExponentVector& alpha) {
  Sign v = d.at(alpha);
  bool any_nonzero = v != Sign::Zero;
  bool downs_have_p = false, downs_have_n = false;
  for (int k = 0; k < d.dimension(); ++k) {
    Sign w = d.at(alpha.shifted(k, -1));
    downs_have_p |= w == Sign::P;
    downs_have_n |= w == Sign::N;
    any_nonzero |= w != Sign::Zero;
  }
  if (!any_nonzero) return std::nullopt;
  if (v != Sign::P && !downs_have_n) return NodeKind::Sink;
  if (v != Sign::N && !downs_have_p) return NodeKind::Source;
  return std::nullopt;
}

Geometry classify_geometry(const NewtonDiagram& d, const ExponentVector& alpha) {
  int nonzero_downs = 0;
  for (int k = 0; k < d.dimension(); ++k)
    if (d.at(alpha.shifted(k, -1)) != Sign::Zero) ++nonzero_downs;
  if (d.at(alpha) != Sign::Zero) {
    switch (nonzero_downs) {
      case 0: return Geometry::BottomCorner;
      case 1: return Geometry::VerticalEdge;
      case 2: return Geometry::VerticalFacial;
      default: return Geometry::Other;
    }
  }
  switch (nonzero_downs) {
    case 1: return Geometry::TopCorner;
    case 2: return Geometry::HorizontalEdge;
    case 3: return Geometry::HorizontalFacial;
    default: return Geometry::Other;
  }
}

namespace {

// Every node is a support point or an up-neighbour of one.
std::set<ExponentVector> node_candidates(const NewtonDiagram& d) {
  std::set<ExponentVector> out;
  for (const auto& [alpha, s] : d.support()) {
    out.insert(alpha);
    for (int k = 0; k < d.dimension(); ++k) out.insert(alpha.shifted(k, 1));
  }
  return out;
}

}  // namespace

std::vector<NodeRecord> nodes(const NewtonDiagram& d) {
  std::vector<NodeRecord> out;
  for (const auto& alpha : node_candidates(d))
    if (auto kind = classify_node(d, alpha)) out.push_back({alpha, *kind, classify_geometry(d, alpha)});
  return out;
}

std::size_t node_count(const NewtonDiagram& d) {
  std::size_t count = 0;
  for (const auto& alpha : node_candidates(d))
    if (classify_node(d, alpha)) ++count;
  return count;
}

bool check_sink_source_structure(const NewtonDiagram& d) {
  ExponentVector origin(d.dimension());
  int sources = 0;
  for (const auto& node : nodes(d)) {
    if (node.kind != NodeKind::Source) continue;
    if (node.position != origin) return false;
    ++sources;
  }
  return sources == 1;
}

bool is_one_point_per_degree(const NewtonDiagram& d) {
  if (d.empty()) return false;
  std::map<int, int> per_degree;
  for (const auto& [alpha, s] : d.support()) ++per_degree[alpha.total()];
  int expected = d.lower_corner().total();
  for (const auto& [deg, count] : per_degree) {
    if (deg != expected || count != 1) return false;
    ++expected;
  }
  return expected == d.top_degree() + 1;
}

// ---------------------------------------------------------------------------
// Faces

namespace {

ExponentVector key_without(const ExponentVector& alpha, const std::vector<int>& free_axes) {
  ExponentVector key = alpha;
  for (int a : free_axes) key[a] = 0;
  return key;
}

std::vector<std::vector<ExponentVector>> components(
    const std::set<ExponentVector>& points,
    const std::vector<std::pair<int, int>>& moves) {  // (plus axis, minus axis or -1)
  std::vector<std::vector<ExponentVector>> out;
  std::set<ExponentVector> seen;
  for (const auto& start : points) {
    if (seen.count(start)) continue;
    std::vector<ExponentVector> comp{start};
    seen.insert(start);
    for (std::size_t i = 0; i < comp.size(); ++i) {
      ExponentVector cur = comp[i];
      for (auto [plus, minus] : moves) {
        for (int dir : {1, -1}) {
          ExponentVector next = cur.shifted(plus, dir);
          if (minus >= 0) next = next.shifted(minus, -dir);
          if (points.count(next) && !seen.count(next)) {
            seen.insert(next);
            comp.push_back(next);
          }
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::vector<Face> faces(const NewtonDiagram& d) {
  const int n = d.dimension();
  std::vector<Face> out;
  if (n >= 2) {
    for (int k = 0; k < n; ++k) {
      for (int m = k + 1; m < n; ++m) {
        std::vector<int> free_axes{k, m};
        std::map<ExponentVector, std::set<ExponentVector>> planes;
        for (const auto& [alpha, s] : d.support()) planes[key_without(alpha, free_axes)].insert(alpha);
        for (const auto& [key, pts] : planes)
          for (auto& comp : components(pts, {{k, -1}, {m, -1}}))
            out.push_back({Face::Kind::Vertical, free_axes, 0, std::move(comp)});
      }
    }
  }
  if (n >= 3) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int l = j + 1; l < n; ++l) {
          std::vector<int> free_axes{i, j, l};
          std::map<std::pair<int, ExponentVector>, std::set<ExponentVector>> planes;
          for (const auto& [alpha, s] : d.support())
            planes[{alpha.total(), key_without(alpha, free_axes)}].insert(alpha);
          for (const auto& [key, pts] : planes)
            for (auto& comp : components(pts, {{i, j}, {i, l}, {j, l}}))
              out.push_back({Face::Kind::Horizontal, free_axes, key.first, std::move(comp)});
        }
      }
    }
  }
  return out;
}

std::vector<ExponentVector> face_nodes(const NewtonDiagram& d, const Face& face) {
  std::set<ExponentVector> touched;
  if (face.kind == Face::Kind::Vertical) {
    for (const auto& p : face.points) {
      touched.insert(p);
      for (int a : face.axes) touched.insert(p.shifted(a, 1));
    }
  } else {
    for (const auto& p : face.points)
      for (int a : face.axes) touched.insert(p.shifted(a, 1));
  }
  std::vector<ExponentVector> out;
  for (const auto& t : touched)
    if (classify_node(d, t)) out.push_back(t);
  return out;
}

std::vector<Face> top_horizontal_faces(const NewtonDiagram& d) {
  std::vector<Face> out;
  if (d.empty()) return out;
  for (auto& f : faces(d))
    if (f.kind == Face::Kind::Horizontal && f.degree == d.top_degree()) out.push_back(std::move(f));
  return out;
}

// ---------------------------------------------------------------------------
// Views

namespace {

void check_view_axes(int n, int k, int m) {
  if (n < 2) throw InputError("views need dimension >= 2");
  if (k < 0 || k >= n || m < 0 || m >= n || k == m)
    throw InputError("invalid view axis pair (" + std::to_string(k + 1) + "," + std::to_string(m + 1) +
                     ") for dimension " + std::to_string(n));
}

// View coordinates of a point of D: drop x_m, merged slot holds x_k + x_m.
ExponentVector view_coords(const ExponentVector& beta, int k, int m) {
  std::vector<int> out;
  out.reserve(beta.size() - 1);
  for (int i = 0; i < static_cast<int>(beta.size()); ++i) {
    if (i == m) continue;
    out.push_back(i == k ? beta[k] + beta[m] : beta[i]);
  }
  return ExponentVector(std::move(out));
}

}  // namespace

ExponentVector view_embed(int n, int k, int m, const ExponentVector& alpha, int a) {
  check_view_axes(n, k, m);
  if (alpha.size() != static_cast<std::size_t>(n - 1)) throw InputError("view point has wrong length");
  ExponentVector beta(n);
  int src = 0;
  for (int i = 0; i < n; ++i) {
    if (i == m) continue;
    beta[i] = alpha[src++];
  }
  int merged = beta[k];
  beta[k] = a;
  beta[m] = merged - a;
  return beta;
}

NewtonDiagram view(const NewtonDiagram& d, int k, int m) {
  check_view_axes(d.dimension(), k, m);
  // For each line keep the support point with the smallest x_k.
  std::map<ExponentVector, std::pair<int, Sign>> first;
  for (const auto& [beta, s] : d.support()) {
    auto alpha = view_coords(beta, k, m);
    auto it = first.find(alpha);
    if (it == first.end() || beta[k] < it->second.first) first[alpha] = {beta[k], s};
  }
  NewtonDiagram::SupportMap support;
  for (const auto& [alpha, entry] : first) support.emplace(alpha, entry.second);
  return NewtonDiagram(d.dimension() - 1, std::move(support));
}

std::optional<ExponentVector> view_source_point(const NewtonDiagram& d, int k, int m,
                                                const ExponentVector& alpha) {
  check_view_axes(d.dimension(), k, m);
  std::optional<ExponentVector> best;
  for (const auto& [beta, s] : d.support())
    if (view_coords(beta, k, m) == alpha && (!best || beta[k] < (*best)[k])) best = beta;
  return best;
}

std::optional<ExponentVector> corresponding_point(const NewtonDiagram& d, int k, int m,
                                                  const ExponentVector& alpha) {
  check_view_axes(d.dimension(), k, m);
  std::optional<ExponentVector> best;
  auto consider = [&](const ExponentVector& beta) {
    if (view_coords(beta, k, m) == alpha && (!best || beta[k] < (*best)[k])) best = beta;
  };
  for (const auto& [sigma, s] : d.support()) {
    consider(sigma);
    for (int i = 0; i < d.dimension(); ++i) consider(sigma.shifted(i, 1));
  }
  return best;
}

std::size_t count_hidden_nodes(const NewtonDiagram& d, int k, int m) {
  std::size_t full = node_count(d);
  std::size_t seen = node_count(view(d, k, m));
  if (seen > full)
    throw TheoremContradiction("view has more nodes than the diagram", "");
  return full - seen;
}

// ---------------------------------------------------------------------------
// Overhang and outside vertical edges

std::optional<Overhang> find_overhang(const NewtonDiagram& d) {
  const int n = d.dimension();
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) {
      if (k == m) continue;
      std::set<std::pair<int, int>> proj;
      for (const auto& [alpha, s] : d.support()) proj.insert({alpha[k], alpha[m]});
      // Highest b per column a, for the "(a-1, y) not in K for all y >= b" test.
      std::map<int, int> column_top;
      for (auto [a, b] : proj) {
        auto it = column_top.find(a);
        if (it == column_top.end() || b > it->second) column_top[a] = b;
      }
      for (auto [a, b] : proj) {
        if (a == 0 && b == 0) continue;
        if (proj.count({a, b - 1})) continue;
        auto left = column_top.find(a - 1);
        if (left != column_top.end() && left->second >= b) continue;
        return Overhang{k, m, a, b};
      }
    }
  }
  return std::nullopt;
}

bool has_overhang(const NewtonDiagram& d) { return find_overhang(d).has_value(); }

std::vector<ExponentVector> outside_vertical_edge_nodes(const NewtonDiagram& d) {
  const int n = d.dimension();
  auto only_down_along = [&](const ExponentVector& beta, int k) {
    for (int j = 0; j < n; ++j)
      if (j != k && d.at(beta.shifted(j, -1)) != Sign::Zero) return false;
    return true;
  };
  std::set<ExponentVector> found;
  for (const auto& [sigma, s] : d.support()) {
    for (int k = 0; k < n; ++k) {
      ExponentVector top = sigma.shifted(k, 1);
      if (d.at(top) != Sign::Zero || !only_down_along(top, k)) continue;
      for (ExponentVector beta = sigma; d.at(beta) != Sign::Zero && only_down_along(beta, k);
           beta = beta.shifted(k, -1)) {
        bool bottom = d.at(beta.shifted(k, -1)) == Sign::Zero;
        if (!bottom && classify_node(d, beta)) found.insert(beta);
      }
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace ndiag
