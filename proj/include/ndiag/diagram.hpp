#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ndiag/exponent.hpp"
#include "ndiag/polynomial.hpp"

namespace ndiag {

enum class Sign : signed char { Zero = 0, P = 1, N = -1 };

char sign_char(Sign s);  // 'P', 'N' or '.'
Sign sign_of(const Rational& r);

enum class NodeKind { Sink, Source };

enum class Geometry {
  BottomCorner,
  TopCorner,
  VerticalEdge,
  HorizontalEdge,
  VerticalFacial,
  HorizontalFacial,
  Other,
};

std::string_view to_string(NodeKind kind);
std::string_view to_string(Geometry geometry);

struct NodeRecord {
  ExponentVector position;
  NodeKind kind;
  Geometry geometry;

  friend bool operator==(const NodeRecord&, const NodeRecord&) = default;
};

/// Sign pattern {P, N, 0} on Z^n with finite support.
///
/// Axes are 0-based throughout the C++ API (axis 0 is x1). Queries at any
/// lattice point, including ones with negative coordinates, return
/// Sign::Zero off the support.
class NewtonDiagram {
public:
  using SupportMap = std::map<ExponentVector, Sign>;

  explicit NewtonDiagram(int dimension);
  /// Zero entries in `support` are dropped.
  NewtonDiagram(int dimension, SupportMap support);

  /// D(alpha) = sign of the coefficient of x^alpha in q.
  static NewtonDiagram from_quotient(const Polynomial& q);

  int dimension() const { return dimension_; }
  const SupportMap& support() const { return support_; }
  bool empty() const { return support_.empty(); }
  Sign at(const ExponentVector& alpha) const;

  /// Componentwise minimum `a` of the support.
  const ExponentVector& lower_corner() const { return lower_; }
  /// Largest |alpha| on the support (`k`).
  int top_degree() const { return top_; }
  /// k - |a| + 1; zero for the empty diagram.
  int size() const;

  friend bool operator==(const NewtonDiagram&, const NewtonDiagram&) = default;

private:
  int dimension_;
  SupportMap support_;
  ExponentVector lower_;
  int top_ = 0;
};

/// alpha with entry `axis` decremented.
ExponentVector down(const ExponentVector& alpha, int axis);

/// Sink/source test at one lattice point.
std::optional<NodeKind> classify_node(const NewtonDiagram& d, const ExponentVector& alpha);
Geometry classify_geometry(const NewtonDiagram& d, const ExponentVector& alpha);

/// All nodes, sorted by position.
std::vector<NodeRecord> nodes(const NewtonDiagram& d);
/// #(D).
std::size_t node_count(const NewtonDiagram& d);

/// Exactly one source, located at the origin; every other node is a sink.
bool check_sink_source_structure(const NewtonDiagram& d);

/// Support has exactly one point of each degree |a| .. k.
bool is_one_point_per_degree(const NewtonDiagram& d);

struct Face {
  enum class Kind { Vertical, Horizontal };
  Kind kind;
  /// Free axes: two for vertical faces, three for horizontal ones.
  std::vector<int> axes;
  /// Degree |alpha| of the support points (horizontal faces only).
  int degree = 0;
  /// Support points of the face, sorted.
  std::vector<ExponentVector> points;
};

/// Vertical faces are connected components (4-neighbourhood in the two free
/// axes) of the support within each 2-plane with the other n-2 coordinates
/// fixed. Horizontal faces are components of a single-degree slice of the
/// support with n-3 coordinates fixed; neighbours differ by e_i - e_j.
std::vector<Face> faces(const NewtonDiagram& d);

/// Nodes of D touching a face: for vertical faces the nodes among the face
/// points and their up-neighbours within the plane; for horizontal faces the
/// nodes one degree above the face with a nonzero down inside it.
std::vector<ExponentVector> face_nodes(const NewtonDiagram& d, const Face& face);

/// Horizontal faces at the top degree of the support.
std::vector<Face> top_horizontal_faces(const NewtonDiagram& d);

/// Lattice point of D for view coordinates `alpha` (length n-1) with the
/// merged coordinate split as x_k = a, x_m = merged - a.
ExponentVector view_embed(int n, int k, int m, const ExponentVector& alpha, int a);

/// V(D, k, m): the (n-1)-dimensional diagram whose value at alpha is the
/// first nonzero value along the line {x_k + x_m = alpha_k'} ordered by
/// increasing x_k, or zero when the whole line is zero. View coordinates
/// are the coordinates of D with x_m removed; x_k's slot carries the sum.
/// Requires n >= 2 and k != m.
NewtonDiagram view(const NewtonDiagram& d, int k, int m);

/// gamma_{k,m}(alpha): first nonzero point on the line, if any.
std::optional<ExponentVector> view_source_point(const NewtonDiagram& d, int k, int m,
                                                const ExponentVector& alpha);

/// The point of D that a node alpha of V(D,k,m) corresponds to: the first
/// point on the line (increasing x_k) where D or one of its downs is
/// nonzero. Equals view_source_point whenever that point's downs off the
/// line start no earlier.
std::optional<ExponentVector> corresponding_point(const NewtonDiagram& d, int k, int m,
                                                  const ExponentVector& alpha);

/// #(D) - #(V(D,k,m)).
std::size_t count_hidden_nodes(const NewtonDiagram& d, int k, int m);

struct Overhang {
  int k;
  int m;
  int a;
  int b;
};

/// Searches every projection pi(K,k,m) of the support for an overhang point.
std::optional<Overhang> find_overhang(const NewtonDiagram& d);
bool has_overhang(const NewtonDiagram& d);

/// Non-bottom nodes lying on outside vertical edges, sorted and unique.
std::vector<ExponentVector> outside_vertical_edge_nodes(const NewtonDiagram& d);

}  // namespace ndiag
