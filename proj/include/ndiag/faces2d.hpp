#pragma once

#include <vector>

#include "ndiag/diagram.hpp"

namespace ndiag {

/// A 2-dimensional diagram whose bottom nodes all lie in its lowest nonzero
/// row. Rows are the degree levels |alpha|; the point at position p of row r
/// is (p, r - p), so its ups sit at positions p and p+1 of row r+1.
class SimpleDiagram {
public:
  /// Throws InputError unless `d` is 2-dimensional, nonempty and simple.
  explicit SimpleDiagram(NewtonDiagram d);

  /// Wraps without the simplicity check (used for extracted faces, which are
  /// audited separately).
  static SimpleDiagram unchecked(NewtonDiagram d);

  const NewtonDiagram& diagram() const { return diagram_; }
  /// Number of rows carrying support.
  int height() const { return height_; }
  /// Degree of the lowest nonzero row.
  int base_row() const { return base_row_; }
  /// Degree of the highest nonzero row.
  int top_row() const { return diagram_.top_degree(); }

  /// Where the face came from when extracted from a larger diagram: the
  /// in-plane axes and the fixed coordinates of the slice (in-plane entries
  /// zero). Empty `slice` for free-standing diagrams.
  int axis_k = -1;
  int axis_m = -1;
  ExponentVector slice;

  /// Lattice point of the source diagram for a point of this face.
  ExponentVector lift(const ExponentVector& planar) const;

private:
  struct Unchecked {};
  SimpleDiagram(NewtonDiagram d, Unchecked);

  NewtonDiagram diagram_;
  int height_ = 0;
  int base_row_ = 0;
};

bool is_simple(const NewtonDiagram& d);

struct FaceNodeCount {
  int facial = 0;   // f
  int edge = 0;     // e
  int corner = 0;   // c, bottom corners excluded
  int height = 0;   // d

  int weighted() const { return 2 * facial + edge + corner; }
};

FaceNodeCount face_node_count(const SimpleDiagram& f);
/// Same count for any 2-dimensional diagram (bottom-corner nodes skipped).
FaceNodeCount face_node_count(const NewtonDiagram& d);

/// Stacked faces F_1..F_s for the edge (x_k, x_m). Starts at the origin's
/// face in the (k,m)-plane; each later face starts in the row above the
/// previous one at the support point of least degree in the other
/// variables (ties broken lexicographically) and keeps the part of its
/// plane component from that row upwards.
/// Requires a unique source at the origin and k != m.
std::vector<SimpleDiagram> complete_simple_set(const NewtonDiagram& d, int k, int m);

/// Lowest-row support is an interval and, below the top nonzero row, every
/// nonzero point has only nonzero points above it.
bool is_filled(const SimpleDiagram& f);

struct FillStep {
  int row = 0;
  std::vector<int> positions;  // filled left to right or right to left
  Sign first = Sign::P;        // sign of positions[0]; the rest alternate
  int weight_before = 0;
  int weight_after = 0;
};

struct FillResult {
  SimpleDiagram filled;
  std::vector<FillStep> steps;
};

/// Fills gaps in the lowest row, then zeros resting on nonzero points row by
/// row, choosing each alternating run's starting sign to keep 2f+e+c from
/// growing (P on ties). Every step is checked; a step that would raise the
/// count throws TheoremContradiction.
FillResult fill_traced(const SimpleDiagram& f);
SimpleDiagram fill(const SimpleDiagram& f);

/// Sign changes along each nonzero row, bottom to top. Throws InputError
/// unless `f` is filled.
std::vector<int> sign_changes_per_row(const SimpleDiagram& f);

struct RowAccounting {
  std::vector<int> sign_changes;  // s_1 .. s_d
  std::vector<int> lengths;       // l_1 .. l_d
  int nodes_above_top = 0;        // nodes in the row above the top row
  int lower_bound = 0;            // l_d + 1 - s_d + |s_d - s_1|
  int weighted = 0;               // 2f + e + c
  bool consistent = false;        // nodes_above_top == l_d + 1 - s_d,
                                  // weighted >= nodes_above_top and
                                  // lower_bound >= d + 1
  // weighted >= lower_bound. Can fail when a sink in the lowest row (not
  // counted) absorbs the sign changes between rows.
  bool sign_change_bound = false;
};

RowAccounting row_accounting(const SimpleDiagram& f);

}  // namespace ndiag
