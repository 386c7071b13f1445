#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ndiag/diagram.hpp"
#include "ndiag/faces2d.hpp"

namespace ndiag {

/// Assignments above this count are refused.
inline constexpr double kAssignmentBudget = 1e8;

/// Lattice points alpha >= 0 with |alpha| <= d-1 in lexicographic order.
struct SearchSpace {
  int n = 0;
  int d = 0;
  std::vector<ExponentVector> points;

  SearchSpace(int n, int d);

  /// 3^|points|.
  double assignments() const;
  /// 3^(|points|-1): the origin is forced to P by the source condition.
  double pruned_estimate() const;
  /// Throws BudgetExceeded with the estimate when over kAssignmentBudget.
  void require_budget(bool pruned) const;

  /// Signs for `points`, in order; 0 = zero, 1 = P, 2 = N.
  NewtonDiagram decode(const std::vector<std::uint8_t>& code) const;
};

struct EnumerationOptions {
  bool pruned = true;
  unsigned workers = 1;
};

/// Every diagram on the search space with a unique source at the origin and
/// all other nodes sinks, in base-3 counter order (point 0 most significant,
/// digits 0 < P < N). Pruned runs fix the origin to P and cut a branch as
/// soon as a source away from the origin is fully determined; unpruned runs
/// classify every complete assignment with the generic node scan.
std::vector<NewtonDiagram> enumerate_valid_diagrams(int n, int d, EnumerationOptions options = {});

struct SizeCensus {
  int size = 0;
  std::uint64_t valid = 0;
  std::size_t min_nodes = 0;
  std::optional<std::size_t> bound;  // (n-1) size + 2 for n >= 3
  std::uint64_t minimizers = 0;
  std::uint64_t one_point_per_degree = 0;  // minimizers with one point per degree
  std::vector<NewtonDiagram> minimizer_diagrams;
};

struct BoundReport {
  int n = 0;
  int d = 0;
  std::uint64_t assignments = 0;  // 3^points, before pruning
  std::size_t points = 0;
  std::uint64_t leaves = 0;  // complete assignments reached
  std::map<int, SizeCensus> by_size;
};

/// Minimum #(D) and minimizer census for each actual size 1..d. Throws
/// TheoremContradiction (with the offending diagram) when a minimum falls
/// below (n-1) size + 2 for n >= 3, or when for n >= 4 a minimizer lacks one
/// point per degree. The result is independent of the worker count.
BoundReport verify_bound(int n, int d, EnumerationOptions options = {});

/// Simple diagrams inside a parallelogram of `height` rows and `width`
/// positions: row r, position p is the point (p, r + width - 1 - p). Every
/// nonempty simple assignment, in base-3 counter order.
std::vector<SimpleDiagram> enumerate_simple_diagrams(int height, int width);

/// Random simple diagram: a random lowest row of up to `max_width` points,
/// then up to `max_height` - 1 rows whose points are nonzero only above
/// support.
SimpleDiagram random_simple_diagram(std::mt19937_64& rng, int max_height = 5, int max_width = 5);

struct LemmaReport {
  int max_height = 0;
  int max_width = 0;
  std::uint64_t enumerated = 0;  // simple diagrams checked exhaustively
  std::uint64_t random = 0;      // random simple diagrams checked
  std::uint64_t fill_steps = 0;
  int min_slack = 0;  // min over checked diagrams of 2f+e+c - (height+1)
  std::uint64_t sign_change_shortfalls = 0;  // filled diagrams with 2f+e+c below
                                             // l_d + 1 - s_d + |s_d - s_1|
};

/// 2f+e+c >= height+1 on each diagram, fill non-increasing and filled, and
/// the row accounting consistent. Throws TheoremContradiction on the first
/// failure with the diagram dump.
void check_simple_diagram(const SimpleDiagram& f, LemmaReport& report);
LemmaReport lemma_check(int max_height, int max_width, std::uint64_t random_count = 0,
                        std::uint64_t seed = 1);

struct SymmetricReport {
  int max_degree = 0;
  std::uint64_t diagrams = 0;          // nonzero symmetric diagrams checked
  std::uint64_t single_point = 0;      // #(D) = 3 branch
  std::uint64_t hidden_two = 0;        // deficit >= 2 branch
  std::uint64_t dehomogenized_mismatch = 0;  // #(D) != node count of the flip
};

/// Prop. dichotomy on every nonzero symmetric diagram of degree 0..max_degree.
SymmetricReport symmetric_dichotomy(int max_degree);

struct AuditFailure {
  int clause = 0;  // 1: deficit >= size, 2: deficit >= size + 1
  std::size_t best_deficit = 0;
  NewtonDiagram diagram{1};
};

struct AuditReport {
  int n = 0;
  int d = 0;
  std::uint64_t diagrams = 0;
  std::uint64_t clause2_triggered = 0;   // facial node in a complete set or a large top face
  std::uint64_t facial_triggers = 0;     // of which via a facial node
  std::uint64_t top_face_triggers = 0;   // of which via a top face with > 3 nodes
  std::vector<AuditFailure> failures;    // first few, in enumeration order
  std::uint64_t failure_count = 0;
  std::uint64_t clause1_failures = 0;
  std::uint64_t clause2_failures = 0;
};

/// Hidden-node audit on all valid diagrams of size <= d in dimension n >= 4.
AuditReport hidden_node_audit(int n, int d, EnumerationOptions options = {});

}  // namespace ndiag
