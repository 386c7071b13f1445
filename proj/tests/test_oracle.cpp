#include <gtest/gtest.h>

#include "ndiag/dump.hpp"
#include "ndiag/errors.hpp"
#include "ndiag/oracle.hpp"
#include "ndiag/whitney.hpp"

using namespace ndiag;

namespace {

struct BruteCensus {
  std::vector<NewtonDiagram> valid;
  std::map<int, std::size_t> min_nodes;
};

// All 3^k sign patterns on |alpha| <= d-1, nodes found by scanning the
// simplex |alpha| <= d with the definitions spelled out.
BruteCensus brute_force(int n, int d) {
  std::vector<ExponentVector> pts, cands;
  for (const auto& a : SearchSpace(n, d + 1).points) {
    cands.push_back(a);
    if (a.total() <= d - 1) pts.push_back(a);
  }
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < pts.size(); ++i) total *= 3;
  BruteCensus out;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::map<ExponentVector, int> val;
    std::uint64_t c = code;
    int top = -1;
    for (const auto& a : pts) {
      int digit = static_cast<int>(c % 3);
      c /= 3;
      if (digit) {
        val[a] = digit == 1 ? 1 : -1;
        top = std::max(top, a.total());
      }
    }
    auto at = [&](const ExponentVector& a) {
      auto it = val.find(a);
      return it == val.end() ? 0 : it->second;
    };
    int sources_elsewhere = 0, origin_source = 0;
    std::size_t count = 0;
    for (const auto& a : cands) {
      int v = at(a);
      bool any = v != 0, has_p = false, has_n = false;
      for (int j = 0; j < n; ++j) {
        ExponentVector b = a;
        b[j] -= 1;
        int w = at(b);
        any |= w != 0;
        has_p |= w > 0;
        has_n |= w < 0;
      }
      if (!any) continue;
      bool sink = v <= 0 && !has_n;
      bool source = v >= 0 && !has_p;
      if (source) (a.total() == 0 ? origin_source : sources_elsewhere) += 1;
      if (sink || source) ++count;
    }
    if (origin_source != 1 || sources_elsewhere != 0) continue;
    NewtonDiagram::SupportMap m;
    for (const auto& [a, s] : val) m[a] = s > 0 ? Sign::P : Sign::N;
    NewtonDiagram diagram(n, m);
    out.valid.push_back(diagram);
    int size = top + 1;
    auto it = out.min_nodes.find(size);
    if (it == out.min_nodes.end() || count < it->second) out.min_nodes[size] = count;
  }
  return out;
}

}  // namespace

TEST(SearchSpace, Shape) {
  SearchSpace s(3, 3);
  EXPECT_EQ(s.points.size(), 10u);  // C(5, 3)
  EXPECT_EQ(s.assignments(), 59049.0);
  EXPECT_TRUE(std::is_sorted(s.points.begin(), s.points.end()));
  EXPECT_EQ(SearchSpace(4, 2).points.size(), 5u);
  EXPECT_EQ(SearchSpace(5, 4).points.size(), 56u);
  EXPECT_THROW(SearchSpace(0, 2), InputError);
  EXPECT_THROW(SearchSpace(2, 0), InputError);
}

TEST(SearchSpace, BudgetRefusal) {
  EXPECT_THROW(SearchSpace(5, 4).require_budget(true), BudgetExceeded);
  EXPECT_NO_THROW(SearchSpace(3, 3).require_budget(false));
  EXPECT_THROW(verify_bound(4, 4), BudgetExceeded);
  try {
    enumerate_valid_diagrams(6, 4);
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("3^"), std::string::npos);
  }
}

TEST(Enumeration, PrunedMatchesUnpruned) {
  for (auto [n, d] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
    auto pruned = enumerate_valid_diagrams(n, d, {true, 1});
    auto full = enumerate_valid_diagrams(n, d, {false, 1});
    EXPECT_EQ(pruned, full) << n << "," << d;
  }
}

TEST(Enumeration, MatchesBruteForce) {
  for (auto [n, d] : {std::pair{2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
    BruteCensus brute = brute_force(n, d);
    auto pruned = enumerate_valid_diagrams(n, d);
    std::sort(brute.valid.begin(), brute.valid.end(),
              [](const NewtonDiagram& a, const NewtonDiagram& b) { return a.support() < b.support(); });
    std::sort(pruned.begin(), pruned.end(),
              [](const NewtonDiagram& a, const NewtonDiagram& b) { return a.support() < b.support(); });
    EXPECT_EQ(pruned, brute.valid) << n << "," << d;

    BoundReport r = verify_bound(n, d);
    for (const auto& [size, min] : brute.min_nodes) EXPECT_EQ(r.by_size.at(size).min_nodes, min);
  }
}

TEST(Enumeration, WorkerCountIndependent) {
  auto one = enumerate_valid_diagrams(3, 3, {true, 1});
  for (unsigned w : {2u, 3u, 4u, 9u, 10u}) EXPECT_EQ(enumerate_valid_diagrams(3, 3, {true, w}), one);
  BoundReport a = verify_bound(4, 2, {true, 1}), b = verify_bound(4, 2, {true, 5});
  ASSERT_EQ(a.by_size.size(), b.by_size.size());
  for (const auto& [size, c] : a.by_size) {
    EXPECT_EQ(c.valid, b.by_size.at(size).valid);
    EXPECT_EQ(c.minimizer_diagrams, b.by_size.at(size).minimizer_diagrams);
  }
}

TEST(Bound, ThreeByOne) {
  auto all = enumerate_valid_diagrams(3, 1);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0], NewtonDiagram::from_quotient(Polynomial::constant(3, Rational(1))));
  BoundReport r = verify_bound(3, 1);
  EXPECT_EQ(r.by_size.at(1).min_nodes, 4u);
  EXPECT_EQ(r.by_size.at(1).bound, 4u);
}

TEST(Bound, FourByTwo) {
  BoundReport r = verify_bound(4, 2);
  EXPECT_EQ(r.assignments, 243u);
  const SizeCensus& c = r.by_size.at(2);
  EXPECT_EQ(c.min_nodes, 8u);
  EXPECT_EQ(c.bound, 8u);
  EXPECT_EQ(c.one_point_per_degree, c.minimizers);
}

TEST(Bound, ThreeByThree) {
  BoundReport r = verify_bound(3, 3);
  const SizeCensus& c = r.by_size.at(3);
  EXPECT_EQ(c.min_nodes, 8u);
  EXPECT_EQ(c.bound, 8u);
  NewtonDiagram cubic7 = NewtonDiagram::from_quotient(
      hyperplane_quotient(parse_polynomial("x^3 + 3*x^2*z + 3*x*z^2 + z^3 + 3*x*y + 3*y*z + y^3", 3)));
  EXPECT_NE(std::find(c.minimizer_diagrams.begin(), c.minimizer_diagrams.end(), cubic7),
            c.minimizer_diagrams.end());
  EXPECT_LT(c.one_point_per_degree, c.minimizers);
  // Every Whitney diagram of size 3 is a minimizer.
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    NewtonDiagram w = NewtonDiagram::from_quotient(
        hyperplane_quotient(generate(3, 3, WhitneyChooser::seeded(seed)).result));
    EXPECT_NE(std::find(c.minimizer_diagrams.begin(), c.minimizer_diagrams.end(), w),
              c.minimizer_diagrams.end());
  }
}

TEST(Bound, TwoDimensionalHasNoBound) {
  BoundReport r = verify_bound(2, 3);
  for (const auto& [size, c] : r.by_size) {
    EXPECT_FALSE(c.bound.has_value());
    EXPECT_GE(c.min_nodes, static_cast<std::size_t>(size + 1));
  }
}

TEST(Lemma, SimpleEnumeration) {
  auto single = enumerate_simple_diagrams(1, 1);
  ASSERT_EQ(single.size(), 2u);
  for (const auto& f : single) EXPECT_EQ(face_node_count(f).weighted(), 2);
  LemmaReport two = lemma_check(2, 2);
  EXPECT_GT(two.enumerated, 0u);
  EXPECT_GE(two.min_slack, 0);
  LemmaReport three = lemma_check(3, 3, 200, 5);
  EXPECT_EQ(three.random, 200u);
  EXPECT_GE(three.min_slack, 0);
  EXPECT_THROW(enumerate_simple_diagrams(0, 2), InputError);
  EXPECT_THROW(enumerate_simple_diagrams(5, 5), BudgetExceeded);
}

TEST(Audit, FourByOne) {
  AuditReport r = hidden_node_audit(4, 1);
  EXPECT_EQ(r.diagrams, 1u);
  EXPECT_EQ(r.failure_count, 0u);
  NewtonDiagram one = NewtonDiagram::from_quotient(Polynomial::constant(4, Rational(1)));
  EXPECT_EQ(node_count(one), 5u);
  for (int k = 0; k < 4; ++k)
    for (int m = 0; m < 4; ++m)
      if (k != m) EXPECT_EQ(node_count(view(one, k, m)), 4u);
}

TEST(Audit, FourByTwo) {
  AuditReport r = hidden_node_audit(4, 2);
  EXPECT_EQ(r.diagrams, enumerate_valid_diagrams(4, 2).size());
  EXPECT_EQ(r.clause1_failures, 0u);
  EXPECT_EQ(r.clause2_failures, 0u);
  EXPECT_EQ(r.failure_count, 0u);
  EXPECT_THROW(hidden_node_audit(3, 2), InputError);
}
