#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "ndiag/dump.hpp"
#include "ndiag/errors.hpp"
#include "ndiag/oracle.hpp"
#include "ndiag/whitney.hpp"

using namespace ndiag;

namespace {

NewtonDiagram diagram_of(const std::string& p, int n) {
  return NewtonDiagram::from_quotient(hyperplane_quotient(parse_polynomial(p, n)));
}

NewtonDiagram qf_diagram() {
  return NewtonDiagram::from_quotient(parse_polynomial("x^2 - x*y + y^2 + x + y + 1", 2));
}

NewtonDiagram make(int n, std::initializer_list<std::pair<ExponentVector, Sign>> pts) {
  NewtonDiagram::SupportMap m;
  for (const auto& [a, s] : pts) m[a] = s;
  return NewtonDiagram(n, m);
}

// Direct reading of the sink/source definition.
std::optional<NodeKind> oracle_kind(const NewtonDiagram& d, const ExponentVector& a) {
  std::vector<Sign> downs;
  for (int k = 0; k < d.dimension(); ++k) {
    ExponentVector b = a;
    b[k] -= 1;
    downs.push_back(d.at(b));
  }
  Sign v = d.at(a);
  bool all_zero = v == Sign::Zero && std::all_of(downs.begin(), downs.end(), [](Sign s) { return s == Sign::Zero; });
  if (all_zero) return std::nullopt;
  auto all_in = [&](Sign x) {
    return std::all_of(downs.begin(), downs.end(), [&](Sign s) { return s == x || s == Sign::Zero; });
  };
  if ((v == Sign::N || v == Sign::Zero) && all_in(Sign::P)) return NodeKind::Sink;
  if ((v == Sign::P || v == Sign::Zero) && all_in(Sign::N)) return NodeKind::Source;
  return std::nullopt;
}

// Every point of the support's bounding box inflated by one.
std::vector<std::pair<ExponentVector, NodeKind>> oracle_nodes(const NewtonDiagram& d) {
  std::vector<std::pair<ExponentVector, NodeKind>> out;
  if (d.empty()) return out;
  const int n = d.dimension();
  std::vector<int> lo(n, 1 << 20), hi(n, -(1 << 20));
  for (const auto& [a, s] : d.support())
    for (int j = 0; j < n; ++j) {
      lo[j] = std::min(lo[j], a[j] - 1);
      hi[j] = std::max(hi[j], a[j] + 1);
    }
  ExponentVector cur(std::vector<int>(lo.begin(), lo.end()));
  for (;;) {
    if (auto kind = oracle_kind(d, cur)) out.emplace_back(cur, *kind);
    int j = n - 1;
    while (j >= 0 && cur[j] == hi[j]) {
      cur[j] = lo[j];
      --j;
    }
    if (j < 0) break;
    ++cur[j];
  }
  std::sort(out.begin(), out.end());
  return out;
}

// First nonzero value along the view line by brute-force scan of x_k.
Sign oracle_view_value(const NewtonDiagram& d, int k, int m, const ExponentVector& alpha) {
  const int n = d.dimension();
  for (int a = -10; a <= 20; ++a) {
    Sign s = d.at(view_embed(n, k, m, alpha, a));
    if (s != Sign::Zero) return s;
  }
  return Sign::Zero;
}

NewtonDiagram random_diagram(std::mt19937_64& rng, int n, int max_size) {
  std::uniform_int_distribution<int> size_dist(1, max_size), pct(0, 99), sign(0, 1);
  int size = size_dist(rng);
  int density = 20 + pct(rng) % 60;
  NewtonDiagram::SupportMap m;
  for (const auto& a : SearchSpace(n, size).points)
    if (pct(rng) < density) m[a] = sign(rng) ? Sign::P : Sign::N;
  if (m.empty()) m[ExponentVector(n)] = Sign::P;
  return NewtonDiagram(n, m);
}

std::vector<NewtonDiagram> whitney_diagrams() {
  std::vector<NewtonDiagram> out;
  for (int n = 2; n <= 5; ++n)
    for (int d = 1; d <= 6; ++d)
      for (auto chooser : {WhitneyChooser::lex(), WhitneyChooser::seeded(n * 100 + d)})
        out.push_back(NewtonDiagram::from_quotient(hyperplane_quotient(generate(n, d, chooser).result)));
  return out;
}

}  // namespace

TEST(Diagram, FromQuotient) {
  NewtonDiagram one = NewtonDiagram::from_quotient(Polynomial::constant(3, Rational(1)));
  EXPECT_EQ(one.size(), 1);
  EXPECT_EQ(one.at({0, 0, 0}), Sign::P);

  NewtonDiagram d = diagram_of("x^3 + 3*x*y + y^3", 2);
  EXPECT_EQ(d, qf_diagram());
  EXPECT_EQ(d.size(), 3);
  EXPECT_EQ(d.support().size(), 6u);
  EXPECT_EQ(d.at({1, 1}), Sign::N);
  for (ExponentVector a : {ExponentVector{0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}}) EXPECT_EQ(d.at(a), Sign::P);
  EXPECT_EQ(d.at({-1, 5}), Sign::Zero);
}

TEST(Diagram, Cubic7Quotient) {
  NewtonDiagram d = diagram_of("x^3 + 3*x^2*z + 3*x*z^2 + z^3 + 3*x*y + 3*y*z + y^3", 3);
  EXPECT_EQ(d.size(), 3);
  EXPECT_EQ(d.support().size(), 10u);
  EXPECT_EQ(node_count(d), 8u);
  EXPECT_TRUE(check_sink_source_structure(d));
  EXPECT_FALSE(is_one_point_per_degree(d));
}

TEST(Diagram, SizeEqualsDegree) {
  for (int n = 2; n <= 4; ++n)
    for (int d = 1; d <= 5; ++d) {
      Polynomial p = generate(n, d, WhitneyChooser::seeded(d)).result;
      EXPECT_EQ(NewtonDiagram::from_quotient(hyperplane_quotient(p)).size(), d);
    }
}

TEST(Diagram, EmptyDiagram) {
  NewtonDiagram d = NewtonDiagram::from_quotient(hyperplane_quotient(Polynomial::constant(2, Rational(1))));
  EXPECT_TRUE(d.empty());
  EXPECT_EQ(d.size(), 0);
  EXPECT_TRUE(nodes(d).empty());
  EXPECT_FALSE(check_sink_source_structure(d));
}

TEST(Diagram, Down) {
  EXPECT_EQ(down({2, 1, 0}, 0), (ExponentVector{1, 1, 0}));
  EXPECT_EQ(down({0, 0}, 1), (ExponentVector{0, -1}));
  EXPECT_EQ(down(down({1, 1}, 0), 0), (ExponentVector{-1, 1}));
  EXPECT_THROW(down({1, 1}, 2), InputError);
  EXPECT_THROW(down({1, 1}, -1), InputError);
}

TEST(Diagram, ClassifyNode) {
  NewtonDiagram d = qf_diagram();
  EXPECT_EQ(classify_node(d, {1, 1}), NodeKind::Sink);
  EXPECT_EQ(classify_node(d, {0, 0}), NodeKind::Source);
  EXPECT_EQ(classify_node(d, {7, 7}), std::nullopt);
}

TEST(Diagram, NodeCounts) {
  EXPECT_EQ(node_count(NewtonDiagram::from_quotient(Polynomial::constant(3, Rational(1)))), 4u);
  EXPECT_EQ(node_count(NewtonDiagram::from_quotient(Polynomial::constant(4, Rational(1)))), 5u);
  auto list = nodes(qf_diagram());
  ASSERT_EQ(list.size(), 4u);
  EXPECT_EQ(list[0].position, (ExponentVector{0, 0}));
  EXPECT_EQ(list[0].kind, NodeKind::Source);
  std::vector<ExponentVector> sinks;
  for (const auto& node : list)
    if (node.kind == NodeKind::Sink) sinks.push_back(node.position);
  EXPECT_EQ(sinks, (std::vector<ExponentVector>{{0, 3}, {1, 1}, {3, 0}}));
}

TEST(Diagram, SinkSourceStructure) {
  EXPECT_TRUE(check_sink_source_structure(qf_diagram()));
  EXPECT_FALSE(check_sink_source_structure(make(2, {{{0, 0}, Sign::N}})));
  for (const auto& d : whitney_diagrams()) EXPECT_TRUE(check_sink_source_structure(d));
}

TEST(Diagram, Geometry) {
  NewtonDiagram point = make(2, {{{0, 0}, Sign::P}});
  EXPECT_EQ(classify_geometry(point, {0, 0}), Geometry::BottomCorner);
  EXPECT_EQ(classify_geometry(point, {1, 0}), Geometry::TopCorner);
  NewtonDiagram simplex = make(3, {{{0, 0, 0}, Sign::P}, {{1, 0, 0}, Sign::P}, {{0, 1, 0}, Sign::P}, {{0, 0, 1}, Sign::P}});
  EXPECT_EQ(classify_geometry(simplex, {1, 0, 1}), Geometry::HorizontalEdge);
  EXPECT_EQ(classify_geometry(simplex, {1, 1, 1}), Geometry::Other);
  NewtonDiagram::SupportMap two;
  for (const auto& a : SearchSpace(3, 3).points) two[a] = Sign::P;
  EXPECT_EQ(classify_geometry(NewtonDiagram(3, two), {1, 1, 1}), Geometry::HorizontalFacial);
  EXPECT_EQ(classify_geometry(qf_diagram(), {1, 1}), Geometry::VerticalFacial);
  EXPECT_EQ(classify_geometry(qf_diagram(), {2, 0}), Geometry::VerticalEdge);
  EXPECT_EQ(classify_geometry(qf_diagram(), {9, 9}), Geometry::Other);
}

TEST(Diagram, NodesAgreeWithBoxScan) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    NewtonDiagram d = random_diagram(rng, 2 + trial % 3, 4);
    auto expected = oracle_nodes(d);
    auto got = nodes(d);
    ASSERT_EQ(got.size(), expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].position, expected[i].first);
      EXPECT_EQ(got[i].kind, expected[i].second);
      EXPECT_EQ(got[i].geometry, classify_geometry(d, got[i].position));
    }
  }
}

TEST(Diagram, NodeCountPermutationInvariant) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + trial % 3;
    NewtonDiagram d = random_diagram(rng, n, 4);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    NewtonDiagram::SupportMap m;
    for (const auto& [a, s] : d.support()) {
      ExponentVector b(n);
      for (int j = 0; j < n; ++j) b[perm[j]] = a[j];
      m[b] = s;
    }
    EXPECT_EQ(node_count(NewtonDiagram(n, m)), node_count(d));
  }
}

TEST(Diagram, NodesBoundTermsOfPMinusOne) {
  // p - 1 = (s - 1) q: sinks carry positive, sources negative coefficients.
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 3;
    NewtonDiagram shape = random_diagram(rng, n, 4);
    Polynomial::TermMap t;
    std::uniform_int_distribution<int> mag(1, 5);
    for (const auto& [a, s] : shape.support()) t[a] = Rational(s == Sign::P ? mag(rng) : -mag(rng));
    Polynomial q(n, t);
    Polynomial pm1 = (Polynomial::sum_of_variables(n) - Polynomial::constant(n, Rational(1))) * q;
    NewtonDiagram d = NewtonDiagram::from_quotient(q);
    EXPECT_LE(node_count(d), pm1.term_count());
    for (const auto& node : nodes(d)) {
      int sign = pm1.coefficient(node.position).sign();
      EXPECT_EQ(sign, node.kind == NodeKind::Sink ? 1 : -1);
    }
  }
  for (const auto& p : {parse_polynomial("x^3 + 3*x*y + y^3", 2),
                        parse_polynomial("x^3 + 3*x^2*z + 3*x*z^2 + z^3 + 3*x*y + 3*y*z + y^3", 3),
                        generate(4, 4, WhitneyChooser::seeded(3)).result}) {
    NewtonDiagram d = NewtonDiagram::from_quotient(hyperplane_quotient(p));
    EXPECT_LE(node_count(d) - 1, p.term_count());
  }
}

TEST(Faces, Examples) {
  NewtonDiagram point = NewtonDiagram::from_quotient(Polynomial::constant(3, Rational(1)));
  int vertical = 0;
  for (const auto& f : faces(point))
    if (f.kind == Face::Kind::Vertical) {
      ++vertical;
      EXPECT_EQ(f.points.size(), 1u);
    }
  EXPECT_EQ(vertical, 3);

  NewtonDiagram diag = make(2, {{{0, 0}, Sign::P}, {{1, 1}, Sign::P}});
  EXPECT_EQ(faces(diag).size(), 2u);

  // Whitney n=3, d=2 with the lex chooser: q = 1 + x1.
  NewtonDiagram w = NewtonDiagram::from_quotient(hyperplane_quotient(generate(3, 2).result));
  EXPECT_EQ(w, make(3, {{{0, 0, 0}, Sign::P}, {{1, 0, 0}, Sign::P}}));
  std::map<std::vector<int>, int> per_plane;
  for (const auto& f : faces(w))
    if (f.kind == Face::Kind::Vertical) ++per_plane[f.axes];
  EXPECT_EQ(per_plane[(std::vector<int>{0, 1})], 1);
  EXPECT_EQ(per_plane[(std::vector<int>{0, 2})], 1);
  EXPECT_EQ(per_plane[(std::vector<int>{1, 2})], 2);
}

TEST(Faces, TopHorizontalFaceNodes) {
  NewtonDiagram simplex = make(3, {{{0, 0, 0}, Sign::P}, {{1, 0, 0}, Sign::P}, {{0, 1, 0}, Sign::P}, {{0, 0, 1}, Sign::P}});
  auto top = top_horizontal_faces(simplex);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_EQ(top[0].points.size(), 3u);
  EXPECT_EQ(face_nodes(simplex, top[0]).size(), 6u);
}

TEST(View, Examples) {
  NewtonDiagram v = view(qf_diagram(), 0, 1);
  EXPECT_EQ(v.dimension(), 1);
  EXPECT_EQ(v, make(1, {{{0}, Sign::P}, {{1}, Sign::P}, {{2}, Sign::P}}));
  // Ordinary 1-D sink/source rule: source at 0, sink at 3.
  EXPECT_EQ(node_count(v), 2u);
  EXPECT_EQ(count_hidden_nodes(qf_diagram(), 0, 1), 2u);

  NewtonDiagram one = NewtonDiagram::from_quotient(Polynomial::constant(3, Rational(1)));
  NewtonDiagram v1 = view(one, 0, 1);
  EXPECT_EQ(v1, make(2, {{{0, 0}, Sign::P}}));
  EXPECT_EQ(node_count(v1), 3u);
  EXPECT_THROW(view(one, 1, 1), InputError);
  EXPECT_THROW(view(one, 0, 3), InputError);
  EXPECT_THROW(view(make(1, {{{0}, Sign::P}}), 0, 0), InputError);
}

TEST(View, CoordinatesDropTheSecondAxis) {
  NewtonDiagram d = make(3, {{{0, 2, 1}, Sign::N}, {{0, 1, 2}, Sign::P}});
  // V(D,2,3): merged x2 + x3 = 3 in x2's slot, smallest x2 first.
  NewtonDiagram v = view(d, 1, 2);
  EXPECT_EQ(v, make(2, {{{0, 3}, Sign::P}}));
  // V(D,3,2): same slot layout with x2 removed; smallest x3 first.
  EXPECT_EQ(view(d, 2, 1), make(2, {{{0, 3}, Sign::N}}));
  EXPECT_EQ(view_embed(3, 2, 1, {0, 3}, 1), (ExponentVector{0, 2, 1}));
}

TEST(View, AgreesWithLineScan) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 3;
    NewtonDiagram d = random_diagram(rng, n, 4);
    for (int k = 0; k < n; ++k)
      for (int m = 0; m < n; ++m) {
        if (k == m) continue;
        NewtonDiagram v = view(d, k, m);
        for (const auto& a : SearchSpace(n - 1, 9).points) EXPECT_EQ(v.at(a), oracle_view_value(d, k, m, a));
      }
  }
}

TEST(View, FirstNonzeroPointCanMissTheNode) {
  // On the line x1 + x2 = 2 the first nonzero point is (2,0), which is not a
  // node; the view's node there corresponds to the sink at (0,2).
  NewtonDiagram d = make(2, {{{0, 1}, Sign::P}, {{1, 0}, Sign::N}, {{2, 0}, Sign::N}});
  NewtonDiagram v = view(d, 0, 1);
  ASSERT_TRUE(classify_node(v, {2}).has_value());
  EXPECT_EQ(view_source_point(d, 0, 1, {2}), (ExponentVector{2, 0}));
  EXPECT_FALSE(classify_node(d, {2, 0}).has_value());
  EXPECT_EQ(corresponding_point(d, 0, 1, {2}), (ExponentVector{0, 2}));
  EXPECT_EQ(classify_node(d, {0, 2}), classify_node(v, {2}));
}

TEST(View, NodesCorrespondToSameKind) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + trial % 3;
    NewtonDiagram d = random_diagram(rng, n, 4);
    const bool structured = check_sink_source_structure(d);
    for (int k = 0; k < n; ++k)
      for (int m = 0; m < n; ++m) {
        if (k == m) continue;
        NewtonDiagram v = view(d, k, m);
        EXPECT_LE(node_count(v), node_count(d));
        for (const auto& node : nodes(v)) {
          auto beta = corresponding_point(d, k, m, node.position);
          ASSERT_TRUE(beta.has_value());
          EXPECT_EQ(classify_node(d, *beta), node.kind) << diagram_json(d).dump();
        }
        if (structured) EXPECT_TRUE(check_sink_source_structure(v));
      }
  }
}

TEST(Overhang, Examples) {
  EXPECT_FALSE(has_overhang(make(3, {{{0, 0, 0}, Sign::P}})));
  NewtonDiagram gap = make(2, {{{0, 0}, Sign::P}, {{2, 0}, Sign::P}});
  auto w = find_overhang(gap);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->a, 2);
  EXPECT_EQ(w->b, 0);
  // A point floating above the x1-x2 plane with a gap under it.
  NewtonDiagram floating = make(3, {{{0, 0, 0}, Sign::P}, {{1, 0, 0}, Sign::P}, {{0, 0, 2}, Sign::P}});
  EXPECT_TRUE(has_overhang(floating));
}

TEST(OutsideEdges, Examples) {
  NewtonDiagram column = make(2, {{{0, 0}, Sign::P}, {{0, 1}, Sign::N}, {{0, 2}, Sign::P}});
  EXPECT_EQ(outside_vertical_edge_nodes(column), (std::vector<ExponentVector>{{0, 1}, {0, 2}}));
  EXPECT_TRUE(outside_vertical_edge_nodes(qf_diagram()).empty());
}

TEST(UniqueSource, WhitneyAndEnumeratedDiagrams) {
  auto check = [](const NewtonDiagram& d) {
    ASSERT_TRUE(check_sink_source_structure(d));
    EXPECT_FALSE(has_overhang(d)) << diagram_json(d).dump();
    EXPECT_TRUE(outside_vertical_edge_nodes(d).empty()) << diagram_json(d).dump();
  };
  for (const auto& d : whitney_diagrams()) check(d);
  for (auto [n, size] : {std::pair{2, 3}, {3, 3}, {4, 2}})
    for (const auto& d : enumerate_valid_diagrams(n, size)) check(d);
}

TEST(Dump, JsonShapeAndRoundTrip) {
  Json j = diagram_json(qf_diagram());
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"dimension", "points", "size", "nodes"}));
  EXPECT_EQ(j["nodes"].size(), 4u);
  EXPECT_EQ(j["points"][0]["sign"], "P");
  EXPECT_EQ(diagram_from_json(j), qf_diagram());
  EXPECT_THROW(diagram_from_json(Json{{"dimension", 2}}), InputError);
}

TEST(Dump, Ascii) {
  EXPECT_EQ(render_ascii(qf_diagram()), "2 | P N P\n1 | P P\n0 | P\n");
}
