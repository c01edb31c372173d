#include "edgepoly/classifier.hpp"
#include "edgepoly/edge_polytopes.hpp"
#include "edgepoly/generators.hpp"
#include "edgepoly/verification.hpp"

#include <doctest.h>

#include "helpers.hpp"

using namespace edgepoly;
using testing::graph;

TEST_CASE("C1 search") {
  auto w = find_c1(testing::c1());
  REQUIRE(w);
  CHECK(w->vertices == std::array<Vertex, 4>{1, 2, 3, 4});
  CHECK_FALSE(find_c1(testing::c2()));
  CHECK_FALSE(find_c1(testing::three_cycle()));
  auto sq = find_c1(testing::symmetric_square());
  REQUIRE(sq);
  for (const auto& a : sq->arcs()) CHECK(testing::symmetric_square().has_arc(a.tail, a.head));
}

TEST_CASE("C2 occurrences and their rescues") {
  auto plain = c2_occurrences(testing::c2());
  REQUIRE(plain.size() == 1);
  CHECK(plain[0].vertices == std::array<Vertex, 4>{1, 2, 3, 4});
  CHECK(std::holds_alternative<NoRescue>(plain[0].rescue));
  CHECK(find_bad_c2(testing::c2()));

  auto chord = graph(4, {{1, 2}, {2, 3}, {1, 4}, {4, 3}, {1, 3}});
  REQUIRE(c2_occurrences(chord).size() == 1);
  CHECK(std::holds_alternative<EdgeRescue>(c2_occurrences(chord)[0].rescue));
  CHECK_FALSE(find_bad_c2(chord));

  auto via5 = graph(5, {{1, 2}, {2, 3}, {1, 4}, {4, 3}, {1, 5}, {5, 3}});
  auto occ = c2_occurrences(via5);
  REQUIRE_FALSE(occ.empty());
  CHECK(occ[0].vertices == std::array<Vertex, 4>{1, 2, 3, 4});
  CHECK(occ[0].rescue == Rescue{VertexRescue{5}});
  CHECK_FALSE(find_bad_c2(via5));

  // Under the unrestricted reading the middle vertex itself is a rescue.
  auto loose = c2_occurrences(testing::c2(), RescuePolicy::Unrestricted);
  REQUIRE(loose.size() == 1);
  CHECK(loose[0].rescue == Rescue{VertexRescue{2}});
  CHECK_FALSE(find_bad_c2(testing::c2(), RescuePolicy::Unrestricted));
}

TEST_CASE("rigidity certificates") {
  CHECK(rigid_certified(testing::three_cycle()).certified);
  auto sq = rigid_certified(testing::symmetric_square());
  CHECK_FALSE(sq.certified);
  REQUIRE(sq.witness);
  CHECK(witness_kind(*sq.witness) == "C1");

  auto two = graph(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}});
  CHECK(rigid_certified(two).certified);

  // The witness is reported in the labels of the input, not the component's.
  auto mixed = graph(7, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 4}, {5, 6}, {6, 5}, {6, 7}, {7, 6}, {7, 4}, {4, 7}});
  auto v = rigid_certified(mixed);
  CHECK_FALSE(v.certified);
  REQUIRE(v.witness);
  auto ws = witness_vertices(*v.witness);
  for (Vertex x : ws) CHECK(x >= 4);
  CHECK_THROWS_AS(rigid_certified(graph(3, {{1, 2}, {2, 3}})), PreconditionError);
  CHECK_THROWS_WITH_AS(rigid_certified(graph(4, {{1, 2}, {2, 3}, {3, 1}, {1, 4}})),
                       doctest::Contains("arc (1,4) lies on no directed cycle"), PreconditionError);
}

TEST_CASE("two-face census") {
  auto sq = two_face_census(testing::symmetric_square());
  CHECK(sq.count(4) == 1);
  CHECK(sq.at(4) > 0);
  CHECK(two_face_census(testing::three_cycle()).empty());
  auto six = two_face_census(symmetric_cycle(6));
  CHECK(six.count(4) == 0);
  CHECK(six.at(3) > 0);
}

TEST_CASE("acyclic two-dimensional shapes") {
  CHECK(classify_acyclic_dim2(testing::c1()) == Dim2Shape::Square);
  CHECK(classify_acyclic_dim2(testing::c2()) == Dim2Shape::Square);
  CHECK(classify_acyclic_dim2(graph(4, {{1, 2}, {2, 3}, {3, 4}})) == Dim2Shape::Triangle);
  CHECK(classify_acyclic_dim2(graph(3, {{1, 2}, {2, 3}, {1, 3}})) == Dim2Shape::Triangle);
  CHECK_THROWS_AS(classify_acyclic_dim2(testing::three_cycle()), PreconditionError);
  CHECK_THROWS_AS(classify_acyclic_dim2(graph(5, {{1, 2}, {1, 4}, {3, 2}, {3, 4}})), PreconditionError);
  CHECK_THROWS_AS(classify_acyclic_dim2(graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}})), PreconditionError);
}

TEST_CASE("full reports") {
  auto tri = full_report(testing::three_cycle(), {.oracle = true});
  CHECK(tri.fano);
  CHECK(tri.reflexive_terminal);
  CHECK(tri.dim == 2);
  CHECK(tri.smooth_qfactorial);
  CHECK(tri.rigid_certified);
  CHECK_FALSE(tri.witness);
  CHECK(tri.components.empty());

  auto sq = full_report(testing::symmetric_square(), {.oracle = true});
  CHECK(sq.dim == 3);
  CHECK_FALSE(sq.smooth_qfactorial);
  CHECK(sq.codim2_smooth);
  CHECK_FALSE(sq.codim3_qfactorial);
  CHECK_FALSE(sq.rigid_certified);
  CHECK(sq.witness);

  auto two = full_report(graph(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}}), {.oracle = true});
  CHECK(two.dim == 4);
  CHECK(two.rigid_certified);
  CHECK(two.components.size() == 2);

  auto bad = full_report(graph(4, {{1, 2}, {2, 3}, {3, 1}, {1, 4}}));
  CHECK_FALSE(bad.fano);
  CHECK_FALSE(bad.reflexive_terminal);
  CHECK_FALSE(bad.rigid_certified);
  CHECK(bad.dim == directed_edge_polytope(graph(4, {{1, 2}, {2, 3}, {3, 1}, {1, 4}})).dim());
  CHECK_THROWS_AS(full_report(graph(3, {})), PreconditionError);
}

TEST_CASE("oracle mode agrees on every connected Fano graph with n <= 4") {
  for (const auto& g : connected_fano_digraphs(4)) CHECK_NOTHROW(full_report(g, {.oracle = true}));
}

TEST_CASE("smooth implies rigid") {
  for (const auto& g : connected_fano_digraphs(5)) {
    auto r = full_report(g);
    if (r.smooth_qfactorial) CHECK(r.rigid_certified);
    CHECK(r.rigid_certified == (r.codim2_smooth && r.codim3_qfactorial));
  }
}

TEST_CASE("the unrestricted rescue reading is refuted by the geometry") {
  auto graphs = connected_fano_digraphs(4);
  CHECK(sweep_main_equivalence(graphs).passed());
  auto mutated = sweep_main_equivalence(graphs, RescuePolicy::Unrestricted);
  CHECK_FALSE(mutated.passed());
  CHECK(mutated.counterexample);
}
