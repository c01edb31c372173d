#include "edgepoly/edge_polytopes.hpp"
#include "edgepoly/generators.hpp"

#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace edgepoly;
using testing::graph;

namespace {

std::size_t count_family(int n, DigraphFamily f) {
  std::size_t count = 0;
  for_each_canonical_digraph(n, f, [&](const DirectedGraph&) { ++count; });
  return count;
}

}  // namespace

TEST_CASE("adjacency codes round-trip and canonical forms are invariant") {
  auto g = graph(4, {{1, 2}, {2, 3}, {3, 1}, {1, 4}});
  CHECK(decode(4, adjacency_code(g)) == g);
  CHECK(adjacency_code(graph(2, {{1, 2}})) == 0b10);
  auto relabeled = graph(4, {{4, 3}, {3, 2}, {2, 4}, {4, 1}});
  CHECK(canonical_code(g) == canonical_code(relabeled));
  CHECK(is_canonical(canonical_form(relabeled)));
  CHECK(canonical_code(canonical_form(g)) == adjacency_code(canonical_form(g)));
}

TEST_CASE("isomorphism class counts") {
  // Unlabelled digraphs, acyclic digraphs and simple graphs.
  const std::size_t digraphs[] = {1, 3, 16, 218, 9608};
  for (int n = 1; n <= 4; ++n) CHECK(count_family(n, DigraphFamily::All) == digraphs[n - 1]);
  const std::size_t dags[] = {1, 2, 6, 31, 302};
  for (int n = 1; n <= 5; ++n) CHECK(canonical_dags(n).size() == dags[n - 1]);
  const std::size_t simple[] = {1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) CHECK(canonical_undirected(n).size() == simple[n - 1]);
  CHECK_THROWS(for_each_canonical_digraph(6, DigraphFamily::All, [](const DirectedGraph&) {}));
}

TEST_CASE("family filters") {
  for (int n = 2; n <= 4; ++n) {
    for_each_canonical_digraph(n, DigraphFamily::Fano, [](const DirectedGraph& g) { CHECK(is_fano_graph(g)); });
    for_each_canonical_digraph(n, DigraphFamily::ConnectedFano, [](const DirectedGraph& g) {
      CHECK(is_fano_graph(g));
      CHECK(is_connected(g));
    });
  }
  CHECK(count_family(2, DigraphFamily::ConnectedFano) == 1);
  // Connected Fano on 3 vertices: the 3-cycle, its two-chord variants and the
  // symmetric path and triangle.
  std::size_t three = count_family(3, DigraphFamily::ConnectedFano);
  CHECK(three > 1);
  for (const auto& d : canonical_dags(4)) CHECK(is_acyclic(d));
}

TEST_CASE("cycle constructors") {
  CHECK(directed_cycle(3) == testing::three_cycle());
  CHECK(symmetric_cycle(4) == testing::symmetric_square());
  CHECK_THROWS(symmetric_cycle(2));
}

TEST_CASE("glued even cycles") {
  auto glued = glued_even_cycles();
  CHECK_FALSE(glued.empty());
  std::set<AdjacencyCode> codes;
  for (const auto& g : glued) {
    CHECK(is_fano_graph(g));
    CHECK(is_connected(g));
    for (const auto& a : g.arcs()) CHECK_FALSE(g.has_arc(a.head, a.tail));
    CHECK(codes.insert(canonical_code(g)).second);
  }
  // The theta graph: two 4-cycles sharing two consecutive arcs.
  auto theta = canonical_code(graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {3, 5}, {5, 1}}));
  CHECK(codes.count(theta) == 1);
}

TEST_CASE("random sampling is seeded and yields distinct connected Fano graphs") {
  auto a = distinct_random_fano(6, 40, 9);
  auto b = distinct_random_fano(6, 40, 9);
  CHECK(a == b);
  std::set<AdjacencyCode> codes;
  for (const auto& g : a) {
    CHECK(g.vertex_count() == 6);
    CHECK(is_fano_graph(g));
    CHECK(is_connected(g));
    codes.insert(canonical_code(g));
  }
  CHECK(codes.size() == a.size());
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) CHECK(is_fano_graph(random_connected_fano(7, rng)));
}
