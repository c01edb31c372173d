#include "edgepoly/digraph.hpp"
#include "edgepoly/generators.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

#include "helpers.hpp"

using namespace edgepoly;
using testing::graph;

namespace {

// Floyd-Warshall with -1 for unreachable.
std::vector<std::vector<int>> floyd(const DirectedGraph& g) {
  const int n = g.vertex_count();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n + 1, std::vector<int>(n + 1, inf));
  for (const auto& a : g.arcs()) d[a.tail][a.head] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return d;
}

// Simple cycles (length >= 3) of the underlying graph by brute-force DFS over
// vertex sequences, each weighted by its number of arc realisations, plus the
// antiparallel pairs.
std::size_t count_walks_by_dfs(const DirectedGraph& g) {
  const int n = g.vertex_count();
  auto arcs_between = [&](Vertex u, Vertex v) { return int(g.has_arc(u, v)) + int(g.has_arc(v, u)); };
  std::size_t total = 0;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (g.has_arc(u, v) && g.has_arc(v, u)) ++total;
  std::vector<Vertex> seq;
  std::vector<bool> used(n + 1, false);
  std::function<void()> grow = [&] {
    Vertex last = seq.back();
    if (seq.size() >= 3 && arcs_between(last, seq.front()) > 0 && seq[1] < last) {
      std::size_t ways = 1;
      for (std::size_t i = 0; i < seq.size(); ++i)
        ways *= static_cast<std::size_t>(arcs_between(seq[i], seq[(i + 1) % seq.size()]));
      total += ways;
    }
    for (Vertex w = seq.front() + 1; w <= n; ++w) {
      if (used[w] || arcs_between(last, w) == 0) continue;
      used[w] = true;
      seq.push_back(w);
      grow();
      seq.pop_back();
      used[w] = false;
    }
  };
  for (Vertex s = 1; s <= n; ++s) {
    seq = {s};
    used.assign(n + 1, false);
    used[s] = true;
    grow();
  }
  return total;
}

bool brute_4cycle(const UndirectedGraph& u) {
  const int n = u.vertex_count();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d) {
          std::vector<int> s{a, b, c, d};
          std::sort(s.begin(), s.end());
          if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue;
          if (u.has_edge(a, b) && u.has_edge(b, c) && u.has_edge(c, d) && u.has_edge(d, a)) return true;
        }
  return false;
}

}  // namespace

TEST_CASE("construction rejects loops, duplicates and out-of-range vertices") {
  CHECK_THROWS_AS(graph(2, {{1, 1}}), GraphError);
  CHECK_THROWS_AS(graph(2, {{1, 2}, {1, 2}}), GraphError);
  CHECK_THROWS_AS(graph(2, {{1, 3}}), GraphError);
  CHECK_THROWS_AS(graph(2, {{0, 1}}), GraphError);
  auto g = graph(3, {{2, 3}, {1, 2}});
  CHECK(g.arcs().front() == Arc{1, 2});
  CHECK(g.has_arc(2, 3));
  CHECK_FALSE(g.has_arc(3, 2));
}

TEST_CASE("connected components") {
  using C = std::vector<std::vector<Vertex>>;
  CHECK(connected_components(graph(4, {{1, 2}, {2, 1}, {3, 4}, {4, 3}})) == C{{1, 2}, {3, 4}});
  CHECK(connected_components(testing::three_cycle()) == C{{1, 2, 3}});
  CHECK(connected_components(graph(2, {})) == C{{1}, {2}});
}

TEST_CASE("distances") {
  auto c3 = testing::three_cycle();
  CHECK(dist(c3, 1, 2) == 1);
  CHECK(dist(c3, 2, 1) == 2);
  CHECK_FALSE(dist(graph(2, {{1, 2}}), 2, 1).has_value());
  CHECK(dist(graph(3, {{1, 2}, {2, 3}, {1, 3}}), 1, 3) == 1);
  CHECK_THROWS(dist(c3, 1, 1));
  CHECK_THROWS(DistanceMatrix(c3)(2, 2));
}

TEST_CASE("distance matrix agrees with Floyd-Warshall and satisfies the triangle inequality") {
  for (int n = 2; n <= 4; ++n)
    for_each_canonical_digraph(n, DigraphFamily::All, [&](const DirectedGraph& g) {
      auto ref = floyd(g);
      DistanceMatrix d(g);
      for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = 1; v <= n; ++v) {
          if (u == v) continue;
          CHECK(d(u, v).value_or(-1) == ref[u][v]);
          for (Vertex w = 1; w <= n; ++w) {
            if (w == u || w == v || !d(u, v) || !d(v, w) || u == w) continue;
            REQUIRE(d(u, w));
            CHECK(*d(u, w) <= *d(u, v) + *d(v, w));
          }
        }
    });
}

TEST_CASE("acyclicity and arcs on cycles") {
  CHECK_FALSE(is_acyclic(graph(2, {{1, 2}, {2, 1}})));
  CHECK(is_acyclic(testing::c1()));
  CHECK_FALSE(is_acyclic(testing::three_cycle()));
  CHECK(every_arc_on_directed_cycle(testing::symmetric_square()));
  auto pendant = graph(4, {{1, 2}, {2, 3}, {3, 1}, {1, 4}});
  CHECK_FALSE(every_arc_on_directed_cycle(pendant));
  CHECK(first_arc_off_cycle(pendant) == Arc{1, 4});
  CHECK(every_arc_on_directed_cycle(graph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}})));
}

TEST_CASE("every arc on a cycle iff both endpoints reach each other") {
  for (int n = 2; n <= 4; ++n)
    for_each_canonical_digraph(n, DigraphFamily::All, [&](const DirectedGraph& g) {
      auto ref = floyd(g);
      bool expected = true;
      for (const auto& a : g.arcs()) expected = expected && ref[a.head][a.tail] > 0;
      CHECK(every_arc_on_directed_cycle(g) == expected);
    });
}

TEST_CASE("cycle walk examples") {
  CHECK(enumerate_cycle_walks(testing::three_cycle()).size() == 1);
  CHECK(enumerate_cycle_walks(graph(2, {{1, 2}, {2, 1}})).size() == 1);
  auto c1 = enumerate_cycle_walks(testing::c1());
  REQUIRE(c1.size() == 1);
  CHECK(c1[0].length() == 4);
  CHECK(c1[0].vertices.front() == 1);
}

TEST_CASE("cycle walk count matches an independent DFS counter on all digraphs with n <= 4") {
  for (int n = 2; n <= 4; ++n)
    for_each_canonical_digraph(n, DigraphFamily::All, [&](const DirectedGraph& g) {
      auto walks = enumerate_cycle_walks(g);
      CHECK(walks.size() == count_walks_by_dfs(g));
      for (const auto& w : walks) {
        REQUIRE(w.vertices.size() == w.arcs.size());
        for (std::size_t j = 0; j < w.length(); ++j) {
          Vertex a = w.vertices[j], b = w.vertices[(j + 1) % w.length()];
          Arc expected = w.forward[j] ? Arc{a, b} : Arc{b, a};
          CHECK(w.arcs[j] == expected);
          CHECK(g.has_arc(expected.tail, expected.head));
        }
      }
    });
}

TEST_CASE("even cycles and 4-cycles") {
  UndirectedGraph square(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  CHECK(has_even_cycle(square));
  CHECK(has_4cycle(square));
  UndirectedGraph triangle(3, {{1, 2}, {2, 3}, {3, 1}});
  CHECK_FALSE(has_even_cycle(triangle));
  CHECK_FALSE(has_4cycle(triangle));
  UndirectedGraph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(has_even_cycle(k4));
  CHECK(has_4cycle(k4));
  UndirectedGraph hexagon(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}});
  CHECK(has_even_cycle(hexagon));
  CHECK_FALSE(has_4cycle(hexagon));
}

TEST_CASE("has_4cycle matches brute force on all graphs with n <= 6") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& u : canonical_undirected(n)) CHECK(has_4cycle(u) == brute_4cycle(u));
}

TEST_CASE("induced subgraphs relabel in order") {
  auto g = graph(5, {{2, 4}, {4, 5}, {5, 2}, {1, 3}});
  auto h = induced_subgraph(g, {2, 4, 5});
  CHECK(h == graph(3, {{1, 2}, {2, 3}, {3, 1}}));
  CHECK(underlying(g).has_edge(4, 2));
  CHECK(symmetric_digraph(underlying(g)).is_symmetric());
}
