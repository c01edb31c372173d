#pragma once

#include "edgepoly/digraph.hpp"
#include "edgepoly/lattice_polytope.hpp"

#include <vector>

namespace testing {

inline edgepoly::DirectedGraph graph(int n, std::vector<edgepoly::Arc> arcs) {
  return edgepoly::DirectedGraph(n, arcs);
}

inline std::vector<edgepoly::Point> points(std::vector<std::vector<int>> rows) {
  std::vector<edgepoly::Point> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

inline edgepoly::LatticePolytope polytope(std::vector<std::vector<int>> rows) {
  return edgepoly::LatticePolytope(points(std::move(rows)));
}

// C1: (i1,i2),(i1,i4),(i3,i2),(i3,i4) on 1..4.
inline edgepoly::DirectedGraph c1() { return graph(4, {{1, 2}, {1, 4}, {3, 2}, {3, 4}}); }
// C2: (i1,i2),(i2,i3),(i1,i4),(i4,i3) on 1..4.
inline edgepoly::DirectedGraph c2() { return graph(4, {{1, 2}, {2, 3}, {1, 4}, {4, 3}}); }

inline edgepoly::DirectedGraph three_cycle() { return graph(3, {{1, 2}, {2, 3}, {3, 1}}); }

inline edgepoly::DirectedGraph symmetric_square() {
  return graph(4, {{1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 3}, {4, 1}, {1, 4}});
}

}  // namespace testing
