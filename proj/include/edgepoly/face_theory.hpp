#pragma once

// Combinatorial face test for conv{0, rho(e) : e in A(D)} with D acyclic:
// A_H is a face iff H is path consistent and admissible with respect to D.

#include "edgepoly/digraph.hpp"

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace edgepoly {

/// A path-consistent spanning subgraph H of D with its weight function.
struct WeightedSubgraph {
  DirectedGraph parent;
  DirectedGraph sub;
  std::vector<std::vector<Vertex>> components;  // of H^un, isolated vertices included
  std::vector<int> component_of;                // vertex -> index into components
  std::vector<int> omega;                       // vertex -> weight, index 0 unused

  int weight(Vertex v) const { return omega[static_cast<std::size_t>(v)]; }
};

/// Two undirected paths of H between `from` and `to` disagree on the signed
/// arc count.
struct PathInconsistent {
  Vertex from;
  Vertex to;
};

using WeightOutcome = std::variant<WeightedSubgraph, PathInconsistent>;

/// Breadth-first potential per component of H^un: +1 across an arc along its
/// direction, -1 against it, shifted so each component has minimum 1.
/// Requires D acyclic and A(H) a subset of A(D).
WeightOutcome compute_weight(const DirectedGraph& d, const DirectedGraph& h);

struct CompArc {
  int from;    // component index
  int to;      // component index
  Arc origin;  // the arc of A(D) \ A(H) it comes from
};

/// Multigraph on the components of H^un with one arc per arc of A(D) \ A(H);
/// loops and parallel arcs are kept.
struct CompGraph {
  int node_count = 0;
  std::vector<CompArc> arcs;
};

CompGraph build_comp_graph(const WeightedSubgraph& w);

/// omega(tail) - omega(head) of the originating arc.
int weight_decrease(const WeightedSubgraph& w, const CompArc& e);

/// Indices into CompGraph::arcs forming a directed cycle.
using CompCycle = std::vector<std::size_t>;

/// Every directed cycle of the multigraph: loops as length-one cycles,
/// otherwise cycles on distinct nodes, with each choice among parallel arcs
/// listed separately. Each cycle starts at its smallest node.
std::vector<CompCycle> directed_cycles(const CompGraph& g);

struct Admissibility {
  bool admissible = true;
  std::optional<CompCycle> violating_cycle;  // sum of wd <= -|C|
};

Admissibility check_admissible(const WeightedSubgraph& w, const CompGraph& g);

/// Path consistent (precondition) and admissible; returns the first violating
/// cycle otherwise. Throws PreconditionError on a path-inconsistent H.
Admissibility is_admissible(const DirectedGraph& d, const DirectedGraph& h);

/// Path consistent and admissible.
bool is_face_of_tilde(const DirectedGraph& d, const DirectedGraph& h);

}  // namespace edgepoly
