#pragma once

#include "edgepoly/digraph.hpp"
#include "edgepoly/lattice_polytope.hpp"

#include <functional>
#include <stdexcept>
#include <vector>

namespace edgepoly {

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// e_tail - e_head in Z^n.
Point rho(const Arc& arc, int n);

/// conv{rho(e) : e in A(G)}. Throws PreconditionError when G has no arcs.
LatticePolytope directed_edge_polytope(const DirectedGraph& g);
/// conv{+-rho(e) : e in E(U)}.
LatticePolytope symmetric_edge_polytope(const UndirectedGraph& u);
/// conv{0, rho(e) : e in A(D)} for acyclic D.
LatticePolytope tilde_polytope(const DirectedGraph& d);

/// Equivalent to A_G being Fano, and to A_G being terminal and reflexive.
bool is_fano_graph(const DirectedGraph& g);

/// A cycle walk with as many forward as backward arcs. `mu` is indexed by
/// vertex (size n + 1, entries off the cycle are unused) and satisfies
/// mu(tail) = mu(head) + 1 along every cycle arc with minimum 0 on the cycle.
struct HomogeneousCycle {
  CycleWalk walk;
  std::vector<Arc> delta_plus;
  std::vector<Arc> delta_minus;
  std::vector<int> mu;

  int mu_at(Vertex v) const { return mu[static_cast<std::size_t>(v)]; }
};

/// nullopt when the walk is not homogeneous. Length-two antiparallel walks are
/// never homogeneous: both arcs point along the traversal.
std::optional<HomogeneousCycle> as_homogeneous(const CycleWalk& walk, int n);

void for_each_homogeneous_cycle(const DirectedGraph& g,
                                const std::function<bool(const HomogeneousCycle&)>& visit);
std::vector<HomogeneousCycle> homogeneous_cycles(const DirectedGraph& g);

/// mu(a) - mu(b) <= dist(a, b) for all ordered pairs of distinct cycle vertices.
bool mu_dist_condition(const DistanceMatrix& dist, const HomogeneousCycle& c);
bool mu_dist_condition(const DirectedGraph& g, const HomogeneousCycle& c);

/// First ordered pair (a, b) violating the inequality, if any.
std::optional<std::pair<Vertex, Vertex>> mu_dist_violation(const DistanceMatrix& dist,
                                                           const HomogeneousCycle& c);

/// {x : a . x = 1} with a . rho(e) <= 1 on every arc and equality on the cycle.
struct SupportingHyperplane {
  std::vector<int> coefficients;  // a_1 .. a_n stored at index 0 .. n-1
  std::vector<Arc> face_arcs;     // arcs with a . rho(e) == 1

  int at(Vertex v) const { return coefficients[static_cast<std::size_t>(v - 1)]; }
};

/// Coefficients a_k = mu(k) on the cycle and
/// max({a_{i_j} - dist(i_j, k)} u {0}) elsewhere (infinite distances skipped).
/// Requires a Fano graph and the mu/dist condition; the support property is
/// checked before returning.
SupportingHyperplane supporting_hyperplane(const DirectedGraph& g, const HomogeneousCycle& c);

/// No homogeneous cycle satisfies the mu/dist condition. Requires a Fano graph.
/// Equivalent to X_G smooth and to A_G simplicial.
bool higashitani_smooth(const DirectedGraph& g);

/// The first homogeneous cycle satisfying the mu/dist condition, if any.
std::optional<HomogeneousCycle> find_supporting_cycle(const DirectedGraph& g);

}  // namespace edgepoly
