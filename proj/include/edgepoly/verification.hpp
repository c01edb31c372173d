#pragma once

// Oracle sweeps: each compares a combinatorial criterion against a geometric
// recomputation over a family of graphs and reports the first disagreement.

#include "edgepoly/classifier.hpp"
#include "edgepoly/digraph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace edgepoly {

struct SweepResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<std::string> counterexample;  // first failing instance

  bool passed() const { return failures == 0; }
};

std::string format_sweep(const SweepResult& r);

/// Canonical digraphs with at least one arc on 1..max_n vertices (max_n <= 5).
std::vector<DirectedGraph> all_small_digraphs(int max_n);
/// Canonical connected Fano digraphs on 2..max_n vertices (max_n <= 5).
std::vector<DirectedGraph> connected_fano_digraphs(int max_n);

/// rigid_certified(g) iff A_G has no square 2-face; every 2-face has 3 or 4
/// vertices. Inputs must be Fano.
SweepResult sweep_main_equivalence(const std::vector<DirectedGraph>& graphs,
                                   RescuePolicy policy = RescuePolicy::ExcludePatternVertices);

/// is_fano_graph iff A_G is Fano iff A_G is terminal and reflexive.
SweepResult sweep_fano_equivalence(const std::vector<DirectedGraph>& graphs);

/// higashitani_smooth iff A_G simplicial iff A_G smooth. Inputs must be Fano.
SweepResult sweep_smooth_equivalence(const std::vector<DirectedGraph>& graphs);

/// is_face_of_tilde(D, H) iff the points rho(H) are the vertex set of a face
/// of conv{0, rho(D)}, over every acyclic D on <= max_n vertices and every
/// arc subset H.
SweepResult sweep_face_criterion(int max_n);

/// Symmetric digraphs on <= max_n vertices: rigid_certified iff the
/// underlying graph has no 4-cycle.
SweepResult sweep_symmetric(int max_n);

/// Acyclic D on <= max_n vertices, no isolated vertex, dim A_D = 2:
/// classify_acyclic_dim2 agrees with the hull's vertex count.
SweepResult sweep_dim2_classification(int max_n);

/// Symmetric 2k-cycles for k in [2, max_k]: dim 2k-1, every (2k-3)-face a
/// simplex, and for k >= 3 rigid_certified.
SweepResult sweep_even_cycles(int max_k = 3);

/// Every glued pair of even directed cycles is rigid_certified and has only
/// triangular 2-faces.
SweepResult sweep_glued_cycles(const std::vector<DirectedGraph>& graphs);

/// On `count` seeded random Fano graphs with a cycle satisfying the mu/dist
/// condition, the constructed functional is <= 1 on every rho(e) with
/// equality along the cycle.
SweepResult sweep_supporting_hyperplane(std::size_t count, std::uint64_t seed, int max_n = 6);

struct VerifyOptions {
  int max_n = 4;
  std::uint64_t seed = 1;
  std::size_t samples = 0;  // random connected Fano graphs on 6 vertices, max_n == 6 only
  RescuePolicy policy = RescuePolicy::ExcludePatternVertices;
};

/// Main, Fano, smoothness and face-criterion sweeps. Throws
/// std::invalid_argument when max_n is outside [1, 6].
std::vector<SweepResult> run_verification(const VerifyOptions& options,
                                          const std::function<void(const SweepResult&)>& on_done = {});

}  // namespace edgepoly
