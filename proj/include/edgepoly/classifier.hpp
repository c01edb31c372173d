#pragma once

// Decision procedure for "smooth in codimension 2 and Q-factorial in
// codimension 3" of the toric Fano variety of a digraph, via the two
// forbidden four-vertex patterns C1 and C2.

#include "edgepoly/digraph.hpp"
#include "edgepoly/lattice_polytope.hpp"

#include <array>
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace edgepoly {

/// Arcs (i1,i2), (i1,i4), (i3,i2), (i3,i4) on four distinct vertices.
struct C1Witness {
  std::array<Vertex, 4> vertices;
  std::array<Arc, 4> arcs() const;
  bool operator==(const C1Witness&) const = default;
};

struct NoRescue {
  bool operator==(const NoRescue&) const = default;
};
/// The chord (i1,i3) is an arc.
struct EdgeRescue {
  bool operator==(const EdgeRescue&) const = default;
};
/// A two-path i1 -> j -> i3 through a vertex j outside the pattern.
struct VertexRescue {
  Vertex j;
  bool operator==(const VertexRescue&) const = default;
};
using Rescue = std::variant<NoRescue, EdgeRescue, VertexRescue>;

/// Arcs (i1,i2), (i2,i3), (i1,i4), (i4,i3) on four distinct vertices.
struct C2Witness {
  std::array<Vertex, 4> vertices;
  Rescue rescue;
  std::array<Arc, 4> arcs() const;
  bool operator==(const C2Witness&) const = default;
};

using Witness = std::variant<C1Witness, C2Witness>;

/// Which two-paths i1 -> j -> i3 rescue a C2 occurrence.
enum class RescuePolicy {
  /// j must avoid the pattern's own middle vertices i2, i4.
  ExcludePatternVertices,
  /// Any j; this always succeeds through i2, so C2 never counts.
  Unrestricted,
};

/// Lexicographically least ordered 4-tuple carrying C1.
std::optional<C1Witness> find_c1(const DirectedGraph& g);

/// Every C2 occurrence in lexicographic order of (i1,i2,i3,i4) with i2 < i4.
std::vector<C2Witness> c2_occurrences(const DirectedGraph& g,
                                      RescuePolicy policy = RescuePolicy::ExcludePatternVertices);

/// Lexicographically least C2 occurrence without a rescue.
std::optional<C2Witness> find_bad_c2(const DirectedGraph& g,
                                     RescuePolicy policy = RescuePolicy::ExcludePatternVertices);

struct RigidityVerdict {
  bool certified = false;
  std::optional<Witness> witness;  // in the labels of the input graph
};

/// No C1 and no unrescued C2 in any connected component. Requires a Fano
/// graph with at least one arc.
RigidityVerdict rigid_certified(const DirectedGraph& g,
                                RescuePolicy policy = RescuePolicy::ExcludePatternVertices);

/// Vertex counts of the 2-faces of A_G, computed geometrically. Empty when
/// dim(A_G) <= 2. Requires a Fano graph.
std::map<std::size_t, std::size_t> two_face_census(const DirectedGraph& g);
std::map<std::size_t, std::size_t> two_face_census(const LatticePolytope& a_g);

enum class Dim2Shape { Triangle, Square };

/// A_D for acyclic D without isolated vertices and dim(A_D) == 2 is a square
/// exactly when D is C1 or C2 up to relabelling.
Dim2Shape classify_acyclic_dim2(const DirectedGraph& d);

struct ClassificationReport {
  bool fano = false;
  bool reflexive_terminal = false;
  int dim = 0;
  bool smooth_qfactorial = false;
  bool codim2_smooth = false;
  bool codim3_qfactorial = false;
  bool rigid_certified = false;
  std::optional<Witness> witness;
  std::vector<ClassificationReport> components;  // only for disconnected inputs

  bool operator==(const ClassificationReport&) const = default;
};

/// The combinatorial verdicts disagree with the geometric recomputation.
class OracleMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ReportOptions {
  /// Recompute every field from the polytope and throw OracleMismatch on
  /// disagreement.
  bool oracle = false;
  RescuePolicy policy = RescuePolicy::ExcludePatternVertices;
};

/// Requires at least one arc. Non-Fano graphs get fano == false, their
/// dimension computed geometrically and every other verdict false.
ClassificationReport full_report(const DirectedGraph& g, const ReportOptions& options = {});

std::string witness_kind(const Witness& w);
std::array<Vertex, 4> witness_vertices(const Witness& w);

}  // namespace edgepoly
