#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace edgepoly {

/// Vertices are labelled 1..n throughout the public API.
using Vertex = int;

struct Arc {
  Vertex tail;
  Vertex head;
  auto operator<=>(const Arc&) const = default;
};

std::string to_string(const Arc& arc);

/// Thrown when a graph or subgraph violates a structural invariant.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct UndirectedEdge {
  Vertex a;  // a < b
  Vertex b;
  auto operator<=>(const UndirectedEdge&) const = default;
};

class UndirectedGraph {
 public:
  static constexpr int kMaxVertices = 63;

  explicit UndirectedGraph(int n, const std::vector<UndirectedEdge>& edges = {});

  int vertex_count() const { return n_; }
  const std::vector<UndirectedEdge>& edges() const { return edges_; }
  bool has_edge(Vertex u, Vertex v) const;
  std::uint64_t neighbours(Vertex v) const { return adj_[v]; }

 private:
  int n_;
  std::vector<UndirectedEdge> edges_;  // sorted
  std::vector<std::uint64_t> adj_;     // bit v set in adj_[u]; index 0 unused
};

/// Finite loop-free digraph without parallel arcs on vertices 1..n.
/// Antiparallel pairs (i,j),(j,i) are allowed. Immutable after construction.
class DirectedGraph {
 public:
  static constexpr int kMaxVertices = 63;

  /// Throws GraphError on loops, duplicate arcs or out-of-range endpoints.
  explicit DirectedGraph(int n, const std::vector<Arc>& arcs = {});

  int vertex_count() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_arc(Vertex u, Vertex v) const { return (out_[u] >> v) & 1U; }
  std::uint64_t out_neighbours(Vertex v) const { return out_[v]; }
  std::uint64_t in_neighbours(Vertex v) const { return in_[v]; }

  /// Every arc (i,j) has (j,i) as well.
  bool is_symmetric() const;

  /// Same vertex set, arcs restricted to `subset` (which must be a subset).
  DirectedGraph subgraph(const std::vector<Arc>& subset) const;

  bool operator==(const DirectedGraph& other) const {
    return n_ == other.n_ && arcs_ == other.arcs_;
  }

 private:
  int n_;
  std::vector<Arc> arcs_;  // sorted
  std::vector<std::uint64_t> out_, in_;
};

/// Both directions of every edge.
DirectedGraph symmetric_digraph(const UndirectedGraph& u);

UndirectedGraph underlying(const DirectedGraph& g);

/// Partition of 1..n into connected components of the underlying graph,
/// each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const DirectedGraph& g);
std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph& u);

/// Induced subgraph on `vertices` relabelled 1..k in the given order.
DirectedGraph induced_subgraph(const DirectedGraph& g, const std::vector<Vertex>& vertices);

/// nullopt stands for an infinite distance.
using Distance = std::optional<int>;

/// Shortest directed path length; throws GraphError when u == v, because the
/// distance is only defined for distinct vertices.
Distance dist(const DirectedGraph& g, Vertex u, Vertex v);

/// All-pairs directed distances computed once by BFS from every vertex.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const DirectedGraph& g);
  Distance operator()(Vertex u, Vertex v) const;

 private:
  int n_;
  std::vector<int> d_;  // -1 == unreachable
};

bool is_acyclic(const DirectedGraph& g);

/// First arc (in sorted order) that lies on no directed cycle.
std::optional<Arc> first_arc_off_cycle(const DirectedGraph& g);
bool every_arc_on_directed_cycle(const DirectedGraph& g);

/// An oriented traversal i_1, ..., i_l of a cycle with its chosen arcs;
/// arc j joins vertices[j] and vertices[(j+1) % l].
struct CycleWalk {
  std::vector<Vertex> vertices;
  std::vector<Arc> arcs;
  std::vector<bool> forward;  // arcs[j] == (vertices[j], vertices[j+1])

  std::size_t length() const { return arcs.size(); }
  std::size_t forward_count() const;
  std::size_t backward_count() const { return length() - forward_count(); }
};

inline constexpr int kDefaultCycleVertexCap = 12;

/// Calls `visit` for every cycle walk of g: each simple cycle of the
/// underlying graph once (up to rotation and reflection) for each choice of
/// realising arcs, plus one length-two walk per antiparallel pair. The walk
/// starts at its smallest vertex and continues to the smaller neighbour.
/// Returning false from `visit` stops the enumeration.
void for_each_cycle_walk(const DirectedGraph& g, const std::function<bool(const CycleWalk&)>& visit,
                         int vertex_cap = kDefaultCycleVertexCap);
std::vector<CycleWalk> enumerate_cycle_walks(const DirectedGraph& g,
                                             int vertex_cap = kDefaultCycleVertexCap);

/// Calls `visit` with the vertex sequence of each simple cycle of length >= 3
/// of an undirected graph, canonical start and direction as above.
void for_each_simple_cycle(const UndirectedGraph& u,
                           const std::function<bool(const std::vector<Vertex>&)>& visit);

bool has_even_cycle(const UndirectedGraph& u);
bool has_4cycle(const UndirectedGraph& u);

}  // namespace edgepoly
