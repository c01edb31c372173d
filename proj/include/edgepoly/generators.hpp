#pragma once

// Small-graph enumeration up to isomorphism and seeded random sampling.

#include "edgepoly/digraph.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace edgepoly {

/// Adjacency matrix as a bit string: bit (i-1)*n + (j-1) for arc (i,j).
/// Defined for n <= 8.
using AdjacencyCode = std::uint64_t;

constexpr int kMaxEnumerationVertices = 8;

AdjacencyCode adjacency_code(const DirectedGraph& g);
DirectedGraph decode(int n, AdjacencyCode code);

/// Minimum adjacency code over all vertex permutations.
AdjacencyCode canonical_code(const DirectedGraph& g);
DirectedGraph canonical_form(const DirectedGraph& g);
bool is_canonical(const DirectedGraph& g);

using GraphVisitor = std::function<void(const DirectedGraph&)>;

enum class DigraphFamily { All, Fano, ConnectedFano };

/// One representative per isomorphism class of loop-free digraphs on n
/// vertices in `family`. Exhaustive over 2^(n(n-1)) labelings, so limited to
/// n <= 5.
void for_each_canonical_digraph(int n, DigraphFamily family, const GraphVisitor& visit);

/// Representatives of acyclic digraphs on n vertices, in increasing
/// canonical code.
std::vector<DirectedGraph> canonical_dags(int n);

/// Representatives of simple undirected graphs on n vertices.
std::vector<UndirectedGraph> canonical_undirected(int n);

/// Symmetric digraph whose underlying graph is the cycle 1-2-...-m-1.
DirectedGraph symmetric_cycle(int m);

/// Directed cycle 1 -> 2 -> ... -> m -> 1.
DirectedGraph directed_cycle(int m);

/// Unions of a directed 2k-cycle and a directed 2l-cycle sharing between 1
/// and max_shared arcs, for k, l in [2, max_half], without parallel or
/// antiparallel arcs. Deduplicated up to isomorphism.
std::vector<DirectedGraph> glued_even_cycles(int max_half = 3, int max_shared = 3);

/// Connected Fano digraph on n vertices, drawn either as a union of random
/// directed cycles or by rejection from random arc sets.
DirectedGraph random_connected_fano(int n, std::mt19937_64& rng);

/// `count` pairwise non-isomorphic connected Fano digraphs on n vertices.
std::vector<DirectedGraph> distinct_random_fano(int n, std::size_t count, std::uint64_t seed);

bool is_connected(const DirectedGraph& g);

}  // namespace edgepoly
