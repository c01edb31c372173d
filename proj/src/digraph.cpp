#include "edgepoly/digraph.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace edgepoly {

namespace {

void check_vertex_count(int n, int max) {
  if (n < 0 || n > max)
    throw GraphError("vertex count " + std::to_string(n) + " out of range 0.." +
                     std::to_string(max));
}

// Bit mask of vertices reachable from v by a directed path of length >= 1.
std::uint64_t reachable_from(const DirectedGraph& g, Vertex v) {
  std::uint64_t seen = 0, frontier = g.out_neighbours(v);
  while (frontier) {
    seen |= frontier;
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.out_neighbours(std::countr_zero(f));
    frontier = next & ~seen;
  }
  return seen;
}

template <class Neighbours>
std::vector<std::vector<Vertex>> components_of(int n, Neighbours neighbours) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(n + 1, false);
  for (Vertex s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::deque<Vertex> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (std::uint64_t m = neighbours(v); m; m &= m - 1) {
        Vertex w = std::countr_zero(m);
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::string to_string(const Arc& arc) {
  return "(" + std::to_string(arc.tail) + "," + std::to_string(arc.head) + ")";
}

UndirectedGraph::UndirectedGraph(int n, const std::vector<UndirectedEdge>& edges)
    : n_(n), adj_(static_cast<std::size_t>(n) + 1, 0) {
  check_vertex_count(n, kMaxVertices);
  for (auto e : edges) {
    if (e.a > e.b) std::swap(e.a, e.b);
    if (e.a < 1 || e.b > n) throw GraphError("edge endpoint out of range");
    if (e.a == e.b) throw GraphError("loop at vertex " + std::to_string(e.a));
    if (has_edge(e.a, e.b)) continue;
    adj_[e.a] |= std::uint64_t{1} << e.b;
    adj_[e.b] |= std::uint64_t{1} << e.a;
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
}

bool UndirectedGraph::has_edge(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }

DirectedGraph::DirectedGraph(int n, const std::vector<Arc>& arcs)
    : n_(n), out_(static_cast<std::size_t>(n) + 1, 0), in_(static_cast<std::size_t>(n) + 1, 0) {
  check_vertex_count(n, kMaxVertices);
  arcs_.reserve(arcs.size());
  for (const auto& a : arcs) {
    if (a.tail < 1 || a.tail > n || a.head < 1 || a.head > n)
      throw GraphError("arc " + to_string(a) + " has an endpoint outside 1.." + std::to_string(n));
    if (a.tail == a.head) throw GraphError("loop " + to_string(a) + " is not allowed");
    if (has_arc(a.tail, a.head)) throw GraphError("duplicate arc " + to_string(a));
    out_[a.tail] |= std::uint64_t{1} << a.head;
    in_[a.head] |= std::uint64_t{1} << a.tail;
    arcs_.push_back(a);
  }
  std::sort(arcs_.begin(), arcs_.end());
}

bool DirectedGraph::is_symmetric() const {
  return std::all_of(arcs_.begin(), arcs_.end(),
                     [&](const Arc& a) { return has_arc(a.head, a.tail); });
}

DirectedGraph DirectedGraph::subgraph(const std::vector<Arc>& subset) const {
  for (const auto& a : subset)
    if (a.tail < 1 || a.tail > n_ || a.head < 1 || a.head > n_ || !has_arc(a.tail, a.head))
      throw GraphError("arc " + to_string(a) + " is not in the parent graph");
  return DirectedGraph(n_, subset);
}

DirectedGraph symmetric_digraph(const UndirectedGraph& u) {
  std::vector<Arc> arcs;
  for (const auto& e : u.edges()) {
    arcs.push_back({e.a, e.b});
    arcs.push_back({e.b, e.a});
  }
  return DirectedGraph(u.vertex_count(), arcs);
}

UndirectedGraph underlying(const DirectedGraph& g) {
  std::vector<UndirectedEdge> edges;
  for (const auto& a : g.arcs()) edges.push_back({std::min(a.tail, a.head), std::max(a.tail, a.head)});
  return UndirectedGraph(g.vertex_count(), edges);
}

std::vector<std::vector<Vertex>> connected_components(const DirectedGraph& g) {
  return components_of(g.vertex_count(),
                       [&](Vertex v) { return g.out_neighbours(v) | g.in_neighbours(v); });
}

std::vector<std::vector<Vertex>> connected_components(const UndirectedGraph& u) {
  return components_of(u.vertex_count(), [&](Vertex v) { return u.neighbours(v); });
}

DirectedGraph induced_subgraph(const DirectedGraph& g, const std::vector<Vertex>& vertices) {
  std::vector<int> label(g.vertex_count() + 1, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) label[vertices[i]] = static_cast<int>(i) + 1;
  std::vector<Arc> arcs;
  for (const auto& a : g.arcs())
    if (label[a.tail] && label[a.head]) arcs.push_back({label[a.tail], label[a.head]});
  return DirectedGraph(static_cast<int>(vertices.size()), arcs);
}

Distance dist(const DirectedGraph& g, Vertex u, Vertex v) {
  const int n = g.vertex_count();
  if (u < 1 || u > n || v < 1 || v > n) throw GraphError("dist: vertex out of range");
  if (u == v) throw GraphError("dist: distance is only defined for distinct vertices");
  std::uint64_t seen = std::uint64_t{1} << u, frontier = seen;
  for (int d = 1; frontier; ++d) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.out_neighbours(std::countr_zero(f));
    next &= ~seen;
    if ((next >> v) & 1U) return d;
    seen |= next;
    frontier = next;
  }
  return std::nullopt;
}

DistanceMatrix::DistanceMatrix(const DirectedGraph& g)
    : n_(g.vertex_count()), d_(static_cast<std::size_t>(n_ + 1) * (n_ + 1), -1) {
  for (Vertex s = 1; s <= n_; ++s) {
    std::uint64_t seen = std::uint64_t{1} << s, frontier = seen;
    for (int d = 1; frontier; ++d) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.out_neighbours(std::countr_zero(f));
      next &= ~seen;
      for (std::uint64_t m = next; m; m &= m - 1) d_[s * (n_ + 1) + std::countr_zero(m)] = d;
      seen |= next;
      frontier = next;
    }
  }
}

Distance DistanceMatrix::operator()(Vertex u, Vertex v) const {
  if (u == v) throw GraphError("dist: distance is only defined for distinct vertices");
  int d = d_[u * (n_ + 1) + v];
  if (d < 0) return std::nullopt;
  return d;
}

bool is_acyclic(const DirectedGraph& g) {
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if ((reachable_from(g, v) >> v) & 1U) return false;
  return true;
}

std::optional<Arc> first_arc_off_cycle(const DirectedGraph& g) {
  std::vector<std::uint64_t> reach(g.vertex_count() + 1);
  for (Vertex v = 1; v <= g.vertex_count(); ++v) reach[v] = reachable_from(g, v);
  for (const auto& a : g.arcs())
    if (!((reach[a.head] >> a.tail) & 1U)) return a;
  return std::nullopt;
}

bool every_arc_on_directed_cycle(const DirectedGraph& g) { return !first_arc_off_cycle(g); }

std::size_t CycleWalk::forward_count() const {
  return static_cast<std::size_t>(std::count(forward.begin(), forward.end(), true));
}

void for_each_simple_cycle(const UndirectedGraph& u,
                           const std::function<bool(const std::vector<Vertex>&)>& visit) {
  const int n = u.vertex_count();
  std::vector<Vertex> path;
  bool stop = false;
  // Cycles are rooted at their smallest vertex s and reported in the direction
  // whose second vertex is smaller than the last.
  std::function<void(Vertex, Vertex, std::uint64_t)> extend = [&](Vertex s, Vertex v,
                                                                  std::uint64_t used) {
    for (std::uint64_t m = u.neighbours(v); m && !stop; m &= m - 1) {
      Vertex w = std::countr_zero(m);
      if (w == s) {
        if (path.size() >= 3 && path[1] < path.back() && !visit(path)) stop = true;
        continue;
      }
      if (w < s || ((used >> w) & 1U)) continue;
      path.push_back(w);
      extend(s, w, used | (std::uint64_t{1} << w));
      path.pop_back();
    }
  };
  for (Vertex s = 1; s <= n && !stop; ++s) {
    path.assign(1, s);
    extend(s, s, std::uint64_t{1} << s);
  }
}

void for_each_cycle_walk(const DirectedGraph& g, const std::function<bool(const CycleWalk&)>& visit,
                         int vertex_cap) {
  if (g.vertex_count() > vertex_cap)
    throw GraphError("cycle enumeration is capped at " + std::to_string(vertex_cap) + " vertices");
  bool stop = false;
  for (const auto& a : g.arcs()) {
    if (a.tail < a.head && g.has_arc(a.head, a.tail)) {
      CycleWalk w{{a.tail, a.head}, {a, {a.head, a.tail}}, {true, true}};
      if (!visit(w)) return;
    }
  }
  for_each_simple_cycle(underlying(g), [&](const std::vector<Vertex>& cyc) {
    const std::size_t l = cyc.size();
    CycleWalk w;
    w.vertices = cyc;
    w.arcs.resize(l);
    w.forward.resize(l);
    std::function<void(std::size_t)> choose = [&](std::size_t j) {
      if (stop) return;
      if (j == l) {
        if (!visit(w)) stop = true;
        return;
      }
      Vertex x = cyc[j], y = cyc[(j + 1) % l];
      if (g.has_arc(x, y)) {
        w.arcs[j] = {x, y};
        w.forward[j] = true;
        choose(j + 1);
      }
      if (g.has_arc(y, x)) {
        w.arcs[j] = {y, x};
        w.forward[j] = false;
        choose(j + 1);
      }
    };
    choose(0);
    return !stop;
  });
}

std::vector<CycleWalk> enumerate_cycle_walks(const DirectedGraph& g, int vertex_cap) {
  std::vector<CycleWalk> out;
  for_each_cycle_walk(g, [&](const CycleWalk& w) {
    out.push_back(w);
    return true;
  }, vertex_cap);
  return out;
}

bool has_even_cycle(const UndirectedGraph& u) {
  bool found = false;
  for_each_simple_cycle(u, [&](const std::vector<Vertex>& c) {
    found = c.size() % 2 == 0;
    return !found;
  });
  return found;
}

bool has_4cycle(const UndirectedGraph& u) {
  for (Vertex a = 1; a <= u.vertex_count(); ++a)
    for (Vertex b = a + 1; b <= u.vertex_count(); ++b)
      if (std::popcount(u.neighbours(a) & u.neighbours(b)) >= 2) return true;
  return false;
}

}  // namespace edgepoly
