#include "edgepoly/edge_polytopes.hpp"

#include <algorithm>

namespace edgepoly {

Point rho(const Arc& arc, int n) {
  Point p(static_cast<std::size_t>(n), 0);
  p[static_cast<std::size_t>(arc.tail - 1)] = 1;
  p[static_cast<std::size_t>(arc.head - 1)] = -1;
  return p;
}

LatticePolytope directed_edge_polytope(const DirectedGraph& g) {
  if (g.arc_count() == 0) throw PreconditionError("directed_edge_polytope: graph has no arcs");
  std::vector<Point> pts;
  for (const auto& a : g.arcs()) pts.push_back(rho(a, g.vertex_count()));
  return LatticePolytope(std::move(pts));
}

LatticePolytope symmetric_edge_polytope(const UndirectedGraph& u) {
  if (u.edges().empty()) throw PreconditionError("symmetric_edge_polytope: graph has no edges");
  std::vector<Point> pts;
  for (const auto& e : u.edges()) {
    pts.push_back(rho({e.a, e.b}, u.vertex_count()));
    pts.push_back(rho({e.b, e.a}, u.vertex_count()));
  }
  return LatticePolytope(std::move(pts));
}

LatticePolytope tilde_polytope(const DirectedGraph& d) {
  if (!is_acyclic(d)) throw PreconditionError("tilde_polytope: graph has a directed cycle");
  std::vector<Point> pts{Point(static_cast<std::size_t>(d.vertex_count()), 0)};
  for (const auto& a : d.arcs()) pts.push_back(rho(a, d.vertex_count()));
  return LatticePolytope(std::move(pts));
}

bool is_fano_graph(const DirectedGraph& g) {
  if (g.arc_count() == 0) throw PreconditionError("is_fano_graph: graph has no arcs");
  return every_arc_on_directed_cycle(g);
}

std::optional<HomogeneousCycle> as_homogeneous(const CycleWalk& walk, int n) {
  const std::size_t l = walk.length();
  if (l < 3 || walk.forward_count() * 2 != l) return std::nullopt;
  HomogeneousCycle c;
  c.walk = walk;
  c.mu.assign(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> raw(l, 0);
  for (std::size_t j = 0; j + 1 < l; ++j) {
    raw[j + 1] = walk.forward[j] ? raw[j] - 1 : raw[j] + 1;
  }
  int lo = *std::min_element(raw.begin(), raw.end());
  for (std::size_t j = 0; j < l; ++j) {
    c.mu[static_cast<std::size_t>(walk.vertices[j])] = raw[j] - lo;
    (walk.forward[j] ? c.delta_plus : c.delta_minus).push_back(walk.arcs[j]);
  }
  return c;
}

void for_each_homogeneous_cycle(const DirectedGraph& g,
                                const std::function<bool(const HomogeneousCycle&)>& visit) {
  for_each_cycle_walk(g, [&](const CycleWalk& w) {
    auto c = as_homogeneous(w, g.vertex_count());
    return !c || visit(*c);
  });
}

std::vector<HomogeneousCycle> homogeneous_cycles(const DirectedGraph& g) {
  std::vector<HomogeneousCycle> out;
  for_each_homogeneous_cycle(g, [&](const HomogeneousCycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::optional<std::pair<Vertex, Vertex>> mu_dist_violation(const DistanceMatrix& dist,
                                                           const HomogeneousCycle& c) {
  for (Vertex a : c.walk.vertices) {
    for (Vertex b : c.walk.vertices) {
      if (a == b) continue;
      int diff = c.mu_at(a) - c.mu_at(b);
      if (diff <= 0) continue;
      auto d = dist(a, b);
      if (d && diff > *d) return std::pair{a, b};
    }
  }
  return std::nullopt;
}

bool mu_dist_condition(const DistanceMatrix& dist, const HomogeneousCycle& c) {
  return !mu_dist_violation(dist, c);
}

bool mu_dist_condition(const DirectedGraph& g, const HomogeneousCycle& c) {
  return mu_dist_condition(DistanceMatrix(g), c);
}

SupportingHyperplane supporting_hyperplane(const DirectedGraph& g, const HomogeneousCycle& c) {
  if (!is_fano_graph(g))
    throw PreconditionError("supporting_hyperplane: arc " + to_string(*first_arc_off_cycle(g)) +
                            " lies on no directed cycle");
  DistanceMatrix dist(g);
  if (auto bad = mu_dist_violation(dist, c))
    throw PreconditionError("supporting_hyperplane: mu-dist violated at (" +
                            std::to_string(bad->first) + "," + std::to_string(bad->second) + ")");
  const int n = g.vertex_count();
  std::vector<bool> on_cycle(static_cast<std::size_t>(n) + 1, false);
  for (Vertex v : c.walk.vertices) on_cycle[static_cast<std::size_t>(v)] = true;

  SupportingHyperplane h;
  h.coefficients.assign(static_cast<std::size_t>(n), 0);
  for (Vertex k = 1; k <= n; ++k) {
    int value;
    if (on_cycle[static_cast<std::size_t>(k)]) {
      value = c.mu_at(k);
    } else {
      value = 0;
      for (Vertex i : c.walk.vertices)
        if (auto d = dist(i, k)) value = std::max(value, c.mu_at(i) - *d);
    }
    h.coefficients[static_cast<std::size_t>(k - 1)] = value;
  }
  for (const auto& e : g.arcs()) {
    int v = h.at(e.tail) - h.at(e.head);
    if (v > 1)
      throw std::logic_error("supporting_hyperplane: arc " + to_string(e) + " lies above the hyperplane");
    if (v == 1) h.face_arcs.push_back(e);
  }
  for (const auto& e : c.walk.arcs)
    if (h.at(e.tail) - h.at(e.head) != 1)
      throw std::logic_error("supporting_hyperplane: cycle arc " + to_string(e) + " is off the hyperplane");
  return h;
}

std::optional<HomogeneousCycle> find_supporting_cycle(const DirectedGraph& g) {
  DistanceMatrix dist(g);
  std::optional<HomogeneousCycle> found;
  for_each_homogeneous_cycle(g, [&](const HomogeneousCycle& c) {
    if (mu_dist_condition(dist, c)) found = c;
    return !found;
  });
  return found;
}

bool higashitani_smooth(const DirectedGraph& g) {
  if (!is_fano_graph(g))
    throw PreconditionError("higashitani_smooth: arc " + to_string(*first_arc_off_cycle(g)) +
                            " lies on no directed cycle");
  return !find_supporting_cycle(g);
}

}  // namespace edgepoly
