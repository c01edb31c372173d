#include "edgepoly/face_theory.hpp"

#include "edgepoly/edge_polytopes.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace edgepoly {

namespace {

void for_each_directed_cycle(const CompGraph& g,
                             const std::function<bool(const CompCycle&)>& visit) {
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(g.node_count));
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    const auto& e = g.arcs[i];
    if (e.from == e.to) {
      if (!visit(CompCycle{i})) return;
    } else {
      out[static_cast<std::size_t>(e.from)].push_back(i);
    }
  }
  CompCycle path;
  std::vector<bool> on_path(static_cast<std::size_t>(g.node_count), false);
  bool stop = false;
  std::function<void(int, int)> extend = [&](int start, int node) {
    for (std::size_t i : out[static_cast<std::size_t>(node)]) {
      if (stop) return;
      int next = g.arcs[i].to;
      if (next == start) {
        path.push_back(i);
        if (!visit(path)) stop = true;
        path.pop_back();
        continue;
      }
      if (next < start || on_path[static_cast<std::size_t>(next)]) continue;
      on_path[static_cast<std::size_t>(next)] = true;
      path.push_back(i);
      extend(start, next);
      path.pop_back();
      on_path[static_cast<std::size_t>(next)] = false;
    }
  };
  for (int s = 0; s < g.node_count && !stop; ++s) {
    on_path[static_cast<std::size_t>(s)] = true;
    extend(s, s);
    on_path[static_cast<std::size_t>(s)] = false;
  }
}

void require_parent(const DirectedGraph& d, const DirectedGraph& h) {
  if (d.vertex_count() != h.vertex_count())
    throw PreconditionError("subgraph must span the vertex set of the parent");
  for (const auto& a : h.arcs())
    if (!d.has_arc(a.tail, a.head))
      throw PreconditionError("arc " + to_string(a) + " is not an arc of the parent graph");
  if (!is_acyclic(d)) throw PreconditionError("parent graph must be acyclic");
}

}  // namespace

WeightOutcome compute_weight(const DirectedGraph& d, const DirectedGraph& h) {
  require_parent(d, h);
  const int n = h.vertex_count();
  WeightedSubgraph w{d, h, {}, std::vector<int>(static_cast<std::size_t>(n) + 1, -1),
                     std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (Vertex s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::deque<Vertex> queue{s};
    seen[s] = true;
    w.omega[s] = 0;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      auto relax = [&](Vertex x, int value) -> std::optional<PathInconsistent> {
        if (!seen[x]) {
          seen[x] = true;
          w.omega[x] = value;
          queue.push_back(x);
        } else if (w.omega[x] != value) {
          return PathInconsistent{std::min(s, x), std::max(s, x)};
        }
        return std::nullopt;
      };
      for (Vertex x = 1; x <= n; ++x) {
        if (h.has_arc(v, x))
          if (auto bad = relax(x, w.omega[v] + 1)) return *bad;
        if (h.has_arc(x, v))
          if (auto bad = relax(x, w.omega[v] - 1)) return *bad;
      }
    }
    int lo = w.omega[comp.front()];
    for (Vertex v : comp) lo = std::min(lo, w.omega[v]);
    for (Vertex v : comp) {
      w.omega[v] += 1 - lo;
      w.component_of[v] = static_cast<int>(w.components.size());
    }
    std::sort(comp.begin(), comp.end());
    w.components.push_back(std::move(comp));
  }
  return w;
}

CompGraph build_comp_graph(const WeightedSubgraph& w) {
  CompGraph g;
  g.node_count = static_cast<int>(w.components.size());
  for (const auto& a : w.parent.arcs()) {
    if (w.sub.has_arc(a.tail, a.head)) continue;
    g.arcs.push_back({w.component_of[a.tail], w.component_of[a.head], a});
  }
  return g;
}

int weight_decrease(const WeightedSubgraph& w, const CompArc& e) {
  return w.weight(e.origin.tail) - w.weight(e.origin.head);
}

std::vector<CompCycle> directed_cycles(const CompGraph& g) {
  std::vector<CompCycle> out;
  for_each_directed_cycle(g, [&](const CompCycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

Admissibility check_admissible(const WeightedSubgraph& w, const CompGraph& g) {
  Admissibility result;
  for_each_directed_cycle(g, [&](const CompCycle& c) {
    int total = 0;
    for (std::size_t i : c) total += weight_decrease(w, g.arcs[i]);
    if (total <= -static_cast<int>(c.size())) {
      result.admissible = false;
      result.violating_cycle = c;
      return false;
    }
    return true;
  });
  return result;
}

Admissibility is_admissible(const DirectedGraph& d, const DirectedGraph& h) {
  auto outcome = compute_weight(d, h);
  if (const auto* bad = std::get_if<PathInconsistent>(&outcome))
    throw PreconditionError("subgraph is not path consistent between " +
                            std::to_string(bad->from) + " and " + std::to_string(bad->to));
  const auto& w = std::get<WeightedSubgraph>(outcome);
  return check_admissible(w, build_comp_graph(w));
}

bool is_face_of_tilde(const DirectedGraph& d, const DirectedGraph& h) {
  auto outcome = compute_weight(d, h);
  const auto* w = std::get_if<WeightedSubgraph>(&outcome);
  return w && check_admissible(*w, build_comp_graph(*w)).admissible;
}

}  // namespace edgepoly
