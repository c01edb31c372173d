#include "edgepoly/classifier.hpp"

#include "edgepoly/edge_polytopes.hpp"

#include <algorithm>
#include <bit>

namespace edgepoly {

std::array<Arc, 4> C1Witness::arcs() const {
  auto [i1, i2, i3, i4] = vertices;
  return {Arc{i1, i2}, Arc{i1, i4}, Arc{i3, i2}, Arc{i3, i4}};
}

std::array<Arc, 4> C2Witness::arcs() const {
  auto [i1, i2, i3, i4] = vertices;
  return {Arc{i1, i2}, Arc{i2, i3}, Arc{i1, i4}, Arc{i4, i3}};
}

std::string witness_kind(const Witness& w) {
  return std::holds_alternative<C1Witness>(w) ? "C1" : "C2";
}

std::array<Vertex, 4> witness_vertices(const Witness& w) {
  return std::visit([](const auto& x) { return x.vertices; }, w);
}

std::optional<C1Witness> find_c1(const DirectedGraph& g) {
  const int n = g.vertex_count();
  for (Vertex i1 = 1; i1 <= n; ++i1)
    for (Vertex i2 = 1; i2 <= n; ++i2) {
      if (i2 == i1 || !g.has_arc(i1, i2)) continue;
      for (Vertex i3 = 1; i3 <= n; ++i3) {
        if (i3 == i1 || i3 == i2 || !g.has_arc(i3, i2)) continue;
        for (Vertex i4 = 1; i4 <= n; ++i4) {
          if (i4 == i1 || i4 == i2 || i4 == i3) continue;
          if (g.has_arc(i1, i4) && g.has_arc(i3, i4)) return C1Witness{{i1, i2, i3, i4}};
        }
      }
    }
  return std::nullopt;
}

std::vector<C2Witness> c2_occurrences(const DirectedGraph& g, RescuePolicy policy) {
  const int n = g.vertex_count();
  std::vector<C2Witness> out;
  for (Vertex i1 = 1; i1 <= n; ++i1)
    for (Vertex i2 = 1; i2 <= n; ++i2) {
      if (i2 == i1 || !g.has_arc(i1, i2)) continue;
      for (Vertex i3 = 1; i3 <= n; ++i3) {
        if (i3 == i1 || i3 == i2 || !g.has_arc(i2, i3)) continue;
        for (Vertex i4 = i2 + 1; i4 <= n; ++i4) {
          if (i4 == i1 || i4 == i3 || !g.has_arc(i1, i4) || !g.has_arc(i4, i3)) continue;
          C2Witness w{{i1, i2, i3, i4}, NoRescue{}};
          if (g.has_arc(i1, i3)) {
            w.rescue = EdgeRescue{};
          } else {
            std::uint64_t middles = g.out_neighbours(i1) & g.in_neighbours(i3);
            if (policy == RescuePolicy::ExcludePatternVertices)
              middles &= ~((std::uint64_t{1} << i2) | (std::uint64_t{1} << i4));
            if (middles) w.rescue = VertexRescue{std::countr_zero(middles)};
          }
          out.push_back(w);
        }
      }
    }
  return out;
}

std::optional<C2Witness> find_bad_c2(const DirectedGraph& g, RescuePolicy policy) {
  for (auto& w : c2_occurrences(g, policy))
    if (std::holds_alternative<NoRescue>(w.rescue)) return w;
  return std::nullopt;
}

namespace {

void require_fano(const DirectedGraph& g, const char* what) {
  if (g.arc_count() == 0) throw PreconditionError(std::string(what) + ": graph has no arcs");
  if (auto arc = first_arc_off_cycle(g))
    throw PreconditionError(std::string(what) + ": arc " + to_string(*arc) +
                            " lies on no directed cycle");
}

Witness relabel(Witness w, const std::vector<Vertex>& labels) {
  auto map = [&](Vertex v) { return labels[static_cast<std::size_t>(v - 1)]; };
  std::visit([&](auto& x) {
    for (auto& v : x.vertices) v = map(v);
  }, w);
  if (auto* c2 = std::get_if<C2Witness>(&w))
    if (auto* r = std::get_if<VertexRescue>(&c2->rescue)) r->j = map(r->j);
  return w;
}

std::vector<std::vector<Vertex>> nontrivial_components(const DirectedGraph& g) {
  std::vector<std::vector<Vertex>> out;
  for (auto& c : connected_components(g))
    if (c.size() > 1) out.push_back(std::move(c));
  return out;
}

RigidityVerdict rigid_connected(const DirectedGraph& g, RescuePolicy policy) {
  if (auto c1 = find_c1(g)) return {false, Witness{*c1}};
  if (auto c2 = find_bad_c2(g, policy)) return {false, Witness{*c2}};
  return {true, std::nullopt};
}

}  // namespace

RigidityVerdict rigid_certified(const DirectedGraph& g, RescuePolicy policy) {
  require_fano(g, "rigid_certified");
  for (const auto& comp : nontrivial_components(g)) {
    auto verdict = rigid_connected(induced_subgraph(g, comp), policy);
    if (!verdict.certified) return {false, relabel(*verdict.witness, comp)};
  }
  return {true, std::nullopt};
}

std::map<std::size_t, std::size_t> two_face_census(const LatticePolytope& a_g) {
  return two_faces_all_triangles(a_g).vertex_counts;
}

std::map<std::size_t, std::size_t> two_face_census(const DirectedGraph& g) {
  require_fano(g, "two_face_census");
  return two_face_census(directed_edge_polytope(g));
}

Dim2Shape classify_acyclic_dim2(const DirectedGraph& d) {
  if (!is_acyclic(d)) throw PreconditionError("classify_acyclic_dim2: graph has a directed cycle");
  for (Vertex v = 1; v <= d.vertex_count(); ++v)
    if (!(d.out_neighbours(v) | d.in_neighbours(v)))
      throw PreconditionError("classify_acyclic_dim2: vertex " + std::to_string(v) + " is isolated");
  std::vector<Point> pts;
  for (const auto& a : d.arcs()) pts.push_back(rho(a, d.vertex_count()));
  if (affine_dimension(pts) != 2)
    throw PreconditionError("classify_acyclic_dim2: A_D is not two-dimensional");
  if (d.vertex_count() != 4 || d.arc_count() != 4) return Dim2Shape::Triangle;
  std::array<Vertex, 4> p{1, 2, 3, 4};
  do {
    auto [i1, i2, i3, i4] = p;
    auto has_all = [&](std::array<Arc, 4> arcs) {
      return std::all_of(arcs.begin(), arcs.end(),
                         [&](const Arc& a) { return d.has_arc(a.tail, a.head); });
    };
    if (has_all(C1Witness{{i1, i2, i3, i4}}.arcs()) ||
        has_all(C2Witness{{i1, i2, i3, i4}, NoRescue{}}.arcs()))
      return Dim2Shape::Square;
  } while (std::next_permutation(p.begin(), p.end()));
  return Dim2Shape::Triangle;
}

namespace {

ClassificationReport connected_report(const DirectedGraph& g, const ReportOptions& options) {
  ClassificationReport r;
  r.fano = true;
  r.reflexive_terminal = true;
  r.codim2_smooth = true;
  int active = 0;
  for (Vertex v = 1; v <= g.vertex_count(); ++v)
    if (g.out_neighbours(v) | g.in_neighbours(v)) ++active;
  r.dim = active - 1;
  r.smooth_qfactorial = higashitani_smooth(g);
  auto verdict = rigid_certified(g, options.policy);
  r.codim3_qfactorial = verdict.certified;
  r.rigid_certified = r.codim2_smooth && r.codim3_qfactorial;
  r.witness = verdict.witness;
  return r;
}

void check_against_polytope(const DirectedGraph& g, const ClassificationReport& r) {
  auto p = directed_edge_polytope(g);
  auto expect = [&](bool combinatorial, bool geometric, const char* field) {
    if (combinatorial != geometric)
      throw OracleMismatch(std::string("oracle disagrees on ") + field + " for graph with " +
                           std::to_string(g.arc_count()) + " arcs");
  };
  expect(r.fano, is_fano(p), "fano");
  if (!r.fano) return;
  if (r.dim != p.dim()) throw OracleMismatch("oracle disagrees on dim");
  expect(r.reflexive_terminal, is_reflexive(p) && is_terminal(p), "reflexive_terminal");
  expect(r.smooth_qfactorial, is_simplicial(p), "smooth_qfactorial (simplicial)");
  expect(r.smooth_qfactorial, is_smooth(p), "smooth_qfactorial (smooth)");
  expect(r.codim2_smooth, edge_lattice_lengths_ok(p) && edges_at_height_one(p), "codim2_smooth");
  expect(r.codim3_qfactorial, two_faces_all_triangles(p).all_triangles, "codim3_qfactorial");
}

}  // namespace

ClassificationReport full_report(const DirectedGraph& g, const ReportOptions& options) {
  if (g.arc_count() == 0) throw PreconditionError("full_report: graph has no arcs");
  ClassificationReport r;
  if (!every_arc_on_directed_cycle(g)) {
    r.dim = directed_edge_polytope(g).dim();
  } else {
    auto comps = nontrivial_components(g);
    if (comps.size() == 1) {
      r = connected_report(g, options);
    } else {
      r.fano = r.reflexive_terminal = r.codim2_smooth = true;
      r.smooth_qfactorial = r.codim3_qfactorial = true;
      for (const auto& comp : comps) {
        auto sub = connected_report(induced_subgraph(g, comp), options);
        if (sub.witness) sub.witness = relabel(*sub.witness, comp);
        r.dim += sub.dim;
        r.smooth_qfactorial = r.smooth_qfactorial && sub.smooth_qfactorial;
        r.codim3_qfactorial = r.codim3_qfactorial && sub.codim3_qfactorial;
        if (!r.witness && sub.witness) r.witness = sub.witness;
        r.components.push_back(std::move(sub));
      }
      r.rigid_certified = r.codim2_smooth && r.codim3_qfactorial;
    }
  }
  if (options.oracle) check_against_polytope(g, r);
  return r;
}

}  // namespace edgepoly
