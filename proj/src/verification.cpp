#include "edgepoly/verification.hpp"

#include "edgepoly/edge_polytopes.hpp"
#include "edgepoly/face_theory.hpp"
#include "edgepoly/generators.hpp"
#include "edgepoly/graph_io.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace edgepoly {

namespace {

void fail(SweepResult& r, const std::string& what) {
  if (r.failures++ == 0) r.counterexample = what;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string format_sweep(const SweepResult& r) {
  std::ostringstream out;
  out << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.checked << " checked, " << r.failures
      << " failed";
  if (r.counterexample) out << "\n  counterexample: " << *r.counterexample;
  return out.str();
}

std::vector<DirectedGraph> all_small_digraphs(int max_n) {
  std::vector<DirectedGraph> out;
  for (int n = 2; n <= max_n; ++n)
    for_each_canonical_digraph(n, DigraphFamily::All, [&](const DirectedGraph& g) {
      if (g.arc_count() > 0) out.push_back(g);
    });
  return out;
}

std::vector<DirectedGraph> connected_fano_digraphs(int max_n) {
  std::vector<DirectedGraph> out;
  for (int n = 2; n <= max_n; ++n)
    for_each_canonical_digraph(n, DigraphFamily::ConnectedFano,
                               [&](const DirectedGraph& g) { out.push_back(g); });
  return out;
}

SweepResult sweep_main_equivalence(const std::vector<DirectedGraph>& graphs, RescuePolicy policy) {
  SweepResult r;
  r.name = "main equivalence (rigid iff no square 2-face)";
  for (const auto& g : graphs) {
    ++r.checked;
    auto verdict = rigid_certified(g, policy);
    auto census = two_faces_all_triangles(directed_edge_polytope(g));
    bool square = census.vertex_counts.count(4) > 0;
    bool odd_shape = false;
    for (auto [count, _] : census.vertex_counts) odd_shape = odd_shape || (count != 3 && count != 4);
    if (verdict.certified == square || odd_shape) {
      std::ostringstream msg;
      msg << describe(g) << " rigid_certified=" << yes_no(verdict.certified) << " square_2face=" << yes_no(square);
      if (verdict.witness) msg << " witness=" << witness_kind(*verdict.witness);
      if (odd_shape) msg << " (2-face with neither 3 nor 4 vertices)";
      fail(r, msg.str());
    }
  }
  return r;
}

SweepResult sweep_fano_equivalence(const std::vector<DirectedGraph>& graphs) {
  SweepResult r;
  r.name = "Fano equivalence (graph Fano iff polytope Fano iff terminal reflexive)";
  for (const auto& g : graphs) {
    ++r.checked;
    auto p = directed_edge_polytope(g);
    bool combinatorial = is_fano_graph(g);
    bool fano = is_fano(p);
    bool terminal_reflexive = origin_in_relative_interior(p) && is_terminal(p) && is_reflexive(p);
    if (combinatorial != fano || fano != terminal_reflexive)
      fail(r, describe(g) + " graph_fano=" + yes_no(combinatorial) + " polytope_fano=" + yes_no(fano) +
                  " terminal_reflexive=" + yes_no(terminal_reflexive));
  }
  return r;
}

SweepResult sweep_smooth_equivalence(const std::vector<DirectedGraph>& graphs) {
  SweepResult r;
  r.name = "smoothness equivalence (cycle criterion iff simplicial iff smooth)";
  for (const auto& g : graphs) {
    ++r.checked;
    auto p = directed_edge_polytope(g);
    bool combinatorial = higashitani_smooth(g);
    bool simplicial = is_simplicial(p);
    bool smooth = is_smooth(p);
    if (combinatorial != simplicial || simplicial != smooth)
      fail(r, describe(g) + " criterion=" + yes_no(combinatorial) + " simplicial=" + yes_no(simplicial) +
                  " smooth=" + yes_no(smooth));
  }
  return r;
}

SweepResult sweep_face_criterion(int max_n) {
  SweepResult r;
  r.name = "face criterion (path consistent and admissible iff face)";
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& d : canonical_dags(n)) {
      const auto& arcs = d.arcs();
      if (arcs.empty()) {
        ++r.checked;
        if (!is_face_of_tilde(d, d)) fail(r, describe(d) + " empty subgraph rejected");
        continue;
      }
      auto p = tilde_polytope(d);
      std::set<VertexSet> faces;
      for (const auto& f : p.all_faces()) faces.insert(f.vertices);
      std::vector<VertexSet> bit(arcs.size());
      for (std::size_t i = 0; i < arcs.size(); ++i) bit[i] = VertexSet{1} << *p.vertex_index(rho(arcs[i], n));
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << arcs.size()); ++m) {
        ++r.checked;
        std::vector<Arc> sub;
        VertexSet mask = 0;
        for (std::size_t i = 0; i < arcs.size(); ++i)
          if ((m >> i) & 1U) {
            sub.push_back(arcs[i]);
            mask |= bit[i];
          }
        DirectedGraph h(n, sub);
        bool combinatorial = is_face_of_tilde(d, h);
        bool geometric = faces.count(mask) > 0;
        if (combinatorial != geometric)
          fail(r, "D=" + describe(d) + " H=" + describe(h) + " criterion=" + yes_no(combinatorial) +
                      " geometric=" + yes_no(geometric));
      }
    }
  }
  return r;
}

SweepResult sweep_symmetric(int max_n) {
  SweepResult r;
  r.name = "symmetric graphs (rigid iff no 4-cycle)";
  for (int n = 2; n <= max_n; ++n)
    for (const auto& u : canonical_undirected(n)) {
      if (u.edges().empty()) continue;
      ++r.checked;
      auto g = symmetric_digraph(u);
      bool rigid = rigid_certified(g).certified;
      bool four = has_4cycle(u);
      if (rigid == four)
        fail(r, describe(g) + " rigid_certified=" + yes_no(rigid) + " has_4cycle=" + yes_no(four));
    }
  return r;
}

SweepResult sweep_dim2_classification(int max_n) {
  SweepResult r;
  r.name = "two-dimensional acyclic classification (square iff C1 or C2)";
  for (int n = 2; n <= max_n; ++n)
    for (const auto& d : canonical_dags(n)) {
      bool isolated = false;
      for (Vertex v = 1; v <= n; ++v) isolated = isolated || !(d.out_neighbours(v) | d.in_neighbours(v));
      if (isolated || d.arc_count() == 0) continue;
      auto p = directed_edge_polytope(d);
      if (p.dim() != 2) continue;
      ++r.checked;
      auto shape = classify_acyclic_dim2(d);
      std::size_t expected = shape == Dim2Shape::Square ? 4 : 3;
      if (p.vertex_count() != expected)
        fail(r, describe(d) + " classified " + (shape == Dim2Shape::Square ? "square" : "triangle") +
                    " but hull has " + std::to_string(p.vertex_count()) + " vertices");
    }
  return r;
}

SweepResult sweep_even_cycles(int max_k) {
  SweepResult r;
  r.name = "symmetric even cycles (dimension, simplicial faces, rigidity)";
  for (int k = 2; k <= max_k; ++k) {
    ++r.checked;
    auto g = symmetric_cycle(2 * k);
    auto p = symmetric_edge_polytope(underlying(g));
    std::string name = "symmetric " + std::to_string(2 * k) + "-cycle";
    if (p.dim() != 2 * k - 1) {
      fail(r, name + " has dimension " + std::to_string(p.dim()));
      continue;
    }
    for (const auto& f : p.faces_of_dim(2 * k - 3))
      if (f.vertex_count() != static_cast<std::size_t>(2 * k - 2)) {
        fail(r, name + " has a non-simplex " + std::to_string(2 * k - 3) + "-face with " +
                    std::to_string(f.vertex_count()) + " vertices");
        break;
      }
    if (k >= 3 && !rigid_certified(g).certified) fail(r, name + " not certified rigid");
  }
  return r;
}

SweepResult sweep_glued_cycles(const std::vector<DirectedGraph>& graphs) {
  SweepResult r;
  r.name = "glued even directed cycles (rigid, triangular 2-faces)";
  for (const auto& g : graphs) {
    ++r.checked;
    auto verdict = rigid_certified(g);
    auto census = two_faces_all_triangles(directed_edge_polytope(g));
    if (!verdict.certified || !census.all_triangles) {
      std::string msg = describe(g) + " rigid_certified=" + yes_no(verdict.certified) +
                        " all_triangles=" + yes_no(census.all_triangles);
      if (verdict.witness) {
        msg += " witness=" + witness_kind(*verdict.witness) + "(";
        auto v = witness_vertices(*verdict.witness);
        for (std::size_t i = 0; i < 4; ++i) msg += (i ? "," : "") + std::to_string(v[i]);
        msg += ")";
      }
      fail(r, msg);
    }
  }
  return r;
}

SweepResult sweep_supporting_hyperplane(std::size_t count, std::uint64_t seed, int max_n) {
  SweepResult r;
  r.name = "supporting hyperplane postcondition";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(3, max_n);
  std::set<std::pair<int, AdjacencyCode>> seen;
  std::size_t attempts = 0;
  while (r.checked < count) {
    if (++attempts > count * 1000) {
      fail(r, "ran out of random graphs with a qualifying cycle");
      break;
    }
    int n = size(rng);
    auto g = random_connected_fano(n, rng);
    if (!seen.insert({n, canonical_code(g)}).second) continue;
    auto c = find_supporting_cycle(g);
    if (!c) continue;
    ++r.checked;
    try {
      auto h = supporting_hyperplane(g, *c);
      auto value = [&](const Arc& e) {
        return h.coefficients[static_cast<std::size_t>(e.tail - 1)] - h.coefficients[static_cast<std::size_t>(e.head - 1)];
      };
      for (const auto& e : g.arcs())
        if (value(e) > 1) fail(r, describe(g) + " arc " + to_string(e) + " above the hyperplane");
      for (const auto& e : c->walk.arcs)
        if (value(e) != 1) fail(r, describe(g) + " cycle arc " + to_string(e) + " off the hyperplane");
    } catch (const std::exception& ex) {
      fail(r, describe(g) + " " + ex.what());
    }
  }
  return r;
}

std::vector<SweepResult> run_verification(const VerifyOptions& options,
                                          const std::function<void(const SweepResult&)>& on_done) {
  if (options.max_n < 1 || options.max_n > 6)
    throw std::invalid_argument("max-n must be between 1 and 6");
  const int exhaustive = std::min(options.max_n, 5);
  auto fano = connected_fano_digraphs(exhaustive);
  auto all = all_small_digraphs(exhaustive);
  if (options.max_n == 6 && options.samples > 0) {
    auto sample = distinct_random_fano(6, options.samples, options.seed);
    fano.insert(fano.end(), sample.begin(), sample.end());
    all.insert(all.end(), sample.begin(), sample.end());
  }
  std::vector<SweepResult> results;
  auto record = [&](SweepResult r) {
    if (on_done) on_done(r);
    results.push_back(std::move(r));
  };
  record(sweep_main_equivalence(fano, options.policy));
  record(sweep_fano_equivalence(all));
  record(sweep_smooth_equivalence(fano));
  record(sweep_face_criterion(exhaustive));
  return results;
}

}  // namespace edgepoly
