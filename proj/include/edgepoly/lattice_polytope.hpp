#pragma once

// Exact lattice polytopes given by their vertices. The polytope is rewritten
// in coordinates of a Z-basis of its affine lattice, where facets are found
// by the double description method and the face lattice by intersecting
// facet incidence sets.

#include "edgepoly/int_matrix.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

namespace edgepoly {

using Point = IntVector;

/// Bit i refers to vertex i of the owning polytope.
using VertexSet = std::uint64_t;

inline constexpr std::size_t kMaxPolytopeVertices = 64;

class GeometryError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Facet {x : normal . x <= rhs} in embedded coordinates, normal primitive.
struct Facet {
  IntVector normal;
  Integer rhs;
  VertexSet incident = 0;
};

struct Face {
  VertexSet vertices = 0;
  int dim = -1;
  std::size_t vertex_count() const;
};

/// Extreme points of conv(points), sorted lexicographically. Exact.
std::vector<Point> hull_vertices(std::vector<Point> points);

class LatticePolytope {
 public:
  /// Takes the convex hull of `points` (duplicates and non-vertices dropped).
  explicit LatticePolytope(std::vector<Point> points);

  std::size_t ambient_dim() const { return ambient_dim_; }
  int dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::optional<std::size_t> vertex_index(const Point& p) const;
  VertexSet all_vertices() const;

  /// Translation used for the embedding: the origin when it lies in the affine
  /// hull, otherwise the lexicographically smallest vertex.
  const Point& base_point() const { return base_; }
  bool origin_in_affine_hull() const { return origin_in_hull_; }

  /// Z-basis of (aff - base) intersected with Z^n; dim() vectors in Z^n.
  const std::vector<Point>& lattice_basis() const { return basis_; }
  const std::vector<Point>& embedded_vertices() const { return embedded_; }

  /// Coordinates of an ambient lattice point in the lattice basis, or nullopt
  /// when it is not in the affine lattice of the polytope.
  std::optional<Point> embed(const Point& ambient) const;

  /// Irredundant facet list, sorted by (normal, rhs). Throws on dim 0.
  const std::vector<Facet>& facets() const;

  /// Proper faces of dimension k, 0 <= k < dim(), sorted by vertex set.
  std::vector<Face> faces_of_dim(int k) const;

  /// Every face, including the empty face and the polytope itself.
  std::vector<Face> all_faces() const;

  /// f-vector f_0 .. f_{d-1} of proper nonempty faces.
  std::vector<std::size_t> f_vector() const;

  std::vector<Point> vertex_points(VertexSet s) const;

 private:
  struct Cache;
  const std::vector<std::vector<VertexSet>>& face_levels(int lowest) const;

  std::size_t ambient_dim_ = 0;
  int dim_ = 0;
  std::vector<Point> vertices_;
  Point base_;
  bool origin_in_hull_ = false;
  std::vector<Point> basis_;
  std::vector<Point> embedded_;
  IntMatrix to_embedded_;  // ambient n x n unimodular; first dim_ columns give coordinates
  std::shared_ptr<Cache> cache_;
};

/// Affine rank of a finite point set (-1 for the empty set).
int affine_dimension(const std::vector<Point>& points);

/// dim > 0 and the origin lies strictly inside every facet inequality.
bool origin_in_relative_interior(const LatticePolytope& p);

// Fano-polytope dictionary. Everything except is_fano requires the polytope to
// contain the origin in its relative interior and throws GeometryError otherwise.
bool is_fano(const LatticePolytope& p);
bool is_reflexive(const LatticePolytope& p);
bool is_terminal(const LatticePolytope& p);
bool is_simplicial(const LatticePolytope& p);
bool is_smooth(const LatticePolytope& p);

/// Lattice points of the polytope, in ambient coordinates.
std::vector<Point> lattice_points(const LatticePolytope& p);

/// Every proper edge has exactly two lattice points.
bool edge_lattice_lengths_ok(const LatticePolytope& p);
/// Every proper edge lies on a dual-lattice functional of value one.
bool edges_at_height_one(const LatticePolytope& p);

struct TwoFaceCensus {
  bool all_triangles = true;
  std::map<std::size_t, std::size_t> vertex_counts;  // #vertices -> #2-faces
};

/// Vacuously all-triangle when dim <= 2.
TwoFaceCensus two_faces_all_triangles(const LatticePolytope& p);

/// conv{(p, 0) u (0, q)}; both arguments must be Fano.
LatticePolytope free_sum(const LatticePolytope& p, const LatticePolytope& q);

}  // namespace edgepoly
