#include "edgepoly/lattice_polytope.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <mutex>
#include <optional>

namespace edgepoly {

namespace {

using Rational = boost::multiprecision::cpp_rational;

VertexSet bit(std::size_t i) { return VertexSet{1} << i; }

VertexSet full_set(std::size_t count) {
  return count >= 64 ? ~VertexSet{0} : bit(count) - 1;
}

void check_points(const std::vector<Point>& points) {
  if (points.empty()) throw GeometryError("point set is empty");
  for (const auto& p : points)
    if (p.size() != points.front().size()) throw GeometryError("points of mixed dimension");
}

IntVector subtract(const Point& a, const Point& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

struct Chart {
  Point base;
  bool origin_in_hull = false;
  std::size_t rank = 0;
  IntMatrix transform;
  std::vector<Point> basis;
};

Chart make_chart(const std::vector<Point>& points) {
  const std::size_t n = points.front().size();
  Chart c;
  IntMatrix diffs;
  for (const auto& p : points) diffs.push_back(subtract(p, points.front()));
  const std::size_t affine_rank = rank(diffs);
  c.origin_in_hull = rank(points) == affine_rank;
  c.base = c.origin_in_hull ? Point(n, 0) : *std::min_element(points.begin(), points.end());
  IntMatrix rows;
  for (const auto& p : points) rows.push_back(subtract(p, c.base));
  auto form = column_hermite_form(rows, n);
  c.rank = form.rank;
  c.transform = std::move(form.transform);
  for (std::size_t k = 0; k < c.rank; ++k) c.basis.push_back(form.inverse[k]);
  return c;
}

// Full coordinate vector (p - base) * T; the point is in the affine lattice
// iff entries rank..n-1 vanish.
IntVector chart_coordinates(const Chart& c, const Point& p) {
  const std::size_t n = p.size();
  IntVector shifted = subtract(p, c.base);
  IntVector y(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (shifted[i] != 0 && c.transform[i][j] != 0) y[j] += shifted[i] * c.transform[i][j];
  return y;
}

// Rays of {y : B y >= 0} for invertible B: the columns of B^{-1}.
std::vector<IntVector> initial_rays(const IntMatrix& b) {
  const std::size_t n = b.size();
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(b[i][j]);
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (aug[p][c] == 0) ++p;
    std::swap(aug[p], aug[c]);
    Rational piv = aug[c][c];
    for (auto& x : aug[c]) x /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[c][j];
    }
  }
  std::vector<IntVector> rays;
  for (std::size_t k = 0; k < n; ++k) {
    Integer lcm = 1;
    for (std::size_t i = 0; i < n; ++i) {
      const Integer& den = boost::multiprecision::denominator(aug[i][n + k]);
      lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
    }
    IntVector r(n);
    for (std::size_t i = 0; i < n; ++i)
      r[i] = boost::multiprecision::numerator(aug[i][n + k]) * (lcm /
             boost::multiprecision::denominator(aug[i][n + k]));
    rays.push_back(make_primitive(std::move(r)));
  }
  return rays;
}

// Double description on the homogenised cone: the facets of conv(points) are
// the extreme rays (-a, c) of {y : (p, 1) . y >= 0 for all points p}.
// `points` must be full-dimensional in Z^d, d >= 1.
std::vector<Facet> facets_by_double_description(const std::vector<Point>& points, std::size_t d) {
  const std::size_t m = points.size();
  if (m > kMaxPolytopeVertices)
    throw GeometryError("at most " + std::to_string(kMaxPolytopeVertices) + " points supported");
  const std::size_t dd = d + 1;
  IntMatrix rows;
  for (const auto& p : points) {
    IntVector r = p;
    r.push_back(1);
    rows.push_back(std::move(r));
  }

  std::vector<std::size_t> basis;
  IntMatrix chosen;
  for (std::size_t i = 0; i < m && basis.size() < dd; ++i) {
    chosen.push_back(rows[i]);
    if (rank(chosen) == chosen.size()) {
      basis.push_back(i);
    } else {
      chosen.pop_back();
    }
  }
  if (basis.size() != dd) throw GeometryError("point set is not full-dimensional");

  struct Ray {
    IntVector y;
    VertexSet zeros;
  };
  std::vector<Ray> rays;
  {
    auto init = initial_rays(chosen);
    for (std::size_t k = 0; k < dd; ++k) {
      VertexSet z = 0;
      for (std::size_t j = 0; j < dd; ++j)
        if (j != k) z |= bit(basis[j]);
      rays.push_back({std::move(init[k]), z});
    }
  }

  std::vector<bool> in_basis(m, false);
  for (auto i : basis) in_basis[i] = true;

  for (std::size_t i = 0; i < m; ++i) {
    if (in_basis[i]) continue;
    std::vector<Integer> vals(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      vals[r] = dot(rows[i], rays[r].y);
      if (vals[r] > 0) {
        pos.push_back(r);
      } else if (vals[r] < 0) {
        neg.push_back(r);
      }
    }
    std::vector<Ray> next;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (vals[r] > 0) next.push_back(rays[r]);
      if (vals[r] == 0) next.push_back({rays[r].y, rays[r].zeros | bit(i)});
    }
    for (auto p : pos) {
      for (auto q : neg) {
        VertexSet z = rays[p].zeros & rays[q].zeros;
        if (static_cast<std::size_t>(std::popcount(z)) + 2 < dd) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && (rays[r].zeros & z) == z) adjacent = false;
        if (!adjacent) continue;
        IntVector y(dd);
        for (std::size_t k = 0; k < dd; ++k) y[k] = vals[p] * rays[q].y[k] - vals[q] * rays[p].y[k];
        next.push_back({make_primitive(std::move(y)), z | bit(i)});
      }
    }
    rays = std::move(next);
  }

  std::vector<Facet> facets;
  for (auto& r : rays) {
    IntVector normal(r.y.begin(), r.y.begin() + static_cast<std::ptrdiff_t>(d));
    for (auto& x : normal) x = -x;
    Integer rhs = r.y[d];
    Integer g = gcd_of(normal);
    if (g == 0) continue;  // the trivial inequality 0 <= c cannot occur for bounded input
    for (auto& x : normal) x /= g;
    rhs /= g;
    Facet f{std::move(normal), std::move(rhs), 0};
    for (std::size_t j = 0; j < m; ++j)
      if (dot(f.normal, points[j]) == f.rhs) f.incident |= bit(j);
    facets.push_back(std::move(f));
  }
  std::sort(facets.begin(), facets.end(), [](const Facet& a, const Facet& b) {
    return std::tie(a.normal, a.rhs) < std::tie(b.normal, b.rhs);
  });
  return facets;
}

std::vector<Point> dedupe(std::vector<Point> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

struct HullResult {
  std::vector<Point> vertices;  // sorted
  Chart chart;
  std::vector<Point> embedded;
  std::vector<Facet> facets;  // incidence over `vertices`
  bool facets_ready = false;
};

HullResult compute_hull(std::vector<Point> raw) {
  check_points(raw);
  auto points = dedupe(std::move(raw));
  HullResult h;
  h.chart = make_chart(points);
  const std::size_t d = h.chart.rank;
  std::vector<Point> emb;
  for (const auto& p : points) {
    auto y = chart_coordinates(h.chart, p);
    emb.emplace_back(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(d));
  }
  if (d == 0) {
    h.vertices = points;
    h.embedded = emb;
    return h;
  }
  auto facets = facets_by_double_description(emb, d);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < points.size(); ++i) {
    VertexSet meet = full_set(points.size());
    for (const auto& f : facets)
      if (f.incident & bit(i)) meet &= f.incident;
    if (meet == bit(i)) keep.push_back(i);
  }
  for (auto i : keep) {
    h.vertices.push_back(points[i]);
    h.embedded.push_back(emb[i]);
  }
  for (auto& f : facets) {
    VertexSet inc = 0;
    for (std::size_t k = 0; k < keep.size(); ++k)
      if (f.incident & bit(keep[k])) inc |= bit(k);
    f.incident = inc;
  }
  h.facets = std::move(facets);
  h.facets_ready = true;
  return h;
}

}  // namespace

std::size_t Face::vertex_count() const { return static_cast<std::size_t>(std::popcount(vertices)); }

std::vector<Point> hull_vertices(std::vector<Point> points) {
  return compute_hull(std::move(points)).vertices;
}

int affine_dimension(const std::vector<Point>& points) {
  if (points.empty()) return -1;
  IntMatrix diffs;
  for (const auto& p : points) diffs.push_back(subtract(p, points.front()));
  return static_cast<int>(rank(diffs));
}

struct LatticePolytope::Cache {
  std::mutex mutex;
  std::vector<Facet> facets;
  bool facets_ready = false;
  // levels[k] holds the k-dimensional faces; filled from the top down.
  std::vector<std::vector<VertexSet>> levels;
  int lowest = 0;
};

LatticePolytope::LatticePolytope(std::vector<Point> points) : cache_(std::make_shared<Cache>()) {
  auto h = compute_hull(std::move(points));
  ambient_dim_ = h.vertices.front().size();
  dim_ = static_cast<int>(h.chart.rank);
  vertices_ = std::move(h.vertices);
  embedded_ = std::move(h.embedded);
  base_ = std::move(h.chart.base);
  origin_in_hull_ = h.chart.origin_in_hull;
  basis_ = std::move(h.chart.basis);
  to_embedded_ = std::move(h.chart.transform);
  if (vertices_.size() > kMaxPolytopeVertices)
    throw GeometryError("at most " + std::to_string(kMaxPolytopeVertices) + " vertices supported");
  cache_->facets = std::move(h.facets);
  cache_->facets_ready = h.facets_ready;
  cache_->lowest = dim_ + 1;
}

std::optional<std::size_t> LatticePolytope::vertex_index(const Point& p) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

VertexSet LatticePolytope::all_vertices() const { return full_set(vertices_.size()); }

std::optional<Point> LatticePolytope::embed(const Point& ambient) const {
  if (ambient.size() != ambient_dim_) throw GeometryError("embed: dimension mismatch");
  Chart c{base_, origin_in_hull_, static_cast<std::size_t>(dim_), to_embedded_, {}};
  auto y = chart_coordinates(c, ambient);
  for (std::size_t j = static_cast<std::size_t>(dim_); j < y.size(); ++j)
    if (y[j] != 0) return std::nullopt;
  y.resize(static_cast<std::size_t>(dim_));
  return y;
}

const std::vector<Facet>& LatticePolytope::facets() const {
  if (dim_ == 0) throw GeometryError("facets: polytope has dimension 0");
  std::lock_guard lock(cache_->mutex);
  if (!cache_->facets_ready) {
    cache_->facets = facets_by_double_description(embedded_, static_cast<std::size_t>(dim_));
    cache_->facets_ready = true;
  }
  return cache_->facets;
}

const std::vector<std::vector<VertexSet>>& LatticePolytope::face_levels(int lowest) const {
  const auto& fs = facets();
  std::lock_guard lock(cache_->mutex);
  auto& c = *cache_;
  if (c.levels.empty()) {
    c.levels.resize(static_cast<std::size_t>(dim_) + 1);
    c.levels[dim_] = {all_vertices()};
    for (const auto& f : fs) c.levels[dim_ - 1].push_back(f.incident);
    std::sort(c.levels[dim_ - 1].begin(), c.levels[dim_ - 1].end());
    c.lowest = dim_ - 1;
  }
  // The facets of a face F are the inclusion-maximal sets F & G over facets G
  // not containing F.
  while (c.lowest > lowest) {
    std::vector<VertexSet> next;
    for (VertexSet face : c.levels[c.lowest]) {
      std::vector<VertexSet> cand;
      for (const auto& f : fs) {
        VertexSet s = face & f.incident;
        if (s != face && s != 0) cand.push_back(s);
      }
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
      for (VertexSet s : cand) {
        bool maximal = std::none_of(cand.begin(), cand.end(), [s](VertexSet t) {
          return t != s && (t & s) == s;
        });
        if (maximal) next.push_back(s);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    --c.lowest;
    c.levels[c.lowest] = std::move(next);
  }
  return c.levels;
}

std::vector<Face> LatticePolytope::faces_of_dim(int k) const {
  if (k < 0 || k >= dim_)
    throw std::out_of_range("faces_of_dim: k must satisfy 0 <= k < " + std::to_string(dim_));
  const auto& levels = face_levels(k);
  std::vector<Face> out;
  for (VertexSet s : levels[k]) out.push_back({s, k});
  return out;
}

std::vector<Face> LatticePolytope::all_faces() const {
  std::vector<Face> out{{0, -1}};
  if (dim_ == 0) {
    out.push_back({all_vertices(), 0});
    return out;
  }
  const auto& levels = face_levels(0);
  for (int k = 0; k <= dim_; ++k)
    for (VertexSet s : levels[k]) out.push_back({s, k});
  return out;
}

std::vector<std::size_t> LatticePolytope::f_vector() const {
  std::vector<std::size_t> f;
  if (dim_ == 0) return f;
  const auto& levels = face_levels(0);
  for (int k = 0; k < dim_; ++k) f.push_back(levels[k].size());
  return f;
}

std::vector<Point> LatticePolytope::vertex_points(VertexSet s) const {
  std::vector<Point> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (s & bit(i)) out.push_back(vertices_[i]);
  return out;
}

bool is_fano(const LatticePolytope& p) {
  if (p.dim() == 0 || !p.origin_in_affine_hull()) return false;
  for (const auto& f : p.facets())
    if (f.rhs <= 0) return false;
  for (const auto& v : p.vertices())
    if (gcd_of(v) != 1) return false;
  return true;
}

namespace {

void require_origin_interior(const LatticePolytope& p, const char* what) {
  if (!origin_in_relative_interior(p))
    throw GeometryError(std::string(what) + ": the origin is not in the relative interior");
}

}  // namespace

bool origin_in_relative_interior(const LatticePolytope& p) {
  if (p.dim() <= 0 || !p.origin_in_affine_hull()) return false;
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [](const Facet& f) { return f.rhs > 0; });
}

bool is_reflexive(const LatticePolytope& p) {
  require_origin_interior(p, "is_reflexive");
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [](const Facet& f) { return f.rhs == 1; });
}

std::vector<Point> lattice_points(const LatticePolytope& p) {
  if (p.dim() == 0) return p.vertices();
  const std::size_t n = p.ambient_dim();
  const std::size_t d = static_cast<std::size_t>(p.dim());
  const auto& facets = p.facets();

  auto box_of = [](const std::vector<Point>& pts, std::size_t width) {
    std::vector<std::pair<Integer, Integer>> box(width);
    for (std::size_t i = 0; i < width; ++i) {
      box[i] = {pts.front()[i], pts.front()[i]};
      for (const auto& q : pts) {
        box[i].first = std::min(box[i].first, q[i]);
        box[i].second = std::max(box[i].second, q[i]);
      }
    }
    return box;
  };
  auto volume = [](const std::vector<std::pair<Integer, Integer>>& box) {
    Integer v = 1;
    for (const auto& [lo, hi] : box) v *= hi - lo + 1;
    return v;
  };
  auto inside = [&](const Point& y) {
    return std::all_of(facets.begin(), facets.end(),
                       [&](const Facet& f) { return dot(f.normal, y) <= f.rhs; });
  };
  auto for_each_box_point = [](const std::vector<std::pair<Integer, Integer>>& box, auto&& fn) {
    Point x(box.size());
    for (std::size_t i = 0; i < box.size(); ++i) x[i] = box[i].first;
    while (true) {
      fn(x);
      std::size_t i = 0;
      while (i < box.size() && x[i] == box[i].second) {
        x[i] = box[i].first;
        ++i;
      }
      if (i == box.size()) return;
      ++x[i];
    }
  };

  auto emb_box = box_of(p.embedded_vertices(), d);
  auto amb_box = box_of(p.vertices(), n);
  std::vector<Point> out;
  if (volume(emb_box) <= volume(amb_box)) {
    for_each_box_point(emb_box, [&](const Point& y) {
      if (!inside(y)) return;
      Point x = p.base_point();
      for (std::size_t k = 0; k < d; ++k)
        if (y[k] != 0)
          for (std::size_t i = 0; i < n; ++i) x[i] += y[k] * p.lattice_basis()[k][i];
      out.push_back(std::move(x));
    });
  } else {
    for_each_box_point(amb_box, [&](const Point& x) {
      auto y = p.embed(x);
      if (y && inside(*y)) out.push_back(x);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_terminal(const LatticePolytope& p) {
  require_origin_interior(p, "is_terminal");
  for (const auto& x : lattice_points(p)) {
    auto y = *p.embed(x);
    bool boundary = std::any_of(p.facets().begin(), p.facets().end(),
                                [&](const Facet& f) { return dot(f.normal, y) == f.rhs; });
    if (boundary && !p.vertex_index(x)) return false;
  }
  return true;
}

bool is_simplicial(const LatticePolytope& p) {
  require_origin_interior(p, "is_simplicial");
  return std::all_of(p.facets().begin(), p.facets().end(), [&](const Facet& f) {
    return std::popcount(f.incident) == p.dim();
  });
}

bool is_smooth(const LatticePolytope& p) {
  require_origin_interior(p, "is_smooth");
  for (const auto& f : p.facets()) {
    if (std::popcount(f.incident) != p.dim()) return false;
    IntMatrix m;
    for (std::size_t i = 0; i < p.vertex_count(); ++i)
      if (f.incident & bit(i)) m.push_back(p.embedded_vertices()[i]);
    Integer det = determinant(m);
    if (det != 1 && det != -1) return false;
  }
  return true;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> proper_edges(const LatticePolytope& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (p.dim() < 2) return out;
  for (const auto& e : p.faces_of_dim(1)) {
    std::size_t a = static_cast<std::size_t>(std::countr_zero(e.vertices));
    std::size_t b = static_cast<std::size_t>(63 - std::countl_zero(e.vertices));
    out.emplace_back(a, b);
  }
  return out;
}

}  // namespace

bool edge_lattice_lengths_ok(const LatticePolytope& p) {
  for (auto [a, b] : proper_edges(p))
    if (gcd_of(subtract(p.vertices()[a], p.vertices()[b])) != 1) return false;
  return true;
}

bool edges_at_height_one(const LatticePolytope& p) {
  const std::size_t d = static_cast<std::size_t>(p.dim());
  for (auto [a, b] : proper_edges(p)) {
    IntMatrix m{p.embedded_vertices()[a], p.embedded_vertices()[b]};
    if (!solve_integer(m, IntVector{1, 1}, d)) return false;
  }
  return true;
}

TwoFaceCensus two_faces_all_triangles(const LatticePolytope& p) {
  TwoFaceCensus c;
  if (p.dim() <= 2) return c;
  for (const auto& f : p.faces_of_dim(2)) {
    ++c.vertex_counts[f.vertex_count()];
    if (f.vertex_count() != 3) c.all_triangles = false;
  }
  return c;
}

LatticePolytope free_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (!is_fano(p) || !is_fano(q)) throw GeometryError("free_sum: both summands must be Fano");
  const std::size_t n = p.ambient_dim(), m = q.ambient_dim();
  std::vector<Point> pts;
  for (const auto& v : p.vertices()) {
    Point x(n + m, 0);
    std::copy(v.begin(), v.end(), x.begin());
    pts.push_back(std::move(x));
  }
  for (const auto& v : q.vertices()) {
    Point x(n + m, 0);
    std::copy(v.begin(), v.end(), x.begin() + static_cast<std::ptrdiff_t>(n));
    pts.push_back(std::move(x));
  }
  return LatticePolytope(std::move(pts));
}

}  // namespace edgepoly
