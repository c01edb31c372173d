#include "edgepoly/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace edgepoly {

namespace {

struct ExtendedGcd {
  Integer g, x, y;  // x * a + y * b == g >= 0
};

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
    tmp = old_t - q * t;
    old_t = std::move(t);
    t = std::move(tmp);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::size_t column_count(const IntMatrix& a, std::size_t columns) {
  for (const auto& row : a)
    if (row.size() != columns) throw std::invalid_argument("ragged matrix");
  return columns;
}

}  // namespace

Integer gcd_of(std::span<const Integer> values) {
  Integer g = 0;
  for (const auto& v : values) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

IntVector make_primitive(IntVector v) {
  Integer g = gcd_of(v);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::size_t rank(IntMatrix a) {
  if (a.empty()) return 0;
  const std::size_t m = a.size(), n = a.front().size();
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j < n; ++j)
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

Integer determinant(IntMatrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("determinant: not square");
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

ColumnHermiteForm column_hermite_form(const IntMatrix& a, std::size_t columns) {
  const std::size_t n = column_count(a, columns);
  const std::size_t m = a.size();
  ColumnHermiteForm out;
  out.hermite = a;
  out.transform.assign(n, IntVector(n, 0));
  out.inverse.assign(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) out.transform[i][i] = out.inverse[i][i] = 1;

  auto& h = out.hermite;
  auto& t = out.transform;
  auto& tinv = out.inverse;

  // Column ops are mirrored on `transform` (same op) and on `inverse`
  // (inverse op applied to rows from the left).
  auto combine = [&](std::size_t r, std::size_t c, const Integer& x, const Integer& y,
                     const Integer& ap, const Integer& bp) {
    // [col_r, col_c] <- [x col_r + y col_c, -bp col_r + ap col_c]
    auto mix_columns = [&](IntMatrix& mat) {
      for (auto& row : mat) {
        Integer u = row[r], v = row[c];
        row[r] = x * u + y * v;
        row[c] = ap * v - bp * u;
      }
    };
    mix_columns(h);
    mix_columns(t);
    // [row_r, row_c] <- [ap row_r + bp row_c, -y row_r + x row_c]
    for (std::size_t k = 0; k < n; ++k) {
      Integer u = tinv[r][k], v = tinv[c][k];
      tinv[r][k] = ap * u + bp * v;
      tinv[c][k] = x * v - y * u;
    }
  };
  auto subtract_multiple = [&](std::size_t c, std::size_t r, const Integer& q) {
    // col_c -= q col_r ; row_r += q row_c
    for (auto& row : h) row[c] -= q * row[r];
    for (auto& row : t) row[c] -= q * row[r];
    for (std::size_t k = 0; k < n; ++k) tinv[r][k] += q * tinv[c][k];
  };
  auto negate = [&](std::size_t r) {
    for (auto& row : h) row[r] = -row[r];
    for (auto& row : t) row[r] = -row[r];
    for (std::size_t k = 0; k < n; ++k) tinv[r][k] = -tinv[r][k];
  };

  std::size_t r = 0;
  for (std::size_t i = 0; i < m && r < n; ++i) {
    for (std::size_t c = r + 1; c < n; ++c) {
      if (h[i][c] == 0) continue;
      if (h[i][r] == 0) {
        // swap with a sign flip keeps the determinant at +1
        combine(r, c, 0, 1, 0, 1);
        continue;
      }
      auto [g, x, y] = extended_gcd(h[i][r], h[i][c]);
      Integer ap = h[i][r] / g, bp = h[i][c] / g;
      combine(r, c, x, y, ap, bp);
    }
    if (h[i][r] == 0) continue;
    if (h[i][r] < 0) negate(r);
    for (std::size_t c = 0; c < r; ++c) {
      Integer q = floor_div(h[i][c], h[i][r]);
      if (q != 0) subtract_multiple(c, r, q);
    }
    out.pivot_rows.push_back(i);
    ++r;
  }
  out.rank = r;
  return out;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b,
                                       std::size_t columns) {
  if (b.size() != a.size()) throw std::invalid_argument("solve_integer: size mismatch");
  auto form = column_hermite_form(a, columns);
  const auto& h = form.hermite;
  IntVector y(columns, 0);
  for (std::size_t k = 0; k < form.rank; ++k) {
    std::size_t row = form.pivot_rows[k];
    Integer rest = b[row];
    for (std::size_t j = 0; j < k; ++j) rest -= h[row][j] * y[j];
    if (rest % h[row][k] != 0) return std::nullopt;
    y[k] = rest / h[row][k];
  }
  for (std::size_t row = 0; row < a.size(); ++row) {
    Integer s = 0;
    for (std::size_t j = 0; j < form.rank; ++j) s += h[row][j] * y[j];
    if (s != b[row]) return std::nullopt;
  }
  IntVector x(columns, 0);
  for (std::size_t i = 0; i < columns; ++i)
    for (std::size_t j = 0; j < form.rank; ++j) x[i] += form.transform[i][j] * y[j];
  return x;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a, std::size_t columns) {
  auto form = column_hermite_form(a, columns);
  std::vector<IntVector> basis;
  for (std::size_t j = form.rank; j < columns; ++j) {
    IntVector v(columns);
    for (std::size_t i = 0; i < columns; ++i) v[i] = form.transform[i][j];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace edgepoly
