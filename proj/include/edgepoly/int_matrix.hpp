#pragma once

// Exact integer linear algebra: ranks, determinants, column-style Hermite
// normal form and integer linear systems. Everything here is arbitrary
// precision; nothing touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace edgepoly {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;
/// Row-major dense matrix; every row has the same length.
using IntMatrix = std::vector<IntVector>;

Integer gcd_of(std::span<const Integer> values);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVector make_primitive(IntVector v);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);

/// Floor division, b != 0.
Integer floor_div(const Integer& a, const Integer& b);

std::size_t rank(IntMatrix a);

/// Bareiss fraction-free elimination; `a` must be square.
Integer determinant(IntMatrix a);

/// Result of unimodular column reduction `input * transform == hermite`.
///
/// `hermite` is in column echelon form: column k (k < rank) has its leading
/// nonzero entry, which is positive, in row pivot_rows[k], strictly below
/// the leading entry of column k-1. Entries to the left of a pivot are reduced
/// into [0, pivot). Columns rank..n-1 are identically zero, so the last
/// n - rank columns of `transform` are a Z-basis of the integer kernel.
struct ColumnHermiteForm {
  IntMatrix hermite;
  IntMatrix transform;
  IntMatrix inverse;  // transform^{-1}
  std::vector<std::size_t> pivot_rows;
  std::size_t rank = 0;
};

/// `a` is m x n with n given explicitly, so zero-row matrices are fine.
ColumnHermiteForm column_hermite_form(const IntMatrix& a, std::size_t columns);

/// Integer solution x of a x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b,
                                       std::size_t columns);

/// Z-basis of {x in Z^n : a x = 0}, as a list of vectors.
std::vector<IntVector> integer_kernel(const IntMatrix& a, std::size_t columns);

}  // namespace edgepoly
