#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace statikit {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;  // row-major
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

IntVector make_int_vector(std::initializer_list<long> values);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);
Integer content(std::span<const Integer> v);
bool is_zero(std::span<const Integer> v);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
IntVector primitive(IntVector v);

/// Clears denominators and divides by the content.
IntVector primitive_integer(const RatVector& v);

RatMatrix to_rational(const IntMatrix& m);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& m, std::size_t ncols);

std::size_t rank(const IntMatrix& m, std::size_t ncols);

/// Primitive integer basis of { x : m x = 0 }.
std::vector<IntVector> integer_nullspace(const IntMatrix& m, std::size_t ncols);

/// Square matrix determinant (Bareiss).
Integer determinant(IntMatrix m);

/// Unique solution of a nonsingular square system.
std::optional<RatVector> solve_square(const RatMatrix& a, const RatVector& b);

/// Rational inverse of a nonsingular square matrix.
std::optional<RatMatrix> inverse(const RatMatrix& a);

/// Diagonal of the Smith normal form (nonzero entries only, each dividing the next).
/// Pivots on the smallest nonzero absolute value, ties broken by (row, column).
std::vector<Integer> smith_invariants(IntMatrix m);

/// Rational floor.
Integer floor(const Rational& q);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q" decimal strings; throws Error(kInvalidInput).
Integer parse_integer(const std::string& s);
Rational parse_rational(const std::string& s);

}  // namespace statikit
