#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "statikit/arith.hpp"

namespace statikit {

/// Upper bound on ring variables, including auxiliary ones used internally
/// (homogenizing variable); exponent vectors are fixed-size arrays.
inline constexpr std::size_t kMaxVariables = 8;

using Exponent = std::array<std::int32_t, kMaxVariables>;

/// coeff * x^exponent * e_component. Exponents may be negative (Laurent).
struct LaurentTerm {
  Rational coeff;
  Exponent exponent{};
  std::size_t component = 0;
};

/// A monomial order on the terms x^a e_i of a free module.
///
/// Terms are compared by: the optional component block (components below the
/// block size dominate everything else), optionally the position, then the
/// weight rows in sequence, then graded reverse lexicographic order, and
/// finally the component index (a smaller index is larger).
class TermOrder {
 public:
  static TermOrder grevlex(std::size_t nvars);
  /// Weight rows compared before the grevlex tiebreak. The first row must
  /// make the order global, e.g. the all-ones degree row.
  static TermOrder weighted(std::size_t nvars, std::vector<std::vector<std::int64_t>> rows);

  TermOrder eliminating_components(std::size_t block) const;
  TermOrder position_over_term() const;

  std::size_t nvars() const { return nvars_; }
  const std::vector<std::vector<std::int64_t>>& weights() const { return weights_; }
  std::size_t elimination_block() const { return block_; }
  bool is_position_over_term() const { return position_first_; }

  /// Positive when (a, ca) is the larger term.
  int compare(const Exponent& a, std::size_t ca, const Exponent& b, std::size_t cb) const;
  int compare(const LaurentTerm& a, const LaurentTerm& b) const {
    return compare(a.exponent, a.component, b.exponent, b.component);
  }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<std::vector<std::int64_t>> weights_;
  std::size_t block_ = 0;
  bool position_first_ = false;
};

/// An element of k[x_1^{+-1}, ..., x_n^{+-1}]^m.
///
/// Terms are unique per (exponent, component), nonzero, and stored in
/// decreasing grevlex order with component as the last tiebreak. Rank one
/// vectors double as (Laurent) polynomials.
class ModuleVector {
 public:
  ModuleVector() = default;
  ModuleVector(std::size_t nvars, std::size_t rank) : nvars_(nvars), rank_(rank) {}
  ModuleVector(std::size_t nvars, std::size_t rank, std::vector<LaurentTerm> terms);

  static ModuleVector unit(std::size_t nvars, std::size_t rank, std::size_t component);
  static ModuleVector constant(std::size_t nvars, const Rational& c);
  static ModuleVector variable(std::size_t nvars, std::size_t var);
  static ModuleVector monomial(std::size_t nvars, std::size_t rank, std::size_t component, const Exponent& exponent,
                               const Rational& coeff = 1);

  std::size_t nvars() const { return nvars_; }
  std::size_t rank() const { return rank_; }
  const std::vector<LaurentTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when no exponent is negative.
  bool is_polynomial() const;

  /// Entry i as a rank-one vector.
  ModuleVector component(std::size_t i) const;

  ModuleVector operator+(const ModuleVector& o) const;
  ModuleVector operator-(const ModuleVector& o) const;
  ModuleVector operator-() const;
  ModuleVector scaled(const Rational& c) const;
  ModuleVector shifted(const Exponent& e) const;
  /// Moves every entry into component `offset + i` of a module of rank `new_rank`.
  ModuleVector embedded(std::size_t new_rank, std::size_t offset) const;
  /// Same terms read in a ring with more variables.
  ModuleVector with_nvars(std::size_t nvars) const;

  friend bool operator==(const ModuleVector&, const ModuleVector&);

 private:
  std::size_t nvars_ = 0;
  std::size_t rank_ = 0;
  std::vector<LaurentTerm> terms_;
};

/// Product of a rank-one vector (polynomial) with a module vector.
ModuleVector multiply(const ModuleVector& poly, const ModuleVector& v);

/// Sum_i columns[i] * coeffs.component(i): the image of a vector under a matrix given by its columns.
ModuleVector apply_columns(const std::vector<ModuleVector>& columns, const ModuleVector& coeffs,
                           std::size_t target_rank);

/// Leading term of a nonzero vector under an order.
const LaurentTerm& leading_term(const ModuleVector& v, const TermOrder& order);

/// Terms sorted decreasingly under an order.
std::vector<LaurentTerm> sorted_terms(const ModuleVector& v, const TermOrder& order);

/// The minimum over terms of each exponent coordinate.
Exponent min_exponent(const ModuleVector& v);

/// Substitutes x_j -> prod_i y_i^{images[j][i]}; `images` has one row per source variable.
ModuleVector substitute_monomials(const ModuleVector& v, const std::vector<std::vector<std::int64_t>>& images,
                                  std::size_t target_nvars);

/// Human readable form using x1..xn (or x,y,z,w when n <= 4) and e1..em.
std::string format(const ModuleVector& v);

}  // namespace statikit
