#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "statikit/groebner.hpp"
#include "statikit/polyhedral.hpp"

namespace statikit {

/// An affine chart A^n of a smooth toric variety, given by a smooth
/// full-dimensional cone and an ordering of its rays.
///
/// Chart variable i is the monomial dual to ray i, so every variable is a
/// boundary variable. basis() has the rays as columns: e_1..e_n for the
/// standard chart, the canonical (lexicographic) ray order otherwise.
class SmoothChart {
 public:
  /// The positive orthant with the standard coordinates.
  static SmoothChart standard(std::size_t n);
  /// Throws kNonSmoothChart unless the cone is smooth and full dimensional.
  static SmoothChart of_cone(const RationalCone& cone);

  const RationalCone& cone() const { return cone_; }
  const IntMatrix& basis() const { return basis_; }
  std::size_t nvars() const { return cone_.ambient_dim(); }
  std::vector<std::size_t> boundary_variables() const;

  friend bool operator==(const SmoothChart& a, const SmoothChart& b) { return a.basis_ == b.basis_; }

 private:
  SmoothChart(RationalCone cone, IntMatrix basis) : cone_(std::move(cone)), basis_(std::move(basis)) {}

  RationalCone cone_;
  IntMatrix basis_;
};

/// The cokernel of an l x k matrix over the chart ring, stored as k columns in R^l.
struct ModulePresentation {
  SmoothChart chart;
  std::size_t rows = 0;
  std::vector<ModuleVector> columns;

  std::size_t nvars() const { return chart.nvars(); }
  /// Validates shapes and that every entry is a polynomial (kInvalidInput).
  void validate() const;
};

/// H_i of the Koszul complex of the variables S with coefficients in M.
///
/// The witness is a cycle of the lifted complex (an element of
/// R^l (x) wedge^i R^|S|) whose class is nonzero.
struct TorReport {
  std::vector<std::size_t> face;
  std::size_t degree = 0;
  bool vanishes = true;
  std::optional<ModuleVector> witness;
};

TorReport koszul_tor(const ModulePresentation& M, const std::vector<std::size_t>& face, std::size_t degree);

/// Checks that a witness is a cycle that is not a boundary.
bool verify_witness(const ModulePresentation& M, const TorReport& report);

struct TorDimensionReport {
  bool holds = true;
  std::vector<TorReport> reports;
};

/// Koszul homology in degree d+1 against every subset of boundary variables,
/// subsets ordered by size and then lexicographically.
TorDimensionReport log_tor_dim_at_most(const ModulePresentation& M, std::size_t d);

bool is_static(const ModulePresentation& M);
bool is_log_flat(const ModulePresentation& M);

/// For K inside R^k, tests that seq is a regular sequence on R^k / K, the
/// module that K presents: ((K + (x_1..x_{i-1}) R^k) : x_i) equals K + (x_1..x_{i-1}) R^k.
bool is_regular_sequence_on(const Submodule& K, const std::vector<std::size_t>& seq);

/// All subsets of {0..n-1} in report order.
std::vector<std::vector<std::size_t>> face_subsets(const std::vector<std::size_t>& variables);

}  // namespace statikit
