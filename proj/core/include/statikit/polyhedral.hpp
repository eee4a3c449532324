#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "statikit/arith.hpp"

namespace statikit {

using LatticePoint = IntVector;

/// A rational polyhedral cone in Z^n, kept in both descriptions.
///
/// The ray list is primitive, duplicate free and sorted lexicographically.
/// For pointed cones it is the list of extreme rays; a cone built from
/// generators that contain a line keeps its generators and reports
/// is_pointed() == false. Equations span the orthogonal complement of the
/// linear span, and facet normals are taken inside the linear span so they
/// are canonical up to positive scaling.
class RationalCone {
 public:
  static RationalCone from_generators(std::size_t ambient_dim, std::vector<LatticePoint> generators);
  /// The pointed cone { x : e.x = 0 for e in equations, a.x >= 0 for a in inequalities }.
  static RationalCone from_constraints(std::size_t ambient_dim, const std::vector<LatticePoint>& equations,
                                      const std::vector<LatticePoint>& inequalities);
  static RationalCone zero(std::size_t ambient_dim);
  static RationalCone orthant(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return dim_; }
  bool is_pointed() const { return pointed_; }
  bool is_full_dimensional() const { return dim_ == ambient_dim_; }
  bool is_simplicial() const { return pointed_ && rays_.size() == dim_; }

  const std::vector<LatticePoint>& rays() const { return rays_; }
  const std::vector<LatticePoint>& equations() const { return equations_; }
  const std::vector<LatticePoint>& facets() const { return facets_; }

  bool contains(const LatticePoint& p) const;
  bool contains(const RationalCone& other) const;
  /// True when p is in the relative interior.
  bool contains_in_relint(const LatticePoint& p) const;
  bool has_ray(const LatticePoint& r) const;

  /// Sum of the rays; lies in the relative interior of a pointed cone.
  LatticePoint interior_point() const;

  RationalCone intersect(const RationalCone& other) const;
  /// The face cut out by a valid inequality, i.e. the rays with a.r == 0.
  RationalCone face_of(const LatticePoint& normal) const;

  friend bool operator==(const RationalCone& a, const RationalCone& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.rays_ == b.rays_;
  }
  /// Canonical order: dimension first, then sorted ray lists.
  friend std::strong_ordering operator<=>(const RationalCone& a, const RationalCone& b);

 private:
  RationalCone() = default;
  void derive_constraints(const std::vector<LatticePoint>& generators);

  std::size_t ambient_dim_ = 0;
  std::size_t dim_ = 0;
  bool pointed_ = true;
  std::vector<LatticePoint> rays_;
  std::vector<LatticePoint> equations_;
  std::vector<LatticePoint> facets_;
};

/// All faces including {0} and the cone itself, in canonical order.
std::vector<RationalCone> faces(const RationalCone& cone);

/// True iff the rays extend to a basis of Z^n. Throws kNotPointed.
bool is_smooth(const RationalCone& cone);

/// A fan: face closed, pairwise intersections are common faces, union is the support.
class Fan {
 public:
  /// Face closure of the given cones; cones must lie in the support.
  static Fan from_cones(const RationalCone& support, const std::vector<RationalCone>& cones);
  /// The fan of the faces of a single pointed cone.
  static Fan of_cone(const RationalCone& cone);

  std::size_t ambient_dim() const { return support_.ambient_dim(); }
  const RationalCone& support() const { return support_; }
  /// Every cone, face closed, in canonical order.
  const std::vector<RationalCone>& cones() const { return cones_; }
  std::vector<RationalCone> maximal_cones() const;
  std::vector<LatticePoint> rays() const;

  bool has_cone(const RationalCone& c) const;
  /// Index into cones() of the cone whose relative interior contains p.
  std::optional<std::size_t> cone_with_point_in_relint(const LatticePoint& p) const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.support_ == b.support_ && a.cones_ == b.cones_;
  }

 private:
  Fan(RationalCone support, std::vector<RationalCone> cones)
      : support_(std::move(support)), cones_(std::move(cones)) {}

  RationalCone support_;
  std::vector<RationalCone> cones_;
};

/// Reasons a cone collection fails to be a fan; empty when valid.
std::vector<std::string> fan_violations(const Fan& fan);

/// Stratification of a support cone into relatively open cells.
///
/// The cells are the cones of a fan on the support; a cell stands for its
/// relative interior and carries a label. Cells with the same label belong
/// to the same stratum, and labels are equal exactly when the data attached
/// by the producer are equal.
struct StratumCell {
  RationalCone cone;
  std::size_t label;
};

class PLStratification {
 public:
  PLStratification(RationalCone support, std::vector<StratumCell> cells);

  std::size_t ambient_dim() const { return support_.ambient_dim(); }
  const RationalCone& support() const { return support_; }
  const std::vector<StratumCell>& cells() const { return cells_; }
  std::size_t stratum_count() const;
  /// The fan formed by the cells.
  Fan cell_fan() const;
  /// Label of the stratum containing p; p must lie in the support.
  std::size_t label_at(const LatticePoint& p) const;

 private:
  RationalCone support_;
  std::vector<StratumCell> cells_;
};

Fan star_subdivision(const Fan& fan, const LatticePoint& ray);

/// True iff every stratum is a union of relative interiors of cones of the fan.
bool refines(const Fan& fan, const PLStratification& strat);

/// Same test between two fans: every cone of `coarse` is a union of relative interiors of cones of `fine`.
bool refines(const Fan& fine, const Fan& coarse);

Fan common_refinement(const Fan& a, const Fan& b);

/// Splits every cone of the fan by the hyperplane normal.x = 0.
Fan slice(const Fan& fan, const LatticePoint& normal);

/// Greedily merges adjacent full-dimensional cells of one stratum while the
/// cells still form a fan.
PLStratification coarsen(const PLStratification& strat);

/// A smooth fan on the support refining the stratification.
Fan stratification_to_smooth_fan(const PLStratification& strat);

/// Star subdivides until every cone is smooth.
Fan resolve_singularities(const Fan& fan);

/// Image of a fan under an invertible integer linear map (columns of `basis`).
Fan transform(const Fan& fan, const IntMatrix& basis);
RationalCone transform(const RationalCone& cone, const IntMatrix& basis);
LatticePoint apply(const IntMatrix& m, const LatticePoint& p);

}  // namespace statikit
