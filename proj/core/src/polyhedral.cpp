#include "statikit/polyhedral.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>

#include "statikit/error.hpp"

namespace statikit {

namespace {

bool lex_less(const LatticePoint& a, const LatticePoint& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void sort_unique(std::vector<LatticePoint>& pts) {
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Calls f on every k-subset of {0..n-1}, as sorted index lists.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Columns of `basis` combined with coefficients c.
LatticePoint combine(const std::vector<IntVector>& basis, const IntVector& c, std::size_t dim) {
  LatticePoint out(dim, Integer(0));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) out[i] += c[j] * basis[j][i];
  return primitive(std::move(out));
}

}  // namespace

std::strong_ordering operator<=>(const RationalCone& a, const RationalCone& b) {
  if (auto c = a.ambient_dim_ <=> b.ambient_dim_; c != 0) return c;
  if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
  std::size_t n = std::min(a.rays_.size(), b.rays_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (lex_less(a.rays_[i], b.rays_[i])) return std::strong_ordering::less;
    if (lex_less(b.rays_[i], a.rays_[i])) return std::strong_ordering::greater;
  }
  return a.rays_.size() <=> b.rays_.size();
}

RationalCone RationalCone::zero(std::size_t ambient_dim) { return from_generators(ambient_dim, {}); }

RationalCone RationalCone::orthant(std::size_t ambient_dim) {
  std::vector<LatticePoint> gens;
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    LatticePoint e(ambient_dim, Integer(0));
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return from_generators(ambient_dim, std::move(gens));
}

RationalCone RationalCone::from_generators(std::size_t ambient_dim, std::vector<LatticePoint> generators) {
  RationalCone cone;
  cone.ambient_dim_ = ambient_dim;
  std::vector<LatticePoint> gens;
  for (auto& g : generators) {
    if (g.size() != ambient_dim)
      throw Error(ErrorCode::kInvalidInput, "generator length does not match the ambient dimension");
    if (is_zero(g)) continue;
    gens.push_back(primitive(std::move(g)));
  }
  sort_unique(gens);
  cone.derive_constraints(gens);
  return cone;
}

void RationalCone::derive_constraints(const std::vector<LatticePoint>& gens) {
  const std::size_t d = ambient_dim_;
  equations_ = integer_nullspace(gens, d);
  sort_unique(equations_);
  dim_ = d - equations_.size();
  facets_.clear();

  // A basis of the linear span drawn from the generators.
  std::vector<IntVector> basis;
  for (const auto& g : gens) {
    basis.push_back(g);
    if (rank(basis, d) < basis.size()) basis.pop_back();
    if (basis.size() == dim_) break;
  }

  if (dim_ > 0) {
    for_each_subset(gens.size(), dim_ - 1, [&](const std::vector<std::size_t>& idx) {
      IntMatrix m;
      for (auto i : idx) {
        IntVector row;
        for (const auto& b : basis) row.push_back(dot(gens[i], b));
        m.push_back(std::move(row));
      }
      auto ns = integer_nullspace(m, dim_);
      if (ns.size() != 1) return;
      LatticePoint a = combine(basis, ns[0], d);
      bool pos = false, neg = false;
      for (const auto& g : gens) {
        int s = sgn(dot(a, g));
        pos |= s > 0;
        neg |= s < 0;
      }
      if (pos && neg) return;
      if (neg)
        for (auto& x : a) x = -x;
      facets_.push_back(std::move(a));
    });
  }
  sort_unique(facets_);

  pointed_ = dim_ == 0 || rank(facets_, d) == dim_;
  rays_.clear();
  if (!pointed_) {
    rays_ = gens;
    return;
  }
  for (const auto& g : gens) {
    if (dim_ == 1) {
      rays_.push_back(g);
      continue;
    }
    IntMatrix tight;
    for (const auto& a : facets_)
      if (dot(a, g) == 0) tight.push_back(a);
    if (rank(tight, d) == dim_ - 1) rays_.push_back(g);
  }
  sort_unique(rays_);
}

RationalCone RationalCone::from_constraints(std::size_t ambient_dim, const std::vector<LatticePoint>& equations,
                                            const std::vector<LatticePoint>& inequalities) {
  const std::size_t d = ambient_dim;
  std::vector<IntVector> basis;
  if (equations.empty()) {
    for (std::size_t i = 0; i < d; ++i) {
      IntVector e(d, Integer(0));
      e[i] = 1;
      basis.push_back(std::move(e));
    }
  } else {
    basis = integer_nullspace(equations, d);
  }
  const std::size_t k = basis.size();
  if (k == 0) return zero(d);

  std::vector<IntVector> rows;
  for (const auto& a : inequalities) {
    IntVector r;
    for (const auto& b : basis) r.push_back(dot(a, b));
    if (!is_zero(r)) rows.push_back(primitive(std::move(r)));
  }
  sort_unique(rows);

  auto feasible = [&](const IntVector& c) {
    return std::all_of(rows.begin(), rows.end(), [&](const IntVector& r) { return dot(r, c) >= 0; });
  };

  std::vector<LatticePoint> rays;
  bool line = false;
  auto consider = [&](IntVector c) {
    bool plus = feasible(c);
    for (auto& x : c) x = -x;
    bool minus = feasible(c);
    if (plus && minus) line = true;
    if (minus) rays.push_back(combine(basis, c, d));
    for (auto& x : c) x = -x;
    if (plus) rays.push_back(combine(basis, c, d));
  };

  if (k == 1) {
    consider(IntVector{Integer(1)});
  } else {
    for_each_subset(rows.size(), k - 1, [&](const std::vector<std::size_t>& idx) {
      IntMatrix m;
      for (auto i : idx) m.push_back(rows[i]);
      auto ns = integer_nullspace(m, k);
      if (ns.size() == 1) consider(ns[0]);
    });
  }
  if (line) throw Error(ErrorCode::kNotPointed, "constraint system does not define a pointed cone");
  return from_generators(d, std::move(rays));
}

bool RationalCone::contains(const LatticePoint& p) const {
  for (const auto& e : equations_)
    if (dot(e, p) != 0) return false;
  for (const auto& a : facets_)
    if (dot(a, p) < 0) return false;
  return true;
}

bool RationalCone::contains(const RationalCone& other) const {
  return std::all_of(other.rays_.begin(), other.rays_.end(), [&](const LatticePoint& r) { return contains(r); });
}

bool RationalCone::contains_in_relint(const LatticePoint& p) const {
  for (const auto& e : equations_)
    if (dot(e, p) != 0) return false;
  for (const auto& a : facets_)
    if (dot(a, p) <= 0) return false;
  return true;
}

bool RationalCone::has_ray(const LatticePoint& r) const {
  return std::binary_search(rays_.begin(), rays_.end(), r, lex_less);
}

LatticePoint RationalCone::interior_point() const {
  LatticePoint p(ambient_dim_, Integer(0));
  for (const auto& r : rays_)
    for (std::size_t i = 0; i < ambient_dim_; ++i) p[i] += r[i];
  return p;
}

RationalCone RationalCone::intersect(const RationalCone& other) const {
  if (ambient_dim_ != other.ambient_dim_)
    throw Error(ErrorCode::kInvalidInput, "cones live in different ambient spaces");
  std::vector<LatticePoint> eqs = equations_;
  eqs.insert(eqs.end(), other.equations_.begin(), other.equations_.end());
  std::vector<LatticePoint> ineqs = facets_;
  ineqs.insert(ineqs.end(), other.facets_.begin(), other.facets_.end());
  return from_constraints(ambient_dim_, eqs, ineqs);
}

RationalCone RationalCone::face_of(const LatticePoint& normal) const {
  std::vector<LatticePoint> gens;
  for (const auto& r : rays_)
    if (dot(normal, r) == 0) gens.push_back(r);
  return from_generators(ambient_dim_, std::move(gens));
}

std::vector<RationalCone> faces(const RationalCone& cone) {
  if (!cone.is_pointed()) throw Error(ErrorCode::kNotPointed, "face lattice requested for a cone with lineality");
  const auto& rays = cone.rays();
  if (rays.size() > 63) throw Error(ErrorCode::kInvalidInput, "too many rays for face enumeration");
  const std::uint64_t full = rays.size() == 0 ? 0 : ((std::uint64_t{1} << rays.size()) - 1);
  std::vector<std::uint64_t> facet_masks;
  for (const auto& a : cone.facets()) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (dot(a, rays[i]) == 0) m |= std::uint64_t{1} << i;
    facet_masks.push_back(m);
  }
  std::set<std::uint64_t> seen{full};
  std::vector<std::uint64_t> queue{full};
  while (!queue.empty()) {
    auto m = queue.back();
    queue.pop_back();
    for (auto f : facet_masks) {
      auto next = m & f;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  seen.insert(0);
  std::vector<RationalCone> out;
  for (auto m : seen) {
    std::vector<LatticePoint> gens;
    for (std::size_t i = 0; i < rays.size(); ++i)
      if (m & (std::uint64_t{1} << i)) gens.push_back(rays[i]);
    out.push_back(RationalCone::from_generators(cone.ambient_dim(), std::move(gens)));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_smooth(const RationalCone& cone) {
  if (!cone.is_pointed()) throw Error(ErrorCode::kNotPointed, "smoothness requested for a cone with lineality");
  if (!cone.is_simplicial()) return false;
  const std::size_t k = cone.dim(), d = cone.ambient_dim();
  if (k == 0) return true;
  Integer g = 0;
  for_each_subset(d, k, [&](const std::vector<std::size_t>& cols) {
    if (g == 1) return;
    IntMatrix minor;
    for (const auto& r : cone.rays()) {
      IntVector row;
      for (auto c : cols) row.push_back(r[c]);
      minor.push_back(std::move(row));
    }
    Integer det = determinant(std::move(minor));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
  });
  return g == 1;
}

// ---------------------------------------------------------------------------
// Fans

Fan Fan::from_cones(const RationalCone& support, const std::vector<RationalCone>& cones) {
  if (!support.is_pointed()) throw Error(ErrorCode::kNotPointed, "fan support must be pointed");
  std::vector<RationalCone> all;
  for (const auto& c : cones) {
    if (c.ambient_dim() != support.ambient_dim())
      throw Error(ErrorCode::kInvalidInput, "cone dimension does not match the fan support");
    if (!support.contains(c)) throw Error(ErrorCode::kInvalidInput, "cone is not contained in the fan support");
    for (auto& f : faces(c)) all.push_back(std::move(f));
  }
  if (all.empty()) all.push_back(RationalCone::zero(support.ambient_dim()));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return Fan(support, std::move(all));
}

Fan Fan::of_cone(const RationalCone& cone) { return from_cones(cone, {cone}); }

std::vector<RationalCone> Fan::maximal_cones() const {
  std::vector<RationalCone> out;
  for (const auto& c : cones_) {
    bool maximal = std::none_of(cones_.begin(), cones_.end(),
                                [&](const RationalCone& d) { return d.dim() > c.dim() && d.contains(c); });
    if (maximal) out.push_back(c);
  }
  return out;
}

std::vector<LatticePoint> Fan::rays() const {
  std::vector<LatticePoint> out;
  for (const auto& c : cones_)
    if (c.dim() == 1) out.push_back(c.rays()[0]);
  return out;
}

bool Fan::has_cone(const RationalCone& c) const { return std::binary_search(cones_.begin(), cones_.end(), c); }

std::optional<std::size_t> Fan::cone_with_point_in_relint(const LatticePoint& p) const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].contains_in_relint(p)) return i;
  return std::nullopt;
}

std::vector<std::string> fan_violations(const Fan& fan) {
  std::vector<std::string> out;
  const auto& cones = fan.cones();
  for (const auto& c : cones) {
    if (!fan.support().contains(c)) out.push_back("cone outside support");
    for (const auto& f : faces(c))
      if (!fan.has_cone(f)) out.push_back("missing face");
  }
  auto maxes = fan.maximal_cones();
  for (std::size_t i = 0; i < maxes.size(); ++i) {
    if (maxes[i].dim() != fan.support().dim()) out.push_back("maximal cone of lower dimension");
    for (std::size_t j = i + 1; j < maxes.size(); ++j) {
      auto both = maxes[i].intersect(maxes[j]);
      auto fi = faces(maxes[i]), fj = faces(maxes[j]);
      if (!std::binary_search(fi.begin(), fi.end(), both) || !std::binary_search(fj.begin(), fj.end(), both))
        out.push_back("intersection of maximal cones is not a common face");
    }
  }
  // Coverage: interior walls bound two maximal cones, boundary walls one.
  const std::size_t top = fan.support().dim();
  for (const auto& w : cones) {
    if (top == 0 || w.dim() + 1 != top) continue;
    std::size_t count = std::count_if(maxes.begin(), maxes.end(), [&](const RationalCone& m) { return m.contains(w); });
    bool boundary = std::any_of(fan.support().facets().begin(), fan.support().facets().end(), [&](const LatticePoint& a) {
      return std::all_of(w.rays().begin(), w.rays().end(), [&](const LatticePoint& r) { return dot(a, r) == 0; });
    });
    if (count != (boundary ? 1u : 2u)) out.push_back("support not covered exactly once near a wall");
  }
  if (top > 0 && maxes.empty()) out.push_back("empty fan");
  return out;
}

// ---------------------------------------------------------------------------
// Stratifications

PLStratification::PLStratification(RationalCone support, std::vector<StratumCell> cells)
    : support_(std::move(support)), cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end(), [](const StratumCell& a, const StratumCell& b) { return a.cone < b.cone; });
}

std::size_t PLStratification::stratum_count() const {
  std::set<std::size_t> labels;
  for (const auto& c : cells_) labels.insert(c.label);
  return labels.size();
}

Fan PLStratification::cell_fan() const {
  std::vector<RationalCone> cones;
  for (const auto& c : cells_) cones.push_back(c.cone);
  return Fan::from_cones(support_, cones);
}

std::size_t PLStratification::label_at(const LatticePoint& p) const {
  for (const auto& c : cells_)
    if (c.cone.contains_in_relint(p)) return c.label;
  throw Error(ErrorCode::kInvalidInput, "point lies outside the stratified support");
}

Fan star_subdivision(const Fan& fan, const LatticePoint& ray) {
  if (ray.size() != fan.ambient_dim() || is_zero(ray))
    throw Error(ErrorCode::kInvalidInput, "subdivision ray must be a nonzero lattice point of the ambient space");
  LatticePoint r = primitive(ray);
  if (!fan.support().contains(r)) throw Error(ErrorCode::kRayOutsideSupport, "ray lies outside the fan support");
  auto existing = fan.rays();
  if (std::find(existing.begin(), existing.end(), r) != existing.end()) return fan;

  std::vector<RationalCone> cones;
  for (const auto& sigma : fan.maximal_cones()) {
    if (!sigma.contains(r)) {
      cones.push_back(sigma);
      continue;
    }
    for (const auto& tau : faces(sigma)) {
      if (tau.contains(r)) continue;
      auto gens = tau.rays();
      gens.push_back(r);
      cones.push_back(RationalCone::from_generators(fan.ambient_dim(), std::move(gens)));
    }
  }
  return Fan::from_cones(fan.support(), cones);
}

Fan common_refinement(const Fan& a, const Fan& b) {
  if (!(a.support() == b.support())) throw Error(ErrorCode::kSupportMismatch, "fans have different supports");
  std::vector<RationalCone> cones;
  for (const auto& s : a.maximal_cones())
    for (const auto& t : b.maximal_cones()) cones.push_back(s.intersect(t));
  return Fan::from_cones(a.support(), cones);
}

bool refines(const Fan& fan, const PLStratification& strat) {
  if (!(fan.support() == strat.support()))
    throw Error(ErrorCode::kSupportMismatch, "fan and stratification have different supports");
  Fan common = common_refinement(fan, strat.cell_fan());
  std::map<std::size_t, std::size_t> label_of_cone;
  for (const auto& rho : common.cones()) {
    auto p = rho.interior_point();
    auto idx = fan.cone_with_point_in_relint(p);
    if (!idx) return false;
    auto label = strat.label_at(p);
    auto [it, fresh] = label_of_cone.emplace(*idx, label);
    if (!fresh && it->second != label) return false;
  }
  return true;
}

bool refines(const Fan& fine, const Fan& coarse) {
  if (!(fine.support() == coarse.support()))
    throw Error(ErrorCode::kSupportMismatch, "fans have different supports");
  for (const auto& rho : fine.cones()) {
    auto idx = coarse.cone_with_point_in_relint(rho.interior_point());
    if (!idx || !coarse.cones()[*idx].contains(rho)) return false;
  }
  return true;
}

Fan slice(const Fan& fan, const LatticePoint& normal) {
  std::vector<RationalCone> cones;
  LatticePoint opposite = normal;
  for (auto& x : opposite) x = -x;
  for (const auto& sigma : fan.maximal_cones()) {
    bool pos = false, neg = false;
    for (const auto& r : sigma.rays()) {
      int s = sgn(dot(normal, r));
      pos |= s > 0;
      neg |= s < 0;
    }
    if (!(pos && neg)) {
      cones.push_back(sigma);
      continue;
    }
    for (const LatticePoint* side : std::initializer_list<const LatticePoint*>{&normal, &opposite}) {
      auto ineqs = sigma.facets();
      ineqs.push_back(*side);
      cones.push_back(RationalCone::from_constraints(fan.ambient_dim(), sigma.equations(), ineqs));
    }
  }
  return Fan::from_cones(fan.support(), cones);
}

namespace {

// Nonzero lattice points of the half-open fundamental parallelepiped of a simplicial cone.
std::vector<LatticePoint> parallelepiped_points(const RationalCone& cone) {
  const std::size_t d = cone.ambient_dim();
  const auto& rays = cone.rays();
  LatticePoint lo(d, Integer(0)), hi(d, Integer(0));
  for (const auto& r : rays)
    for (std::size_t i = 0; i < d; ++i) (r[i] < 0 ? lo[i] : hi[i]) += r[i];

  // Solve for the coefficients on a nonsingular k x k row selection.
  const std::size_t k = rays.size();
  std::vector<std::size_t> rows;
  for_each_subset(d, k, [&](const std::vector<std::size_t>& idx) {
    if (!rows.empty()) return;
    IntMatrix m(k, IntVector(k));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) m[a][b] = rays[b][idx[a]];
    if (determinant(m) != 0) rows = idx;
  });
  RatMatrix sys(k, RatVector(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) sys[a][b] = rays[b][rows[a]];
  auto inv = inverse(sys);

  std::vector<LatticePoint> out;
  LatticePoint p = lo;
  while (true) {
    if (!is_zero(p) && cone.contains(p)) {
      RatVector lambda(k, Rational(0));
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) lambda[a] += (*inv)[a][b] * p[rows[b]];
      if (std::all_of(lambda.begin(), lambda.end(), [](const Rational& q) { return q >= 0 && q < 1; }))
        out.push_back(p);
    }
    std::size_t i = 0;
    while (i < d && p[i] == hi[i]) {
      p[i] = lo[i];
      ++i;
    }
    if (i == d) break;
    ++p[i];
  }
  return out;
}

Integer coordinate_sum(const LatticePoint& p) {
  Integer s = 0;
  for (const auto& x : p) s += x;
  return s;
}

}  // namespace

Fan resolve_singularities(const Fan& input) {
  Fan fan = input;
  while (true) {
    auto it = std::find_if(fan.cones().begin(), fan.cones().end(), [](const RationalCone& c) { return !is_smooth(c); });
    if (it == fan.cones().end()) return fan;
    LatticePoint center;
    if (!it->is_simplicial()) {
      center = primitive(it->interior_point());
    } else {
      auto pts = parallelepiped_points(*it);
      center = *std::min_element(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
        auto sa = coordinate_sum(a), sb = coordinate_sum(b);
        return sa != sb ? sa < sb : lex_less(a, b);
      });
    }
    fan = star_subdivision(fan, center);
  }
}

namespace {

struct MergePlan {
  std::vector<std::size_t> removed;
  std::vector<StratumCell> added;
};

// Tries to merge two full-dimensional cells across their common facet.
std::optional<MergePlan> plan_merge(const std::vector<StratumCell>& cells, std::size_t i, std::size_t j) {
  const auto& s1 = cells[i].cone;
  const auto& s2 = cells[j].cone;
  const std::size_t d = s1.ambient_dim();
  auto wall = s1.intersect(s2);
  if (wall.dim() + 1 != s1.dim()) return std::nullopt;

  auto gens = s1.rays();
  gens.insert(gens.end(), s2.rays().begin(), s2.rays().end());
  auto merged = RationalCone::from_generators(d, std::move(gens));
  if (!merged.is_pointed()) return std::nullopt;

  // Convex union: cutting the hull along the wall gives back the two cells.
  LatticePoint normal;
  for (const auto& a : s1.facets())
    if (s1.face_of(a) == wall) normal = a;
  if (normal.empty()) return std::nullopt;
  LatticePoint opposite = normal;
  for (auto& x : opposite) x = -x;
  auto half = [&](const LatticePoint& a) {
    auto ineqs = merged.facets();
    ineqs.push_back(a);
    return RationalCone::from_constraints(d, merged.equations(), ineqs);
  };
  if (!(half(normal) == s1) || !(half(opposite) == s2)) return std::nullopt;

  std::vector<std::size_t> inside;
  for (std::size_t k = 0; k < cells.size(); ++k)
    if (merged.contains(cells[k].cone)) inside.push_back(k);
  auto new_faces = faces(merged);

  MergePlan plan;
  for (auto k : inside) {
    if (std::binary_search(new_faces.begin(), new_faces.end(), cells[k].cone)) continue;
    // A removed cell may not be a face of anything outside the merged cone.
    for (const auto& other : cells)
      if (other.cone.contains(cells[k].cone) && !merged.contains(other.cone)) return std::nullopt;
    plan.removed.push_back(k);
  }
  for (const auto& phi : new_faces) {
    std::optional<std::size_t> label;
    for (auto k : inside) {
      if (!phi.contains_in_relint(cells[k].cone.interior_point())) continue;
      if (label && *label != cells[k].label) return std::nullopt;
      label = cells[k].label;
    }
    if (!label) return std::nullopt;
    bool present = std::any_of(inside.begin(), inside.end(), [&](std::size_t k) { return cells[k].cone == phi; });
    if (!present) plan.added.push_back({phi, *label});
  }
  return plan;
}

}  // namespace

PLStratification coarsen(const PLStratification& strat) {
  std::vector<StratumCell> cells = strat.cells();
  const std::size_t top = strat.support().dim();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cells.size() && !changed; ++i) {
      if (cells[i].cone.dim() != top) continue;
      for (std::size_t j = i + 1; j < cells.size() && !changed; ++j) {
        if (cells[j].cone.dim() != top || cells[j].label != cells[i].label) continue;
        auto plan = plan_merge(cells, i, j);
        if (!plan) continue;
        std::vector<StratumCell> next;
        for (std::size_t k = 0; k < cells.size(); ++k)
          if (std::find(plan->removed.begin(), plan->removed.end(), k) == plan->removed.end())
            next.push_back(cells[k]);
        next.insert(next.end(), plan->added.begin(), plan->added.end());
        std::sort(next.begin(), next.end(), [](const StratumCell& a, const StratumCell& b) { return a.cone < b.cone; });
        cells = std::move(next);
        changed = true;
      }
    }
  }
  return PLStratification(strat.support(), std::move(cells));
}

Fan stratification_to_smooth_fan(const PLStratification& strat) {
  return resolve_singularities(coarsen(strat).cell_fan());
}

LatticePoint apply(const IntMatrix& m, const LatticePoint& p) {
  LatticePoint out(m.size(), Integer(0));
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], p);
  return out;
}

RationalCone transform(const RationalCone& cone, const IntMatrix& basis) {
  std::vector<LatticePoint> gens;
  for (const auto& r : cone.rays()) gens.push_back(apply(basis, r));
  return RationalCone::from_generators(cone.ambient_dim(), std::move(gens));
}

Fan transform(const Fan& fan, const IntMatrix& basis) {
  std::vector<RationalCone> cones;
  for (const auto& c : fan.maximal_cones()) cones.push_back(transform(c, basis));
  return Fan::from_cones(transform(fan.support(), basis), cones);
}

}  // namespace statikit
