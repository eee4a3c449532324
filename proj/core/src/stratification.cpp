#include "statikit/stratification.hpp"

#include <algorithm>
#include <map>

#include "statikit/error.hpp"

namespace statikit {

namespace {

std::vector<std::int64_t> integral_weight(const RatVector& w) {
  Integer den = 1;
  for (const auto& q : w) den = lcm(den, Integer(q.get_den()));
  std::vector<std::int64_t> out;
  for (const auto& q : w) {
    Integer v = Integer(q.get_num()) * (den / Integer(q.get_den()));
    if (!v.fits_slong_p()) throw Error(ErrorCode::kInvalidInput, "weight vector too large");
    out.push_back(v.get_si());
  }
  return out;
}

RatVector as_rational(const LatticePoint& p) { return RatVector(p.begin(), p.end()); }

std::int64_t weight_of(const Exponent& e, const std::vector<std::int64_t>& w) {
  std::int64_t s = 0;
  for (std::size_t v = 0; v < w.size(); ++v) s += w[v] * e[v];
  return s;
}

// Homogenizes with an extra last variable; components have degree zero.
std::vector<ModuleVector> homogenize(const std::vector<ModuleVector>& gens, std::size_t n) {
  std::vector<ModuleVector> out;
  for (const auto& g : gens) {
    std::int32_t top = 0;
    for (const auto& t : g.terms()) {
      std::int32_t d = 0;
      for (std::size_t v = 0; v < n; ++v) d += t.exponent[v];
      top = std::max(top, d);
    }
    std::vector<LaurentTerm> terms = g.terms();
    for (auto& t : terms) {
      std::int32_t d = 0;
      for (std::size_t v = 0; v < n; ++v) d += t.exponent[v];
      t.exponent[n] = top - d;
    }
    out.emplace_back(n + 1, g.rank(), std::move(terms));
  }
  return out;
}

ModuleVector dehomogenize(const ModuleVector& v, std::size_t n) {
  std::vector<LaurentTerm> terms = v.terms();
  for (auto& t : terms) t.exponent[n] = 0;
  return ModuleVector(n, v.rank(), std::move(terms));
}

TermOrder weight_order(std::size_t n, const std::vector<std::int64_t>& w) {
  std::vector<std::int64_t> degree(n + 1, 1), neg(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) neg[v] = -w[v];
  return TermOrder::weighted(n + 1, {degree, neg});
}

// Reduced basis of the homogenized polynomial part under the order refining -w.
MarkedGB weighted_basis(const std::vector<ModuleVector>& homogeneous, std::size_t n, std::size_t rank,
                        const std::vector<std::int64_t>& w) {
  return reduced_gb(homogeneous, n + 1, rank, weight_order(n, w));
}

MarkedGB initial_from_basis(const MarkedGB& gb, std::size_t n, const std::vector<std::int64_t>& w) {
  std::vector<ModuleVector> forms;
  for (const auto& g : gb.elements) {
    std::int64_t best = 0;
    bool first = true;
    for (const auto& t : g.terms()) {
      auto s = weight_of(t.exponent, w);
      if (first || s < best) best = s;
      first = false;
    }
    std::vector<LaurentTerm> keep;
    for (const auto& t : g.terms())
      if (weight_of(t.exponent, w) == best) keep.push_back(t);
    forms.push_back(dehomogenize(ModuleVector(n + 1, g.rank(), std::move(keep)), n));
  }
  return laurent_canonical(Submodule(n, gb.rank, std::move(forms)));
}

struct Prepared {
  std::size_t n, rank;
  std::vector<ModuleVector> homogeneous;
};

Prepared prepare(const Submodule& G) {
  const std::size_t n = G.nvars();
  if (n + 1 > kMaxVariables) throw Error(ErrorCode::kUnsupportedSupport, "too many variables for homogenization");
  auto base = laurent_canonical(Submodule::from_laurent(n, G.rank(), G.generators()));
  return {n, G.rank(), homogenize(base.elements, n)};
}

}  // namespace

ModuleVector initial_form(const ModuleVector& f, const RatVector& w) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroVector, "initial form of the zero vector");
  if (w.size() != f.nvars()) throw Error(ErrorCode::kInvalidInput, "weight length does not match the ring");
  Rational best;
  bool first = true;
  std::vector<Rational> weights;
  for (const auto& t : f.terms()) {
    Rational s = 0;
    for (std::size_t v = 0; v < w.size(); ++v) s += w[v] * t.exponent[v];
    if (first || s < best) best = s;
    first = false;
    weights.push_back(s);
  }
  std::vector<LaurentTerm> keep;
  for (std::size_t k = 0; k < weights.size(); ++k)
    if (weights[k] == best) keep.push_back(f.terms()[k]);
  return ModuleVector(f.nvars(), f.rank(), std::move(keep));
}

MarkedGB laurent_canonical(const Submodule& G) {
  auto polynomial = Submodule::from_laurent(G.nvars(), G.rank(), G.generators());
  return reduced_gb(laurent_saturation(polynomial));
}

MarkedGB initial_module(const Submodule& G, const RatVector& w) {
  if (w.size() != G.nvars()) throw Error(ErrorCode::kInvalidInput, "weight length does not match the ring");
  auto prepared = prepare(G);
  auto iw = integral_weight(w);
  auto gb = weighted_basis(prepared.homogeneous, prepared.n, prepared.rank, iw);
  return initial_from_basis(gb, prepared.n, iw);
}

GroebnerStratification groebner_stratification(const Submodule& G, const RationalCone& support) {
  if (!support.is_pointed() || !support.is_full_dimensional())
    throw Error(ErrorCode::kUnsupportedSupport, "support must be a pointed full-dimensional cone");
  if (support.ambient_dim() != G.nvars())
    throw Error(ErrorCode::kUnsupportedSupport, "support dimension does not match the ring");
  auto prepared = prepare(G);
  const std::size_t n = prepared.n;

  // Slice the support until every chamber lies in the Groebner cone of its interior point.
  Fan arrangement = Fan::of_cone(support);
  while (true) {
    std::vector<LatticePoint> cuts;
    for (const auto& chamber : arrangement.maximal_cones()) {
      auto w = integral_weight(as_rational(chamber.interior_point()));
      auto gb = weighted_basis(prepared.homogeneous, n, prepared.rank, w);
      for (std::size_t k = 0; k < gb.elements.size(); ++k) {
        const auto& lead = gb.leading[k];
        for (const auto& t : gb.elements[k].terms()) {
          LatticePoint a(n);
          for (std::size_t v = 0; v < n; ++v) a[v] = t.exponent[v] - lead.exponent[v];
          if (is_zero(a)) continue;
          a = primitive(std::move(a));
          bool violated = std::any_of(chamber.rays().begin(), chamber.rays().end(),
                                      [&](const LatticePoint& r) { return dot(a, r) < 0; });
          if (violated && std::find(cuts.begin(), cuts.end(), a) == cuts.end()) cuts.push_back(std::move(a));
        }
      }
    }
    if (cuts.empty()) break;
    std::sort(cuts.begin(), cuts.end());
    for (const auto& a : cuts) arrangement = slice(arrangement, a);
  }

  std::vector<MarkedGB> tags;
  std::vector<StratumCell> cells;
  for (const auto& cone : arrangement.cones()) {
    auto w = integral_weight(as_rational(cone.interior_point()));
    auto gb = weighted_basis(prepared.homogeneous, n, prepared.rank, w);
    auto tag = initial_from_basis(gb, n, w);
    auto it = std::find(tags.begin(), tags.end(), tag);
    std::size_t label = static_cast<std::size_t>(it - tags.begin());
    if (it == tags.end()) tags.push_back(std::move(tag));
    cells.push_back({cone, label});
  }
  auto merged = coarsen(PLStratification(support, std::move(cells)));

  std::map<std::size_t, std::size_t> relabel;
  std::vector<MarkedGB> ordered;
  std::vector<StratumCell> final_cells;
  for (const auto& cell : merged.cells()) {
    auto [it, inserted] = relabel.try_emplace(cell.label, ordered.size());
    if (inserted) ordered.push_back(tags[cell.label]);
    final_cells.push_back({cell.cone, it->second});
  }
  return {PLStratification(support, std::move(final_cells)), std::move(ordered)};
}

}  // namespace statikit
