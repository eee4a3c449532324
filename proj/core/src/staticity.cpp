#include "statikit/staticity.hpp"

#include <algorithm>

#include "statikit/error.hpp"

namespace statikit {

SmoothChart SmoothChart::standard(std::size_t n) {
  IntMatrix basis(n, IntVector(n, Integer(0)));
  for (std::size_t i = 0; i < n; ++i) basis[i][i] = 1;
  return SmoothChart(RationalCone::orthant(n), std::move(basis));
}

SmoothChart SmoothChart::of_cone(const RationalCone& cone) {
  if (!cone.is_pointed() || !cone.is_full_dimensional() || !is_smooth(cone))
    throw Error(ErrorCode::kNonSmoothChart, "chart cone must be smooth and full dimensional; resolve the fan first");
  const std::size_t n = cone.ambient_dim();
  IntMatrix basis(n, IntVector(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) basis[i][j] = cone.rays()[j][i];
  return SmoothChart(cone, std::move(basis));
}

std::vector<std::size_t> SmoothChart::boundary_variables() const {
  std::vector<std::size_t> out(cone_.rays().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

void ModulePresentation::validate() const {
  for (const auto& c : columns) {
    if (c.rank() != rows || c.nvars() != nvars())
      throw Error(ErrorCode::kInvalidInput, "presentation column has the wrong shape");
    if (!c.is_polynomial()) throw Error(ErrorCode::kInvalidInput, "presentation entries must be polynomials");
  }
}

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t s, std::size_t i) {
  std::vector<std::vector<std::size_t>> out;
  if (i > s) return out;
  std::vector<std::size_t> idx(i);
  for (std::size_t a = 0; a < i; ++a) idx[a] = a;
  while (true) {
    out.push_back(idx);
    std::size_t a = i;
    while (a > 0 && idx[a - 1] == s - i + a - 1) --a;
    if (a == 0) return out;
    ++idx[a - 1];
    for (std::size_t b = a; b < i; ++b) idx[b] = idx[b - 1] + 1;
  }
}

// The lifted Koszul complex R^l (x) wedge^* R^s for the variables of a face.
struct Koszul {
  const ModulePresentation& M;
  std::vector<std::size_t> face;

  std::size_t n() const { return M.nvars(); }
  std::size_t l() const { return M.rows; }
  std::size_t s() const { return face.size(); }
  std::size_t rank(std::size_t i) const { return l() * combinations(s(), i).size(); }

  // Columns of the differential K_i -> K_{i-1}, i >= 1.
  std::vector<ModuleVector> differential(std::size_t i) const {
    auto source = combinations(s(), i);
    auto target = combinations(s(), i - 1);
    const std::size_t target_rank = l() * target.size();
    std::vector<ModuleVector> cols;
    for (const auto& J : source) {
      for (std::size_t r = 0; r < l(); ++r) {
        std::vector<LaurentTerm> terms;
        for (std::size_t p = 0; p < J.size(); ++p) {
          std::vector<std::size_t> rest = J;
          rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(p));
          auto block = static_cast<std::size_t>(std::find(target.begin(), target.end(), rest) - target.begin());
          Exponent e{};
          e[face[J[p]]] = 1;
          terms.push_back({Rational(p % 2 == 0 ? 1 : -1), e, block * l() + r});
        }
        cols.emplace_back(n(), target_rank, std::move(terms));
      }
    }
    return cols;
  }

  // The presentation matrix repeated on every block of K_i.
  std::vector<ModuleVector> relations(std::size_t i) const {
    const std::size_t blocks = combinations(s(), i).size();
    std::vector<ModuleVector> cols;
    for (std::size_t b = 0; b < blocks; ++b)
      for (const auto& c : M.columns) cols.push_back(c.embedded(l() * blocks, b * l()));
    return cols;
  }

  std::vector<ModuleVector> cycles(std::size_t i) const {
    const std::size_t top = rank(i);
    if (i == 0) {
      std::vector<ModuleVector> out;
      for (std::size_t r = 0; r < top; ++r) out.push_back(ModuleVector::unit(n(), top, r));
      return out;
    }
    auto cols = differential(i);
    auto rel = relations(i - 1);
    cols.insert(cols.end(), rel.begin(), rel.end());
    auto syz = syzygies(cols, n(), rank(i - 1));
    std::vector<ModuleVector> out;
    for (const auto& g : syz.generators()) {
      std::vector<LaurentTerm> terms;
      for (const auto& t : g.terms())
        if (t.component < top) terms.push_back(t);
      ModuleVector z(n(), top, std::move(terms));
      if (!z.is_zero()) out.push_back(std::move(z));
    }
    return out;
  }

  Submodule boundaries(std::size_t i) const {
    std::vector<ModuleVector> gens;
    if (i + 1 <= s()) gens = differential(i + 1);
    auto rel = relations(i);
    gens.insert(gens.end(), rel.begin(), rel.end());
    return Submodule(n(), rank(i), std::move(gens));
  }
};

void check_face(const ModulePresentation& M, const std::vector<std::size_t>& face) {
  for (std::size_t k = 0; k < face.size(); ++k) {
    if (face[k] >= M.nvars()) throw Error(ErrorCode::kInvalidInput, "face variable out of range");
    if (k > 0 && face[k] <= face[k - 1]) throw Error(ErrorCode::kInvalidInput, "face variables must be increasing");
  }
}

}  // namespace

TorReport koszul_tor(const ModulePresentation& M, const std::vector<std::size_t>& face, std::size_t degree) {
  M.validate();
  check_face(M, face);
  TorReport report{face, degree, true, std::nullopt};
  if (degree > face.size() || M.rows == 0) return report;
  Koszul K{M, face};
  auto gb = reduced_gb(K.boundaries(degree));
  for (auto& z : K.cycles(degree)) {
    if (!is_member(z, gb)) {
      report.vanishes = false;
      report.witness = std::move(z);
      break;
    }
  }
  return report;
}

bool verify_witness(const ModulePresentation& M, const TorReport& report) {
  if (report.vanishes) return !report.witness.has_value();
  if (!report.witness) return false;
  Koszul K{M, report.face};
  const auto& z = *report.witness;
  if (z.is_zero() || z.rank() != K.rank(report.degree)) return false;
  if (report.degree > 0) {
    auto image = apply_columns(K.differential(report.degree), z, K.rank(report.degree - 1));
    if (!is_member(image, Submodule(M.nvars(), K.rank(report.degree - 1), K.relations(report.degree - 1))))
      return false;
  }
  return !is_member(z, K.boundaries(report.degree));
}

std::vector<std::vector<std::size_t>> face_subsets(const std::vector<std::size_t>& variables) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t size = 0; size <= variables.size(); ++size)
    for (const auto& idx : combinations(variables.size(), size)) {
      std::vector<std::size_t> face;
      for (auto i : idx) face.push_back(variables[i]);
      out.push_back(std::move(face));
    }
  return out;
}

TorDimensionReport log_tor_dim_at_most(const ModulePresentation& M, std::size_t d) {
  TorDimensionReport out;
  for (const auto& face : face_subsets(M.chart.boundary_variables())) {
    auto report = koszul_tor(M, face, d + 1);
    out.holds = out.holds && report.vanishes;
    out.reports.push_back(std::move(report));
  }
  return out;
}

bool is_static(const ModulePresentation& M) { return log_tor_dim_at_most(M, 1).holds; }

bool is_log_flat(const ModulePresentation& M) { return log_tor_dim_at_most(M, 0).holds; }

bool is_regular_sequence_on(const Submodule& K, const std::vector<std::size_t>& seq) {
  const std::size_t n = K.nvars(), k = K.rank();
  std::vector<ModuleVector> gens = K.generators();
  for (auto v : seq) {
    if (v >= n) throw Error(ErrorCode::kInvalidInput, "sequence variable out of range");
    Submodule current(n, k, gens);
    auto x = ModuleVector::variable(n, v);
    if (!is_submodule(colon(current, x), current)) return false;
    for (std::size_t j = 0; j < k; ++j) gens.push_back(multiply(x, ModuleVector::unit(n, k, j)));
  }
  return true;
}

}  // namespace statikit
