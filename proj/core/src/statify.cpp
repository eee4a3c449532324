#include "statikit/statify.hpp"

#include <algorithm>

#include "statikit/error.hpp"

namespace statikit {

ToricModification::ToricModification(SmoothChart target, Fan source)
    : target_(std::move(target)), source_(std::move(source)) {
  if (!(source_.support() == target_.cone()))
    throw Error(ErrorCode::kSupportMismatch, "modification must have the chart cone as support");
}

ToricModification ToricModification::identity(const SmoothChart& chart) {
  return ToricModification(chart, Fan::of_cone(chart.cone()));
}

bool ToricModification::is_identity() const { return source_ == Fan::of_cone(target_.cone()); }

namespace {

SmoothChart chart_of(const ToricModification& mod, const RationalCone& cone) {
  return cone == mod.target().cone() ? mod.target() : SmoothChart::of_cone(cone);
}

}  // namespace

std::vector<std::vector<std::int64_t>> ToricModification::substitution(const RationalCone& cone) const {
  auto maximal = source_.maximal_cones();
  if (std::find(maximal.begin(), maximal.end(), cone) == maximal.end())
    throw Error(ErrorCode::kInvalidInput, "cone is not a maximal cone of the modification");
  auto source_chart = chart_of(*this, cone);
  const std::size_t n = target_.nvars();
  auto inv = inverse(to_rational(target_.basis()));
  std::vector<std::vector<std::int64_t>> out(n, std::vector<std::int64_t>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      Rational e = 0;
      for (std::size_t k = 0; k < n; ++k) e += (*inv)[j][k] * source_chart.basis()[k][i];
      if (e.get_den() != 1 || e < 0 || !e.get_num().fits_sint_p())
        throw Error(ErrorCode::kInvalidInput, "cone does not lie in the chart cone");
      out[j][i] = e.get_num().get_si();
    }
  }
  return out;
}

ModulePresentation pullback_presentation(const ModulePresentation& M, const ToricModification& modification,
                                         const RationalCone& cone) {
  M.validate();
  if (!(M.chart == modification.target()))
    throw Error(ErrorCode::kInvalidInput, "presentation and modification use different charts");
  auto images = modification.substitution(cone);
  ModulePresentation out{chart_of(modification, cone), M.rows, {}};
  for (const auto& c : M.columns) out.columns.push_back(substitute_monomials(c, images, M.nvars()));
  return out;
}

PLStratification transform(const PLStratification& strat, const IntMatrix& basis) {
  std::vector<StratumCell> cells;
  for (const auto& c : strat.cells()) cells.push_back({transform(c.cone, basis), c.label});
  return PLStratification(transform(strat.support(), basis), std::move(cells));
}

bool StatificationCertificate::all_static() const {
  return complete && std::all_of(charts.begin(), charts.end(),
                                 [](const ChartCertificate& c) { return c.staticity.holds; });
}

ModulePresentation redundant_presentation(const ModulePresentation& M) {
  ModulePresentation out = M;
  ModuleVector extra(M.nvars(), M.rows);
  for (const auto& c : M.columns) extra = extra + c;
  out.columns.push_back(extra);
  return out;
}

namespace {

Submodule kernel_of(const ModulePresentation& M) { return syzygies(M.columns, M.nvars(), M.rows); }

GroebnerStratification stratify_kernel(const ModulePresentation& M, const Submodule& kernel) {
  return groebner_stratification(kernel, RationalCone::orthant(M.nvars()));
}

bool same_presentation(const ModulePresentation& a, const ModulePresentation& b) {
  return a.chart == b.chart && a.rows == b.rows && a.columns == b.columns;
}

bool same_stratification(const GroebnerStratification& a, const GroebnerStratification& b) {
  if (!(a.strata.support() == b.strata.support()) || a.strata.cells().size() != b.strata.cells().size()) return false;
  for (std::size_t k = 0; k < a.strata.cells().size(); ++k) {
    const auto& x = a.strata.cells()[k];
    const auto& y = b.strata.cells()[k];
    if (!(x.cone == y.cone) || x.label != y.label) return false;
  }
  return a.initial_modules == b.initial_modules;
}

ChartCertificate certify_chart(const ModulePresentation& M, const ToricModification& mod, const RationalCone& cone) {
  auto pb = pullback_presentation(M, mod, cone);
  auto report = log_tor_dim_at_most(pb, 1);
  return {cone, std::move(pb), std::move(report)};
}

}  // namespace

StatificationCertificate compute_statification(const ModulePresentation& M, const StatifyOptions& options) {
  M.validate();
  const auto& chart = M.chart;
  StatificationCertificate cert{M, kernel_of(M), {PLStratification(chart.cone(), {}), {}}, false,
                                Fan::of_cone(chart.cone()), false, {}, true, std::nullopt};
  cert.stratification = stratify_kernel(M, cert.kernel);
  auto ambient = transform(cert.stratification.strata, chart.basis());
  cert.input_static = is_static(M);
  if (!cert.input_static)
    cert.output_fan = transform(stratification_to_smooth_fan(cert.stratification.strata), chart.basis());
  cert.output_refines = refines(cert.output_fan, ambient);

  ToricModification mod(chart, cert.output_fan);
  for (const auto& cone : cert.output_fan.maximal_cones()) {
    cert.charts.push_back(certify_chart(M, mod, cone));
    if (options.fail_fast && !cert.charts.back().staticity.holds) {
      cert.complete = cert.charts.size() == cert.output_fan.maximal_cones().size();
      break;
    }
  }

  if (options.audit) {
    auto alt = redundant_presentation(M);
    auto kernel = kernel_of(alt);
    auto strat = stratify_kernel(alt, kernel);
    AuditReport audit{alt, kernel, cert.output_refines,
                      refines(cert.output_fan, transform(strat.strata, chart.basis()))};
    cert.audit = std::move(audit);
  }
  return cert;
}

namespace {

template <class Fail>
void replay_checks(const StatificationCertificate& cert, Fail&& fail) {
  const auto& M = cert.input;
  M.validate();
  const auto& chart = M.chart;

  for (const auto& g : cert.kernel.generators())
    if (!apply_columns(M.columns, g, M.rows).is_zero()) fail("kernel generator is not a syzygy");
  auto kernel = kernel_of(M);
  if (!is_submodule(kernel, cert.kernel)) fail("kernel misses syzygies");

  auto strat = stratify_kernel(M, cert.kernel);
  if (!same_stratification(strat, cert.stratification)) fail("stratification differs");
  for (const auto& cell : cert.stratification.strata.cells()) {
    auto p = cell.cone.interior_point();
    RatVector w(p.begin(), p.end());
    if (!(initial_module(cert.kernel, w) == cert.stratification.tag(cell.label))) fail("cell tag differs");
  }

  if (is_static(M) != cert.input_static) fail("input staticity differs");
  if (!(cert.output_fan.support() == chart.cone())) fail("output fan has the wrong support");
  for (const auto& cone : cert.output_fan.cones())
    if (!is_smooth(cone)) fail("output fan is not smooth");
  auto ambient = transform(cert.stratification.strata, chart.basis());
  if (refines(cert.output_fan, ambient) != cert.output_refines) fail("refinement verdict differs");

  ToricModification mod(chart, cert.output_fan);
  auto maximal = cert.output_fan.maximal_cones();
  if (cert.complete && cert.charts.size() != maximal.size()) fail("chart list does not cover the output fan");
  for (const auto& c : cert.charts) {
    if (std::find(maximal.begin(), maximal.end(), c.cone) == maximal.end()) {
      fail("chart cone is not a maximal cone of the output fan");
      continue;
    }
    auto again = certify_chart(M, mod, c.cone);
    if (!same_presentation(again.pullback, c.pullback)) fail("pullback differs");
    if (again.staticity.holds != c.staticity.holds || again.staticity.reports.size() != c.staticity.reports.size()) {
      fail("chart verdict differs");
      continue;
    }
    for (std::size_t k = 0; k < c.staticity.reports.size(); ++k) {
      const auto& a = again.staticity.reports[k];
      const auto& b = c.staticity.reports[k];
      if (a.face != b.face || a.degree != b.degree || a.vanishes != b.vanishes) fail("Tor report differs");
      if (!verify_witness(c.pullback, b)) fail("witness does not verify");
    }
  }

  if (cert.audit) {
    auto kernel2 = kernel_of(cert.audit->alternative);
    if (!is_submodule(kernel2, cert.audit->kernel) || !is_submodule(cert.audit->kernel, kernel2))
      fail("audit kernel differs");
    auto strat2 = stratify_kernel(cert.audit->alternative, cert.audit->kernel);
    if (refines(cert.output_fan, transform(strat2.strata, chart.basis())) != cert.audit->refines_alternative)
      fail("audit verdict differs");
  }
}

}  // namespace

ReplayResult replay(const StatificationCertificate& cert) {
  ReplayResult r;
  auto fail = [&](std::string what) {
    r.ok = false;
    r.mismatches.push_back(std::move(what));
  };
  try {
    replay_checks(cert, fail);
  } catch (const Error& e) {
    fail(std::string("check raised ") + e.what());
  }
  return r;
}

TheoremInstance verify_theorem_instance(const ModulePresentation& M, const Fan& fan) {
  M.validate();
  const auto& chart = M.chart;
  if (!(fan.support() == chart.cone())) throw Error(ErrorCode::kSupportMismatch, "fan support differs from the chart");
  for (const auto& cone : fan.cones())
    if (!is_smooth(cone)) throw Error(ErrorCode::kNonSmoothChart, "fan must be smooth");

  TheoremInstance out;
  auto kernel = kernel_of(M);
  auto strat = stratify_kernel(M, kernel);
  out.refines = refines(fan, transform(strat.strata, chart.basis()));

  ToricModification mod(chart, fan);
  out.all_static = true;
  for (const auto& cone : fan.maximal_cones()) {
    out.charts.push_back(certify_chart(M, mod, cone));
    out.all_static = out.all_static && out.charts.back().staticity.holds;
  }
  return out;
}

}  // namespace statikit
