#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "statikit/staticity.hpp"
#include "statikit/stratification.hpp"

namespace statikit {

/// A fan refinement of the chart cone, with the monomial substitution for each
/// maximal cone of the source.
class ToricModification {
 public:
  /// Throws kSupportMismatch unless source has the chart cone as support.
  ToricModification(SmoothChart target, Fan source);
  static ToricModification identity(const SmoothChart& chart);

  const SmoothChart& target() const { return target_; }
  const Fan& source() const { return source_; }
  bool is_identity() const;

  /// exponents[j][i]: power of source variable i in the image of target variable j.
  /// Throws kNonSmoothChart for a non-smooth cone and kInvalidInput for a cone
  /// that is not maximal in the source.
  std::vector<std::vector<std::int64_t>> substitution(const RationalCone& cone) const;

 private:
  SmoothChart target_;
  Fan source_;
};

ModulePresentation pullback_presentation(const ModulePresentation& M, const ToricModification& modification,
                                         const RationalCone& cone);

/// Image of a stratification under an integer linear map.
PLStratification transform(const PLStratification& strat, const IntMatrix& basis);

struct ChartCertificate {
  RationalCone cone;
  ModulePresentation pullback;
  TorDimensionReport staticity;
};

struct AuditReport {
  ModulePresentation alternative;
  Submodule kernel;
  bool refines_primary = false;
  bool refines_alternative = false;
  bool agrees() const { return refines_primary == refines_alternative; }
};

/// Everything needed to replay a statification.
///
/// The kernel is taken in the chart coordinates of the presentation and the
/// stratification lives in those coordinates too; fans are in the ambient
/// lattice of the chart cone.
struct StatificationCertificate {
  static constexpr const char* kFormat = "statikit-cert/1";

  ModulePresentation input;
  Submodule kernel;
  GroebnerStratification stratification;
  bool input_static = false;
  Fan output_fan;
  bool output_refines = false;
  std::vector<ChartCertificate> charts;
  bool complete = true;
  std::optional<AuditReport> audit;

  bool all_static() const;
};

struct StatifyOptions {
  bool audit = false;
  bool fail_fast = false;
};

StatificationCertificate compute_statification(const ModulePresentation& M, const StatifyOptions& options = {});

/// Result of re-running every check stored in a certificate.
struct ReplayResult {
  bool ok = true;
  std::vector<std::string> mismatches;
};

ReplayResult replay(const StatificationCertificate& cert);

/// Both sides of the statification criterion for one fan, computed separately.
struct TheoremInstance {
  bool refines = false;
  bool all_static = false;
  std::vector<ChartCertificate> charts;
  bool agrees() const { return refines == all_static; }
};

/// The fan must be smooth with the chart cone as support.
TheoremInstance verify_theorem_instance(const ModulePresentation& M, const Fan& fan);

/// A second presentation of the same module: the matrix with one redundant column appended.
ModulePresentation redundant_presentation(const ModulePresentation& M);

}  // namespace statikit
