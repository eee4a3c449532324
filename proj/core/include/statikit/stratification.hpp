#pragma once

#include <cstddef>
#include <vector>

#include "statikit/groebner.hpp"
#include "statikit/polyhedral.hpp"

namespace statikit {

/// Terms of f of minimal weight n.w. Throws kZeroVector on f = 0.
ModuleVector initial_form(const ModuleVector& f, const RatVector& w);

/// Canonical representative of the Laurent extension of G: the reduced
/// grevlex basis of its polynomial part (G saturated by all variables).
MarkedGB laurent_canonical(const Submodule& G);

/// in_w(G) for the Laurent module spanned by G, as laurent_canonical of the
/// module generated by all initial forms.
MarkedGB initial_module(const Submodule& G, const RatVector& w);

/// Cells of a stratification of the support; label k carries initial_modules[k].
struct GroebnerStratification {
  PLStratification strata;
  std::vector<MarkedGB> initial_modules;

  const MarkedGB& tag(std::size_t label) const { return initial_modules.at(label); }
};

/// Partition of the support by equality of initial modules.
/// The support must be pointed and full dimensional (kUnsupportedSupport).
GroebnerStratification groebner_stratification(const Submodule& G, const RationalCone& support);

}  // namespace statikit
