#pragma once

#include <cstddef>
#include <vector>

#include "statikit/polynomial.hpp"

namespace statikit {

/// A finitely generated submodule of k[x]^m given by nonzero generators.
///
/// The same type carries submodules of the Laurent module k[x^{+-1}]^m: use
/// from_laurent, which translates every generator by a unit monomial so that
/// each variable's minimal exponent in it is zero. The Laurent module is then
/// the extension of the polynomial module spanned by the generators.
class Submodule {
 public:
  Submodule(std::size_t nvars, std::size_t rank) : nvars_(nvars), rank_(rank) {}
  Submodule(std::size_t nvars, std::size_t rank, std::vector<ModuleVector> generators);
  static Submodule from_laurent(std::size_t nvars, std::size_t rank, std::vector<ModuleVector> generators);

  std::size_t nvars() const { return nvars_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ModuleVector>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

 private:
  std::size_t nvars_;
  std::size_t rank_;
  std::vector<ModuleVector> generators_;
};

/// Reduced Groebner basis together with the order that marks its leading terms.
///
/// Elements are monic, reduced against each other and sorted by decreasing
/// leading term, so two bases of the same module under the same order are
/// equal as values.
struct MarkedGB {
  TermOrder order;
  std::size_t nvars = 0;
  std::size_t rank = 0;
  std::vector<ModuleVector> elements;
  std::vector<LaurentTerm> leading;

  friend bool operator==(const MarkedGB& a, const MarkedGB& b) {
    return a.order == b.order && a.rank == b.rank && a.elements == b.elements;
  }
};

/// Buchberger's algorithm for polynomial submodules.
MarkedGB reduced_gb(const std::vector<ModuleVector>& generators, std::size_t nvars, std::size_t rank,
                    const TermOrder& order);
MarkedGB reduced_gb(const Submodule& module, const TermOrder& order);
/// Default order: grevlex, ties broken by component.
MarkedGB reduced_gb(const Submodule& module);

ModuleVector normal_form(const ModuleVector& f, const MarkedGB& gb);
bool is_member(const ModuleVector& f, const MarkedGB& gb);
bool is_member(const ModuleVector& f, const Submodule& module);
/// Module inclusion a ⊆ b.
bool is_submodule(const Submodule& a, const Submodule& b);

/// Kernel of the map k[x]^k -> k[x]^m sending e_j to columns[j].
Submodule syzygies(const std::vector<ModuleVector>& columns, std::size_t nvars, std::size_t target_rank);

/// (module : g) = { v : g v in module } for a polynomial g.
Submodule colon(const Submodule& module, const ModuleVector& g);

/// (module : g^infinity).
Submodule saturation(const Submodule& module, const ModuleVector& g);

/// Saturation by the product of all variables: the polynomial part of the Laurent module.
Submodule laurent_saturation(const Submodule& module);

/// Sum of two submodules of the same free module.
Submodule sum(const Submodule& a, const Submodule& b);

}  // namespace statikit
