#pragma once

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "json_io.hpp"
#include "statikit/error.hpp"
#include "statikit/statify.hpp"

namespace th {

using namespace statikit;

/// Error code raised by f, or nullopt when it returns normally.
template <class F>
std::optional<ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline LatticePoint pt(std::initializer_list<long> xs) { return make_int_vector(xs); }

inline RationalCone cone(std::size_t dim, std::initializer_list<std::initializer_list<long>> rays) {
  std::vector<LatticePoint> gens;
  for (auto r : rays) gens.push_back(make_int_vector(r));
  return RationalCone::from_generators(dim, gens);
}

inline ModuleVector vec(const std::string& text, std::size_t nvars, std::size_t rank = 1) {
  return io::parse_module_vector(text, nvars, rank);
}

inline Submodule module(std::size_t nvars, std::size_t rank, std::initializer_list<const char*> gens) {
  std::vector<ModuleVector> out;
  for (auto g : gens) out.push_back(vec(g, nvars, rank));
  return Submodule(nvars, rank, out);
}

/// coker of a one-row matrix on the standard chart.
inline ModulePresentation row(std::size_t nvars, std::initializer_list<const char*> entries) {
  ModulePresentation p{SmoothChart::standard(nvars), 1, {}};
  for (auto e : entries) p.columns.push_back(vec(e, nvars));
  return p;
}

inline std::vector<LatticePoint> sorted_rays(const Fan& f) {
  auto r = f.rays();
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace th
