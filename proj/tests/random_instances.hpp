#pragma once

#include <random>
#include <utility>
#include <vector>

#include "statikit/staticity.hpp"
#include "statikit/tropical_pic.hpp"

namespace gen {

using namespace statikit;

inline long uniform(std::mt19937& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline Rational nonzero_coeff(std::mt19937& rng) {
  long c = uniform(rng, 1, 3);
  return uniform(rng, 0, 1) == 0 ? Rational(c) : Rational(-c);
}

inline Exponent random_exponent(std::mt19937& rng, std::size_t n, long max_degree, long min_degree = 0) {
  Exponent e{};
  long budget = uniform(rng, min_degree, max_degree);
  for (long k = 0; k < budget; ++k) e[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1))] += 1;
  return e;
}

/// A polynomial with up to max_terms terms of total degree between min_degree and max_degree.
inline ModuleVector polynomial(std::mt19937& rng, std::size_t n, long max_degree, long max_terms, long min_degree = 0) {
  std::vector<LaurentTerm> terms;
  long count = uniform(rng, 1, max_terms);
  for (long t = 0; t < count; ++t)
    terms.push_back({nonzero_coeff(rng), random_exponent(rng, n, max_degree, min_degree), 0});
  return ModuleVector(n, 1, std::move(terms));
}

inline ModuleVector nonzero_polynomial(std::mt19937& rng, std::size_t n, long max_degree, long max_terms) {
  while (true) {
    auto p = polynomial(rng, n, max_degree, max_terms);
    if (!p.is_zero()) return p;
  }
}

/// A rows x cols presentation on the standard chart; entries are zero with probability 1/4.
inline ModulePresentation presentation(std::mt19937& rng, std::size_t n, std::size_t rows, std::size_t cols,
                                       long max_degree, long max_terms, long min_degree = 0) {
  ModulePresentation p{SmoothChart::standard(n), rows, {}};
  for (std::size_t c = 0; c < cols; ++c) {
    ModuleVector col(n, rows);
    for (std::size_t r = 0; r < rows; ++r)
      if (uniform(rng, 0, 3) != 0) col = col + polynomial(rng, n, max_degree, max_terms, min_degree).embedded(rows, r);
    p.columns.push_back(col);
  }
  return p;
}

/// A Z^n-graded presentation: row r has degree a_r, column c has degree b_c
/// and entry (r, c) is a scalar times x^(b_c - a_r), or zero when b_c - a_r
/// is not effective. Each column dominates a random pivot row, so no column vanishes.
inline ModulePresentation multigraded_presentation(std::mt19937& rng, std::size_t n, std::size_t rows,
                                                   std::size_t cols, long max_degree, long min_degree = 0) {
  std::vector<Exponent> row_deg, col_deg;
  for (std::size_t r = 0; r < rows; ++r) row_deg.push_back(random_exponent(rng, n, 1));
  std::vector<std::size_t> pivot;
  for (std::size_t c = 0; c < cols; ++c) {
    pivot.push_back(static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(rows) - 1)));
    Exponent e = random_exponent(rng, n, max_degree, min_degree);
    for (std::size_t k = 0; k < n; ++k) e[k] += row_deg[pivot[c]][k];
    col_deg.push_back(e);
  }
  ModulePresentation p{SmoothChart::standard(n), rows, {}};
  for (std::size_t c = 0; c < cols; ++c) {
    std::vector<LaurentTerm> terms;
    for (std::size_t r = 0; r < rows; ++r) {
      Exponent e{};
      bool effective = true;
      for (std::size_t k = 0; k < n; ++k) {
        e[k] = col_deg[c][k] - row_deg[r][k];
        effective = effective && e[k] >= 0;
      }
      if (effective && (r == pivot[c] || uniform(rng, 0, 2) != 0)) terms.push_back({nonzero_coeff(rng), e, r});
    }
    p.columns.emplace_back(n, rows, std::move(terms));
  }
  return p;
}

/// The module presented by the generators of K: columns are the generators.
inline ModulePresentation presentation_of(const Submodule& K, const SmoothChart& chart) {
  return ModulePresentation{chart, K.rank(), K.generators()};
}

/// A connected multigraph: a random spanning tree plus extra random edges.
inline Graph connected_graph(std::mt19937& rng, std::size_t v, std::size_t extra) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i < v; ++i) edges.emplace_back(static_cast<std::size_t>(uniform(rng, 0, long(i) - 1)), i);
  for (std::size_t k = 0; k < extra && v > 1; ++k) {
    auto a = static_cast<std::size_t>(uniform(rng, 0, long(v) - 1));
    auto b = static_cast<std::size_t>(uniform(rng, 0, long(v) - 2));
    if (b >= a) ++b;
    edges.emplace_back(a, b);
  }
  return Graph(v, std::move(edges));
}

inline Divisor divisor(std::mt19937& rng, std::size_t v, long lo, long hi) {
  Divisor d;
  for (std::size_t i = 0; i < v; ++i) d.push_back(uniform(rng, lo, hi));
  return d;
}

inline Graph cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

}  // namespace gen
