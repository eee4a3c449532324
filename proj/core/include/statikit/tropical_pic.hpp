#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "statikit/arith.hpp"

namespace statikit {

/// A connected loop-free multigraph on vertices 0..V-1.
class Graph {
 public:
  /// Throws kInvalidInput on loops, out-of-range endpoints, V = 0 or a disconnected graph.
  Graph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t vertex_count() const { return vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  /// Number of edges between u and v.
  std::size_t multiplicity(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const;

 private:
  std::size_t vertices_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

using Divisor = IntVector;
using FiringScript = IntVector;

/// L = D - A.
IntMatrix laplacian(const Graph& g);

/// Invariant factors greater than one of the degree-zero class group.
std::vector<Integer> jacobian_group(const Graph& g);

/// D - L s: every vertex v fires s[v] times.
Divisor fire(const Graph& g, const Divisor& d, const FiringScript& s);

/// The base-reduced divisor equivalent to d (Dhar's burning algorithm).
Divisor reduced_divisor(const Graph& g, const Divisor& d, std::size_t base = 0);

bool is_chip_firing_equivalent(const Graph& g, const Divisor& d1, const Divisor& d2);

/// s with d1 - L s = d2 and min(s) = 0, or nullopt when the divisors are not equivalent.
std::optional<FiringScript> firing_script(const Graph& g, const Divisor& d1, const Divisor& d2);

}  // namespace statikit
