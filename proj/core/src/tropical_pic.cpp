#include "statikit/tropical_pic.hpp"

#include <algorithm>
#include <stdexcept>

#include "statikit/error.hpp"

namespace statikit {

Graph::Graph(std::size_t vertices, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : vertices_(vertices), edges_(std::move(edges)), adjacency_(vertices) {
  if (vertices == 0) throw Error(ErrorCode::kInvalidInput, "graph needs at least one vertex");
  for (auto& [u, v] : edges_) {
    if (u >= vertices || v >= vertices) throw Error(ErrorCode::kInvalidInput, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::kInvalidInput, "loops are not allowed");
    if (u > v) std::swap(u, v);
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  std::vector<bool> seen(vertices, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto u : adjacency_[v])
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error(ErrorCode::kInvalidInput, "graph is not connected");
}

std::size_t Graph::multiplicity(std::size_t u, std::size_t v) const {
  return static_cast<std::size_t>(std::count(adjacency_[u].begin(), adjacency_[u].end(), v));
}

std::size_t Graph::degree(std::size_t v) const { return adjacency_[v].size(); }

IntMatrix laplacian(const Graph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix L(n, IntVector(n, Integer(0)));
  for (const auto& [u, v] : g.edges()) {
    L[u][u] += 1;
    L[v][v] += 1;
    L[u][v] -= 1;
    L[v][u] -= 1;
  }
  return L;
}

namespace {

IntMatrix reduced_laplacian(const Graph& g, std::size_t base) {
  auto L = laplacian(g);
  IntMatrix out;
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (i == base) continue;
    IntVector row;
    for (std::size_t j = 0; j < L.size(); ++j)
      if (j != base) row.push_back(L[i][j]);
    out.push_back(std::move(row));
  }
  return out;
}

void check_divisor(const Graph& g, const Divisor& d) {
  if (d.size() != g.vertex_count()) throw Error(ErrorCode::kInvalidInput, "divisor length does not match the graph");
}

Integer degree_of(const Divisor& d) {
  Integer s = 0;
  for (const auto& x : d) s += x;
  return s;
}

// Firing script (zero at the base) making d nonnegative away from the base.
FiringScript lift_off_base(const Graph& g, const Divisor& d, std::size_t base) {
  const std::size_t n = g.vertex_count();
  FiringScript s(n, Integer(0));
  if (n == 1) return s;
  auto Lq = to_rational(reduced_laplacian(g, base));
  auto inv = *inverse(Lq);
  Integer det = determinant(reduced_laplacian(g, base));
  Integer max_degree = 0;
  for (std::size_t v = 0; v < n; ++v) max_degree = std::max(max_degree, Integer(g.degree(v)));
  std::size_t row = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (v == base) continue;
    Rational y = 0, z = 0;
    std::size_t col = 0;
    for (std::size_t u = 0; u < n; ++u) {
      if (u == base) continue;
      y += inv[row][col] * d[u];
      z += inv[row][col];
      ++col;
    }
    // D - L(floor(y) - K det z) = L frac(y) + K det >= 0 off the base.
    s[v] = floor(y) - max_degree * Integer(det * z);
    ++row;
  }
  return s;
}

}  // namespace

std::vector<Integer> jacobian_group(const Graph& g) {
  std::vector<Integer> out;
  for (auto& f : smith_invariants(reduced_laplacian(g, 0)))
    if (f > 1) out.push_back(f);
  return out;
}

Divisor fire(const Graph& g, const Divisor& d, const FiringScript& s) {
  check_divisor(g, d);
  check_divisor(g, s);
  Divisor out = d;
  for (const auto& [u, v] : g.edges()) {
    Integer flow = s[u] - s[v];
    out[u] -= flow;
    out[v] += flow;
  }
  return out;
}

Divisor reduced_divisor(const Graph& g, const Divisor& d, std::size_t base) {
  check_divisor(g, d);
  if (base >= g.vertex_count()) throw Error(ErrorCode::kInvalidInput, "base vertex out of range");
  const std::size_t n = g.vertex_count();
  Divisor D = fire(g, d, lift_off_base(g, d, base));

  while (true) {
    std::vector<bool> burnt(n, false);
    burnt[base] = true;
    bool spread = true;
    while (spread) {
      spread = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (burnt[v]) continue;
        std::size_t fire_edges = 0;
        for (std::size_t u = 0; u < n; ++u)
          if (burnt[u]) fire_edges += g.multiplicity(v, u);
        if (D[v] < Integer(fire_edges)) {
          burnt[v] = true;
          spread = true;
        }
      }
    }
    if (std::all_of(burnt.begin(), burnt.end(), [](bool b) { return b; })) return D;

    // Fire the unburnt set as many times as it stays nonnegative.
    Integer times = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (burnt[v]) continue;
      std::size_t out_edges = 0;
      for (std::size_t u = 0; u < n; ++u)
        if (burnt[u]) out_edges += g.multiplicity(v, u);
      if (out_edges == 0) continue;
      Integer k = D[v] / Integer(out_edges);
      if (times < 0 || k < times) times = k;
    }
    FiringScript s(n, Integer(0));
    for (std::size_t v = 0; v < n; ++v)
      if (!burnt[v]) s[v] = times;
    D = fire(g, D, s);
  }
}

bool is_chip_firing_equivalent(const Graph& g, const Divisor& d1, const Divisor& d2) {
  check_divisor(g, d1);
  check_divisor(g, d2);
  if (degree_of(d1) != degree_of(d2)) return false;
  return reduced_divisor(g, d1, 0) == reduced_divisor(g, d2, 0);
}

std::optional<FiringScript> firing_script(const Graph& g, const Divisor& d1, const Divisor& d2) {
  check_divisor(g, d1);
  check_divisor(g, d2);
  if (degree_of(d1) != degree_of(d2)) return std::nullopt;
  const std::size_t n = g.vertex_count();
  FiringScript s(n, Integer(0));
  if (n > 1) {
    RatVector rhs;
    for (std::size_t v = 1; v < n; ++v) rhs.emplace_back(d1[v] - d2[v]);
    auto sol = solve_square(to_rational(reduced_laplacian(g, 0)), rhs);
    for (std::size_t v = 1; v < n; ++v) {
      const Rational& x = (*sol)[v - 1];
      if (x.get_den() != 1) return std::nullopt;
      s[v] = x.get_num();
    }
  }
  Integer low = *std::min_element(s.begin(), s.end());
  for (auto& x : s) x -= low;
  if (fire(g, d1, s) != d2) throw std::logic_error("firing script failed to replay");
  return s;
}

}  // namespace statikit
