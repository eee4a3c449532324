#pragma once

// Brute-force reference computations, deliberately independent of the library's algorithms.

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "statikit/arith.hpp"

namespace oracle {

using statikit::Integer;
using statikit::IntMatrix;
using statikit::IntVector;

inline Integer leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Integer prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= m[i][perm[i]];
    total += inversions % 2 == 0 ? prod : Integer(-prod);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) c.push_back(i);
    out.push_back(c);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

inline Integer minor(const IntMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  IntMatrix sub;
  for (auto r : rows) {
    IntVector row;
    for (auto c : cols) row.push_back(m[r][c]);
    sub.push_back(row);
  }
  return leibniz_det(sub);
}

/// gcd of all k x k minors.
inline Integer determinantal_divisor(const IntMatrix& m, std::size_t k) {
  Integer g = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (const auto& rs : combinations(m.size(), k))
    for (const auto& cs : combinations(cols, k)) {
      Integer d = minor(m, rs, cs);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

/// Invariant factors above one, as ratios of determinantal divisors.
inline std::vector<Integer> invariant_factors(const IntMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t k = 1; k <= std::min(m.size(), cols); ++k) {
    Integer d = determinantal_divisor(m, k);
    if (d == 0) break;
    Integer f = d / prev;
    if (f != 1) out.push_back(f);
    prev = d;
  }
  return out;
}

/// Rays extend to a lattice basis iff the gcd of their maximal minors is one.
inline bool extends_to_basis(const std::vector<IntVector>& rays) {
  if (rays.empty()) return true;
  IntMatrix m(rays.begin(), rays.end());
  Integer g = determinantal_divisor(m, rays.size());
  return g == 1;
}

inline IntMatrix laplacian(std::size_t v, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  IntMatrix l(v, IntVector(v, 0));
  for (auto [a, b] : edges) {
    l[a][a] += 1;
    l[b][b] += 1;
    l[a][b] -= 1;
    l[b][a] -= 1;
  }
  return l;
}

inline std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

/// Counts edge subsets of size V-1 without cycles.
inline std::size_t spanning_trees(std::size_t v, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::size_t count = 0;
  for (const auto& pick : combinations(edges.size(), v - 1)) {
    std::vector<std::size_t> parent(v);
    std::iota(parent.begin(), parent.end(), 0);
    bool forest = true;
    for (auto i : pick) {
      auto a = find_root(parent, edges[i].first), b = find_root(parent, edges[i].second);
      if (a == b) {
        forest = false;
        break;
      }
      parent[a] = b;
    }
    if (forest) ++count;
  }
  return count;
}

/// Definition of a q-reduced divisor: effective off q, and no nonempty set
/// avoiding q can fire without some vertex going into debt.
inline bool is_reduced(std::size_t v, const std::vector<std::pair<std::size_t, std::size_t>>& edges, const IntVector& d,
                       std::size_t q) {
  for (std::size_t i = 0; i < v; ++i)
    if (i != q && d[i] < 0) return false;
  for (std::size_t mask = 1; mask < (std::size_t{1} << v); ++mask) {
    if (mask & (std::size_t{1} << q)) continue;
    bool some_debt = false;
    for (std::size_t i = 0; i < v && !some_debt; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      long out = 0;
      for (auto [a, b] : edges) {
        bool ain = mask & (std::size_t{1} << a), bin = mask & (std::size_t{1} << b);
        if ((a == i && !bin) || (b == i && !ain)) ++out;
      }
      if (d[i] < out) some_debt = true;
    }
    if (!some_debt) return false;
  }
  return true;
}

/// Primitive inward normals of the facets of a full-dimensional cone, by
/// trying every (n-1)-subset of rays.
inline std::set<IntVector> facets(const std::vector<IntVector>& rays, std::size_t n) {
  std::set<IntVector> out;
  for (const auto& pick : combinations(rays.size(), n - 1)) {
    IntVector normal(n);
    for (std::size_t c = 0; c < n; ++c) {
      IntMatrix m;
      for (auto i : pick) m.push_back(rays[i]);
      IntVector unit(n, 0);
      unit[c] = 1;
      m.push_back(unit);
      normal[c] = leibniz_det(m);
    }
    if (statikit::is_zero(normal)) continue;
    bool pos = true, neg = true;
    for (const auto& r : rays) {
      Integer s = statikit::dot(normal, r);
      pos = pos && s >= 0;
      neg = neg && s <= 0;
    }
    if (!pos && !neg) continue;
    if (!pos)
      for (auto& x : normal) x = -x;
    out.insert(statikit::primitive(normal));
  }
  return out;
}

/// Faces of a full-dimensional pointed cone as sets of rays, from all
/// intersections of facets.
inline std::set<std::set<IntVector>> face_ray_sets(const std::vector<IntVector>& rays, std::size_t n) {
  auto fs = facets(rays, n);
  std::vector<IntVector> list(fs.begin(), fs.end());
  std::set<std::set<IntVector>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << list.size()); ++mask) {
    std::set<IntVector> face;
    for (const auto& r : rays) {
      bool on = true;
      for (std::size_t k = 0; k < list.size(); ++k)
        if ((mask >> k) & 1) on = on && statikit::dot(list[k], r) == 0;
      if (on) face.insert(r);
    }
    out.insert(face);
  }
  return out;
}

}  // namespace oracle
