#include "statikit/arith.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "statikit/error.hpp"

namespace statikit {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPointed:
      return "NOT_POINTED";
    case ErrorCode::kRayOutsideSupport:
      return "RAY_OUTSIDE_SUPPORT";
    case ErrorCode::kSupportMismatch:
      return "SUPPORT_MISMATCH";
    case ErrorCode::kZeroVector:
      return "ZERO_VECTOR";
    case ErrorCode::kUnsupportedSupport:
      return "UNSUPPORTED_SUPPORT";
    case ErrorCode::kNonSmoothChart:
      return "NON_SMOOTH_CHART";
    case ErrorCode::kInvalidInput:
      return "INVALID_INPUT";
  }
  return "UNKNOWN";
}

IntVector make_int_vector(std::initializer_list<long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(v);
  return out;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer content(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVector primitive(IntVector v) {
  Integer g = content(v);
  if (g == 0 || g == 1) return v;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

IntVector primitive_integer(const RatVector& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) {
    Rational scaled = q * l;
    out.push_back(scaled.get_num());
  }
  return primitive(std::move(out));
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    RatVector r;
    r.reserve(row.size());
    for (const auto& x : row) r.emplace_back(x);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::size_t> row_reduce(RatMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t p = row;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = 1 / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const IntMatrix& m, std::size_t ncols) {
  RatMatrix r = to_rational(m);
  return row_reduce(r, ncols).size();
}

std::vector<IntVector> integer_nullspace(const IntMatrix& m, std::size_t ncols) {
  RatMatrix r = to_rational(m);
  auto pivots = row_reduce(r, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<IntVector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(ncols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][free];
    basis.push_back(primitive_integer(v));
  }
  return basis;
}

Integer determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::optional<RatVector> solve_square(const RatMatrix& a, const RatVector& b) {
  const std::size_t n = a.size();
  RatMatrix aug = a;
  for (std::size_t i = 0; i < n; ++i) aug[i].push_back(b[i]);
  auto pivots = row_reduce(aug, n);
  if (pivots.size() != n) return std::nullopt;
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug[i][n];
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, Rational(0));
    aug[i][n + i] = 1;
  }
  auto pivots = row_reduce(aug, n);
  if (pivots.size() != n) return std::nullopt;
  RatMatrix inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

namespace {

// Floor division for the Euclidean steps of the Smith reduction.
Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

std::vector<Integer> smith_invariants(IntMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero absolute value in the trailing block.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] == 0) continue;
          if (pr == rows || abs(m[i][j]) < abs(m[pr][pc])) {
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == rows) return diag;
      std::swap(m[t], m[pr]);
      for (auto& row : m) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        Integer q = fdiv(m[i][t], m[t][t]);
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        Integer q = fdiv(m[t][j], m[t][t]);
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) m[t][j] += m[bad][j];
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) { return q.get_str(); }

Integer parse_integer(const std::string& s) {
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + start, s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error(ErrorCode::kInvalidInput, "not a decimal integer: '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(s));
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::kInvalidInput, "zero denominator: '" + s + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace statikit
