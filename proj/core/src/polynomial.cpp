#include "statikit/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "statikit/error.hpp"

namespace statikit {

TermOrder TermOrder::grevlex(std::size_t nvars) {
  if (nvars > kMaxVariables) throw Error(ErrorCode::kInvalidInput, "too many ring variables");
  TermOrder o;
  o.nvars_ = nvars;
  return o;
}

TermOrder TermOrder::weighted(std::size_t nvars, std::vector<std::vector<std::int64_t>> rows) {
  TermOrder o = grevlex(nvars);
  for (auto& r : rows) {
    if (r.size() != nvars) throw Error(ErrorCode::kInvalidInput, "weight row length does not match the ring");
  }
  o.weights_ = std::move(rows);
  return o;
}

TermOrder TermOrder::eliminating_components(std::size_t block) const {
  TermOrder o = *this;
  o.block_ = block;
  return o;
}

TermOrder TermOrder::position_over_term() const {
  TermOrder o = *this;
  o.position_first_ = true;
  return o;
}

int TermOrder::compare(const Exponent& a, std::size_t ca, const Exponent& b, std::size_t cb) const {
  if (block_ > 0) {
    bool ea = ca < block_, eb = cb < block_;
    if (ea != eb) return ea ? 1 : -1;
  }
  if (position_first_ && ca != cb) return ca < cb ? 1 : -1;
  for (const auto& w : weights_) {
    __int128 da = 0, db = 0;
    for (std::size_t v = 0; v < nvars_; ++v) {
      da += static_cast<__int128>(w[v]) * a[v];
      db += static_cast<__int128>(w[v]) * b[v];
    }
    if (da != db) return da > db ? 1 : -1;
  }
  std::int64_t dega = 0, degb = 0;
  for (std::size_t v = 0; v < nvars_; ++v) {
    dega += a[v];
    degb += b[v];
  }
  if (dega != degb) return dega > degb ? 1 : -1;
  for (std::size_t v = nvars_; v-- > 0;) {
    if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
  }
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

namespace {

void canonicalize(std::vector<LaurentTerm>& terms, std::size_t nvars) {
  TermOrder order = TermOrder::grevlex(nvars);
  std::sort(terms.begin(), terms.end(),
            [&](const LaurentTerm& a, const LaurentTerm& b) { return order.compare(a, b) > 0; });
  std::vector<LaurentTerm> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().component == t.component && out.back().exponent == t.exponent) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const LaurentTerm& t) { return t.coeff == 0; }), out.end());
  terms = std::move(out);
}

}  // namespace

ModuleVector::ModuleVector(std::size_t nvars, std::size_t rank, std::vector<LaurentTerm> terms)
    : nvars_(nvars), rank_(rank), terms_(std::move(terms)) {
  if (nvars > kMaxVariables) throw Error(ErrorCode::kInvalidInput, "too many ring variables");
  for (auto& t : terms_) {
    if (t.component >= rank) throw Error(ErrorCode::kInvalidInput, "term component exceeds the module rank");
    for (std::size_t v = nvars; v < kMaxVariables; ++v)
      if (t.exponent[v] != 0) throw Error(ErrorCode::kInvalidInput, "exponent uses a variable outside the ring");
  }
  canonicalize(terms_, nvars_);
}

ModuleVector ModuleVector::unit(std::size_t nvars, std::size_t rank, std::size_t component) {
  return monomial(nvars, rank, component, Exponent{}, 1);
}

ModuleVector ModuleVector::constant(std::size_t nvars, const Rational& c) {
  return monomial(nvars, 1, 0, Exponent{}, c);
}

ModuleVector ModuleVector::variable(std::size_t nvars, std::size_t var) {
  Exponent e{};
  e[var] = 1;
  return monomial(nvars, 1, 0, e, 1);
}

ModuleVector ModuleVector::monomial(std::size_t nvars, std::size_t rank, std::size_t component, const Exponent& exponent,
                                    const Rational& coeff) {
  return ModuleVector(nvars, rank, {LaurentTerm{coeff, exponent, component}});
}

bool ModuleVector::is_polynomial() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const LaurentTerm& t) {
    return std::all_of(t.exponent.begin(), t.exponent.end(), [](std::int32_t e) { return e >= 0; });
  });
}

ModuleVector ModuleVector::component(std::size_t i) const {
  std::vector<LaurentTerm> out;
  for (const auto& t : terms_)
    if (t.component == i) out.push_back({t.coeff, t.exponent, 0});
  return ModuleVector(nvars_, 1, std::move(out));
}

ModuleVector ModuleVector::operator+(const ModuleVector& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (o.rank_ != rank_ || o.nvars_ != nvars_) throw Error(ErrorCode::kInvalidInput, "mismatched module vectors");
  std::vector<LaurentTerm> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return ModuleVector(nvars_, rank_, std::move(all));
}

ModuleVector ModuleVector::operator-(const ModuleVector& o) const { return *this + (-o); }

ModuleVector ModuleVector::operator-() const { return scaled(-1); }

ModuleVector ModuleVector::scaled(const Rational& c) const {
  if (c == 0) return ModuleVector(nvars_, rank_);
  ModuleVector out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

ModuleVector ModuleVector::shifted(const Exponent& e) const {
  ModuleVector out = *this;
  for (auto& t : out.terms_)
    for (std::size_t v = 0; v < nvars_; ++v) t.exponent[v] += e[v];
  return out;
}

ModuleVector ModuleVector::embedded(std::size_t new_rank, std::size_t offset) const {
  std::vector<LaurentTerm> out = terms_;
  for (auto& t : out) t.component += offset;
  return ModuleVector(nvars_, new_rank, std::move(out));
}

ModuleVector ModuleVector::with_nvars(std::size_t nvars) const {
  if (nvars < nvars_) throw Error(ErrorCode::kInvalidInput, "cannot drop ring variables");
  return ModuleVector(nvars, rank_, terms_);
}

bool operator==(const ModuleVector& a, const ModuleVector& b) {
  if (a.nvars_ != b.nvars_ || a.rank_ != b.rank_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (s.component != t.component || s.exponent != t.exponent || s.coeff != t.coeff) return false;
  }
  return true;
}

ModuleVector multiply(const ModuleVector& poly, const ModuleVector& v) {
  if (poly.rank() != 1) throw Error(ErrorCode::kInvalidInput, "left factor must be a polynomial");
  std::vector<LaurentTerm> out;
  out.reserve(poly.terms().size() * v.terms().size());
  for (const auto& p : poly.terms())
    for (const auto& t : v.terms()) {
      LaurentTerm r{p.coeff * t.coeff, t.exponent, t.component};
      for (std::size_t k = 0; k < kMaxVariables; ++k) r.exponent[k] += p.exponent[k];
      out.push_back(std::move(r));
    }
  return ModuleVector(std::max(poly.nvars(), v.nvars()), v.rank(), std::move(out));
}

ModuleVector apply_columns(const std::vector<ModuleVector>& columns, const ModuleVector& coeffs,
                           std::size_t target_rank) {
  std::vector<LaurentTerm> out;
  for (std::size_t i = 0; i < columns.size(); ++i) {
    auto c = coeffs.component(i);
    if (c.is_zero()) continue;
    auto prod = multiply(c, columns[i]);
    out.insert(out.end(), prod.terms().begin(), prod.terms().end());
  }
  return ModuleVector(coeffs.nvars(), target_rank, std::move(out));
}

const LaurentTerm& leading_term(const ModuleVector& v, const TermOrder& order) {
  if (v.is_zero()) throw Error(ErrorCode::kZeroVector, "zero vector has no leading term");
  const auto& ts = v.terms();
  std::size_t best = 0;
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (order.compare(ts[i], ts[best]) > 0) best = i;
  return ts[best];
}

std::vector<LaurentTerm> sorted_terms(const ModuleVector& v, const TermOrder& order) {
  std::vector<LaurentTerm> ts = v.terms();
  std::sort(ts.begin(), ts.end(), [&](const LaurentTerm& a, const LaurentTerm& b) { return order.compare(a, b) > 0; });
  return ts;
}

Exponent min_exponent(const ModuleVector& v) {
  Exponent m{};
  bool first = true;
  for (const auto& t : v.terms()) {
    for (std::size_t k = 0; k < kMaxVariables; ++k) m[k] = first ? t.exponent[k] : std::min(m[k], t.exponent[k]);
    first = false;
  }
  return m;
}

ModuleVector substitute_monomials(const ModuleVector& v, const std::vector<std::vector<std::int64_t>>& images,
                                  std::size_t target_nvars) {
  std::vector<LaurentTerm> out;
  for (const auto& t : v.terms()) {
    LaurentTerm r{t.coeff, Exponent{}, t.component};
    for (std::size_t j = 0; j < v.nvars(); ++j)
      for (std::size_t i = 0; i < target_nvars; ++i)
        r.exponent[i] += static_cast<std::int32_t>(images[j][i] * t.exponent[j]);
    out.push_back(std::move(r));
  }
  return ModuleVector(target_nvars, v.rank(), std::move(out));
}

std::string format(const ModuleVector& v) {
  if (v.is_zero()) return "0";
  static const char* short_names[] = {"x", "y", "z", "w"};
  std::ostringstream os;
  bool first = true;
  for (const auto& t : v.terms()) {
    Rational c = t.coeff;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      c = abs(c);
    } else if (c < 0) {
      os << "-";
      c = -c;
    }
    first = false;
    std::ostringstream mono;
    for (std::size_t k = 0; k < v.nvars(); ++k) {
      if (t.exponent[k] == 0) continue;
      if (mono.tellp() > 0) mono << "*";
      if (v.nvars() <= 4)
        mono << short_names[k];
      else
        mono << "x" << (k + 1);
      if (t.exponent[k] != 1) mono << "^" << t.exponent[k];
    }
    std::string m = mono.str();
    bool show_unit = v.rank() > 1;
    if (c != 1 || (m.empty() && !show_unit)) {
      os << c.get_str();
      if (!m.empty() || show_unit) os << "*";
    }
    os << m;
    if (show_unit) os << (m.empty() ? "" : "*") << "e" << (t.component + 1);
  }
  return os.str();
}

}  // namespace statikit
