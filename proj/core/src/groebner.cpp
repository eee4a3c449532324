#include "statikit/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "statikit/error.hpp"

namespace statikit {

namespace {

using Poly = std::vector<LaurentTerm>;

bool divides(const Exponent& a, const Exponent& b, std::size_t nvars) {
  for (std::size_t v = 0; v < nvars; ++v)
    if (a[v] > b[v]) return false;
  return true;
}

Exponent difference(const Exponent& a, const Exponent& b) {
  Exponent d{};
  for (std::size_t v = 0; v < kMaxVariables; ++v) d[v] = a[v] - b[v];
  return d;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent d{};
  for (std::size_t v = 0; v < kMaxVariables; ++v) d[v] = std::max(a[v], b[v]);
  return d;
}

std::int64_t degree(const Exponent& e) {
  std::int64_t s = 0;
  for (auto x : e) s += x;
  return s;
}

// f[fs..] - c * x^shift * g[gs..], both inputs sorted decreasingly.
Poly sub_scaled(const Poly& f, std::size_t fs, const Rational& c, const Exponent& shift, const Poly& g, std::size_t gs,
                const TermOrder& ord) {
  Poly out;
  out.reserve(f.size() - fs + g.size() - gs);
  std::size_t i = fs, j = gs;
  LaurentTerm moved;
  bool have = false;
  auto load = [&]() {
    if (j < g.size()) {
      moved.coeff = -c * g[j].coeff;
      moved.component = g[j].component;
      for (std::size_t v = 0; v < kMaxVariables; ++v) moved.exponent[v] = g[j].exponent[v] + shift[v];
      have = true;
    } else {
      have = false;
    }
  };
  load();
  while (i < f.size() || have) {
    if (!have) {
      out.push_back(f[i++]);
      continue;
    }
    if (i == f.size()) {
      out.push_back(moved);
      ++j;
      load();
      continue;
    }
    int cmp = ord.compare(f[i], moved);
    if (cmp > 0) {
      out.push_back(f[i++]);
    } else if (cmp < 0) {
      out.push_back(moved);
      ++j;
      load();
    } else {
      Rational s = f[i].coeff + moved.coeff;
      if (s != 0) out.push_back({s, f[i].exponent, f[i].component});
      ++i;
      ++j;
      load();
    }
  }
  return out;
}

Poly reduce(Poly f, const std::vector<Poly>& basis, const TermOrder& ord, std::size_t nvars, bool full,
            std::size_t skip = static_cast<std::size_t>(-1)) {
  Poly r;
  std::size_t i = 0;
  while (i < f.size()) {
    const auto& t = f[i];
    const Poly* div = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      const auto& lead = basis[k].front();
      if (lead.component == t.component && divides(lead.exponent, t.exponent, nvars)) {
        div = &basis[k];
        break;
      }
    }
    if (div == nullptr) {
      if (!full) {
        r.insert(r.end(), f.begin() + static_cast<std::ptrdiff_t>(i), f.end());
        break;
      }
      r.push_back(t);
      ++i;
      continue;
    }
    Rational c = t.coeff / div->front().coeff;
    Exponent shift = difference(t.exponent, div->front().exponent);
    f = sub_scaled(f, i + 1, c, shift, *div, 1, ord);
    i = 0;
  }
  return r;
}

void make_monic(Poly& p) {
  if (p.empty() || p.front().coeff == 1) return;
  Rational inv = 1 / p.front().coeff;
  for (auto& t : p) t.coeff *= inv;
}

Poly to_poly(const ModuleVector& v, const TermOrder& ord) { return sorted_terms(v, ord); }

ModuleVector from_poly(const Poly& p, std::size_t nvars, std::size_t rank) { return ModuleVector(nvars, rank, p); }

struct Pair {
  std::size_t i, j;
  Exponent lcm;
};

}  // namespace

Submodule::Submodule(std::size_t nvars, std::size_t rank, std::vector<ModuleVector> generators)
    : nvars_(nvars), rank_(rank) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    if (g.rank() != rank || g.nvars() != nvars)
      throw Error(ErrorCode::kInvalidInput, "generator does not live in the ambient free module");
    generators_.push_back(std::move(g));
  }
}

Submodule Submodule::from_laurent(std::size_t nvars, std::size_t rank, std::vector<ModuleVector> generators) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    Exponent m = min_exponent(g);
    for (auto& x : m) x = -x;
    g = g.shifted(m);
  }
  return Submodule(nvars, rank, std::move(generators));
}

MarkedGB reduced_gb(const std::vector<ModuleVector>& generators, std::size_t nvars, std::size_t rank,
                    const TermOrder& ord) {
  std::vector<Poly> basis;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_polynomial()) throw Error(ErrorCode::kInvalidInput, "Groebner bases need polynomial generators");
    Poly p = reduce(to_poly(g, ord), basis, ord, nvars, false);
    if (p.empty()) continue;
    make_monic(p);
    basis.push_back(std::move(p));
  }

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> pending_set;
  auto add_pairs = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].front().component != basis[k].front().component) continue;
      pending.push_back({i, k, lcm(basis[i].front().exponent, basis[k].front().exponent)});
      pending_set.insert({i, k});
    }
  };
  for (std::size_t k = 0; k < basis.size(); ++k) add_pairs(k);

  auto is_pending = [&](std::size_t a, std::size_t b) { return pending_set.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pending.empty()) {
    std::size_t best = 0;
    for (std::size_t p = 1; p < pending.size(); ++p) {
      auto db = degree(pending[best].lcm), dp = degree(pending[p].lcm);
      if (dp < db || (dp == db && ord.compare(pending[p].lcm, basis[pending[p].i].front().component, pending[best].lcm,
                                              basis[pending[best].i].front().component) < 0))
        best = p;
    }
    Pair pair = pending[best];
    pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
    pending_set.erase({pair.i, pair.j});

    const std::size_t comp = basis[pair.i].front().component;
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pair.i || k == pair.j) continue;
      const auto& lead = basis[k].front();
      if (lead.component != comp || !divides(lead.exponent, pair.lcm, nvars)) continue;
      if (!is_pending(pair.i, k) && !is_pending(pair.j, k)) skip = true;
    }
    if (skip) continue;

    const Poly& f = basis[pair.i];
    const Poly& g = basis[pair.j];
    Poly left;
    {
      Exponent sf = difference(pair.lcm, f.front().exponent);
      Poly shifted_f;
      shifted_f.reserve(f.size() - 1);
      for (std::size_t t = 1; t < f.size(); ++t) {
        LaurentTerm term = f[t];
        for (std::size_t v = 0; v < kMaxVariables; ++v) term.exponent[v] += sf[v];
        shifted_f.push_back(std::move(term));
      }
      Exponent sg = difference(pair.lcm, g.front().exponent);
      left = sub_scaled(shifted_f, 0, Rational(1), sg, g, 1, ord);
    }
    Poly h = reduce(std::move(left), basis, ord, nvars, false);
    if (h.empty()) continue;
    make_monic(h);
    basis.push_back(std::move(h));
    add_pairs(basis.size() - 1);
  }

  // Minimalize, then interreduce.
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size() && keep[a]; ++b) {
      if (a == b || !keep[b]) continue;
      const auto& la = basis[a].front();
      const auto& lb = basis[b].front();
      if (la.component != lb.component || !divides(lb.exponent, la.exponent, nvars)) continue;
      if (la.exponent == lb.exponent && b > a) continue;
      keep[a] = false;
    }
  }
  std::vector<Poly> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a)
    if (keep[a]) minimal.push_back(std::move(basis[a]));
  std::vector<Poly> reduced(minimal.size());
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    Poly head{minimal[a].front()};
    Poly tail(minimal[a].begin() + 1, minimal[a].end());
    Poly r = reduce(std::move(tail), minimal, ord, nvars, true, a);
    head.insert(head.end(), r.begin(), r.end());
    make_monic(head);
    reduced[a] = std::move(head);
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) { return ord.compare(a.front(), b.front()) > 0; });

  MarkedGB gb{ord, nvars, rank, {}, {}};
  for (auto& p : reduced) {
    gb.leading.push_back(p.front());
    gb.elements.push_back(from_poly(p, nvars, rank));
  }
  return gb;
}

MarkedGB reduced_gb(const Submodule& module, const TermOrder& order) {
  return reduced_gb(module.generators(), module.nvars(), module.rank(), order);
}

MarkedGB reduced_gb(const Submodule& module) { return reduced_gb(module, TermOrder::grevlex(module.nvars())); }

ModuleVector normal_form(const ModuleVector& f, const MarkedGB& gb) {
  std::vector<Poly> basis;
  for (const auto& e : gb.elements) basis.push_back(to_poly(e, gb.order));
  Poly r = reduce(to_poly(f, gb.order), basis, gb.order, gb.nvars, true);
  return from_poly(r, f.nvars(), f.rank());
}

bool is_member(const ModuleVector& f, const MarkedGB& gb) { return normal_form(f, gb).is_zero(); }

bool is_member(const ModuleVector& f, const Submodule& module) { return is_member(f, reduced_gb(module)); }

bool is_submodule(const Submodule& a, const Submodule& b) {
  auto gb = reduced_gb(b);
  return std::all_of(a.generators().begin(), a.generators().end(), [&](const ModuleVector& g) { return is_member(g, gb); });
}

namespace {

// Elements of the GB lying entirely in components >= block, moved down by `block`.
std::vector<ModuleVector> eliminate_components(const std::vector<ModuleVector>& gens, std::size_t nvars,
                                               std::size_t total_rank, std::size_t block) {
  auto order = TermOrder::grevlex(nvars).eliminating_components(block);
  auto gb = reduced_gb(gens, nvars, total_rank, order);
  std::vector<ModuleVector> out;
  for (std::size_t k = 0; k < gb.elements.size(); ++k) {
    if (gb.leading[k].component < block) continue;
    std::vector<LaurentTerm> terms = gb.elements[k].terms();
    for (auto& t : terms) t.component -= block;
    out.emplace_back(nvars, total_rank - block, std::move(terms));
  }
  return out;
}

}  // namespace

Submodule syzygies(const std::vector<ModuleVector>& columns, std::size_t nvars, std::size_t target_rank) {
  const std::size_t k = columns.size();
  const std::size_t total = target_rank + k;
  std::vector<ModuleVector> gens;
  for (std::size_t j = 0; j < k; ++j) {
    if (columns[j].rank() != target_rank) throw Error(ErrorCode::kInvalidInput, "matrix column has the wrong length");
    gens.push_back(columns[j].with_nvars(nvars).embedded(total, 0) + ModuleVector::unit(nvars, total, target_rank + j));
  }
  return Submodule(nvars, k, eliminate_components(gens, nvars, total, target_rank));
}

Submodule colon(const Submodule& module, const ModuleVector& g) {
  const std::size_t m = module.rank(), n = module.nvars();
  if (g.rank() != 1) throw Error(ErrorCode::kInvalidInput, "colon needs a polynomial");
  if (g.is_zero()) {
    std::vector<ModuleVector> all;
    for (std::size_t i = 0; i < m; ++i) all.push_back(ModuleVector::unit(n, m, i));
    return Submodule(n, m, std::move(all));
  }
  std::vector<ModuleVector> gens;
  for (std::size_t i = 0; i < m; ++i)
    gens.push_back(g.with_nvars(n).embedded(2 * m, i) + ModuleVector::unit(n, 2 * m, m + i));
  for (const auto& v : module.generators()) gens.push_back(v.embedded(2 * m, 0));
  return Submodule(n, m, eliminate_components(gens, n, 2 * m, m));
}

Submodule saturation(const Submodule& module, const ModuleVector& g) {
  Submodule current = module;
  while (true) {
    Submodule next = colon(current, g);
    if (is_submodule(next, current)) return current;
    current = std::move(next);
  }
}

Submodule laurent_saturation(const Submodule& module) {
  Submodule current = module;
  for (std::size_t v = 0; v < module.nvars(); ++v)
    current = saturation(current, ModuleVector::variable(module.nvars(), v));
  return current;
}

Submodule sum(const Submodule& a, const Submodule& b) {
  if (a.rank() != b.rank() || a.nvars() != b.nvars()) throw Error(ErrorCode::kInvalidInput, "mismatched submodules");
  std::vector<ModuleVector> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Submodule(a.nvars(), a.rank(), std::move(gens));
}

}  // namespace statikit
