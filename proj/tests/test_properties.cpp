#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "random_instances.hpp"

using namespace th;

namespace {

LatticePoint random_point(std::mt19937& rng, std::size_t n, long hi) {
  while (true) {
    LatticePoint p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(gen::uniform(rng, 0, hi));
    if (!is_zero(p)) return primitive(p);
  }
}

Fan random_fan(std::mt19937& rng, std::size_t n, int subdivisions) {
  auto f = Fan::of_cone(RationalCone::orthant(n));
  for (int k = 0; k < subdivisions; ++k) f = star_subdivision(f, random_point(rng, n, 3));
  return f;
}

Submodule random_module(std::mt19937& rng, std::size_t n, std::size_t rank, int gens, long degree) {
  std::vector<ModuleVector> out;
  for (int k = 0; k < gens; ++k) {
    ModuleVector v(n, rank);
    for (std::size_t c = 0; c < rank; ++c) v = v + gen::polynomial(rng, n, degree, 2).embedded(rank, c);
    if (!v.is_zero()) out.push_back(v);
  }
  if (out.empty()) out.push_back(ModuleVector::unit(n, rank, 0));
  return Submodule(n, rank, out);
}

RatVector random_weight(std::mt19937& rng, std::size_t n) {
  RatVector w;
  for (std::size_t i = 0; i < n; ++i) w.emplace_back(gen::uniform(rng, -4, 4), gen::uniform(rng, 1, 3));
  return w;
}

}  // namespace

TEST_CASE("star subdivisions and common refinements are fans refining their inputs") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto f = random_fan(rng, n, 1 + trial % 3);
    auto g = random_fan(rng, n, 1 + trial % 2);
    CHECK(fan_violations(f).empty());
    auto s = star_subdivision(f, random_point(rng, n, 4));
    CHECK(fan_violations(s).empty());
    CHECK(refines(s, f));
    auto c = common_refinement(f, g);
    CHECK(fan_violations(c).empty());
    CHECK(refines(c, f));
    CHECK(refines(c, g));
    CHECK(c == common_refinement(g, f));
    auto smooth = resolve_singularities(c);
    CHECK(refines(smooth, c));
    for (const auto& cone : smooth.cones()) CHECK(is_smooth(cone));
  }
}

TEST_CASE("initial forms are idempotent and monomially equivariant") {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    auto f = gen::nonzero_polynomial(rng, 3, 3, 4);
    auto w = random_weight(rng, 3);
    auto in = initial_form(f, w);
    CHECK(initial_form(in, w) == in);
    Exponent m{};
    for (std::size_t i = 0; i < 3; ++i) m[i] = static_cast<std::int32_t>(gen::uniform(rng, -2, 2));
    CHECK(initial_form(f.shifted(m), w) == in.shifted(m));
  }
}

TEST_CASE("initial modules ignore the Laurent normalization") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    auto G = random_module(rng, 2, 1 + trial % 2, 2, 2);
    std::vector<ModuleVector> shifted;
    for (const auto& g : G.generators()) {
      Exponent m{};
      m[0] = static_cast<std::int32_t>(gen::uniform(rng, -2, 2));
      m[1] = static_cast<std::int32_t>(gen::uniform(rng, -2, 2));
      shifted.push_back(g.shifted(m));
    }
    auto H = Submodule::from_laurent(G.nvars(), G.rank(), shifted);
    auto w = random_weight(rng, 2);
    CHECK(initial_module(G, w) == initial_module(H, w));
    CHECK(laurent_canonical(G) == laurent_canonical(H));
  }
}

TEST_CASE("reduced Groebner bases are idempotent") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    auto G = random_module(rng, 2 + trial % 2, 1 + trial % 2, 2 + trial % 2, 3);
    auto gb = reduced_gb(G);
    CHECK(reduced_gb(Submodule(G.nvars(), G.rank(), gb.elements)) == gb);
    for (const auto& g : G.generators()) CHECK(is_member(g, gb));
  }
}

TEST_CASE("stratification cells partition the support") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto G = random_module(rng, n, 1 + trial % 2, 1 + trial % 2, 2);
    auto s = groebner_stratification(G, RationalCone::orthant(n));
    auto fan = s.strata.cell_fan();
    CHECK(fan_violations(fan).empty());
    auto smooth = stratification_to_smooth_fan(s.strata);
    CHECK(refines(smooth, s.strata));
    for (const auto& cone : smooth.cones()) CHECK(is_smooth(cone));
    for (int k = 0; k < 20; ++k) {
      auto p = random_point(rng, n, 7);
      std::size_t hits = 0;
      for (const auto& cell : s.strata.cells()) hits += cell.cone.contains_in_relint(p) ? 1 : 0;
      CHECK(hits == 1);
      RatVector w(p.begin(), p.end());
      CHECK(initial_module(G, w) == s.tag(s.strata.label_at(p)));
    }
  }
}

TEST_CASE("Koszul homology of graded modules is rigid") {
  std::mt19937 rng(6);
  int rigid_cases = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto M = gen::multigraded_presentation(rng, n, 1 + trial % 2, 1 + trial % 3, 3);
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(i);
    if (!koszul_tor(M, all, 1).vanishes) continue;
    ++rigid_cases;
    for (std::size_t i = 2; i <= n; ++i) CHECK(koszul_tor(M, all, i).vanishes);
  }
  CHECK(rigid_cases > 0);
}

TEST_CASE("log Tor dimension is monotone") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto M = gen::presentation(rng, 2, 1 + trial % 2, 1 + trial % 3, 2, 2);
    bool previous = false;
    for (std::size_t d = 0; d <= 2; ++d) {
      bool now = log_tor_dim_at_most(M, d).holds;
      if (previous) CHECK(now);
      previous = now;
    }
    CHECK(log_tor_dim_at_most(M, 2).holds);
  }
}

TEST_CASE("statification certificates replay and their charts are static") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    auto M = gen::presentation(rng, 2, 1, 2, 3, 2);
    auto cert = compute_statification(M, {trial % 3 == 0, false});
    CHECK(cert.output_refines);
    CHECK(cert.all_static());
    CHECK(replay(cert).ok);
    auto id = ToricModification::identity(M.chart);
    auto same = pullback_presentation(M, id, M.chart.cone());
    CHECK(same.columns == M.columns);
  }
}

TEST_CASE("chip-firing equivalence is an equivalence relation") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = gen::connected_graph(rng, 3 + trial % 4, static_cast<std::size_t>(trial % 3));
    std::vector<Divisor> ds;
    auto base = gen::divisor(rng, g.vertex_count(), -3, 3);
    for (int k = 0; k < 6; ++k)
      ds.push_back(k % 2 == 0 ? fire(g, base, gen::divisor(rng, g.vertex_count(), -2, 2))
                              : gen::divisor(rng, g.vertex_count(), -3, 3));
    for (const auto& a : ds) {
      CHECK(is_chip_firing_equivalent(g, a, a));
      CHECK(fire(g, a, IntVector(g.vertex_count(), 1)) == a);
      for (const auto& b : ds) {
        bool ab = is_chip_firing_equivalent(g, a, b);
        CHECK(ab == is_chip_firing_equivalent(g, b, a));
        if (ab) {
          Integer da = 0, db = 0;
          for (const auto& x : a) da += x;
          for (const auto& x : b) db += x;
          CHECK(da == db);
        }
        for (const auto& c : ds)
          if (ab && is_chip_firing_equivalent(g, b, c)) CHECK(is_chip_firing_equivalent(g, a, c));
      }
    }
  }
}
