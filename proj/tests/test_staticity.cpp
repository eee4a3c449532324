#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "random_instances.hpp"

using namespace th;

namespace {

using Mono = std::pair<int, int>;

bool divides(Mono a, Mono b) { return a.first <= b.first && a.second <= b.second; }

bool in_ideal(const std::vector<Mono>& gens, Mono m) {
  for (auto g : gens)
    if (divides(g, m)) return true;
  return false;
}

std::size_t minimal_generators(const std::vector<Mono>& gens) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && divides(gens[j], gens[i]) && (gens[j] != gens[i] || j < i)) redundant = true;
    if (!redundant) ++count;
  }
  return count;
}

/// x_var is a zero divisor on k[x,y]/I iff some monomial outside I lands in I.
bool zero_divisor(const std::vector<Mono>& gens, int var) {
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b) {
      Mono m{a, b}, shifted = var == 0 ? Mono{a + 1, b} : Mono{a, b + 1};
      if (!in_ideal(gens, m) && in_ideal(gens, shifted)) return true;
    }
  return false;
}

ModulePresentation monomial_presentation(const std::vector<Mono>& gens) {
  ModulePresentation p{SmoothChart::standard(2), 1, {}};
  for (auto [a, b] : gens) {
    Exponent e{};
    e[0] = a;
    e[1] = b;
    p.columns.push_back(ModuleVector::monomial(2, 1, 0, e));
  }
  return p;
}

}  // namespace

TEST_CASE("Koszul homology examples") {
  auto ci = row(2, {"x^2", "y^2"});
  CHECK_FALSE(koszul_tor(ci, {0, 1}, 2).vanishes);
  CHECK(koszul_tor(row(2, {"x"}), {0, 1}, 2).vanishes);
  ModulePresentation free{SmoothChart::standard(2), 1, {}};
  for (std::size_t i = 1; i <= 3; ++i)
    for (const auto& face : face_subsets({0, 1})) CHECK(koszul_tor(free, face, i).vanishes);
  CHECK_FALSE(koszul_tor(free, {0, 1}, 0).vanishes);
  CHECK(koszul_tor(row(2, {"1"}), {0, 1}, 0).vanishes);
}

TEST_CASE("log Tor dimension") {
  auto sky = log_tor_dim_at_most(row(2, {"x", "y"}), 1);
  CHECK_FALSE(sky.holds);
  CHECK(sky.reports.size() == 4);
  CHECK(log_tor_dim_at_most(row(2, {"x"}), 1).holds);
  CHECK_FALSE(log_tor_dim_at_most(row(2, {"x"}), 0).holds);
  CHECK(log_tor_dim_at_most(ModulePresentation{SmoothChart::standard(2), 1, {}}, 0).holds);
  CHECK(face_subsets({0, 1}) == std::vector<std::vector<std::size_t>>{{}, {0}, {1}, {0, 1}});
}

TEST_CASE("static and log flat") {
  CHECK_FALSE(is_static(row(2, {"x^2", "y^2"})));
  CHECK(is_static(row(2, {"x^2*y^2", "y^2"})));
  CHECK(is_static(row(2, {"x"})));
  CHECK_FALSE(is_log_flat(row(2, {"x"})));
  CHECK_FALSE(is_static(row(2, {"x", "y"})));
  CHECK(is_log_flat(ModulePresentation{SmoothChart::standard(2), 1, {}}));
}

TEST_CASE("regular sequences on the presented module") {
  CHECK_FALSE(is_regular_sequence_on(module(2, 2, {"y^2*e1 - x^2*e2"}), {0, 1}));
  CHECK(is_regular_sequence_on(module(2, 1, {"e1"}), {0, 1}));
  CHECK(is_regular_sequence_on(module(2, 2, {"e1 - x^2*e2"}), {0, 1}));
  CHECK(is_regular_sequence_on(Submodule(2, 1), {0, 1}));
}

TEST_CASE("witnesses are verified homology classes") {
  std::mt19937 rng(4);
  int nonvanishing = 0;
  for (int trial = 0; trial < 30; ++trial) {
    auto M = gen::presentation(rng, 2, 1 + trial % 2, 2, 2, 2);
    for (const auto& face : face_subsets({0, 1}))
      for (std::size_t i = 1; i <= 2; ++i) {
        auto r = koszul_tor(M, face, i);
        CHECK(r.witness.has_value() == !r.vanishes);
        if (!r.vanishes) {
          ++nonvanishing;
          CHECK(verify_witness(M, r));
          auto forged = r;
          forged.witness = ModuleVector(r.witness->nvars(), r.witness->rank());
          CHECK_FALSE(verify_witness(M, forged));
        }
      }
  }
  CHECK(nonvanishing > 0);
}

TEST_CASE("Koszul homology of monomial quotients matches combinatorics") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Mono> gens;
    long count = gen::uniform(rng, 1, 3);
    for (long k = 0; k < count; ++k) gens.push_back({int(gen::uniform(rng, 0, 3)), int(gen::uniform(rng, 0, 3))});
    auto M = monomial_presentation(gens);
    bool unit = in_ideal(gens, {0, 0});
    CAPTURE(trial);
    CHECK(koszul_tor(M, {0, 1}, 2).vanishes == (unit || minimal_generators(gens) <= 1));
    CHECK(koszul_tor(M, {0, 1}, 1).vanishes == unit);
    CHECK(koszul_tor(M, {0}, 1).vanishes == !zero_divisor(gens, 0));
    CHECK(koszul_tor(M, {1}, 1).vanishes == !zero_divisor(gens, 1));
    CHECK(koszul_tor(M, {0}, 2).vanishes);
    CHECK(koszul_tor(M, {}, 0).vanishes == unit);
  }
}

TEST_CASE("charts") {
  auto s = SmoothChart::standard(2);
  CHECK(s.basis() == IntMatrix{pt({1, 0}), pt({0, 1})});
  CHECK(s.boundary_variables() == std::vector<std::size_t>{0, 1});
  auto c = SmoothChart::of_cone(cone(2, {{1, 0}, {1, 1}}));
  CHECK(c.basis() == IntMatrix{pt({1, 1}), pt({0, 1})});
  CHECK(error_of([] { SmoothChart::of_cone(cone(2, {{1, 0}, {1, 2}})); }) == ErrorCode::kNonSmoothChart);
  CHECK(error_of([] { SmoothChart::of_cone(cone(2, {{1, 1}})); }) == ErrorCode::kNonSmoothChart);
  ModulePresentation bad{s, 1, {vec("x^(-1)", 2)}};
  CHECK(error_of([&] { bad.validate(); }) == ErrorCode::kInvalidInput);
}
