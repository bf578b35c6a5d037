#include <doctest.h>

#include <random>

#include "../oracle.hpp"
#include "hmw/cone.hpp"
#include "hmw/errors.hpp"
#include "hmw/reduction.hpp"

using namespace hmw;
using namespace hmw::reduction;

namespace {

const HasseLattice& ram() {
  static const HasseLattice l(Carousel(SplittingProfile(2, {{2, 1}})));
  return l;
}

Weight wt(std::initializer_list<long> v) { return Weight(make_int_vector(v)); }

}  // namespace

TEST_CASE("reducible directions") {
  const auto& c = ram().carousel();
  CHECK(reducible_directions(c, wt({0, 1})) == std::vector<std::size_t>{0});
  CHECK(reducible_directions(c, wt({1, -1})) == std::vector<std::size_t>{1});
  CHECK(reducible_directions(c, wt({0, 0})).empty());
  CHECK(in_min_cone(c, wt({2, 3})));
}

TEST_CASE("reduce_step") {
  const auto& c = ram().carousel();
  CHECK(reduce_step(c, wt({0, 1}), 0) == wt({1, -1}));
  CHECK(reduce_step(c, wt({1, -1}), 1) == wt({0, 0}));
  CHECK_THROWS_AS(reduce_step(c, wt({0, 0}), 0), NotReducible);
  CHECK_THROWS_AS(reduce_step(c, wt({0, 1}), 5), ForeignEmbedding);
}

TEST_CASE("greedy reduction") {
  SUBCASE("two steps into the minimal cone") {
    const auto res = greedy_reduce(ram(), wt({0, 1}));
    const auto* in = std::get_if<InMinCone>(&res.result);
    REQUIRE(in != nullptr);
    CHECK(in->decomposition.w() == wt({0, 0}));
    CHECK(in->decomposition.a() == make_int_vector({1, 1}));
    CHECK(res.steps == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("vanishing outside the Hasse cone") {
    const auto res = greedy_reduce(ram(), wt({-1, 0}));
    const auto* v = std::get_if<Vanishing>(&res.result);
    REQUIRE(v != nullptr);
    CHECK(v->tau == 0);
    CHECK(v->y_tau == -1);
    CHECK(res.steps.empty());
  }
  SUBCASE("already minimal") {
    const auto res = greedy_reduce(ram(), wt({2, 3}));
    const auto* in = std::get_if<InMinCone>(&res.result);
    REQUIRE(in != nullptr);
    CHECK(in->decomposition.w() == wt({2, 3}));
    CHECK(in->decomposition.a() == make_int_vector({0, 0}));
  }
}

// Greedy can leave C^Hasse from inside it: for the inert quadratic profile
// at p = 2, k = (1, 0) has y = (1/3, 2/3) but its only reducible direction
// is τ₂ and k − h₂ has y = (1/3, −1/3).
TEST_CASE("greedy reduction may report Vanishing for a weight inside the Hasse cone") {
  const HasseLattice inert(Carousel(SplittingProfile(2, {{1, 2}})));
  const Weight k = wt({1, 0});
  CHECK(inert.coordinates(k) == RatVector{Rational(1, 3), Rational(2, 3)});
  CHECK(cone::contains_hasse(inert, to_rational(k.coords())).member);
  const auto res = greedy_reduce(inert, k);
  const auto* v = std::get_if<Vanishing>(&res.result);
  REQUIRE(v != nullptr);
  CHECK(v->tau == 1);
  CHECK(v->y_tau == Rational(-1, 3));
  CHECK(v->at == wt({-1, 1}));
  CHECK(enumerate_min_decompositions(inert, k).empty());
}

TEST_CASE("decomposition enumeration") {
  auto all = enumerate_min_decompositions(ram(), wt({0, 1}));
  REQUIRE(all.size() == 1);
  CHECK(all[0].w() == wt({0, 0}));
  CHECK(all[0].a() == make_int_vector({1, 1}));
  all = enumerate_min_decompositions(ram(), wt({0, 0}));
  REQUIRE(all.size() == 1);
  CHECK(all[0].a() == make_int_vector({0, 0}));
  CHECK(enumerate_min_decompositions(ram(), wt({-1, 0})).empty());
  const auto max = pareto_maximal_decompositions(ram(), wt({0, 1}));
  REQUIRE(max.size() == 1);
  CHECK(max[0] == enumerate_min_decompositions(ram(), wt({0, 1}))[0]);
}

TEST_CASE("decomposition invariants are enforced") {
  CHECK_THROWS_AS(Decomposition(ram(), wt({0, 1}), wt({0, 0}), make_int_vector({1, 0})), CheckFailure);
  CHECK_THROWS_AS(Decomposition(ram(), wt({1, -1}), wt({1, -1}), make_int_vector({0, 0})), CheckFailure);
  CHECK_THROWS_AS(Decomposition(ram(), wt({1, -2}), wt({0, 0}), make_int_vector({-1, 0})), CheckFailure);
}

TEST_CASE("property: reduction outcomes") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 400; ++trial) {
    const Carousel c(oracle::random_profile(rng, 5, {2, 3, 5}));
    const HasseLattice lattice(c);
    const Weight k(oracle::random_weight(rng, c.size(), 5));
    const RatVector y = lattice.coordinates(k);
    const bool in_hasse = std::all_of(y.begin(), y.end(), [](const Rational& q) { return q >= 0; });
    const auto res = greedy_reduce(lattice, k);
    CHECK_FALSE(std::holds_alternative<BudgetExceeded>(res.result));
    // Outside the Hasse cone greedy always stops with Vanishing.
    if (!in_hasse) CHECK(std::holds_alternative<Vanishing>(res.result));
    const auto all = enumerate_min_decompositions(lattice, k);
    if (!in_hasse) CHECK(all.empty());
    if (const auto* in = std::get_if<InMinCone>(&res.result)) {
      CHECK(in_min_cone(c, in->decomposition.w()));
      CHECK(std::find(all.begin(), all.end(), in->decomposition) != all.end());
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(in_min_cone(c, all[i].w()));
      CHECK(all[i].w() + lattice.combination(all[i].a()) == k);
      if (i > 0) CHECK(all[i - 1] < all[i]);
    }
    const auto max = pareto_maximal_decompositions(lattice, k);
    CHECK(max.size() <= all.size());
    if (!all.empty()) CHECK_FALSE(max.empty());
    for (const auto& m : max)
      for (const auto& other : all) {
        bool dominates = other.a() != m.a();
        for (std::size_t t = 0; t < c.size(); ++t) dominates = dominates && other.a()[t] >= m.a()[t];
        CHECK_FALSE(dominates);
      }
  }
}
