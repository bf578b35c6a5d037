#include <doctest.h>

#include <random>

#include "../oracle.hpp"
#include "hmw/cone.hpp"
#include "hmw/errors.hpp"

using namespace hmw;
using namespace hmw::cone;

namespace {

const Carousel& ram() {
  static const Carousel c(SplittingProfile(2, {{2, 1}}));
  return c;
}

std::vector<IntVector> vecs(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> out;
  for (auto r : rows) out.push_back(make_int_vector(r));
  return out;
}

}  // namespace

TEST_CASE("cone constructors canonicalize") {
  const HRepCone h(2, vecs({{4, -2}, {-1, 1}, {2, -1}}));
  CHECK(h.normals() == vecs({{-1, 1}, {2, -1}}));
  CHECK_THROWS_AS(HRepCone(2, vecs({{0, 0}})), InvariantError);
  CHECK_THROWS_AS(HRepCone(2, vecs({{1, 0, 0}})), DimensionMismatch);
  const VRepCone v(2, std::vector<RatVector>{{Rational(1, 2), Rational(1, 3)}});
  CHECK(v.rays() == vecs({{3, 2}}));
}

TEST_CASE("minimal, standard and Hasse cones of the ramified quadratic profile") {
  CHECK(min_cone(ram()).normals() == vecs({{-1, 1}, {2, -1}}));
  CHECK(std_cone(ram()).normals() == vecs({{0, 1}, {1, 0}}));
  CHECK(hasse_cone(ram()).rays() == vecs({{-1, 2}, {1, -1}}));
  CHECK(dd_convert_h_to_v(min_cone(ram())).rays() == vecs({{1, 1}, {1, 2}}));
  CHECK(dd_convert_v_to_h(hasse_cone(ram())).normals() == vecs({{1, 1}, {2, 1}}));
}

TEST_CASE("membership certificates") {
  const HasseLattice lattice(ram());
  const auto in = contains_hasse(lattice, to_rational(make_int_vector({1, 1})));
  CHECK(in.member);
  CHECK(in.kind == CertificateKind::HasseCoordinates);
  CHECK(in.values == to_rational(make_int_vector({2, 3})));
  const auto out = contains_hasse(lattice, to_rational(make_int_vector({-1, 0})));
  CHECK_FALSE(out.member);
  CHECK(out.kind == CertificateKind::NegativeHasseCoordinate);
  CHECK(out.witness == std::size_t{0});
  CHECK(out.values == to_rational(make_int_vector({-1})));

  const auto h = contains(AnyCone(min_cone(ram())), to_rational(make_int_vector({1, 2})));
  CHECK(h.member);
  CHECK(h.values == to_rational(make_int_vector({1, 0})));
  const auto miss = contains(AnyCone(std_cone(ram())), to_rational(make_int_vector({1, -1})));
  CHECK_FALSE(miss.member);
  CHECK(miss.kind == CertificateKind::ViolatedRow);
  CHECK(miss.witness == std::size_t{0});
  CHECK_THROWS_AS(contains(min_cone(ram()), to_rational(make_int_vector({1}))), DimensionMismatch);
}

TEST_CASE("subset and equality") {
  const auto sub = cone_subset(min_cone(ram()), std_cone(ram()));
  CHECK(sub.holds);
  CHECK(sub.rays_of_a.rays() == vecs({{1, 1}, {1, 2}}));
  const auto rev = cone_subset(std_cone(ram()), min_cone(ram()));
  CHECK_FALSE(rev.holds);
  REQUIRE(rev.violation.has_value());
  CHECK(rev.violation_slack < 0);
  CHECK_FALSE(cone_equal(min_cone(ram()), hasse_cone(ram())));
  const Carousel split(SplittingProfile(3, {{1, 1}, {1, 1}}));
  CHECK(cone_equal(min_cone(split), hasse_cone(split)));
  CHECK_THROWS_AS(cone_subset(min_cone(ram()), std_cone(Carousel(SplittingProfile(2, {{1, 3}})))), DimensionMismatch);
}

TEST_CASE("split equality report") {
  auto rep = split_equality_report(Carousel(SplittingProfile(3, {{1, 1}, {1, 1}})));
  CHECK(rep.is_totally_split);
  CHECK(rep.cones_equal);
  rep = split_equality_report(ram());
  CHECK_FALSE(rep.is_totally_split);
  CHECK_FALSE(rep.cones_equal);
  rep = split_equality_report(Carousel(SplittingProfile(2, {{1, 2}})));
  CHECK_FALSE(rep.is_totally_split);
  CHECK_FALSE(rep.cones_equal);
}

TEST_CASE("double description handles lineality and degenerate cones") {
  // Half-plane x ≥ 0 in ℝ²: ray e₁ plus the line ±e₂.
  const auto v = dd_convert_h_to_v(HRepCone(2, vecs({{1, 0}})));
  CHECK(v.rays() == vecs({{0, -1}, {0, 1}, {1, 0}}));
  // No constraints: the whole space.
  CHECK(dd_convert_h_to_v(HRepCone(3, std::vector<IntVector>{})).rays().size() == 6);
  // A single ray in ℝ³ needs the orthogonal complement.
  const auto h = dd_convert_v_to_h(VRepCone(3, vecs({{1, 1, 0}})));
  for (const auto& x : {make_int_vector({2, 2, 0}), make_int_vector({1, 0, 0}), make_int_vector({-1, -1, 0})}) {
    const bool expect = x == make_int_vector({2, 2, 0});
    CHECK(contains(h, to_rational(x)).member == expect);
  }
  // The origin only.
  const auto origin = dd_convert_h_to_v(HRepCone(2, vecs({{1, 0}, {-1, 0}, {0, 1}, {0, -1}})));
  CHECK(origin.rays().empty());
  CHECK_THROWS_AS(dd_convert_h_to_v(HRepCone(17, std::vector<IntVector>{})), DimensionTooLarge);
}

TEST_CASE("property: double description soundness against Carathéodory") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t d = 2 + rng() % 4;
    const std::size_t m = 1 + rng() % 8;
    std::vector<IntVector> normals;
    for (std::size_t i = 0; i < m; ++i) {
      IntVector a = oracle::random_weight(rng, d, 3);
      if (!is_zero(a)) normals.push_back(a);
    }
    const HRepCone h(d, normals);
    const VRepCone v = dd_convert_h_to_v(h);
    for (const auto& r : v.rays())
      for (const auto& a : h.normals()) CHECK(dot(a, r) >= 0);
    // Nonnegative rational combinations of the rays satisfy every row.
    for (int s = 0; s < 10 && !v.rays().empty(); ++s) {
      RatVector x(d, Rational(0));
      for (const auto& r : v.rays()) {
        const Rational c(static_cast<long>(rng() % 7), static_cast<long>(1 + rng() % 5));
        for (std::size_t i = 0; i < d; ++i) x[i] += c * r[i];
      }
      CHECK(contains(h, x).member);
    }
    // Row membership agrees with the exact combination search on the rays.
    const int samples = v.rays().size() > 14 ? 3 : 15;
    for (int s = 0; s < samples; ++s) {
      const RatVector x = to_rational(oracle::random_weight(rng, d, 4));
      CHECK(contains(h, x).member == oracle::in_cone_caratheodory(v.rays(), x));
    }
    const HRepCone h2 = dd_convert_v_to_h(v);
    for (int s = 0; s < 25; ++s) {
      const RatVector x = to_rational(oracle::random_weight(rng, d, 4));
      CHECK(contains(h2, x).member == contains(h, x).member);
    }
  }
}

TEST_CASE("property: V to H agrees with Carathéodory on random ray sets") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t d = 2 + rng() % 3;
    const std::size_t m = 1 + rng() % 5;
    std::vector<IntVector> rays;
    for (std::size_t i = 0; i < m; ++i) {
      IntVector r = oracle::random_weight(rng, d, 3);
      if (!is_zero(r)) rays.push_back(r);
    }
    if (rays.empty()) continue;
    const VRepCone v(d, rays);
    const HRepCone h = dd_convert_v_to_h(v);
    for (int s = 0; s < 25; ++s) {
      const RatVector x = to_rational(oracle::random_weight(rng, d, 4));
      CHECK(contains(h, x).member == oracle::in_cone_caratheodory(v.rays(), x));
    }
  }
}

TEST_CASE("property: Hasse membership routes agree") {
  std::mt19937_64 rng(10);
  int points = 0;
  while (points < 1000) {
    const Carousel c(oracle::random_profile(rng, 6, {2, 3, 5}));
    const HasseLattice lattice(c);
    const HRepCone h = dd_convert_v_to_h(hasse_cone(c));
    for (int s = 0; s < 50; ++s, ++points) {
      const IntVector k = oracle::random_weight(rng, c.size(), 6);
      const RatVector x = to_rational(k);
      const auto a = contains(h, x);
      const auto b = contains_hasse(lattice, x);
      CHECK(a.member == b.member);
      bool nonneg = true;
      for (const auto& y : hasse_coordinates(c, Weight(k))) nonneg = nonneg && y >= 0;
      CHECK(nonneg == b.member);
    }
  }
}

TEST_CASE("property: cone chain on random profiles") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Carousel c(oracle::random_profile(rng, 7, {2, 3, 5, 7}));
    CHECK(cone_subset(min_cone(c), std_cone(c)).holds);
    CHECK(cone_subset(std_cone(c), hasse_cone(c)).holds);
    CHECK(cone_equal(min_cone(c), hasse_cone(c)) == c.profile().totally_split());
  }
}
