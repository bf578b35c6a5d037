#include <doctest.h>

#include <random>

#include "hmw/errors.hpp"
#include "hmw/poly_fp.hpp"
#include "hmw/primes.hpp"
#include "hmw/splitting_profile.hpp"

using namespace hmw;

namespace {

MinPolySpec mp(std::initializer_list<long> c, std::uint64_t p) { return {make_int_vector(c), p}; }

}  // namespace

TEST_CASE("primality of 64-bit inputs") {
  CHECK(is_prime_u64(2));
  CHECK(is_prime_u64(97));
  CHECK(is_prime_u64(18446744073709551557ULL));
  CHECK_FALSE(is_prime_u64(1));
  CHECK_FALSE(is_prime_u64(91));
  CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime_u64(18446744073709551615ULL));
}

TEST_CASE("polynomial arithmetic over F_p") {
  const PolyFp a(5, {1, 2, 3});
  const PolyFp b(5, {4, 1});
  const auto [q, r] = PolyFp::divmod(a, b);
  CHECK(q * b + r == a);
  CHECK(r.degree() < b.degree());
  CHECK(PolyFp(5, {0, 0, 0}).is_zero());
  CHECK(PolyFp(7, {1, 0, 0}).degree() == 0);
  CHECK(gcd(PolyFp(5, {4, 0, 1}), PolyFp(5, {2, 3, 1})) == PolyFp(5, {1, 1}));
  CHECK(gcd(PolyFp(5, {4, 0, 1}), PolyFp(5, {3, 1})).is_one());
}

TEST_CASE("factor_mod_p examples") {
  SUBCASE("x^2+1 at 5 splits into distinct linear factors") {
    const auto fac = factor_mod_p(mp({1, 0, 1}, 5));
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].factor == PolyFp(5, {2, 1}));
    CHECK(fac.factors[1].factor == PolyFp(5, {3, 1}));
    CHECK(fac.factors[0].multiplicity == 1);
    CHECK(fac.factors[1].multiplicity == 1);
  }
  SUBCASE("x^2-x-1 at 5 is a square") {
    const auto fac = factor_mod_p(mp({-1, -1, 1}, 5));
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].factor == PolyFp(5, {2, 1}));
    CHECK(fac.factors[0].multiplicity == 2);
  }
  SUBCASE("x^2+x+1 at 2 is irreducible") {
    const auto fac = factor_mod_p(mp({1, 1, 1}, 2));
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].factor == PolyFp(2, {1, 1, 1}));
    CHECK(fac.factors[0].multiplicity == 1);
  }
}

TEST_CASE("factorization does not depend on the seed") {
  const auto g = mp({3, 0, 5, 1, 0, 2, 1, 7, 1}, 13);
  const auto ref = factor_mod_p(g, 0);
  for (std::uint64_t seed = 1; seed < 20; ++seed) {
    const auto fac = factor_mod_p(g, seed);
    REQUIRE(fac.factors.size() == ref.factors.size());
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
      CHECK(fac.factors[i].factor == ref.factors[i].factor);
      CHECK(fac.factors[i].multiplicity == ref.factors[i].multiplicity);
    }
  }
}

TEST_CASE("property: reconstruction, degree accounting, irreducibility, canonical order") {
  std::mt19937_64 rng(99);
  const std::uint64_t primes[] = {2, 3, 5, 7, 31, 97, 1000000007ULL};
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t p = primes[rng() % std::size(primes)];
    const int deg = 1 + static_cast<int>(rng() % 12);
    std::vector<std::uint64_t> c(static_cast<std::size_t>(deg) + 1);
    for (auto& x : c) x = rng() % p;
    c.back() = 1;
    const PolyFp f(p, c);
    const auto fac = factor_monic(f, rng());
    CHECK(fac.product() == f);
    int total = 0;
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
      const auto& fp = fac.factors[i];
      total += fp.multiplicity * fp.factor.degree();
      CHECK(is_irreducible(fp.factor));
      CHECK(fp.factor.lead() == 1);
      if (i > 0) CHECK(canonical_less(fac.factors[i - 1].factor, fp.factor));
    }
    CHECK(total == deg);
  }
}

TEST_CASE("large prime factorization") {
  const std::uint64_t p = 18446744073709551557ULL;
  const PolyFp x = PolyFp::x(p);
  const PolyFp f = (x + PolyFp::constant(p, 3)) * (x + PolyFp::constant(p, 3)) * (x * x + PolyFp::constant(p, 1));
  const auto fac = factor_monic(f, 5);
  CHECK(fac.product() == f);
}

TEST_CASE("dedekind criterion") {
  CHECK(dedekind_p_maximal(mp({-5, 0, 1}, 5)));
  CHECK(dedekind_p_maximal(mp({-1, -1, 1}, 5)));
  CHECK_FALSE(dedekind_p_maximal(mp({-8, -2, -1, 1}, 2)));
  // ℤ[√20] has index 2 in the maximal order.
  CHECK_FALSE(dedekind_p_maximal(mp({-20, 0, 1}, 2)));
  CHECK(dedekind_p_maximal(mp({-20, 0, 1}, 5)));
  CHECK(dedekind_p_maximal(mp({-20, 0, 1}, 3)));
}

TEST_CASE("profile_from_minpoly") {
  CHECK(profile_from_minpoly(mp({1, 0, 1}, 5)) == SplittingProfile(5, {{1, 1}, {1, 1}}));
  CHECK(profile_from_minpoly(mp({-1, -1, 1}, 5)) == SplittingProfile(5, {{2, 1}}));
  CHECK(profile_from_minpoly(mp({1, 1, 1}, 2)) == SplittingProfile(2, {{1, 2}}));
  CHECK_THROWS_AS(profile_from_minpoly(mp({-8, -2, -1, 1}, 2)), NotPMaximal);
  CHECK_THROWS_AS(profile_from_minpoly(mp({1, 2}, 5)), InvariantError);   // not monic
  CHECK_THROWS_AS(profile_from_minpoly(mp({1, 0, 1}, 4)), InvariantError);  // p not prime
}

TEST_CASE("profile validation") {
  CHECK_THROWS_AS(SplittingProfile(4, {{1, 2}}), InvariantError);
  CHECK_THROWS_AS(SplittingProfile(2, {{1, 1}}), InvariantError);  // d = 1
  CHECK_THROWS_AS(SplittingProfile(2, {{0, 2}}), InvariantError);
  CHECK_THROWS_AS(SplittingProfile(2, {{1, 65}}), InvariantError);
  CHECK(SplittingProfile(2, {{1, 64}}).degree() == 64);
  CHECK(SplittingProfile(3, {{1, 1}, {1, 1}}).totally_split());
  CHECK_FALSE(SplittingProfile(3, {{2, 1}}).totally_split());
}

TEST_CASE("profile documents") {
  const auto p = parse_profile(R"({"p":2,"loci":[{"e":2,"f":1}]})");
  CHECK(p == SplittingProfile(2, {{2, 1}}));
  CHECK(parse_profile(profile_to_json(p)) == p);
  CHECK(parse_profile(R"({"p":5,"minpoly":[1,0,1]})") == SplittingProfile(5, {{1, 1}, {1, 1}}));
  CHECK_THROWS_AS(parse_profile("not json"), SchemaError);
  CHECK_THROWS_AS(parse_profile(R"({"p":2})"), SchemaError);
  CHECK_THROWS_AS(parse_profile(R"({"p":2,"loci":[{"e":1}]})"), SchemaError);
  CHECK_THROWS_AS(parse_profile(R"({"p":2,"loci":[{"e":1,"f":2}],"extra":1})"), SchemaError);
  CHECK_THROWS_AS(parse_profile(R"({"p":"2","loci":[{"e":1,"f":2}]})"), SchemaError);
  CHECK_THROWS_AS(parse_profile(R"({"p":6,"loci":[{"e":1,"f":2}]})"), InvariantError);
  CHECK_THROWS_AS(parse_profile(R"({"p":2,"minpoly":[-8,-2,-1,1]})"), NotPMaximal);
}
