#include <doctest.h>

#include <string>

#include "hmw/cone.hpp"
#include "hmw/reduction.hpp"

using namespace hmw;

// Greedy returns Vanishing ⟹ k ∉ C^Hasse, exhaustively over [−4,4]^Σ.
TEST_CASE("property: greedy Vanishing implies weight outside the Hasse cone") {
  const std::vector<SplittingProfile> panel = {SplittingProfile(2, {{2, 1}}), SplittingProfile(2, {{1, 2}}),
                                               SplittingProfile(3, {{1, 1}, {1, 1}}), SplittingProfile(2, {{2, 2}})};
  for (const auto& prof : panel) {
    const HasseLattice lattice{Carousel(prof)};
    const std::size_t d = lattice.dimension();
    IntVector k(d, Integer(-4));
    for (;;) {
      const auto res = reduction::greedy_reduce(lattice, Weight(k));
      if (std::holds_alternative<reduction::Vanishing>(res.result)) {
        CAPTURE(profile_to_json(prof));
        std::string weight;
        for (const auto& x : k) weight += x.get_str() + " ";
        CAPTURE(weight);
        CHECK_FALSE(cone::contains_hasse(lattice, to_rational(k)).member);
      }
      std::size_t pos = d;
      while (pos-- > 0) {
        if (k[pos] < 4) {
          k[pos] += 1;
          break;
        }
        k[pos] = -4;
      }
      if (pos == static_cast<std::size_t>(-1)) break;
    }
  }
}
