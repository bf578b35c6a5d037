#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "hmw/arith.hpp"
#include "hmw/hasse_lattice.hpp"

namespace hmw::reduction {

/// k = w + Σ a_τ h_τ with w in the minimal cone and a ≥ 0.
class Decomposition {
 public:
  /// Verifies every invariant; throws CheckFailure.
  Decomposition(const HasseLattice& lattice, const Weight& k, Weight w, IntVector a);

  const Weight& w() const { return w_; }
  const IntVector& a() const { return a_; }
  friend bool operator==(const Decomposition&, const Decomposition&) = default;

 private:
  Weight w_;
  IntVector a_;
};

/// Canonical order of decompositions: lexicographic in a.
bool operator<(const Decomposition& x, const Decomposition& y);

struct InMinCone {
  Decomposition decomposition;
};

/// Some Hasse coordinate of `at` (reached after `a` steps) is negative.
struct Vanishing {
  std::size_t tau;
  Rational y_tau;
  Weight at;
  IntVector a;
};

struct BudgetExceeded {
  std::size_t budget;
  Weight at;
};

struct ReductionOutcome {
  std::variant<InMinCone, Vanishing, BudgetExceeded> result;
  /// τ used at each step, in order.
  std::vector<std::size_t> steps;
};

/// {τ : n_τ k_τ < k_{σ⁻¹τ}}, in canonical order.
std::vector<std::size_t> reducible_directions(const Carousel& c, const Weight& k);
bool in_min_cone(const Carousel& c, const Weight& k);

/// k − h_τ. Throws NotReducible unless τ is a reducible direction of k.
Weight reduce_step(const Carousel& c, const Weight& k, std::size_t tau);

/// Repeatedly subtracts h_τ for the earliest reducible τ. Checks the Hasse
/// coordinates before every step and stops with Vanishing on a negative one.
ReductionOutcome greedy_reduce(const HasseLattice& lattice, const Weight& k);

/// Every (w, a) with a ∈ ℤ≥0^Σ and w = k − Σ a_τ h_τ in the minimal cone,
/// sorted by a.
std::vector<Decomposition> enumerate_min_decompositions(const HasseLattice& lattice, const Weight& k);

/// Members of the enumeration whose a is maximal for the componentwise order.
std::vector<Decomposition> pareto_maximal_decompositions(const HasseLattice& lattice, const Weight& k);

}  // namespace hmw::reduction
