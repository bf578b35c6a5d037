#include "hmw/reduction.hpp"

#include <algorithm>

#include "hmw/errors.hpp"

namespace hmw::reduction {

Decomposition::Decomposition(const HasseLattice& lattice, const Weight& k, Weight w, IntVector a)
    : w_(std::move(w)), a_(std::move(a)) {
  const Carousel& c = lattice.carousel();
  if (w_.size() != c.size() || a_.size() != c.size() || k.size() != c.size())
    throw CheckFailure("decomposition: wrong length");
  for (const auto& x : a_)
    if (x < 0) throw CheckFailure("decomposition: negative exponent");
  if (!in_min_cone(c, w_)) throw CheckFailure("decomposition: w is not in the minimal cone");
  if (!(w_ + lattice.combination(a_) == k)) throw CheckFailure("decomposition: k != w + M·a");
}

bool operator<(const Decomposition& x, const Decomposition& y) { return lex_compare(x.a(), y.a()) < 0; }

std::vector<std::size_t> reducible_directions(const Carousel& c, const Weight& k) {
  if (k.size() != c.size()) throw DimensionMismatch("weight has wrong length");
  std::vector<std::size_t> out;
  for (std::size_t tau = 0; tau < c.size(); ++tau)
    if (c.n(tau) * k[tau] < k[c.sigma_inv(tau)]) out.push_back(tau);
  return out;
}

bool in_min_cone(const Carousel& c, const Weight& k) { return reducible_directions(c, k).empty(); }

Weight reduce_step(const Carousel& c, const Weight& k, std::size_t tau) {
  if (k.size() != c.size()) throw DimensionMismatch("weight has wrong length");
  if (!(c.n(tau) * k[tau] < k[c.sigma_inv(tau)]))
    throw NotReducible("tau " + to_string(c.at(tau)) + " is not a reducible direction");
  return k - hasse_weight(c, tau);
}

ReductionOutcome greedy_reduce(const HasseLattice& lattice, const Weight& k) {
  const Carousel& c = lattice.carousel();
  const std::size_t d = c.size();
  if (k.size() != d) throw DimensionMismatch("weight has wrong length");

  std::size_t budget = d;
  for (const auto& y : lattice.coordinates(k))
    if (y > 0) budget += ceil(y).get_ui();

  ReductionOutcome out{BudgetExceeded{budget, k}, {}};
  Weight current = k;
  IntVector a(d, Integer(0));
  for (;;) {
    const RatVector y = lattice.coordinates(current);
    for (std::size_t tau = 0; tau < d; ++tau)
      if (y[tau] < 0) {
        out.result = Vanishing{tau, y[tau], current, a};
        return out;
      }
    const auto dirs = reducible_directions(c, current);
    if (dirs.empty()) {
      out.result = InMinCone{Decomposition(lattice, k, current, a)};
      return out;
    }
    if (out.steps.size() == budget) {
      out.result = BudgetExceeded{budget, current};
      return out;
    }
    const std::size_t tau = dirs.front();
    current = reduce_step(c, current, tau);
    a[tau] += 1;
    out.steps.push_back(tau);
  }
}

std::vector<Decomposition> enumerate_min_decompositions(const HasseLattice& lattice, const Weight& k) {
  const Carousel& c = lattice.carousel();
  const std::size_t d = c.size();
  const RatVector y = lattice.coordinates(k);
  // y(w) = y(k) − a ≥ 0 because w ∈ C^min ⊆ C^Hasse, so 0 ≤ a_τ ≤ ⌊y_τ⌋.
  IntVector bound(d);
  for (std::size_t tau = 0; tau < d; ++tau) {
    if (y[tau] < 0) return {};
    bound[tau] = floor(y[tau]);
  }

  std::vector<Decomposition> out;
  IntVector a(d, Integer(0));
  for (;;) {
    Weight w = k - lattice.combination(a);
    if (in_min_cone(c, w)) out.emplace_back(lattice, k, std::move(w), a);
    std::size_t pos = d;
    while (pos-- > 0) {
      if (a[pos] < bound[pos]) {
        a[pos] += 1;
        break;
      }
      a[pos] = 0;
    }
    if (pos == static_cast<std::size_t>(-1)) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Decomposition> pareto_maximal_decompositions(const HasseLattice& lattice, const Weight& k) {
  const auto all = enumerate_min_decompositions(lattice, k);
  auto dominated_by = [](const IntVector& x, const IntVector& y) {
    bool strict = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] > y[i]) return false;
      if (x[i] < y[i]) strict = true;
    }
    return strict;
  };
  std::vector<Decomposition> out;
  for (const auto& cand : all) {
    bool maximal = true;
    for (const auto& other : all)
      if (dominated_by(cand.a(), other.a())) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(cand);
  }
  return out;
}

}  // namespace hmw::reduction
