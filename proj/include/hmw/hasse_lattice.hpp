#pragma once

#include <cstddef>
#include <vector>

#include "hmw/arith.hpp"
#include "hmw/carousel.hpp"
#include "hmw/linalg.hpp"

namespace hmw {

/// An integer weight k = Σ k_τ e_τ, indexed by Σ in canonical order.
class Weight {
 public:
  Weight() = default;
  explicit Weight(IntVector coords) : coords_(std::move(coords)) {}
  static Weight zero(std::size_t d) { return Weight(IntVector(d, Integer(0))); }

  std::size_t size() const { return coords_.size(); }
  const IntVector& coords() const { return coords_; }
  const Integer& operator[](std::size_t tau) const { return coords_[tau]; }

  Weight& operator+=(const Weight& other);
  Weight& operator-=(const Weight& other);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  IntVector coords_;
};

/// h_τ = n_τ e_{σ⁻¹τ} − e_τ (entries summed, so a fixed point of σ gives (p−1)e_τ).
Weight hasse_weight(const Carousel& c, std::size_t tau);
Weight hasse_weight(const Carousel& c, const Embedding& tau);

/// Column τ is h_τ.
linalg::IntMatrix hasse_matrix(const Carousel& c);

/// ∏ over loci of (p^f − 1).
Integer expected_hasse_determinant(const SplittingProfile& profile);

/// The Hasse matrix of a carousel together with its exact inverse, for
/// repeated coordinate solves.
class HasseLattice {
 public:
  explicit HasseLattice(Carousel carousel);

  const Carousel& carousel() const { return carousel_; }
  std::size_t dimension() const { return carousel_.size(); }
  const linalg::IntMatrix& matrix() const { return matrix_; }
  const Integer& determinant() const { return det_; }
  const Weight& h(std::size_t tau) const { return columns_.at(tau); }

  /// The unique y with M·y = k.
  RatVector coordinates(const Weight& k) const;
  /// Σ a_τ h_τ.
  Weight combination(const IntVector& a) const;

 private:
  Carousel carousel_;
  linalg::IntMatrix matrix_;
  linalg::IntMatrix adjugate_;
  Integer det_;
  std::vector<Weight> columns_;
};

/// Exact solve of M·y = k by fraction-free elimination.
RatVector hasse_coordinates(const Carousel& c, const Weight& k);

}  // namespace hmw
