#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "hmw/arith.hpp"
#include "hmw/splitting_profile.hpp"

namespace hmw {

/// τ_{β,i}: locus index, unramified component β ∈ [0, f), position i ∈ [1, e].
struct Embedding {
  std::size_t locus = 0;
  int beta = 0;
  int i = 1;

  auto operator<=>(const Embedding&) const = default;
};

/// "P<locus>:b<beta>:i<i>"
std::string to_string(const Embedding& tau);

/// The index set Σ with the shift σ and the multipliers n_τ.
///
/// Σ is ordered by locus (input order), then β, then i. σ steps i → i+1
/// inside res⁻¹(β) and sends τ_{β,e} to τ_{β+1 mod f, 1}. n_τ = p exactly
/// when i = 1. Most members also accept a position in the canonical order.
class Carousel {
 public:
  explicit Carousel(SplittingProfile profile);

  const SplittingProfile& profile() const { return profile_; }
  std::size_t size() const { return embeddings_.size(); }
  const std::vector<Embedding>& embeddings() const { return embeddings_; }

  /// Position of τ in Σ. Throws ForeignEmbedding.
  std::size_t index_of(const Embedding& tau) const;
  const Embedding& at(std::size_t index) const;

  std::size_t sigma(std::size_t index) const;
  std::size_t sigma_inv(std::size_t index) const;
  Embedding sigma(const Embedding& tau) const { return at(sigma(index_of(tau))); }
  Embedding sigma_inv(const Embedding& tau) const { return at(sigma_inv(index_of(tau))); }

  const Integer& n(std::size_t index) const;
  const Integer& n(const Embedding& tau) const { return n(index_of(tau)); }

  std::vector<std::size_t> orbit(std::size_t index) const;
  std::vector<Embedding> orbit(const Embedding& tau) const;

  std::size_t locus_of(std::size_t index) const { return at(index).locus; }
  /// Positions of Σ_𝔭 for locus 𝔭, in canonical order.
  std::vector<std::size_t> locus_members(std::size_t locus) const;

  const std::vector<std::size_t>& sigma_table() const { return sigma_; }
  const std::vector<std::size_t>& sigma_inv_table() const { return sigma_inv_; }
  const std::vector<Integer>& n_table() const { return n_; }

 private:
  void check_index(std::size_t index) const;

  SplittingProfile profile_;
  std::vector<Embedding> embeddings_;
  std::vector<std::size_t> locus_offset_;
  std::vector<std::size_t> sigma_;
  std::vector<std::size_t> sigma_inv_;
  std::vector<Integer> n_;
};

inline Carousel build_carousel(SplittingProfile profile) { return Carousel(std::move(profile)); }

}  // namespace hmw
