#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hmw/arith.hpp"
#include "hmw/carousel.hpp"
#include "hmw/hasse_lattice.hpp"
#include "hmw/linalg.hpp"

namespace hmw::strata {

/// A subset T ⊆ Σ, bit t set when the t-th embedding is in T.
class StratumLabel {
 public:
  StratumLabel(std::size_t d, std::uint64_t mask);
  static StratumLabel empty(std::size_t d) { return {d, 0}; }
  static StratumLabel full(std::size_t d);
  /// "10" = {τ₁} for d = 2; the first character is the first embedding.
  static StratumLabel parse(const std::string& bits);

  std::size_t ambient() const { return d_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(std::size_t tau) const { return (mask_ >> tau) & 1U; }
  std::size_t size() const;
  bool is_subset_of(const StratumLabel& other) const;
  std::string to_bitstring() const;

  bool operator==(const StratumLabel&) const = default;

 private:
  std::size_t d_;
  std::uint64_t mask_;
};

/// d − |T|.
int stratum_dimension(int d, const StratumLabel& t);

/// Every T' ⊇ T, in increasing mask order.
std::vector<StratumLabel> closure_set(const StratumLabel& t);

enum class Locus { Open, Closed };

struct RelationLattice {
  std::vector<IntVector> rows;
  /// rows[k] is the relation attached to embedding taus[k].
  std::vector<std::size_t> taus;
};

/// Row for τ ∈ T: e_τ + n_τ e_{σ⁻¹τ}; for τ ∉ T (open locus only): e_τ − n_τ e_{σ⁻¹τ}.
RelationLattice picard_relations(const Carousel& c, const StratumLabel& t, Locus locus);

struct PicardSummary {
  std::vector<Integer> invariant_factors;
  /// Order of the class of e_τ in ℤ^Σ / relations; 0 = infinite.
  std::vector<Integer> torsion_order;
  /// Positions whose order was checked against p^{2f} − 1.
  std::vector<std::size_t> checked;
  bool bound_holds = true;

  /// Order of the quotient group; 0 when infinite.
  Integer group_order() const;
};

/// Quotient of ℤ^Σ by the open-stratum (W_T) relations; every τ is checked.
PicardSummary torsion_summary(const Carousel& c, const StratumLabel& t);
/// Quotient by the relations of τ ∈ T only (Z_T); checked only on loci
/// with Σ_𝔭 ⊆ T.
PicardSummary torsion_summary_closed(const Carousel& c, const StratumLabel& t);

/// Order of the class of each unit vector in ℤ^n / rowspan(a), from the Smith form.
std::vector<Integer> unit_vector_orders(const linalg::IntMatrix& relations);

/// p^r·k_{τ0} − (p^r / n_{τ0})·k_{σ⁻¹τ0}. SingletonOrbit when σ fixes τ0,
/// MultiplierNotDividing when n_{τ0} ∤ p^r.
Integer fibre_degree(const Carousel& c, const Weight& k, std::size_t tau0, unsigned r);

/// fibre_degree < 0.
bool theorem_bridge(const Carousel& c, const Weight& k, std::size_t tau0, unsigned r);

}  // namespace hmw::strata
