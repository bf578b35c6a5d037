#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hmw/arith.hpp"
#include "hmw/poly_fp.hpp"

namespace hmw {

/// A prime above p, recorded by ramification index e and residue degree f.
struct PrimeLocus {
  int e = 1;
  int f = 1;

  auto operator<=>(const PrimeLocus&) const = default;
};

/// Factorization type of p in a totally real field of degree d = Σ e·f.
class SplittingProfile {
 public:
  static constexpr int kMaxDegree = 64;

  /// Validates: p prime, e, f ≥ 1, 2 ≤ d ≤ kMaxDegree. Throws InvariantError.
  SplittingProfile(std::uint64_t p, std::vector<PrimeLocus> loci);

  std::uint64_t p() const { return p_; }
  Integer p_integer() const;
  const std::vector<PrimeLocus>& loci() const { return loci_; }
  int degree() const { return degree_; }
  bool totally_split() const;

  bool operator==(const SplittingProfile&) const = default;

 private:
  std::uint64_t p_;
  std::vector<PrimeLocus> loci_;
  int degree_;
};

/// Monic integer polynomial, ascending coefficient order, together with p.
struct MinPolySpec {
  IntVector coefficients;
  std::uint64_t p;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  /// Throws InvariantError unless monic of degree ≥ min_degree (and ≤ 64), p prime.
  void validate(int min_degree) const;
};

/// Factorization of g mod p; seed drives the equal-degree splitting only.
ModPFactorization factor_mod_p(const MinPolySpec& g, std::uint64_t seed = 0);

/// Dedekind's criterion: is ℤ[x]/(g) maximal at p?
bool dedekind_p_maximal(const MinPolySpec& g, std::uint64_t seed = 0);

/// e = multiplicity and f = degree of each irreducible factor of g mod p.
/// Throws NotPMaximal when Dedekind's criterion fails.
SplittingProfile profile_from_minpoly(const MinPolySpec& g, std::uint64_t seed = 0);

/// Parses the profile document: {"p": int, "loci": [{"e": int, "f": int}, ...]}
/// or {"p": int, "minpoly": [c0, ..., 1]}. SchemaError / InvariantError / NotPMaximal.
SplittingProfile parse_profile(std::string_view document, std::uint64_t seed = 0);

/// Canonical {"p":..,"loci":[..]} text; parse_profile inverts it.
std::string profile_to_json(const SplittingProfile& profile);

}  // namespace hmw
