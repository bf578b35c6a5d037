#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hmw/arith.hpp"
#include "hmw/carousel.hpp"
#include "hmw/hasse_lattice.hpp"

namespace hmw::cone {

/// {x : a·x ≥ 0 for every normal a}. Normals are primitive, sorted, unique.
class HRepCone {
 public:
  HRepCone() = default;
  HRepCone(std::size_t dim, const std::vector<IntVector>& normals);
  HRepCone(std::size_t dim, const std::vector<RatVector>& normals);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& normals() const { return normals_; }
  bool operator==(const HRepCone&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> normals_;
};

/// Nonnegative span of the rays. Rays are primitive, sorted, unique.
class VRepCone {
 public:
  VRepCone() = default;
  VRepCone(std::size_t dim, const std::vector<IntVector>& rays);
  VRepCone(std::size_t dim, const std::vector<RatVector>& rays);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  bool operator==(const VRepCone&) const = default;

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
};

using AnyCone = std::variant<HRepCone, VRepCone>;

std::size_t dim_of(const AnyCone& c);

/// Rows n_τ e_τ − e_{σ⁻¹τ}.
HRepCone min_cone(const Carousel& c);
/// Rows e_τ.
HRepCone std_cone(const Carousel& c);
/// Rays h_τ.
VRepCone hasse_cone(const Carousel& c);

/// Largest dimension accepted by the double-description conversions.
inline constexpr std::size_t kMaxDdDimension = 16;

/// Double description: extreme rays plus ± a basis of the lineality space.
VRepCone dd_convert_h_to_v(const HRepCone& cone);
/// Facet normals, plus ± normals of the orthogonal complement for
/// lower-dimensional cones.
HRepCone dd_convert_v_to_h(const VRepCone& cone);

HRepCone as_hrep(const AnyCone& c);
VRepCone as_vrep(const AnyCone& c);

enum class CertificateKind { Slacks, ViolatedRow, HasseCoordinates, NegativeHasseCoordinate };

std::string to_string(CertificateKind kind);

/// member = true: `values` holds every slack (or every Hasse coordinate).
/// member = false: `witness` is the violated row (or τ) and `values` its
/// negative slack (or coordinate) alone.
struct MembershipCertificate {
  bool member = false;
  CertificateKind kind = CertificateKind::Slacks;
  std::optional<std::size_t> witness;
  RatVector values;
};

MembershipCertificate contains(const HRepCone& cone, const RatVector& x);
/// Decided through the H-representation; the slacks refer to its rows.
MembershipCertificate contains(const VRepCone& cone, const RatVector& x);
MembershipCertificate contains(const AnyCone& cone, const RatVector& x);
/// C^Hasse membership by the sign of the Hasse coordinates.
MembershipCertificate contains_hasse(const HasseLattice& lattice, const RatVector& x);

struct SubsetCertificate {
  bool holds = false;
  VRepCone rays_of_a;
  HRepCone rows_of_b;
  /// slacks[ray][row]; filled when holds.
  std::vector<std::vector<Integer>> slacks;
  /// (ray, row) with negative slack; set when !holds.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
  Integer violation_slack;
};

SubsetCertificate cone_subset(const AnyCone& a, const AnyCone& b);
bool cone_equal(const AnyCone& a, const AnyCone& b);

struct SplitEqualityReport {
  bool is_totally_split;
  bool cones_equal;
};

SplitEqualityReport split_equality_report(const Carousel& c);

}  // namespace hmw::cone
