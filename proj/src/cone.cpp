#include "hmw/cone.hpp"

#include <algorithm>

#include "hmw/errors.hpp"
#include "hmw/linalg.hpp"

namespace hmw::cone {

namespace {

std::vector<IntVector> canonical_set(std::size_t dim, std::vector<IntVector> vs, const char* what) {
  for (auto& v : vs) {
    if (v.size() != dim) throw DimensionMismatch(std::string(what) + ": vector has wrong length");
    if (is_zero(v)) throw InvariantError(std::string(what) + ": zero vector");
    v = primitive(v);
  }
  std::sort(vs.begin(), vs.end(), [](const IntVector& a, const IntVector& b) { return lex_compare(a, b) < 0; });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

std::vector<IntVector> from_rational(std::size_t dim, const std::vector<RatVector>& vs, const char* what) {
  std::vector<IntVector> out;
  for (const auto& v : vs) {
    if (v.size() != dim) throw DimensionMismatch(std::string(what) + ": vector has wrong length");
    if (is_zero(v)) throw InvariantError(std::string(what) + ": zero vector");
    out.push_back(primitive(v));
  }
  return out;
}

}  // namespace

HRepCone::HRepCone(std::size_t dim, const std::vector<IntVector>& normals)
    : dim_(dim), normals_(canonical_set(dim, normals, "hrep")) {}
HRepCone::HRepCone(std::size_t dim, const std::vector<RatVector>& normals)
    : HRepCone(dim, from_rational(dim, normals, "hrep")) {}

VRepCone::VRepCone(std::size_t dim, const std::vector<IntVector>& rays)
    : dim_(dim), rays_(canonical_set(dim, rays, "vrep")) {}
VRepCone::VRepCone(std::size_t dim, const std::vector<RatVector>& rays)
    : VRepCone(dim, from_rational(dim, rays, "vrep")) {}

std::size_t dim_of(const AnyCone& c) {
  return std::visit([](const auto& x) { return x.dim(); }, c);
}

HRepCone min_cone(const Carousel& c) {
  const std::size_t d = c.size();
  std::vector<IntVector> rows;
  for (std::size_t tau = 0; tau < d; ++tau) {
    IntVector row(d, Integer(0));
    row[tau] += c.n(tau);
    row[c.sigma_inv(tau)] -= 1;
    rows.push_back(std::move(row));
  }
  return HRepCone(d, rows);
}

HRepCone std_cone(const Carousel& c) {
  const std::size_t d = c.size();
  std::vector<IntVector> rows;
  for (std::size_t tau = 0; tau < d; ++tau) {
    IntVector row(d, Integer(0));
    row[tau] = 1;
    rows.push_back(std::move(row));
  }
  return HRepCone(d, rows);
}

VRepCone hasse_cone(const Carousel& c) {
  std::vector<IntVector> rays;
  for (std::size_t tau = 0; tau < c.size(); ++tau) rays.push_back(hasse_weight(c, tau).coords());
  return VRepCone(c.size(), rays);
}

namespace {

struct DdRay {
  IntVector v;
  std::vector<bool> tight;  // per processed constraint: a·v == 0
};

IntVector combine(const Integer& s, const IntVector& x, const Integer& t, const IntVector& y) {
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = s * x[i] - t * y[i];
  return primitive(out);
}

bool adjacent(const DdRay& a, const DdRay& b, const std::vector<IntVector>& processed, std::size_t target) {
  std::vector<IntVector> common;
  for (std::size_t k = 0; k < processed.size(); ++k)
    if (a.tight[k] && b.tight[k]) common.push_back(processed[k]);
  if (common.size() < target) return false;
  if (target == 0) return true;
  return linalg::rank(linalg::IntMatrix::from_rows(common, processed.front().size())) == target;
}

// Row-reduced basis of span(vs) over ℚ, each row scaled primitive.
std::vector<IntVector> rref_basis(const std::vector<IntVector>& vs, std::size_t dim) {
  std::vector<RatVector> rows;
  for (const auto& v : vs) rows.push_back(to_rational(v));
  std::size_t r = 0;
  for (std::size_t c = 0; c < dim && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational lead = rows[r][c];
    for (auto& x : rows[r]) x /= lead;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j < dim; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  std::vector<IntVector> out;
  for (const auto& row : rows) out.push_back(primitive(row));
  return out;
}

// Orthogonal projection of v onto the complement of span(basis).
RatVector project_out(const IntVector& v, const std::vector<RatVector>& orthogonal_basis) {
  RatVector out = to_rational(v);
  for (const auto& q : orthogonal_basis) {
    Rational qq = 0, vq = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      qq += q[i] * q[i];
      vq += out[i] * q[i];
    }
    const Rational f = vq / qq;
    for (std::size_t i = 0; i < q.size(); ++i) out[i] -= f * q[i];
  }
  return out;
}

std::vector<RatVector> gram_schmidt(const std::vector<IntVector>& basis) {
  std::vector<RatVector> out;
  for (const auto& b : basis) out.push_back(project_out(b, out));
  return out;
}

// Generators of {x : a·x ≥ 0 ∀ a}: extreme rays projected orthogonally to
// the lineality space, plus ± a row-reduced lineality basis.
std::vector<IntVector> double_description(std::size_t d, const std::vector<IntVector>& constraints) {
  if (d > kMaxDdDimension)
    throw DimensionTooLarge("double description: dimension " + std::to_string(d) + " exceeds " +
                            std::to_string(kMaxDdDimension));
  std::vector<IntVector> lineality;
  for (std::size_t i = 0; i < d; ++i) {
    IntVector e(d, Integer(0));
    e[i] = 1;
    lineality.push_back(std::move(e));
  }
  std::vector<DdRay> rays;
  std::vector<IntVector> processed;

  for (const auto& a : constraints) {
    std::size_t pivot = lineality.size();
    for (std::size_t i = 0; i < lineality.size(); ++i)
      if (dot(a, lineality[i]) != 0) {
        pivot = i;
        break;
      }

    if (pivot < lineality.size()) {
      IntVector l0 = lineality[pivot];
      Integer s0 = dot(a, l0);
      if (s0 < 0) {
        for (auto& x : l0) x = -x;
        s0 = -s0;
      }
      lineality.erase(lineality.begin() + static_cast<std::ptrdiff_t>(pivot));
      for (auto& l : lineality) {
        const Integer t = dot(a, l);
        if (t != 0) l = combine(s0, l, t, l0);
      }
      for (auto& r : rays) {
        const Integer t = dot(a, r.v);
        if (t != 0) r.v = combine(s0, r.v, t, l0);
        r.tight.push_back(true);
      }
      DdRay fresh{l0, std::vector<bool>(processed.size(), true)};
      fresh.tight.push_back(false);
      rays.push_back(std::move(fresh));
    } else {
      std::vector<Integer> s(rays.size());
      for (std::size_t i = 0; i < rays.size(); ++i) s[i] = dot(a, rays[i].v);
      const std::size_t target = d - lineality.size() >= 2 ? d - lineality.size() - 2 : 0;
      std::vector<DdRay> next;
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (s[i] < 0) continue;
        DdRay kept = rays[i];
        kept.tight.push_back(s[i] == 0);
        next.push_back(std::move(kept));
      }
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (s[i] <= 0) continue;
        for (std::size_t j = 0; j < rays.size(); ++j) {
          if (s[j] >= 0) continue;
          if (!adjacent(rays[i], rays[j], processed, target)) continue;
          // s_i·r_j − s_j·r_i has zero slack on a.
          DdRay joined{combine(s[i], rays[j].v, s[j], rays[i].v), {}};
          joined.tight.resize(processed.size());
          for (std::size_t k = 0; k < processed.size(); ++k) joined.tight[k] = rays[i].tight[k] && rays[j].tight[k];
          joined.tight.push_back(true);
          next.push_back(std::move(joined));
        }
      }
      rays = std::move(next);
    }
    processed.push_back(a);
  }

  std::vector<IntVector> out;
  const std::vector<IntVector> basis = rref_basis(lineality, d);
  const std::vector<RatVector> ortho = gram_schmidt(basis);
  for (const auto& r : rays) {
    RatVector projected = project_out(r.v, ortho);
    if (is_zero(projected)) throw CheckFailure("double description: ray inside lineality space");
    out.push_back(primitive(projected));
  }
  for (const auto& l : basis) {
    out.push_back(l);
    IntVector neg = l;
    for (auto& x : neg) x = -x;
    out.push_back(std::move(neg));
  }
  return out;
}

}  // namespace

VRepCone dd_convert_h_to_v(const HRepCone& cone) {
  return VRepCone(cone.dim(), double_description(cone.dim(), cone.normals()));
}

HRepCone dd_convert_v_to_h(const VRepCone& cone) {
  // The polar {a : a·r ≥ 0 ∀ r} is generated by the normals we want.
  return HRepCone(cone.dim(), double_description(cone.dim(), cone.rays()));
}

HRepCone as_hrep(const AnyCone& c) {
  if (const auto* h = std::get_if<HRepCone>(&c)) return *h;
  return dd_convert_v_to_h(std::get<VRepCone>(c));
}

VRepCone as_vrep(const AnyCone& c) {
  if (const auto* v = std::get_if<VRepCone>(&c)) return *v;
  return dd_convert_h_to_v(std::get<HRepCone>(c));
}

std::string to_string(CertificateKind kind) {
  switch (kind) {
    case CertificateKind::Slacks:
      return "slacks";
    case CertificateKind::ViolatedRow:
      return "violated_row";
    case CertificateKind::HasseCoordinates:
      return "hasse_coordinates";
    case CertificateKind::NegativeHasseCoordinate:
      return "negative_hasse_coordinate";
  }
  return "unknown";
}

MembershipCertificate contains(const HRepCone& cone, const RatVector& x) {
  if (x.size() != cone.dim()) throw DimensionMismatch("contains: point has wrong dimension");
  RatVector slacks;
  slacks.reserve(cone.normals().size());
  for (std::size_t r = 0; r < cone.normals().size(); ++r) {
    Rational s = dot(cone.normals()[r], x);
    if (s < 0) return {false, CertificateKind::ViolatedRow, r, {s}};
    slacks.push_back(std::move(s));
  }
  return {true, CertificateKind::Slacks, std::nullopt, std::move(slacks)};
}

MembershipCertificate contains(const VRepCone& cone, const RatVector& x) {
  if (x.size() != cone.dim()) throw DimensionMismatch("contains: point has wrong dimension");
  return contains(dd_convert_v_to_h(cone), x);
}

MembershipCertificate contains(const AnyCone& cone, const RatVector& x) {
  return std::visit([&](const auto& c) { return contains(c, x); }, cone);
}

MembershipCertificate contains_hasse(const HasseLattice& lattice, const RatVector& x) {
  if (x.size() != lattice.dimension()) throw DimensionMismatch("contains: point has wrong dimension");
  // y = M⁻¹x; scale x to an integer weight first, y scales alike.
  Integer l = 1;
  for (const auto& q : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  IntVector scaled;
  for (const auto& q : x) scaled.push_back(Rational(q * l).get_num());
  RatVector y = lattice.coordinates(Weight(scaled));
  for (auto& v : y) v /= l;
  for (std::size_t tau = 0; tau < y.size(); ++tau)
    if (y[tau] < 0) return {false, CertificateKind::NegativeHasseCoordinate, tau, {y[tau]}};
  return {true, CertificateKind::HasseCoordinates, std::nullopt, std::move(y)};
}

SubsetCertificate cone_subset(const AnyCone& a, const AnyCone& b) {
  if (dim_of(a) != dim_of(b)) throw DimensionMismatch("cone_subset: dimension mismatch");
  SubsetCertificate cert;
  cert.rays_of_a = as_vrep(a);
  cert.rows_of_b = as_hrep(b);
  const auto& rays = cert.rays_of_a.rays();
  const auto& rows = cert.rows_of_b.normals();
  std::vector<std::vector<Integer>> table(rays.size(), std::vector<Integer>(rows.size()));
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) {
      table[i][j] = dot(rows[j], rays[i]);
      if (table[i][j] < 0) {
        cert.holds = false;
        cert.violation = {i, j};
        cert.violation_slack = table[i][j];
        return cert;
      }
    }
  cert.holds = true;
  cert.slacks = std::move(table);
  return cert;
}

bool cone_equal(const AnyCone& a, const AnyCone& b) { return cone_subset(a, b).holds && cone_subset(b, a).holds; }

SplitEqualityReport split_equality_report(const Carousel& c) {
  return {c.profile().totally_split(), cone_equal(min_cone(c), hasse_cone(c))};
}

}  // namespace hmw::cone
