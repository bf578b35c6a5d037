#include "hmw/hasse_lattice.hpp"

#include "hmw/errors.hpp"

namespace hmw {

Weight& Weight::operator+=(const Weight& other) {
  if (other.size() != size()) throw DimensionMismatch("weight: length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& other) {
  if (other.size() != size()) throw DimensionMismatch("weight: length mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Weight hasse_weight(const Carousel& c, std::size_t tau) {
  IntVector v(c.size(), Integer(0));
  v[c.sigma_inv(tau)] += c.n(tau);
  v[tau] -= 1;
  return Weight(std::move(v));
}

Weight hasse_weight(const Carousel& c, const Embedding& tau) { return hasse_weight(c, c.index_of(tau)); }

linalg::IntMatrix hasse_matrix(const Carousel& c) {
  const std::size_t d = c.size();
  linalg::IntMatrix m(d, d);
  for (std::size_t tau = 0; tau < d; ++tau) {
    const Weight h = hasse_weight(c, tau);
    for (std::size_t r = 0; r < d; ++r) m(r, tau) = h[r];
  }
  return m;
}

Integer expected_hasse_determinant(const SplittingProfile& profile) {
  Integer prod = 1;
  const Integer p = profile.p_integer();
  for (const auto& locus : profile.loci()) prod *= ipow(p, static_cast<unsigned long>(locus.f)) - 1;
  return prod;
}

HasseLattice::HasseLattice(Carousel carousel)
    : carousel_(std::move(carousel)), matrix_(hasse_matrix(carousel_)) {
  det_ = linalg::bareiss_determinant(matrix_);
  if (det_ == 0) throw CheckFailure("hasse matrix is singular");
  adjugate_ = linalg::adjugate(matrix_);
  for (std::size_t tau = 0; tau < carousel_.size(); ++tau) columns_.push_back(hasse_weight(carousel_, tau));
}

RatVector HasseLattice::coordinates(const Weight& k) const {
  if (k.size() != dimension()) throw DimensionMismatch("hasse coordinates: weight has wrong length");
  const IntVector num = adjugate_ * k.coords();
  RatVector y(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) {
    y[i] = Rational(num[i], det_);
    y[i].canonicalize();
  }
  return y;
}

Weight HasseLattice::combination(const IntVector& a) const {
  if (a.size() != dimension()) throw DimensionMismatch("hasse combination: wrong length");
  return Weight(matrix_ * a);
}

RatVector hasse_coordinates(const Carousel& c, const Weight& k) {
  if (k.size() != c.size()) throw DimensionMismatch("hasse coordinates: weight has wrong length");
  auto y = linalg::solve(hasse_matrix(c), k.coords());
  if (!y) throw CheckFailure("hasse matrix is singular");
  return *y;
}

}  // namespace hmw
