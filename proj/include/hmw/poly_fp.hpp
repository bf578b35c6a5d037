#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hmw/arith.hpp"

namespace hmw {

/// Dense univariate polynomial over F_p, coefficients in ascending degree
/// order with no trailing zeros. p must be prime for division-based ops.
class PolyFp {
 public:
  explicit PolyFp(std::uint64_t p);
  PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static PolyFp constant(std::uint64_t p, std::uint64_t c);
  static PolyFp x(std::uint64_t p);
  /// Reduction of an integer polynomial (ascending coefficients) mod p.
  static PolyFp reduce(std::uint64_t p, const IntVector& coeffs);

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }
  std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }

  PolyFp monic() const;
  PolyFp derivative() const;
  std::uint64_t eval(std::uint64_t at) const;

  friend PolyFp operator+(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator-(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator*(const PolyFp& a, const PolyFp& b);
  friend PolyFp operator/(const PolyFp& a, const PolyFp& b) { return divmod(a, b).first; }
  friend PolyFp operator%(const PolyFp& a, const PolyFp& b) { return divmod(a, b).second; }
  friend bool operator==(const PolyFp&, const PolyFp&) = default;

  static std::pair<PolyFp, PolyFp> divmod(const PolyFp& a, const PolyFp& b);

  /// Canonical order: degree first, then coefficients from the constant term up.
  friend bool canonical_less(const PolyFp& a, const PolyFp& b);

  std::string to_string() const;

 private:
  void trim();

  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

/// Monic gcd; zero only when both inputs are zero.
PolyFp gcd(PolyFp a, PolyFp b);
PolyFp powmod(const PolyFp& base, std::uint64_t exponent, const PolyFp& modulus);
PolyFp powmod(const PolyFp& base, const Integer& exponent, const PolyFp& modulus);

/// Rabin's irreducibility test.
bool is_irreducible(const PolyFp& f);

struct FactorPower {
  PolyFp factor;
  unsigned multiplicity;
};

struct ModPFactorization {
  std::uint64_t p;
  std::vector<FactorPower> factors;

  PolyFp product() const;
};

/// Full factorization of a monic polynomial over F_p: squarefree split,
/// distinct-degree split, then Cantor-Zassenhaus driven by a seeded stream.
/// The result is sorted canonically and does not depend on the seed.
ModPFactorization factor_monic(const PolyFp& f, std::uint64_t seed);

}  // namespace hmw
