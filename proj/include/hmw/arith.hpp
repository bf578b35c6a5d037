#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

namespace hmw {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);

RatVector to_rational(const IntVector& v);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

/// Positive rescaling of a nonzero vector to an integer vector with content 1.
IntVector primitive(const IntVector& v);
IntVector primitive(const RatVector& v);

/// Lexicographic order on equal-length integer vectors.
std::strong_ordering lex_compare(const IntVector& a, const IntVector& b);

/// gcd of all entries; zero for the zero vector.
Integer content(const IntVector& v);

Integer ceil(const Rational& q);
Integer floor(const Rational& q);

Integer ipow(const Integer& base, unsigned long exponent);

/// "num/den" with den > 0, always including the denominator.
std::string to_fraction_string(const Rational& q);

IntVector make_int_vector(std::initializer_list<long> values);

}  // namespace hmw
