#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hmw/arith.hpp"

namespace hmw::linalg {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector col(std::size_t c) const;

  IntMatrix transposed() const;
  IntVector operator*(const IntVector& v) const;
  IntMatrix operator*(const IntMatrix& other) const;

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Determinant by fraction-free (Bareiss) elimination. Square input only.
Integer bareiss_determinant(IntMatrix a);

/// Exact solution of a·x = b for square nonsingular a, via Bareiss
/// elimination and rational back substitution. nullopt when singular.
std::optional<RatVector> solve(const IntMatrix& a, const IntVector& b);

/// Rank over the rationals.
std::size_t rank(IntMatrix a);

/// Integer adjugate: adj(a)·a = a·adj(a) = det(a)·I.
IntMatrix adjugate(const IntMatrix& a);

/// u·a·v = d with u, v unimodular and d diagonal, d₁ | d₂ | ... (entries ≥ 0).
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

}  // namespace hmw::linalg
