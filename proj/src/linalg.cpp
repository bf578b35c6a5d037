#include "hmw/linalg.hpp"

#include <utility>

#include "hmw/errors.hpp"

namespace hmw::linalg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("from_rows: ragged row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  IntVector out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
  return out;
}

IntVector IntMatrix::col(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector product: length mismatch");
  IntVector out(rows_, Integer(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw DimensionMismatch("matrix product: shape mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& x = (*this)(r, k);
      if (x == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += x * other(k, c);
    }
  return out;
}

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

void exact_div(Integer& x, const Integer& d) {
  Integer r;
  mpz_tdiv_qr(x.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
  if (r != 0) throw CheckFailure("fraction-free elimination: inexact division");
}

// Fraction-free forward elimination on the first `pivot_cols` columns, with
// column skipping. Returns the pivot columns in row order and the row-swap
// parity.
struct Echelon {
  std::vector<std::size_t> pivots;
  bool odd_swaps = false;
};

Echelon bareiss_echelon(IntMatrix& a, std::size_t pivot_cols) {
  Echelon out;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      swap_rows(a, p, r);
      out.odd_swaps = !out.odd_swaps;
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        a(i, j) = a(i, j) * a(r, c) - a(i, c) * a(r, j);
        exact_div(a(i, j), prev);
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

}  // namespace

Integer bareiss_determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Echelon e = bareiss_echelon(a, n);
  if (e.pivots.size() < n) return 0;
  Integer det = a(n - 1, n - 1);
  return e.odd_swaps ? Integer(-det) : det;
}

std::optional<RatVector> solve(const IntMatrix& a, const IntVector& b) {
  if (a.rows() != a.cols()) throw DimensionMismatch("solve: matrix not square");
  if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side length mismatch");
  const std::size_t n = a.rows();
  IntMatrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  Echelon e = bareiss_echelon(aug, n);
  if (e.pivots.size() < n) return std::nullopt;
  RatVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s(aug(i, n));
    for (std::size_t j = i + 1; j < n; ++j) s -= Rational(aug(i, j)) * x[j];
    x[i] = s / Rational(aug(i, i));
  }
  return x;
}

std::size_t rank(IntMatrix a) { return bareiss_echelon(a, a.cols()).pivots.size(); }

IntMatrix adjugate(const IntMatrix& a) {
  const std::size_t n = a.rows();
  const Integer det = bareiss_determinant(a);
  if (det == 0) throw InvariantError("adjugate: singular matrix");
  IntMatrix adj(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    IntVector unit(n, Integer(0));
    unit[c] = 1;
    auto x = solve(a, unit);
    for (std::size_t r = 0; r < n; ++r) {
      Rational t = (*x)[r] * Rational(det);
      if (t.get_den() != 1) throw CheckFailure("adjugate: non-integral entry");
      adj(r, c) = t.get_num();
    }
  }
  return adj;
}

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
  return out;
}

namespace {

// dst_row += k * src_row, mirrored into the left transform.
void add_row_multiple(IntMatrix& a, IntMatrix& u, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) += k * a(src, c);
  for (std::size_t c = 0; c < u.cols(); ++c) u(dst, c) += k * u(src, c);
}

void add_col_multiple(IntMatrix& a, IntMatrix& v, std::size_t dst, std::size_t src, const Integer& k) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) += k * a(r, src);
  for (std::size_t r = 0; r < v.rows(); ++r) v(r, dst) += k * v(r, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  const std::size_t m = input.rows();
  const std::size_t n = input.cols();
  IntMatrix a = input;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Pivot: smallest nonzero |entry| of the trailing block.
      std::size_t pr = m, pc = n;
      for (std::size_t r = t; r < m; ++r)
        for (std::size_t c = t; c < n; ++c)
          if (a(r, c) != 0 && (pr == m || mpz_cmpabs(a(r, c).get_mpz_t(), a(pr, pc).get_mpz_t()) < 0)) {
            pr = r;
            pc = c;
          }
      if (pr == m) return {u, a, v};
      swap_rows(a, t, pr);
      swap_rows(u, t, pr);
      swap_cols(a, t, pc);
      swap_cols(v, t, pc);

      bool dirty = false;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (a(r, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(r, t).get_mpz_t(), a(t, t).get_mpz_t());
        add_row_multiple(a, u, r, t, -q);
        if (a(r, t) != 0) dirty = true;
      }
      for (std::size_t c = t + 1; c < n; ++c) {
        if (a(t, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, c).get_mpz_t(), a(t, t).get_mpz_t());
        add_col_multiple(a, v, c, t, -q);
        if (a(t, c) != 0) dirty = true;
      }
      if (dirty) continue;

      // Row and column t are clear; enforce divisibility of the trailing block.
      std::size_t bad = m;
      for (std::size_t r = t + 1; r < m && bad == m; ++r)
        for (std::size_t c = t + 1; c < n; ++c)
          if (!mpz_divisible_p(a(r, c).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = r;
            break;
          }
      if (bad == m) break;
      add_row_multiple(a, u, t, bad, Integer(1));
    }
    if (a(t, t) < 0) {
      for (std::size_t c = 0; c < n; ++c) a(t, c) = -a(t, c);
      for (std::size_t c = 0; c < m; ++c) u(t, c) = -u(t, c);
    }
  }
  return {u, a, v};
}

}  // namespace hmw::linalg
