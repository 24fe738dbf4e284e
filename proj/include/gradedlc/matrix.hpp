#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gradedlc {

using Rational = mpq_class;

std::string to_string(const Rational& q);

/// Dense row-major matrix over the rationals. Every operation is exact.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalMatrix transpose() const;
  RationalMatrix column(std::size_t c) const;
  std::vector<Rational> column_vector(std::size_t c) const;

  bool is_zero() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

  /// Horizontal concatenation; row counts must agree unless one side has no columns.
  static RationalMatrix hstack(const RationalMatrix& left, const RationalMatrix& right);
  static RationalMatrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m);

/// Reduced row echelon form together with its pivot columns.
struct EchelonForm {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

EchelonForm rref(RationalMatrix m);

/// Rank over Q via fraction-free (Bareiss) elimination. Rows are cleared of
/// denominators first; the int64 path falls back to GMP integers on overflow.
std::size_t rank(const RationalMatrix& m);

/// Columns form the reduced-echelon basis of ker(m): one vector per free column.
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Columns form a reduced-echelon basis of the column space of m.
RationalMatrix column_space_basis(const RationalMatrix& m);

bool is_invertible(const RationalMatrix& m);

/// Solves basis * x = rhs column by column. The columns of `basis` must be
/// linearly independent and every rhs column must lie in their span; throws
/// std::domain_error otherwise.
RationalMatrix solve_in_span(const RationalMatrix& basis, const RationalMatrix& rhs);

}  // namespace gradedlc
