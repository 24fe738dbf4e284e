#include "gradedlc/matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>

namespace gradedlc {

std::string to_string(const Rational& q) { return q.get_str(); }

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalMatrix RationalMatrix::column(std::size_t c) const {
  RationalMatrix col(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) col(r, 0) = (*this)(r, c);
  return col;
}

std::vector<Rational> RationalMatrix::column_vector(std::size_t c) const {
  std::vector<Rational> v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
    }
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shapes differ");
  RationalMatrix out(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& left, const RationalMatrix& right) {
  if (left.cols_ == 0) return right;
  if (right.cols_ == 0) return left;
  if (left.rows_ != right.rows_) throw std::invalid_argument("hstack: row counts differ");
  RationalMatrix out(left.rows_, left.cols_ + right.cols_);
  for (std::size_t r = 0; r < left.rows_; ++r) {
    for (std::size_t c = 0; c < left.cols_; ++c) out(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) out(r, left.cols_ + c) = right(r, c);
  }
  return out;
}

RationalMatrix RationalMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols) {
  RationalMatrix out(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw std::invalid_argument("from_columns: column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) out(r, c) = cols[c][r];
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ", ";
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ", ";
      os << m(r, c).get_str();
    }
    os << ']';
  }
  return os << ']';
}

EchelonForm rref(RationalMatrix m) {
  EchelonForm out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && sgn(m(piv, col)) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

namespace {

// Bareiss elimination on an integer matrix; returns nullopt if an int64
// intermediate would overflow.
std::optional<std::size_t> bareiss_rank_i64(std::vector<std::int64_t> a, std::size_t rows, std::size_t cols) {
  auto at = [&](std::size_t r, std::size_t c) -> std::int64_t& { return a[r * cols + c]; };
  std::int64_t prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t k = 0; k < cols; ++k) std::swap(at(piv, k), at(r, k));
    const std::int64_t p = at(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::int64_t f = at(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        std::int64_t x, y, z;
        if (__builtin_mul_overflow(p, at(i, j), &x) || __builtin_mul_overflow(f, at(r, j), &y) ||
            __builtin_sub_overflow(x, y, &z))
          return std::nullopt;
        at(i, j) = z / prev;
      }
      at(i, c) = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

std::size_t bareiss_rank_mpz(std::vector<mpz_class> a, std::size_t rows, std::size_t cols) {
  auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * cols + c]; };
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(at(piv, c)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t k = 0; k < cols; ++k) swap(at(piv, k), at(r, k));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class z = at(r, c) * at(i, j) - at(i, c) * at(r, j);
        mpz_divexact(at(i, j).get_mpz_t(), z.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<mpz_class> ints(rows * cols);
  bool small = true;
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class scale = 1;
    for (std::size_t c = 0; c < cols; ++c) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_class& v = ints[r * cols + c];
      v = m(r, c).get_num() * (scale / m(r, c).get_den());
      small = small && v.fits_slong_p();
    }
  }
  if (small) {
    std::vector<std::int64_t> a(rows * cols);
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = ints[k].get_si();
    if (auto r = bareiss_rank_i64(std::move(a), rows, cols)) return *r;
  }
  return bareiss_rank_mpz(std::move(ints), rows, cols);
}

RationalMatrix kernel_basis(const RationalMatrix& m) {
  const std::size_t n = m.cols();
  EchelonForm e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n);
    v[free] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, free);
    basis.push_back(std::move(v));
  }
  return RationalMatrix::from_columns(n, basis);
}

RationalMatrix column_space_basis(const RationalMatrix& m) {
  EchelonForm e = rref(m.transpose());
  RationalMatrix out(m.rows(), e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = e.reduced(k, r);
  return out;
}

bool is_invertible(const RationalMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

RationalMatrix solve_in_span(const RationalMatrix& basis, const RationalMatrix& rhs) {
  const std::size_t n = basis.cols();
  if (rhs.cols() == 0) return RationalMatrix(n, 0);
  if (basis.rows() != rhs.rows()) throw std::invalid_argument("solve_in_span: row counts differ");
  EchelonForm e = rref(RationalMatrix::hstack(basis, rhs));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1) || (e.pivots.size() > n))
    throw std::domain_error("solve_in_span: right-hand side not in the span of an independent basis");
  RationalMatrix x(n, rhs.cols());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t c = 0; c < rhs.cols(); ++c) x(k, c) = e.reduced(k, n + c);
  return x;
}

}  // namespace gradedlc
