#ifndef ELEMVAR_MATRIX_HPP
#define ELEMVAR_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "elemvar/fp.hpp"

namespace elemvar {

/// Dense row-major matrix over F_p. The modulus is stored once per matrix;
/// entries are reduced residues.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0), p_(3) {}

  Matrix(size_t rows, size_t cols, uint32_t p) : rows_(rows), cols_(cols), p_(p), a_(rows * cols, 0) {
    require_odd_prime(p);
  }

  /// From integer rows (entries reduced mod p).
  static Matrix from_rows(std::initializer_list<std::initializer_list<int64_t>> rows, uint32_t p);

  static Matrix identity(size_t n, uint32_t p) {
    Matrix m(n, n, p);
    for (size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  static Matrix zero(size_t rows, size_t cols, uint32_t p) { return Matrix(rows, cols, p); }

  /// Column vector from a coordinate vector.
  static Matrix column(const Vec& v, uint32_t p) {
    Matrix m(v.size(), 1, p);
    for (size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  uint32_t modulus() const { return p_; }

  uint32_t operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  Fp at(size_t i, size_t j) const { return Fp::raw((*this)(i, j), p_); }
  void set(size_t i, size_t j, uint32_t reduced) { a_[i * cols_ + j] = reduced % p_; }
  void set_signed(size_t i, size_t j, int64_t v) { a_[i * cols_ + j] = mod_reduce(v, p_); }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && a_ == o.a_;
  }

  bool is_zero() const {
    for (uint32_t x : a_)
      if (x) return false;
    return true;
  }

  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Matrix& o) const;
  Matrix scaled(uint32_t c) const;
  Matrix negated() const;
  Matrix transpose() const;
  Matrix pow(uint64_t e) const;

  /// [a, b] = ab - ba.
  Matrix commutator_with(const Matrix& o) const { return *this * o - o * *this; }

  Vec col_vec(size_t j) const {
    Vec v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  void set_col(size_t j, const Vec& v) {
    for (size_t i = 0; i < rows_; ++i) set(i, j, v[i]);
  }

  Vec row_vec(size_t i) const {
    Vec v(cols_);
    for (size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }

  /// Matrix-vector product (v as coordinates).
  Vec apply(const Vec& v) const;

  /// Horizontal concatenation [this | o].
  Matrix hcat(const Matrix& o) const;
  /// Vertical concatenation [this ; o].
  Matrix vcat(const Matrix& o) const;

  /// Submatrix of the given rows and columns (index lists).
  Matrix submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const;

  /// Row-major flattening of the entries.
  const std::vector<uint32_t>& data() const { return a_; }

  /// Lexicographic comparison on (rows, cols, entries); total order used for
  /// deterministic sorting of enumeration output.
  bool lex_less(const Matrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    return a_ < o.a_;
  }

 private:
  void check_same_shape(const Matrix& o) const;
  size_t rows_, cols_;
  uint32_t p_;
  std::vector<uint32_t> a_;
};

}  // namespace elemvar

#endif
