#include "elemvar/matrix.hpp"

#include <stdexcept>

namespace elemvar {

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<int64_t>> rows, uint32_t p) {
  size_t r = rows.size();
  size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(r, c, p);
  size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("ragged matrix literal");
    size_t j = 0;
    for (int64_t v : row) m.set_signed(i, j++, v);
    ++i;
  }
  return m;
}

void Matrix::check_same_shape(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || p_ != o.p_)
    throw std::invalid_argument("matrix shape/modulus mismatch");
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_same_shape(o);
  Matrix r(rows_, cols_, p_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = mod_add(a_[k], o.a_[k], p_);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_same_shape(o);
  Matrix r(rows_, cols_, p_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = mod_sub(a_[k], o.a_[k], p_);
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("matrix product shape mismatch");
  Matrix r(rows_, o.cols_, p_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t k = 0; k < cols_; ++k) {
      uint64_t aik = a_[i * cols_ + k];
      if (!aik) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        uint64_t acc = r.a_[i * o.cols_ + j] + aik * o.a_[k * o.cols_ + j];
        r.a_[i * o.cols_ + j] = static_cast<uint32_t>(acc % p_);
      }
    }
  }
  return r;
}

Matrix Matrix::scaled(uint32_t c) const {
  Matrix r(rows_, cols_, p_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = mod_mul(c % p_, a_[k], p_);
  return r;
}

Matrix Matrix::negated() const {
  Matrix r(rows_, cols_, p_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = mod_neg(a_[k], p_);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, p_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.a_[j * rows_ + i] = a_[i * cols_ + j];
  return r;
}

Matrix Matrix::pow(uint64_t e) const {
  if (rows_ != cols_) throw std::invalid_argument("matrix power of non-square matrix");
  Matrix acc = identity(rows_, p_);
  Matrix base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
  Vec r(rows_, 0);
  for (size_t j = 0; j < cols_; ++j) {
    uint64_t vj = v[j];
    if (!vj) continue;
    for (size_t i = 0; i < rows_; ++i) {
      uint64_t acc = r[i] + vj * a_[i * cols_ + j];
      r[i] = static_cast<uint32_t>(acc % p_);
    }
  }
  return r;
}

Matrix Matrix::hcat(const Matrix& o) const {
  if (rows_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("hcat shape mismatch");
  Matrix r(rows_, cols_ + o.cols_, p_);
  for (size_t i = 0; i < rows_; ++i) {
    for (size_t j = 0; j < cols_; ++j) r.a_[i * r.cols_ + j] = a_[i * cols_ + j];
    for (size_t j = 0; j < o.cols_; ++j) r.a_[i * r.cols_ + cols_ + j] = o.a_[i * o.cols_ + j];
  }
  return r;
}

Matrix Matrix::vcat(const Matrix& o) const {
  if (cols_ != o.cols_ || p_ != o.p_) throw std::invalid_argument("vcat shape mismatch");
  Matrix r(rows_ + o.rows_, cols_, p_);
  for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k];
  for (size_t k = 0; k < o.a_.size(); ++k) r.a_[a_.size() + k] = o.a_[k];
  return r;
}

Matrix Matrix::submatrix(const std::vector<size_t>& rows, const std::vector<size_t>& cols) const {
  Matrix r(rows.size(), cols.size(), p_);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) r.set(i, j, (*this)(rows[i], cols[j]));
  return r;
}

}  // namespace elemvar
