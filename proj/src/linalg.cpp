#include "elemvar/linalg.hpp"

#include <stdexcept>

namespace elemvar {

RrefResult rref(const Matrix& m) {
  RrefResult res{m, {}, 0};
  Matrix& a = res.mat;
  const uint32_t p = m.modulus();
  size_t pivot_row = 0;
  for (size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    // first nonzero entry in scan order
    size_t sel = a.rows();
    for (size_t i = pivot_row; i < a.rows(); ++i) {
      if (a(i, col)) {
        sel = i;
        break;
      }
    }
    if (sel == a.rows()) continue;
    if (sel != pivot_row) {
      for (size_t j = 0; j < a.cols(); ++j) {
        uint32_t t = a(pivot_row, j);
        a.set(pivot_row, j, a(sel, j));
        a.set(sel, j, t);
      }
    }
    uint32_t inv = mod_inv(a(pivot_row, col), p);
    for (size_t j = col; j < a.cols(); ++j) a.set(pivot_row, j, mod_mul(a(pivot_row, j), inv, p));
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == pivot_row) continue;
      uint32_t f = a(i, col);
      if (!f) continue;
      for (size_t j = col; j < a.cols(); ++j)
        a.set(i, j, mod_sub(a(i, j), mod_mul(f, a(pivot_row, j), p), p));
    }
    res.pivots.push_back(col);
    ++pivot_row;
  }
  res.rank = res.pivots.size();
  return res;
}

size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  const uint32_t p = m.modulus();
  std::vector<size_t> free_cols;
  {
    size_t pi = 0;
    for (size_t j = 0; j < m.cols(); ++j) {
      if (pi < r.pivots.size() && r.pivots[pi] == j)
        ++pi;
      else
        free_cols.push_back(j);
    }
  }
  Matrix k(m.cols(), free_cols.size(), m.modulus());
  for (size_t fi = 0; fi < free_cols.size(); ++fi) {
    size_t f = free_cols[fi];
    k.set(f, fi, 1);
    for (size_t pi = 0; pi < r.pivots.size(); ++pi)
      k.set(r.pivots[pi], fi, mod_neg(r.mat(pi, f), p));
  }
  return k;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix aug = a.hcat(Matrix::column(b, a.modulus()));
  RrefResult r = rref(aug);
  // inconsistent iff the augmented column is a pivot
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), 0);
  for (size_t pi = 0; pi < r.pivots.size(); ++pi) x[r.pivots[pi]] = r.mat(pi, a.cols());
  return x;
}

uint32_t det(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
  Matrix a = m;
  const uint32_t p = m.modulus();
  uint32_t d = 1;
  for (size_t col = 0; col < a.cols(); ++col) {
    size_t sel = a.rows();
    for (size_t i = col; i < a.rows(); ++i) {
      if (a(i, col)) {
        sel = i;
        break;
      }
    }
    if (sel == a.rows()) return 0;
    if (sel != col) {
      for (size_t j = 0; j < a.cols(); ++j) {
        uint32_t t = a(col, j);
        a.set(col, j, a(sel, j));
        a.set(sel, j, t);
      }
      d = mod_neg(d, p);
    }
    d = mod_mul(d, a(col, col), p);
    uint32_t inv = mod_inv(a(col, col), p);
    for (size_t i = col + 1; i < a.rows(); ++i) {
      uint32_t f = mod_mul(a(i, col), inv, p);
      if (!f) continue;
      for (size_t j = col; j < a.cols(); ++j)
        a.set(i, j, mod_sub(a(i, j), mod_mul(f, a(col, j), p), p));
    }
  }
  return d;
}

Subspace Subspace::span(const Matrix& columns) {
  // Reduced column echelon form = transposed rref of the transpose. The
  // pivot rows come out as the lexicographically least subset with
  // invertible minor, and the submatrix on them is the identity.
  RrefResult r = rref(columns.transpose());
  Subspace s(columns.rows(), columns.modulus());
  Matrix basis(columns.rows(), r.rank, columns.modulus());
  for (size_t k = 0; k < r.rank; ++k)
    for (size_t i = 0; i < columns.rows(); ++i) basis.set(i, k, r.mat(k, i));
  s.basis_ = basis;
  s.pivots_ = r.pivots;
  return s;
}

bool Subspace::contains_vector(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  // reduce v against the echelon basis
  Vec w = v;
  const uint32_t p = modulus();
  for (size_t k = 0; k < dim(); ++k) {
    uint32_t c = w[pivots_[k]];
    if (!c) continue;
    for (size_t i = 0; i < ambient_; ++i) w[i] = mod_sub(w[i], mod_mul(c, basis_(i, k), p), p);
  }
  return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  for (size_t k = 0; k < o.dim(); ++k)
    if (!contains_vector(o.basis_.col_vec(k))) return false;
  return true;
}

Subspace canonical_subspace(const Matrix& span_columns) { return Subspace::span(span_columns); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.modulus() != b.modulus())
    throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
  return Subspace::span(a.basis().hcat(b.basis()));
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim() || a.modulus() != b.modulus())
    throw std::invalid_argument("subspace_intersection: ambient dimension mismatch");
  // x in both spans: A u = B v, i.e. [A | -B] (u,v)^T = 0; intersection is
  // spanned by A u over kernel elements.
  Matrix stacked = a.basis().hcat(b.basis().negated());
  Matrix ker = kernel_basis(stacked);
  Matrix inter(a.ambient_dim(), ker.cols(), a.modulus());
  for (size_t c = 0; c < ker.cols(); ++c) {
    Vec u(a.dim());
    for (size_t i = 0; i < a.dim(); ++i) u[i] = ker(i, c);
    inter.set_col(c, a.basis().apply(u));
  }
  return Subspace::span(inter);
}

}  // namespace elemvar
