#ifndef ELEMVAR_LINALG_HPP
#define ELEMVAR_LINALG_HPP

#include <optional>
#include <vector>

#include "elemvar/matrix.hpp"

namespace elemvar {

struct RrefResult {
  Matrix mat;
  std::vector<size_t> pivots;  // pivot column indices, increasing
  size_t rank = 0;
};

/// Reduced row echelon form with deterministic pivoting (first nonzero in
/// scan order), so outputs are bit-reproducible.
RrefResult rref(const Matrix& m);

size_t rank(const Matrix& m);

/// Columns form a basis of the kernel (right null space); canonical
/// free-variable parametrization derived from the rref.
Matrix kernel_basis(const Matrix& m);

/// Solves A x = b (single column). Returns std::nullopt if inconsistent;
/// free variables are set to zero.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Determinant via Gaussian elimination.
uint32_t det(const Matrix& m);

/// A subspace of F_p^n held as an n x r basis in reduced column echelon
/// form. The form is canonical: two Subspace values are equal as sets of
/// vectors iff their stored matrices are equal entry-wise. The recorded
/// pivot rows are the lexicographically least row subset with invertible
/// minor, and the submatrix on those rows is the identity.
class Subspace {
 public:
  Subspace() : ambient_(0) {}

  Subspace(size_t ambient_dim, uint32_t p)
      : ambient_(ambient_dim), basis_(ambient_dim, 0, p) {}

  /// Canonicalizes the column span of an arbitrary matrix. Idempotent and
  /// constant on GL_r-orbits of basis matrices.
  static Subspace span(const Matrix& columns);

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.cols(); }
  uint32_t modulus() const { return basis_.modulus(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<size_t>& pivot_rows() const { return pivots_; }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  bool contains_vector(const Vec& v) const;
  bool contains(const Subspace& o) const;

 private:
  size_t ambient_;
  Matrix basis_;
  std::vector<size_t> pivots_;
};

Subspace canonical_subspace(const Matrix& span_columns);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

}  // namespace elemvar

#endif
