#ifndef ELEMVAR_LIEALG_HPP
#define ELEMVAR_LIEALG_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "elemvar/linalg.hpp"

namespace elemvar {

/// A p-restricted Lie algebra presented by structure constants on a fixed
/// basis, a p-operation table on basis vectors, and (when the algebra is
/// given inside some gl_m) one realizing matrix per basis vector.
///
/// Elements are coordinate vectors of length dim() relative to the basis.
/// The p-operation on non-basis elements is evaluated with the Jacobson
/// formula: (x+y)^[p] = x^[p] + y^[p] + sum s_i(x,y), where i*s_i(x,y) is
/// the t^{i-1} coefficient of ad(tx+y)^{p-1}(x), and (a x)^[p] = a^p x^[p].
class LieAlgebra {
 public:
  LieAlgebra(std::string name, uint32_t p, std::vector<std::string> labels,
             std::vector<Vec> bracket_table, std::vector<Vec> p_map,
             std::vector<Matrix> realization = {});

  const std::string& name() const { return name_; }
  uint32_t modulus() const { return p_; }
  size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const Vec& basis_bracket(size_t i, size_t j) const { return bracket_table_[i * n_ + j]; }
  const Vec& basis_p_power(size_t i) const { return p_map_[i]; }

  bool has_realization() const { return !realization_.empty(); }
  size_t realization_dim() const { return realization_.empty() ? 0 : realization_[0].rows(); }
  const std::vector<Matrix>& realization() const { return realization_; }

  /// Realizing matrix of an element (requires a realization).
  Matrix realize(const Vec& x) const;

  /// ad(x_i) as a dim x dim matrix (column j = [x_i, x_j]).
  const Matrix& ad_basis(size_t i) const { return ad_[i]; }
  Matrix ad_matrix(const Vec& x) const;

  Vec bracket(const Vec& x, const Vec& y) const;

  /// x^[p] via the basis table and the Jacobson formula.
  Vec p_power(const Vec& x) const;

  /// x^[p] = 0. Uses the matrix realization when present (the two routes
  /// agree; the agreement is part of the validation suite).
  bool is_p_nilpotent(const Vec& x) const;

  /// True iff the p-operation table is identically zero on the basis.
  /// (This does not by itself force x^[p] = 0 for all x.)
  bool basis_p_map_is_zero() const;

  /// All solutions of x^[p] = 0 over F_p. Guard: p^dim <= guard.
  std::vector<Vec> nilpotent_cone_points(uint64_t guard = 100000000ull) const;

  /// Projective representatives (first nonzero coordinate 1) of the lines
  /// inside a coordinate subspace meeting the nilpotent cone condition if
  /// `nilpotent_only`; the whole subspace's lines otherwise.
  std::vector<Vec> projective_points(const Subspace& inside, bool nilpotent_only,
                                     uint64_t guard = 100000000ull) const;

  /// Checks antisymmetry, the Jacobi identity, restrictedness
  /// (ad(x_i^[p]) = ad(x_i)^p), and agreement with the realization when one
  /// is attached. Throws std::logic_error on the first violation.
  void validate() const;

  /// Coordinates of a realizing matrix in this basis; throws if the matrix
  /// is outside the span (requires a realization).
  Vec coordinates_of(const Matrix& realized) const;

  /// Span of the basis vectors whose realizing matrices are strictly upper
  /// triangular, when the constructor identified one (nilradical of the
  /// standard Borel). Used for restricted scans.
  const std::optional<Subspace>& borel_nilradical() const { return borel_nilradical_; }
  void set_borel_nilradical(Subspace s) { borel_nilradical_ = std::move(s); }

 private:
  void build_ad();
  Vec jacobson_cross_terms(const Vec& x, const Vec& y) const;

  std::string name_;
  uint32_t p_;
  size_t n_;
  std::vector<std::string> labels_;
  std::vector<Vec> bracket_table_;  // n*n entries, coordinate vectors
  std::vector<Vec> p_map_;          // n entries
  std::vector<Matrix> realization_;
  std::vector<Matrix> ad_;
  std::optional<Subspace> borel_nilradical_;

  // cached rref of the vectorized realization basis, for coordinates_of
  struct CoordSolver;
  std::shared_ptr<const CoordSolver> coord_solver_;
};

// ---- constructors -------------------------------------------------------

LieAlgebra make_gl(size_t n, uint32_t p);
LieAlgebra make_sl(size_t n, uint32_t p);
/// sp_{2m} realized as matrices with m^T S = -S m, S = [[0,I],[-I,0]].
LieAlgebra make_sp(size_t two_m, uint32_t p);
/// Strictly upper triangular matrices in gl_n.
LieAlgebra make_upper_nil(size_t n, uint32_t p);
/// Nilradical of the standard parabolic of gl_n keeping the simple roots in
/// J (J indexes root positions 1..n-1; the block cuts are the complement).
LieAlgebra make_parabolic_nilradical(size_t n, const std::vector<size_t>& roots_kept, uint32_t p);
/// The abelian block u_{r,s} inside gl_{r+s} (rows <= r, cols > r).
LieAlgebra make_block_nilradical(size_t r, size_t s, uint32_t p);
/// Heisenberg algebra of dimension 2n-1 with [x_i, y_j] = delta_ij y_n and
/// zero p-operation, realized inside gl_{n+1}.
LieAlgebra make_heisenberg(size_t n, uint32_t p);
LieAlgebra make_abelian(size_t n, uint32_t p);
LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts);
/// W x| h for a restricted h-module given by its action matrices: W is an
/// abelian ideal with zero p-operation, h acts through the matrices.
LieAlgebra make_semidirect(const LieAlgebra& h, const std::vector<Matrix>& action, size_t w_dim);
/// Central extension of gl_{2m} with p-operation (b,x) -> (phi(x), x^[p]).
/// Over F_p a semilinear functional is just a linear one; phi is given by
/// its coordinate functional on the gl basis.
LieAlgebra make_central_extension_gl(size_t two_m, const Vec& phi, uint32_t p);
/// Lie algebra of V x| GL_n with V the defining representation.
LieAlgebra make_g1n(size_t n, uint32_t p);

// ---- parabolic bracket span check ---------------------------------------

/// For the standard parabolic of gl_n determined by the kept simple roots J,
/// checks whether span{[u, p]} equals the nilradical u. Vacuously true when
/// the nilradical is zero (J = all roots).
bool com_check_nilradical(size_t n, const std::vector<size_t>& roots_kept, uint32_t p);

}  // namespace elemvar

#endif
