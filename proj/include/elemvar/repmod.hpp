#ifndef ELEMVAR_REPMOD_HPP
#define ELEMVAR_REPMOD_HPP

#include "elemvar/evariety.hpp"
#include "elemvar/liealg.hpp"

namespace elemvar {

/// A restricted representation: one operator per algebra basis vector with
/// rho([x_i,x_j]) = [rho(x_i), rho(x_j)] and rho(x_i)^p = rho(x_i^[p]).
class Module {
 public:
  Module(const LieAlgebra& g, std::vector<Matrix> ops, std::string name = "module",
         bool validate_now = true);

  const LieAlgebra& algebra() const { return *g_; }
  size_t dim() const { return d_; }
  const std::string& name() const { return name_; }
  const std::vector<Matrix>& ops() const { return ops_; }

  /// rho of an arbitrary element (linear combination of the basis ops).
  Matrix act(const Vec& x) const;

  void validate() const;

  Module dual() const;
  Module tensor(const Module& o) const;
  Module direct_sum(const Module& o) const;

  static Module trivial(const LieAlgebra& g, size_t d = 1);
  /// Defining representation (requires a matrix realization).
  static Module defining(const LieAlgebra& g);
  static Module adjoint(const LieAlgebra& g);

 private:
  const LieAlgebra* g_;
  size_t d_;
  std::vector<Matrix> ops_;
  std::string name_;
};

/// The restriction of a module to an elementary plane: r pairwise commuting
/// operators, each with vanishing p-th power.
struct RestrictedTuple {
  uint32_t p = 3;
  size_t dim = 0;
  std::vector<Matrix> ops;

  size_t rank_count() const { return ops.size(); }
  void validate() const;
};

RestrictedTuple restrict_to(const Module& m, const ElementaryPoint& pt);

/// Regular representation of the truncated polynomial algebra on r
/// generators, repeated `mult` times: dimension mult * p^r, operator s is
/// multiplication by the s-th generator.
RestrictedTuple free_tuple(size_t r, size_t mult, uint32_t p);

/// The same module presented over abelian(r).
Module free_module(const LieAlgebra& abelian_r, size_t mult);

}  // namespace elemvar

#endif
