#ifndef ELEMVAR_RANKFN_HPP
#define ELEMVAR_RANKFN_HPP

#include "elemvar/repmod.hpp"

namespace elemvar {

/// The operator attached to chart coordinate s of a plane: the linear
/// combination of the module operators with the chart-section coefficients
/// of the plane (pivot rows contribute Kronecker deltas, free slots the
/// stored chart entries). Coincides with the s-th restriction operator.
Matrix theta_specialize(const Module& m, const ElementaryPoint& pt, size_t s);

/// Rank computations for one restricted tuple, with cached operator powers.
class TupleRanks {
 public:
  explicit TupleRanks(const RestrictedTuple& t);

  size_t dim() const { return t_.dim; }
  size_t top_degree() const { return (t_.p - 1) * t_.ops.size(); }

  /// dim of the sum of images of all degree-j monomials (j = 0 gives dim).
  size_t rad_dim(size_t j) const;
  /// dim of the intersection of kernels of all degree-j monomials (j = 0: 0).
  size_t soc_dim(size_t j) const;

 private:
  RestrictedTuple t_;
  std::vector<std::vector<Matrix>> powers_;  // powers_[s][k] = ops[s]^k, k <= p-1
};

size_t rad_dim(const Module& m, const ElementaryPoint& pt, size_t j);
size_t soc_dim(const Module& m, const ElementaryPoint& pt, size_t j);

/// Partition of dim from the rank sequence of a nilpotent operator.
std::vector<size_t> jordan_type(const Matrix& op);

struct FreeRank {
  bool free = false;
  size_t rank = 0;  // number of free direct summands
};

/// Rank of the top socle operator prod_s ops[s]^{p-1}; the restriction is
/// free iff rank * p^r equals the dimension.
FreeRank free_restriction_rank(const RestrictedTuple& t);

/// Line scan: does some nonzero element of the plane act non-freely?
/// Agrees with !free_restriction_rank(...).free; both routes are computed
/// and a mismatch throws (it would falsify the reduction to lines).
bool in_support(const Module& m, const ElementaryPoint& pt);

struct SurveyOptions {
  EnumOptions enumeration;
  size_t workers = 1;
  bool with_maximal = true;
  uint64_t maximal_guard = 100000000ull;
};

struct RankProfile {
  ElementaryPoint point;
  std::vector<size_t> rad;  // index j = 1..(p-1)r at [j-1]
  std::vector<size_t> soc;
  FreeRank fr;
  bool support = false;
  bool maximal = false;
};

struct RankSurvey {
  size_t r = 0;
  size_t jmax = 0;  // (p-1) r
  size_t module_dim = 0;
  std::vector<RankProfile> profiles;
  std::vector<size_t> max_rad, min_rad, max_soc, min_soc;       // observed, per j
  std::vector<uint64_t> below_max_counts, above_min_counts;     // per j
  std::vector<bool> constant_rad, constant_soc;                 // per j

  /// Indices of the points with rad_j below the observed maximum.
  std::vector<size_t> rad_locus(size_t j) const;
  /// Indices of the points with soc_j above the observed minimum.
  std::vector<size_t> soc_locus(size_t j) const;
  /// Indices of the points in the support.
  std::vector<size_t> support_locus() const;
};

RankSurvey rank_survey(const LieAlgebra& g, const Module& m, size_t r,
                       const SurveyOptions& opts = {});

/// E(r, g)_M: the points whose restriction is not free, by the line-scan
/// definition cross-checked against the direct free test.
std::vector<ElementaryPoint> support_locus(const LieAlgebra& g, const Module& m, size_t r,
                                           const EnumOptions& opts = {});

// ---- power decomposition ---------------------------------------------------

/// One term a * lambda^deg of a power decomposition; `form` holds the
/// coefficients of the linear form lambda.
struct PowerTerm {
  uint32_t coeff;
  Vec form;
};

/// Writes the monomial prod x_k^{e_k} of degree i < p as a combination of
/// i-th powers of linear forms (Vandermonde solve, applied variable by
/// variable). Requires 1 <= i < p.
std::vector<PowerTerm> power_decompose(const std::vector<uint32_t>& exponents, uint32_t p);

/// Exact check by dense polynomial expansion over F_p.
bool verify_power_decomposition(const std::vector<uint32_t>& exponents,
                                const std::vector<PowerTerm>& terms, uint32_t p);

}  // namespace elemvar

#endif
