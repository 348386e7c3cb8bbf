#ifndef ELEMVAR_GRASSMANN_HPP
#define ELEMVAR_GRASSMANN_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "elemvar/linalg.hpp"

namespace elemvar {

/// A rational point of Grass(r, n): canonical n x r column echelon basis
/// plus its pivot row set Sigma. The Sigma-submatrix is the identity and
/// Sigma is the lexicographically least row subset with invertible minor.
struct PlanePoint {
  Subspace sub{};
  std::vector<size_t> sigma{};

  static PlanePoint from_span(const Matrix& columns) {
    Subspace s = Subspace::span(columns);
    return PlanePoint{s, s.pivot_rows()};
  }

  bool operator==(const PlanePoint& o) const { return sub == o.sub; }
  bool lex_less(const PlanePoint& o) const {
    if (sigma != o.sigma) return sigma < o.sigma;
    return sub.basis().lex_less(o.sub.basis());
  }
};

/// Number of r-dimensional subspaces of F_q^n, saturating at `cap`.
uint64_t gaussian_binomial(size_t n, size_t r, uint32_t q,
                           uint64_t cap = UINT64_MAX);

/// All r-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<size_t>> pivot_patterns(size_t n, size_t r);

/// Free entry slots (row, col) of the echelon chart with pivot rows sigma,
/// ordered column-major (column ascending, then row ascending).
std::vector<std::pair<size_t, size_t>> chart_free_slots(const std::vector<size_t>& sigma, size_t n);

/// Enumerates Grass(r, n)(F_p) exactly once per plane, in lexicographic
/// order of (Sigma, free entries). The callback may return false to stop.
/// Refuses to start when the Gaussian binomial exceeds `budget`.
void for_each_plane(size_t n, size_t r, uint32_t p,
                    const std::function<bool(const PlanePoint&)>& fn,
                    uint64_t budget = 10000000ull);

std::vector<PlanePoint> enumerate_grassmannian(size_t n, size_t r, uint32_t p,
                                               uint64_t budget = 10000000ull);

/// Pluecker coordinates: the (n choose r) minors of the canonical basis,
/// indexed by r-subsets in lexicographic order, normalized so the first
/// nonzero coordinate is 1.
struct PluckerVector {
  size_t n = 0, r = 0;
  uint32_t p = 3;
  std::vector<uint32_t> coords;

  bool operator==(const PluckerVector& o) const {
    return n == o.n && r == o.r && p == o.p && coords == o.coords;
  }
};

PluckerVector plucker(const PlanePoint& pt);

}  // namespace elemvar

#endif
