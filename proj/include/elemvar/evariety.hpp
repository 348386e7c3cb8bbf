#ifndef ELEMVAR_EVARIETY_HPP
#define ELEMVAR_EVARIETY_HPP

#include <optional>

#include "elemvar/grassmann.hpp"
#include "elemvar/liealg.hpp"

namespace elemvar {

/// Which vanishing certificate was produced for the p-operation on a plane:
/// the full plane was scanned point by point, or only the basis vectors and
/// their pairwise sums were checked.
enum class PCertificate { FullPlane, BasisPairwise };

inline const char* to_string(PCertificate c) {
  return c == PCertificate::FullPlane ? "full-plane" : "basis-pairwise";
}

/// An r-plane of the algebra that is an elementary subalgebra: pairwise
/// commuting basis with vanishing p-operation on the plane.
struct ElementaryPoint {
  PlanePoint plane;
  std::vector<Vec> basis;  // canonical basis columns as coordinate vectors
  PCertificate certificate = PCertificate::FullPlane;

  size_t dim() const { return basis.size(); }
  bool operator==(const ElementaryPoint& o) const { return plane == o.plane; }
};

struct EnumOptions {
  uint64_t node_budget = 2000000000ull;  // candidate basis columns visited
  uint64_t plane_scan_cap = 2000000ull;  // full-plane certificate when p^r <= cap
  std::optional<Subspace> within;        // restrict the scan to a subspace
};

struct EnumStats {
  uint64_t nodes = 0;
  uint64_t points = 0;
};

/// Tests the elementary-subalgebra predicate on an arbitrary plane:
/// pairwise brackets vanish and the p-operation vanishes on the plane
/// (full scan when p^r is small, basis plus pairwise sums otherwise;
/// the produced certificate is reported through `cert`).
bool is_elementary(const LieAlgebra& g, const PlanePoint& pt, PCertificate* cert = nullptr,
                   uint64_t plane_scan_cap = 2000000ull);

/// All points of E(r, g)(F_p), optionally restricted to planes inside a
/// subspace. The search runs chart by chart and prunes with the linear
/// commutation constraints, so Grassmannians far beyond the materializable
/// range are scanned as long as commuting candidates stay sparse. Output is
/// sorted by (pivot set, basis entries) regardless of execution order.
std::vector<ElementaryPoint> elementary_points(const LieAlgebra& g, size_t r,
                                               const EnumOptions& opts = {},
                                               EnumStats* stats = nullptr);

/// Single-chart worker unit for the same scan (partition by pivot pattern).
std::vector<ElementaryPoint> elementary_points_in_chart(const LieAlgebra& g, size_t r,
                                                        const std::vector<size_t>& sigma,
                                                        const EnumOptions& opts = {},
                                                        EnumStats* stats = nullptr);

/// Centralizer of the plane inside g (intersection of the ad-kernels).
Subspace centralizer(const LieAlgebra& g, const ElementaryPoint& pt);

/// Brute-force maximality: no p-nilpotent element outside the plane
/// commutes with it. Guard bounds the centralizer point scan.
bool is_maximal_elementary(const LieAlgebra& g, const ElementaryPoint& pt,
                           uint64_t guard = 100000000ull);

/// Socle-rank maximality criterion, valid for algebras whose p-operation
/// table vanishes on the basis: the plane is maximal iff the socle of its
/// adjoint restriction has dimension exactly r. Rejects other algebras.
bool is_maximal_via_socle(const LieAlgebra& g, const ElementaryPoint& pt);

// ---- Heisenberg algebras and the symplectic quotient ---------------------

/// The quotient W = g/z of a Heisenberg algebra with the induced
/// alternating form <x, y> = coefficient of the central generator in
/// [sigma(x), sigma(y)].
struct SymplecticQuotient {
  Vec center;                  // echelon generator of the 1-dim center
  size_t center_pivot = 0;     // its pivot coordinate
  std::vector<size_t> w_rows;  // coordinates spanning the complement
  Matrix form;                 // alternating nondegenerate on the complement
};

SymplecticQuotient heisenberg_form(const LieAlgebra& g);

/// Plane contains the center and projects to an isotropic subspace of
/// maximal dimension in W.
bool is_lagrangian_preimage(const LieAlgebra& g, const SymplecticQuotient& q,
                            const ElementaryPoint& pt);

/// Independent oracle: direct enumeration of the isotropic k-subspaces of
/// the form's space over F_p.
uint64_t count_isotropic_subspaces(const Matrix& form, size_t k,
                                   uint64_t budget = 10000000ull);

/// prod_{i=1}^{m} (q^i + 1), the Lagrangian count in dimension 2m.
uint64_t lagrangian_count(size_t m, uint32_t q);

// ---- constructive triangularization --------------------------------------

/// For a plane of commuting nilpotents in a realized algebra, returns an
/// invertible matrix g with g u g^{-1} strictly upper triangular for every
/// element u of the plane (iterated common kernels).
Matrix engel_triangularize(const LieAlgebra& g, const ElementaryPoint& pt);

/// Standard symplectic form [[0, I], [-I, 0]] on F_p^{2h}.
Matrix sp_form(size_t h, uint32_t p);

/// For a plane inside sp_{2h}, returns g with g^T S g = S and g u g^{-1} in
/// the nilradical of the standard Borel for every u in the plane (grows an
/// invariant isotropic flag and completes it to a symplectic basis).
Matrix symplectic_flag_triangularize(const LieAlgebra& g, const ElementaryPoint& pt);

bool is_strictly_upper(const Matrix& m);
/// Membership in sp_{2h}: m^T S = -S m.
bool is_sp_member(const Matrix& m, size_t h);
/// Strict upper triangularity in the flag-adapted column order
/// (e_1..e_h, f_h..f_1) intersected with sp membership.
bool in_sp_borel_nilradical(const Matrix& m, size_t h);

// ---- products -------------------------------------------------------------

/// Block-diagonal image of planes from the summands of a direct sum.
ElementaryPoint direct_sum_planes(const LieAlgebra& sum,
                                  const std::vector<const LieAlgebra*>& parts,
                                  const std::vector<ElementaryPoint>& pts);

/// Image of a plane under conjugation by an invertible matrix of the
/// realization space (adjoint action).
ElementaryPoint adjoint_image(const LieAlgebra& g, const Matrix& conj, const ElementaryPoint& pt);

/// Builds the ElementaryPoint for an explicit list of basis vectors,
/// verifying the predicate.
ElementaryPoint elementary_point_from_span(const LieAlgebra& g, const Matrix& columns);

}  // namespace elemvar

#endif
