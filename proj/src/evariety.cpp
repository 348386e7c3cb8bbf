#include "elemvar/evariety.hpp"

#include <algorithm>
#include <stdexcept>

namespace elemvar {

namespace {

double pow_double(uint32_t p, size_t e) {
  double t = 1;
  for (size_t i = 0; i < e; ++i) t *= p;
  return t;
}

/// Scans the p-operation over the whole plane (projective representatives)
/// or over basis + pairwise sums, returning which certificate was produced,
/// or nullopt if some element has nonzero p-power.
std::optional<PCertificate> p_vanishing_certificate(const LieAlgebra& g,
                                                    const std::vector<Vec>& basis,
                                                    uint64_t plane_scan_cap) {
  const uint32_t p = g.modulus();
  const size_t r = basis.size();
  for (const Vec& u : basis)
    if (!g.is_p_nilpotent(u)) return std::nullopt;
  if (pow_double(p, r) <= static_cast<double>(plane_scan_cap)) {
    Vec c(r, 0);
    for (size_t lead = 0; lead < r; ++lead) {
      std::fill(c.begin(), c.end(), 0);
      c[lead] = 1;
      while (true) {
        Vec x(g.dim(), 0);
        for (size_t s = 0; s < r; ++s)
          if (c[s]) vec_add_scaled(x, c[s], basis[s], p);
        if (!g.is_p_nilpotent(x)) return std::nullopt;
        size_t k = lead + 1;
        while (k < r && c[k] + 1 == p) c[k++] = 0;
        if (k == r) break;
        ++c[k];
      }
    }
    return PCertificate::FullPlane;
  }
  for (size_t s = 0; s < r; ++s)
    for (size_t t = s + 1; t < r; ++t)
      if (!g.is_p_nilpotent(vec_add(basis[s], basis[t], p))) return std::nullopt;
  return PCertificate::BasisPairwise;
}

}  // namespace

bool is_elementary(const LieAlgebra& g, const PlanePoint& pt, PCertificate* cert,
                   uint64_t plane_scan_cap) {
  if (pt.sub.ambient_dim() != g.dim())
    throw std::invalid_argument("plane ambient dimension does not match the algebra");
  const size_t r = pt.sub.dim();
  std::vector<Vec> basis;
  basis.reserve(r);
  for (size_t k = 0; k < r; ++k) basis.push_back(pt.sub.basis().col_vec(k));
  for (size_t s = 0; s < r; ++s)
    for (size_t t = s + 1; t < r; ++t)
      if (!vec_is_zero(g.bracket(basis[s], basis[t]))) return false;
  auto c = p_vanishing_certificate(g, basis, plane_scan_cap);
  if (!c) return false;
  if (cert) *cert = *c;
  return true;
}

namespace {

struct ChartSearch {
  const LieAlgebra& g;
  size_t r;
  const Matrix& w;  // n x d embedding of the scan space
  const std::vector<size_t>& sigma;
  const EnumOptions& opts;
  EnumStats& stats;
  std::vector<ElementaryPoint>& out;

  std::vector<bool> in_sigma{};
  std::vector<Vec> cols_ambient{};  // chosen columns u_1..u_j
  std::vector<Matrix> ads{};        // their ad matrices

  void run() {
    const size_t d = w.cols();
    in_sigma.assign(d, false);
    for (size_t s : sigma) in_sigma[s] = true;
    descend(0);
  }

  void descend(size_t j) {
    if (j == r) {
      emit();
      return;
    }
    const size_t d = w.cols();
    const uint32_t p = g.modulus();
    std::vector<size_t> slots;
    for (size_t i = sigma[j] + 1; i < d; ++i)
      if (!in_sigma[i]) slots.push_back(i);
    Vec pivot_col = w.col_vec(sigma[j]);

    if (j == 0) {
      // no commutation constraints yet: odometer over the free entries
      Vec vals(slots.size(), 0);
      while (true) {
        try_candidate(j, slots, vals, pivot_col);
        size_t k = slots.size();
        while (k > 0 && vals[k - 1] + 1 == p) vals[--k] = 0;
        if (k == 0) break;
        ++vals[k - 1];
      }
      return;
    }

    // stack the linear commutation constraints ad(u_t) * u_j = 0 over the
    // free entries of column j
    const size_t n = g.dim();
    Matrix a(j * n, slots.size(), p);
    Vec b(j * n, 0);
    for (size_t t = 0; t < j; ++t) {
      Vec base = ads[t].apply(pivot_col);
      for (size_t i = 0; i < n; ++i) b[t * n + i] = mod_neg(base[i], p);
      for (size_t k = 0; k < slots.size(); ++k) {
        Vec col = ads[t].apply(w.col_vec(slots[k]));
        for (size_t i = 0; i < n; ++i) a.set(t * n + i, k, col[i]);
      }
    }
    auto x0 = solve(a, b);
    if (!x0) return;  // no commuting extension in this chart column
    Matrix ker = kernel_basis(a);
    const size_t kd = ker.cols();
    Vec tpar(kd, 0);
    while (true) {
      Vec vals = *x0;
      for (size_t k = 0; k < kd; ++k)
        if (tpar[k]) vec_add_scaled(vals, tpar[k], ker.col_vec(k), p);
      try_candidate(j, slots, vals, pivot_col);
      size_t k = kd;
      while (k > 0 && tpar[k - 1] + 1 == p) tpar[--k] = 0;
      if (k == 0) break;
      ++tpar[k - 1];
    }
  }

  void try_candidate(size_t j, const std::vector<size_t>& slots, const Vec& vals,
                     const Vec& pivot_col) {
    if (++stats.nodes > opts.node_budget)
      throw BudgetExceeded("elementary enumeration exceeded its node budget");
    const uint32_t p = g.modulus();
    Vec u = pivot_col;
    for (size_t k = 0; k < slots.size(); ++k)
      if (vals[k]) vec_add_scaled(u, vals[k], w.col_vec(slots[k]), p);
    if (!g.is_p_nilpotent(u)) return;
    cols_ambient.push_back(u);
    ads.push_back(g.ad_matrix(u));
    descend(j + 1);
    cols_ambient.pop_back();
    ads.pop_back();
  }

  void emit() {
    auto cert = p_vanishing_certificate(g, cols_ambient, opts.plane_scan_cap);
    if (!cert) return;
    Matrix span(g.dim(), r, g.modulus());
    for (size_t s = 0; s < r; ++s) span.set_col(s, cols_ambient[s]);
    PlanePoint pt = PlanePoint::from_span(span);
    std::vector<Vec> basis;
    for (size_t s = 0; s < r; ++s) basis.push_back(pt.sub.basis().col_vec(s));
    out.push_back(ElementaryPoint{pt, std::move(basis), *cert});
    ++stats.points;
  }
};

Matrix scan_space(const LieAlgebra& g, const EnumOptions& opts) {
  if (opts.within) {
    if (opts.within->ambient_dim() != g.dim())
      throw std::invalid_argument("scan subspace has wrong ambient dimension");
    return opts.within->basis();
  }
  return Matrix::identity(g.dim(), g.modulus());
}

}  // namespace

std::vector<ElementaryPoint> elementary_points_in_chart(const LieAlgebra& g, size_t r,
                                                        const std::vector<size_t>& sigma,
                                                        const EnumOptions& opts, EnumStats* stats) {
  if (r < 1) throw std::invalid_argument("plane dimension must be >= 1");
  Matrix w = scan_space(g, opts);
  std::vector<ElementaryPoint> out;
  EnumStats local;
  EnumStats& st = stats ? *stats : local;
  ChartSearch search{g, r, w, sigma, opts, st, out};
  search.run();
  std::sort(out.begin(), out.end(),
            [](const ElementaryPoint& a, const ElementaryPoint& b) { return a.plane.lex_less(b.plane); });
  return out;
}

std::vector<ElementaryPoint> elementary_points(const LieAlgebra& g, size_t r,
                                               const EnumOptions& opts, EnumStats* stats) {
  if (r < 1) throw std::invalid_argument("plane dimension must be >= 1");
  Matrix w = scan_space(g, opts);
  const size_t d = w.cols();
  std::vector<ElementaryPoint> out;
  EnumStats local;
  EnumStats& st = stats ? *stats : local;
  if (r > d) return out;
  for (const auto& sigma : pivot_patterns(d, r)) {
    ChartSearch search{g, r, w, sigma, opts, st, out};
    search.run();
  }
  std::sort(out.begin(), out.end(),
            [](const ElementaryPoint& a, const ElementaryPoint& b) { return a.plane.lex_less(b.plane); });
  return out;
}

Subspace centralizer(const LieAlgebra& g, const ElementaryPoint& pt) {
  const size_t n = g.dim();
  Matrix stacked(0, n, g.modulus());
  for (const Vec& u : pt.basis) stacked = stacked.vcat(g.ad_matrix(u));
  return Subspace::span(kernel_basis(stacked));
}

bool is_maximal_elementary(const LieAlgebra& g, const ElementaryPoint& pt, uint64_t guard) {
  Subspace c = centralizer(g, pt);
  if (c.dim() == pt.dim()) return true;  // centralizer always contains the plane
  for (const Vec& x : g.projective_points(c, /*nilpotent_only=*/true, guard))
    if (!pt.plane.sub.contains_vector(x)) return false;
  return true;
}

bool is_maximal_via_socle(const LieAlgebra& g, const ElementaryPoint& pt) {
  if (!g.basis_p_map_is_zero())
    throw std::invalid_argument(
        "socle maximality criterion needs a vanishing p-operation table on the basis of " +
        g.name());
  // Soc(eps*(g_ad)) is the common kernel of the ad operators.
  return centralizer(g, pt).dim() == pt.dim();
}

SymplecticQuotient heisenberg_form(const LieAlgebra& g) {
  const size_t n = g.dim();
  const uint32_t p = g.modulus();
  if (!g.basis_p_map_is_zero())
    throw std::invalid_argument(g.name() + " is not Heisenberg: nonzero p-operation table");
  Matrix stacked(0, n, p);
  for (size_t i = 0; i < n; ++i) stacked = stacked.vcat(g.ad_basis(i));
  Subspace center = Subspace::span(kernel_basis(stacked));
  if (center.dim() != 1)
    throw std::invalid_argument(g.name() + " is not Heisenberg: center dimension " +
                                std::to_string(center.dim()));
  Vec z = center.basis().col_vec(0);
  size_t c0 = center.pivot_rows()[0];
  SymplecticQuotient q;
  q.center = z;
  q.center_pivot = c0;
  for (size_t i = 0; i < n; ++i)
    if (i != c0) q.w_rows.push_back(i);
  const size_t wd = q.w_rows.size();
  q.form = Matrix(wd, wd, p);
  for (size_t a = 0; a < wd; ++a)
    for (size_t b = 0; b < wd; ++b) {
      const Vec& br = g.basis_bracket(q.w_rows[a], q.w_rows[b]);
      uint32_t coeff = br[c0];  // z is echelon with unit pivot
      // brackets must be central
      Vec check = vec_sub(br, vec_scale(coeff, z, p), p);
      if (!vec_is_zero(check))
        throw std::invalid_argument(g.name() + " is not Heisenberg: non-central bracket");
      q.form.set(a, b, coeff);
    }
  // alternating and nondegenerate
  for (size_t a = 0; a < wd; ++a)
    if (q.form(a, a) != 0) throw std::logic_error("alternating form has nonzero diagonal");
  if (rank(q.form) != wd)
    throw std::invalid_argument(g.name() + " is not Heisenberg: degenerate induced form");
  return q;
}

bool is_lagrangian_preimage(const LieAlgebra& g, const SymplecticQuotient& q,
                            const ElementaryPoint& pt) {
  const uint32_t p = g.modulus();
  if (!pt.plane.sub.contains_vector(q.center)) return false;
  const size_t half = q.w_rows.size() / 2;
  if (pt.dim() != half + 1) return false;
  // project the plane to the complement coordinates
  Matrix proj(q.w_rows.size(), pt.dim(), p);
  for (size_t s = 0; s < pt.dim(); ++s) {
    Vec x = pt.basis[s];
    uint32_t c = x[q.center_pivot];
    Vec red = vec_sub(x, vec_scale(c, q.center, p), p);
    for (size_t a = 0; a < q.w_rows.size(); ++a) proj.set(a, s, red[q.w_rows[a]]);
  }
  Subspace image = Subspace::span(proj);
  if (image.dim() != half) return false;
  Matrix gram = image.basis().transpose() * q.form * image.basis();
  return gram.is_zero();
}

uint64_t count_isotropic_subspaces(const Matrix& form, size_t k, uint64_t budget) {
  uint64_t count = 0;
  for_each_plane(
      form.rows(), k, form.modulus(),
      [&](const PlanePoint& pt) {
        Matrix gram = pt.sub.basis().transpose() * form * pt.sub.basis();
        if (gram.is_zero()) ++count;
        return true;
      },
      budget);
  return count;
}

uint64_t lagrangian_count(size_t m, uint32_t q) {
  uint64_t out = 1;
  uint64_t qi = 1;
  for (size_t i = 1; i <= m; ++i) {
    qi *= q;
    out *= qi + 1;
  }
  return out;
}

namespace {

Matrix invert(const Matrix& m) {
  const size_t n = m.rows();
  RrefResult r = rref(m.hcat(Matrix::identity(n, m.modulus())));
  if (r.rank != n) throw std::invalid_argument("matrix is singular");
  std::vector<size_t> rows(n), right(n);
  for (size_t i = 0; i < n; ++i) {
    rows[i] = i;
    right[i] = n + i;
  }
  return r.mat.submatrix(rows, right);
}

/// Left-null basis of the column span of k (rows L with L k = 0); the
/// identity when k has no columns.
Matrix left_null(const Matrix& k) {
  if (k.cols() == 0) return Matrix::identity(k.rows(), k.modulus());
  return kernel_basis(k.transpose()).transpose();
}

/// Extends the column set `flag` by the columns of `cand` that are not yet
/// in its span, in order.
void extend_flag(Matrix& flag, const Matrix& cand) {
  for (size_t c = 0; c < cand.cols(); ++c) {
    Matrix test = flag.hcat(Matrix::column(cand.col_vec(c), cand.modulus()));
    if (rank(test) > flag.cols()) flag = test;
  }
}

}  // namespace

Matrix engel_triangularize(const LieAlgebra& g, const ElementaryPoint& pt) {
  if (!g.has_realization())
    throw std::invalid_argument("triangularization needs a matrix realization");
  const size_t m = g.realization_dim();
  const uint32_t p = g.modulus();
  std::vector<Matrix> ops;
  for (const Vec& u : pt.basis) ops.push_back(g.realize(u));
  Matrix flag(m, 0, p);
  while (flag.cols() < m) {
    Matrix l = left_null(flag);
    Matrix stacked(0, m, p);
    for (const Matrix& u : ops) stacked = stacked.vcat(l * u);
    Subspace next = Subspace::span(kernel_basis(stacked));
    if (next.dim() <= flag.cols())
      throw std::logic_error("common kernel chain stalled; plane is not commuting-nilpotent");
    extend_flag(flag, next.basis());
  }
  return invert(flag);
}

Matrix sp_form(size_t h, uint32_t p) {
  Matrix s(2 * h, 2 * h, p);
  for (size_t i = 0; i < h; ++i) {
    s.set(i, h + i, 1);
    s.set_signed(h + i, i, -1);
  }
  return s;
}

bool is_strictly_upper(const Matrix& m) {
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j <= i && j < m.cols(); ++j)
      if (m(i, j)) return false;
  return true;
}

bool is_sp_member(const Matrix& m, size_t h) {
  Matrix s = sp_form(h, m.modulus());
  return (m.transpose() * s + s * m).is_zero();
}

bool in_sp_borel_nilradical(const Matrix& m, size_t h) {
  if (!is_sp_member(m, h)) return false;
  // reorder to the flag-adapted basis (e_1..e_h, f_h..f_1)
  std::vector<size_t> order(2 * h);
  for (size_t i = 0; i < h; ++i) order[i] = i;
  for (size_t t = 0; t < h; ++t) order[h + t] = 2 * h - 1 - t;
  return is_strictly_upper(m.submatrix(order, order));
}

Matrix symplectic_flag_triangularize(const LieAlgebra& g, const ElementaryPoint& pt) {
  if (!g.has_realization())
    throw std::invalid_argument("triangularization needs a matrix realization");
  const size_t m = g.realization_dim();
  if (m % 2 != 0) throw std::invalid_argument("not a symplectic realization");
  const size_t h = m / 2;
  const uint32_t p = g.modulus();
  Matrix s = sp_form(h, p);
  std::vector<Matrix> ops;
  for (const Vec& u : pt.basis) {
    Matrix r = g.realize(u);
    if (!is_sp_member(r, h)) throw std::invalid_argument("plane is not inside sp");
    ops.push_back(r);
  }

  // grow an invariant isotropic flag V_1 < ... < V_h
  Matrix flag(m, 0, p);
  for (size_t i = 0; i < h; ++i) {
    Matrix perp_basis = kernel_basis(flag.transpose() * s);  // V^perp
    Matrix l = left_null(flag);
    Matrix stacked(0, perp_basis.cols(), p);
    for (const Matrix& u : ops) stacked = stacked.vcat(l * u * perp_basis);
    Matrix ker = kernel_basis(stacked);
    Matrix cand(m, ker.cols(), p);
    for (size_t c = 0; c < ker.cols(); ++c) cand.set_col(c, perp_basis.apply(ker.col_vec(c)));
    Subspace w = Subspace::span(cand);
    // first candidate vector outside the current flag
    size_t before = flag.cols();
    for (size_t c = 0; c < w.dim() && flag.cols() == before; ++c) {
      Matrix test = flag.hcat(Matrix::column(w.basis().col_vec(c), p));
      if (rank(test) > before) flag = test;
    }
    if (flag.cols() == before)
      throw std::logic_error("isotropic flag stalled; plane is not commuting-nilpotent in sp");
  }

  // complete the Lagrangian flag basis b_1..b_h with c_1..c_h so that
  // <b_i, c_j> = delta_ij and <c_i, c_j> = 0
  Matrix pairing = flag.transpose() * s;  // h x m
  std::vector<Vec> cvecs(h);
  for (size_t j = 0; j < h; ++j) {
    Vec e(h, 0);
    e[j] = 1;
    auto x = solve(pairing, e);
    if (!x) throw std::logic_error("symplectic completion failed");
    cvecs[j] = *x;
  }
  auto form_of = [&](const Vec& a, const Vec& b) {
    Vec sb = s.apply(b);
    uint64_t acc = 0;
    for (size_t i = 0; i < m; ++i) acc += static_cast<uint64_t>(a[i]) * sb[i];
    return static_cast<uint32_t>(acc % p);
  };
  for (size_t i = 0; i < h; ++i)
    for (size_t j = i + 1; j < h; ++j) {
      uint32_t lam = mod_neg(form_of(cvecs[i], cvecs[j]), p);
      if (lam) vec_add_scaled(cvecs[i], lam, flag.col_vec(j), p);
    }
  Matrix pmat(m, m, p);
  for (size_t i = 0; i < h; ++i) pmat.set_col(i, flag.col_vec(i));
  for (size_t j = 0; j < h; ++j) pmat.set_col(h + j, cvecs[j]);
  if (!(pmat.transpose() * s * pmat == s))
    throw std::logic_error("symplectic basis completion violated the form");
  return invert(pmat);
}

ElementaryPoint elementary_point_from_span(const LieAlgebra& g, const Matrix& columns) {
  PlanePoint pt = PlanePoint::from_span(columns);
  PCertificate cert;
  if (!is_elementary(g, pt, &cert))
    throw std::invalid_argument("span is not an elementary subalgebra of " + g.name());
  std::vector<Vec> basis;
  for (size_t k = 0; k < pt.sub.dim(); ++k) basis.push_back(pt.sub.basis().col_vec(k));
  return ElementaryPoint{pt, basis, cert};
}

ElementaryPoint direct_sum_planes(const LieAlgebra& sum,
                                  const std::vector<const LieAlgebra*>& parts,
                                  const std::vector<ElementaryPoint>& pts) {
  if (parts.size() != pts.size()) throw std::invalid_argument("one plane per summand expected");
  size_t total = 0, rtot = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    total += parts[i]->dim();
    rtot += pts[i].dim();
  }
  if (total != sum.dim()) throw std::invalid_argument("summand dimensions do not add up");
  Matrix span(sum.dim(), rtot, sum.modulus());
  size_t off = 0, col = 0;
  for (size_t i = 0; i < parts.size(); ++i) {
    for (size_t s = 0; s < pts[i].dim(); ++s) {
      const Vec& u = pts[i].basis[s];
      for (size_t t = 0; t < u.size(); ++t) span.set(off + t, col, u[t]);
      ++col;
    }
    off += parts[i]->dim();
  }
  return elementary_point_from_span(sum, span);
}

ElementaryPoint adjoint_image(const LieAlgebra& g, const Matrix& conj, const ElementaryPoint& pt) {
  Matrix inv = invert(conj);
  Matrix span(g.dim(), pt.dim(), g.modulus());
  for (size_t s = 0; s < pt.dim(); ++s)
    span.set_col(s, g.coordinates_of(conj * g.realize(pt.basis[s]) * inv));
  return elementary_point_from_span(g, span);
}

}  // namespace elemvar
