#include "elemvar/liealg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace elemvar {

namespace {

std::string idx_label(const std::string& stem, size_t i, size_t j) {
  return stem + "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

Matrix unit_matrix(size_t m, size_t i, size_t j, uint32_t p) {
  Matrix e(m, m, p);
  e.set(i, j, 1);
  return e;
}

Vec flatten(const Matrix& m) {
  return m.data();
}

Subspace coordinate_subspace(size_t n, const std::vector<size_t>& indices, uint32_t p) {
  Matrix cols(n, indices.size(), p);
  for (size_t k = 0; k < indices.size(); ++k) cols.set(indices[k], k, 1);
  return Subspace::span(cols);
}

}  // namespace

struct LieAlgebra::CoordSolver {
  // B is the (m*m) x n matrix of vectorized realization basis elements.
  // pivot_rows index an invertible n x n row selection; inv is its inverse.
  Matrix b;
  std::vector<size_t> pivot_rows;
  Matrix inv;
};

LieAlgebra::LieAlgebra(std::string name, uint32_t p, std::vector<std::string> labels,
                       std::vector<Vec> bracket_table, std::vector<Vec> p_map,
                       std::vector<Matrix> realization)
    : name_(std::move(name)),
      p_(p),
      n_(labels.size()),
      labels_(std::move(labels)),
      bracket_table_(std::move(bracket_table)),
      p_map_(std::move(p_map)),
      realization_(std::move(realization)) {
  require_odd_prime(p_);
  if (n_ == 0) throw std::invalid_argument("empty Lie algebra basis");
  if (bracket_table_.size() != n_ * n_ || p_map_.size() != n_)
    throw std::invalid_argument("structure table size mismatch");
  if (!realization_.empty()) {
    if (realization_.size() != n_) throw std::invalid_argument("realization size mismatch");
    const size_t m = realization_[0].rows();
    for (const Matrix& r : realization_)
      if (r.rows() != m || r.cols() != m || r.modulus() != p_)
        throw std::invalid_argument("realization shape mismatch");
    // coordinatization solver: invertible row selection of the vectorized basis
    Matrix b(m * m, n_, p_);
    for (size_t i = 0; i < n_; ++i) b.set_col(i, flatten(realization_[i]));
    RrefResult rt = rref(b.transpose());
    if (rt.rank != n_) throw std::invalid_argument("realization matrices are linearly dependent");
    auto solver = std::make_shared<CoordSolver>();
    solver->b = b;
    solver->pivot_rows = rt.pivots;
    Matrix sq = b.submatrix(rt.pivots, [&] {
      std::vector<size_t> all(n_);
      for (size_t i = 0; i < n_; ++i) all[i] = i;
      return all;
    }());
    RrefResult inv_r = rref(sq.hcat(Matrix::identity(n_, p_)));
    if (inv_r.rank != n_) throw std::logic_error("pivot row selection not invertible");
    std::vector<size_t> right(n_);
    for (size_t i = 0; i < n_; ++i) right[i] = n_ + i;
    std::vector<size_t> rows(n_);
    for (size_t i = 0; i < n_; ++i) rows[i] = i;
    solver->inv = inv_r.mat.submatrix(rows, right);
    coord_solver_ = solver;
  }
  build_ad();
}

void LieAlgebra::build_ad() {
  ad_.clear();
  ad_.reserve(n_);
  for (size_t i = 0; i < n_; ++i) {
    Matrix m(n_, n_, p_);
    for (size_t j = 0; j < n_; ++j) m.set_col(j, basis_bracket(i, j));
    ad_.push_back(std::move(m));
  }
}

Matrix LieAlgebra::realize(const Vec& x) const {
  if (!has_realization()) throw std::invalid_argument(name_ + " has no matrix realization");
  if (x.size() != n_) throw std::invalid_argument("element dimension mismatch");
  const size_t m = realization_dim();
  Matrix out(m, m, p_);
  for (size_t i = 0; i < n_; ++i)
    if (x[i]) out = out + realization_[i].scaled(x[i]);
  return out;
}

Matrix LieAlgebra::ad_matrix(const Vec& x) const {
  if (x.size() != n_) throw std::invalid_argument("element dimension mismatch");
  Matrix m(n_, n_, p_);
  for (size_t i = 0; i < n_; ++i)
    if (x[i]) m = m + ad_[i].scaled(x[i]);
  return m;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  if (x.size() != n_ || y.size() != n_) throw std::invalid_argument("element dimension mismatch");
  Vec out(n_, 0);
  for (size_t i = 0; i < n_; ++i) {
    if (!x[i]) continue;
    Vec column = ad_[i].apply(y);
    vec_add_scaled(out, x[i], column, p_);
  }
  return out;
}

Vec LieAlgebra::jacobson_cross_terms(const Vec& x, const Vec& y) const {
  // i * s_i(x,y) is the t^{i-1} coefficient of ad(tx+y)^{p-1}(x).
  Matrix bx = ad_matrix(x);
  Matrix by = ad_matrix(y);
  std::vector<Vec> z(p_, Vec(n_, 0));  // degree-indexed coefficients
  z[0] = x;
  size_t top = 0;
  for (uint32_t step = 0; step < p_ - 1; ++step) {
    std::vector<Vec> nz(p_, Vec(n_, 0));
    for (size_t d = 0; d <= top; ++d) {
      Vec a = by.apply(z[d]);
      for (size_t i = 0; i < n_; ++i) nz[d][i] = mod_add(nz[d][i], a[i], p_);
      if (d + 1 < p_) {
        Vec b = bx.apply(z[d]);
        for (size_t i = 0; i < n_; ++i) nz[d + 1][i] = mod_add(nz[d + 1][i], b[i], p_);
      }
    }
    z = std::move(nz);
    top = std::min<size_t>(top + 1, p_ - 1);
  }
  Vec out(n_, 0);
  for (uint32_t i = 1; i <= p_ - 1; ++i)
    vec_add_scaled(out, mod_inv(i, p_), z[i - 1], p_);
  return out;
}

Vec LieAlgebra::p_power(const Vec& x) const {
  if (x.size() != n_) throw std::invalid_argument("element dimension mismatch");
  // peel one basis term at a time: (a x_i + y)^[p] = a x_i^[p] + y^[p] + cross,
  // using a^p = a on the prime field.
  std::vector<size_t> support;
  for (size_t i = 0; i < n_; ++i)
    if (x[i]) support.push_back(i);
  Vec acc(n_, 0);
  Vec tail = x;
  for (size_t k = 0; k < support.size(); ++k) {
    size_t i = support[k];
    uint32_t a = tail[i];
    vec_add_scaled(acc, a, p_map_[i], p_);
    Vec head(n_, 0);
    head[i] = a;
    tail[i] = 0;
    if (vec_is_zero(tail)) break;
    Vec cross = jacobson_cross_terms(head, tail);
    for (size_t t = 0; t < n_; ++t) acc[t] = mod_add(acc[t], cross[t], p_);
  }
  return acc;
}

bool LieAlgebra::is_p_nilpotent(const Vec& x) const {
  if (has_realization()) return realize(x).pow(p_).is_zero();
  return vec_is_zero(p_power(x));
}

bool LieAlgebra::basis_p_map_is_zero() const {
  for (const Vec& v : p_map_)
    if (!vec_is_zero(v)) return false;
  return true;
}

std::vector<Vec> LieAlgebra::nilpotent_cone_points(uint64_t guard) const {
  double total = 1;
  for (size_t i = 0; i < n_; ++i) total *= p_;
  if (total > static_cast<double>(guard))
    throw BudgetExceeded("nilpotent cone enumeration over " + name_ + " exceeds guard");
  std::vector<Vec> out;
  Vec x(n_, 0);
  while (true) {
    if (is_p_nilpotent(x)) out.push_back(x);
    size_t k = 0;
    while (k < n_ && x[k] + 1 == p_) x[k++] = 0;
    if (k == n_) break;
    ++x[k];
  }
  return out;
}

std::vector<Vec> LieAlgebra::projective_points(const Subspace& inside, bool nilpotent_only,
                                               uint64_t guard) const {
  if (inside.ambient_dim() != n_) throw std::invalid_argument("ambient dimension mismatch");
  const size_t d = inside.dim();
  double total = 1;
  for (size_t i = 0; i + 1 < d + 1; ++i) total *= p_;
  if (total > static_cast<double>(guard))
    throw BudgetExceeded("projective point enumeration exceeds guard");
  std::vector<Vec> out;
  // leading-one representatives: coefficient vectors with first nonzero = 1
  Vec c(d, 0);
  for (size_t lead = 0; lead < d; ++lead) {
    std::fill(c.begin(), c.end(), 0);
    c[lead] = 1;
    while (true) {
      Vec x = inside.basis().apply(c);
      if (!nilpotent_only || is_p_nilpotent(x)) out.push_back(x);
      size_t k = lead + 1;
      while (k < d && c[k] + 1 == p_) c[k++] = 0;
      if (k == d) break;
      ++c[k];
    }
  }
  return out;
}

Vec LieAlgebra::coordinates_of(const Matrix& realized) const {
  if (!coord_solver_) throw std::invalid_argument(name_ + " has no matrix realization");
  const CoordSolver& s = *coord_solver_;
  Vec flat = flatten(realized);
  Vec sel(n_);
  for (size_t i = 0; i < n_; ++i) sel[i] = flat[s.pivot_rows[i]];
  Vec coords = s.inv.apply(sel);
  // consistency: the matrix must lie in the span of the basis
  Vec back = s.b.apply(coords);
  if (back != flat) throw std::invalid_argument("matrix lies outside the algebra " + name_);
  return coords;
}

void LieAlgebra::validate() const {
  // antisymmetry
  for (size_t i = 0; i < n_; ++i) {
    if (!vec_is_zero(basis_bracket(i, i)))
      throw std::logic_error(name_ + ": [x,x] != 0 at basis index " + std::to_string(i));
    for (size_t j = i + 1; j < n_; ++j) {
      Vec s = vec_add(basis_bracket(i, j), basis_bracket(j, i), p_);
      if (!vec_is_zero(s))
        throw std::logic_error(name_ + ": antisymmetry fails at (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
    }
  }
  // Jacobi on basis triples
  for (size_t i = 0; i < n_; ++i)
    for (size_t j = i + 1; j < n_; ++j)
      for (size_t k = j + 1; k < n_; ++k) {
        Vec t1 = ad_[i].apply(basis_bracket(j, k));
        Vec t2 = ad_[j].apply(basis_bracket(k, i));
        Vec t3 = ad_[k].apply(basis_bracket(i, j));
        Vec sum = vec_add(vec_add(t1, t2, p_), t3, p_);
        if (!vec_is_zero(sum))
          throw std::logic_error(name_ + ": Jacobi fails at (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) + ")");
      }
  // restrictedness: ad(x_i^[p]) = ad(x_i)^p
  for (size_t i = 0; i < n_; ++i) {
    if (ad_matrix(p_map_[i]) != ad_[i].pow(p_))
      throw std::logic_error(name_ + ": ad(x^[p]) != ad(x)^p at basis index " + std::to_string(i));
  }
  // realization agreement
  if (has_realization()) {
    for (size_t i = 0; i < n_; ++i) {
      if (realization_[i].pow(p_) != realize(p_map_[i]))
        throw std::logic_error(name_ + ": realization p-power mismatch at " + std::to_string(i));
      for (size_t j = i + 1; j < n_; ++j) {
        if (realization_[i].commutator_with(realization_[j]) != realize(basis_bracket(i, j)))
          throw std::logic_error(name_ + ": realization bracket mismatch at (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

// ---- generic construction from a realization -----------------------------

namespace {

/// Builds bracket and p-power tables for a family of realizing matrices that
/// is closed under commutators and p-th powers.
LieAlgebra from_realization(std::string name, uint32_t p, std::vector<std::string> labels,
                            std::vector<Matrix> realization) {
  const size_t n = labels.size();
  // temporary algebra object only for its coordinate solver
  std::vector<Vec> zero_table(n * n, Vec(n, 0));
  std::vector<Vec> zero_pmap(n, Vec(n, 0));
  LieAlgebra probe("probe", p, labels, zero_table, zero_pmap, realization);
  std::vector<Vec> table(n * n, Vec(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      Vec c = probe.coordinates_of(realization[i].commutator_with(realization[j]));
      table[i * n + j] = c;
      Vec neg(n);
      for (size_t t = 0; t < n; ++t) neg[t] = mod_neg(c[t], p);
      table[j * n + i] = neg;
    }
  std::vector<Vec> pmap(n);
  for (size_t i = 0; i < n; ++i) pmap[i] = probe.coordinates_of(realization[i].pow(p));
  LieAlgebra out(std::move(name), p, std::move(labels), std::move(table), std::move(pmap),
                 std::move(realization));
  out.validate();
  return out;
}

}  // namespace

LieAlgebra make_gl(size_t n, uint32_t p) {
  if (n < 1) throw std::invalid_argument("gl(n) needs n >= 1");
  std::vector<std::string> labels;
  std::vector<Matrix> realization;
  std::vector<size_t> nilrad;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i < j) nilrad.push_back(labels.size());
      labels.push_back(idx_label("E", i, j));
      realization.push_back(unit_matrix(n, i, j, p));
    }
  LieAlgebra g = from_realization("gl:" + std::to_string(n), p, labels, realization);
  g.set_borel_nilradical(coordinate_subspace(g.dim(), nilrad, p));
  return g;
}

LieAlgebra make_sl(size_t n, uint32_t p) {
  if (n < 2) throw std::invalid_argument("sl(n) needs n >= 2");
  std::vector<std::string> labels;
  std::vector<Matrix> realization;
  std::vector<size_t> nilrad;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (i < j) nilrad.push_back(labels.size());
      labels.push_back(idx_label("E", i, j));
      realization.push_back(unit_matrix(n, i, j, p));
    }
  for (size_t i = 0; i + 1 < n; ++i) {
    labels.push_back("H[" + std::to_string(i + 1) + "]");
    Matrix h(n, n, p);
    h.set(i, i, 1);
    h.set_signed(i + 1, i + 1, -1);
    realization.push_back(h);
  }
  LieAlgebra g = from_realization("sl:" + std::to_string(n), p, labels, realization);
  g.set_borel_nilradical(coordinate_subspace(g.dim(), nilrad, p));
  return g;
}

LieAlgebra make_sp(size_t two_m, uint32_t p) {
  if (two_m < 2 || two_m % 2 != 0) throw std::invalid_argument("sp(2m) needs even size >= 2");
  const size_t m = two_m / 2;
  std::vector<std::string> labels;
  std::vector<Matrix> realization;
  std::vector<size_t> nilrad;
  // A-part: X_ij = E_ij - E_{m+j, m+i}
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) {
      if (i < j) nilrad.push_back(labels.size());
      labels.push_back(idx_label("X", i, j));
      Matrix x(two_m, two_m, p);
      x.set(i, j, 1);
      x.set_signed(m + j, m + i, -1);
      realization.push_back(x);
    }
  // B-part (symmetric upper block): Y_ij = E_{i,m+j} + E_{j,m+i}, Y_ii = E_{i,m+i}
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i; j < m; ++j) {
      nilrad.push_back(labels.size());
      labels.push_back(idx_label("Y", i, j));
      Matrix y(two_m, two_m, p);
      y.set(i, m + j, 1);
      if (i != j) y.set(j, m + i, 1);
      realization.push_back(y);
    }
  // C-part (symmetric lower block): Z_ij = E_{m+i,j} + E_{m+j,i}, Z_ii = E_{m+i,i}
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i; j < m; ++j) {
      labels.push_back(idx_label("Z", i, j));
      Matrix z(two_m, two_m, p);
      z.set(m + i, j, 1);
      if (i != j) z.set(m + j, i, 1);
      realization.push_back(z);
    }
  LieAlgebra g = from_realization("sp:" + std::to_string(two_m), p, labels, realization);
  g.set_borel_nilradical(coordinate_subspace(g.dim(), nilrad, p));
  return g;
}

LieAlgebra make_upper_nil(size_t n, uint32_t p) {
  if (n < 2) throw std::invalid_argument("strictly upper triangular algebra needs n >= 2");
  std::vector<std::string> labels;
  std::vector<Matrix> realization;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      labels.push_back(idx_label("E", i, j));
      realization.push_back(unit_matrix(n, i, j, p));
    }
  LieAlgebra g = from_realization("un:" + std::to_string(n), p, labels, realization);
  std::vector<size_t> all(g.dim());
  for (size_t i = 0; i < g.dim(); ++i) all[i] = i;
  g.set_borel_nilradical(coordinate_subspace(g.dim(), all, p));
  return g;
}

namespace {

std::vector<size_t> block_ids(size_t n, const std::vector<size_t>& roots_kept) {
  std::set<size_t> kept(roots_kept.begin(), roots_kept.end());
  for (size_t r : kept)
    if (r < 1 || r > n - 1)
      throw std::invalid_argument("simple root index out of range 1.." + std::to_string(n - 1));
  std::vector<size_t> block(n, 0);
  size_t b = 0;
  for (size_t i = 1; i < n; ++i) {
    if (!kept.count(i)) ++b;  // a cut between rows i and i+1
    block[i] = b;
  }
  return block;
}

}  // namespace

LieAlgebra make_parabolic_nilradical(size_t n, const std::vector<size_t>& roots_kept, uint32_t p) {
  std::vector<size_t> block = block_ids(n, roots_kept);
  std::vector<std::string> labels;
  std::vector<Matrix> realization;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (block[i] < block[j]) {
        labels.push_back(idx_label("E", i, j));
        realization.push_back(unit_matrix(n, i, j, p));
      }
  if (labels.empty())
    throw std::invalid_argument("parabolic nilradical is zero (all simple roots kept)");
  std::string jtxt;
  for (size_t r : roots_kept) jtxt += (jtxt.empty() ? "" : ",") + std::to_string(r);
  LieAlgebra g =
      from_realization("parab-nilrad:" + std::to_string(n) + ":J=" + jtxt, p, labels, realization);
  std::vector<size_t> all(g.dim());
  for (size_t i = 0; i < g.dim(); ++i) all[i] = i;
  g.set_borel_nilradical(coordinate_subspace(g.dim(), all, p));
  return g;
}

LieAlgebra make_block_nilradical(size_t r, size_t s, uint32_t p) {
  if (r < 1 || s < 1) throw std::invalid_argument("u_{r,s} needs r,s >= 1");
  const size_t n = r + s;
  std::vector<size_t> kept;
  for (size_t i = 1; i < n; ++i)
    if (i != r) kept.push_back(i);
  LieAlgebra g = make_parabolic_nilradical(n, kept, p);
  std::vector<Vec> table;
  table.reserve(g.dim() * g.dim());
  for (size_t i = 0; i < g.dim(); ++i)
    for (size_t j = 0; j < g.dim(); ++j) table.push_back(g.basis_bracket(i, j));
  std::vector<Vec> pmap;
  for (size_t i = 0; i < g.dim(); ++i) pmap.push_back(g.basis_p_power(i));
  LieAlgebra out("unr:" + std::to_string(r) + "," + std::to_string(s), p, g.labels(), table, pmap,
                 g.realization());
  out.set_borel_nilradical(*g.borel_nilradical());
  return out;
}

LieAlgebra make_heisenberg(size_t n, uint32_t p) {
  if (n < 2) throw std::invalid_argument("heisenberg(n) needs n >= 2");
  const size_t m = n + 1;  // realized inside gl_{n+1}
  std::vector<std::string> labels;
  std::vector<Matrix> realization;
  for (size_t i = 1; i < n; ++i) {
    labels.push_back("x[" + std::to_string(i) + "]");
    realization.push_back(unit_matrix(m, 0, i, p));
  }
  for (size_t i = 1; i < n; ++i) {
    labels.push_back("y[" + std::to_string(i) + "]");
    realization.push_back(unit_matrix(m, i, n, p));
  }
  labels.push_back("y[" + std::to_string(n) + "]");
  realization.push_back(unit_matrix(m, 0, n, p));
  LieAlgebra g = from_realization("heis:" + std::to_string(n), p, labels, realization);
  std::vector<size_t> all(g.dim());
  for (size_t i = 0; i < g.dim(); ++i) all[i] = i;
  g.set_borel_nilradical(coordinate_subspace(g.dim(), all, p));
  return g;
}

LieAlgebra make_abelian(size_t n, uint32_t p) {
  if (n < 1) throw std::invalid_argument("abelian(n) needs n >= 1");
  std::vector<std::string> labels;
  for (size_t i = 0; i < n; ++i) labels.push_back("t[" + std::to_string(i + 1) + "]");
  std::vector<Vec> table(n * n, Vec(n, 0));
  std::vector<Vec> pmap(n, Vec(n, 0));
  LieAlgebra g("abelian:" + std::to_string(n), p, labels, table, pmap);
  g.validate();
  return g;
}

LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of no algebras");
  const uint32_t p = parts[0].modulus();
  size_t n = 0;
  bool all_realized = true;
  size_t mtot = 0;
  for (const LieAlgebra& g : parts) {
    if (g.modulus() != p) throw std::invalid_argument("direct_sum modulus mismatch");
    n += g.dim();
    all_realized = all_realized && g.has_realization();
    mtot += g.realization_dim();
  }
  std::vector<std::string> labels;
  std::vector<Vec> table(n * n, Vec(n, 0));
  std::vector<Vec> pmap(n, Vec(n, 0));
  std::vector<Matrix> realization;
  std::string name;
  size_t off = 0, moff = 0;
  bool have_nilrad = true;
  std::vector<size_t> nilrad_idx;
  for (size_t s = 0; s < parts.size(); ++s) {
    const LieAlgebra& g = parts[s];
    name += (s ? "+" : "") + g.name();
    for (size_t i = 0; i < g.dim(); ++i)
      labels.push_back("s" + std::to_string(s + 1) + ":" + g.labels()[i]);
    for (size_t i = 0; i < g.dim(); ++i) {
      for (size_t j = 0; j < g.dim(); ++j) {
        const Vec& c = g.basis_bracket(i, j);
        for (size_t t = 0; t < g.dim(); ++t) table[(off + i) * n + (off + j)][off + t] = c[t];
      }
      const Vec& pm = g.basis_p_power(i);
      for (size_t t = 0; t < g.dim(); ++t) pmap[off + i][off + t] = pm[t];
    }
    if (all_realized) {
      for (size_t i = 0; i < g.dim(); ++i) {
        Matrix big(mtot, mtot, p);
        const Matrix& r = g.realization()[i];
        for (size_t a = 0; a < r.rows(); ++a)
          for (size_t b = 0; b < r.cols(); ++b) big.set(moff + a, moff + b, r(a, b));
        realization.push_back(std::move(big));
      }
    }
    if (g.borel_nilradical()) {
      const Subspace& bn = *g.borel_nilradical();
      for (size_t k = 0; k < bn.dim(); ++k) {
        Vec col = bn.basis().col_vec(k);
        for (size_t t = 0; t < col.size(); ++t)
          if (col[t]) nilrad_idx.push_back(off + t);  // coordinate subspaces only
      }
    } else {
      have_nilrad = false;
    }
    off += g.dim();
    moff += g.realization_dim();
  }
  LieAlgebra out(name, p, labels, table, pmap, realization);
  out.validate();
  if (have_nilrad) out.set_borel_nilradical(coordinate_subspace(n, nilrad_idx, p));
  return out;
}

LieAlgebra make_semidirect(const LieAlgebra& h, const std::vector<Matrix>& action, size_t w_dim) {
  if (action.size() != h.dim()) throw std::invalid_argument("semidirect: one action matrix per h basis vector");
  const uint32_t p = h.modulus();
  for (const Matrix& a : action)
    if (a.rows() != w_dim || a.cols() != w_dim || a.modulus() != p)
      throw std::invalid_argument("semidirect: action matrix shape mismatch");
  const size_t n = w_dim + h.dim();
  std::vector<std::string> labels;
  for (size_t i = 0; i < w_dim; ++i) labels.push_back("w[" + std::to_string(i + 1) + "]");
  for (size_t i = 0; i < h.dim(); ++i) labels.push_back("h:" + h.labels()[i]);
  std::vector<Vec> table(n * n, Vec(n, 0));
  std::vector<Vec> pmap(n, Vec(n, 0));
  for (size_t i = 0; i < h.dim(); ++i) {
    for (size_t a = 0; a < w_dim; ++a) {
      // [h_i, w_a] = action_i e_a
      Vec col = action[i].col_vec(a);
      for (size_t t = 0; t < w_dim; ++t) {
        table[(w_dim + i) * n + a][t] = col[t];
        table[a * n + (w_dim + i)][t] = mod_neg(col[t], p);
      }
    }
    for (size_t j = 0; j < h.dim(); ++j) {
      const Vec& c = h.basis_bracket(i, j);
      for (size_t t = 0; t < h.dim(); ++t) table[(w_dim + i) * n + (w_dim + j)][w_dim + t] = c[t];
    }
    const Vec& pm = h.basis_p_power(i);
    for (size_t t = 0; t < h.dim(); ++t) pmap[w_dim + i][w_dim + t] = pm[t];
  }
  LieAlgebra out("semidirect(" + h.name() + ")", p, labels, table, pmap);
  out.validate();
  return out;
}

LieAlgebra make_central_extension_gl(size_t two_m, const Vec& phi, uint32_t p) {
  LieAlgebra gl = make_gl(two_m, p);
  if (phi.size() != gl.dim()) throw std::invalid_argument("phi must have one coordinate per gl basis vector");
  const size_t n = gl.dim() + 1;  // central z first
  std::vector<std::string> labels;
  labels.push_back("z");
  for (const std::string& l : gl.labels()) labels.push_back(l);
  std::vector<Vec> table(n * n, Vec(n, 0));
  std::vector<Vec> pmap(n, Vec(n, 0));
  for (size_t i = 0; i < gl.dim(); ++i) {
    for (size_t j = 0; j < gl.dim(); ++j) {
      const Vec& c = gl.basis_bracket(i, j);
      for (size_t t = 0; t < gl.dim(); ++t) table[(1 + i) * n + (1 + j)][1 + t] = c[t];
    }
    const Vec& pm = gl.basis_p_power(i);
    pmap[1 + i][0] = phi[i] % p;
    for (size_t t = 0; t < gl.dim(); ++t) pmap[1 + i][1 + t] = pm[t];
  }
  LieAlgebra out("gtilde:" + std::to_string(two_m), p, labels, table, pmap);
  out.validate();
  return out;
}

LieAlgebra make_g1n(size_t n, uint32_t p) {
  if (n < 1) throw std::invalid_argument("g1n needs n >= 1");
  const size_t m = n + 1;
  std::vector<std::string> labels;
  std::vector<Matrix> realization;
  std::vector<size_t> nilrad;
  for (size_t i = 0; i < n; ++i) {
    nilrad.push_back(labels.size());
    labels.push_back("v[" + std::to_string(i + 1) + "]");
    realization.push_back(unit_matrix(m, i, n, p));
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i < j) nilrad.push_back(labels.size());
      labels.push_back(idx_label("E", i, j));
      realization.push_back(unit_matrix(m, i, j, p));
    }
  LieAlgebra g = from_realization("g1n:" + std::to_string(n), p, labels, realization);
  g.set_borel_nilradical(coordinate_subspace(g.dim(), nilrad, p));
  return g;
}

bool com_check_nilradical(size_t n, const std::vector<size_t>& roots_kept, uint32_t p) {
  std::vector<size_t> block = block_ids(n, roots_kept);
  std::vector<size_t> nil_idx, par_idx;
  LieAlgebra gl = make_gl(n, p);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      size_t idx = i * n + j;
      if (block[i] < block[j]) nil_idx.push_back(idx);
      if (block[i] <= block[j]) par_idx.push_back(idx);
    }
  if (nil_idx.empty()) return true;  // p = g, nothing to span
  Matrix brackets(gl.dim(), nil_idx.size() * par_idx.size(), p);
  size_t c = 0;
  for (size_t u : nil_idx)
    for (size_t q : par_idx) {
      brackets.set_col(c++, gl.basis_bracket(u, q));
    }
  Subspace span = Subspace::span(brackets);
  Subspace nil = coordinate_subspace(gl.dim(), nil_idx, p);
  return span == nil;
}

}  // namespace elemvar
