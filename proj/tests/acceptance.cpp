// Acceptance suite: one criterion per section, one PASS/FAIL line each,
// with the wall-clock bound checked alongside the mathematical claim.

#include <chrono>
#include <deque>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "elemvar/catalog.hpp"
#include "elemvar/rankfn.hpp"

using namespace elemvar;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

struct Criterion {
  std::string label;
  Clock::time_point start = Clock::now();
  bool ok = true;
  std::string detail;

  explicit Criterion(std::string l) : label(std::move(l)) {}

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }

  void finish(double limit_ms) {
    double ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    if (ms >= limit_ms) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + std::string("time limit exceeded");
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << label << " (" << ms << " ms";
    if (!detail.empty()) std::cout << "; " << detail;
    std::cout << ")\n";
    if (!ok) ++g_failures;
  }
};

Matrix cols_from_indices(size_t dim, const std::vector<size_t>& idx, uint32_t p) {
  Matrix m(dim, idx.size(), p);
  for (size_t c = 0; c < idx.size(); ++c) m.set(idx[c], c, 1);
  return m;
}

/// u_{rows, n-rows} as a subspace of the strictly-upper coordinate basis of u_n.
Subspace block_subspace(const LieAlgebra& un, size_t n, size_t rows) {
  std::vector<size_t> idx;
  size_t k = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (i < rows && j >= rows) idx.push_back(k);
      ++k;
    }
  return canonical_subspace(cols_from_indices(un.dim(), idx, un.modulus()));
}

size_t nullspace_dim(const LieAlgebra& g, const ElementaryPoint& pt) {
  Matrix stk(0, g.realization_dim(), g.modulus());
  for (const Vec& u : pt.basis) stk = stk.vcat(g.realize(u));
  return g.realization_dim() - rank(stk);
}

Matrix invert(const Matrix& m) {
  RrefResult r = rref(m.hcat(Matrix::identity(m.rows(), m.modulus())));
  std::vector<size_t> rows(m.rows()), right(m.rows());
  for (size_t i = 0; i < m.rows(); ++i) rows[i] = i, right[i] = m.rows() + i;
  return r.mat.submatrix(rows, right);
}

// ---- criteria -------------------------------------------------------------

void criterion_1() {
  for (uint32_t p : {3u, 5u, 7u}) {
    Criterion c("criterion 1: |E(2, u_3)(F_" + std::to_string(p) + ")| = p + 1 = " +
                std::to_string(p + 1));
    LieAlgebra u3 = make_upper_nil(3, p);
    auto pts = elementary_points(u3, 2);
    c.require(pts.size() == p + 1, "count " + std::to_string(pts.size()));
    c.finish(1000);
  }
}

void criterion_2() {
  const std::pair<size_t, uint32_t> cases[] = {{2, 3}, {2, 5}, {3, 3}};
  for (auto [r, p] : cases) {
    uint64_t expect = 1;
    for (size_t i = 0; i < r; ++i) expect *= (p + 1);
    Criterion c("criterion 2: |E(" + std::to_string(r) + ", sl_2^" + std::to_string(r) + ")(F_" +
                std::to_string(p) + ")| = (p+1)^r = " + std::to_string(expect));
    std::vector<LieAlgebra> parts;
    for (size_t i = 0; i < r; ++i) parts.push_back(make_sl(2, p));
    LieAlgebra sum = direct_sum(parts);
    auto pts = elementary_points(sum, r);
    c.require(pts.size() == expect, "count " + std::to_string(pts.size()));
    c.finish(30000);
  }
}

void criterion_3() {
  Criterion c("criterion 3: the unique elementary 4-plane in u_4 over F_3 is u_{2,2}, by a full "
              "scan of all 11011 planes");
  LieAlgebra u4 = make_upper_nil(4, 3);
  size_t visited = 0;
  std::vector<PlanePoint> found;
  for_each_plane(6, 4, 3, [&](const PlanePoint& pt) {
    ++visited;
    if (is_elementary(u4, pt)) found.push_back(pt);
    return true;
  });
  c.require(visited == 11011, "visited " + std::to_string(visited));
  c.require(found.size() == 1, "found " + std::to_string(found.size()));
  if (found.size() == 1) c.require(found[0].sub == block_subspace(u4, 4, 2), "plane is not u_{2,2}");
  // the pruned scan returns the same single point
  auto pruned = elementary_points(u4, 4);
  c.require(pruned.size() == 1 && pruned[0].plane == found[0], "pruned scan disagrees");
  c.finish(10000);
}

void criterion_4() {
  Criterion c("criterion 4: exactly two elementary 6-planes in u_5 over F_3, u_{2,3} (nullspace "
              "dim 2) and u_{3,2} (nullspace dim 3)");
  LieAlgebra u5 = make_upper_nil(5, 3);
  auto pts = elementary_points(u5, 6);
  c.require(pts.size() == 2, "count " + std::to_string(pts.size()));
  if (pts.size() == 2) {
    Subspace u23 = block_subspace(u5, 5, 2);
    Subspace u32 = block_subspace(u5, 5, 3);
    size_t hits = 0;
    for (const auto& pt : pts) {
      if (pt.plane.sub == u23) {
        ++hits;
        c.require(nullspace_dim(u5, pt) == 2, "u_{2,3} nullspace dimension");
      } else if (pt.plane.sub == u32) {
        ++hits;
        c.require(nullspace_dim(u5, pt) == 3, "u_{3,2} nullspace dimension");
      }
    }
    c.require(hits == 2, "planes are not the two blocks");
    std::set<size_t> dims{nullspace_dim(u5, pts[0]), nullspace_dim(u5, pts[1])};
    c.require(dims == std::set<size_t>{2, 3}, "nullspace dimensions are not {2, 3}");
  }
  c.finish(300000);
}

void criterion_5() {
  const std::pair<size_t, uint32_t> cases[] = {{2, 3}, {2, 5}, {3, 3}};
  for (auto [n, p] : cases) {
    Criterion c("criterion 5: |E(" + std::to_string(n) + ", heis_" + std::to_string(n) + ")(F_" +
                std::to_string(p) + ")| equals the Lagrangian count of the symplectic quotient");
    LieAlgebra h = make_heisenberg(n, p);
    auto pts = elementary_points(h, n);
    SymplecticQuotient q = heisenberg_form(h);
    uint64_t oracle = count_isotropic_subspaces(q.form, n - 1);
    c.require(pts.size() == oracle, "count " + std::to_string(pts.size()) + " vs oracle " +
                                        std::to_string(oracle));
    c.require(oracle == lagrangian_count(n - 1, p), "oracle vs product formula");
    c.finish(60000);
  }
}

void criterion_6() {
  Criterion c("criterion 6: max elementary dimension in sp_4 over F_3 is 3 = n(n+1)/2, and every "
              "maximal point is symplectically conjugated into the standard nilradical");
  LieAlgebra sp = make_sp(4, 3);
  auto e3 = elementary_points(sp, 3);
  auto e4 = elementary_points(sp, 4);
  c.require(!e3.empty(), "no 3-dimensional points");
  // subspaces of elementary subalgebras are elementary, so an empty E(4)
  // rules out every dimension above 3
  c.require(e4.empty(), "found a 4-dimensional elementary subalgebra");
  Matrix s = sp_form(2, 3);
  for (const auto& pt : e3) {
    Matrix g = symplectic_flag_triangularize(sp, pt);
    if (!(g.transpose() * s * g == s)) {
      c.require(false, "conjugator is not symplectic");
      break;
    }
    Matrix gi = invert(g);
    for (const Vec& u : pt.basis)
      if (!in_sp_borel_nilradical(g * sp.realize(u) * gi, 2)) {
        c.require(false, "conjugate escapes the standard nilradical");
        break;
      }
  }
  c.finish(300000);
}

void criterion_7() {
  Criterion c("criterion 7: defining gl_3 over F_5, r = 2: rad_2 is 1 exactly on planes with a "
              "regular nilpotent, 0 otherwise");
  LieAlgebra gl = make_gl(3, 5);
  Module v = Module::defining(gl);
  auto pts = elementary_points(gl, 2);
  c.require(!pts.empty(), "no points");
  bool all_ok = true;
  size_t ones = 0;
  for (const auto& pt : pts) {
    size_t rd = rad_dim(v, pt, 2);
    if (rd > 1) all_ok = false;
    bool has_regular = false;
    Vec coeff(2, 0);
    for (size_t lead = 0; lead < 2 && !has_regular; ++lead) {
      std::fill(coeff.begin(), coeff.end(), 0);
      coeff[lead] = 1;
      while (true) {
        Vec x(gl.dim(), 0);
        for (size_t t = 0; t < 2; ++t)
          if (coeff[t]) vec_add_scaled(x, coeff[t], pt.basis[t], 5);
        if (rank(gl.realize(x)) == 2) {
          has_regular = true;
          break;
        }
        size_t k = lead + 1;
        while (k < 2 && coeff[k] + 1 == 5) coeff[k++] = 0;
        if (k == 2) break;
        ++coeff[k];
      }
    }
    if ((rd == 1) != has_regular) all_ok = false;
    if (rd == 1) ++ones;
  }
  c.require(all_ok, "value/characterization mismatch");
  c.require(ones > 0 && ones < pts.size(), "locus is empty or everything");
  c.finish(120000);
}

// ---- criterion 8: randomized property suites ------------------------------

struct Pool {
  std::deque<LieAlgebra> algebras;
  struct Entry {
    const LieAlgebra* g;
    Module module;
    std::vector<ElementaryPoint> points;
  };
  std::deque<Entry> entries;

  void add(const LieAlgebra& g, Module m, const std::vector<ElementaryPoint>& pts) {
    entries.push_back(Entry{&g, std::move(m), pts});
  }
};

Pool build_pool() {
  Pool pool;
  auto& A = pool.algebras;
  A.push_back(make_upper_nil(3, 3));   // 0
  A.push_back(make_upper_nil(4, 3));   // 1
  A.push_back(make_sl(2, 5));          // 2
  A.push_back(make_heisenberg(3, 3));  // 3
  A.push_back(make_abelian(2, 3));     // 4

  auto pts_u3_1 = elementary_points(A[0], 1);
  auto pts_u3_2 = elementary_points(A[0], 2);
  auto pts_u4_2 = elementary_points(A[1], 2);
  auto pts_sl2 = elementary_points(A[2], 1);
  auto pts_h_2 = elementary_points(A[3], 2);
  auto pts_h_3 = elementary_points(A[3], 3);
  auto pts_ab_1 = elementary_points(A[4], 1);
  auto pts_ab_2 = elementary_points(A[4], 2);

  pool.add(A[0], Module::defining(A[0]), pts_u3_2);
  pool.add(A[0], Module::adjoint(A[0]), pts_u3_2);
  pool.add(A[0], Module::adjoint(A[0]).dual(), pts_u3_1);
  pool.add(A[1], Module::defining(A[1]), pts_u4_2);
  pool.add(A[1], Module::adjoint(A[1]), pts_u4_2);
  pool.add(A[2], Module::defining(A[2]), pts_sl2);
  pool.add(A[2], Module::defining(A[2]).tensor(Module::defining(A[2])), pts_sl2);
  pool.add(A[2], Module::adjoint(A[2]), pts_sl2);
  pool.add(A[3], Module::defining(A[3]), pts_h_2);
  pool.add(A[3], Module::adjoint(A[3]), pts_h_3);
  pool.add(A[4], free_module(A[4], 1), pts_ab_2);
  pool.add(A[4], free_module(A[4], 1).direct_sum(Module::trivial(A[4])), pts_ab_1);
  return pool;
}

void criterion_8() {
  const uint64_t kSeed = 0x53454544u;  // fixed seed for all six suites
  Pool pool = build_pool();
  std::mt19937_64 rng(kSeed);
  auto pick_case = [&](const Pool& p) -> std::tuple<const Pool::Entry*, const ElementaryPoint*, size_t> {
    while (true) {
      const Pool::Entry& e = p.entries[rng() % p.entries.size()];
      if (e.points.empty()) continue;
      const ElementaryPoint& pt = e.points[rng() % e.points.size()];
      size_t jmax = (e.g->modulus() - 1) * pt.dim();
      size_t j = 1 + rng() % jmax;
      return {&e, &pt, j};
    }
  };

  {
    Criterion c("criterion 8a: duality rad_j(M) + soc_j(dual M) = dim M, 1000 random cases");
    size_t bad = 0;
    for (int t = 0; t < 1000; ++t) {
      auto [e, pt, j] = pick_case(pool);
      if (rad_dim(e->module, *pt, j) + soc_dim(e->module.dual(), *pt, j) != e->module.dim()) ++bad;
    }
    c.require(bad == 0, std::to_string(bad) + " failures");
    c.finish(120000);
  }
  {
    Criterion c("criterion 8b: radical dimensions decrease along j, 1000 random cases");
    size_t bad = 0;
    for (int t = 0; t < 1000; ++t) {
      auto [e, pt, j] = pick_case(pool);
      TupleRanks ranks(restrict_to(e->module, *pt));
      if (ranks.rad_dim(j) > ranks.rad_dim(j - 1)) ++bad;
      if (ranks.rad_dim(0) != e->module.dim()) ++bad;
    }
    c.require(bad == 0, std::to_string(bad) + " failures");
    c.finish(120000);
  }
  {
    Criterion c("criterion 8c: rank profiles survive basis changes of the plane, 1000 random cases");
    size_t bad = 0;
    for (int t = 0; t < 1000; ++t) {
      auto [e, pt, j] = pick_case(pool);
      const uint32_t p = e->g->modulus();
      RestrictedTuple tup = restrict_to(e->module, *pt);
      const size_t r = tup.ops.size();
      Matrix g(r, r, p);
      do {
        for (size_t i = 0; i < r; ++i)
          for (size_t k = 0; k < r; ++k) g.set(i, k, static_cast<uint32_t>(rng() % p));
      } while (rank(g) != r);
      RestrictedTuple moved = tup;
      for (size_t s = 0; s < r; ++s) {
        Matrix acc(tup.dim, tup.dim, p);
        for (size_t k = 0; k < r; ++k) acc = acc + tup.ops[k].scaled(g(k, s));
        moved.ops[s] = acc;
      }
      TupleRanks a(tup), b(moved);
      if (a.rad_dim(j) != b.rad_dim(j) || a.soc_dim(j) != b.soc_dim(j)) ++bad;
    }
    c.require(bad == 0, std::to_string(bad) + " failures");
    c.finish(120000);
  }
  {
    Criterion c("criterion 8d: chart operators equal restriction operators, 1000 random cases");
    size_t bad = 0;
    for (int t = 0; t < 1000; ++t) {
      auto [e, pt, j] = pick_case(pool);
      (void)j;
      RestrictedTuple tup = restrict_to(e->module, *pt);
      size_t s = 1 + rng() % tup.ops.size();
      if (!(theta_specialize(e->module, *pt, s) == tup.ops[s - 1])) ++bad;
    }
    c.require(bad == 0, std::to_string(bad) + " failures");
    c.finish(120000);
  }
  {
    Criterion c("criterion 8e: Jacobson p-power equals the matrix 5th power on gl_4 over F_5, "
                "1000 random cases");
    LieAlgebra gl = make_gl(4, 5);
    size_t bad = 0;
    for (int t = 0; t < 1000; ++t) {
      Vec x(gl.dim());
      for (auto& v : x) v = static_cast<uint32_t>(rng() % 5);
      if (!(gl.realize(gl.p_power(x)) == gl.realize(x).pow(5))) ++bad;
    }
    c.require(bad == 0, std::to_string(bad) + " failures");
    c.finish(120000);
  }
  {
    Criterion c("criterion 8f: canonical subspaces are GL_r-invariant, 1000 random cases");
    size_t bad = 0;
    for (int t = 0; t < 1000; ++t) {
      const uint32_t p = 3;
      size_t n = 3 + rng() % 4;
      size_t r = 1 + rng() % std::min<size_t>(3, n - 1);
      Matrix a(n, r, p);
      do {
        for (size_t i = 0; i < n; ++i)
          for (size_t k = 0; k < r; ++k) a.set(i, k, static_cast<uint32_t>(rng() % p));
      } while (rank(a) != r);
      Matrix g(r, r, p);
      do {
        for (size_t i = 0; i < r; ++i)
          for (size_t k = 0; k < r; ++k) g.set(i, k, static_cast<uint32_t>(rng() % p));
      } while (rank(g) != r);
      if (!(canonical_subspace(a) == canonical_subspace(a * g))) ++bad;
    }
    c.require(bad == 0, std::to_string(bad) + " failures");
    c.finish(120000);
  }
}

void criterion_9() {
  for (uint32_t p : {3u, 5u, 7u}) {
    Criterion c("criterion 9: power decompositions expand exactly, all monomials of degree < " +
                std::to_string(p) + " in <= 3 variables over F_" + std::to_string(p));
    size_t total = 0, good = 0;
    for (uint32_t d = 1; d < p; ++d)
      for (uint32_t e1 = 0; e1 <= d; ++e1)
        for (uint32_t e2 = 0; e1 + e2 <= d; ++e2) {
          std::vector<uint32_t> exps{e1, e2, d - e1 - e2};
          ++total;
          if (verify_power_decomposition(exps, power_decompose(exps, p), p)) ++good;
        }
    c.require(good == total, std::to_string(total - good) + " failures");
    c.finish(10000);
  }
}

void criterion_10() {
  Criterion c("criterion 10: socle and brute-force maximality agree on every point of "
              "E(2, u_4)(F_3)");
  LieAlgebra u4 = make_upper_nil(4, 3);
  auto pts = elementary_points(u4, 2);
  c.require(!pts.empty(), "no points");
  size_t agree = 0;
  for (const auto& pt : pts)
    if (is_maximal_elementary(u4, pt) == is_maximal_via_socle(u4, pt)) ++agree;
  c.require(agree == pts.size(),
            std::to_string(pts.size() - agree) + " disagreements out of " +
                std::to_string(pts.size()));
  c.finish(60000);
}

void criterion_11() {
  // The stated module "free(r=2,a=1) (+) k over g_a^(+2)" is read as the free
  // rank-one module of the first two generators carried over the enlarged
  // abelian algebra g_a^(+2) (+) k, the extra central generator acting as
  // zero; this is the reading under which some plane acts freely, the
  // hypothesis of the locus identity.
  Criterion c("criterion 11: below-max rad_1 locus = support locus = above-min soc_1 locus for "
              "the partially free module over the 3-generator abelian algebra at p = 3");
  LieAlgebra g = make_abelian(3, 3);
  RestrictedTuple base = free_tuple(2, 1, 3);
  std::vector<Matrix> ops{base.ops[0], base.ops[1], Matrix(base.dim, base.dim, 3)};
  Module m(g, ops, "free-xy");
  SurveyOptions opts;
  opts.with_maximal = false;
  RankSurvey sv = rank_survey(g, m, 2, opts);
  c.require(sv.profiles.size() == 13, "survey size " + std::to_string(sv.profiles.size()));
  auto radl = sv.rad_locus(1);
  auto socl = sv.soc_locus(1);
  auto supp = sv.support_locus();
  c.require(!supp.empty() && supp.size() < sv.profiles.size(),
            "support locus is empty or everything (the free-point hypothesis would fail)");
  c.require(radl == supp, "rad locus != support locus");
  c.require(socl == supp, "soc locus != support locus");
  c.finish(10000);
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  double total = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(g_failures))
            << " (" << total << " ms total)\n";
  return g_failures == 0 ? 0 : 1;
}
