#include <set>

#include "doctest.h"
#include "elemvar/rankfn.hpp"
#include "testutil.hpp"

using namespace elemvar;
using elemvar::test::Rng;

namespace {

Matrix cols_from_indices(size_t dim, const std::vector<size_t>& idx, uint32_t p) {
  Matrix m(dim, idx.size(), p);
  for (size_t c = 0; c < idx.size(); ++c) m.set(idx[c], c, 1);
  return m;
}

Module xy_free_over_abelian3(uint32_t p) {
  // free rank-1 module of the first two generators, third acting as zero
  RestrictedTuple base = free_tuple(2, 1, p);
  static std::vector<LieAlgebra> keep;  // Module stores a reference
  keep.push_back(make_abelian(3, p));
  std::vector<Matrix> ops{base.ops[0], base.ops[1], Matrix(base.dim, base.dim, p)};
  return Module(keep.back(), ops, "free-xy");
}

}  // namespace

TEST_CASE("theta on the two charts of a pencil of lines") {
  // two commuting generators, theta over a chart with nonzero leading entry
  LieAlgebra g = make_abelian(2, 5);
  RestrictedTuple fr = free_tuple(2, 1, 5);
  Module m(g, fr.ops, "free");
  // the line [1 : b] in the first chart
  for (uint32_t b = 0; b < 5; ++b) {
    Matrix span(2, 1, 5);
    span.set(0, 0, 1);
    span.set(1, 0, b);
    auto pt = elementary_point_from_span(g, span);
    Matrix theta = theta_specialize(m, pt, 1);
    CHECK(theta == m.ops()[0] + m.ops()[1].scaled(b));
  }
  // a coordinate plane picks out the corresponding operators
  auto full = elementary_point_from_span(g, Matrix::identity(2, 5));
  CHECK(theta_specialize(m, full, 1) == m.ops()[0]);
  CHECK(theta_specialize(m, full, 2) == m.ops()[1]);
  CHECK_THROWS_AS(theta_specialize(m, full, 3), std::invalid_argument);
}

TEST_CASE("theta agrees with the restriction operators everywhere") {
  LieAlgebra gl = make_gl(3, 3);
  Module v = Module::defining(gl);
  Module ad = Module::adjoint(gl);
  size_t checked = 0;
  for (const auto& pt : elementary_points(gl, 2)) {
    RestrictedTuple t = restrict_to(v, pt);
    for (size_t s = 1; s <= 2; ++s) CHECK(theta_specialize(v, pt, s) == t.ops[s - 1]);
    RestrictedTuple ta = restrict_to(ad, pt);
    for (size_t s = 1; s <= 2; ++s) CHECK(theta_specialize(ad, pt, s) == ta.ops[s - 1]);
    if (++checked >= 100) break;
  }
}

TEST_CASE("radical dimensions of the free tuple count monomials") {
  TupleRanks ranks(free_tuple(1, 1, 3));
  CHECK(ranks.rad_dim(0) == 3);
  CHECK(ranks.rad_dim(1) == 2);
  CHECK(ranks.rad_dim(2) == 1);
  CHECK(ranks.soc_dim(1) == 1);
  TupleRanks r2(free_tuple(2, 1, 3));
  CHECK(r2.rad_dim(2) == 6);  // monomials of degree >= 2 in the 9-dim truncated ring
  CHECK(r2.rad_dim(4) == 1);
  CHECK(r2.soc_dim(1) == 1);
  CHECK_THROWS_AS(r2.rad_dim(5), std::invalid_argument);
}

TEST_CASE("degree-2 radical of the defining gl_3 module detects regular nilpotents") {
  LieAlgebra gl = make_gl(3, 5);
  Module v = Module::defining(gl);
  // regular pair (X, X^2): radical dimension 1 at degree 2
  Matrix span(9, 2, 5);
  span.set(1, 0, 1);  // E12
  span.set(5, 0, 1);  // E23  -> X = E12 + E23
  span.set(2, 1, 1);  // X^2 = E13
  auto reg = elementary_point_from_span(gl, span);
  CHECK(rad_dim(v, reg, 2) == 1);
  // the top-right block contains no regular nilpotent: radical vanishes
  auto blk = elementary_point_from_span(gl, cols_from_indices(9, {1, 2}, 5));
  CHECK(rad_dim(v, blk, 2) == 0);
}

TEST_CASE("radical/socle duality on random survey points") {
  LieAlgebra u3 = make_upper_nil(3, 3);
  Module ad = Module::adjoint(u3);
  Module add = ad.dual();
  for (const auto& pt : elementary_points(u3, 2)) {
    for (size_t j = 1; j <= 4; ++j)
      CHECK(rad_dim(ad, pt, j) + soc_dim(add, pt, j) == ad.dim());
  }
}

TEST_CASE("rank profiles are invariant under basis changes of the plane") {
  LieAlgebra gl = make_gl(3, 3);
  Module v = Module::defining(gl);
  auto pts = elementary_points(gl, 2);
  Rng rng(501);
  size_t checked = 0;
  for (const auto& pt : pts) {
    if (++checked > 25) break;
    RestrictedTuple t = restrict_to(v, pt);
    Matrix g = test::random_invertible(rng, 2, 3);
    RestrictedTuple moved = t;
    for (size_t s = 0; s < 2; ++s) {
      Matrix acc(v.dim(), v.dim(), 3);
      for (size_t k = 0; k < 2; ++k) acc = acc + t.ops[k].scaled(g(k, s));
      moved.ops[s] = acc;
    }
    moved.validate();
    TupleRanks a(t), b(moved);
    for (size_t j = 1; j <= a.top_degree(); ++j) {
      CHECK(a.rad_dim(j) == b.rad_dim(j));
      CHECK(a.soc_dim(j) == b.soc_dim(j));
    }
  }
}

TEST_CASE("jordan types of model operators") {
  // regular nilpotent on the defining module of gl_4, p = 5 >= 4
  LieAlgebra gl = make_gl(4, 5);
  Matrix x(4, 4, 5);
  x.set(0, 1, 1);
  x.set(1, 2, 1);
  x.set(2, 3, 1);
  CHECK(jordan_type(x) == std::vector<size_t>{4});
  CHECK(jordan_type(Matrix(3, 3, 5)) == std::vector<size_t>{1, 1, 1});
  RestrictedTuple t = free_tuple(1, 2, 5);
  CHECK(jordan_type(t.ops[0]) == std::vector<size_t>{5, 5});
  CHECK_THROWS_AS(jordan_type(Matrix::identity(2, 5)), std::invalid_argument);
}

TEST_CASE("free restriction rank detects free modules and their multiplicity") {
  for (size_t a = 1; a <= 3; ++a) {
    FreeRank fr = free_restriction_rank(free_tuple(2, a, 3));
    CHECK(fr.free);
    CHECK(fr.rank == a);
  }
  // the trivial module is never free for r >= 1
  LieAlgebra u3 = make_upper_nil(3, 3);
  auto pts = elementary_points(u3, 2);
  FreeRank fr = free_restriction_rank(restrict_to(Module::trivial(u3), pts[0]));
  CHECK_FALSE(fr.free);
  CHECK(fr.rank == 0);
}

TEST_CASE("support of the defining sl_2 module is the whole nilpotent line bundle") {
  LieAlgebra sl = make_sl(2, 3);
  Module v = Module::defining(sl);
  auto supp = support_locus(sl, v, 1);
  CHECK(supp.size() == elementary_points(sl, 1).size());  // sigma = u^2 = 0 on a 2-dim module
}

TEST_CASE("projective modules have empty support") {
  LieAlgebra ab = make_abelian(2, 3);
  Module fr = free_module(ab, 1);
  CHECK(support_locus(ab, fr, 1).empty());
  CHECK(support_locus(ab, fr, 2).empty());
}

TEST_CASE("the trivial module is supported everywhere") {
  LieAlgebra ab = make_abelian(2, 3);
  Module k = Module::trivial(ab);
  CHECK(support_locus(ab, k, 1).size() == 4);
}

TEST_CASE("survey of the adjoint u_3 module: duality and monotonicity per point") {
  LieAlgebra u3 = make_upper_nil(3, 3);
  Module ad = Module::adjoint(u3);
  SurveyOptions opts;
  opts.with_maximal = true;
  RankSurvey sv = rank_survey(u3, ad, 2, opts);
  CHECK(sv.profiles.size() == 4);
  Module add = ad.dual();
  for (const RankProfile& prof : sv.profiles) {
    for (size_t j = 1; j < sv.jmax; ++j) {
      CHECK(prof.rad[j] <= prof.rad[j - 1]);   // radical filtration shrinks
      CHECK(prof.soc[j - 1] <= prof.soc[j]);   // socle filtration grows
    }
    for (size_t j = 1; j <= sv.jmax; ++j)
      CHECK(prof.rad[j - 1] + soc_dim(add, prof.point, j) == ad.dim());
    CHECK(prof.maximal);  // all points of a projective line of planes are maximal in u_3
  }
}

TEST_CASE("free modules have constant rank flags across the survey") {
  LieAlgebra ab = make_abelian(2, 3);
  Module fr = free_module(ab, 1);
  SurveyOptions opts;
  opts.with_maximal = false;
  RankSurvey sv = rank_survey(ab, fr, 1, opts);
  CHECK(sv.profiles.size() == 4);
  for (size_t j = 0; j < sv.jmax; ++j) {
    CHECK(sv.constant_rad[j]);
    CHECK(sv.constant_soc[j]);
  }
}

TEST_CASE("locus identities for a partially free module") {
  Module m = xy_free_over_abelian3(3);
  SurveyOptions opts;
  opts.with_maximal = false;
  RankSurvey sv = rank_survey(m.algebra(), m, 2, opts);
  CHECK(sv.profiles.size() == 13);
  auto radl = sv.rad_locus(1);
  auto socl = sv.soc_locus(1);
  auto supp = sv.support_locus();
  CHECK(radl.size() == 4);
  CHECK(radl == supp);
  CHECK(socl == supp);
}

TEST_CASE("power decomposition: single variables and the classical xy example") {
  auto terms = power_decompose({1, 0}, 5);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].coeff == 1);
  CHECK(terms[0].form == Vec{1, 0});
  // xy as a combination of y^2, (x+y)^2, (2x+y)^2
  auto xy = power_decompose({1, 1}, 5);
  CHECK(verify_power_decomposition({1, 1}, xy, 5));
  std::set<Vec> forms;
  for (const auto& t : xy) forms.insert(t.form);
  CHECK(forms == std::set<Vec>{{0, 1}, {1, 1}, {2, 1}});
}

TEST_CASE("power decomposition expands exactly for random cubic monomials") {
  for (auto exps : std::vector<std::vector<uint32_t>>{{3, 0, 0}, {2, 1, 0}, {1, 1, 1}, {0, 2, 1}}) {
    auto terms = power_decompose(exps, 5);
    CHECK(verify_power_decomposition(exps, terms, 5));
  }
}

TEST_CASE("power decomposition rejects out-of-range degrees") {
  CHECK_THROWS_AS(power_decompose({3, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(power_decompose({0, 0}, 3), std::invalid_argument);
}

TEST_CASE("degree-(n-1) radical vanishes on planes without regular nilpotents") {
  // consequence of the power decomposition: monomials of degree n-1 in the
  // plane's elements are combinations of (n-1)-st powers, all zero there
  LieAlgebra gl = make_gl(3, 5);
  Module v = Module::defining(gl);
  auto blk = elementary_point_from_span(gl, cols_from_indices(9, {1, 2}, 5));
  for (const Vec& u : blk.basis) CHECK(rank(gl.realize(u)) < 2);
  CHECK(rad_dim(v, blk, 2) == 0);
}
