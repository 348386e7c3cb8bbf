#include <set>

#include "doctest.h"
#include "elemvar/grassmann.hpp"
#include "testutil.hpp"

using namespace elemvar;
using elemvar::test::Rng;

TEST_CASE("line counts: Grass(1,2)(F_3) is the projective line") {
  CHECK(enumerate_grassmannian(2, 1, 3).size() == 4);
  CHECK(gaussian_binomial(2, 1, 3) == 4);
}

TEST_CASE("Grass(2,4)(F_3) has 130 points") {
  auto pts = enumerate_grassmannian(4, 2, 3);
  CHECK(pts.size() == 130);
  CHECK(gaussian_binomial(4, 2, 3) == 130);
}

TEST_CASE("Grass(4,6)(F_3) has 11011 points") {
  CHECK(gaussian_binomial(6, 4, 3) == 11011);
  size_t count = 0;
  for_each_plane(6, 4, 3, [&](const PlanePoint&) {
    ++count;
    return true;
  });
  CHECK(count == 11011);
}

TEST_CASE("cell decomposition: chart sizes sum to the Gaussian binomial") {
  const size_t n = 5, r = 2;
  const uint32_t p = 3;
  uint64_t total = 0;
  for (const auto& sigma : pivot_patterns(n, r)) {
    uint64_t cell = 1;
    for (size_t k = 0; k < chart_free_slots(sigma, n).size(); ++k) cell *= p;
    total += cell;
  }
  CHECK(total == gaussian_binomial(n, r, p));
  // the top chart is the dense one
  std::vector<size_t> top{0, 1};
  uint64_t dense = 1;
  for (size_t k = 0; k < r * (n - r); ++k) dense *= p;
  CHECK(chart_free_slots(top, n).size() == r * (n - r));
  (void)dense;
}

TEST_CASE("every enumerated point sits in the chart of its own pivot set") {
  for (const PlanePoint& pt : enumerate_grassmannian(4, 2, 3)) {
    CHECK(pt.sigma == pt.sub.pivot_rows());
    // the pivot minor is the identity
    std::vector<size_t> cols{0, 1};
    CHECK(pt.sub.basis().submatrix(pt.sigma, cols) == Matrix::identity(2, 3));
  }
}

TEST_CASE("enumeration yields each plane exactly once, in (sigma, free-entry) order") {
  auto pts = enumerate_grassmannian(4, 2, 3);
  std::set<std::vector<uint32_t>> seen;
  auto key = [](const PlanePoint& pt) {
    std::pair<std::vector<size_t>, std::vector<uint32_t>> k{pt.sigma, {}};
    for (const auto& [row, col] : chart_free_slots(pt.sigma, 4))
      k.second.push_back(pt.sub.basis()(row, col));
    return k;
  };
  for (size_t i = 0; i < pts.size(); ++i) {
    seen.insert(pts[i].sub.basis().data());
    if (i > 0) CHECK(key(pts[i - 1]) < key(pts[i]));
  }
  CHECK(seen.size() == pts.size());
}

TEST_CASE("budget refusal") {
  CHECK_THROWS_AS(enumerate_grassmannian(8, 4, 7, 1000), BudgetExceeded);
}

TEST_CASE("plucker of a coordinate plane is an indicator") {
  Matrix cols(4, 2, 3);
  cols.set(0, 0, 1);
  cols.set(1, 1, 1);
  PluckerVector v = plucker(PlanePoint::from_span(cols));
  CHECK(v.coords.size() == 6);
  CHECK(v.coords[0] == 1);  // subset {0,1}
  for (size_t i = 1; i < 6; ++i) CHECK(v.coords[i] == 0);
}

TEST_CASE("plucker is basis-invariant") {
  Rng rng(301);
  for (int t = 0; t < 100; ++t) {
    Matrix a = test::random_full_column_rank(rng, 4, 2, 3);
    Matrix g = test::random_invertible(rng, 2, 3);
    CHECK(plucker(PlanePoint::from_span(a)) == plucker(PlanePoint::from_span(a * g)));
  }
}

TEST_CASE("plucker separates planes") {
  Rng rng(302);
  for (int t = 0; t < 500; ++t) {
    Matrix a = test::random_full_column_rank(rng, 4, 2, 3);
    Matrix b = test::random_full_column_rank(rng, 4, 2, 3);
    bool same_plane = canonical_subspace(a) == canonical_subspace(b);
    bool same_plucker = plucker(PlanePoint::from_span(a)) == plucker(PlanePoint::from_span(b));
    CHECK(same_plane == same_plucker);
  }
}

TEST_CASE("plucker over a full enumeration is injective with nonzero own-chart coordinate") {
  auto pts = enumerate_grassmannian(4, 2, 3);
  std::set<std::vector<uint32_t>> images;
  auto patterns = pivot_patterns(4, 2);
  for (const PlanePoint& pt : pts) {
    PluckerVector v = plucker(pt);
    images.insert(v.coords);
    size_t at = 0;
    while (patterns[at] != pt.sigma) ++at;
    CHECK(v.coords[at] != 0);
  }
  CHECK(images.size() == pts.size());
}
