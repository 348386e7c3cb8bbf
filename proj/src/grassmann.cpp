#include "elemvar/grassmann.hpp"

#include <stdexcept>

namespace elemvar {

uint64_t gaussian_binomial(size_t n, size_t r, uint32_t q, uint64_t cap) {
  if (r > n) return 0;
  // product over pivot patterns = prod_{i=0}^{r-1} (q^{n-i}-1)/(q^{i+1}-1),
  // computed as an exact integer by the cell decomposition instead:
  // sum over r-subsets of q^{#free cells}; equivalently use the q-Pascal
  // recurrence, which stays integral throughout.
  std::vector<std::vector<uint64_t>> t(n + 1, std::vector<uint64_t>(r + 1, 0));
  bool saturated = false;
  for (size_t i = 0; i <= n; ++i) {
    for (size_t j = 0; j <= std::min(i, r); ++j) {
      if (j == 0 || j == i) {
        t[i][j] = 1;
        continue;
      }
      // [i,j]_q = [i-1,j-1]_q + q^j [i-1,j]_q
      unsigned __int128 qs = 1;
      for (size_t k = 0; k < j; ++k) qs *= q;
      unsigned __int128 v = static_cast<unsigned __int128>(t[i - 1][j - 1]) + qs * t[i - 1][j];
      if (v > cap) {
        v = cap;
        saturated = true;
      }
      t[i][j] = static_cast<uint64_t>(v);
    }
  }
  (void)saturated;
  return t[n][r];
}

std::vector<std::vector<size_t>> pivot_patterns(size_t n, size_t r) {
  std::vector<std::vector<size_t>> out;
  if (r > n) return out;
  std::vector<size_t> s(r);
  for (size_t i = 0; i < r; ++i) s[i] = i;
  while (true) {
    out.push_back(s);
    // next lexicographic r-subset
    size_t i = r;
    while (i > 0 && s[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (size_t j = i; j < r; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

std::vector<std::pair<size_t, size_t>> chart_free_slots(const std::vector<size_t>& sigma, size_t n) {
  std::vector<bool> is_pivot(n, false);
  for (size_t s : sigma) is_pivot[s] = true;
  std::vector<std::pair<size_t, size_t>> slots;
  for (size_t j = 0; j < sigma.size(); ++j)
    for (size_t i = sigma[j] + 1; i < n; ++i)
      if (!is_pivot[i]) slots.emplace_back(i, j);
  return slots;
}

void for_each_plane(size_t n, size_t r, uint32_t p,
                    const std::function<bool(const PlanePoint&)>& fn, uint64_t budget) {
  require_odd_prime(p);
  if (r > n) return;
  uint64_t cap = budget == UINT64_MAX ? budget : budget + 1;
  uint64_t total = gaussian_binomial(n, r, p, cap);
  if (total > budget)
    throw BudgetExceeded("Grass(" + std::to_string(r) + "," + std::to_string(n) + ") over F_" +
                         std::to_string(p) + " exceeds enumeration budget");
  for (const auto& sigma : pivot_patterns(n, r)) {
    auto slots = chart_free_slots(sigma, n);
    std::vector<uint32_t> vals(slots.size(), 0);
    while (true) {
      Matrix basis(n, r, p);
      for (size_t j = 0; j < r; ++j) basis.set(sigma[j], j, 1);
      for (size_t k = 0; k < slots.size(); ++k) basis.set(slots[k].first, slots[k].second, vals[k]);
      Subspace sub = Subspace::span(basis);
      PlanePoint pt{sub, sub.pivot_rows()};
      if (!fn(pt)) return;
      // odometer, last slot fastest: lexicographic order of the tuple
      size_t k = slots.size();
      while (k > 0 && vals[k - 1] + 1 == p) vals[--k] = 0;
      if (k == 0) break;
      ++vals[k - 1];
    }
  }
}

std::vector<PlanePoint> enumerate_grassmannian(size_t n, size_t r, uint32_t p, uint64_t budget) {
  std::vector<PlanePoint> out;
  for_each_plane(
      n, r, p,
      [&](const PlanePoint& pt) {
        out.push_back(pt);
        return true;
      },
      budget);
  return out;
}

PluckerVector plucker(const PlanePoint& pt) {
  const Matrix& b = pt.sub.basis();
  const size_t n = b.rows(), r = b.cols();
  PluckerVector v;
  v.n = n;
  v.r = r;
  v.p = b.modulus();
  std::vector<size_t> cols(r);
  for (size_t i = 0; i < r; ++i) cols[i] = i;
  uint32_t lead = 0;
  for (const auto& subset : pivot_patterns(n, r)) {
    uint32_t minor = det(b.submatrix(subset, cols));
    if (!lead && minor) lead = minor;
    v.coords.push_back(minor);
  }
  if (!lead) throw std::logic_error("plucker: zero vector for a rank-r plane");
  uint32_t inv = mod_inv(lead, v.p);
  for (uint32_t& c : v.coords) c = mod_mul(c, inv, v.p);
  return v;
}

}  // namespace elemvar
