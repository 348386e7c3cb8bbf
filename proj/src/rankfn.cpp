#include "elemvar/rankfn.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace elemvar {

Matrix theta_specialize(const Module& m, const ElementaryPoint& pt, size_t s) {
  if (pt.plane.sub.ambient_dim() != m.algebra().dim())
    throw std::invalid_argument("theta: plane does not live in the module's algebra");
  const size_t r = pt.dim();
  if (s < 1 || s > r) throw std::invalid_argument("theta: chart column out of range");
  const std::vector<size_t>& sigma = pt.plane.sigma;
  if (sigma.size() != r) throw std::invalid_argument("theta: chart mismatch");
  const size_t n = m.algebra().dim();
  const uint32_t p = m.algebra().modulus();
  // chart-section coefficients: delta on the pivot rows, stored entries on
  // the free slots, zero elsewhere
  Vec coeff(n, 0);
  for (size_t t = 0; t < r; ++t) coeff[sigma[t]] = (t == s - 1) ? 1 : 0;
  for (const auto& [row, col] : chart_free_slots(sigma, n))
    if (col == s - 1) coeff[row] = pt.plane.sub.basis()(row, col);
  Matrix out(m.dim(), m.dim(), p);
  for (size_t i = 0; i < n; ++i)
    if (coeff[i]) out = out + m.ops()[i].scaled(coeff[i]);
  return out;
}

TupleRanks::TupleRanks(const RestrictedTuple& t) : t_(t) {
  const size_t r = t_.ops.size();
  powers_.resize(r);
  for (size_t s = 0; s < r; ++s) {
    powers_[s].push_back(Matrix::identity(t_.dim, t_.ops[s].modulus()));
    for (uint32_t k = 1; k <= t_.p - 1; ++k) powers_[s].push_back(powers_[s].back() * t_.ops[s]);
  }
}

namespace {

/// Compositions of j into r parts, each part <= cap (higher powers of the
/// tuple operators vanish, so capped monomials generate everything).
std::vector<std::vector<uint32_t>> capped_compositions(size_t j, size_t r, uint32_t cap) {
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> cur(r, 0);
  std::function<void(size_t, size_t)> rec = [&](size_t pos, size_t rem) {
    if (pos + 1 == r) {
      if (rem <= cap) {
        cur[pos] = static_cast<uint32_t>(rem);
        out.push_back(cur);
      }
      return;
    }
    for (uint32_t v = 0; v <= std::min<size_t>(cap, rem); ++v) {
      cur[pos] = v;
      rec(pos + 1, rem - v);
    }
  };
  if (r > 0) rec(0, j);
  return out;
}

}  // namespace

size_t TupleRanks::rad_dim(size_t j) const {
  const size_t r = t_.ops.size();
  if (j == 0) return t_.dim;
  if (j > top_degree()) throw std::invalid_argument("rad_dim: degree out of range");
  auto comps = capped_compositions(j, r, t_.p - 1);
  Matrix stacked(t_.dim, 0, t_.ops[0].modulus());
  for (const auto& c : comps) {
    Matrix mono = powers_[0][c[0]];
    for (size_t s = 1; s < r; ++s) mono = mono * powers_[s][c[s]];
    stacked = stacked.hcat(mono);
  }
  return rank(stacked);
}

size_t TupleRanks::soc_dim(size_t j) const {
  const size_t r = t_.ops.size();
  if (j == 0) return 0;
  if (j > top_degree()) throw std::invalid_argument("soc_dim: degree out of range");
  auto comps = capped_compositions(j, r, t_.p - 1);
  Matrix stacked(0, t_.dim, t_.ops[0].modulus());
  for (const auto& c : comps) {
    Matrix mono = powers_[0][c[0]];
    for (size_t s = 1; s < r; ++s) mono = mono * powers_[s][c[s]];
    stacked = stacked.vcat(mono);
  }
  return t_.dim - rank(stacked);
}

size_t rad_dim(const Module& m, const ElementaryPoint& pt, size_t j) {
  return TupleRanks(restrict_to(m, pt)).rad_dim(j);
}

size_t soc_dim(const Module& m, const ElementaryPoint& pt, size_t j) {
  return TupleRanks(restrict_to(m, pt)).soc_dim(j);
}

std::vector<size_t> jordan_type(const Matrix& op) {
  if (op.rows() != op.cols()) throw std::invalid_argument("jordan_type: square operator expected");
  const size_t d = op.rows();
  std::vector<size_t> ranks{d};
  Matrix pw = op;
  while (!pw.is_zero()) {
    ranks.push_back(rank(pw));
    if (ranks.size() > d + 1)
      throw std::invalid_argument("jordan_type: operator is not nilpotent");
    pw = pw * op;
  }
  ranks.push_back(0);
  std::vector<size_t> parts;
  // number of blocks of size >= k is ranks[k-1] - ranks[k]
  for (size_t k = 1; k + 1 < ranks.size() + 1; ++k) {
    if (k >= ranks.size()) break;
    size_t geq_k = ranks[k - 1] - ranks[k];
    size_t geq_k1 = (k < ranks.size() - 1) ? ranks[k] - ranks[k + 1] : 0;
    for (size_t c = geq_k1; c < geq_k; ++c) parts.push_back(k);
  }
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

FreeRank free_restriction_rank(const RestrictedTuple& t) {
  Matrix sigma = Matrix::identity(t.dim, t.ops.empty() ? 3 : t.ops[0].modulus());
  for (const Matrix& op : t.ops) sigma = sigma * op.pow(t.p - 1);
  FreeRank fr;
  fr.rank = rank(sigma);
  double block = 1;
  for (size_t s = 0; s < t.ops.size(); ++s) block *= t.p;
  fr.free = (static_cast<double>(fr.rank) * block == static_cast<double>(t.dim));
  return fr;
}

bool in_support(const Module& m, const ElementaryPoint& pt) {
  const uint32_t p = m.algebra().modulus();
  const size_t r = pt.dim();
  RestrictedTuple t = restrict_to(m, pt);
  bool direct = !free_restriction_rank(t).free;
  // line scan over the projective points of the plane
  bool line_found = false;
  Vec c(r, 0);
  for (size_t lead = 0; lead < r && !line_found; ++lead) {
    std::fill(c.begin(), c.end(), 0);
    c[lead] = 1;
    while (true) {
      Matrix x(t.dim, t.dim, p);
      for (size_t s = 0; s < r; ++s)
        if (c[s]) x = x + t.ops[s].scaled(c[s]);
      size_t a = rank(x.pow(p - 1));
      if (a * p != t.dim) {
        line_found = true;
        break;
      }
      size_t k = lead + 1;
      while (k < r && c[k] + 1 == p) c[k++] = 0;
      if (k == r) break;
      ++c[k];
    }
  }
  if (line_found != direct)
    throw std::logic_error("support reduction to lines failed for " + m.name());
  return direct;
}

RankSurvey rank_survey(const LieAlgebra& g, const Module& m, size_t r, const SurveyOptions& opts) {
  if (&m.algebra() != &g) throw std::invalid_argument("survey: module is over a different algebra");
  const uint32_t p = g.modulus();
  RankSurvey sv;
  sv.r = r;
  sv.jmax = (p - 1) * r;
  sv.module_dim = m.dim();
  std::vector<ElementaryPoint> pts = elementary_points(g, r, opts.enumeration);
  sv.profiles.resize(pts.size());

  auto work = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      RankProfile prof;
      prof.point = pts[i];
      TupleRanks ranks(restrict_to(m, pts[i]));
      for (size_t j = 1; j <= sv.jmax; ++j) {
        prof.rad.push_back(ranks.rad_dim(j));
        prof.soc.push_back(ranks.soc_dim(j));
      }
      prof.fr = free_restriction_rank(restrict_to(m, pts[i]));
      prof.support = in_support(m, pts[i]);
      if (opts.with_maximal) prof.maximal = is_maximal_elementary(g, pts[i], opts.maximal_guard);
      sv.profiles[i] = std::move(prof);
    }
  };

  size_t workers = std::max<size_t>(1, opts.workers);
  if (workers == 1 || pts.size() < 2) {
    work(0, pts.size());
  } else {
    workers = std::min(workers, pts.size());
    std::vector<std::thread> pool;
    std::exception_ptr err;
    std::mutex err_mx;
    size_t chunk = (pts.size() + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
      size_t lo = w * chunk, hi = std::min(pts.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        try {
          work(lo, hi);
        } catch (...) {
          std::lock_guard<std::mutex> lk(err_mx);
          if (!err) err = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }

  sv.max_rad.assign(sv.jmax, 0);
  sv.min_rad.assign(sv.jmax, m.dim() + 1);
  sv.max_soc.assign(sv.jmax, 0);
  sv.min_soc.assign(sv.jmax, m.dim() + 1);
  for (const RankProfile& prof : sv.profiles)
    for (size_t j = 0; j < sv.jmax; ++j) {
      sv.max_rad[j] = std::max(sv.max_rad[j], prof.rad[j]);
      sv.min_rad[j] = std::min(sv.min_rad[j], prof.rad[j]);
      sv.max_soc[j] = std::max(sv.max_soc[j], prof.soc[j]);
      sv.min_soc[j] = std::min(sv.min_soc[j], prof.soc[j]);
    }
  sv.below_max_counts.assign(sv.jmax, 0);
  sv.above_min_counts.assign(sv.jmax, 0);
  for (const RankProfile& prof : sv.profiles)
    for (size_t j = 0; j < sv.jmax; ++j) {
      if (prof.rad[j] < sv.max_rad[j]) ++sv.below_max_counts[j];
      if (prof.soc[j] > sv.min_soc[j]) ++sv.above_min_counts[j];
    }
  sv.constant_rad.assign(sv.jmax, true);
  sv.constant_soc.assign(sv.jmax, true);
  for (size_t j = 0; j < sv.jmax; ++j) {
    sv.constant_rad[j] = sv.below_max_counts[j] == 0;
    sv.constant_soc[j] = sv.above_min_counts[j] == 0;
  }
  return sv;
}

std::vector<size_t> RankSurvey::rad_locus(size_t j) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < profiles.size(); ++i)
    if (profiles[i].rad[j - 1] < max_rad[j - 1]) out.push_back(i);
  return out;
}

std::vector<size_t> RankSurvey::soc_locus(size_t j) const {
  std::vector<size_t> out;
  for (size_t i = 0; i < profiles.size(); ++i)
    if (profiles[i].soc[j - 1] > min_soc[j - 1]) out.push_back(i);
  return out;
}

std::vector<size_t> RankSurvey::support_locus() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < profiles.size(); ++i)
    if (profiles[i].support) out.push_back(i);
  return out;
}

std::vector<ElementaryPoint> support_locus(const LieAlgebra& g, const Module& m, size_t r,
                                           const EnumOptions& opts) {
  std::vector<ElementaryPoint> out;
  for (const ElementaryPoint& pt : elementary_points(g, r, opts))
    if (in_support(m, pt)) out.push_back(pt);
  return out;
}

// ---- power decomposition ---------------------------------------------------

namespace {

uint32_t binom_mod(uint32_t n, uint32_t k, uint32_t p) {
  // n < p, so everything is a unit
  uint32_t num = 1, den = 1;
  for (uint32_t t = 0; t < k; ++t) {
    num = mod_mul(num, (n - t) % p, p);
    den = mod_mul(den, (t + 1) % p, p);
  }
  return mod_mul(num, mod_inv(den, p), p);
}

using Poly = std::map<Vec, uint32_t>;  // exponent vector -> coefficient

Poly poly_scale(const Poly& a, uint32_t c, uint32_t p) {
  Poly out;
  for (const auto& [e, v] : a) {
    uint32_t w = mod_mul(v, c, p);
    if (w) out[e] = w;
  }
  return out;
}

Poly poly_add(const Poly& a, const Poly& b, uint32_t p) {
  Poly out = a;
  for (const auto& [e, v] : b) {
    uint32_t w = mod_add(out.count(e) ? out[e] : 0, v, p);
    if (w)
      out[e] = w;
    else
      out.erase(e);
  }
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b, uint32_t p) {
  Poly out;
  for (const auto& [ea, va] : a)
    for (const auto& [eb, vb] : b) {
      Vec e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      uint32_t w = mod_add(out.count(e) ? out[e] : 0, mod_mul(va, vb, p), p);
      if (w)
        out[e] = w;
      else
        out.erase(e);
    }
  return out;
}

Poly poly_of_form(const Vec& form, uint32_t p) {
  Poly out;
  for (size_t i = 0; i < form.size(); ++i)
    if (form[i] % p) {
      Vec e(form.size(), 0);
      e[i] = 1;
      out[e] = form[i] % p;
    }
  return out;
}

Poly poly_pow(const Poly& a, size_t e, uint32_t p, size_t nvars) {
  Vec zero(nvars, 0);
  Poly out{{zero, 1}};
  for (size_t t = 0; t < e; ++t) out = poly_mul(out, a, p);
  return out;
}

}  // namespace

std::vector<PowerTerm> power_decompose(const std::vector<uint32_t>& exponents, uint32_t p) {
  require_odd_prime(p);
  const size_t n = exponents.size();
  size_t degree = 0;
  for (uint32_t e : exponents) degree += e;
  if (degree == 0) throw std::invalid_argument("power_decompose: constant monomial");
  if (degree >= p) throw std::invalid_argument("power_decompose: degree must be < p");
  std::vector<size_t> active;
  for (size_t i = 0; i < n; ++i)
    if (exponents[i]) active.push_back(i);

  // single variable: the monomial is already a power of a linear form
  if (active.size() == 1) {
    Vec form(n, 0);
    form[active[0]] = 1;
    return {PowerTerm{1, form}};
  }

  // peel the first active variable and recurse on the rest
  size_t k = active[0];
  uint32_t e1 = exponents[k];
  std::vector<uint32_t> tail = exponents;
  tail[k] = 0;
  std::vector<PowerTerm> tail_terms = power_decompose(tail, p);

  const uint32_t i = static_cast<uint32_t>(degree);
  // Vandermonde system: sum_j j^m a_j = delta_{m,e1} / C(i, e1), m = 0..i
  Matrix v(i + 1, i + 1, p);
  for (uint32_t m = 0; m <= i; ++m)
    for (uint32_t j = 0; j <= i; ++j)
      v.set(m, j, (m == 0) ? 1 : mod_pow(j % p, m, p));
  Vec rhs(i + 1, 0);
  rhs[e1] = mod_inv(binom_mod(i, e1, p), p);
  auto a = solve(v, rhs);
  if (!a) throw std::logic_error("power_decompose: Vandermonde system inconsistent");

  std::vector<PowerTerm> out;
  for (const PowerTerm& tt : tail_terms) {
    for (uint32_t j = 0; j <= i; ++j) {
      uint32_t c = mod_mul(tt.coeff, (*a)[j], p);
      if (!c) continue;
      Vec form = tt.form;
      form[k] = mod_add(form[k], j % p, p);
      out.push_back(PowerTerm{c, form});
    }
  }
  return out;
}

bool verify_power_decomposition(const std::vector<uint32_t>& exponents,
                                const std::vector<PowerTerm>& terms, uint32_t p) {
  const size_t n = exponents.size();
  size_t degree = 0;
  for (uint32_t e : exponents) degree += e;
  Poly sum;
  for (const PowerTerm& t : terms)
    sum = poly_add(sum, poly_scale(poly_pow(poly_of_form(t.form, p), degree, p, n), t.coeff, p), p);
  Poly target;
  Vec e(exponents.begin(), exponents.end());
  target[e] = 1;
  return sum == target;
}

}  // namespace elemvar
