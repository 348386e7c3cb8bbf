#ifndef ELEMVAR_FP_HPP
#define ELEMVAR_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace elemvar {

/// Thrown when an enumeration would exceed its configured work budget.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// True iff p is an odd prime (trial division; moduli here are tiny).
inline bool is_odd_prime(uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (uint32_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

/// Validates a coefficient modulus. Everything in this library works over
/// F_p with p an odd prime; p = 2 is rejected up front.
inline void require_odd_prime(uint32_t p) {
  if (!is_odd_prime(p))
    throw std::invalid_argument("modulus must be an odd prime, got " + std::to_string(p));
}

inline uint32_t mod_reduce(int64_t v, uint32_t p) {
  int64_t r = v % static_cast<int64_t>(p);
  if (r < 0) r += p;
  return static_cast<uint32_t>(r);
}

inline uint32_t mod_neg(uint32_t v, uint32_t p) { return v == 0 ? 0 : p - v; }

inline uint32_t mod_add(uint32_t a, uint32_t b, uint32_t p) {
  uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline uint32_t mod_sub(uint32_t a, uint32_t b, uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline uint32_t mod_mul(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}

inline uint32_t mod_pow(uint32_t a, uint64_t e, uint32_t p) {
  uint32_t acc = 1 % p;
  uint32_t base = a % p;
  while (e) {
    if (e & 1) acc = mod_mul(acc, base, p);
    base = mod_mul(base, base, p);
    e >>= 1;
  }
  return acc;
}

inline uint32_t mod_inv(uint32_t a, uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
  return mod_pow(a, p - 2, p);  // Fermat
}

/// Residue in [0, p) for an odd prime p. Scalar boundary type; bulk
/// arithmetic inside Matrix works on raw residues with one shared modulus.
class Fp {
 public:
  Fp(int64_t value, uint32_t p) : p_(p) {
    require_odd_prime(p);
    v_ = mod_reduce(value, p);
  }

  uint32_t value() const { return v_; }
  uint32_t modulus() const { return p_; }

  Fp operator+(const Fp& o) const { return raw(mod_add(v_, check(o), p_), p_); }
  Fp operator-(const Fp& o) const { return raw(mod_sub(v_, check(o), p_), p_); }
  Fp operator*(const Fp& o) const { return raw(mod_mul(v_, check(o), p_), p_); }
  Fp operator-() const { return raw(mod_neg(v_, p_), p_); }
  Fp inverse() const { return raw(mod_inv(v_, p_), p_); }
  Fp operator/(const Fp& o) const { return *this * o.inverse(); }
  bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
  bool is_zero() const { return v_ == 0; }

  static Fp raw(uint32_t reduced, uint32_t p) {
    Fp f;
    f.v_ = reduced;
    f.p_ = p;
    return f;
  }

 private:
  Fp() : v_(0), p_(3) {}
  uint32_t check(const Fp& o) const {
    if (o.p_ != p_) throw std::invalid_argument("F_p arithmetic across different moduli");
    return o.v_;
  }
  uint32_t v_;
  uint32_t p_;
};

/// Coordinate vector (residues mod a modulus carried by the context).
using Vec = std::vector<uint32_t>;

inline bool vec_is_zero(const Vec& v) {
  for (uint32_t x : v)
    if (x) return false;
  return true;
}

inline Vec vec_add(const Vec& a, const Vec& b, uint32_t p) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mod_add(a[i], b[i], p);
  return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b, uint32_t p) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mod_sub(a[i], b[i], p);
  return r;
}

inline Vec vec_scale(uint32_t c, const Vec& a, uint32_t p) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mod_mul(c, a[i], p);
  return r;
}

inline void vec_add_scaled(Vec& acc, uint32_t c, const Vec& a, uint32_t p) {
  for (size_t i = 0; i < a.size(); ++i) acc[i] = mod_add(acc[i], mod_mul(c, a[i], p), p);
}

}  // namespace elemvar

#endif
