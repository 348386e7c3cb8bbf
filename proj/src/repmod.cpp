#include "elemvar/repmod.hpp"

#include <stdexcept>

namespace elemvar {

Module::Module(const LieAlgebra& g, std::vector<Matrix> ops, std::string name, bool validate_now)
    : g_(&g), ops_(std::move(ops)), name_(std::move(name)) {
  if (ops_.size() != g.dim())
    throw std::invalid_argument("module needs one operator per algebra basis vector");
  d_ = ops_.empty() ? 0 : ops_[0].rows();
  for (const Matrix& m : ops_)
    if (m.rows() != d_ || m.cols() != d_ || m.modulus() != g.modulus())
      throw std::invalid_argument("module operator shape mismatch");
  if (validate_now) validate();
}

Matrix Module::act(const Vec& x) const {
  if (x.size() != g_->dim()) throw std::invalid_argument("element dimension mismatch");
  Matrix out(d_, d_, g_->modulus());
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i]) out = out + ops_[i].scaled(x[i]);
  return out;
}

void Module::validate() const {
  const LieAlgebra& g = *g_;
  for (size_t i = 0; i < g.dim(); ++i) {
    if (ops_[i].pow(g.modulus()) != act(g.basis_p_power(i)))
      throw std::logic_error(name_ + ": operator p-power mismatch at basis index " +
                             std::to_string(i));
    for (size_t j = i + 1; j < g.dim(); ++j)
      if (ops_[i].commutator_with(ops_[j]) != act(g.basis_bracket(i, j)))
        throw std::logic_error(name_ + ": bracket compatibility fails at (" + std::to_string(i) +
                               "," + std::to_string(j) + ")");
  }
}

Module Module::dual() const {
  std::vector<Matrix> ops;
  ops.reserve(ops_.size());
  for (const Matrix& m : ops_) ops.push_back(m.transpose().negated());
  return Module(*g_, std::move(ops), "dual:" + name_, false);
}

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.modulus());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      uint32_t f = a(i, j);
      if (!f) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l)
          out.set(i * b.rows() + k, j * b.cols() + l, mod_mul(f, b(k, l), a.modulus()));
    }
  return out;
}

}  // namespace

Module Module::tensor(const Module& o) const {
  if (g_ != o.g_) throw std::invalid_argument("tensor of modules over different algebras");
  std::vector<Matrix> ops;
  Matrix ia = Matrix::identity(d_, g_->modulus());
  Matrix ib = Matrix::identity(o.d_, g_->modulus());
  for (size_t i = 0; i < ops_.size(); ++i)
    ops.push_back(kron(ops_[i], ib) + kron(ia, o.ops_[i]));
  return Module(*g_, std::move(ops), "tensor:" + name_ + "," + o.name_, false);
}

Module Module::direct_sum(const Module& o) const {
  if (g_ != o.g_) throw std::invalid_argument("direct sum of modules over different algebras");
  std::vector<Matrix> ops;
  for (size_t i = 0; i < ops_.size(); ++i) {
    Matrix m(d_ + o.d_, d_ + o.d_, g_->modulus());
    for (size_t a = 0; a < d_; ++a)
      for (size_t b = 0; b < d_; ++b) m.set(a, b, ops_[i](a, b));
    for (size_t a = 0; a < o.d_; ++a)
      for (size_t b = 0; b < o.d_; ++b) m.set(d_ + a, d_ + b, o.ops_[i](a, b));
    ops.push_back(std::move(m));
  }
  return Module(*g_, std::move(ops), "sum:" + name_ + "," + o.name_, false);
}

Module Module::trivial(const LieAlgebra& g, size_t d) {
  std::vector<Matrix> ops(g.dim(), Matrix(d, d, g.modulus()));
  return Module(g, std::move(ops), "triv", false);
}

Module Module::defining(const LieAlgebra& g) {
  if (!g.has_realization())
    throw std::invalid_argument(g.name() + " has no matrix realization for a defining module");
  return Module(g, g.realization(), "defining", false);
}

Module Module::adjoint(const LieAlgebra& g) {
  std::vector<Matrix> ops;
  for (size_t i = 0; i < g.dim(); ++i) ops.push_back(g.ad_basis(i));
  return Module(g, std::move(ops), "adjoint", false);
}

void RestrictedTuple::validate() const {
  for (size_t s = 0; s < ops.size(); ++s) {
    if (!ops[s].pow(p).is_zero())
      throw std::logic_error("restricted tuple operator has nonzero p-th power");
    for (size_t t = s + 1; t < ops.size(); ++t)
      if (!ops[s].commutator_with(ops[t]).is_zero())
        throw std::logic_error("restricted tuple operators do not commute");
  }
}

RestrictedTuple restrict_to(const Module& m, const ElementaryPoint& pt) {
  if (pt.plane.sub.ambient_dim() != m.algebra().dim())
    throw std::invalid_argument("plane does not live in the module's algebra");
  RestrictedTuple t;
  t.p = m.algebra().modulus();
  t.dim = m.dim();
  for (const Vec& u : pt.basis) t.ops.push_back(m.act(u));
  t.validate();
  return t;
}

RestrictedTuple free_tuple(size_t r, size_t mult, uint32_t p) {
  if (r < 1 || mult < 1) throw std::invalid_argument("free module needs r >= 1 and mult >= 1");
  require_odd_prime(p);
  uint64_t block = 1;
  for (size_t s = 0; s < r; ++s) {
    block *= p;
    if (block > 4000000ull) throw std::invalid_argument("free module dimension too large");
  }
  const size_t d = static_cast<size_t>(block) * mult;
  RestrictedTuple t;
  t.p = p;
  t.dim = d;
  // basis: copy-major, exponents big-endian (e_1 most significant)
  std::vector<uint64_t> stride(r);
  stride[r - 1] = 1;
  for (size_t s = r - 1; s > 0; --s) stride[s - 1] = stride[s] * p;
  for (size_t s = 0; s < r; ++s) {
    Matrix op(d, d, p);
    for (size_t c = 0; c < mult; ++c) {
      for (uint64_t idx = 0; idx < block; ++idx) {
        uint64_t e_s = (idx / stride[s]) % p;
        if (e_s + 1 < p) op.set(c * block + idx + stride[s], c * block + idx, 1);
      }
    }
    t.ops.push_back(std::move(op));
  }
  t.validate();
  return t;
}

Module free_module(const LieAlgebra& abelian_r, size_t mult) {
  // sanity: the algebra must be abelian with zero p-operation table
  for (size_t i = 0; i < abelian_r.dim(); ++i) {
    if (!vec_is_zero(abelian_r.basis_p_power(i)))
      throw std::invalid_argument("free module needs an algebra with zero p-operation");
    for (size_t j = 0; j < abelian_r.dim(); ++j)
      if (!vec_is_zero(abelian_r.basis_bracket(i, j)))
        throw std::invalid_argument("free module needs an abelian algebra");
  }
  RestrictedTuple t = free_tuple(abelian_r.dim(), mult, abelian_r.modulus());
  return Module(abelian_r, t.ops, "free:" + std::to_string(abelian_r.dim()) + "," + std::to_string(mult),
                false);
}

}  // namespace elemvar
