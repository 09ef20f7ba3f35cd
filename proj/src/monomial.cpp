#include "fibercone/monomial.hpp"

#include "fibercone/errors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace fibercone {

namespace {

void check_nvars(std::size_t n) {
  if (n > kMaxVariables)
    throw StructuralError("at most " + std::to_string(kMaxVariables) + " variables supported");
}

Monomial::Exponent narrow(unsigned e) {
  if (e > std::numeric_limits<Monomial::Exponent>::max())
    throw StructuralError("exponent overflow");
  return static_cast<Monomial::Exponent>(e);
}

// Graded reverse lexicographic comparison of exps[lo, hi).
std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                   std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

std::strong_ordering lex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                               std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

}  // namespace

Monomial::Monomial(std::size_t num_vars) {
  check_nvars(num_vars);
  nvars_ = static_cast<std::uint16_t>(num_vars);
}

Monomial::Monomial(std::initializer_list<unsigned> exps) {
  check_nvars(exps.size());
  nvars_ = static_cast<std::uint16_t>(exps.size());
  std::size_t i = 0;
  for (unsigned e : exps) exp_[i++] = narrow(e);
  recompute();
}

Monomial Monomial::from_exponents(std::span<const unsigned> exps) {
  Monomial m(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) m.exp_[i] = narrow(exps[i]);
  m.recompute();
  return m;
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t i, unsigned e) {
  Monomial m(num_vars);
  m.set(i, e);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw StructuralError("variable index out of range");
  exp_[i] = narrow(e);
  recompute();
}

void Monomial::recompute() {
  degree_ = 0;
  mask_ = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    degree_ += exp_[i];
    if (exp_[i]) mask_ |= 1u << i;
  }
}

Monomial Monomial::operator*(const Monomial& m) const {
  if (nvars_ != m.nvars_) throw StructuralError("monomials over different variable sets");
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) r.exp_[i] = narrow(unsigned{exp_[i]} + m.exp_[i]);
  r.degree_ = degree_ + m.degree_;
  r.mask_ = mask_ | m.mask_;
  return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
  if (nvars_ != m.nvars_) throw StructuralError("monomials over different variable sets");
  Monomial r = *this;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (m.exp_[i] > exp_[i]) throw StructuralError("inexact monomial division");
    r.exp_[i] = static_cast<Exponent>(exp_[i] - m.exp_[i]);
  }
  r.recompute();
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  if (a.nvars_ != b.nvars_) throw StructuralError("monomials over different variable sets");
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
  r.recompute();
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  if (a.nvars_ != b.nvars_) throw StructuralError("monomials over different variable sets");
  Monomial r = a;
  for (std::size_t i = 0; i < a.nvars_; ++i) r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
  r.recompute();
  return r;
}

Monomial Monomial::insert_variable(std::size_t pos, unsigned e) const {
  Monomial r(nvars_ + 1u);
  for (std::size_t i = 0, j = 0; i < r.nvars_; ++i) r.exp_[i] = (i == pos) ? narrow(e) : exp_[j++];
  r.recompute();
  return r;
}

Monomial Monomial::drop_variable(std::size_t pos) const {
  Monomial r(nvars_ - 1u);
  for (std::size_t i = 0, j = 0; i < nvars_; ++i)
    if (i != pos) r.exp_[j++] = exp_[i];
  r.recompute();
  return r;
}

MonomialOrder MonomialOrder::block(std::size_t eliminated, Kind inner) {
  if (inner == Kind::Block) throw StructuralError("block order needs a grevlex or lex inner order");
  return MonomialOrder(Kind::Block, eliminated, inner);
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.num_vars() != b.num_vars())
    throw StructuralError("comparing monomials with different variable counts");
  const std::size_t n = a.num_vars();
  switch (kind_) {
    case Kind::Grevlex: {
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return b[i] <=> a[i];
      return std::strong_ordering::equal;
    }
    case Kind::Lex:
      return lex_range(a, b, 0, n);
    case Kind::Block: {
      std::size_t k = std::min(elim_, n);
      auto c = inner_ == Kind::Lex ? lex_range(a, b, 0, k) : grevlex_range(a, b, 0, k);
      if (c != 0) return c;
      return inner_ == Kind::Lex ? lex_range(a, b, k, n) : grevlex_range(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace fibercone
