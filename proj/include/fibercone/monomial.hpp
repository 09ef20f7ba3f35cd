#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace fibercone {

inline constexpr std::size_t kMaxVariables = 12;

class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  explicit Monomial(std::size_t num_vars);
  Monomial(std::initializer_list<unsigned> exps);
  static Monomial from_exponents(std::span<const unsigned> exps);
  static Monomial variable(std::size_t num_vars, std::size_t i, unsigned e = 1);

  std::size_t num_vars() const noexcept { return nvars_; }
  unsigned operator[](std::size_t i) const noexcept { return exp_[i]; }
  unsigned degree() const noexcept { return degree_; }
  std::uint32_t support() const noexcept { return mask_; }
  bool is_one() const noexcept { return degree_ == 0; }

  void set(std::size_t i, unsigned e);

  // this | m
  bool divides(const Monomial& m) const noexcept {
    if (mask_ & ~m.mask_) return false;
    if (degree_ > m.degree_) return false;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exp_[i] > m.exp_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& m) const noexcept { return (mask_ & m.mask_) == 0; }

  Monomial operator*(const Monomial& m) const;
  // Exact quotient; m must divide *this.
  Monomial operator/(const Monomial& m) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.exp_ == b.exp_;
  }

  // Insert a new variable (exponent e) at index pos.
  Monomial insert_variable(std::size_t pos, unsigned e) const;
  // Drop variable at pos (its exponent must be 0 unless force).
  Monomial drop_variable(std::size_t pos) const;

 private:
  void recompute();

  std::array<Exponent, kMaxVariables> exp_{};
  std::uint16_t nvars_ = 0;
  std::uint32_t degree_ = 0;
  std::uint32_t mask_ = 0;
};

class MonomialOrder {
 public:
  enum class Kind { Grevlex, Lex, Block };

  MonomialOrder() = default;
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0, Kind::Grevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0, Kind::Lex); }
  // The first `eliminated` variables are compared first (inner order on the
  // block), then the remaining ones (inner order again).
  static MonomialOrder block(std::size_t eliminated, Kind inner = Kind::Grevlex);

  Kind kind() const noexcept { return kind_; }
  Kind inner() const noexcept { return inner_; }
  std::size_t eliminated() const noexcept { return elim_; }

  // Throws StructuralError on mismatched variable counts.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Kind k, std::size_t e, Kind inner) : kind_(k), inner_(inner), elim_(e) {}

  Kind kind_ = Kind::Grevlex;
  Kind inner_ = Kind::Grevlex;
  std::size_t elim_ = 0;
};

}  // namespace fibercone
