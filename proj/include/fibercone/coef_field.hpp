#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace fibercone {

// Coefficients are always held as mpq_class.  Over F_p the value is an
// integer in [0, p).
using Scalar = mpq_class;

class CoefField {
 public:
  enum class Kind { Rationals, Prime };

  CoefField() = default;
  static CoefField rationals() { return CoefField(); }
  // Any prime p < 2^31.  Problem files additionally require p > 10^4.
  static CoefField prime(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar from_integer(long v) const;
  Scalar from_rational(const mpq_class& q) const;  // throws if den = 0 mod p

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  static bool is_zero(const Scalar& a) { return sgn(a) == 0; }
  static bool is_one(const Scalar& a) { return a == 1; }

  std::string to_string(const Scalar& a) const;
  std::string name() const;

  friend bool operator==(const CoefField& a, const CoefField& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  CoefField(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  std::uint64_t residue(const Scalar& a) const { return a.get_num().get_ui(); }

  Kind kind_ = Kind::Rationals;
  std::uint32_t p_ = 0;
};

bool is_prime_number(std::uint64_t n);

// "a", "-a", "a/b".  Result in lowest terms.
mpq_class parse_rational(std::string_view text);
std::string rational_to_string(const mpq_class& q);

}  // namespace fibercone
