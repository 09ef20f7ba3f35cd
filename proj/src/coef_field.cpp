#include "fibercone/coef_field.hpp"

#include "fibercone/errors.hpp"

#include <cctype>

namespace fibercone {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

CoefField CoefField::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31))
    throw StructuralError("characteristic " + std::to_string(p) + " exceeds 2^31");
  if (!is_prime_number(p))
    throw StructuralError("characteristic " + std::to_string(p) + " is not prime");
  return CoefField(Kind::Prime, static_cast<std::uint32_t>(p));
}

Scalar CoefField::from_integer(long v) const {
  if (kind_ == Kind::Rationals) return Scalar(v);
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return Scalar(static_cast<unsigned long>(r));
}

Scalar CoefField::from_rational(const mpq_class& q) const {
  if (kind_ == Kind::Rationals) return q;
  mpz_class num = q.get_num() % p_;
  if (num < 0) num += p_;
  mpz_class den = q.get_den() % p_;
  if (den == 0) throw StructuralError("denominator vanishes modulo " + std::to_string(p_));
  mpz_class dinv;
  mpz_class pz(p_);
  mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pz.get_mpz_t());
  mpz_class r = (num * dinv) % pz;
  return Scalar(r);
}

Scalar CoefField::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Rationals) return a + b;
  std::uint64_t s = residue(a) + residue(b);
  if (s >= p_) s -= p_;
  return Scalar(static_cast<unsigned long>(s));
}

Scalar CoefField::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Rationals) return a - b;
  std::uint64_t x = residue(a), y = residue(b);
  return Scalar(static_cast<unsigned long>(x >= y ? x - y : x + p_ - y));
}

Scalar CoefField::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::Rationals) return a * b;
  return Scalar(static_cast<unsigned long>((residue(a) * residue(b)) % p_));
}

Scalar CoefField::neg(const Scalar& a) const {
  if (kind_ == Kind::Rationals) return -a;
  std::uint64_t x = residue(a);
  return Scalar(static_cast<unsigned long>(x == 0 ? 0 : p_ - x));
}

Scalar CoefField::inv(const Scalar& a) const {
  if (is_zero(a)) throw StructuralError("division by zero");
  if (kind_ == Kind::Rationals) return 1 / a;
  // Fermat: a^(p-2)
  std::uint64_t base = residue(a), e = p_ - 2, r = 1;
  while (e) {
    if (e & 1) r = (r * base) % p_;
    base = (base * base) % p_;
    e >>= 1;
  }
  return Scalar(static_cast<unsigned long>(r));
}

std::string CoefField::to_string(const Scalar& a) const { return rational_to_string(a); }

std::string CoefField::name() const {
  if (kind_ == Kind::Rationals) return "Q";
  return "F(" + std::to_string(p_) + ")";
}

mpq_class parse_rational(std::string_view text) {
  auto digits_ok = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    text.remove_prefix(1);
  }
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!digits_ok(num) || (slash != std::string_view::npos && !digits_ok(den)))
    throw StructuralError("malformed rational '" + std::string(text) + "'");
  mpq_class q;
  q.get_num() = mpz_class(std::string(num));
  q.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den));
  if (q.get_den() == 0) throw StructuralError("zero denominator");
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace fibercone
