#include "fibercone/polynomial.hpp"

#include "fibercone/errors.hpp"

#include <algorithm>
#include <cctype>

namespace fibercone {

bool Polynomial::is_homogeneous() const noexcept {
  for (const Term& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

unsigned Polynomial::total_degree() const noexcept {
  unsigned d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coef;
  return Scalar(0);
}

PolyRing::PolyRing(CoefField field, std::vector<std::string> variables, MonomialOrder order)
    : field_(field), vars_(std::move(variables)), order_(order) {
  if (vars_.size() > kMaxVariables)
    throw StructuralError("at most " + std::to_string(kMaxVariables) + " variables supported");
  for (std::size_t i = 0; i < vars_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[i] == vars_[j]) throw StructuralError("duplicate variable '" + vars_[i] + "'");
}

void PolyRing::check(const Polynomial& p) const {
  if (!p.is_zero() && p.lead_monomial().num_vars() != vars_.size())
    throw StructuralError("polynomial does not belong to this ring");
}

Polynomial PolyRing::constant(const Scalar& c) const {
  return monomial(Monomial(vars_.size()), c);
}

Polynomial PolyRing::variable(std::size_t i) const {
  return monomial(Monomial::variable(vars_.size(), i));
}

Polynomial PolyRing::monomial(const Monomial& m, const Scalar& c) const {
  if (m.num_vars() != vars_.size()) throw StructuralError("monomial does not belong to this ring");
  Scalar v = field_.from_rational(c);
  if (CoefField::is_zero(v)) return {};
  return Polynomial({Term{std::move(v), m}});
}

Polynomial PolyRing::from_terms(std::vector<Term> terms) const {
  for (Term& t : terms) {
    if (t.mono.num_vars() != vars_.size())
      throw StructuralError("term does not belong to this ring");
    if (!field_.is_rationals()) t.coef = field_.from_rational(t.coef);
  }
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return order_.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef = field_.add(out.back().coef, t.coef);
    } else {
      if (!out.empty() && CoefField::is_zero(out.back().coef)) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && CoefField::is_zero(out.back().coef)) out.pop_back();
  return Polynomial(std::move(out));
}

Polynomial PolyRing::add(const Polynomial& p, const Polynomial& q) const {
  return sub_mul_term(p, field_.from_integer(-1), Monomial(vars_.size()), q);
}

Polynomial PolyRing::sub(const Polynomial& p, const Polynomial& q) const {
  return sub_mul_term(p, Scalar(1), Monomial(vars_.size()), q);
}

Polynomial PolyRing::neg(const Polynomial& p) const {
  std::vector<Term> t = p.terms_;
  for (Term& x : t) x.coef = field_.neg(x.coef);
  return Polynomial(std::move(t));
}

Polynomial PolyRing::scale(const Polynomial& p, const Scalar& c) const {
  return mul_term(p, c, Monomial(vars_.size()));
}

Polynomial PolyRing::mul_term(const Polynomial& p, const Scalar& c, const Monomial& m) const {
  check(p);
  if (CoefField::is_zero(c)) return {};
  std::vector<Term> t;
  t.reserve(p.size());
  for (const Term& x : p.terms_) t.push_back(Term{field_.mul(x.coef, c), x.mono * m});
  return Polynomial(std::move(t));
}

Polynomial PolyRing::sub_mul_term(const Polynomial& p, const Scalar& c, const Monomial& m,
                                  const Polynomial& q) const {
  check(p);
  check(q);
  if (CoefField::is_zero(c) || q.is_zero()) return p;
  std::vector<Term> out;
  out.reserve(p.size() + q.size());
  auto pi = p.terms_.begin(), pe = p.terms_.end();
  auto qi = q.terms_.begin(), qe = q.terms_.end();
  while (pi != pe || qi != qe) {
    if (qi == qe) {
      out.push_back(*pi++);
      continue;
    }
    Monomial qm = qi->mono * m;
    if (pi == pe) {
      out.push_back(Term{field_.neg(field_.mul(c, qi->coef)), qm});
      ++qi;
      continue;
    }
    auto cmp = order_.compare(pi->mono, qm);
    if (cmp > 0) {
      out.push_back(*pi++);
    } else if (cmp < 0) {
      out.push_back(Term{field_.neg(field_.mul(c, qi->coef)), qm});
      ++qi;
    } else {
      Scalar v = field_.sub(pi->coef, field_.mul(c, qi->coef));
      if (!CoefField::is_zero(v)) out.push_back(Term{std::move(v), qm});
      ++pi;
      ++qi;
    }
  }
  return Polynomial(std::move(out));
}

Polynomial PolyRing::mul(const Polynomial& p, const Polynomial& q) const {
  check(p);
  check(q);
  if (p.is_zero() || q.is_zero()) return {};
  if (p.size() == 1) return mul_term(q, p.lead().coef, p.lead().mono);
  if (q.size() == 1) return mul_term(p, q.lead().coef, q.lead().mono);
  std::vector<Term> t;
  t.reserve(p.size() * q.size());
  for (const Term& a : p.terms_)
    for (const Term& b : q.terms_) t.push_back(Term{field_.mul(a.coef, b.coef), a.mono * b.mono});
  return from_terms(std::move(t));
}

Polynomial PolyRing::pow(const Polynomial& p, unsigned e) const {
  Polynomial result = one();
  Polynomial base = p;
  while (e) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

Polynomial PolyRing::make_monic(const Polynomial& p) const {
  if (p.is_zero() || CoefField::is_one(p.lead().coef)) return p;
  return scale(p, field_.inv(p.lead().coef));
}

Polynomial PolyRing::divide_exact(const Polynomial& p, const Polynomial& q) const {
  if (q.is_zero()) throw StructuralError("division by the zero polynomial");
  std::vector<Term> quot;
  Polynomial rem = p;
  Scalar lc_inv = field_.inv(q.lead().coef);
  while (!rem.is_zero()) {
    const Term& lt = rem.lead();
    if (!q.lead_monomial().divides(lt.mono)) throw StructuralError("inexact polynomial division");
    Term t{field_.mul(lt.coef, lc_inv), lt.mono / q.lead_monomial()};
    rem = sub_mul_term(rem, t.coef, t.mono, q);
    quot.push_back(std::move(t));
  }
  return Polynomial(std::move(quot));
}

// ---------------------------------------------------------------------------
// Text syntax

namespace {

class PolyParser {
 public:
  PolyParser(const PolyRing& ring, std::string_view text) : ring_(ring), s_(text) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_primary() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    unsigned char c = static_cast<unsigned char>(s_[pos_]);
    return std::isalnum(c) || c == '_' || c == '(';
  }

  Polynomial expr() {
    Polynomial acc;
    bool first = true;
    for (;;) {
      bool negative = false;
      if (at('+') || at('-')) {
        negative = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = negative ? ring_.sub(acc, t) : ring_.add(acc, t);
      first = false;
      if (!(at('+') || at('-'))) break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      if (at('*')) {
        ++pos_;
        acc = ring_.mul(acc, factor());
      } else if (starts_primary()) {
        acc = ring_.mul(acc, factor());
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (at('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      std::string digits(s_.substr(start, pos_ - start));
      if (digits.size() > 5 || std::stoul(digits) > 65535) fail("exponent too large");
      base = ring_.pow(base, static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    unsigned char c = static_cast<unsigned char>(s_[pos_]);
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!at(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        std::size_t dstart = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected denominator");
      }
      mpq_class q;
      try {
        q = parse_rational(s_.substr(start, pos_ - start));
      } catch (const StructuralError& e) {
        pos_ = start;
        fail(e.what());
      }
      try {
        return ring_.constant(q);
      } catch (const StructuralError& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      const auto& vars = ring_.variables();
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return ring_.variable(i);
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected '") + s_[pos_] + "'");
  }

  const PolyRing& ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial PolyRing::parse(std::string_view text) const { return PolyParser(*this, text).parse_all(); }

std::vector<Polynomial> PolyRing::parse_list(std::string_view text) const {
  std::vector<Polynomial> out;
  int depth = 0;
  std::size_t start = 0;
  bool blank = true;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    char c = i < text.size() ? text[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      std::string_view piece = text.substr(start, i - start);
      bool empty = piece.find_first_not_of(" \t\r\n") == std::string_view::npos;
      if (empty) {
        if (i < text.size() || !blank) throw ParseError("empty list entry", 1, start + 1);
      } else {
        try {
          out.push_back(parse(piece));
        } catch (const ParseError& e) {
          throw ParseError(e.message(), 1, start + e.column());
        }
        blank = false;
      }
      start = i + 1;
    }
  }
  return out;
}

std::string PolyRing::to_string(const Monomial& m) const {
  std::string s;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += vars_[i];
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string PolyRing::to_string(const Polynomial& p) const {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const Term& t : p.terms()) {
    mpq_class c = t.coef;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + "*";
      s += to_string(t.mono);
    }
  }
  return s;
}

}  // namespace fibercone
