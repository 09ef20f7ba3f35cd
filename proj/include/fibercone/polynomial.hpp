#pragma once

#include "fibercone/coef_field.hpp"
#include "fibercone/monomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace fibercone {

struct Term {
  Scalar coef;
  Monomial mono;
};

// Terms strictly decreasing under the order of the PolyRing that built it;
// no zero coefficients; zero is the empty list.
class Polynomial {
 public:
  Polynomial() = default;

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  bool is_constant() const noexcept { return terms_.size() == 1 && terms_[0].mono.is_one(); }
  bool is_homogeneous() const noexcept;
  unsigned total_degree() const noexcept;
  // Coefficient of the monomial 1.
  Scalar constant_term() const;
  std::vector<Term> take_terms() && { return std::move(terms_); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
    return true;
  }

 private:
  friend class PolyRing;
  explicit Polynomial(std::vector<Term> t) : terms_(std::move(t)) {}
  std::vector<Term> terms_;
};

// Arithmetic context: field, variable names and the active order.
class PolyRing {
 public:
  PolyRing(CoefField field, std::vector<std::string> variables,
           MonomialOrder order = MonomialOrder::grevlex());

  const CoefField& field() const noexcept { return field_; }
  const MonomialOrder& order() const noexcept { return order_; }
  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t num_vars() const noexcept { return vars_.size(); }

  PolyRing with_order(MonomialOrder order) const { return PolyRing(field_, vars_, order); }

  Polynomial zero() const { return {}; }
  Polynomial one() const { return constant(Scalar(1)); }
  Polynomial constant(const Scalar& c) const;
  Polynomial variable(std::size_t i) const;
  Polynomial monomial(const Monomial& m, const Scalar& c = Scalar(1)) const;
  // Sorts, combines like terms, reduces coefficients, drops zeros.
  Polynomial from_terms(std::vector<Term> terms) const;
  // Trusts the caller: terms already strictly decreasing, coefficients nonzero.
  Polynomial from_sorted_terms(std::vector<Term> terms) const { return Polynomial(std::move(terms)); }
  // Re-sorts a polynomial built under a different order on the same variables.
  Polynomial reorder(const Polynomial& p) const { return from_terms(p.terms()); }

  Polynomial add(const Polynomial& p, const Polynomial& q) const;
  Polynomial sub(const Polynomial& p, const Polynomial& q) const;
  Polynomial neg(const Polynomial& p) const;
  Polynomial mul(const Polynomial& p, const Polynomial& q) const;
  Polynomial pow(const Polynomial& p, unsigned e) const;
  Polynomial scale(const Polynomial& p, const Scalar& c) const;
  Polynomial mul_term(const Polynomial& p, const Scalar& c, const Monomial& m) const;
  // p - c * m * q, in one merge pass.
  Polynomial sub_mul_term(const Polynomial& p, const Scalar& c, const Monomial& m,
                          const Polynomial& q) const;
  Polynomial make_monic(const Polynomial& p) const;
  // Exact division by q in k[vars]; throws if q does not divide p.
  Polynomial divide_exact(const Polynomial& p, const Polynomial& q) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b);
  }

  Polynomial parse(std::string_view text) const;
  std::vector<Polynomial> parse_list(std::string_view text) const;
  std::string to_string(const Polynomial& p) const;
  std::string to_string(const Monomial& m) const;

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.vars_ == b.vars_ && a.order_ == b.order_;
  }

 private:
  void check(const Polynomial& p) const;

  CoefField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
};

}  // namespace fibercone
