#pragma once

#include "fibercone/polynomial.hpp"

#include <optional>
#include <span>
#include <vector>

namespace fibercone {

// Every monomial whose degree in the variables [skip, n) is at least `degree`
// lies in the ideal, so such terms may be discarded during reduction.
struct Truncation {
  unsigned degree = 0;
  unsigned skip = 0;
  bool drops(const Monomial& m) const noexcept {
    unsigned d = m.degree();
    for (unsigned i = 0; i < skip; ++i) d -= m[i];
    return d >= degree;
  }
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

// Reduced, monic Groebner basis, sorted by increasing lead monomial.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;

  const std::vector<Polynomial>& elements() const noexcept { return elems_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool is_unit() const noexcept { return elems_.size() == 1 && elems_[0].is_constant(); }
  bool is_zero_ideal() const noexcept { return elems_.empty(); }
  bool is_homogeneous() const noexcept;
  std::vector<Monomial> lead_monomials() const;

  std::optional<Truncation> truncation() const noexcept { return truncation_; }
  GroebnerBasis with_truncation(std::optional<Truncation> t) const {
    GroebnerBasis g = *this;
    g.truncation_ = t;
    return g;
  }

  // Wraps polynomials already known to form a Groebner basis (not
  // necessarily reduced) under `order`.
  static GroebnerBasis trusted(MonomialOrder order, std::vector<Polynomial> elems,
                               std::optional<Truncation> t = std::nullopt) {
    GroebnerBasis g;
    g.order_ = order;
    g.elems_ = std::move(elems);
    g.truncation_ = t;
    return g;
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.order_ == b.order_ && a.elems_ == b.elems_;
  }

 private:
  friend class GroebnerBuilder;
  std::vector<Polynomial> elems_;
  MonomialOrder order_;
  std::optional<Truncation> truncation_;
};

GroebnerBasis groebner_basis(const PolyRing& ring, std::span<const Polynomial> gens);

// Basis of a homogeneous ideal known to contain every monomial of degree
// `nil`: pairs of degree >= nil are skipped and the missing monomials of
// degree nil are appended.
GroebnerBasis homogeneous_groebner_basis(const PolyRing& ring, std::span<const Polynomial> gens,
                                         unsigned nil);

// Basis of (base) + (gens).  `base` must be a Groebner basis for ring's order;
// pairs inside it are not revisited.  Its truncation degree is inherited.
GroebnerBasis extend_groebner_basis(const PolyRing& ring, const GroebnerBasis& base,
                                    std::span<const Polynomial> gens);

Polynomial normal_form(const PolyRing& ring, const Polynomial& p, const GroebnerBasis& gb);
bool reduces_to_zero(const PolyRing& ring, const Polynomial& p, const GroebnerBasis& gb);

}  // namespace fibercone
