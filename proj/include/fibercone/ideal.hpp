#pragma once

#include "fibercone/ring.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fibercone {

struct LengthValue {
  std::uint64_t value = 0;
  friend auto operator<=>(const LengthValue&, const LengthValue&) = default;
};

// Staircase statistics of a monomial ideal given by lead monomials.
struct StaircaseInfo {
  std::uint64_t count = 0;
  unsigned max_degree = 0;  // largest degree of a standard monomial
};
// nullopt when the staircase is infinite.
std::optional<StaircaseInfo> staircase_info(const std::vector<Monomial>& leads, std::size_t nvars);

// An ideal of A, stored as its preimage I + Q in k[vars].  Immutable; the
// Groebner basis and staircase data are computed once on demand.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  static Ideal unit(const RingPtr& ring);
  static Ideal zero(const RingPtr& ring);
  static Ideal maximal(const RingPtr& ring);
  static Ideal parse(const RingPtr& ring, std::string_view list);

  const RingPtr& ring() const noexcept;
  const std::vector<Polynomial>& generators() const noexcept;
  const GroebnerBasis& groebner() const;
  // Reduced basis elements not already in Q; used as generators downstream.
  const std::vector<Polynomial>& basis_generators() const;

  bool contains(const Polynomial& p) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const;  // I is contained in Q

  std::optional<StaircaseInfo> staircase() const;
  // Smallest known N with m^N inside I + Q (exact for homogeneous bases).
  std::optional<unsigned> nil_degree() const;

  std::string to_string() const;

  friend bool operator==(const Ideal& a, const Ideal& b);

  struct Impl;

 private:
  explicit Ideal(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  friend Ideal ideal_sum(const Ideal&, const Ideal&);
  friend Ideal ideal_product(const Ideal&, const Ideal&);
  friend Ideal ideal_intersect(const Ideal&, const Ideal&);
  std::shared_ptr<Impl> impl_;
};

Ideal ideal_sum(const Ideal& i, const Ideal& j);
inline Ideal operator+(const Ideal& i, const Ideal& j) { return ideal_sum(i, j); }
Ideal ideal_product(const Ideal& i, const Ideal& j);
inline Ideal operator*(const Ideal& i, const Ideal& j) { return ideal_product(i, j); }
Ideal ideal_power(const Ideal& i, unsigned e);
Ideal ideal_intersect(const Ideal& i, const Ideal& j);
// (I : J); throws DegenerateInputError when J = 0 in A.
Ideal ideal_colon(const Ideal& i, const Ideal& j);
Ideal ideal_colon(const Ideal& i, const Polynomial& g);
// Colength of I + (extra) by linear algebra on A/I; nullopt when I has infinite or very large colength.
std::optional<std::uint64_t> colength_of_sum(const Ideal& i, const std::vector<Polynomial>& extra);

// lambda(A/I); A itself has length 0.
LengthValue length(const Ideal& i);
// lambda(outer/inner) = lambda(A/inner) - lambda(A/outer); requires inner in outer.
std::uint64_t quotient_length(const Ideal& outer, const Ideal& inner);
std::uint64_t mu(const Ideal& i);
bool is_m_primary(const Ideal& i);

}  // namespace fibercone
