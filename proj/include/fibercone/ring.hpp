#pragma once

#include "fibercone/groebner.hpp"
#include "fibercone/polynomial.hpp"

#include <memory>
#include <string>
#include <vector>

namespace fibercone {

// A = k[vars]/Q, localized at m = (vars).  Computations happen in k[vars]
// on ideals containing Q.
class Ring {
  struct Token {};

 public:
  Ring(Token, PolyRing poly, std::vector<Polynomial> defining);

  static std::shared_ptr<const Ring> create(CoefField field, std::vector<std::string> variables,
                                            const std::vector<std::string>& defining = {});
  static std::shared_ptr<const Ring> create(PolyRing poly, std::vector<Polynomial> defining);

  const PolyRing& poly_ring() const noexcept { return poly_; }
  const CoefField& field() const noexcept { return poly_.field(); }
  const std::vector<std::string>& variables() const noexcept { return poly_.variables(); }
  std::size_t num_vars() const noexcept { return poly_.num_vars(); }
  const std::vector<Polynomial>& defining_ideal() const noexcept { return defining_; }
  const GroebnerBasis& defining_basis() const noexcept { return defining_gb_; }
  bool has_defining_ideal() const noexcept { return !defining_gb_.is_zero_ideal(); }
  int dimension() const noexcept { return dim_; }

  // k[t, vars] with t first and an order eliminating t.
  const PolyRing& elimination_ring() const noexcept { return elim_; }

  std::string to_string() const;

 private:
  PolyRing poly_;
  std::vector<Polynomial> defining_;
  GroebnerBasis defining_gb_;
  int dim_ = 0;
  PolyRing elim_;
};

using RingPtr = std::shared_ptr<const Ring>;

// Krull dimension of k[vars]/Q via maximal independent sets modulo the lead
// terms of GB(Q).
int krull_dim(const Ring& ring);

}  // namespace fibercone
