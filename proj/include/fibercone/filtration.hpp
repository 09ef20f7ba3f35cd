#pragma once

#include "fibercone/ideal.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fibercone {

enum class FiltrationKind { Adic, Table };

// I_n = A for n <= 0; I_n from the table for 1 <= n <= N; I_n = I_1 I_{n-1}
// beyond.  A Veronese transform reads base.term(n k).
class Filtration {
 public:
  FiltrationKind kind() const noexcept;
  const RingPtr& ring() const noexcept;
  int bound() const noexcept;
  int table_length() const noexcept;  // N; 1 for adic
  int veronese_factor() const noexcept;
  bool is_hilbert() const;

  // Throws BoundExceededError for n > bound().
  const Ideal& term(int n) const;
  // m * I_n, cached.
  const Ideal& m_term(int n) const;
  // I_n = I_1 * I_{n-1} for this n (always true past the table).
  bool is_product_term(int n) const;

  Filtration veronese(int k) const;
  Filtration with_bound(int bound) const;
  // Same generators over another ring (used to pass to A/(x_1..x_k)).
  Filtration over_ring(const RingPtr& ring) const;

  std::string describe() const;

  struct State;

 private:
  explicit Filtration(std::shared_ptr<State> s) : s_(std::move(s)) {}
  friend Filtration make_filtration(const RingPtr&, FiltrationKind,
                                    const std::vector<std::vector<Polynomial>>&, std::optional<int>);
  const Ideal& term_unbounded(int n) const;
  std::shared_ptr<State> s_;
};

int default_bound(int table_length, int dim);

// Validates: I_1 proper and inside m; for tables the chain and
// I_a I_b in I_{a+b} for a <= b <= N, which by the continuation rule gives
// goodness in every degree.  Violations throw FiltrationError with a witness.
Filtration make_filtration(const RingPtr& ring, FiltrationKind kind,
                           const std::vector<std::vector<Polynomial>>& terms,
                           std::optional<int> bound = std::nullopt);

}  // namespace fibercone
