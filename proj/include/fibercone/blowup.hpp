#pragma once

#include "fibercone/filtration.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace fibercone {

// Integer sequence indexed by degree, values[i] at degree first_degree + i.
struct SeriesTable {
  std::string label;
  int first_degree = 0;
  std::vector<std::int64_t> values;

  std::int64_t at(int degree) const;  // 0 outside the stored range
  int last_degree() const { return first_degree + static_cast<int>(values.size()) - 1; }
  std::optional<int> top_nonzero() const;
  std::optional<int> bottom_nonzero() const;
  std::vector<int> support() const;
  std::int64_t total() const;
};

// A minimal generating set of I picked greedily from its basis generators.
std::vector<Polynomial> minimal_generators(const Ideal& i);

struct ReductionData {
  std::vector<Polynomial> generators;
  // J + I_{r+1}: the contraction of J A_m, which is what products and powers use.
  Ideal ideal;
  int r = 0;
  int bound = 0;
  std::uint64_t seed = 0;
  int attempts = 0;  // 0 when J was given explicitly
  // certificates[n]: I_{n+1} in J I_n + m I_{n+1} (so I_{n+1} = J I_n locally), 0 <= n < bound
  std::vector<bool> certificates;
};

// cert[n] for 0 <= n < bound with J given by raw generators.
std::vector<bool> reduction_certificates(const Filtration& f, const std::vector<Polynomial>& gens);
// min{n : cert[m] for all n <= m < bound}; nullopt when cert[bound-1] fails.
std::optional<int> reduction_number_from(const std::vector<bool>& certs);
int reduction_number(const Filtration& f, const std::vector<Polynomial>& gens);

ReductionData find_minimal_reduction(const Filtration& f, std::uint64_t seed);
ReductionData certify_reduction(const Filtration& f, std::vector<Polynomial> gens);

// Filtration together with a certified reduction; caches the ideals the
// criteria keep asking for.  J below always means the contracted J.
class ReducedFiltration {
 public:
  ReducedFiltration(Filtration f, ReductionData red);

  const Filtration& filtration() const noexcept;
  const ReductionData& reduction() const noexcept;
  const RingPtr& ring() const noexcept;
  int dim() const noexcept;
  int r() const noexcept;
  int bound() const noexcept;

  const Ideal& term(int n) const;
  const Ideal& m_term(int n) const;
  const Ideal& j() const noexcept;
  const Ideal& term_plus_j(int n) const;    // I_n + J
  const Ideal& m_term_plus_j(int n) const;  // m I_n + J
  const Ideal& m_term_plus_j_term(int n) const;  // m I_n + J I_{n-1}
  const Ideal& j_times_term(int n) const;   // J I_n; J for n < 0
  const Ideal& j_power(int m) const;        // A for m <= 0
  Ideal partial_j(int k) const;             // first k generators, uncontracted

  struct Cache;

 private:
  std::shared_ptr<Cache> c_;
};

// mu-hat: 1 at n = 0, 0 for n < 0.
SeriesTable fiber_dims(const Filtration& f, int bound);
// lambda(I_n/I_{n+1}) for 0 <= n < bound.
SeriesTable graded_dims_G(const Filtration& f, int bound);

struct ModJTables {
  SeriesTable fiber;   // lambda((I_n+J)/(m I_n+J)), 0 <= n <= B
  SeriesTable graded;  // lambda((I_n+J)/(I_{n+1}+J)), 0 <= n < B
  // lambda(I_n/(m I_n + J I_{n-1})): the Artinian reduction F/J*F.  Equal to
  // `fiber` when J cap I_n = J I_{n-1}, e.g. when G is Cohen-Macaulay.
  SeriesTable fiber_reduction;
};
ModJTables mod_J_dims(const ReducedFiltration& rf);

// sum_{i=0}^{l} (-1)^i C(l,i) s(n-i), with s = 0 below the first degree.
std::int64_t alternating_sum(const SeriesTable& s, int l, int n);

// a_F and reg_F are read off F/J*F, a_G off G(F/J).
struct AInvariants {
  int a_F = 0;
  int a_G = 0;
  int expected = 0;  // r - d
  bool consistent = false;
  bool reliable = false;  // both CM certificates
};
AInvariants a_invariants(const ReducedFiltration& rf, const ModJTables& t, bool cm_F, bool cm_G);

struct Regularity {
  int reg_F = 0;
  bool equals_r = false;
  int reg_G = 0;
  bool reg_G_leq_reg_F = false;
  bool reliable = false;
};
Regularity regularity_F(const ReducedFiltration& rf, const ModJTables& t, bool cm_F, bool cm_G);

struct Multiplicities {
  std::int64_t e0_G = 0;
  std::int64_t e0_F = 0;
  bool reliable = false;
};
Multiplicities multiplicities(const ModJTables& t, bool cm_F, bool cm_G);

// m -> lambda(((I_{m+1}:m) cap I_m)/I_{m+1}) for 0 <= m < bound, listed at n = m - offset.
SeriesTable canonical_socle_series(const Filtration& f, int bound, int offset);

struct ColonPowerSeries {
  SeriesTable first;   // lambda((J^m:I_r)/(J^{m+1}:I_r))
  SeriesTable second;  // lambda(((J^{m+1}:m I_r) cap (J^m:I_r))/(J^{m+1}:I_r))
};
// Needs A Gorenstein: Q empty or principal.
ColonPowerSeries colon_power_series(const ReducedFiltration& rf, bool cm_G);

struct VeroneseCheck {
  int k = 1;
  int r_k = 0;
  int a_k = 0;
  int expected = 0;  // floor((r-d)/k)
  bool cm_k = false;
  bool pass = false;
  int bound = 0;
};
VeroneseCheck veronese_a_check(const Filtration& f, int r, int k, std::uint64_t seed, bool cm_F);

struct Diagnostic {
  std::string name;
  int bound = 0;
  std::vector<int> failures;  // degrees where the identity failed
  bool ok() const { return failures.empty(); }
};
// (I_{n+1}:x) cap I_r = I_n for the first generator x, r <= n <= limit.
Diagnostic superficiality_diagnostic(const ReducedFiltration& rf, int limit);
// J^h cap m I_h = m J^h, 1 <= h <= limit (adic filtrations).
Diagnostic analytic_independence_diagnostic(const ReducedFiltration& rf, int limit);
// I_{n+1} in m I_n for 0 <= n < bound.
Diagnostic fiber_containment_diagnostic(const Filtration& f);

}  // namespace fibercone
