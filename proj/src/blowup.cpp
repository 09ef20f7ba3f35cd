#include "fibercone/blowup.hpp"

#include "fibercone/errors.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

namespace fibercone {

std::int64_t SeriesTable::at(int degree) const {
  int i = degree - first_degree;
  if (i < 0 || i >= static_cast<int>(values.size())) return 0;
  return values[i];
}

std::optional<int> SeriesTable::top_nonzero() const {
  for (int i = static_cast<int>(values.size()) - 1; i >= 0; --i)
    if (values[i] != 0) return first_degree + i;
  return std::nullopt;
}

std::optional<int> SeriesTable::bottom_nonzero() const {
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) return first_degree + static_cast<int>(i);
  return std::nullopt;
}

std::vector<int> SeriesTable::support() const {
  std::vector<int> s;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) s.push_back(first_degree + static_cast<int>(i));
  return s;
}

std::int64_t SeriesTable::total() const { return std::accumulate(values.begin(), values.end(), std::int64_t{0}); }

namespace {

std::int64_t len(const Ideal& i) { return static_cast<std::int64_t>(length(i).value); }

std::uint64_t bounded_draw(std::mt19937_64& g, std::uint64_t range) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - max % range;
  for (;;) {
    std::uint64_t v = g();
    if (v < limit) return v % range;
  }
}

Scalar random_coefficient(std::mt19937_64& g, const CoefField& k) {
  constexpr std::uint64_t kBound = 50;
  if (k.is_rationals()) {
    auto v = static_cast<long>(bounded_draw(g, 2 * kBound));
    return Scalar(v < static_cast<long>(kBound) ? v - static_cast<long>(kBound) : v - static_cast<long>(kBound) + 1);
  }
  return Scalar(static_cast<long>(1 + bounded_draw(g, k.characteristic() - 1)));
}

std::string list_failures(const std::vector<bool>& certs) {
  std::string s;
  for (std::size_t n = 0; n < certs.size(); ++n)
    if (!certs[n]) s += (s.empty() ? "" : ",") + std::to_string(n);
  return s.empty() ? "none" : s;
}

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

std::vector<Polynomial> minimal_generators(const Ideal& i) {
  const RingPtr& ring = i.ring();
  if (i.is_unit()) return {ring->poly_ring().one()};
  Ideal mi = ideal_product(Ideal::maximal(ring), i);
  std::vector<Polynomial> kept;
  Ideal cur = mi;
  for (const Polynomial& g : i.basis_generators()) {
    if (cur.contains(g)) continue;
    kept.push_back(g);
    cur = ideal_sum(mi, Ideal(ring, kept));
  }
  return kept;
}

std::vector<bool> reduction_certificates(const Filtration& f, const std::vector<Polynomial>& gens) {
  const RingPtr& ring = f.ring();
  std::vector<bool> certs(f.bound(), false);
  for (int n = 0; n < f.bound(); ++n) {
    const Ideal& next = f.term(n + 1);
    const Ideal& m_next = f.m_term(n + 1);
    if (gens.empty()) {
      certs[n] = m_next.contains(next);
      continue;
    }
    // J I_n from raw products: a Groebner basis of J alone has no known
    // truncation, while m I_{n+1} does and the sum inherits it.
    m_next.groebner();
    std::vector<Polynomial> prods = gens;
    if (n > 0) {
      prods.clear();
      for (const Polynomial& g : gens)
        for (const Polynomial& h : f.term(n).basis_generators()) prods.push_back(ring->poly_ring().mul(g, h));
    }
    certs[n] = ideal_sum(m_next, Ideal(ring, std::move(prods))).contains(next);
  }
  return certs;
}

std::optional<int> reduction_number_from(const std::vector<bool>& certs) {
  if (certs.empty() || !certs.back()) return std::nullopt;
  int r = static_cast<int>(certs.size()) - 1;
  while (r > 0 && certs[r - 1]) --r;
  return r;
}

int reduction_number(const Filtration& f, const std::vector<Polynomial>& gens) {
  auto certs = reduction_certificates(f, gens);
  auto r = reduction_number_from(certs);
  if (!r)
    throw ReductionNotFoundError("not a reduction within bound " + std::to_string(f.bound()) +
                                 "; failing certificates at n = " + list_failures(certs));
  return *r;
}

namespace {

ReductionData assemble(const Filtration& f, std::vector<Polynomial> gens, std::vector<bool> certs, int r,
                       std::uint64_t seed, int attempts) {
  Ideal jloc = ideal_sum(f.term(r + 1), Ideal(f.ring(), gens));
  return ReductionData{std::move(gens), std::move(jloc), r, f.bound(), seed, attempts, std::move(certs)};
}

}  // namespace

ReductionData find_minimal_reduction(const Filtration& f, std::uint64_t seed) {
  if (!f.is_hilbert()) throw PreconditionError("reduction search needs I1 to be m-primary");
  const RingPtr& ring = f.ring();
  const PolyRing& R = ring->poly_ring();
  const int d = ring->dimension();
  std::vector<Polynomial> mins = minimal_generators(f.term(1));
  if (static_cast<int>(mins.size()) < d)
    throw StructuralError("I1 has fewer minimal generators than the dimension");
  std::mt19937_64 gen(seed);
  std::string log;
  constexpr int kAttempts = 20;
  for (int attempt = 1; attempt <= kAttempts; ++attempt) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < d; ++i) {
      Polynomial p;
      for (const Polynomial& g : mins) p = R.add(p, R.scale(g, random_coefficient(gen, ring->field())));
      gens.push_back(std::move(p));
    }
    auto certs = reduction_certificates(f, gens);
    if (auto r = reduction_number_from(certs)) return assemble(f, std::move(gens), std::move(certs), *r, seed, attempt);
    log += "; attempt " + std::to_string(attempt) + " failed at n = " + list_failures(certs);
  }
  throw ReductionNotFoundError("no reduction found within bound " + std::to_string(f.bound()) + log);
}

ReductionData certify_reduction(const Filtration& f, std::vector<Polynomial> gens) {
  const RingPtr& ring = f.ring();
  if (static_cast<int>(gens.size()) != ring->dimension())
    throw PreconditionError("reduction needs exactly d = " + std::to_string(ring->dimension()) + " generators");
  const Ideal& i1 = f.term(1);
  for (const Polynomial& g : gens)
    if (!i1.contains(g))
      throw PreconditionError("reduction generator " + ring->poly_ring().to_string(g) + " is not in I1");
  auto certs = reduction_certificates(f, gens);
  auto r = reduction_number_from(certs);
  if (!r)
    throw ReductionNotFoundError("given J is not a reduction within bound " + std::to_string(f.bound()) +
                                 "; failing certificates at n = " + list_failures(certs));
  return assemble(f, std::move(gens), std::move(certs), *r, 0, 0);
}

struct ReducedFiltration::Cache {
  Cache(Filtration f0, ReductionData r0) : f(std::move(f0)), red(std::move(r0)) {}
  Filtration f;
  ReductionData red;
  std::recursive_mutex mu;
  std::map<std::pair<int, int>, Ideal> memo;
};

namespace {

enum Slot { kTermJ, kMTermJ, kJTerm, kJPow, kMTermJTerm };

template <class Fn>
const Ideal& memo(ReducedFiltration::Cache& c, Slot slot, int n, Fn&& fn) {
  std::lock_guard lock(c.mu);
  auto key = std::pair<int, int>(slot, n);
  if (auto it = c.memo.find(key); it != c.memo.end()) return it->second;
  Ideal v = fn();
  return c.memo.emplace(key, std::move(v)).first->second;
}

}  // namespace

ReducedFiltration::ReducedFiltration(Filtration f, ReductionData red)
    : c_(std::make_shared<Cache>(std::move(f), std::move(red))) {}

const Filtration& ReducedFiltration::filtration() const noexcept { return c_->f; }
const ReductionData& ReducedFiltration::reduction() const noexcept { return c_->red; }
const RingPtr& ReducedFiltration::ring() const noexcept { return c_->f.ring(); }
int ReducedFiltration::dim() const noexcept { return c_->f.ring()->dimension(); }
int ReducedFiltration::r() const noexcept { return c_->red.r; }
int ReducedFiltration::bound() const noexcept { return c_->f.bound(); }
const Ideal& ReducedFiltration::term(int n) const { return c_->f.term(n); }
const Ideal& ReducedFiltration::m_term(int n) const { return c_->f.m_term(n); }
const Ideal& ReducedFiltration::j() const noexcept { return c_->red.ideal; }

const Ideal& ReducedFiltration::term_plus_j(int n) const {
  if (n > r() + 1) return j();
  return memo(*c_, kTermJ, n, [&] { return ideal_sum(term(n), j()); });
}

const Ideal& ReducedFiltration::m_term_plus_j(int n) const {
  if (n > r() + 1) return j();
  return memo(*c_, kMTermJ, n, [&] { return ideal_sum(m_term(n), j()); });
}

const Ideal& ReducedFiltration::m_term_plus_j_term(int n) const {
  if (n > r() + 1) return term(n);
  return memo(*c_, kMTermJTerm, n, [&] { return ideal_sum(m_term(n), j_times_term(n - 1)); });
}

const Ideal& ReducedFiltration::j_times_term(int n) const {
  if (n <= 0) return j();
  // Certified: I_{n+1} = J I_n locally for r <= n < B, and both are m-primary.
  if (n >= r() && n < bound()) return term(n + 1);
  return memo(*c_, kJTerm, n, [&] {
    // J I_n = I_{r+1} I_n + J_raw I_n.  The first summand carries a known
    // truncation; the raw products are only reduced against it.
    Ideal base = ideal_product(term(r() + 1), term(n));
    base.groebner();
    std::vector<Polynomial> prods;
    for (const Polynomial& g : c_->red.generators)
      for (const Polynomial& h : term(n).basis_generators()) prods.push_back(ring()->poly_ring().mul(g, h));
    return ideal_sum(base, Ideal(ring(), std::move(prods)));
  });
}

const Ideal& ReducedFiltration::j_power(int m) const {
  if (m <= 0) return memo(*c_, kJPow, 0, [&] { return Ideal::unit(ring()); });
  if (m == 1) return j();
  return memo(*c_, kJPow, m, [&] { return ideal_product(j_power(m - 1), j()); });
}

Ideal ReducedFiltration::partial_j(int k) const {
  const auto& g = c_->red.generators;
  k = std::clamp(k, 0, static_cast<int>(g.size()));
  return Ideal(ring(), std::vector<Polynomial>(g.begin(), g.begin() + k));
}

SeriesTable fiber_dims(const Filtration& f, int bound) {
  SeriesTable t{"fiber_dims", 0, {}};
  for (int n = 0; n <= bound; ++n) t.values.push_back(n == 0 ? 1 : len(f.m_term(n)) - len(f.term(n)));
  return t;
}

SeriesTable graded_dims_G(const Filtration& f, int bound) {
  SeriesTable t{"graded_dims_G", 0, {}};
  for (int n = 0; n < bound; ++n) t.values.push_back(len(f.term(n + 1)) - len(f.term(n)));
  return t;
}

ModJTables mod_J_dims(const ReducedFiltration& rf) {
  ModJTables t{{"fiber_mod_J", 0, {}}, {"graded_mod_J", 0, {}}, {"fiber_reduction", 0, {}}};
  const int b = rf.bound();
  for (int n = 0; n <= b; ++n) {
    t.fiber.values.push_back(len(rf.m_term_plus_j(n)) - len(rf.term_plus_j(n)));
    t.fiber_reduction.values.push_back(len(rf.m_term_plus_j_term(n)) - len(rf.term(n)));
  }
  for (int n = 0; n < b; ++n) t.graded.values.push_back(len(rf.term_plus_j(n + 1)) - len(rf.term_plus_j(n)));
  for (const SeriesTable* s : {&t.fiber, &t.graded, &t.fiber_reduction})
    if (auto top = s->top_nonzero(); top && *top > rf.r())
      throw StructuralError(s->label + " does not vanish above r = " + std::to_string(rf.r()));
  return t;
}

std::int64_t alternating_sum(const SeriesTable& s, int l, int n) {
  std::int64_t sum = 0, binom = 1;
  for (int i = 0; i <= l; ++i) {
    sum += (i % 2 ? -binom : binom) * s.at(n - i);
    binom = binom * (l - i) / (i + 1);
  }
  return sum;
}

AInvariants a_invariants(const ReducedFiltration& rf, const ModJTables& t, bool cm_F, bool cm_G) {
  AInvariants a;
  const int d = rf.dim();
  a.a_F = t.fiber_reduction.top_nonzero().value_or(0) - d;
  a.a_G = t.graded.top_nonzero().value_or(0) - d;
  a.expected = rf.r() - d;
  a.consistent = a.a_F == a.expected && a.a_G == a.expected;
  a.reliable = cm_F && cm_G;
  return a;
}

Regularity regularity_F(const ReducedFiltration& rf, const ModJTables& t, bool cm_F, bool cm_G) {
  Regularity g;
  g.reg_F = t.fiber_reduction.top_nonzero().value_or(0);
  g.equals_r = g.reg_F == rf.r();
  g.reg_G = t.graded.top_nonzero().value_or(0);
  g.reg_G_leq_reg_F = g.reg_G <= g.reg_F;
  g.reliable = cm_F && cm_G;
  return g;
}

Multiplicities multiplicities(const ModJTables& t, bool cm_F, bool cm_G) {
  return Multiplicities{t.graded.total(), t.fiber.total(), cm_F && cm_G};
}

SeriesTable canonical_socle_series(const Filtration& f, int bound, int offset) {
  if (!f.is_hilbert()) throw PreconditionError("canonical socle series needs I1 to be m-primary");
  SeriesTable t{"canonical_socle", -offset, {}};
  Ideal m = Ideal::maximal(f.ring());
  for (int k = 0; k < bound; ++k) {
    const Ideal& next = f.term(k + 1);
    Ideal soc = ideal_intersect(ideal_colon(next, m), f.term(k));
    t.values.push_back(len(next) - len(soc));
  }
  return t;
}

ColonPowerSeries colon_power_series(const ReducedFiltration& rf, bool cm_G) {
  const RingPtr& ring = rf.ring();
  if (ring->defining_basis().size() > 1)
    throw PreconditionError(
        "colon-power series needs a Gorenstein ambient; only polynomial rings and hypersurfaces are recognized");
  if (rf.dim() == 0) throw PreconditionError("colon-power series needs d > 0");
  if (!cm_G) throw PreconditionError("colon-power series needs the G Cohen-Macaulay certificate");
  const int b = rf.bound();
  const Ideal& ir = rf.term(rf.r());
  const Ideal m = Ideal::maximal(ring);
  std::vector<Ideal> colon;
  for (int k = 0; k <= b; ++k) colon.push_back(ideal_colon(rf.j_power(k), ir));
  ColonPowerSeries s{{"colon_power_first", 0, {}}, {"colon_power_second", 0, {}}};
  for (int k = 0; k < b; ++k) {
    s.first.values.push_back(len(colon[k + 1]) - len(colon[k]));
    // (J^{k+1} : m I_r) = ((J^{k+1} : I_r) : m)
    Ideal top = ideal_intersect(ideal_colon(colon[k + 1], m), colon[k]);
    s.second.values.push_back(len(colon[k + 1]) - len(top));
  }
  return s;
}

VeroneseCheck veronese_a_check(const Filtration& f, int r, int k, std::uint64_t seed, bool cm_F) {
  const int d = f.ring()->dimension();
  if (d == 0) throw PreconditionError("Veronese a-invariant check needs d > 0");
  if (!cm_F) throw PreconditionError("Veronese a-invariant check needs the F Cohen-Macaulay certificate");
  Filtration fv = f.veronese(k);
  ReducedFiltration rv(fv, find_minimal_reduction(fv, seed));
  const int b = fv.bound();
  SeriesTable mu = fiber_dims(fv, b);
  SeriesTable fj{"fiber_reduction", 0, {}};
  bool cm = true;
  for (int n = 0; n <= b; ++n) {
    fj.values.push_back(len(rv.m_term_plus_j_term(n)) - len(rv.term(n)));
    cm = cm && fj.values.back() == alternating_sum(mu, d, n);
  }
  VeroneseCheck v;
  v.k = k;
  v.r_k = rv.r();
  v.a_k = fj.top_nonzero().value_or(0) - d;
  v.expected = floor_div(r - d, k);
  v.cm_k = cm;
  v.pass = v.a_k == v.expected;
  v.bound = b;
  return v;
}

Diagnostic superficiality_diagnostic(const ReducedFiltration& rf, int limit) {
  Diagnostic diag{"superficiality", limit, {}};
  const auto& gens = rf.reduction().generators;
  if (gens.empty()) return diag;
  const Polynomial& x = gens.front();
  const Ideal& ic = rf.term(rf.r());
  for (int n = rf.r(); n <= limit; ++n) {
    Ideal lhs = ideal_intersect(ideal_colon(rf.term(n + 1), x), ic);
    if (!(lhs == rf.term(n))) diag.failures.push_back(n);
  }
  return diag;
}

Diagnostic analytic_independence_diagnostic(const ReducedFiltration& rf, int limit) {
  Diagnostic diag{"analytic_independence", limit, {}};
  if (rf.filtration().kind() != FiltrationKind::Adic || rf.dim() == 0) {
    diag.bound = 0;
    return diag;
  }
  Ideal m = Ideal::maximal(rf.ring());
  const PolyRing& R = rf.ring()->poly_ring();
  const auto& gens = rf.reduction().generators;
  // Degree-h monomials in the generators, each once; `first` is the least
  // generator index a product may still take.
  std::vector<Polynomial> prods{R.one()};
  std::vector<std::size_t> first{0};
  for (int h = 1; h <= limit; ++h) {
    std::vector<Polynomial> next;
    std::vector<std::size_t> next_first;
    for (std::size_t a = 0; a < prods.size(); ++a)
      for (std::size_t g = first[a]; g < gens.size(); ++g) {
        next.push_back(R.mul(prods[a], gens[g]));
        next_first.push_back(g);
      }
    prods = std::move(next);
    first = std::move(next_first);
    // J^h/mJ^h has dimension at most #prods and maps onto (J^h + mI_h)/mI_h;
    // when the image is that large the map is injective and the equality holds.
    const Ideal& mi = rf.m_term(h);
    if (auto c = colength_of_sum(mi, prods); c && length(mi).value - *c == prods.size()) continue;
    const Ideal& jh = rf.j_power(h);
    if (!(ideal_intersect(jh, rf.m_term(h)) == ideal_product(m, jh))) diag.failures.push_back(h);
  }
  return diag;
}

Diagnostic fiber_containment_diagnostic(const Filtration& f) {
  Diagnostic diag{"fiber_containment", f.bound() - 1, {}};
  for (int n = 0; n < f.bound(); ++n)
    if (!f.m_term(n).contains(f.term(n + 1))) diag.failures.push_back(n);
  return diag;
}

}  // namespace fibercone
