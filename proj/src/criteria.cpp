#include "fibercone/criteria.hpp"

#include "fibercone/errors.hpp"

namespace fibercone {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::HypothesesFailed: return "hypotheses-failed";
  }
  return "hypotheses-failed";
}

std::optional<CriterionRow> CmCheck::first_failure() const {
  for (const auto& r : rows)
    if (!r.pass) return r;
  for (const auto& r : module_rows)
    if (!r.pass) return r;
  return std::nullopt;
}

namespace {

std::int64_t len(const Ideal& i) { return static_cast<std::int64_t>(length(i).value); }

CriterionRow row(int n, std::int64_t lhs, std::int64_t rhs) { return CriterionRow{n, lhs, rhs, lhs == rhs}; }

bool all_pass(const std::vector<CriterionRow>& rows) {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

std::vector<int> colon_indices(const ReducedFiltration& rf) {
  std::vector<int> js;
  for (int j = 1; j <= rf.r() + 1; ++j)
    if (j == 1 || !rf.filtration().is_product_term(j)) js.push_back(j);
  return js;
}

}  // namespace

CmCheck fiber_cm_check(const ReducedFiltration& rf, const ModJTables& t, const SeriesTable& fiber) {
  CmCheck c;
  c.bound = t.fiber_reduction.last_degree();
  for (int n = 0; n <= c.bound; ++n)
    c.rows.push_back(row(n, t.fiber_reduction.at(n), alternating_sum(fiber, rf.dim(), n)));
  c.cm = all_pass(c.rows);
  return c;
}

CmCheck g_cm_check(const ReducedFiltration& rf, const ModJTables& t, const SeriesTable& graded) {
  CmCheck c;
  c.bound = t.graded.last_degree();
  for (int n = 0; n <= c.bound; ++n) {
    std::int64_t rhs = alternating_sum(graded, rf.dim(), n);
    c.rows.push_back(row(n, t.graded.at(n), rhs));
    Ideal den = ideal_sum(rf.term(n + 1), rf.j_times_term(n - 1));
    c.module_rows.push_back(row(n, len(den) - len(rf.term(n)), rhs));
  }
  c.cm = all_pass(c.rows) && all_pass(c.module_rows);
  return c;
}

SocleTable graded_socle_G_modJ(const ReducedFiltration& rf) {
  SocleTable s{{"socle_G_mod_J", 0, {}}, rf.r() + 1, colon_indices(rf)};
  Ideal m = Ideal::maximal(rf.ring());
  for (int n = 0; n <= rf.r(); ++n) {
    const Ideal& den = rf.term_plus_j(n + 1);
    Ideal x = ideal_intersect(rf.term_plus_j(n), ideal_colon(den, m));
    for (int j : s.evaluated_j) x = ideal_intersect(x, ideal_colon(rf.term_plus_j(n + j + 1), rf.term(j)));
    s.table.values.push_back(len(den) - len(x));
  }
  return s;
}

SocleTable graded_socle_F_modJ(const ReducedFiltration& rf) {
  SocleTable s{{"socle_F_mod_J", 0, {}}, rf.r() + 1, colon_indices(rf)};
  for (int n = 0; n <= rf.r(); ++n) {
    const Ideal& den = rf.m_term_plus_j(n);
    Ideal y = rf.term_plus_j(n);
    for (int j : s.evaluated_j) y = ideal_intersect(y, ideal_colon(rf.m_term_plus_j(n + j), rf.term(j)));
    s.table.values.push_back(len(den) - len(y));
  }
  return s;
}

SocleTable graded_socle_F_reduction(const ReducedFiltration& rf) {
  SocleTable s{{"socle_F_reduction", 0, {}}, rf.r() + 1, colon_indices(rf)};
  for (int n = 0; n <= rf.r(); ++n) {
    const Ideal& den = rf.m_term_plus_j_term(n);
    Ideal y = rf.term(n);
    for (int j : s.evaluated_j)
      if (n + j <= rf.r() + 1) y = ideal_intersect(y, ideal_colon(rf.m_term_plus_j_term(n + j), rf.term(j)));
    s.table.values.push_back(len(den) - len(y));
  }
  return s;
}

GorensteinVerdict g_gorenstein_check(const CmCheck& g_cm, const SocleTable& socle_G) {
  GorensteinVerdict v;
  v.subject = "G";
  v.cm = g_cm.cm;
  v.bound = g_cm.bound;
  v.rows = g_cm.rows;
  v.socle_total = socle_G.table.total();
  if (!v.cm) {
    v.gorenstein = Tri::No;
    v.notes.push_back("G is not Cohen-Macaulay");
  } else {
    v.gorenstein = *v.socle_total == 1 ? Tri::Yes : Tri::No;
  }
  return v;
}

BaseQuotient base_quotient_gorenstein(const Filtration& f) {
  const Ideal& i1 = f.term(1);
  if (!is_m_primary(i1)) throw PreconditionError("A/I1 socle needs I1 to be m-primary");
  Ideal soc = ideal_colon(i1, Ideal::maximal(f.ring()));
  BaseQuotient b;
  b.length = len(i1) - len(soc);
  b.gorenstein = b.length == 1;
  return b;
}

GorensteinVerdict fiber_gorenstein_criterion(const ReducedFiltration& rf, const GorensteinVerdict& g_gor,
                                             const CmCheck& f_cm, const SeriesTable& fiber,
                                             const BaseQuotient& base) {
  GorensteinVerdict v;
  v.subject = "F";
  v.cm = f_cm.cm;
  v.bound = rf.bound() - 1;
  if (g_gor.gorenstein != Tri::Yes) v.notes.push_back("hypothesis failed: G is not Gorenstein");
  if (!f_cm.cm) v.notes.push_back("hypothesis failed: F is not Cohen-Macaulay");
  Ideal m = Ideal::maximal(rf.ring());
  const int d = rf.dim();
  for (int n = 1; n < rf.bound(); ++n) {
    Ideal den = ideal_sum(rf.term(n + 1), rf.j_times_term(n - 1));
    Ideal x = ideal_intersect(ideal_colon(rf.term_plus_j(n + 1), m), rf.term(n));
    CriterionRow rw = row(n, len(den) - len(ideal_sum(x, den)), alternating_sum(fiber, d, n));
    (n <= rf.r() ? v.rows : v.sanity_rows).push_back(rw);
  }
  if (!v.notes.empty()) {
    v.gorenstein = Tri::HypothesesFailed;
    return v;
  }
  bool ok = all_pass(v.rows) && base.length == 1;
  if (base.length != 1) v.notes.push_back("lambda((I1:m)/I1) = " + std::to_string(base.length));
  if (!all_pass(v.sanity_rows)) v.notes.push_back("sanity rows beyond r failed");
  v.gorenstein = ok ? Tri::Yes : Tri::No;
  return v;
}

GorensteinVerdict fiber_gorenstein_oracle(const CmCheck& f_cm, const SocleTable& socle_F_reduction) {
  GorensteinVerdict v;
  v.subject = "F";
  v.cm = f_cm.cm;
  v.bound = f_cm.bound;
  v.socle_total = socle_F_reduction.table.total();
  if (!f_cm.cm) {
    v.notes.push_back("hypothesis failed: F is not Cohen-Macaulay");
    v.gorenstein = Tri::HypothesesFailed;
    return v;
  }
  v.gorenstein = *v.socle_total == 1 ? Tri::Yes : Tri::No;
  return v;
}

E0Comparison e0_comparison(const Filtration& f, const Multiplicities& e, Tri g_gor) {
  E0Comparison c;
  c.leq = e.e0_F <= e.e0_G;
  c.equal = e.e0_F == e.e0_G;
  c.i1_is_m = f.term(1) == Ideal::maximal(f.ring());
  c.reliable = e.reliable;
  c.equality_clause = e.reliable && g_gor == Tri::Yes;
  c.equality_holds = !c.equality_clause || c.equal == c.i1_is_m;
  return c;
}

IdentityCheck mu_alternating_identity_check(const ReducedFiltration& rf, int k, const SeriesTable& fiber, bool cm_F,
                                            bool cm_G) {
  if (k < 1 || k > rf.dim()) throw PreconditionError("mu alternating identity needs 1 <= k <= d");
  if (!cm_F || !cm_G) throw PreconditionError("mu alternating identity needs both Cohen-Macaulay certificates");
  IdentityCheck c;
  c.name = "mu_alternating_k" + std::to_string(k);
  c.bound = rf.bound();
  Ideal jk = rf.partial_j(k);
  auto len_sum = [&](const Ideal& i) -> std::int64_t {
    if (auto l = colength_of_sum(i, jk.generators())) return static_cast<std::int64_t>(*l);
    return len(ideal_sum(i, jk));
  };
  for (int n = 1; n <= rf.bound(); ++n) {
    std::int64_t lhs = len_sum(rf.m_term(n)) - len_sum(rf.term(n));
    c.rows.push_back(row(n, lhs, alternating_sum(fiber, k, n)));
    if (!c.rows.back().pass) c.failures.push_back("n=" + std::to_string(n));
  }
  c.pass = c.failures.empty();
  return c;
}

namespace {

std::int64_t mu_hat(const ReducedFiltration& rf, int n) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  return len(rf.m_term(n)) - len(rf.term(n));
}

void length_identity_core(const ReducedFiltration& rf, IdentityCheck& c) {
  const Polynomial& a = rf.reduction().generators.front();
  Ideal m = Ideal::maximal(rf.ring());
  for (int n = 1; n <= rf.r(); ++n) {
    const Ideal& mi = rf.m_term(n);
    for (int i = 0; i < n; ++i) {
      Ideal p = i == 0 ? rf.j_power(n) : ideal_product(rf.j_power(n - i), rf.term(i));
      std::int64_t lhs = len(ideal_sum(mi, p)) - len(rf.term(n));
      std::int64_t third = len(ideal_product(m, p)) - len(ideal_intersect(p, mi));
      c.rows.push_back(row(n, lhs, mu_hat(rf, n) - mu_hat(rf, i) + third));
      if (!c.rows.back().pass) c.failures.push_back("length identity n=" + std::to_string(n) + " i=" + std::to_string(i));
    }
  }
  for (int n = 1; n <= rf.r() - 1; ++n) {
    if (!(ideal_intersect(rf.term(n), ideal_colon(rf.m_term(n + 1), a)) == rf.m_term(n)))
      c.failures.push_back("I_n cap (m I_{n+1} : a) != m I_n at n=" + std::to_string(n));
    if (!(ideal_intersect(rf.j_times_term(n), rf.m_term(n + 1)) == ideal_product(rf.j(), rf.m_term(n))))
      c.failures.push_back("a I_n cap m I_{n+1} != a m I_n at n=" + std::to_string(n));
  }
}

}  // namespace

IdentityCheck length_identity_check(const ReducedFiltration& rf, bool cm_F, bool cm_G) {
  IdentityCheck c;
  c.name = "dim_one_length";
  c.bound = rf.r();
  const int d = rf.dim();
  if (d == 1) {
    length_identity_core(rf, c);
  } else if (d > 1) {
    if (!cm_F || !cm_G)
      throw PreconditionError("length identity with d > 1 needs both Cohen-Macaulay certificates for the cut");
    const auto& gens = rf.reduction().generators;
    const RingPtr& ring = rf.ring();
    std::vector<Polynomial> q = ring->defining_ideal();
    q.insert(q.end(), gens.begin(), gens.end() - 1);
    RingPtr cut = Ring::create(ring->poly_ring(), q);
    if (cut->dimension() != 1) throw PreconditionError("cut by x_1..x_{d-1} does not have dimension 1");
    // Once I_{n+1} = x I_n holds for s consecutive n >= max(r, s), with s the
    // table length, it holds for all larger n; certify a little past that.
    const int s = rf.filtration().table_length();
    const int cut_bound = std::min(rf.bound(), std::max(rf.r(), s) + s + 1);
    Filtration fc = rf.filtration().over_ring(cut).with_bound(cut_bound);
    std::optional<ReducedFiltration> rc;
    try {
      rc.emplace(fc, certify_reduction(fc, {gens.back()}));
    } catch (const ReductionNotFoundError&) {
      c.failures.push_back("reduction number changed under the cut");
      c.pass = false;
      return c;
    }
    c.bound = rc->r();
    if (rc->r() != rf.r()) c.failures.push_back("reduction number changed under the cut");
    length_identity_core(*rc, c);
  } else {
    throw PreconditionError("length identity needs d >= 1");
  }
  c.pass = c.failures.empty();
  return c;
}

RegOmegaCheck reg_omega_check(const ReducedFiltration& rf, const ModJTables& t, bool cm_F, bool cm_G) {
  RegOmegaCheck c;
  c.value = rf.dim();
  c.reliable = cm_F && cm_G;
  c.support_equal = t.fiber.support() == t.graded.support();
  c.pass = t.fiber.bottom_nonzero() == 0 && t.graded.bottom_nonzero() == 0 && c.support_equal;
  return c;
}

std::int64_t omega_dimension(const SeriesTable& h, int d, int n) {
  if (d == 0) return h.at(-n);
  std::int64_t sum = 0;
  for (int i = h.first_degree; i <= h.last_degree(); ++i) {
    int top = n - (d - i) + d - 1;  // C(top, d-1) counts monomials of degree n-(d-i) in d variables
    if (n < d - i) continue;
    std::int64_t b = 1;
    for (int q = 1; q <= d - 1; ++q) b = b * (top - q + 1) / q;
    sum += h.at(i) * b;
  }
  return sum;
}

CrossCheck duality_cross_check(const SeriesTable& canonical, const ModJTables& t, int d, Tri g_gor, bool cm_F) {
  CrossCheck c;
  c.applies = g_gor == Tri::Yes && cm_F;
  c.bound = canonical.last_degree();
  if (!c.applies) return c;
  for (int n = canonical.first_degree; n <= canonical.last_degree(); ++n)
    if (canonical.at(n) != omega_dimension(t.fiber, d, n)) c.mismatches.push_back(n);
  c.pass = c.mismatches.empty();
  return c;
}

}  // namespace fibercone
