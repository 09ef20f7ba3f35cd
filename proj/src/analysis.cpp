#include "fibercone/analysis.hpp"

#include "fibercone/errors.hpp"

#include <algorithm>

namespace fibercone {

namespace {

std::string describe(const std::exception& e) {
  if (auto* f = dynamic_cast<const FiltrationError*>(&e); f && !f->witness().empty())
    return std::string(e.what()) + " (witness " + f->witness() + ")";
  return e.what();
}

template <class Fn>
bool stage(AnalysisReport& rep, const char* name, Fn&& fn) {
  try {
    fn();
    return true;
  } catch (const std::exception& e) {
    rep.failures.push_back({name, describe(e)});
    return false;
  }
}

void add_check(AnalysisReport& rep, std::string name, bool applies, bool pass, int bound, std::string detail = {}) {
  rep.cross_checks.push_back(NamedCheck{std::move(name), applies, applies ? pass : true, bound, std::move(detail)});
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

void cross_checks(AnalysisReport& rep) {
  const bool cmF = rep.f_cm && rep.f_cm->cm;
  const bool cmG = rep.g_cm && rep.g_cm->cm;
  const int r = rep.reduction->r;
  if (rep.mod_j) {
    const auto& t = *rep.mod_j;
    add_check(rep, "mod_J_support_equality", true, t.fiber.support() == t.graded.support(), rep.bound);
    std::int64_t lj = static_cast<std::int64_t>(length(rep.reduction->ideal).value);
    add_check(rep, "fiber_tables_agree_under_G_cm", cmG, t.fiber.values == t.fiber_reduction.values, rep.bound);
    add_check(rep, "telescoping", true, t.graded.total() == lj, rep.bound,
              "sum G(F/J) = " + std::to_string(t.graded.total()) + ", lambda(A/J) = " + std::to_string(lj));
  }
  if (rep.socle_F && rep.socle_F_reduction)
    add_check(rep, "fiber_socles_agree_under_G_cm", cmG,
              rep.socle_F->table.values == rep.socle_F_reduction->table.values, rep.bound);
  if (rep.a_inv) add_check(rep, "a_invariants_equal_r_minus_d", cmF && cmG, rep.a_inv->consistent, rep.bound);
  if (rep.reg) {
    add_check(rep, "reg_F_equals_r", cmF, rep.reg->equals_r, rep.bound);
    add_check(rep, "reg_G_leq_reg_F", cmF && cmG, rep.reg->reg_G_leq_reg_F, rep.bound);
  }
  if (rep.f_cm) {
    bool ok = true;
    for (const auto& row : rep.f_cm->rows)
      if (row.n > r && (row.lhs != 0 || row.rhs != 0)) ok = false;
    add_check(rep, "fiber_rows_vanish_above_r", cmF, ok, rep.f_cm->bound);
  }
  if (rep.f_criterion) {
    bool ok = std::all_of(rep.f_criterion->sanity_rows.begin(), rep.f_criterion->sanity_rows.end(),
                          [](const CriterionRow& x) { return x.pass; });
    add_check(rep, "criterion_rows_beyond_r", cmF, ok, rep.f_criterion->bound);
  }
  if (rep.e0_cmp) {
    add_check(rep, "e0_omega_F_leq_omega_G", rep.e0_cmp->reliable, rep.e0_cmp->leq, rep.bound);
    add_check(rep, "e0_equality_iff_I1_is_m", rep.e0_cmp->equality_clause, rep.e0_cmp->equality_holds, rep.bound);
  }
  if (rep.reg_omega) add_check(rep, "reg_omega_equals_d", rep.reg_omega->reliable, rep.reg_omega->pass, rep.bound);
  if (rep.canonical && rep.mod_j && rep.g_gor) {
    CrossCheck c = duality_cross_check(*rep.canonical, *rep.mod_j, rep.dim, rep.g_gor->gorenstein, cmF);
    add_check(rep, "canonical_socle_vs_duality", c.applies, c.pass, c.bound,
              c.mismatches.empty() ? "" : "mismatch at n = " + join(c.mismatches));
  }
  if (rep.colon_powers && rep.graded && rep.canonical && rep.g_gor) {
    const bool applies = rep.g_gor->gorenstein == Tri::Yes;
    std::vector<int> bad1, bad2;
    const auto& cp = *rep.colon_powers;
    for (std::size_t m = 0; m < cp.first.values.size(); ++m) {
      if (cp.first.values[m] != rep.graded->at(static_cast<int>(m))) bad1.push_back(static_cast<int>(m));
      if (m < rep.canonical->values.size() && cp.second.values[m] != rep.canonical->values[m])
        bad2.push_back(static_cast<int>(m));
    }
    add_check(rep, "colon_powers_vs_graded_dims", applies, bad1.empty(), rep.bound - 1,
              bad1.empty() ? "" : "mismatch at m = " + join(bad1));
    add_check(rep, "colon_powers_vs_canonical_socle", applies, bad2.empty(), rep.bound - 1,
              bad2.empty() ? "" : "mismatch at m = " + join(bad2));
  }
  for (const auto& id : rep.identities) add_check(rep, id.name, true, id.pass, id.bound);
  for (const auto& v : rep.veronese)
    add_check(rep, "veronese_a_k" + std::to_string(v.k), true, v.pass, v.bound,
              "a = " + std::to_string(v.a_k) + ", expected " + std::to_string(v.expected));
  if (rep.g_gor && rep.f_oracle && rep.base) {
    bool applies = rep.g_gor->gorenstein == Tri::Yes && rep.f_oracle->gorenstein == Tri::Yes;
    add_check(rep, "A_mod_I1_gorenstein_when_F_and_G_are", applies, rep.base->gorenstein, rep.bound);
  }
}

}  // namespace

AnalysisReport analyze(const ProblemSpec& spec0, const AnalysisOptions& opts) {
  ProblemSpec spec = spec0;
  if (opts.bound) spec.bound = opts.bound;
  if (opts.seed) spec.seed = *opts.seed;
  AnalysisReport rep;
  rep.seed = spec.seed;
  rep.explicit_reduction = spec.reduction.has_value();
  rep.problem_text = to_problem_text(spec);

  std::optional<Problem> prob;
  if (!stage(rep, "input", [&] { prob.emplace(build_problem(spec)); })) {
    rep.status = AnalysisStatus::InputError;
    return rep;
  }
  const Filtration& f = prob->filtration;
  const RingPtr& ring = prob->ring;
  rep.ring = ring->to_string();
  rep.filtration = f.describe();
  rep.bound = f.bound();
  rep.dim = ring->dimension();
  rep.hilbert = f.is_hilbert();
  if (!rep.hilbert) {
    rep.failures.push_back({"input", "I1 is not m-primary, so the filtration is not Hilbert"});
    rep.status = AnalysisStatus::InputError;
    return rep;
  }

  bool ok = stage(rep, "reduction", [&] {
    rep.reduction.emplace(prob->reduction ? certify_reduction(f, *prob->reduction) : find_minimal_reduction(f, spec.seed));
  });
  if (!ok) {
    if (prob->reduction) rep.status = AnalysisStatus::InputError;
    return rep;
  }
  for (const auto& g : rep.reduction->generators) rep.reduction_text.push_back(ring->poly_ring().to_string(g));
  ReducedFiltration rf(f, *rep.reduction);
  const int B = f.bound();
  const int r = rf.r();
  const int d = rf.dim();

  stage(rep, "series", [&] {
    rep.fiber = fiber_dims(f, B);
    rep.graded = graded_dims_G(f, B);
    rep.mod_j = mod_J_dims(rf);
  });
  if (!rep.mod_j) return rep;

  bool standing = true;
  stage(rep, "fiber_containment", [&] {
    Diagnostic c = fiber_containment_diagnostic(f);
    if (!c.ok()) {
      rep.warnings.push_back("I_{n+1} is not contained in m I_n at n = " + join(c.failures));
      if (d == 0) standing = false;
    }
    rep.diagnostics.push_back(std::move(c));
  });
  if (!standing) {
    rep.failures.push_back({"hypothesis", "d = 0 and the standing assumption I_{n+1} in m I_n fails"});
    return rep;
  }

  stage(rep, "cm_checks", [&] {
    rep.f_cm = fiber_cm_check(rf, *rep.mod_j, *rep.fiber);
    rep.g_cm = g_cm_check(rf, *rep.mod_j, *rep.graded);
  });
  if (!rep.f_cm || !rep.g_cm) return rep;
  const bool cmF = rep.f_cm->cm, cmG = rep.g_cm->cm;
  if (!cmF) rep.warnings.push_back("F is not Cohen-Macaulay (first failing row n = " +
                                   std::to_string(rep.f_cm->first_failure()->n) + ")");
  if (!cmG) rep.warnings.push_back("G is not Cohen-Macaulay (first failing row n = " +
                                   std::to_string(rep.g_cm->first_failure()->n) + ")");

  stage(rep, "socles", [&] {
    if (r + 1 > B) throw BoundExceededError("socle colon depth r+1 exceeds the bound");
    rep.socle_G = graded_socle_G_modJ(rf);
    rep.socle_F = graded_socle_F_modJ(rf);
    rep.socle_F_reduction = graded_socle_F_reduction(rf);
  });
  stage(rep, "base_quotient", [&] { rep.base = base_quotient_gorenstein(f); });
  if (rep.socle_G) rep.g_gor = g_gorenstein_check(*rep.g_cm, *rep.socle_G);
  if (rep.g_gor && rep.base)
    stage(rep, "fiber_criterion",
          [&] { rep.f_criterion = fiber_gorenstein_criterion(rf, *rep.g_gor, *rep.f_cm, *rep.fiber, *rep.base); });
  if (rep.socle_F_reduction) rep.f_oracle = fiber_gorenstein_oracle(*rep.f_cm, *rep.socle_F_reduction);
  if (rep.f_criterion && rep.f_oracle && rep.g_gor->gorenstein == Tri::Yes && cmF &&
      rep.f_criterion->gorenstein != rep.f_oracle->gorenstein) {
    rep.status = AnalysisStatus::Inconsistent;
    rep.failures.push_back({"consistency", "fiber Gorenstein criterion says " + to_string(rep.f_criterion->gorenstein) +
                                               " but the socle oracle says " + to_string(rep.f_oracle->gorenstein)});
  }

  rep.a_inv = a_invariants(rf, *rep.mod_j, cmF, cmG);
  rep.reg = regularity_F(rf, *rep.mod_j, cmF, cmG);
  rep.e0 = multiplicities(*rep.mod_j, cmF, cmG);
  stage(rep, "e0_comparison", [&] {
    rep.e0_cmp = e0_comparison(f, *rep.e0, rep.g_gor ? rep.g_gor->gorenstein : Tri::HypothesesFailed);
  });
  rep.reg_omega = reg_omega_check(rf, *rep.mod_j, cmF, cmG);

  if (cmF && cmG) {
    for (int k = 1; k <= d; ++k)
      stage(rep, "mu_alternating", [&] { rep.identities.push_back(mu_alternating_identity_check(rf, k, *rep.fiber, cmF, cmG)); });
  } else if (d > 0) {
    rep.warnings.push_back("mu alternating identities skipped: they need both Cohen-Macaulay certificates");
  }
  if (d == 1 || (d > 1 && cmF && cmG))
    stage(rep, "dim_one_length", [&] { rep.identities.push_back(length_identity_check(rf, cmF, cmG)); });

  if (d > 0 && cmF) {
    for (int k : opts.veronese_factors)
      stage(rep, "veronese", [&] { rep.veronese.push_back(veronese_a_check(f, r, k, spec.seed, cmF)); });
  }

  stage(rep, "canonical_socle", [&] {
    rep.canonical = canonical_socle_series(f, B, r - d);
    SeriesTable fixed = *rep.canonical;
    fixed.label = "canonical_socle_fixed_offset";
    fixed.first_degree = 2;
    rep.canonical_fixed = std::move(fixed);
  });
  if (ring->defining_basis().size() <= 1 && d > 0 && cmG) {
    stage(rep, "colon_powers", [&] { rep.colon_powers = colon_power_series(rf, cmG); });
  } else {
    rep.warnings.push_back(
        "colon-power series skipped: needs a polynomial or hypersurface ambient, d > 0 and G Cohen-Macaulay");
  }

  if (opts.diagnostics) {
    stage(rep, "diagnostics", [&] {
      Diagnostic s = superficiality_diagnostic(rf, std::min(B - 1, r + 4));
      Diagnostic a = analytic_independence_diagnostic(rf, std::min(B, r + 4));
      for (const Diagnostic* x : {&s, &a})
        if (!x->ok()) rep.warnings.push_back(x->name + " diagnostic failed at n = " + join(x->failures));
      rep.diagnostics.push_back(std::move(s));
      rep.diagnostics.push_back(std::move(a));
    });
  }

  cross_checks(rep);
  for (const auto& c : rep.cross_checks)
    if (c.applies && !c.pass) {
      rep.status = AnalysisStatus::Inconsistent;
      rep.failures.push_back({"consistency", "cross-check " + c.name + " failed" + (c.detail.empty() ? "" : ": " + c.detail)});
    }
  return rep;
}

AnalysisReport analyze_text(std::string_view text, const AnalysisOptions& opts) {
  ProblemSpec spec;
  try {
    spec = parse_problem(text);
  } catch (const ParseError& e) {
    AnalysisReport rep;
    rep.status = AnalysisStatus::InputError;
    rep.failures.push_back({"parse", e.what()});
    return rep;
  }
  return analyze(spec, opts);
}

int exit_code(const AnalysisReport& r) {
  switch (r.status) {
    case AnalysisStatus::Analyzed: return 0;
    case AnalysisStatus::InputError: return 1;
    case AnalysisStatus::Inconsistent: return 2;
  }
  return 2;
}

}  // namespace fibercone
