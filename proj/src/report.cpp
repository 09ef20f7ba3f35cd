#include "fibercone/analysis.hpp"

#include "json.hpp"

#include <sstream>

namespace fibercone {

namespace {

using Json = nlohmann::ordered_json;

Json series(const SeriesTable& t) {
  Json j;
  j["first_degree"] = t.first_degree;
  j["values"] = t.values;
  return j;
}

Json rows(const std::vector<CriterionRow>& rs) {
  Json a = Json::array();
  for (const auto& r : rs) a.push_back(Json{{"n", r.n}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass}});
  return a;
}

Json cm(const CmCheck& c) {
  Json j;
  j["cm"] = c.cm;
  j["verified_up_to"] = c.bound;
  if (auto f = c.first_failure()) j["first_failing_row"] = Json{{"n", f->n}, {"lhs", f->lhs}, {"rhs", f->rhs}};
  j["rows"] = rows(c.rows);
  if (!c.module_rows.empty()) j["module_rows"] = rows(c.module_rows);
  return j;
}

Json verdict(const GorensteinVerdict& v) {
  Json j;
  j["subject"] = v.subject;
  j["cm"] = v.cm;
  j["gorenstein"] = to_string(v.gorenstein);
  if (v.socle_total) j["socle_total"] = *v.socle_total;
  if (!v.rows.empty()) j["rows"] = rows(v.rows);
  if (!v.sanity_rows.empty()) j["sanity_rows"] = rows(v.sanity_rows);
  j["verified_up_to"] = v.bound;
  j["notes"] = v.notes;
  return j;
}

Json socle(const SocleTable& s) {
  Json j = series(s.table);
  j["total"] = s.table.total();
  j["colon_depth"] = s.colon_depth;
  j["evaluated_j"] = s.evaluated_j;
  return j;
}

const char* status_name(AnalysisStatus s) {
  switch (s) {
    case AnalysisStatus::Analyzed: return "analyzed";
    case AnalysisStatus::InputError: return "input-error";
    case AnalysisStatus::Inconsistent: return "inconsistent";
  }
  return "inconsistent";
}

Json build(const AnalysisReport& r) {
  Json j;
  j["status"] = status_name(r.status);
  j["input"] = Json{{"ring", r.ring},
                    {"filtration", r.filtration},
                    {"bound", r.bound},
                    {"seed", r.seed},
                    {"explicit_reduction", r.explicit_reduction},
                    {"problem", r.problem_text}};
  j["dimension"] = r.dim;
  j["hilbert"] = r.hilbert;
  if (r.reduction) {
    const auto& red = *r.reduction;
    j["reduction"] = Json{{"generators", r.reduction_text},
                          {"r", red.r},
                          {"r_plus_one", red.r + 1},
                          {"attempts", red.attempts},
                          {"certificates", red.certificates},
                          {"verified_up_to", red.bound - 1}};
  }
  Json s = Json::object();
  if (r.fiber) s["fiber_dims"] = r.fiber->values;
  if (r.graded) s["graded_dims_G"] = r.graded->values;
  if (r.mod_j) {
    s["fiber_mod_J"] = r.mod_j->fiber.values;
    s["graded_mod_J"] = r.mod_j->graded.values;
    s["fiber_reduction"] = r.mod_j->fiber_reduction.values;
  }
  if (r.socle_G) s["socle_G_mod_J"] = socle(*r.socle_G);
  if (r.socle_F) s["socle_F_mod_J"] = socle(*r.socle_F);
  if (r.socle_F_reduction) s["socle_F_reduction"] = socle(*r.socle_F_reduction);
  if (r.canonical) {
    Json c = series(*r.canonical);
    c["offset"] = -r.canonical->first_degree;
    s["canonical_socle"] = c;
  }
  if (r.canonical_fixed) {
    Json c = series(*r.canonical_fixed);
    c["offset"] = -r.canonical_fixed->first_degree;
    s["canonical_socle_fixed_offset"] = c;
  }
  if (r.colon_powers) s["colon_powers"] = Json{{"first", r.colon_powers->first.values}, {"second", r.colon_powers->second.values}};
  j["series"] = s;

  Json v = Json::object();
  if (r.g_cm) v["G_cm"] = cm(*r.g_cm);
  if (r.f_cm) v["F_cm"] = cm(*r.f_cm);
  if (r.g_gor) v["G_gorenstein"] = verdict(*r.g_gor);
  if (r.f_criterion) v["F_gorenstein_criterion"] = verdict(*r.f_criterion);
  if (r.f_oracle) v["F_gorenstein_oracle"] = verdict(*r.f_oracle);
  if (r.base) v["A_mod_I1_gorenstein"] = Json{{"gorenstein", r.base->gorenstein}, {"socle_length", r.base->length}};
  j["verdicts"] = v;

  if (r.a_inv)
    j["a_invariants"] = Json{{"a_F", r.a_inv->a_F},
                             {"a_G", r.a_inv->a_G},
                             {"r_minus_d", r.a_inv->expected},
                             {"consistent", r.a_inv->consistent},
                             {"reliable", r.a_inv->reliable}};
  if (r.reg)
    j["regularity"] = Json{{"reg_F", r.reg->reg_F},
                           {"equals_r", r.reg->equals_r},
                           {"reg_G", r.reg->reg_G},
                           {"reg_G_leq_reg_F", r.reg->reg_G_leq_reg_F},
                           {"reliable", r.reg->reliable}};
  if (r.e0) j["multiplicities"] = Json{{"e0_G", r.e0->e0_G}, {"e0_F", r.e0->e0_F}, {"reliable", r.e0->reliable}};
  if (r.e0_cmp)
    j["e0_comparison"] = Json{{"leq", r.e0_cmp->leq},
                              {"equal", r.e0_cmp->equal},
                              {"i1_is_m", r.e0_cmp->i1_is_m},
                              {"reliable", r.e0_cmp->reliable},
                              {"equality_clause_applies", r.e0_cmp->equality_clause}};
  if (r.reg_omega)
    j["reg_omega"] = Json{{"pass", r.reg_omega->pass},
                          {"value", r.reg_omega->value},
                          {"support_equal", r.reg_omega->support_equal},
                          {"reliable", r.reg_omega->reliable}};
  Json ids = Json::array();
  for (const auto& id : r.identities)
    ids.push_back(Json{{"name", id.name}, {"pass", id.pass}, {"verified_up_to", id.bound}, {"rows", rows(id.rows)},
                       {"failures", id.failures}});
  j["identities"] = ids;
  Json ver = Json::array();
  for (const auto& x : r.veronese)
    ver.push_back(Json{{"k", x.k}, {"r_k", x.r_k}, {"a_k", x.a_k}, {"expected", x.expected}, {"cm_k", x.cm_k},
                       {"pass", x.pass}, {"verified_up_to", x.bound}});
  j["veronese"] = ver;
  Json cc = Json::array();
  for (const auto& c : r.cross_checks) {
    Json x{{"name", c.name}, {"applies", c.applies}, {"pass", c.pass}, {"verified_up_to", c.bound}};
    if (!c.detail.empty()) x["detail"] = c.detail;
    cc.push_back(x);
  }
  j["cross_checks"] = cc;
  Json dg = Json::array();
  for (const auto& d : r.diagnostics)
    dg.push_back(Json{{"name", d.name}, {"verified_up_to", d.bound}, {"failures", d.failures}});
  j["diagnostics"] = dg;
  j["warnings"] = r.warnings;
  Json fl = Json::array();
  for (const auto& f : r.failures) fl.push_back(Json{{"stage", f.stage}, {"error", f.error}});
  j["failures"] = fl;
  return j;
}

std::string list(const std::vector<std::int64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
  return s;
}

}  // namespace

std::string to_json(const AnalysisReport& r) { return build(r).dump(2) + "\n"; }

std::string to_text(const AnalysisReport& r) {
  std::ostringstream o;
  o << "status: " << status_name(r.status) << "\n";
  if (!r.ring.empty()) o << "ring: " << r.ring << "  (d = " << r.dim << ")\nfiltration: " << r.filtration << "\nbound: " << r.bound << "\n";
  if (r.reduction) {
    o << "J = (";
    for (std::size_t i = 0; i < r.reduction_text.size(); ++i) o << (i ? ", " : "") << r.reduction_text[i];
    o << ")\nr = " << r.reduction->r << "  (r + 1 = " << r.reduction->r + 1 << ")\n";
  }
  if (r.fiber) o << "fiber dims: " << list(r.fiber->values) << "\n";
  if (r.graded) o << "graded dims G: " << list(r.graded->values) << "\n";
  if (r.mod_j) o << "F(F/J): " << list(r.mod_j->fiber.values) << "\nG(F/J): " << list(r.mod_j->graded.values) << "\n";
  if (r.socle_G) o << "socle G(F/J): " << list(r.socle_G->table.values) << "  total " << r.socle_G->table.total() << "\n";
  if (r.mod_j) o << "F/J*F: " << list(r.mod_j->fiber_reduction.values) << "\n";
  if (r.socle_F_reduction) o << "socle F/J*F: " << list(r.socle_F_reduction->table.values) << "  total " << r.socle_F_reduction->table.total() << "\n";
  if (r.socle_F) o << "socle F(F/J): " << list(r.socle_F->table.values) << "  total " << r.socle_F->table.total() << "\n";
  if (r.g_cm) o << "G Cohen-Macaulay: " << (r.g_cm->cm ? "yes" : "no") << "\n";
  if (r.f_cm) o << "F Cohen-Macaulay: " << (r.f_cm->cm ? "yes" : "no") << "\n";
  if (r.g_gor) o << "G Gorenstein: " << to_string(r.g_gor->gorenstein) << "\n";
  if (r.f_criterion) o << "F Gorenstein (criterion): " << to_string(r.f_criterion->gorenstein) << "\n";
  if (r.f_oracle) o << "F Gorenstein (socle): " << to_string(r.f_oracle->gorenstein) << "\n";
  if (r.base) o << "A/I1 Gorenstein: " << (r.base->gorenstein ? "yes" : "no") << "  (socle length " << r.base->length << ")\n";
  if (r.a_inv) o << "a-invariants: a(F) = " << r.a_inv->a_F << ", a(G) = " << r.a_inv->a_G << "\n";
  if (r.e0) o << "e0(omega_G) = " << r.e0->e0_G << ", e0(omega_F) = " << r.e0->e0_F << "\n";
  for (const auto& w : r.warnings) o << "warning: " << w << "\n";
  for (const auto& f : r.failures) o << "failure [" << f.stage << "]: " << f.error << "\n";
  return o.str();
}

}  // namespace fibercone
