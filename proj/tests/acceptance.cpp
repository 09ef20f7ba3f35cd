// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include "support.hpp"

#include "fibercone/selftest.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>

using namespace testing;

namespace {

constexpr int kBound = 16;
constexpr int kRandom = 50;
constexpr std::uint64_t kSeed = 2024;

struct Failures {
  std::vector<std::string> items;
  void expect(bool ok, const std::string& what) {
    if (!ok) items.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      items.push_back(s.str());
    }
  }
};

std::map<std::string, AnalysisReport>& corpus_reports() {
  static std::map<std::string, AnalysisReport> reports = [] {
    std::map<std::string, AnalysisReport> m;
    for (const auto& e : corpus()) m.emplace(e.name, analyze_entry(e.name, kBound));
    return m;
  }();
  return reports;
}

std::vector<std::pair<std::string, AnalysisReport>>& random_reports() {
  static std::vector<std::pair<std::string, AnalysisReport>> reports = [] {
    std::vector<std::pair<std::string, AnalysisReport>> v;
    std::mt19937_64 rng(kSeed);
    for (int i = 0; i < kRandom; ++i) {
      ProblemSpec p = random_monomial_problem(rng);
      v.emplace_back("random-" + std::to_string(i) + " {" + to_problem_text(p) + "}", analyze(p));
    }
    return v;
  }();
  return reports;
}

std::vector<std::pair<std::string, const AnalysisReport*>> all_reports() {
  std::vector<std::pair<std::string, const AnalysisReport*>> v;
  for (const auto& [n, r] : corpus_reports()) v.emplace_back(n, &r);
  for (const auto& [n, r] : random_reports()) v.emplace_back(n, &r);
  return v;
}

bool both_cm(const AnalysisReport& r) { return r.f_cm && r.f_cm->cm && r.g_cm && r.g_cm->cm; }

const NamedCheck* cross_check(const AnalysisReport& r, const std::string& name) {
  for (const auto& c : r.cross_checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string str(const std::vector<std::int64_t>& v) {
  std::string s;
  for (auto x : v) s += (s.empty() ? "(" : ",") + std::to_string(x);
  return s + ")";
}

std::vector<std::int64_t> nonzero_prefix(const SeriesTable& t) {
  std::vector<std::int64_t> v;
  auto top = t.top_nonzero();
  if (!top) return v;
  for (int n = t.first_degree; n <= *top; ++n) v.push_back(t.at(n));
  return v;
}

// Mod-J tables of the m^2-adic filtration of Q[x,y] with J = (x^2, y^2), by staircase counting.
std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> staircase_mod_j_tables() {
  const std::vector<std::string> xy{"x", "y"};
  auto m = oracle::MonomialIdeal::maximal(2);
  auto i1 = mono("x^2, x*y, y^2", xy);
  auto j = mono("x^2, y^2", xy);
  auto len = [](const oracle::MonomialIdeal& i) { return static_cast<std::int64_t>(*i.colength()); };
  std::vector<std::int64_t> f, g;
  for (int n = 0; n <= 3; ++n) {
    auto in = oracle::mono_power(i1, n), next = oracle::mono_power(i1, n + 1);
    f.push_back(len(oracle::mono_sum(oracle::mono_product(m, in), j)) - len(oracle::mono_sum(in, j)));
    g.push_back(len(oracle::mono_sum(next, j)) - len(oracle::mono_sum(in, j)));
  }
  while (!f.empty() && f.back() == 0) f.pop_back();
  while (!g.empty() && g.back() == 0) g.pop_back();
  return {f, g};
}

void criterion_1(Failures& f) {
  const AnalysisReport& r = corpus_reports().at("E3");
  f.equal(r.reduction->r, 1, "r");
  auto [of, og] = staircase_mod_j_tables();
  f.equal(str(of), "(1,1)", "staircase F table");
  f.equal(str(og), "(3,1)", "staircase G table");
  f.equal(str(nonzero_prefix(r.mod_j->fiber)), str(of), "F(F/J)");
  f.equal(str(nonzero_prefix(r.mod_j->graded)), str(og), "G(F/J)");
  f.equal(r.socle_G->table.total(), 3, "G socle total");
  f.equal(r.socle_F_reduction->table.total(), 1, "F socle total");
  f.equal(r.socle_F->table.total(), 1, "F(F/J) socle total");
  f.equal(to_string(r.g_gor->gorenstein), "no", "G Gorenstein");
  f.equal(to_string(r.f_oracle->gorenstein), "yes", "F Gorenstein oracle");
  f.equal(to_string(r.f_criterion->gorenstein), "hypotheses-failed", "criterion");
  f.equal(r.e0->e0_G, 4, "e0(omega_G)");
  f.equal(r.e0->e0_F, 2, "e0(omega_F)");
  f.equal(r.a_inv->a_F, -1, "a_F");
  f.equal(r.a_inv->a_G, -1, "a_G");
}

void criterion_2(Failures& f) {
  const AnalysisReport& r = corpus_reports().at("E5");
  f.equal(r.reduction->r, 1, "r");
  f.equal(to_string(r.g_gor->gorenstein), "yes", "G Gorenstein");
  f.equal(to_string(r.f_criterion->gorenstein), "yes", "criterion");
  f.equal(to_string(r.f_oracle->gorenstein), "yes", "F Gorenstein oracle");
  f.equal(r.e0->e0_G, 2, "e0(omega_G)");
  f.equal(r.e0->e0_F, 2, "e0(omega_F)");
  f.expect(r.e0_cmp->equal, "e0 equality");
  f.expect(r.e0_cmp->i1_is_m, "I1 = m");
  f.expect(!r.f_criterion->rows.empty(), "criterion rows present");
  for (const auto& row : r.f_criterion->rows) f.expect(row.pass, "criterion row n = " + std::to_string(row.n));
  for (const auto& row : r.f_criterion->sanity_rows) f.expect(row.pass, "sanity row n = " + std::to_string(row.n));
}

void criterion_3(Failures& f) {
  int seen = 0;
  for (const auto& [name, r] : corpus_reports()) {
    if (!both_cm(r)) continue;
    ++seen;
    int rr = r.reduction->r;
    f.equal(r.mod_j->fiber.top_nonzero().value_or(-99), rr, name + " top of F(F/J)");
    f.equal(r.mod_j->graded.top_nonzero().value_or(-99), rr, name + " top of G(F/J)");
    f.equal(r.a_inv->a_F, rr - r.dim, name + " a_F");
    f.equal(r.a_inv->a_G, rr - r.dim, name + " a_G");
  }
  f.expect(seen >= 5, "at least five corpus entries with both certificates");
}

void criterion_4(Failures& f) {
  auto find = [&](const AnalysisReport& r, int k) -> const VeroneseCheck* {
    for (const auto& v : r.veronese)
      if (v.k == k) return &v;
    f.items.push_back("no Veronese check for k = " + std::to_string(k));
    return nullptr;
  };
  const AnalysisReport& e1 = corpus_reports().at("E1");
  const AnalysisReport& e3 = corpus_reports().at("E3");
  if (auto v = find(e1, 2)) {
    f.expect(v->pass, "E1 k = 2");
    f.equal(v->expected, -1, "E1 k = 2 expected");
    f.equal(v->a_k, e3.a_inv->a_F, "E1 k = 2 against the E3 analysis");
  }
  const AnalysisReport& e9 = corpus_reports().at("E9");
  if (auto v = find(e9, 2)) {
    f.expect(v->pass, "E9 k = 2");
    f.equal(v->expected, -2, "E9 k = 2 expected");
  }
  if (auto v = find(e9, 3)) {
    f.expect(v->pass, "E9 k = 3");
    f.equal(v->expected, -1, "E9 k = 3 expected");
  }
}

void criterion_5(Failures& f) {
  int compared = 0;
  for (const auto& [name, r] : all_reports()) {
    f.expect(exit_code(*r) != 2, name + " exits 2");
    if (r->g_gor && r->g_gor->gorenstein == Tri::Yes && r->f_cm && r->f_cm->cm) {
      ++compared;
      f.expect(r->f_criterion && r->f_oracle && r->f_criterion->gorenstein == r->f_oracle->gorenstein,
               name + " criterion disagrees with the socle");
    }
  }
  f.expect(compared >= 10, "too few instances with G Gorenstein and F Cohen-Macaulay: " + std::to_string(compared));
}

void criterion_6(Failures& f) {
  int seen = 0;
  for (const auto& [name, r] : all_reports()) {
    if (!both_cm(*r)) continue;
    ++seen;
    for (int k = 1; k <= std::min(2, r->dim); ++k) {
      std::string id = "mu_alternating_k" + std::to_string(k);
      bool found = false;
      for (const auto& x : r->identities)
        if (x.name == id) {
          found = true;
          f.expect(x.pass, name + " " + id);
        }
      f.expect(found, name + " missing " + id);
    }
  }
  f.expect(seen >= 20, "too few Cohen-Macaulay instances: " + std::to_string(seen));
}

void criterion_7(Failures& f) {
  for (const auto& [name, r] : all_reports()) {
    if (r->status != AnalysisStatus::Analyzed) {
      f.items.push_back(name + " not analyzed");
      continue;
    }
    const NamedCheck* c = cross_check(*r, "mod_J_support_equality");
    f.expect(c && c->applies && c->pass, name + " supports differ");
    f.expect(r->mod_j && r->mod_j->fiber.support() == r->mod_j->graded.support(), name + " supports differ");
  }
}

void criterion_8(Failures& f) {
  const AnalysisReport& e4 = corpus_reports().at("E4");
  f.expect(!e4.g_cm->cm, "E4 G Cohen-Macaulay");
  auto row = e4.g_cm->first_failure();
  f.expect(row && row->lhs != row->rhs, "E4 failing row");
  const AnalysisReport& e7 = corpus_reports().at("E7");
  f.expect(!e7.base->gorenstein, "E7 A/I1 Gorenstein");
  f.equal(e7.base->length, 2, "E7 socle length");
}

void criterion_9(Failures& f) {
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 100; ++i) {
    SelftestCase c = compare_monomial_ideal(rng, i);
    if (!c.pass()) {
      std::string s = c.name + " " + c.problem;
      for (const auto& n : c.failing()) s += " " + n;
      f.items.push_back(s + c.error);
    }
  }
}

void criterion_10(Failures& f) {
  for (const char* name : {"E1", "E2", "E6"}) {
    const AnalysisReport& r = corpus_reports().at(name);
    std::string n = name;
    if (!r.colon_powers || !r.canonical || !r.graded) {
      f.items.push_back(n + " colon powers missing");
      continue;
    }
    f.equal(to_string(r.g_gor->gorenstein), "yes", n + " G Gorenstein");
    const auto& cp = *r.colon_powers;
    f.expect(cp.first.values.size() >= 4, n + " range");
    for (std::size_t m = 0; m < cp.first.values.size(); ++m) {
      int d = static_cast<int>(m);
      f.equal(cp.first.values[m], r.graded->at(d), n + " first series at m = " + std::to_string(m));
      f.equal(cp.second.values[m], r.canonical->at(r.canonical->first_degree + d),
              n + " second series at m = " + std::to_string(m));
    }
  }
}

void criterion_11(Failures& f) {
  for (const char* name : {"E3", "E5", "E8"})
    f.expect(to_json(analyze_entry(name, kBound)) == to_json(corpus_reports().at(name)), std::string(name) + " JSON");
  std::mt19937_64 rng(kSeed);
  ProblemSpec p = random_monomial_problem(rng);
  f.expect(to_json(analyze(p)) == to_json(random_reports().front().second), "random-0 JSON");
  f.expect(to_text(analyze(p)) == to_text(random_reports().front().second), "random-0 text");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Failures&)>>> criteria{
      {"m^2-adic worked example (E3)", criterion_1},
      {"cusp (E5)", criterion_2},
      {"mod-J tops equal r and a = r - d", criterion_3},
      {"Veronese a-invariants (E1, E9)", criterion_4},
      {"Gorenstein criterion against the socle", criterion_5},
      {"mu alternating identity, k = 1, 2", criterion_6},
      {"mod-J supports coincide", criterion_7},
      {"negative controls (E4, E7)", criterion_8},
      {"engine against oracle on 100 monomial ideals", criterion_9},
      {"colon powers (E1, E2, E6)", criterion_10},
      {"deterministic reports", criterion_11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Failures f;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(f);
    } catch (const std::exception& e) {
      f.items.push_back(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = f.items.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << "  ("
              << std::fixed << std::setprecision(1) << secs << " s)\n";
    for (const auto& s : f.items) std::cout << "    " << s << "\n";
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size() << "\n";
  return failed ? 1 : 0;
}
