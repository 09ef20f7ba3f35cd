#include "doctest.h"
#include "support.hpp"

#include "fibercone/selftest.hpp"

#include "json.hpp"

using namespace testing;

namespace {

std::string parse_error(std::string_view text) {
  try {
    parse_problem(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("a minimal problem file") {
  ProblemSpec s = parse_problem("ring Q[x,y]; filtration adic; I1 = x^2, y^2; bound = 12;");
  CHECK(s.variables == std::vector<std::string>{"x", "y"});
  CHECK(s.field.is_rationals());
  CHECK(s.kind == FiltrationKind::Adic);
  CHECK(s.terms.size() == 1);
  CHECK(s.bound == 12);
  CHECK(s.seed == 1);
  CHECK(s.order == "grevlex");
}

TEST_CASE("problem files with comments, quotients and prime fields") {
  ProblemSpec s = parse_problem(
      "# the cusp\n"
      "ring F(10007)[x,y]/(y^2 - x^3);\n"
      "filtration adic;  # m-adic\n"
      "I1 = x, y;\n"
      "J = x;\n"
      "seed 9;\n");
  CHECK(s.field.characteristic() == 10007);
  CHECK(s.defining.size() == 1);
  CHECK(s.reduction == "x");
  CHECK(s.seed == 9);
  CHECK_FALSE(s.bound);
}

TEST_CASE("parse errors carry line and column") {
  CHECK(parse_error("ring F(91)[x];") == "1:8: 91 is not prime");
  CHECK(parse_error("ring F(101)[x]; filtration adic; I1 = x;").find("10000 < p") != std::string::npos);
  CHECK(parse_error("ring Q[x,y];\nfiltration adic;\nI1 = x;\nI1 = y;").rfind("4:1: duplicate key", 0) == 0);
  CHECK(parse_error("ring Q[x,y]; filtration adic; I1 = x; colour = red;").find("unknown key 'colour'") !=
        std::string::npos);
  CHECK(parse_error("ring Q[x,y]; filtration adic;").find("missing I1") != std::string::npos);
  CHECK(parse_error("ring Q[x,x]; filtration adic; I1 = x;").find("duplicate variable") != std::string::npos);
  CHECK(parse_error("ring Q[x,y]; filtration table; I1 = x; I3 = x^3;").find("missing I2") != std::string::npos);
  CHECK(parse_error("ring Q[x,y]; filtration adic; I1 = x; I2 = x^2;").find("adic filtration takes only I1") !=
        std::string::npos);
  CHECK(parse_error("ring Q[x,y]; filtration adic; I1 = x +* y;") != "");
  CHECK(parse_error("ring Q[x,y]; filtration adic; I1 = x; bound = 0;").find("bound must be") != std::string::npos);
}

TEST_CASE("goodness is checked after parsing") {
  ProblemSpec s = parse_problem("ring Q[x,y]; filtration table; I1 = x, y; I2 = x^2, x*y, y^3;");
  CHECK(s.terms.size() == 2);
  CHECK_THROWS_AS(build_problem(s), FiltrationError);
}

TEST_CASE("problem text round-trips") {
  for (const auto& e : corpus()) {
    ProblemSpec a = parse_problem(e.text);
    ProblemSpec b = parse_problem(to_problem_text(a));
    CHECK(to_problem_text(a) == to_problem_text(b));
    CHECK(a.variables == b.variables);
    CHECK(a.terms == b.terms);
  }
}

TEST_CASE("corpus") {
  CHECK(corpus().size() == 9);
  CHECK(corpus_entry("E5").text.find("y^2 - x^3") != std::string::npos);
  CHECK_THROWS_AS(corpus_entry("E10"), std::out_of_range);
  for (const auto& e : corpus()) CHECK_NOTHROW(build_problem(parse_problem(e.text)));
}

TEST_CASE("exit codes") {
  AnalysisOptions o;
  o.bound = 8;
  CHECK(exit_code(analyze_text(corpus_entry("E1").text, o)) == 0);
  AnalysisReport bad = analyze_text("ring F(91)[x];", o);
  CHECK(exit_code(bad) == 1);
  CHECK(bad.status == AnalysisStatus::InputError);
  CHECK_FALSE(bad.failures.empty());
  AnalysisReport not_primary = analyze_text("ring Q[x,y]; filtration adic; I1 = x;", o);
  CHECK(exit_code(not_primary) == 1);
  CHECK_FALSE(not_primary.hilbert);
  CHECK(exit_code(analyze_text("ring Q[x,y]; filtration table; I1 = x, y; I2 = x^2, x*y, y^3;", o)) == 1);
}

TEST_CASE("E1 report") {
  AnalysisReport r = analyze_entry("E1", 8);
  CHECK(r.reduction->r == 0);
  CHECK(r.a_inv->a_F == -2);
  CHECK(r.a_inv->a_G == -2);
  CHECK(r.g_gor->gorenstein == Tri::Yes);
  CHECK(r.f_criterion->gorenstein == Tri::Yes);
  CHECK(r.f_oracle->gorenstein == Tri::Yes);
  CHECK(r.base->gorenstein);
}

TEST_CASE("JSON report shape") {
  AnalysisReport r = analyze_entry("E3", 8);
  auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["status"] == "analyzed");
  CHECK(j["reduction"]["r"] == 1);
  CHECK(j["reduction"]["r_plus_one"] == 2);
  CHECK(j["verdicts"]["G_gorenstein"]["gorenstein"] == "no");
  CHECK(j["verdicts"]["F_gorenstein_oracle"]["gorenstein"] == "yes");
  CHECK(j["verdicts"]["F_gorenstein_criterion"]["gorenstein"] == "hypotheses-failed");
  CHECK(j["series"]["graded_mod_J"][0] == 3);
  CHECK(j["input"]["bound"] == 8);
  CHECK(j["failures"].empty());
  CHECK(to_text(r).find("G Gorenstein: no") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  CHECK(to_json(analyze_entry("E7", 8)) == to_json(analyze_entry("E7", 8)));
}

TEST_CASE("oracle: monomial ideals") {
  const std::vector<std::string> xy{"x", "y"};
  auto i = mono("x^2, y^2", xy);
  CHECK(i.colength() == 4u);
  CHECK(i.nil_degree() == 3);
  CHECK(oracle::mono_power(oracle::MonomialIdeal::maximal(2), 2) == mono("x^2, x*y, y^2", xy));
  CHECK(oracle::mono_colon(i, oracle::MonomialIdeal::maximal(2)) == mono("x^2, x*y, y^2", xy));
  CHECK(mono("x, x^2*y, y^3", xy).mu() == 2);
  CHECK_FALSE(mono("x", xy).is_primary());
  CHECK_FALSE(mono("x", xy).colength());
}

TEST_CASE("oracle: subspace ideals") {
  const std::vector<std::string> xy{"x", "y"};
  auto base = mono("x^3, x^2*y, x*y^2, y^3", xy);
  oracle::SubspaceIdeal a(base, {oracle::parse_poly("x^2 - y^2", xy)});
  // span of 1, x, y, x^2, xy modulo x^2 - y^2 and the cubes
  CHECK(a.colength() == 5);
  CHECK(a.contains(oracle::parse_poly("x^2*y", xy)));
  CHECK_FALSE(a.contains(oracle::parse_poly("x^2", xy)));
  oracle::SubspaceIdeal m(base, {oracle::parse_poly("x", xy), oracle::parse_poly("y", xy)});
  CHECK(m.colength() == 1);
  CHECK(oracle::sub_colon(a, oracle::parse_poly("x", xy)).colength() == 3);
  CHECK(oracle::sub_intersect(a, m) == a);
  CHECK(oracle::sub_sum(a, m) == m);
}

TEST_CASE("selftest on a few random problems") {
  SelftestOptions o;
  o.trials = 3;
  o.corpus = false;
  SelftestReport r = run_selftest(o);
  CHECK(r.failed == 0);
  CHECK(r.passed == 6);
}

TEST_CASE("an injected fault is caught and minimized") {
  std::mt19937_64 rng(3);
  ProblemSpec p = random_monomial_problem(rng);
  SelftestCase ok = compare_with_oracle("plain", p, 8);
  CHECK(ok.pass());
  SelftestCase bad = compare_with_oracle("fault", p, 8, true);
  CHECK_FALSE(bad.pass());
  CHECK(bad.failing() == std::vector<std::string>{"length"});
  SelftestOptions o;
  o.trials = 1;
  o.corpus = false;
  o.inject_fault = true;
  SelftestReport r = run_selftest(o);
  REQUIRE(r.failed >= 1);
  bool minimized = false;
  for (const auto& c : r.cases) minimized = minimized || c.minimized.has_value();
  CHECK(minimized);
}
