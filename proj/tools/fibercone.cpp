#include "fibercone/analysis.hpp"
#include "fibercone/corpus.hpp"
#include "fibercone/errors.hpp"
#include "fibercone/selftest.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace fibercone;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kInputError = 1;

// A path, "-" for stdin, or "corpus:NAME" for a bundled entry.
std::string read_input(const std::string& where) {
  if (where == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  if (where.rfind("corpus:", 0) == 0) return corpus_entry(where.substr(7)).text;
  std::ifstream in(where);
  if (!in) throw std::runtime_error("cannot read " + where);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Common {
  std::string file;
  std::optional<int> bound;
  std::optional<std::uint64_t> seed;
  bool json = false;

  void attach(CLI::App* app) {
    app->add_option("file", file, "problem file, '-' for stdin, or corpus:E1..E9")->required();
    app->add_option("--bound", bound, "truncation bound B")->check(CLI::Range(1, 512));
    app->add_option("--seed", seed, "seed for the reduction search");
    app->add_flag("--json", json, "emit JSON");
  }
  AnalysisOptions options() const {
    AnalysisOptions o;
    o.bound = bound;
    o.seed = seed;
    return o;
  }
};

void print_failures(const AnalysisReport& r) {
  for (const auto& f : r.failures) std::cerr << "error [" << f.stage << "]: " << f.error << "\n";
}

int cmd_analyze(const Common& c) {
  AnalysisReport r = analyze_text(read_input(c.file), c.options());
  std::cout << (c.json ? to_json(r) : to_text(r));
  if (c.json) print_failures(r);
  return exit_code(r);
}

std::string verdict_line(const std::string& label, const std::optional<GorensteinVerdict>& v) {
  if (!v) return label + ": not computed\n";
  std::string s = label + ": " + to_string(v->gorenstein);
  if (v->socle_total) s += "  (socle total " + std::to_string(*v->socle_total) + ")";
  s += "\n";
  for (const auto& n : v->notes) s += "  " + n + "\n";
  return s;
}

int cmd_check(const Common& c) {
  AnalysisReport r = analyze_text(read_input(c.file), c.options());
  if (c.json) {
    Json full = Json::parse(to_json(r));
    Json j;
    j["status"] = full["status"];
    for (const char* k : {"G_cm", "F_cm", "G_gorenstein", "F_gorenstein_criterion", "F_gorenstein_oracle",
                          "A_mod_I1_gorenstein"})
      if (full["verdicts"].contains(k)) j[k] = full["verdicts"][k];
    j["failures"] = full["failures"];
    std::cout << j.dump(2) << "\n";
  } else {
    if (r.reduction) std::cout << "r = " << r.reduction->r << "  (r + 1 = " << r.reduction->r + 1 << ")\n";
    if (r.g_cm) std::cout << "G Cohen-Macaulay: " << (r.g_cm->cm ? "yes" : "no") << "\n";
    if (r.f_cm) std::cout << "F Cohen-Macaulay: " << (r.f_cm->cm ? "yes" : "no") << "\n";
    std::cout << verdict_line("G Gorenstein", r.g_gor) << verdict_line("F Gorenstein (criterion)", r.f_criterion)
              << verdict_line("F Gorenstein (socle)", r.f_oracle);
    if (r.base) std::cout << "A/I1 Gorenstein: " << (r.base->gorenstein ? "yes" : "no") << "\n";
    print_failures(r);
  }
  return exit_code(r);
}

void put(Json& out, std::ostream& text, const std::string& name, const SeriesTable& t) {
  out[name] = Json{{"first_degree", t.first_degree}, {"values", t.values}};
  text << name << " (from degree " << t.first_degree << "):";
  for (auto v : t.values) text << " " << v;
  text << "\n";
}

int cmd_series(const Common& c, const std::string& what) {
  AnalysisReport r = analyze_text(read_input(c.file), c.options());
  Json out = Json::object();
  std::ostringstream text;
  if (what == "fiber") {
    if (r.fiber) put(out, text, "fiber_dims", *r.fiber);
    if (r.mod_j) put(out, text, "fiber_mod_J", r.mod_j->fiber);
    if (r.mod_j) put(out, text, "fiber_reduction", r.mod_j->fiber_reduction);
  } else if (what == "graded") {
    if (r.graded) put(out, text, "graded_dims_G", *r.graded);
    if (r.mod_j) put(out, text, "graded_mod_J", r.mod_j->graded);
  } else if (what == "socle") {
    if (r.socle_G) put(out, text, "socle_G_mod_J", r.socle_G->table);
    if (r.socle_F) put(out, text, "socle_F_mod_J", r.socle_F->table);
    if (r.socle_F_reduction) put(out, text, "socle_F_reduction", r.socle_F_reduction->table);
  } else if (what == "canonical") {
    if (r.canonical) put(out, text, "canonical_socle", *r.canonical);
    if (r.canonical_fixed) put(out, text, "canonical_socle_fixed_offset", *r.canonical_fixed);
  } else if (what == "colon-powers") {
    if (r.colon_powers) {
      put(out, text, "colon_powers_first", r.colon_powers->first);
      put(out, text, "colon_powers_second", r.colon_powers->second);
    }
  }
  if (out.empty()) text << "series '" << what << "' not available for this input\n";
  for (const auto& w : r.warnings) text << "warning: " << w << "\n";
  if (c.json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << text.str();
  print_failures(r);
  return exit_code(r);
}

int cmd_reduce(const Common& c) {
  ProblemSpec spec = parse_problem(read_input(c.file));
  if (c.bound) spec.bound = c.bound;
  if (c.seed) spec.seed = *c.seed;
  Problem p = build_problem(spec);
  if (!p.filtration.is_hilbert()) throw PreconditionError("I1 is not m-primary; no reduction to search for");
  ReductionData red =
      p.reduction ? certify_reduction(p.filtration, *p.reduction) : find_minimal_reduction(p.filtration, spec.seed);
  const PolyRing& R = p.ring->poly_ring();
  std::vector<std::string> gens;
  for (const auto& g : red.generators) gens.push_back(R.to_string(g));
  if (c.json) {
    Json j{{"generators", gens},       {"r", red.r},
           {"r_plus_one", red.r + 1},  {"seed", red.seed},
           {"attempts", red.attempts}, {"certificates", red.certificates},
           {"verified_up_to", red.bound - 1}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "J = (";
    for (std::size_t i = 0; i < gens.size(); ++i) std::cout << (i ? ", " : "") << gens[i];
    std::cout << ")\nr = " << red.r << "  (r + 1 = " << red.r + 1 << ")\ncertificates:";
    for (bool b : red.certificates) std::cout << (b ? " 1" : " 0");
    std::cout << "  (n = 0.." << red.bound - 1 << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fiber cones and associated graded rings of filtrations: Cohen-Macaulay and Gorenstein tests"};
  app.require_subcommand(1);

  Common analyze_opts, check_opts, series_opts, reduce_opts;
  auto* analyze = app.add_subcommand("analyze", "full analysis report");
  analyze_opts.attach(analyze);

  auto* check = app.add_subcommand("check", "verdict-only checks");
  check->require_subcommand(1);
  auto* gf = check->add_subcommand("gorenstein-fiber", "Gorenstein test for the fiber cone");
  check_opts.attach(gf);

  std::string what;
  auto* series = app.add_subcommand("series", "print one family of series");
  series_opts.attach(series);
  series->add_option("--what", what, "fiber|graded|socle|canonical|colon-powers")
      ->required()
      ->check(CLI::IsMember({"fiber", "graded", "socle", "canonical", "colon-powers"}));

  auto* reduce = app.add_subcommand("reduce", "find a minimal reduction and its reduction number");
  reduce_opts.attach(reduce);

  SelftestOptions st;
  bool st_json = false;
  auto* selftest = app.add_subcommand("selftest", "compare the engine with the independent oracle");
  selftest->add_option("--trials", st.trials, "random filtrations (and random monomial ideals)")->check(CLI::Range(0, 100000));
  selftest->add_option("--seed", st.seed, "seed for the random instances");
  selftest->add_option("--bound", st.bound, "bound for corpus entries")->check(CLI::Range(4, 64));
  selftest->add_flag("--no-corpus", [&](std::int64_t) { st.corpus = false; }, "skip the bundled corpus");
  selftest->add_flag("--inject-fault", st.inject_fault, "testing aid: perturb one engine value");
  selftest->add_flag("--json", st_json, "emit a JSON summary");

  auto* corpus_cmd = app.add_subcommand("corpus", "list bundled examples or print one");
  std::string corpus_name;
  corpus_cmd->add_option("name", corpus_name, "entry to print");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) return cmd_analyze(analyze_opts);
    if (*gf) return cmd_check(check_opts);
    if (*series) return cmd_series(series_opts, what);
    if (*reduce) return cmd_reduce(reduce_opts);
    if (*selftest) {
      SelftestReport rep = run_selftest(st);
      if (st_json) {
        Json cases = Json::array();
        for (const auto& c : rep.cases) {
          Json x{{"name", c.name}, {"pass", c.pass()}, {"failing", c.failing()}};
          if (!c.error.empty()) x["error"] = c.error;
          if (c.minimized) x["minimized"] = *c.minimized;
          cases.push_back(x);
        }
        std::cout << Json{{"passed", rep.passed}, {"failed", rep.failed}, {"cases", cases}}.dump(2) << "\n";
      } else {
        std::cout << to_text(rep);
      }
      return rep.failed ? 2 : 0;
    }
    if (*corpus_cmd) {
      if (corpus_name.empty()) {
        for (const auto& e : corpus()) std::cout << e.name << "  " << e.summary << "\n";
      } else {
        std::cout << corpus_entry(corpus_name).text;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return 0;
}
