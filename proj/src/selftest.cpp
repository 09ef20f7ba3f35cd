#include "fibercone/selftest.hpp"

#include "fibercone/analysis.hpp"
#include "fibercone/blowup.hpp"
#include "fibercone/corpus.hpp"
#include "fibercone/errors.hpp"
#include "fibercone/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <type_traits>

namespace fibercone {

namespace O = oracle;

bool SelftestCase::pass() const {
  if (!error.empty()) return false;
  return std::all_of(results.begin(), results.end(), [](const InvariantResult& r) { return r.pass || r.skipped; });
}

std::vector<std::string> SelftestCase::failing() const {
  std::vector<std::string> out;
  if (!error.empty()) out.push_back("error");
  for (const auto& r : results)
    if (!r.pass && !r.skipped) out.push_back(r.name);
  return out;
}

namespace {

// Dense elimination gets slow past this many standard monomials.
constexpr std::uint64_t kOracleCap = 900;

struct Unsupported : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
std::string show(const std::vector<T>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ']';
  return os.str();
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (cur.find_first_not_of(" \t\n") != std::string::npos) out.push_back(cur);
  return out;
}

std::int64_t binom(int n, int k) {
  std::int64_t b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

// The problem as the oracle sees it: Q[x]/Q with monomial terms.
class Model {
 public:
  explicit Model(const ProblemSpec& spec) : vars_(spec.variables), nv_(static_cast<int>(vars_.size())) {
    if (!spec.field.is_rationals()) throw Unsupported("oracle works over Q only");
    for (const auto& d : spec.defining) q_.push_back(O::parse_poly(d, vars_));
    if (q_.size() > 1) throw Unsupported("oracle dimension count needs Q empty or principal");
    for (const auto& t : spec.terms) {
      std::vector<O::Exponent> gens;
      for (const auto& g : split_list(t)) {
        O::OPoly p = O::parse_poly(g, vars_);
        if (p.size() != 1) throw Unsupported("oracle needs monomial filtration terms");
        gens.push_back(p.begin()->first);
      }
      table_.emplace_back(nv_, gens);
    }
    maximal_ = O::MonomialIdeal::maximal(nv_);
  }

  int nvars() const { return nv_; }
  int dim() const { return nv_ - static_cast<int>(q_.size()); }
  const O::MonomialIdeal& maximal() const { return *maximal_; }

  const O::MonomialIdeal& term(int n) {
    if (n <= 0) n = 0;
    auto it = terms_.find(n);
    if (it != terms_.end()) return it->second;
    O::MonomialIdeal v = n == 0                               ? O::MonomialIdeal::unit(nv_)
                         : n <= static_cast<int>(table_.size()) ? table_[n - 1]
                                                                : O::mono_product(term(1), term(n - 1));
    return terms_.emplace(n, std::move(v)).first->second;
  }
  O::MonomialIdeal m_term(int n) { return O::mono_product(maximal(), term(n)); }

  O::SubspaceIdeal ideal(const O::MonomialIdeal& base, std::vector<O::OPoly> extra = {}) const {
    auto s = base.staircase(kOracleCap);
    if (!s) throw Unsupported("oracle quotient too large");
    extra.insert(extra.end(), q_.begin(), q_.end());
    return O::SubspaceIdeal(base, extra);
  }
  std::uint64_t len(const O::MonomialIdeal& base, std::vector<O::OPoly> extra = {}) const {
    return ideal(base, std::move(extra)).colength();
  }

  std::vector<O::OPoly> times(const std::vector<O::OPoly>& polys, const O::MonomialIdeal& m) const {
    std::vector<O::OPoly> out;
    for (const auto& p : polys)
      for (const auto& g : m.gens()) out.push_back(O::poly_mul(p, O::monomial_poly(g)));
    return out;
  }
  std::vector<O::OPoly> monomials(const O::MonomialIdeal& m) const {
    std::vector<O::OPoly> out;
    for (const auto& g : m.gens()) out.push_back(O::monomial_poly(g));
    return out;
  }

 private:
  std::vector<std::string> vars_;
  int nv_;
  std::vector<O::OPoly> q_;
  std::vector<O::MonomialIdeal> table_;
  std::map<int, O::MonomialIdeal> terms_;
  std::optional<O::MonomialIdeal> maximal_;
};

O::OPoly to_oracle(const Polynomial& p, std::size_t nv) {
  O::OPoly out;
  for (const Term& t : p.terms()) {
    O::Exponent e(nv);
    for (std::size_t i = 0; i < nv; ++i) e[i] = static_cast<int>(t.mono[i]);
    out[e] = t.coef;
  }
  return out;
}

std::string exponent_text(const O::Exponent& e, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

std::string gens_text(const std::vector<O::Exponent>& gens, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + exponent_text(gens[i], vars);
  return s;
}

class Recorder {
 public:
  explicit Recorder(SelftestCase& c) : c_(c) {}

  // Runs one invariant group; the oracle giving up marks it skipped.
  void group(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const Unsupported& e) {
      InvariantResult r;
      r.name = name;
      r.skipped = true;
      r.oracle = e.what();
      c_.results.push_back(r);
    }
  }
  template <class T>
  void compare(const std::string& name, const T& engine, const T& oracle) {
    InvariantResult r;
    r.name = name;
    r.engine = text(engine);
    r.oracle = text(oracle);
    r.pass = engine == oracle;
    c_.results.push_back(r);
  }

 private:
  template <class T>
  static std::string text(const T& v) {
    if constexpr (std::is_same_v<T, bool>) {
      return v ? "true" : "false";
    } else if constexpr (std::is_same_v<T, std::string>) {
      return v;
    } else if constexpr (requires { v.size(); }) {
      return show(v);
    } else {
      return std::to_string(v);
    }
  }
  SelftestCase& c_;
};

std::vector<std::int64_t> slice(const SeriesTable& s, int from, int to) {
  std::vector<std::int64_t> out;
  for (int n = from; n <= to; ++n) out.push_back(s.at(n));
  return out;
}

std::int64_t total(const std::vector<std::int64_t>& v) { return std::accumulate(v.begin(), v.end(), std::int64_t{0}); }

}  // namespace

ProblemSpec random_monomial_problem(std::mt19937_64& rng) {
  auto draw = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  static const std::vector<std::string> names{"x", "y", "z"};
  int roll = draw(0, 19);
  int nv = roll < 2 ? 1 : roll < 13 ? 2 : 3;
  ProblemSpec spec;
  spec.variables.assign(names.begin(), names.begin() + nv);
  // pure powers, then mixed monomials under them so they are not absorbed
  O::Exponent top(nv);
  std::vector<O::Exponent> gens;
  for (int i = 0; i < nv; ++i) {
    O::Exponent e(nv, 0);
    e[i] = top[i] = nv == 1 ? draw(1, 4) : draw(2, nv == 3 ? 3 : 4);
    gens.push_back(e);
  }
  int extra = nv == 1 ? 0 : draw(0, 3);
  for (int k = 0; k < extra; ++k) {
    O::Exponent e(nv, 0);
    for (int i = 0; i < nv; ++i) e[i] = draw(0, top[i] - 1);
    if (std::count_if(e.begin(), e.end(), [](int v) { return v > 0; }) >= 2) gens.push_back(e);
  }
  O::MonomialIdeal i1(nv, gens);
  spec.kind = FiltrationKind::Adic;
  // certificates up to the bound dominate the cost in three variables
  spec.bound = nv == 3 ? 6 : 8;
  spec.terms = {gens_text(i1.gens(), spec.variables)};
  if (nv <= 2 && draw(0, 3) == 0) {
    // I_2 = I_1^2 plus one element of m I_1
    O::MonomialIdeal sq = O::mono_power(i1, 2);
    O::Exponent e = i1.gens()[draw(0, static_cast<int>(i1.gens().size()) - 1)];
    e[draw(0, nv - 1)] += 1;
    std::vector<O::Exponent> g2 = sq.gens();
    g2.push_back(e);
    ProblemSpec table = spec;
    table.kind = FiltrationKind::Table;
    table.terms.push_back(gens_text(O::MonomialIdeal(nv, g2).gens(), spec.variables));
    try {
      build_problem(table);
      return table;
    } catch (const FiltrationError&) {
    }
  }
  return spec;
}

SelftestCase compare_with_oracle(const std::string& name, const ProblemSpec& spec0, int bound, bool inject_fault) {
  SelftestCase c;
  c.name = name;
  ProblemSpec spec = spec0;
  if (!spec.bound) spec.bound = bound;
  c.problem = to_problem_text(spec);
  Recorder rec(c);
  try {
    Problem p = build_problem(spec);
    const Filtration& f = p.filtration;
    if (!f.is_hilbert()) throw PreconditionError("filtration is not Hilbert");
    ReductionData red = p.reduction ? certify_reduction(f, *p.reduction) : find_minimal_reduction(f, spec.seed);
    ReducedFiltration rf(f, red);
    const int r = red.r;
    const int B = f.bound();
    if (r + 3 > B) throw PreconditionError("bound too small for the comparison range");
    const int d = rf.dim();

    ModJTables t = mod_J_dims(rf);
    SeriesTable fib = fiber_dims(f, B);
    SeriesTable gr = graded_dims_G(f, B);
    CmCheck fcm = fiber_cm_check(rf, t, fib);
    CmCheck gcm = g_cm_check(rf, t, gr);
    SocleTable sG = graded_socle_G_modJ(rf);
    SocleTable sF = graded_socle_F_reduction(rf);
    BaseQuotient base = base_quotient_gorenstein(f);
    GorensteinVerdict ggor = g_gorenstein_check(gcm, sG);
    GorensteinVerdict fcrit = fiber_gorenstein_criterion(rf, ggor, fcm, fib, base);
    GorensteinVerdict forc = fiber_gorenstein_oracle(fcm, sF);

    Model m(spec);
    const std::size_t nv = static_cast<std::size_t>(m.nvars());
    std::vector<O::OPoly> jg;
    for (const auto& g : red.generators) jg.push_back(to_oracle(g, nv));
    // L: last degree the oracle reaches
    const int L = std::min(B - 1, r + d + 1);

    rec.compare("dimension", d, m.dim());

    rec.group("length", [&] {
      std::vector<std::uint64_t> e, o;
      for (int n = 1; n <= L; ++n) {
        e.push_back(length(f.term(n)).value);
        o.push_back(m.len(m.term(n)));
      }
      if (inject_fault) e[0] += 1;
      rec.compare("length", e, o);
    });

    auto mu_hat = [&](int n) -> std::int64_t {
      if (n < 0) return 0;
      if (n == 0) return 1;
      return static_cast<std::int64_t>(m.len(m.m_term(n)) - m.len(m.term(n)));
    };
    auto hg = [&](int n) -> std::int64_t {
      if (n < 0) return 0;
      return static_cast<std::int64_t>(m.len(m.term(n + 1)) - m.len(m.term(n)));
    };

    rec.group("mu", [&] {
      std::vector<std::int64_t> e, e2, o;
      for (int n = 1; n <= L; ++n) {
        e.push_back(fib.at(n));
        e2.push_back(static_cast<std::int64_t>(mu(f.term(n))));
        o.push_back(mu_hat(n));
      }
      rec.compare("mu", e, o);
      rec.compare("mu_minimal_generators", e2, o);
    });

    rec.group("reduction_certificates", [&] {
      std::vector<bool> e, o;
      for (int n = 0; n < L; ++n) {
        e.push_back(red.certificates[n]);
        O::SubspaceIdeal s = m.ideal(m.m_term(n + 1), m.times(jg, m.term(n)));
        bool ok = true;
        for (const auto& g : m.term(n + 1).gens()) ok = ok && s.contains(O::monomial_poly(g));
        o.push_back(ok);
      }
      rec.compare("reduction_certificates", e, o);
      int orr = L;
      while (orr > 0 && o[orr - 1]) --orr;
      rec.compare("reduction_number", r, orr);
    });

    // J below is J + I_{r+1}; J I_n also carries I_{r+1} I_n.
    auto j_times = [&](int n) {
      std::vector<O::OPoly> out = m.times(jg, m.term(n));
      for (auto& p : m.monomials(O::mono_product(m.term(r + 1), m.term(n)))) out.push_back(p);
      return out;
    };
    auto plus_j = [&](const O::MonomialIdeal& base) {
      return m.ideal(O::mono_sum(base, m.term(r + 1)), jg);
    };
    const int T = std::min(r + 2, B - 1);

    rec.group("mod_J_tables", [&] {
      std::vector<std::int64_t> of, og, ofr;
      for (int n = 0; n <= T; ++n) {
        auto li = plus_j(m.term(n)).colength();
        of.push_back(static_cast<std::int64_t>(plus_j(m.m_term(n)).colength() - li));
        og.push_back(static_cast<std::int64_t>(plus_j(m.term(n + 1)).colength() - li));
        std::uint64_t den = n == 0 ? 1 : m.len(m.m_term(n), j_times(n - 1));
        ofr.push_back(static_cast<std::int64_t>(den - m.len(m.term(n))));
      }
      rec.compare("fiber_mod_J", slice(t.fiber, 0, T), of);
      rec.compare("graded_mod_J", slice(t.graded, 0, T), og);
      rec.compare("fiber_reduction", slice(t.fiber_reduction, 0, T), ofr);
    });

    std::vector<O::OPoly> mgens = m.monomials(m.maximal());
    std::optional<std::vector<std::int64_t>> osG, osF;
    rec.group("socle_G", [&] {
      std::vector<std::int64_t> o;
      for (int n = 0; n <= r; ++n) {
        O::SubspaceIdeal den = plus_j(m.term(n + 1));
        O::SubspaceIdeal x = O::sub_intersect(plus_j(m.term(n)), O::sub_colon(den, mgens));
        for (int j = 1; j <= r + 1; ++j)
          x = O::sub_intersect(x, O::sub_colon(plus_j(m.term(n + j + 1)), m.monomials(m.term(j))));
        o.push_back(static_cast<std::int64_t>(den.colength() - x.colength()));
      }
      osG = o;
      rec.compare("socle_G", sG.table.values, o);
    });
    rec.group("socle_F_reduction", [&] {
      std::vector<std::int64_t> o;
      auto den_at = [&](int k) {
        return k == 0 ? m.ideal(m.maximal()) : m.ideal(m.m_term(k), j_times(k - 1));
      };
      for (int n = 0; n <= r; ++n) {
        O::SubspaceIdeal den = den_at(n);
        O::SubspaceIdeal y = m.ideal(m.term(n));
        for (int j = 1; n + j <= r + 1; ++j)
          y = O::sub_intersect(y, O::sub_colon(den_at(n + j), m.monomials(m.term(j))));
        o.push_back(static_cast<std::int64_t>(den.colength() - y.colength()));
      }
      osF = o;
      rec.compare("socle_F_reduction", sF.table.values, o);
    });

    rec.group("base_length", [&] {
      O::SubspaceIdeal i1 = m.ideal(m.term(1));
      std::int64_t o = static_cast<std::int64_t>(i1.colength() - O::sub_colon(i1, mgens).colength());
      rec.compare("base_length", base.length, o);
    });

    std::optional<bool> ofcm, ogcm;
    rec.group("F_cm", [&] {
      bool ok = true;
      for (int n = 0; n <= L; ++n) {
        std::int64_t lhs = n == 0 ? 1 : static_cast<std::int64_t>(m.len(m.m_term(n), j_times(n - 1)) - m.len(m.term(n)));
        std::int64_t rhs = 0;
        for (int i = 0; i <= d; ++i) rhs += (i % 2 ? -1 : 1) * binom(d, i) * mu_hat(n - i);
        ok = ok && lhs == rhs;
      }
      ofcm = ok;
      rec.compare("F_cm", fcm.cm, ok);
    });
    rec.group("G_cm", [&] {
      bool ok = true;
      for (int n = 0; n <= L - 1; ++n) {
        std::vector<O::OPoly> extra = n == 0 ? jg : j_times(n - 1);
        O::MonomialIdeal b = n == 0 ? O::mono_sum(m.term(1), m.term(r + 1)) : m.term(n + 1);
        std::int64_t lhs = static_cast<std::int64_t>(m.len(b, extra) - m.len(m.term(n)));
        std::int64_t rhs = 0;
        for (int i = 0; i <= d; ++i) rhs += (i % 2 ? -1 : 1) * binom(d, i) * hg(n - i);
        ok = ok && lhs == rhs;
      }
      ogcm = ok;
      rec.compare("G_cm", gcm.cm, ok);
    });

    if (ogcm && osG) {
      bool o = *ogcm && total(*osG) == 1;
      rec.compare("G_gorenstein", ggor.gorenstein == Tri::Yes, o);
    }
    if (ofcm && osF) {
      bool o = *ofcm && total(*osF) == 1;
      rec.compare("F_gorenstein_oracle", forc.gorenstein == Tri::Yes, o);
      if (fcrit.gorenstein != Tri::HypothesesFailed)
        rec.compare("F_gorenstein_criterion", fcrit.gorenstein == Tri::Yes, o);
    }
  } catch (const Unsupported& e) {
    InvariantResult r;
    r.name = "oracle";
    r.skipped = true;
    r.oracle = e.what();
    c.results.push_back(r);
  } catch (const std::exception& e) {
    c.error = e.what();
  }
  return c;
}

namespace {

// Simpler variants of an adic or table problem: table to adic, drop a
// generator of I_1, lower one exponent.
std::vector<ProblemSpec> shrink_candidates(const ProblemSpec& spec) {
  std::vector<ProblemSpec> out;
  if (spec.kind == FiltrationKind::Table) {
    ProblemSpec a = spec;
    a.kind = FiltrationKind::Adic;
    a.terms.resize(1);
    out.push_back(a);
  }
  std::vector<O::Exponent> gens;
  for (const auto& g : split_list(spec.terms[0])) {
    O::OPoly p = O::parse_poly(g, spec.variables);
    if (p.size() != 1) return out;
    gens.push_back(p.begin()->first);
  }
  auto with = [&](std::vector<O::Exponent> g) {
    ProblemSpec s = spec;
    s.kind = FiltrationKind::Adic;
    s.terms = {gens_text(O::MonomialIdeal(static_cast<int>(spec.variables.size()), std::move(g)).gens(), spec.variables)};
    out.push_back(s);
  };
  for (std::size_t i = 0; gens.size() > 1 && i < gens.size(); ++i) {
    auto g = gens;
    g.erase(g.begin() + static_cast<long>(i));
    with(g);
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t v = 0; v < gens[i].size(); ++v)
      if (gens[i][v] > 0 && O::degree(gens[i]) > 1) {
        auto g = gens;
        --g[i][v];
        with(g);
      }
  return out;
}

std::string minimize(const SelftestCase& failed, const ProblemSpec& spec, int bound, bool inject) {
  std::vector<std::string> target = failed.failing();
  auto still_fails = [&](const ProblemSpec& s) {
    try {
      if (!build_problem(s).filtration.is_hilbert()) return false;
    } catch (const std::exception&) {
      return false;
    }
    SelftestCase c = compare_with_oracle("min", s, bound, inject);
    for (const auto& n : c.failing())
      if (std::find(target.begin(), target.end(), n) != target.end()) return true;
    return false;
  };
  ProblemSpec cur = spec;
  for (int round = 0; round < 40; ++round) {
    bool moved = false;
    for (const auto& cand : shrink_candidates(cur))
      if (still_fails(cand)) {
        cur = cand;
        moved = true;
        break;
      }
    if (!moved) break;
  }
  if (!cur.bound) cur.bound = bound;
  return to_problem_text(cur);
}

}  // namespace

SelftestCase compare_monomial_ideal(std::mt19937_64& rng, int index) {
  auto draw = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  static const std::vector<std::string> names{"x", "y", "z"};
  const int nv = draw(1, 3);
  std::vector<std::string> vars(names.begin(), names.begin() + nv);
  // total degree at most 6
  auto random_exp = [&](int hi) {
    O::Exponent e(nv);
    do
      for (auto& v : e) v = draw(0, hi);
    while (O::degree(e) > 6);
    return e;
  };
  auto random_ideal = [&] {
    std::vector<O::Exponent> g;
    int k = draw(1, 4);
    while (static_cast<int>(g.size()) < k) {
      O::Exponent e = random_exp(3);
      if (O::degree(e) > 0) g.push_back(e);
    }
    return g;
  };
  std::vector<O::Exponent> ga = random_ideal(), gb = random_ideal();
  O::MonomialIdeal oa(nv, ga), ob(nv, gb);

  SelftestCase c;
  c.name = "monomial_ideal_" + std::to_string(index);
  std::string vlist;
  for (const auto& v : vars) vlist += (vlist.empty() ? "" : ",") + v;
  c.problem = "Q[" + vlist + "]: I = (" + gens_text(ga, vars) + "), K = (" + gens_text(gb, vars) + ")";
  Recorder rec(c);
  try {
    RingPtr ring = Ring::create(CoefField::rationals(), vars);
    const PolyRing& R = ring->poly_ring();
    auto engine_ideal = [&](const std::vector<O::Exponent>& g) { return Ideal::parse(ring, gens_text(g, vars)); };
    auto engine_of = [&](const O::MonomialIdeal& m) { return engine_ideal(m.gens()); };
    Ideal ea = engine_ideal(ga), eb = engine_ideal(gb);

    rec.compare("m_primary", is_m_primary(ea), oa.is_primary());
    // mu as a length difference needs I m-primary; the greedy generator count does not
    if (auto col = oa.colength()) {
      rec.compare("length", length(ea).value, *col);
      rec.compare("mu", static_cast<std::uint64_t>(mu(ea)), static_cast<std::uint64_t>(oa.mu()));
    }
    rec.compare("minimal_generators", minimal_generators(ea).size(), oa.mu());

    std::vector<bool> em, om;
    for (int k = 0; k < 10; ++k) {
      O::Exponent e = random_exp(4);
      em.push_back(ea.contains(R.parse(exponent_text(e, vars))));
      om.push_back(oa.contains(e));
    }
    for (int k = 0; k < 5; ++k) {
      O::Exponent e1 = random_exp(4), e2 = random_exp(4);
      if (e1 == e2) continue;
      em.push_back(ea.contains(R.parse(exponent_text(e1, vars) + " - 3*" + exponent_text(e2, vars))));
      om.push_back(oa.contains(e1) && oa.contains(e2));
    }
    rec.compare("membership", em, om);
    rec.compare("sum", ea + eb == engine_of(O::mono_sum(oa, ob)), true);
    rec.compare("product", ea * eb == engine_of(O::mono_product(oa, ob)), true);
    rec.compare("intersect", ideal_intersect(ea, eb) == engine_of(O::mono_intersect(oa, ob)), true);
    rec.compare("colon", ideal_colon(ea, eb) == engine_of(O::mono_colon(oa, ob)), true);
  } catch (const std::exception& e) {
    c.error = e.what();
  }
  return c;
}

SelftestReport run_selftest(const SelftestOptions& opts) {
  SelftestReport rep;
  std::vector<std::pair<std::string, ProblemSpec>> problems;
  if (opts.corpus)
    for (const auto& e : corpus()) problems.emplace_back(e.name, parse_problem(e.text));
  std::mt19937_64 rng(opts.seed);
  for (int i = 0; i < opts.trials; ++i) problems.emplace_back("random_" + std::to_string(i), random_monomial_problem(rng));

  bool minimized_one = false;
  for (const auto& [name, spec] : problems) {
    SelftestCase c = compare_with_oracle(name, spec, opts.bound, opts.inject_fault);
    if (!c.pass() && opts.minimize && !minimized_one) {
      c.minimized = minimize(c, spec, opts.bound, opts.inject_fault);
      minimized_one = true;
    }
    rep.cases.push_back(std::move(c));
  }
  for (int i = 0; i < opts.trials; ++i) rep.cases.push_back(compare_monomial_ideal(rng, i));
  for (const auto& c : rep.cases) (c.pass() ? rep.passed : rep.failed) += 1;
  return rep;
}

std::string to_text(const SelftestReport& r) {
  std::ostringstream os;
  for (const auto& c : r.cases) {
    int skipped = static_cast<int>(std::count_if(c.results.begin(), c.results.end(), [](const auto& x) { return x.skipped; }));
    os << (c.pass() ? "PASS " : "FAIL ") << c.name << " (" << c.results.size() - skipped << " compared";
    if (skipped) os << ", " << skipped << " skipped";
    os << ")\n";
    if (!c.error.empty()) os << "  error: " << c.error << "\n";
    for (const auto& x : c.results)
      if (!x.pass && !x.skipped) os << "  " << x.name << ": engine " << x.engine << ", oracle " << x.oracle << "\n";
    if (!c.pass()) {
      std::istringstream in(c.problem);
      for (std::string line; std::getline(in, line);) os << "  | " << line << "\n";
    }
    if (c.minimized) {
      os << "  minimized reproduction:\n";
      std::istringstream in(*c.minimized);
      for (std::string line; std::getline(in, line);) os << "  > " << line << "\n";
    }
  }
  struct Tally {
    int compared = 0, failed = 0, skipped = 0;
  };
  std::map<std::string, Tally> per;
  for (const auto& c : r.cases)
    for (const auto& x : c.results) {
      Tally& t = per[x.name];
      if (x.skipped)
        ++t.skipped;
      else
        ++t.compared, t.failed += x.pass ? 0 : 1;
    }
  os << "per invariant:\n";
  for (const auto& [name, t] : per) {
    os << "  " << (t.failed ? "FAIL " : "PASS ") << name << ": " << t.compared << " compared, " << t.failed << " failed";
    if (t.skipped) os << ", " << t.skipped << " skipped";
    os << "\n";
  }
  os << r.passed << " passed, " << r.failed << " failed\n";
  return os.str();
}

}  // namespace fibercone
