#pragma once

#include "fibercone/analysis.hpp"
#include "fibercone/blowup.hpp"
#include "fibercone/corpus.hpp"
#include "fibercone/criteria.hpp"
#include "fibercone/errors.hpp"
#include "fibercone/filtration.hpp"
#include "fibercone/groebner.hpp"
#include "fibercone/ideal.hpp"
#include "fibercone/oracle.hpp"
#include "fibercone/problem.hpp"
#include "fibercone/ring.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace testing {

using namespace fibercone;

inline RingPtr ring(std::vector<std::string> vars, std::vector<std::string> q = {}) {
  return Ring::create(CoefField::rationals(), std::move(vars), q);
}

inline RingPtr plane() { return ring({"x", "y"}); }
inline RingPtr cusp() { return ring({"x", "y"}, {"y^2 - x^3"}); }

inline Ideal ideal(const RingPtr& r, std::string_view list) { return Ideal::parse(r, list); }

inline Filtration adic(const RingPtr& r, std::string_view gens, int bound = 10) {
  return make_filtration(r, FiltrationKind::Adic, {r->poly_ring().parse_list(gens)}, bound);
}

inline Filtration table(const RingPtr& r, const std::vector<std::string>& terms, int bound = 10) {
  std::vector<std::vector<Polynomial>> t;
  for (const auto& s : terms) t.push_back(r->poly_ring().parse_list(s));
  return make_filtration(r, FiltrationKind::Table, t, bound);
}

inline ReducedFiltration reduced(const Filtration& f, std::string_view j) {
  return ReducedFiltration(f, certify_reduction(f, f.ring()->poly_ring().parse_list(j)));
}

inline ReducedFiltration reduced(const Filtration& f) { return ReducedFiltration(f, find_minimal_reduction(f, 1)); }

inline std::vector<std::int64_t> head(const SeriesTable& t, std::size_t n) {
  std::vector<std::int64_t> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(t.at(t.first_degree + static_cast<int>(i)));
  return v;
}

// Oracle view of a monomial generator list.
inline oracle::MonomialIdeal mono(std::string_view list, const std::vector<std::string>& vars) {
  std::vector<oracle::Exponent> gens;
  std::stringstream in{std::string(list)};
  std::string g;
  while (std::getline(in, g, ',')) gens.push_back(oracle::parse_poly(g, vars).begin()->first);
  return oracle::MonomialIdeal(static_cast<int>(vars.size()), gens);
}

inline AnalysisReport analyze_entry(std::string_view name, int bound) {
  AnalysisOptions o;
  o.bound = bound;
  return analyze_text(corpus_entry(name).text, o);
}

}  // namespace testing
