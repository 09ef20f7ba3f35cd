#include "fibercone/problem.hpp"

#include "fibercone/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace fibercone {

namespace {

constexpr std::uint64_t kMinPrime = 10007;

struct Statement {
  std::string key;
  std::string value;
  std::size_t key_offset = 0;
  std::size_t value_offset = 0;
};

class Locator {
 public:
  explicit Locator(std::string_view text) {
    starts_.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i)
      if (text[i] == '\n') starts_.push_back(i + 1);
  }
  [[noreturn]] void fail(const std::string& msg, std::size_t offset) const {
    auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
    std::size_t line = static_cast<std::size_t>(it - starts_.begin());
    throw ParseError(msg, line, offset - starts_[line - 1] + 1);
  }

 private:
  std::vector<std::size_t> starts_;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::size_t skip_space(std::string_view s, std::size_t i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return i;
}

std::string trim_right(std::string_view s) {
  std::size_t e = s.size();
  while (e > 0 && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(0, e));
}

std::vector<Statement> split_statements(std::string_view text, const Locator& loc) {
  // blank out comments, keeping offsets
  std::string clean(text);
  for (std::size_t i = 0; i < clean.size(); ++i)
    if (clean[i] == '#')
      while (i < clean.size() && clean[i] != '\n') clean[i++] = ' ';
  std::vector<Statement> out;
  std::size_t pos = 0;
  while (true) {
    pos = skip_space(clean, pos);
    if (pos >= clean.size()) break;
    std::size_t end = clean.find(';', pos);
    if (end == std::string::npos) end = clean.size();
    std::string_view body(clean.data() + pos, end - pos);
    if (!is_ident_start(body[0])) loc.fail("expected a key", pos);
    std::size_t k = 0;
    while (k < body.size() && is_ident(body[k])) ++k;
    Statement st;
    st.key = std::string(body.substr(0, k));
    st.key_offset = pos;
    std::size_t v = skip_space(body, k);
    if (v < body.size() && body[v] == '=') v = skip_space(body, v + 1);
    else if (v == k && v < body.size()) loc.fail("expected '=' or whitespace after key", pos + k);
    st.value = trim_right(body.substr(v));
    st.value_offset = pos + v;
    if (st.value.empty()) loc.fail("missing value for '" + st.key + "'", pos + v);
    out.push_back(std::move(st));
    pos = end + 1;
  }
  return out;
}

void parse_ring(const Statement& st, const Locator& loc, ProblemSpec& spec) {
  const std::string& v = st.value;
  std::size_t i = 0;
  if (v.compare(0, 1, "Q") == 0 && v.size() > 1 && v[1] == '[') {
    spec.field = CoefField::rationals();
    i = 1;
  } else if (v.compare(0, 2, "F(") == 0) {
    std::size_t close = v.find(')', 2);
    if (close == std::string::npos) loc.fail("unterminated characteristic", st.value_offset + 2);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(v.data() + 2, v.data() + close, p);
    if (ec != std::errc() || ptr != v.data() + close) loc.fail("characteristic is not an integer", st.value_offset + 2);
    if (!is_prime_number(p)) loc.fail(std::to_string(p) + " is not prime", st.value_offset + 2);
    if (p < kMinPrime || p >= (std::uint64_t{1} << 31))
      loc.fail("characteristic must satisfy 10000 < p < 2^31", st.value_offset + 2);
    spec.field = CoefField::prime(p);
    i = close + 1;
  } else {
    loc.fail("expected Q[...] or F(p)[...]", st.value_offset);
  }
  if (i >= v.size() || v[i] != '[') loc.fail("expected '['", st.value_offset + i);
  std::size_t close = v.find(']', i);
  if (close == std::string::npos) loc.fail("unterminated variable list", st.value_offset + i);
  spec.variables.clear();
  std::size_t j = i + 1;
  while (j < close) {
    j = skip_space(std::string_view(v).substr(0, close), j);
    std::size_t s = j;
    if (j >= close || !is_ident_start(v[j])) loc.fail("expected a variable name", st.value_offset + j);
    while (j < close && is_ident(v[j])) ++j;
    std::string name = v.substr(s, j - s);
    if (std::find(spec.variables.begin(), spec.variables.end(), name) != spec.variables.end())
      loc.fail("duplicate variable '" + name + "'", st.value_offset + s);
    spec.variables.push_back(name);
    j = skip_space(std::string_view(v).substr(0, close), j);
    if (j < close) {
      if (v[j] != ',') loc.fail("expected ','", st.value_offset + j);
      ++j;
    }
  }
  if (spec.variables.empty()) loc.fail("ring needs at least one variable", st.value_offset + i);
  std::size_t k = skip_space(v, close + 1);
  spec.defining.clear();
  if (k < v.size()) {
    if (v[k] != '/') loc.fail("expected '/' before the defining ideal", st.value_offset + k);
    k = skip_space(v, k + 1);
    if (k >= v.size() || v[k] != '(' || v.back() != ')')
      loc.fail("defining ideal must be written /( ... )", st.value_offset + k);
    PolyRing R(spec.field, spec.variables);
    std::string body = v.substr(k + 1, v.size() - k - 2);
    try {
      for (const Polynomial& p : R.parse_list(body)) spec.defining.push_back(R.to_string(p));
    } catch (const ParseError& e) {
      loc.fail(e.message(), st.value_offset + k + e.column());
    }
  }
}

std::vector<Polynomial> parse_polys(const PolyRing& R, const Statement& st, const Locator& loc) {
  try {
    return R.parse_list(st.value);
  } catch (const ParseError& e) {
    loc.fail(e.message(), st.value_offset + e.column() - 1);
  }
}

long long parse_integer(const Statement& st, const Locator& loc) {
  long long x = 0;
  auto [ptr, ec] = std::from_chars(st.value.data(), st.value.data() + st.value.size(), x);
  if (ec != std::errc() || ptr != st.value.data() + st.value.size())
    loc.fail("'" + st.key + "' needs an integer", st.value_offset);
  return x;
}

}  // namespace

ProblemSpec parse_problem(std::string_view text) {
  Locator loc(text);
  auto stmts = split_statements(text, loc);
  std::map<std::string, const Statement*> seen;
  const Statement* ring = nullptr;
  for (const auto& st : stmts) {
    if (seen.count(st.key)) loc.fail("duplicate key '" + st.key + "'", st.key_offset);
    seen[st.key] = &st;
    if (st.key == "ring") ring = &st;
  }
  if (!ring) loc.fail("missing 'ring' statement", 0);
  ProblemSpec spec;
  parse_ring(*ring, loc, spec);
  if (auto it = seen.find("order"); it != seen.end()) {
    const auto& v = it->second->value;
    if (v != "grevlex" && v != "lex") loc.fail("order must be grevlex or lex", it->second->value_offset);
    spec.order = v;
  }
  PolyRing R(spec.field, spec.variables);
  std::map<int, const Statement*> terms;
  for (const auto& st : stmts) {
    if (st.key == "ring" || st.key == "order") continue;
    if (st.key == "filtration") {
      if (st.value == "adic") spec.kind = FiltrationKind::Adic;
      else if (st.value == "table") spec.kind = FiltrationKind::Table;
      else loc.fail("filtration must be adic or table", st.value_offset);
    } else if (st.key == "bound") {
      long long b = parse_integer(st, loc);
      if (b < 1 || b > 512) loc.fail("bound must be between 1 and 512", st.value_offset);
      spec.bound = static_cast<int>(b);
    } else if (st.key == "seed") {
      long long s = parse_integer(st, loc);
      if (s < 0) loc.fail("seed must be nonnegative", st.value_offset);
      spec.seed = static_cast<std::uint64_t>(s);
    } else if (st.key == "J") {
      auto polys = parse_polys(R, st, loc);
      std::string s;
      for (std::size_t i = 0; i < polys.size(); ++i) s += (i ? ", " : "") + R.to_string(polys[i]);
      spec.reduction = s;
    } else if (st.key.size() > 1 && st.key[0] == 'I' &&
               std::all_of(st.key.begin() + 1, st.key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      int n = std::stoi(st.key.substr(1));
      if (n < 1 || n > 64) loc.fail("term index out of range", st.key_offset);
      terms[n] = &st;
    } else {
      loc.fail("unknown key '" + st.key + "'", st.key_offset);
    }
  }
  if (!seen.count("filtration")) loc.fail("missing 'filtration' statement", text.size());
  if (terms.empty() || terms.begin()->first != 1) loc.fail("missing I1", text.size());
  int expect = 1;
  for (const auto& [n, st] : terms) {
    if (n != expect) loc.fail("missing I" + std::to_string(expect), st->key_offset);
    ++expect;
  }
  if (spec.kind == FiltrationKind::Adic && terms.size() > 1)
    loc.fail("adic filtration takes only I1", terms.rbegin()->second->key_offset);
  for (const auto& [n, st] : terms) {
    auto polys = parse_polys(R, *st, loc);
    std::string s;
    for (std::size_t i = 0; i < polys.size(); ++i) s += (i ? ", " : "") + R.to_string(polys[i]);
    spec.terms.push_back(s);
  }
  return spec;
}

std::string to_problem_text(const ProblemSpec& spec) {
  std::string s = "ring " + spec.field.name() + "[";
  for (std::size_t i = 0; i < spec.variables.size(); ++i) s += (i ? "," : "") + spec.variables[i];
  s += "]";
  if (!spec.defining.empty()) {
    s += "/(";
    for (std::size_t i = 0; i < spec.defining.size(); ++i) s += (i ? ", " : "") + spec.defining[i];
    s += ")";
  }
  s += ";\n";
  if (spec.order != "grevlex") s += "order = " + spec.order + ";\n";
  s += std::string("filtration ") + (spec.kind == FiltrationKind::Adic ? "adic" : "table") + ";\n";
  for (std::size_t i = 0; i < spec.terms.size(); ++i)
    s += "I" + std::to_string(i + 1) + " = " + spec.terms[i] + ";\n";
  if (spec.reduction) s += "J = " + *spec.reduction + ";\n";
  if (spec.bound) s += "bound = " + std::to_string(*spec.bound) + ";\n";
  s += "seed = " + std::to_string(spec.seed) + ";\n";
  return s;
}

RingPtr build_ring(const ProblemSpec& spec) {
  MonomialOrder order = spec.order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
  PolyRing R(spec.field, spec.variables, order);
  std::vector<Polynomial> q;
  for (const auto& d : spec.defining) q.push_back(R.parse(d));
  return Ring::create(std::move(R), std::move(q));
}

Problem build_problem(const ProblemSpec& spec) {
  RingPtr ring = build_ring(spec);
  const PolyRing& R = ring->poly_ring();
  std::vector<std::vector<Polynomial>> terms;
  for (const auto& t : spec.terms) terms.push_back(R.parse_list(t));
  Filtration f = make_filtration(ring, spec.kind, terms, spec.bound);
  std::optional<std::vector<Polynomial>> red;
  if (spec.reduction) red = R.parse_list(*spec.reduction);
  return Problem{ring, f, red};
}

}  // namespace fibercone
