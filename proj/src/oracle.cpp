#include "fibercone/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace fibercone::oracle {

int degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

Exponent add(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

OPoly poly_mul(const OPoly& a, const OPoly& b) {
  OPoly c;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      mpq_class& slot = c[add(ea, eb)];
      slot += ca * cb;
    }
  for (auto it = c.begin(); it != c.end();) it = it->second == 0 ? c.erase(it) : std::next(it);
  return c;
}

OPoly poly_add(const OPoly& a, const OPoly& b) {
  OPoly c = a;
  for (const auto& [e, v] : b) {
    mpq_class& slot = c[e];
    slot += v;
    if (slot == 0) c.erase(e);
  }
  return c;
}

OPoly monomial_poly(const Exponent& e) { return OPoly{{e, mpq_class(1)}}; }

OPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
  OPoly out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&] {
    std::size_t s = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (s == i) throw std::invalid_argument("oracle parser: number expected in '" + text + "'");
    return text.substr(s, i - s);
  };
  skip();
  if (i < text.size() && text[i] == '0' && text.find_first_not_of("0 ") == std::string::npos) return out;
  while (i < text.size()) {
    int sign = 1;
    skip();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    mpq_class coef(1);
    Exponent e(vars.size(), 0);
    bool first = true;
    while (i < text.size() && text[i] != '+' && text[i] != '-') {
      if (!first) {
        if (text[i] != '*') throw std::invalid_argument("oracle parser: '*' expected in '" + text + "'");
        ++i;
        skip();
      }
      first = false;
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        std::string num = number();
        if (i < text.size() && text[i] == '/') {
          ++i;
          num += "/" + number();
        }
        mpq_class c(num);
        c.canonicalize();
        coef *= c;
      } else {
        std::size_t s = i;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
        std::string name = text.substr(s, i - s);
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw std::invalid_argument("oracle parser: unknown variable '" + name + "'");
        int pw = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          pw = std::stoi(number());
        }
        e[it - vars.begin()] += pw;
      }
      skip();
    }
    out = poly_add(out, OPoly{{e, sign * coef}});
  }
  return out;
}

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Exponent> gens) : n_(nvars) {
  std::sort(gens.begin(), gens.end(), [](const Exponent& a, const Exponent& b) {
    int da = degree(a), db = degree(b);
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& k : gens_)
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    if (!redundant) gens_.push_back(g);
  }
  std::sort(gens_.begin(), gens_.end());
}

MonomialIdeal MonomialIdeal::maximal(int nvars) {
  std::vector<Exponent> g;
  for (int i = 0; i < nvars; ++i) {
    Exponent e(nvars, 0);
    e[i] = 1;
    g.push_back(e);
  }
  return MonomialIdeal(nvars, g);
}

MonomialIdeal MonomialIdeal::unit(int nvars) { return MonomialIdeal(nvars, {Exponent(nvars, 0)}); }

bool MonomialIdeal::contains(const Exponent& m) const {
  for (const auto& g : gens_)
    if (divides(g, m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& o) const {
  for (const auto& g : o.gens_)
    if (!contains(g)) return false;
  return true;
}

bool MonomialIdeal::is_primary() const {
  for (int i = 0; i < n_; ++i) {
    bool found = false;
    for (const auto& g : gens_) {
      bool pure = true;
      for (int j = 0; j < n_; ++j)
        if (j != i && g[j] != 0) pure = false;
      if (pure) found = true;
    }
    if (!found) return false;
  }
  return true;
}

std::optional<std::vector<Exponent>> MonomialIdeal::staircase(std::size_t cap) const {
  if (!is_primary()) return std::nullopt;
  Exponent box(n_, 0);
  for (int i = 0; i < n_; ++i) {
    int best = -1;
    for (const auto& g : gens_) {
      bool pure = true;
      for (int j = 0; j < n_; ++j)
        if (j != i && g[j] != 0) pure = false;
      if (pure && (best < 0 || g[i] < best)) best = g[i];
    }
    box[i] = best;
  }
  std::vector<Exponent> out;
  if (std::any_of(box.begin(), box.end(), [](int b) { return b == 0; })) return out;
  Exponent e(n_, 0);
  while (true) {
    if (!contains(e)) {
      out.push_back(e);
      if (out.size() > cap) return std::nullopt;
    }
    int i = 0;
    while (i < n_ && ++e[i] == box[i]) e[i++] = 0;
    if (i == n_) break;
  }
  return out;
}

std::optional<std::uint64_t> MonomialIdeal::colength() const {
  auto s = staircase();
  if (!s) return std::nullopt;
  return s->size();
}

std::optional<int> MonomialIdeal::nil_degree() const {
  auto s = staircase();
  if (!s) return std::nullopt;
  int t = 0;
  for (const auto& e : *s) t = std::max(t, degree(e) + 1);
  return t;
}

MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  auto g = a.gens();
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.nvars(), g);
}

MonomialIdeal mono_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Exponent> g;
  for (const auto& x : a.gens())
    for (const auto& y : b.gens()) g.push_back(add(x, y));
  return MonomialIdeal(a.nvars(), g);
}

MonomialIdeal mono_power(const MonomialIdeal& a, int e) {
  MonomialIdeal p = MonomialIdeal::unit(a.nvars());
  for (int i = 0; i < e; ++i) p = mono_product(p, a);
  return p;
}

MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Exponent> g;
  for (const auto& x : a.gens())
    for (const auto& y : b.gens()) g.push_back(lcm(x, y));
  return MonomialIdeal(a.nvars(), g);
}

MonomialIdeal mono_colon(const MonomialIdeal& a, const Exponent& m) {
  std::vector<Exponent> g;
  for (const auto& x : a.gens()) {
    Exponent q(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) q[i] = std::max(x[i] - m[i], 0);
    g.push_back(q);
  }
  return MonomialIdeal(a.nvars(), g);
}

MonomialIdeal mono_colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  MonomialIdeal out = MonomialIdeal::unit(a.nvars());
  for (const auto& m : b.gens()) out = mono_intersect(out, mono_colon(a, m));
  return out;
}

void Echelon::reduce(SparseVec& v) const {
  // Columns only grow while eliminating, so one left-to-right pass suffices.
  auto it = v.begin();
  while (it != v.end()) {
    auto p = pivot_row_.find(it->first);
    if (p == pivot_row_.end()) {
      ++it;
      continue;
    }
    const mpq_class c = it->second;
    const std::size_t col = it->first;
    for (const auto& [k, x] : rows_[p->second]) {
      mpq_class& slot = v[k];
      slot -= c * x;
      if (slot == 0) v.erase(k);
    }
    it = v.upper_bound(col);
  }
}

bool Echelon::insert(SparseVec v) {
  reduce(v);
  if (v.empty()) return false;
  mpq_class inv = 1 / v.begin()->second;
  for (auto& [k, x] : v) x *= inv;
  pivot_row_[v.begin()->first] = rows_.size();
  rows_.push_back(std::move(v));
  return true;
}

std::vector<SparseVec> Echelon::tail_rows(std::size_t from) const {
  std::vector<SparseVec> out;
  for (auto it = pivot_row_.lower_bound(from); it != pivot_row_.end(); ++it) {
    SparseVec v;
    for (const auto& [k, x] : rows_[it->second]) v.emplace_hint(v.end(), k - from, x);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

// Monomial polys go into the base, the rest stay generators.
std::pair<MonomialIdeal, std::vector<OPoly>> fold(const MonomialIdeal& base, const std::vector<OPoly>& polys) {
  std::vector<Exponent> mons = base.gens();
  std::vector<OPoly> rest;
  for (const OPoly& p : polys) {
    if (p.size() == 1)
      mons.push_back(p.begin()->first);
    else if (!p.empty())
      rest.push_back(p);
  }
  return {MonomialIdeal(base.nvars(), mons), rest};
}

}  // namespace

SubspaceIdeal::SubspaceIdeal(MonomialIdeal base, std::vector<Exponent> stair, std::vector<SparseVec> basis)
    : base_(std::move(base)), stair_(std::move(stair)) {
  for (std::size_t i = 0; i < stair_.size(); ++i) index_[stair_[i]] = i;
  for (auto& v : basis) basis_.insert(std::move(v));
}

SubspaceIdeal::SubspaceIdeal(MonomialIdeal base0, const std::vector<OPoly>& polys0)
    : base_(MonomialIdeal::unit(base0.nvars())) {
  auto [base, polys] = fold(base0, polys0);
  base_ = std::move(base);
  auto s = base_.staircase();
  if (!s) throw std::invalid_argument("oracle: base monomial ideal is not m-primary or too large");
  stair_ = std::move(*s);
  for (std::size_t i = 0; i < stair_.size(); ++i) index_[stair_[i]] = i;
  for (const OPoly& p : polys)
    for (const Exponent& m : stair_) basis_.insert(reduce_mod_base(poly_mul(p, monomial_poly(m))));
}

SparseVec SubspaceIdeal::reduce_mod_base(const OPoly& f) const {
  SparseVec v;
  for (const auto& [e, c] : f) {
    auto it = index_.find(e);
    if (it != index_.end()) v[it->second] += c;
  }
  for (auto e = v.begin(); e != v.end();) e = e->second == 0 ? v.erase(e) : std::next(e);
  return v;
}

std::uint64_t SubspaceIdeal::colength() const { return stair_.size() - basis_.rank(); }

bool SubspaceIdeal::contains(const OPoly& f) const {
  SparseVec v = reduce_mod_base(f);
  basis_.reduce(v);
  return v.empty();
}

SubspaceIdeal SubspaceIdeal::rebase(const MonomialIdeal& smaller) const {
  if (!base_.contains(smaller)) throw std::invalid_argument("oracle: rebase target is not contained in the base");
  auto s = smaller.staircase();
  if (!s) throw std::invalid_argument("oracle: rebase target is not m-primary or too large");
  std::map<Exponent, std::size_t> idx;
  for (std::size_t i = 0; i < s->size(); ++i) idx[(*s)[i]] = i;
  std::vector<SparseVec> basis;
  for (const Exponent& m : *s)
    if (base_.contains(m)) basis.push_back(SparseVec{{idx.at(m), mpq_class(1)}});
  for (const SparseVec& row : basis_.rows()) {
    SparseVec v;
    for (const auto& [k, x] : row) v[idx.at(stair_[k])] = x;
    basis.push_back(std::move(v));
  }
  return SubspaceIdeal(smaller, std::move(*s), std::move(basis));
}

std::vector<OPoly> SubspaceIdeal::generators() const {
  std::vector<OPoly> g;
  for (const auto& m : base_.gens()) g.push_back(monomial_poly(m));
  for (const SparseVec& row : basis_.rows()) {
    OPoly p;
    for (const auto& [k, x] : row) p[stair_[k]] = x;
    g.push_back(std::move(p));
  }
  return g;
}

namespace {

std::pair<SubspaceIdeal, SubspaceIdeal> common(const SubspaceIdeal& a, const SubspaceIdeal& b) {
  if (a.base() == b.base()) return {a, b};
  MonomialIdeal m = mono_intersect(a.base(), b.base());
  return {a.rebase(m), b.rebase(m)};
}

}  // namespace

SubspaceIdeal sub_sum(const SubspaceIdeal& a0, const SubspaceIdeal& b0) {
  auto [a, b] = common(a0, b0);
  for (const SparseVec& row : b.basis_.rows()) a.basis_.insert(row);
  return a;
}

// Zassenhaus: rows (u|u) for u in A and (v|0) for v in B; the rows whose
// leading column lies in the right half span A cap B.
SubspaceIdeal sub_intersect(const SubspaceIdeal& a0, const SubspaceIdeal& b0) {
  auto [a, b] = common(a0, b0);
  const std::size_t n = a.stair_.size();
  Echelon work;
  for (const SparseVec& u : a.basis_.rows()) {
    SparseVec v = u;
    for (const auto& [k, x] : u) v.emplace_hint(v.end(), k + n, x);
    work.insert(std::move(v));
  }
  for (const SparseVec& u : b.basis_.rows()) work.insert(u);
  return SubspaceIdeal(a.base_, a.stair_, work.tail_rows(n));
}

// Preimage of A under multiplication by g: rows (g*b_i | e_i) and (u | 0).
SubspaceIdeal sub_colon(const SubspaceIdeal& a, const OPoly& g) {
  const std::size_t n = a.stair_.size();
  Echelon work;
  for (const SparseVec& u : a.basis_.rows()) work.insert(u);
  for (std::size_t i = 0; i < n; ++i) {
    SparseVec v = a.reduce_mod_base(poly_mul(g, monomial_poly(a.stair_[i])));
    v.emplace_hint(v.end(), n + i, mpq_class(1));
    work.insert(std::move(v));
  }
  return SubspaceIdeal(a.base_, a.stair_, work.tail_rows(n));
}

SubspaceIdeal sub_colon(const SubspaceIdeal& a, const std::vector<OPoly>& gens) {
  std::optional<SubspaceIdeal> out;
  for (const OPoly& g : gens) {
    SubspaceIdeal c = sub_colon(a, g);
    out = out ? sub_intersect(*out, c) : c;
  }
  if (!out) throw std::invalid_argument("oracle: colon by the zero ideal");
  return *out;
}

bool operator==(const SubspaceIdeal& a0, const SubspaceIdeal& b0) {
  auto [a, b] = common(a0, b0);
  if (a.basis_.rank() != b.basis_.rank()) return false;
  for (const SparseVec& u : b.basis_.rows()) {
    SparseVec v = u;
    a.basis_.reduce(v);
    if (!v.empty()) return false;
  }
  return true;
}

}  // namespace fibercone::oracle
