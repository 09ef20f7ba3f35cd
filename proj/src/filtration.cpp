#include "fibercone/filtration.hpp"

#include "fibercone/errors.hpp"

#include <map>
#include <mutex>

namespace fibercone {

struct Filtration::State {
  RingPtr ring;
  FiltrationKind kind = FiltrationKind::Adic;
  std::vector<Ideal> table;
  int bound = 1;
  std::shared_ptr<State> base;  // Veronese source
  int k = 1;

  std::recursive_mutex mu;
  std::map<int, Ideal> terms;
  std::map<int, Ideal> m_terms;
  std::once_flag hilbert_once;
  bool hilbert = false;
};

namespace {

const Ideal& raw_term(Filtration::State& s, int n) {
  std::lock_guard lock(s.mu);
  auto it = s.terms.find(n);
  if (it != s.terms.end()) return it->second;
  if (s.base) {
    const Ideal& t = raw_term(*s.base, n * s.k);
    return s.terms.emplace(n, t).first->second;
  }
  if (n <= 0) return s.terms.emplace(n, Ideal::unit(s.ring)).first->second;
  if (n <= static_cast<int>(s.table.size())) return s.terms.emplace(n, s.table[n - 1]).first->second;
  // iterate upward to keep recursion shallow
  int have = static_cast<int>(s.table.size());
  while (s.terms.count(have + 1)) ++have;
  for (int m = have + 1; m <= n; ++m) {
    Ideal prev = raw_term(s, m - 1);
    s.terms.emplace(m, ideal_product(s.table[0], prev));
  }
  return s.terms.at(n);
}

}  // namespace

FiltrationKind Filtration::kind() const noexcept { return s_->base ? FiltrationKind::Table : s_->kind; }
const RingPtr& Filtration::ring() const noexcept { return s_->ring; }
int Filtration::bound() const noexcept { return s_->bound; }
int Filtration::table_length() const noexcept {
  return s_->base ? 0 : static_cast<int>(s_->table.size());
}
int Filtration::veronese_factor() const noexcept { return s_->k; }

bool Filtration::is_hilbert() const {
  std::call_once(s_->hilbert_once, [this] { s_->hilbert = is_m_primary(term_unbounded(1)); });
  return s_->hilbert;
}

const Ideal& Filtration::term_unbounded(int n) const { return raw_term(*s_, n); }

const Ideal& Filtration::term(int n) const {
  if (n > s_->bound)
    throw BoundExceededError("term I_" + std::to_string(n) + " requested beyond bound " +
                             std::to_string(s_->bound));
  return term_unbounded(n);
}

const Ideal& Filtration::m_term(int n) const {
  const Ideal& t = term(n);
  std::lock_guard lock(s_->mu);
  auto it = s_->m_terms.find(n);
  if (it != s_->m_terms.end()) return it->second;
  return s_->m_terms.emplace(n, ideal_product(Ideal::maximal(s_->ring), t)).first->second;
}

bool Filtration::is_product_term(int n) const {
  if (s_->base) return false;
  return n > static_cast<int>(s_->table.size());
}

Filtration Filtration::veronese(int k) const {
  if (k < 1) throw PreconditionError("Veronese factor must be positive");
  if (k == 1) return *this;
  int b = s_->bound / k;
  if (b < 1)
    throw BoundExceededError("Veronese factor " + std::to_string(k) + " leaves no degrees below bound " +
                             std::to_string(s_->bound));
  auto st = std::make_shared<State>();
  st->ring = s_->ring;
  st->kind = FiltrationKind::Table;
  st->bound = b;
  st->base = s_;
  st->k = k;
  return Filtration(std::move(st));
}

Filtration Filtration::with_bound(int bound) const {
  if (bound < 1) throw PreconditionError("bound must be positive");
  auto st = std::make_shared<State>();
  st->ring = s_->ring;
  st->kind = s_->kind;
  st->table = s_->table;
  st->bound = bound;
  st->base = s_->base;
  st->k = s_->k;
  return Filtration(std::move(st));
}

Filtration Filtration::over_ring(const RingPtr& ring) const {
  if (s_->base) throw PreconditionError("cannot move a Veronese transform to another ring");
  if (!(ring->poly_ring() == s_->ring->poly_ring()))
    throw StructuralError("target ring has different variables or field");
  auto st = std::make_shared<State>();
  st->ring = ring;
  st->kind = s_->kind;
  st->bound = s_->bound;
  for (const Ideal& t : s_->table) st->table.push_back(Ideal(ring, t.generators()));
  return Filtration(std::move(st));
}

std::string Filtration::describe() const {
  if (s_->base) return "Veronese(" + Filtration(s_->base).describe() + ", k=" + std::to_string(s_->k) + ")";
  if (s_->kind == FiltrationKind::Adic) return "adic " + s_->table[0].to_string();
  std::string s = "table [";
  for (std::size_t i = 0; i < s_->table.size(); ++i)
    s += (i ? ", " : "") + std::string("I") + std::to_string(i + 1) + "=" + s_->table[i].to_string();
  return s + "]";
}

int default_bound(int table_length, int dim) { return 4 * (table_length + dim + 4); }

Filtration make_filtration(const RingPtr& ring, FiltrationKind kind,
                           const std::vector<std::vector<Polynomial>>& terms, std::optional<int> bound) {
  if (terms.empty()) throw FiltrationError("filtration needs I1");
  if (kind == FiltrationKind::Adic && terms.size() != 1)
    throw FiltrationError("adic filtration takes exactly one ideal I1");
  const PolyRing& R = ring->poly_ring();
  auto st = std::make_shared<Filtration::State>();
  st->ring = ring;
  st->kind = kind;
  for (const auto& gens : terms) st->table.emplace_back(ring, gens);
  int b = bound ? *bound : default_bound(static_cast<int>(terms.size()), ring->dimension());
  if (b < 1) throw FiltrationError("bound must be positive");
  st->bound = b;

  const Ideal& i1 = st->table[0];
  for (const Polynomial& g : i1.generators())
    if (!CoefField::is_zero(g.constant_term()))
      throw FiltrationError("I1 is not contained in the maximal ideal", R.to_string(g));
  if (i1.is_unit()) throw FiltrationError("I1 is the unit ideal");
  for (std::size_t i = 1; i < st->table.size(); ++i)
    for (const Polynomial& g : st->table[i].generators())
      if (!CoefField::is_zero(g.constant_term()))
        throw FiltrationError("I" + std::to_string(i + 1) + " is not contained in the maximal ideal",
                              R.to_string(g));

  Filtration f(st);
  const int n = static_cast<int>(st->table.size());
  for (int i = 1; i < n; ++i) {
    const Ideal& big = st->table[i - 1];
    for (const Polynomial& g : st->table[i].generators())
      if (!big.contains(g))
        throw FiltrationError("I" + std::to_string(i + 1) + " is not contained in I" + std::to_string(i),
                              R.to_string(g));
  }
  for (int a = 1; a <= n; ++a)
    for (int c = a; c <= n; ++c) {
      if (a == 1 && a + c > n) continue;  // continuation rule: equality by definition
      const Ideal& target = f.term_unbounded(a + c);
      Ideal prod = ideal_product(st->table[a - 1], st->table[c - 1]);
      for (const Polynomial& g : prod.generators())
        if (!target.contains(g))
          throw FiltrationError("I" + std::to_string(a) + "*I" + std::to_string(c) + " is not contained in I" +
                                    std::to_string(a + c),
                                R.to_string(g));
    }
  return f;
}

}  // namespace fibercone
