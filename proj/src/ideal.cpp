#include "fibercone/ideal.hpp"

#include "fibercone/errors.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>

namespace fibercone {

std::optional<StaircaseInfo> staircase_info(const std::vector<Monomial>& leads, std::size_t n) {
  for (const Monomial& l : leads)
    if (l.is_one()) return StaircaseInfo{0, 0};
  std::vector<unsigned> cap(n, 0);
  std::vector<bool> seen(n, false);
  for (const Monomial& l : leads) {
    std::uint32_t s = l.support();
    if (s == 0 || (s & (s - 1))) continue;
    std::size_t i = static_cast<std::size_t>(__builtin_ctz(s));
    if (!seen[i] || l[i] < cap[i]) cap[i] = l[i];
    seen[i] = true;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i]) return std::nullopt;
  StaircaseInfo info;
  const std::size_t last = n - 1;
  std::vector<unsigned> p(n, 0);
  std::vector<const Monomial*> relevant;
  for (const Monomial& l : leads) relevant.push_back(&l);
  for (;;) {
    unsigned h = cap[last];
    unsigned pd = 0;
    for (std::size_t i = 0; i < last; ++i) pd += p[i];
    for (const Monomial* l : relevant) {
      if ((*l)[last] >= h) continue;
      bool below = true;
      for (std::size_t i = 0; i < last; ++i)
        if ((*l)[i] > p[i]) {
          below = false;
          break;
        }
      if (below) h = (*l)[last];
    }
    info.count += h;
    if (h > 0) info.max_degree = std::max(info.max_degree, pd + h - 1);
    // odometer over the first n-1 coordinates
    std::size_t i = 0;
    for (; i < last; ++i) {
      if (++p[i] < cap[i]) break;
      p[i] = 0;
    }
    if (i == last) break;
  }
  return info;
}

struct Ideal::Impl {
  RingPtr ring;
  std::vector<Polynomial> gens;
  // Sum construction: basis grows from base's basis by `extra`.
  std::shared_ptr<Impl> base;
  std::vector<Polynomial> extra;
  // Homogeneous ideal known to contain m^hint.
  std::optional<unsigned> hint;
  std::optional<GroebnerBasis> preset;

  std::once_flag gb_once;
  std::atomic<bool> gb_ready{false};
  GroebnerBasis gb;
  std::optional<StaircaseInfo> stair;
  std::optional<unsigned> nil;

  std::once_flag basis_once;
  std::vector<Polynomial> basis;

  void compute();
  // An ideal given by a basis known to be reduced.
  static Ideal from_basis(RingPtr ring, GroebnerBasis gb) {
    auto impl = std::make_shared<Impl>();
    impl->ring = std::move(ring);
    impl->gens = gb.elements();
    impl->preset = std::move(gb);
    return Ideal(std::move(impl));
  }
  const GroebnerBasis& groebner() {
    std::call_once(gb_once, [this] {
      compute();
      gb_ready.store(true, std::memory_order_release);
    });
    return gb;
  }
};

namespace {

bool all_homogeneous(const std::vector<Polynomial>& v) {
  for (const Polynomial& p : v)
    if (!p.is_homogeneous()) return false;
  return true;
}

void for_each_monomial_of_degree(std::size_t n, unsigned d,
                                 const std::function<bool(const Monomial&)>& f) {
  std::vector<unsigned> e(n, 0);
  bool stop = false;
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (stop) return;
    if (i + 1 == n) {
      e[i] = left;
      if (!f(Monomial::from_exponents(e))) stop = true;
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
}

}  // namespace

namespace {
constexpr std::uint64_t kLinearCap = 6000;
GroebnerBasis linear_extension(const PolyRing& R, const GroebnerBasis& gb, const StaircaseInfo& st, unsigned nil,
                               const std::vector<Polynomial>& extra);
}  // namespace

void Ideal::Impl::compute() {
  const PolyRing& R = ring->poly_ring();
  if (preset) {
    gb = *preset;
  } else if (base) {
    gb = extend_groebner_basis(R, base->groebner(), extra);
  } else if (hint && all_homogeneous(gens) &&
             ring->defining_basis().is_homogeneous()) {
    std::vector<Polynomial> all = gens;
    for (const Polynomial& q : ring->defining_basis().elements()) all.push_back(q);
    gb = homogeneous_groebner_basis(R, all, *hint);
  } else {
    gb = extend_groebner_basis(R, ring->defining_basis(), gens);
  }
  stair = staircase_info(gb.lead_monomials(), R.num_vars());
  if (!stair) return;
  if (gb.is_unit()) {
    nil = 0;
    return;
  }
  std::optional<unsigned> known;
  if (gb.truncation() && gb.truncation()->skip == 0) known = gb.truncation()->degree;
  if (gb.is_homogeneous()) {
    nil = stair->max_degree + 1;
  } else if (known) {
    // m^known sits in the ideal; bisect for the least such exponent, since
    // products and powers inherit it as their starting truncation.
    auto contains_power = [&](unsigned d) {
      bool all_in = true;
      for_each_monomial_of_degree(R.num_vars(), d, [&](const Monomial& m) {
        if (!reduces_to_zero(R, R.monomial(m), gb)) all_in = false;
        return all_in;
      });
      return all_in;
    };
    unsigned lo = stair->max_degree + 1, hi = *known;
    while (lo < hi) {
      unsigned mid = lo + (hi - lo) / 2;
      if (contains_power(mid))
        hi = mid;
      else
        lo = mid + 1;
    }
    nil = hi;
  } else {
    // Verify m^D inside I for increasing D; a primary ideal succeeds by D = length.
    unsigned top = std::max<unsigned>(stair->max_degree + 1, static_cast<unsigned>(std::min<std::uint64_t>(stair->count, 1u << 15)));
    if (known) top = std::min(top, *known);
    for (unsigned d = stair->max_degree + 1; d <= top; ++d) {
      bool all_in = true;
      for_each_monomial_of_degree(R.num_vars(), d, [&](const Monomial& m) {
        if (!reduces_to_zero(R, R.monomial(m), gb)) all_in = false;
        return all_in;
      });
      if (all_in) {
        nil = d;
        break;
      }
    }
  }
  if (known && (!nil || *known < *nil)) nil = known;
  if (nil) gb = gb.with_truncation(Truncation{*nil, 0});
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : impl_(std::make_shared<Impl>()) {
  if (!ring) throw StructuralError("ideal without a ring");
  for (const Polynomial& g : gens)
    if (!g.is_zero() && g.lead_monomial().num_vars() != ring->num_vars())
      throw StructuralError("generator does not belong to the ring");
  impl_->ring = std::move(ring);
  for (Polynomial& g : gens)
    if (!g.is_zero()) impl_->gens.push_back(std::move(g));
}

Ideal Ideal::unit(const RingPtr& ring) { return Ideal(ring, {ring->poly_ring().one()}); }
Ideal Ideal::zero(const RingPtr& ring) { return Ideal(ring, {}); }

Ideal Ideal::maximal(const RingPtr& ring) {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < ring->num_vars(); ++i) v.push_back(ring->poly_ring().variable(i));
  return Ideal(ring, std::move(v));
}

Ideal Ideal::parse(const RingPtr& ring, std::string_view list) {
  return Ideal(ring, ring->poly_ring().parse_list(list));
}

const RingPtr& Ideal::ring() const noexcept { return impl_->ring; }
const std::vector<Polynomial>& Ideal::generators() const noexcept { return impl_->gens; }
const GroebnerBasis& Ideal::groebner() const { return impl_->groebner(); }

const std::vector<Polynomial>& Ideal::basis_generators() const {
  std::call_once(impl_->basis_once, [this] {
    const GroebnerBasis& gb = groebner();
    const Ring& r = *impl_->ring;
    for (const Polynomial& g : gb.elements()) {
      if (r.has_defining_ideal() && reduces_to_zero(r.poly_ring(), g, r.defining_basis())) continue;
      impl_->basis.push_back(g);
    }
  });
  return impl_->basis;
}

bool Ideal::contains(const Polynomial& p) const {
  return reduces_to_zero(impl_->ring->poly_ring(), p, groebner());
}

bool Ideal::contains(const Ideal& other) const {
  if (impl_->ring != other.impl_->ring) throw StructuralError("ideals over different rings");
  if (other.impl_ == impl_) return true;
  const auto& gens = other.impl_->gb_ready.load(std::memory_order_acquire) ? other.basis_generators()
                                                                            : other.generators();
  for (const Polynomial& g : gens)
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_unit() const { return groebner().is_unit(); }

bool Ideal::is_zero() const {
  const Ring& r = *impl_->ring;
  for (const Polynomial& g : impl_->gens)
    if (!reduces_to_zero(r.poly_ring(), g, r.defining_basis())) return false;
  return true;
}

std::optional<StaircaseInfo> Ideal::staircase() const {
  groebner();
  return impl_->stair;
}

std::optional<unsigned> Ideal::nil_degree() const {
  groebner();
  return impl_->nil;
}

std::string Ideal::to_string() const {
  const auto& b = basis_generators();
  std::string s = "(";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? ", " : "") + impl_->ring->poly_ring().to_string(b[i]);
  return s + ")";
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (a.impl_->ring != b.impl_->ring) return false;
  if (a.impl_ == b.impl_) return true;
  return a.groebner() == b.groebner();
}

// ---------------------------------------------------------------------------

namespace {

void same_ring(const Ideal& a, const Ideal& b) {
  if (a.ring() != b.ring()) throw StructuralError("ideals over different rings");
}

bool is_monomial_basis(const GroebnerBasis& gb) {
  for (const Polynomial& g : gb.elements())
    if (!g.is_monomial()) return false;
  return true;
}

std::vector<Polynomial> minimal_monomials(const PolyRing& R, std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> kept;
  for (const Monomial& m : ms) {
    bool redundant = false;
    for (const Monomial& k : kept)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) kept.push_back(m);
  }
  std::vector<Polynomial> out;
  for (const Monomial& m : kept) out.push_back(R.monomial(m));
  return out;
}

Polynomial lift(const PolyRing& E, const Polynomial& p, unsigned t_exp) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const Term& t : p.terms()) terms.push_back(Term{t.coef, t.mono.insert_variable(0, t_exp)});
  return E.from_terms(std::move(terms));
}

}  // namespace

Ideal ideal_sum(const Ideal& i, const Ideal& j) {
  same_ring(i, j);
  if (j.generators().empty()) return i;
  if (i.generators().empty()) return j;
  // Extend the summand whose basis is cheapest to have: ready with a known
  // nil degree, then ready, then homogeneous.  Starting from a non-primary
  // summand would force a long nil-degree search on it.
  auto score = [](const Ideal& x) {
    if (x.impl_->gb_ready.load()) return x.impl_->nil ? 3 : 2;
    return all_homogeneous(x.generators()) && x.ring()->defining_basis().is_homogeneous() ? 1 : 0;
  };
  int si = score(i), sj = score(j);
  bool i_base = si != sj ? si > sj : i.generators().size() >= j.generators().size();
  const Ideal& b = i_base ? i : j;
  const Ideal& o = i_base ? j : i;
  auto impl = std::make_shared<Ideal::Impl>();
  impl->ring = i.ring();
  impl->gens = i.generators();
  impl->gens.insert(impl->gens.end(), j.generators().begin(), j.generators().end());
  impl->base = b.impl_;
  impl->extra = o.impl_->gb_ready.load() ? o.basis_generators() : o.generators();
  return Ideal(std::move(impl));
}

namespace {

// m^n + Q with a truncated basis.
std::shared_ptr<Ideal::Impl> power_of_maximal(const RingPtr& ring, unsigned n) {
  const PolyRing& R = ring->poly_ring();
  std::vector<Polynomial> monos;
  for_each_monomial_of_degree(R.num_vars(), n, [&](const Monomial& m) {
    monos.push_back(R.monomial(m));
    return true;
  });
  std::sort(monos.begin(), monos.end(),
            [&](const Polynomial& a, const Polynomial& b) { return R.compare(a.lead_monomial(), b.lead_monomial()) < 0; });
  auto impl = std::make_shared<Ideal::Impl>();
  impl->ring = ring;
  impl->gens = monos;
  GroebnerBasis gb = GroebnerBasis::trusted(R.order(), std::move(monos), Truncation{n, 0});
  if (ring->has_defining_ideal()) {
    auto st = staircase_info(gb.lead_monomials(), R.num_vars());
    if (st && st->count <= kLinearCap)
      gb = linear_extension(R, gb, *st, n, ring->defining_basis().elements());
    else
      gb = extend_groebner_basis(R, gb, ring->defining_basis().elements());
  }
  impl->preset = gb;
  return impl;
}

}  // namespace

Ideal ideal_product(const Ideal& i, const Ideal& j) {
  same_ring(i, j);
  if (i.is_unit()) return j;
  if (j.is_unit()) return i;
  const PolyRing& R = i.ring()->poly_ring();
  const auto& a = i.basis_generators();
  const auto& b = j.basis_generators();
  std::vector<Polynomial> gens;
  if (is_monomial_basis(i.groebner()) && is_monomial_basis(j.groebner())) {
    std::vector<Monomial> ms;
    for (const Polynomial& x : a)
      for (const Polynomial& y : b) ms.push_back(x.lead_monomial() * y.lead_monomial());
    gens = minimal_monomials(R, std::move(ms));
  } else {
    for (const Polynomial& x : a)
      for (const Polynomial& y : b) gens.push_back(R.mul(x, y));
  }
  auto impl = std::make_shared<Ideal::Impl>();
  impl->ring = i.ring();
  impl->gens = std::move(gens);
  auto ni = i.nil_degree(), nj = j.nil_degree();
  if (ni && nj && i.groebner().is_homogeneous() && j.groebner().is_homogeneous()) {
    impl->hint = *ni + *nj;
  } else if (ni && nj) {
    // m^(ni+nj) lies in the product; starting from it keeps every reduction truncated.
    impl->base = power_of_maximal(i.ring(), *ni + *nj);
    impl->extra = impl->gens;
  }
  return Ideal(std::move(impl));
}

Ideal ideal_power(const Ideal& i, unsigned e) {
  Ideal r = Ideal::unit(i.ring());
  for (unsigned k = 0; k < e; ++k) r = ideal_product(r, i);
  return r;
}

Ideal ideal_intersect(const Ideal& i, const Ideal& j) {
  same_ring(i, j);
  if (i.contains(j)) return j;
  if (j.contains(i)) return i;
  const Ring& ring = *i.ring();
  const PolyRing& R = ring.poly_ring();
  if (is_monomial_basis(i.groebner()) && is_monomial_basis(j.groebner())) {
    std::vector<Monomial> ms;
    for (const Polynomial& x : i.groebner().elements())
      for (const Polynomial& y : j.groebner().elements()) ms.push_back(lcm(x.lead_monomial(), y.lead_monomial()));
    return Ideal(i.ring(), minimal_monomials(R, std::move(ms)));
  }
  const PolyRing& E = ring.elimination_ring();
  std::vector<Polynomial> base;
  for (const Polynomial& g : i.groebner().elements()) base.push_back(lift(E, g, 1));
  std::vector<Polynomial> extra;
  for (const Polynomial& h : j.groebner().elements())
    extra.push_back(E.sub(lift(E, h, 0), lift(E, h, 1)));
  GroebnerBasis k = extend_groebner_basis(E, GroebnerBasis::trusted(E.order(), std::move(base)), extra);
  std::vector<Polynomial> gens;
  for (const Polynomial& g : k.elements()) {
    if (g.lead_monomial()[0] != 0) continue;
    std::vector<Term> terms;
    for (const Term& t : g.terms()) terms.push_back(Term{t.coef, t.mono.drop_variable(0)});
    gens.push_back(R.from_terms(std::move(terms)));
  }
  auto impl = std::make_shared<Ideal::Impl>();
  impl->ring = i.ring();
  impl->preset = GroebnerBasis::trusted(R.order(), gens);
  impl->gens = std::move(gens);
  return Ideal(std::move(impl));
}

namespace {

using Sparse = std::map<std::size_t, Scalar>;

// A/I for I of finite colength, on the basis of standard monomials (ascending degree).
class Quotient {
 public:
  // With `by_order` the basis runs down the monomial order, so the first
  // coordinate of a vector is its lead monomial.
  Quotient(const PolyRing& R, const GroebnerBasis& gb, const StaircaseInfo& st, unsigned nil, bool by_order = false)
      : R_(R), F_(R_.field()), gb_(gb), nil_(nil) {
    std::vector<Monomial> leads = gb_.lead_monomials();
    for (unsigned d = 0; d <= st.max_degree; ++d)
      for_each_monomial_of_degree(R_.num_vars(), d, [&](const Monomial& m) {
        for (const Monomial& l : leads)
          if (l.divides(m)) return true;
        basis_.push_back(m);
        return true;
      });
    if (by_order)
      std::sort(basis_.begin(), basis_.end(),
                [&](const Monomial& a, const Monomial& b) { return R_.order().compare(a, b) > 0; });
    for (std::size_t j = 0; j < basis_.size(); ++j) index_.emplace(key(basis_[j]), j);
  }
  explicit Quotient(const Ideal& i)
      : Quotient(i.ring()->poly_ring(), i.groebner(), *i.staircase(), i.nil_degree().value_or(~0u)) {}

  std::size_t size() const { return basis_.size(); }
  std::size_t size_vars() const { return R_.num_vars(); }
  const Monomial& basis(std::size_t j) const { return basis_[j]; }
  const CoefField& field() const { return F_; }

  // y -= c x
  void axpy(Sparse& y, const Scalar& c, const Sparse& x) const {
    for (const auto& [k, a] : x) {
      auto [it, fresh] = y.try_emplace(k, F_.neg(F_.mul(c, a)));
      if (!fresh) {
        it->second = F_.sub(it->second, F_.mul(c, a));
        if (CoefField::is_zero(it->second)) y.erase(it);
      }
    }
  }

  // Normal form of a monomial. A border monomial x_v u with u standard is reduced by the
  // basis; anything else is x_v times the form of t / x_v, whose terms are below t / x_v.
  const Sparse& nf(const Monomial& t) {
    auto k = key(t);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    Sparse out;
    if (auto it = index_.find(k); it != index_.end()) {
      out.emplace(it->second, Scalar(1));
    } else if (t.degree() < nil_) {
      std::size_t v = 0;
      while (t[v] == 0) ++v;
      std::vector<unsigned> e = k;
      --e[v];
      if (index_.count(e)) {
        Polynomial p = normal_form(R_, R_.monomial(t), gb_);
        for (const Term& term : p.terms()) out.emplace(index_.at(key(term.mono)), term.coef);
      } else {
        std::vector<unsigned> xv(k.size(), 0);
        xv[v] = 1;
        Monomial x = Monomial::from_exponents(xv);
        Sparse below = nf(Monomial::from_exponents(e));
        for (const auto& [j, a] : below) axpy(out, F_.neg(a), nf(x * basis_[j]));
      }
    }
    return memo_.emplace(std::move(k), std::move(out)).first->second;
  }

  // m * p in A/I, with coordinates shifted by `offset`.
  void add_product(Sparse& out, const Monomial& m, const Polynomial& p, std::size_t offset = 0) {
    for (const Term& t : p.terms())
      for (const auto& [j, a] : nf(t.mono * m)) {
        Sparse one{{offset + j, Scalar(1)}};
        axpy(out, F_.neg(F_.mul(t.coef, a)), one);
      }
  }

  Sparse vec(const Polynomial& p) {
    Sparse out;
    add_product(out, Monomial::from_exponents(std::vector<unsigned>(R_.num_vars(), 0)), p);
    return out;
  }

  Sparse times_variable(const Sparse& v, std::size_t var) {
    std::vector<unsigned> e(R_.num_vars(), 0);
    e[var] = 1;
    Monomial x = Monomial::from_exponents(e);
    Sparse out;
    for (const auto& [j, a] : v) axpy(out, F_.neg(a), nf(x * basis_[j]));
    return out;
  }

  std::optional<std::size_t> find(const Monomial& m) const {
    auto it = index_.find(key(m));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  Polynomial to_polynomial(const Sparse& v) const {
    std::vector<Term> terms;
    for (const auto& [k, a] : v) terms.push_back(Term{a, basis_[k]});
    return R_.from_terms(std::move(terms));
  }

 private:
  static std::vector<unsigned> key(const Monomial& m) {
    std::vector<unsigned> k(m.num_vars());
    for (std::size_t v = 0; v < k.size(); ++v) k[v] = m[v];
    return k;
  }

  const PolyRing& R_;
  const CoefField& F_;
  const GroebnerBasis& gb_;
  unsigned nil_;
  std::vector<Monomial> basis_;
  std::map<std::vector<unsigned>, std::size_t> index_;
  std::map<std::vector<unsigned>, Sparse> memo_;
};

bool linear_applies(const Ideal& i) {
  auto st = i.staircase();
  return st && st->count > 0 && st->count <= kLinearCap;
}

// Row echelon form. Each row's pivot is its first coordinate, or its last
// with `from_end`.
class Echelon {
 public:
  explicit Echelon(const Quotient& q, bool from_end = false) : q_(q), from_end_(from_end) {}

  // Reduces v against the pivots and stores it if independent.
  bool insert(Sparse v) {
    while (!v.empty()) {
      auto [c, a] = lead(v);
      auto pv = pivots_.find(c);
      if (pv == pivots_.end()) break;
      Scalar coef = a;
      q_.axpy(v, coef, pv->second);
    }
    if (v.empty()) return false;
    const CoefField& F = q_.field();
    Scalar inv = F.inv(lead(v).second);
    for (auto& [k, a] : v) a = F.mul(a, inv);
    std::size_t c = lead(v).first;
    last_ = pivots_.emplace(c, std::move(v)).first;
    return true;
  }
  std::size_t rank() const { return pivots_.size(); }

  // Inserts the seeds and, for every new pivot row, its products with the
  // variables: the pivots then span the ideal the seeds generate in A/I.
  void close(Quotient& q, std::vector<Sparse> queue) {
    while (!queue.empty()) {
      Sparse v = std::move(queue.back());
      queue.pop_back();
      if (!insert(std::move(v))) continue;
      const Sparse& row = last_->second;
      for (std::size_t var = 0; var < q.size_vars(); ++var) queue.push_back(q.times_variable(row, var));
    }
  }

  // Clears every pivot column from the other rows.
  void reduce_fully() {
    auto step = [&](Sparse& v, std::size_t own) {
      std::vector<std::pair<std::size_t, Scalar>> hits;
      for (const auto& [c, a] : v)
        if (c != own && pivots_.count(c)) hits.emplace_back(c, a);
      for (const auto& [c, a] : hits) q_.axpy(v, a, pivots_.at(c));
    };
    if (from_end_)
      for (auto& [c, v] : pivots_) step(v, c);
    else
      for (auto it = pivots_.rbegin(); it != pivots_.rend(); ++it) step(it->second, it->first);
  }

  const std::map<std::size_t, Sparse>& pivots() const { return pivots_; }

 private:
  std::pair<std::size_t, Scalar> lead(const Sparse& v) const { return from_end_ ? *v.rbegin() : *v.begin(); }

  const Quotient& q_;
  bool from_end_;
  std::map<std::size_t, Sparse> pivots_;
  std::map<std::size_t, Sparse>::iterator last_;
};

// Reduced basis of I + V, where V is given on the term-ordered basis of A/I by
// vectors with distinct leading coordinates, each monic there and free of the others.
GroebnerBasis assemble(const PolyRing& R, const Quotient& q, const GroebnerBasis& gb,
                       const std::map<std::size_t, Sparse>& lead_rows) {
  if (lead_rows.empty()) return gb;
  std::vector<Monomial> leads;
  for (const auto& [c, row] : lead_rows) leads.push_back(q.basis(c));
  for (const Monomial& l : leads)
    if (l.is_one()) return GroebnerBasis::trusted(gb.order(), {R.one()}, gb.truncation());
  auto divisible = [&](const Monomial& m, const Monomial* self) {
    for (const Monomial& p : leads)
      if (&p != self && p.divides(m)) return true;
    return false;
  };
  std::vector<Polynomial> out;
  for (const Polynomial& g : gb.elements()) {
    if (divisible(g.lead_monomial(), nullptr)) continue;
    Sparse tail;
    for (std::size_t t = 1; t < g.terms().size(); ++t)
      if (auto j = q.find(g.terms()[t].mono)) tail.emplace(*j, g.terms()[t].coef);
    std::vector<std::pair<std::size_t, Scalar>> hits;
    for (const auto& [c, a] : tail)
      if (lead_rows.count(c)) hits.emplace_back(c, a);
    for (const auto& [c, a] : hits) q.axpy(tail, a, lead_rows.at(c));
    out.push_back(R.add(R.monomial(g.lead_monomial()), q.to_polynomial(tail)));
  }
  std::size_t k = 0;
  for (const auto& [c, row] : lead_rows) {
    if (!divisible(leads[k], &leads[k])) out.push_back(q.to_polynomial(row));
    ++k;
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return gb.order().compare(a.lead_monomial(), b.lead_monomial()) < 0;
  });
  return GroebnerBasis::trusted(gb.order(), std::move(out), gb.truncation());
}

// Reduced basis of I + (extra) for I of finite colength with m^nil inside I.
GroebnerBasis linear_extension(const PolyRing& R, const GroebnerBasis& gb, const StaircaseInfo& st, unsigned nil,
                               const std::vector<Polynomial>& extra) {
  Quotient q(R, gb, st, nil, true);
  Echelon ech(q);
  std::vector<Sparse> seeds;
  for (const Polynomial& f : extra) seeds.push_back(q.vec(f));
  ech.close(q, std::move(seeds));
  ech.reduce_fully();
  return assemble(R, q, gb, ech.pivots());
}

// (I : g_1..g_m) = I + K, K the kernel of f -> (f g_1, ..., f g_m) on A/I.
// Basis monomials are taken downward so that high degrees, whose images
// mostly vanish, come first; the kernel is then put in echelon form by leads.
std::optional<Ideal> kernel_colon(const Ideal& i, const std::vector<Polynomial>& gs) {
  if (!linear_applies(i)) return std::nullopt;
  const PolyRing& R = i.ring()->poly_ring();
  const GroebnerBasis& gb = i.groebner();
  Quotient q(R, gb, *i.staircase(), i.nil_degree().value_or(~0u), true);
  const std::size_t L = q.size();
  std::vector<Polynomial> reduced;
  for (const Polynomial& g : gs) reduced.push_back(normal_form(R, g, gb));
  const CoefField& F = q.field();
  std::map<std::size_t, std::pair<Sparse, Sparse>> pivots;
  Echelon kernel(q);
  for (std::size_t s = 0; s < L; ++s) {
    Sparse v, e{{s, Scalar(1)}};
    for (std::size_t k = 0; k < reduced.size(); ++k) q.add_product(v, q.basis(s), reduced[k], k * L);
    // Pivot on the smallest monomial of each image vector: low degrees fill in least.
    while (!v.empty()) {
      auto pv = pivots.find(v.rbegin()->first);
      if (pv == pivots.end()) break;
      Scalar c = v.rbegin()->second;
      q.axpy(v, c, pv->second.first);
      q.axpy(e, c, pv->second.second);
    }
    if (v.empty()) {
      kernel.insert(std::move(e));
      continue;
    }
    Scalar inv = F.inv(v.rbegin()->second);
    for (auto& [k, a] : v) a = F.mul(a, inv);
    for (auto& [k, a] : e) a = F.mul(a, inv);
    std::size_t c = v.rbegin()->first;
    pivots.emplace(c, std::pair{std::move(v), std::move(e)});
  }
  kernel.reduce_fully();
  return Ideal::Impl::from_basis(i.ring(), assemble(R, q, gb, kernel.pivots()));
}

}  // namespace

std::optional<std::uint64_t> colength_of_sum(const Ideal& i, const std::vector<Polynomial>& extra) {
  if (!linear_applies(i)) return std::nullopt;
  Quotient q(i);
  Echelon ech(q);
  std::vector<Sparse> seeds;
  for (const Polynomial& f : extra) seeds.push_back(q.vec(f));
  ech.close(q, std::move(seeds));
  return q.size() - ech.rank();
}

Ideal ideal_colon(const Ideal& i, const Polynomial& g) {
  const Ring& ring = *i.ring();
  const PolyRing& R = ring.poly_ring();
  if (i.contains(g)) return Ideal::unit(i.ring());
  if (g.is_monomial() && is_monomial_basis(i.groebner())) {
    std::vector<Monomial> ms;
    for (const Polynomial& x : i.groebner().elements()) {
      const Monomial& m = x.lead_monomial();
      ms.push_back(m / gcd(m, g.lead_monomial()));
    }
    return Ideal(i.ring(), minimal_monomials(R, std::move(ms)));
  }
  if (auto k = kernel_colon(i, {g})) return *k;
  const PolyRing& E = ring.elimination_ring();
  std::vector<Polynomial> base;
  for (const Polynomial& b : i.groebner().elements()) base.push_back(lift(E, b, 1));
  Polynomial h = E.sub(lift(E, g, 0), lift(E, g, 1));
  std::vector<Polynomial> extra{h};
  GroebnerBasis k = extend_groebner_basis(E, GroebnerBasis::trusted(E.order(), std::move(base)), extra);
  std::vector<Polynomial> gens;
  for (const Polynomial& e : k.elements()) {
    if (e.lead_monomial()[0] != 0) continue;
    std::vector<Term> terms;
    for (const Term& t : e.terms()) terms.push_back(Term{t.coef, t.mono.drop_variable(0)});
    gens.push_back(R.divide_exact(R.from_terms(std::move(terms)), g));
  }
  return Ideal(i.ring(), std::move(gens));
}

Ideal ideal_colon(const Ideal& i, const Ideal& j) {
  same_ring(i, j);
  if (j.is_zero()) throw DegenerateInputError("colon by the zero ideal");
  if (!is_monomial_basis(i.groebner()) || !is_monomial_basis(j.groebner()))
    if (auto k = kernel_colon(i, j.basis_generators())) return *k;
  std::optional<Ideal> acc;
  for (const Polynomial& g : j.basis_generators()) {
    Ideal c = ideal_colon(i, g);
    if (c.is_unit()) continue;
    acc = acc ? ideal_intersect(*acc, c) : c;
  }
  return acc ? *acc : Ideal::unit(i.ring());
}

bool is_m_primary(const Ideal& i) {
  if (i.is_unit()) return false;
  return i.staircase().has_value() && i.nil_degree().has_value();
}

LengthValue length(const Ideal& i) {
  if (i.is_unit()) return LengthValue{0};
  auto st = i.staircase();
  if (!st) throw InfiniteLengthError("ideal " + i.to_string() + " has infinite colength");
  if (!i.nil_degree()) throw InfiniteLengthError("ideal " + i.to_string() + " is not m-primary");
  return LengthValue{st->count};
}

std::uint64_t quotient_length(const Ideal& outer, const Ideal& inner) {
  if (!outer.contains(inner)) throw PreconditionError("quotient_length: inner ideal not contained in outer");
  return length(inner).value - length(outer).value;
}

std::uint64_t mu(const Ideal& i) {
  if (i.is_unit()) return 1;
  Ideal mi = ideal_product(Ideal::maximal(i.ring()), i);
  return length(mi).value - length(i).value;
}

}  // namespace fibercone
