#include "fibercone/groebner.hpp"

#include "fibercone/errors.hpp"

#include <algorithm>
#include <tuple>

namespace fibercone {

bool GroebnerBasis::is_homogeneous() const noexcept {
  for (const Polynomial& g : elems_)
    if (!g.is_homogeneous()) return false;
  return true;
}

std::vector<Monomial> GroebnerBasis::lead_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elems_.size());
  for (const Polynomial& g : elems_) out.push_back(g.lead_monomial());
  return out;
}

namespace {

// Divisor lookup over a set of monic polynomials; single-term reducers are
// tried first since reducing by them only deletes a term.
class ReducerSet {
 public:
  void add(const Polynomial* p) { (p->is_monomial() ? monos_ : polys_).push_back(p); }
  void remove(const Polynomial* p) {
    auto& v = p->is_monomial() ? monos_ : polys_;
    v.erase(std::find(v.begin(), v.end(), p));
  }
  bool monomial_divides(const Monomial& m) const {
    for (const Polynomial* g : monos_)
      if (g->lead_monomial().divides(m)) return true;
    return false;
  }
  const Polynomial* find(const Monomial& m) const {
    for (const Polynomial* g : polys_)
      if (g->lead_monomial().divides(m)) return g;
    return nullptr;
  }

 private:
  std::vector<const Polynomial*> monos_;
  std::vector<const Polynomial*> polys_;
};

// Full reduction of p.  Terms of degree >= trunc are dropped.
Polynomial reduce_full(const PolyRing& ring, Polynomial p, const ReducerSet& rs,
                       std::optional<Truncation> trunc) {
  const CoefField& field = ring.field();
  const MonomialOrder& order = ring.order();
  std::vector<Term> work = std::move(p).take_terms();
  std::vector<Term> out, scratch;
  std::size_t head = 0;
  while (head < work.size()) {
    Term& t = work[head];
    if ((trunc && trunc->drops(t.mono)) || rs.monomial_divides(t.mono)) {
      ++head;
      continue;
    }
    const Polynomial* g = rs.find(t.mono);
    if (!g) {
      out.push_back(std::move(t));
      ++head;
      continue;
    }
    const Monomial shift = t.mono / g->lead_monomial();
    const Scalar c = t.coef;
    const auto& gt = g->terms();
    scratch.clear();
    scratch.reserve(work.size() - head + gt.size());
    std::size_t i = head + 1, j = 1;
    while (i < work.size() || j < gt.size()) {
      if (j == gt.size()) {
        scratch.push_back(std::move(work[i++]));
        continue;
      }
      Monomial qm = gt[j].mono * shift;
      if (trunc && trunc->drops(qm)) {
        ++j;
        continue;
      }
      if (i == work.size()) {
        scratch.push_back(Term{field.neg(field.mul(c, gt[j].coef)), qm});
        ++j;
        continue;
      }
      auto cmp = order.compare(work[i].mono, qm);
      if (cmp > 0) {
        scratch.push_back(std::move(work[i++]));
      } else if (cmp < 0) {
        scratch.push_back(Term{field.neg(field.mul(c, gt[j].coef)), qm});
        ++j;
      } else {
        Scalar v = field.sub(work[i].coef, field.mul(c, gt[j].coef));
        if (!CoefField::is_zero(v)) scratch.push_back(Term{std::move(v), qm});
        ++i;
        ++j;
      }
    }
    std::swap(work, scratch);
    head = 0;
  }
  return ring.from_sorted_terms(std::move(out));
}

}  // namespace

class GroebnerBuilder {
 public:
  GroebnerBuilder(const PolyRing& ring, std::optional<Truncation> trunc, bool complete = false)
      : ring_(ring), trunc_(trunc), complete_(complete) {}

  void add_known(const Polynomial& g) {
    if (g.is_constant()) unit_ = true;
    push_entry(ring_.make_monic(g), g.total_degree());
  }

  GroebnerBasis run(std::span<const Polynomial> gens) {
    std::vector<const Polynomial*> inputs;
    for (const Polynomial& g : gens)
      if (!g.is_zero()) inputs.push_back(&g);
    std::stable_sort(inputs.begin(), inputs.end(), [&](const Polynomial* a, const Polynomial* b) {
      if (a->total_degree() != b->total_degree()) return a->total_degree() < b->total_degree();
      return ring_.compare(a->lead_monomial(), b->lead_monomial()) < 0;
    });
    std::size_t next_input = 0;
    while (!unit_ && (next_input < inputs.size() || !pairs_.empty())) {
      bool take_input = next_input < inputs.size() &&
                        (pairs_.empty() || inputs[next_input]->total_degree() <= pairs_.back().sugar);
      Polynomial h;
      unsigned sugar;
      if (take_input) {
        const Polynomial* in = inputs[next_input++];
        sugar = in->total_degree();
        h = reduce_full(ring_, ring_.reorder(*in), reducers_, trunc_);
      } else {
        Pair pr = pairs_.back();
        pairs_.pop_back();
        sugar = pr.sugar;
        h = reduce_full(ring_, spoly(pr), reducers_, trunc_);
      }
      if (h.is_zero()) continue;
      insert(ring_.make_monic(h), sugar);
    }
    return finish();
  }

 private:
  struct Entry {
    Polynomial poly;
    unsigned sugar;
    bool homogeneous;
    bool active;
  };
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
  };

  // Sort key: smaller sugar first, then smaller lcm; the vector is kept in
  // decreasing priority so back() is the next pair.
  bool before(const Pair& a, const Pair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    auto c = ring_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  }

  const Monomial& lead(std::size_t i) const { return entries_[i].poly.lead_monomial(); }

  void push_entry(Polynomial p, unsigned sugar) {
    bool homog = p.is_homogeneous();
    entries_.push_back(Entry{std::move(p), sugar, homog, true});
  }

  void activate_reducers() {
    // Entries live in a vector that may reallocate; rebuild pointer set.
    reducers_ = ReducerSet();
    for (const Entry& e : entries_)
      if (e.active) reducers_.add(&e.poly);
  }

  Polynomial spoly(const Pair& pr) const {
    const Polynomial& f = entries_[pr.i].poly;
    const Polynomial& g = entries_[pr.j].poly;
    Polynomial a = ring_.mul_term(f, Scalar(1), pr.lcm / f.lead_monomial());
    return ring_.sub_mul_term(a, Scalar(1), pr.lcm / g.lead_monomial(), g);
  }

  void insert(Polynomial h, unsigned sugar) {
    if (h.is_constant()) {
      unit_ = true;
      return;
    }
    const std::size_t hi = entries_.size();
    std::size_t cap = entries_.capacity();
    push_entry(std::move(h), sugar);
    const bool moved = entries_.capacity() != cap;
    if (moved) activate_reducers();
    update(hi);
    if (!moved) reducers_.add(&entries_[hi].poly);
  }

  void update(std::size_t h) {
    const Monomial lh = lead(h);
    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
      bool gone;
    };
    std::vector<Cand> cands;
    for (std::size_t g = 0; g < h; ++g) {
      if (!entries_[g].active) continue;
      cands.push_back(Cand{g, lcm(lh, lead(g)), lh.coprime(lead(g)), false});
    }
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (cands[i].coprime) continue;
      for (std::size_t k = 0; k < cands.size(); ++k) {
        if (k == i || cands[k].gone) continue;
        if (cands[k].lcm.divides(cands[i].lcm)) {
          cands[i].gone = true;
          break;
        }
      }
    }
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (const Pair& p : pairs_) {
      if (lh.divides(p.lcm) && lcm(lead(p.i), lh) != p.lcm && lcm(lead(p.j), lh) != p.lcm) continue;
      kept.push_back(p);
    }
    std::vector<Pair> fresh;
    for (const Cand& c : cands) {
      if (c.gone || c.coprime) continue;
      const Entry& eg = entries_[c.g];
      const Entry& eh = entries_[h];
      if (trunc_ && trunc_->skip == 0 && eg.homogeneous && eh.homogeneous &&
          c.lcm.degree() >= trunc_->degree)
        continue;
      unsigned s1 = eh.sugar + c.lcm.degree() - lh.degree();
      unsigned s2 = eg.sugar + c.lcm.degree() - lead(c.g).degree();
      fresh.push_back(Pair{c.g, h, c.lcm, std::max(s1, s2)});
    }
    auto desc = [&](const Pair& a, const Pair& b) { return before(b, a); };
    std::sort(fresh.begin(), fresh.end(), desc);
    pairs_.clear();
    std::merge(kept.begin(), kept.end(), fresh.begin(), fresh.end(), std::back_inserter(pairs_), desc);
    for (std::size_t g = 0; g < h; ++g) {
      if (entries_[g].active && lh.divides(lead(g))) {
        entries_[g].active = false;
        reducers_.remove(&entries_[g].poly);
      }
    }
  }

  GroebnerBasis finish() {
    GroebnerBasis gb;
    gb.order_ = ring_.order();
    gb.truncation_ = trunc_;
    if (unit_) {
      gb.elems_.push_back(ring_.one());
      return gb;
    }
    std::vector<std::size_t> act;
    for (std::size_t i = 0; i < entries_.size(); ++i)
      if (entries_[i].active) act.push_back(i);
    std::vector<Polynomial> out;
    out.reserve(act.size());
    for (std::size_t i : act) {
      const Polynomial& g = entries_[i].poly;
      std::vector<Term> tail(g.terms().begin() + 1, g.terms().end());
      Polynomial t = reduce_full(ring_, ring_.from_sorted_terms(std::move(tail)), reducers_, trunc_);
      std::vector<Term> terms;
      terms.reserve(t.size() + 1);
      terms.push_back(g.lead());
      for (const Term& x : t.terms()) terms.push_back(x);
      out.push_back(ring_.from_sorted_terms(std::move(terms)));
    }
    if (complete_ && trunc_) append_missing_monomials(out);
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_.compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    gb.elems_ = std::move(out);
    return gb;
  }

  void append_missing_monomials(std::vector<Polynomial>& out) {
    const std::size_t n = ring_.num_vars();
    const unsigned N = trunc_->degree;
    std::vector<Monomial> leads;
    for (const Polynomial& g : out) leads.push_back(g.lead_monomial());
    std::vector<unsigned> e(n, 0);
    // enumerate compositions of N into n parts
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
      if (i + 1 == n) {
        e[i] = left;
        Monomial m = Monomial::from_exponents(e);
        for (const Monomial& l : leads)
          if (l.divides(m)) return;
        out.push_back(ring_.monomial(m));
        return;
      }
      for (unsigned k = 0; k <= left; ++k) {
        e[i] = k;
        self(self, i + 1, left - k);
      }
    };
    if (n > 0) rec(rec, 0, N);
  }

  const PolyRing& ring_;
  std::optional<Truncation> trunc_;
  bool complete_ = false;
  std::vector<Entry> entries_;
  std::vector<Pair> pairs_;
  ReducerSet reducers_;
  bool unit_ = false;

  friend GroebnerBasis extend_groebner_basis(const PolyRing&, const GroebnerBasis&,
                                             std::span<const Polynomial>);
};

GroebnerBasis groebner_basis(const PolyRing& ring, std::span<const Polynomial> gens) {
  GroebnerBuilder b(ring, std::nullopt);
  return b.run(gens);
}

GroebnerBasis homogeneous_groebner_basis(const PolyRing& ring, std::span<const Polynomial> gens,
                                         unsigned nil) {
  for (const Polynomial& g : gens)
    if (!g.is_homogeneous()) throw StructuralError("homogeneous basis requested for inhomogeneous input");
  GroebnerBuilder b(ring, Truncation{nil, 0}, true);
  return b.run(gens);
}

GroebnerBasis extend_groebner_basis(const PolyRing& ring, const GroebnerBasis& base,
                                    std::span<const Polynomial> gens) {
  if (!(base.order() == ring.order()))
    throw StructuralError("base basis computed under a different order");
  if (base.is_unit()) return base;
  GroebnerBuilder b(ring, base.truncation());
  b.entries_.reserve(base.size() + gens.size() + 16);
  for (const Polynomial& g : base.elements()) b.add_known(g);
  b.activate_reducers();
  return b.run(gens);
}

Polynomial normal_form(const PolyRing& ring, const Polynomial& p, const GroebnerBasis& gb) {
  ReducerSet rs;
  for (const Polynomial& g : gb.elements()) rs.add(&g);
  return reduce_full(ring, p, rs, gb.truncation());
}

bool reduces_to_zero(const PolyRing& ring, const Polynomial& p, const GroebnerBasis& gb) {
  return normal_form(ring, p, gb).is_zero();
}

}  // namespace fibercone
