#include "fibercone/ring.hpp"

#include "fibercone/errors.hpp"

namespace fibercone {

namespace {

PolyRing make_elimination_ring(const PolyRing& base) {
  std::vector<std::string> names;
  names.push_back("_t");
  for (const auto& v : base.variables()) names.push_back(v);
  return PolyRing(base.field(), std::move(names), MonomialOrder::block(1));
}

int dimension_from_leads(const std::vector<Monomial>& leads, std::size_t n) {
  if (leads.size() == 1 && leads[0].is_one()) return -1;
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    int size = __builtin_popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (const Monomial& l : leads)
      if ((l.support() & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

}  // namespace

Ring::Ring(Token, PolyRing poly, std::vector<Polynomial> defining)
    : poly_(std::move(poly)), defining_(std::move(defining)), elim_(make_elimination_ring(poly_)) {
  if (poly_.num_vars() == 0) throw StructuralError("ring needs at least one variable");
  if (poly_.num_vars() + 1 > kMaxVariables)
    throw StructuralError("at most " + std::to_string(kMaxVariables - 1) + " variables supported");
  for (const Polynomial& q : defining_)
    if (CoefField::is_zero(q.constant_term()) == false)
      throw StructuralError("defining polynomial " + poly_.to_string(q) +
                            " has a nonzero constant term");
  defining_gb_ = groebner_basis(poly_, defining_);
  dim_ = krull_dim(*this);
}

std::shared_ptr<const Ring> Ring::create(PolyRing poly, std::vector<Polynomial> defining) {
  return std::make_shared<const Ring>(Token{}, std::move(poly), std::move(defining));
}

std::shared_ptr<const Ring> Ring::create(CoefField field, std::vector<std::string> variables,
                                         const std::vector<std::string>& defining) {
  PolyRing poly(field, std::move(variables));
  std::vector<Polynomial> q;
  for (const auto& s : defining) q.push_back(poly.parse(s));
  return create(std::move(poly), std::move(q));
}

int krull_dim(const Ring& ring) {
  return dimension_from_leads(ring.defining_basis().lead_monomials(), ring.num_vars());
}

std::string Ring::to_string() const {
  std::string s = field().name() + "[";
  for (std::size_t i = 0; i < num_vars(); ++i) s += (i ? "," : "") + variables()[i];
  s += "]";
  if (!defining_.empty()) {
    s += "/(";
    for (std::size_t i = 0; i < defining_.size(); ++i)
      s += (i ? ", " : "") + poly_.to_string(defining_[i]);
    s += ")";
  }
  return s;
}

}  // namespace fibercone
