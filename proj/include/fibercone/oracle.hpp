#pragma once

// Independent verification engine.  Shares no code with the Groebner engine:
// monomial ideals are handled by staircase/lcm combinatorics, and general
// ideals containing a known m-primary monomial ideal M are subspaces of
// Q[x]/M, decided by exact Gaussian elimination.  Rationals only.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fibercone::oracle {

using Exponent = std::vector<int>;
using OPoly = std::map<Exponent, mpq_class>;  // zero coefficients never stored

int degree(const Exponent& e);
bool divides(const Exponent& a, const Exponent& b);
Exponent lcm(const Exponent& a, const Exponent& b);
Exponent add(const Exponent& a, const Exponent& b);

OPoly poly_mul(const OPoly& a, const OPoly& b);
OPoly poly_add(const OPoly& a, const OPoly& b);
OPoly monomial_poly(const Exponent& e);
// Reads "3*x^2*y - 1/2*z" style text over the given variable names.
OPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

class MonomialIdeal {
 public:
  MonomialIdeal(int nvars, std::vector<Exponent> gens);  // minimalized
  static MonomialIdeal maximal(int nvars);
  static MonomialIdeal unit(int nvars);

  int nvars() const { return n_; }
  const std::vector<Exponent>& gens() const { return gens_; }
  bool contains(const Exponent& m) const;
  bool contains(const MonomialIdeal& o) const;
  bool is_primary() const;  // every variable has a pure power
  // Standard monomials; nullopt when infinite or more than cap.
  std::optional<std::vector<Exponent>> staircase(std::size_t cap = 200000) const;
  std::optional<std::uint64_t> colength() const;
  std::size_t mu() const { return gens_.size(); }
  // smallest t with m^t inside the ideal
  std::optional<int> nil_degree() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens_ == b.gens_; }

 private:
  int n_;
  std::vector<Exponent> gens_;
};

MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_power(const MonomialIdeal& a, int e);
MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_colon(const MonomialIdeal& a, const Exponent& m);
MonomialIdeal mono_colon(const MonomialIdeal& a, const MonomialIdeal& b);

// Sparse vector over the standard monomials of the base, by column.
using SparseVec = std::map<std::size_t, mpq_class>;

// Rows with distinct leading columns, leading entry 1.
class Echelon {
 public:
  void reduce(SparseVec& v) const;
  bool insert(SparseVec v);  // false when v was already in the span
  std::size_t rank() const { return rows_.size(); }
  const std::vector<SparseVec>& rows() const { return rows_; }
  // rows whose leading column is at least `from`, shifted left by `from`
  std::vector<SparseVec> tail_rows(std::size_t from) const;

 private:
  std::vector<SparseVec> rows_;
  std::map<std::size_t, std::size_t> pivot_row_;
};

// Ideal M + (polys) of Q[x], M an m-primary monomial ideal, stored as the
// subspace it spans in Q[x]/M.  Monomial polys are folded into M.
class SubspaceIdeal {
 public:
  SubspaceIdeal(MonomialIdeal base, const std::vector<OPoly>& polys);

  const MonomialIdeal& base() const { return base_; }
  std::uint64_t colength() const;  // lambda(Q[x]/I)
  bool contains(const OPoly& f) const;
  // Same ideal over a smaller base monomial ideal.
  SubspaceIdeal rebase(const MonomialIdeal& smaller) const;
  // Generators: base generators plus the stored basis vectors.
  std::vector<OPoly> generators() const;

  friend SubspaceIdeal sub_sum(const SubspaceIdeal& a, const SubspaceIdeal& b);
  friend SubspaceIdeal sub_intersect(const SubspaceIdeal& a, const SubspaceIdeal& b);
  friend SubspaceIdeal sub_colon(const SubspaceIdeal& a, const OPoly& g);
  friend bool operator==(const SubspaceIdeal& a, const SubspaceIdeal& b);

 private:
  SubspaceIdeal(MonomialIdeal base, std::vector<Exponent> stair, std::vector<SparseVec> basis);
  SparseVec reduce_mod_base(const OPoly& f) const;

  MonomialIdeal base_;
  std::vector<Exponent> stair_;
  std::map<Exponent, std::size_t> index_;
  Echelon basis_;
};

SubspaceIdeal sub_sum(const SubspaceIdeal& a, const SubspaceIdeal& b);
SubspaceIdeal sub_intersect(const SubspaceIdeal& a, const SubspaceIdeal& b);
SubspaceIdeal sub_colon(const SubspaceIdeal& a, const OPoly& g);
SubspaceIdeal sub_colon(const SubspaceIdeal& a, const std::vector<OPoly>& gens);
bool operator==(const SubspaceIdeal& a, const SubspaceIdeal& b);

}  // namespace fibercone::oracle
