#include "doctest.h"
#include "support.hpp"

using namespace testing;

namespace {

const std::vector<std::string> xy{"x", "y"};

oracle::SubspaceIdeal sub(std::string_view base, const std::vector<std::string>& polys) {
  std::vector<oracle::OPoly> p;
  for (const auto& s : polys) p.push_back(oracle::parse_poly(s, xy));
  return oracle::SubspaceIdeal(mono(base, xy), p);
}

std::string join(const std::vector<std::string>& v, const std::string& extra) {
  std::string s = extra;
  for (const auto& p : v) s += ", " + p;
  return s;
}

Polynomial from_oracle(const PolyRing& P, const oracle::OPoly& f) {
  std::vector<Term> t;
  for (const auto& [e, c] : f)
    t.push_back({c, Monomial{static_cast<unsigned>(e[0]), static_cast<unsigned>(e[1])}});
  return P.from_terms(std::move(t));
}

}  // namespace

TEST_CASE("products") {
  auto R = plane();
  CHECK(ideal(R, "x, y") * ideal(R, "x, y") == ideal(R, "x^2, x*y, y^2"));
  Ideal i = ideal(R, "x^2 + y^3, x*y");
  CHECK(i * Ideal::unit(R) == i);
  CHECK(ideal(R, "x^2, y^2") * ideal(R, "x^2, y^2") == ideal(R, "x^4, x^2*y^2, y^4"));
  CHECK(ideal_power(ideal(R, "x, y"), 3) == ideal(R, "x^3, x^2*y, x*y^2, y^3"));
  CHECK(ideal_power(i, 0).is_unit());
}

TEST_CASE("intersections") {
  auto R = plane();
  CHECK(ideal_intersect(ideal(R, "x"), ideal(R, "y")) == ideal(R, "x*y"));
  Ideal i = ideal(R, "x^2 - y, x*y^2");
  CHECK(ideal_intersect(i, i) == i);
  // lcm oracle: lcm(xy, x^2) = x^2 y, lcm(xy, y^2) = x y^2
  auto o = oracle::mono_intersect(mono("x*y", xy), mono("x^2, y^2", xy));
  CHECK(o == mono("x^2*y, x*y^2", xy));
  CHECK(ideal_intersect(ideal(R, "x*y"), ideal(R, "x^2, y^2")) == ideal(R, "x^2*y, x*y^2"));
}

TEST_CASE("colons") {
  auto R = plane();
  CHECK(ideal_colon(ideal(R, "x^2, y^2"), ideal(R, "x, y")) == ideal(R, "x^2, y^2, x*y"));
  Ideal i = ideal(R, "x^3, y^2 - x*y");
  CHECK(ideal_colon(i, Ideal::unit(R)) == i);
  auto C = cusp();
  CHECK(ideal_colon(ideal(C, "x"), ideal(C, "y")) == ideal(C, "x, y"));
  CHECK(ideal_colon(ideal(R, "x^2, y^2"), R->poly_ring().parse("x")) == ideal(R, "x, y^2"));
  CHECK_THROWS_AS(ideal_colon(ideal(R, "x"), Ideal::zero(R)), DegenerateInputError);
  CHECK_THROWS_AS(ideal_colon(ideal(C, "x"), ideal(C, "y^2 - x^3")), DegenerateInputError);
  // colon by a single element that vanishes in A is all of A
  CHECK(ideal_colon(ideal(C, "x"), C->poly_ring().parse("y^2 - x^3")).is_unit());
}

TEST_CASE("lengths") {
  auto R = plane();
  CHECK(length(ideal(R, "x, y")).value == 1);
  CHECK(length(ideal(R, "x^2, y^2")).value == 4);
  CHECK(length(ideal(R, "x^3, x^2*y, y^3")).value == 7);
  CHECK(*mono("x^3, x^2*y, y^3", xy).colength() == 7);
  CHECK(length(Ideal::unit(R)).value == 0);
  CHECK(length(ideal(cusp(), "x")).value == 2);
  CHECK_THROWS_AS(length(ideal(R, "x")), InfiniteLengthError);
  CHECK(quotient_length(ideal(R, "x, y"), ideal(R, "x^2, y^2")) == 3);
}

TEST_CASE("minimal numbers of generators") {
  auto R = plane();
  CHECK(mu(ideal(R, "x, y")) == 2);
  CHECK(mu(ideal(R, "x^2, x*y, y^2")) == 3);
  CHECK(mu(Ideal::unit(R)) == 1);
  CHECK(mu(ideal(R, "x^2, y^2, x^2 + y^2, x^3")) == 2);
  CHECK(minimal_generators(ideal(R, "x^2, y^2, x^2 + y^2, x^3")).size() == 2);
  CHECK(mu(ideal(cusp(), "x, y")) == 2);
}

TEST_CASE("primary to the maximal ideal") {
  CHECK(is_m_primary(ideal(plane(), "x^2, y^2")));
  CHECK_FALSE(is_m_primary(ideal(plane(), "x")));
  CHECK_FALSE(is_m_primary(Ideal::unit(plane())));
  CHECK(is_m_primary(ideal(cusp(), "x, y^2")));
  CHECK(is_m_primary(ideal(cusp(), "x")));
}

TEST_CASE("Krull dimension") {
  CHECK(krull_dim(*plane()) == 2);
  CHECK(krull_dim(*cusp()) == 1);
  CHECK(krull_dim(*ring({"x"}, {"x^3"})) == 0);
  CHECK(krull_dim(*ring({"x", "y", "z"}, {"x*y", "x*z"})) == 2);
  CHECK(plane()->dimension() == 2);
}

TEST_CASE("membership") {
  auto R = plane();
  Ideal i = ideal(R, "x^2 + y^3, x*y");
  const auto& P = R->poly_ring();
  CHECK(i.contains(P.parse("x^3")));
  CHECK(i.contains(P.parse("y^4")));
  CHECK_FALSE(i.contains(P.parse("y^3")));
  CHECK(i.contains(ideal(R, "x*y^2, x^2*y")));
  CHECK_FALSE(i.contains(ideal(R, "x^2")));
}

// Non-monomial ideals against the subspace oracle over a truncating monomial base.
TEST_CASE("engine agrees with the subspace oracle") {
  auto R = plane();
  const std::string base = "x^6, x^5*y, x^4*y^2, x^3*y^3, x^2*y^4, x*y^5, y^6";
  const std::vector<std::vector<std::string>> gens{
      {"x^2 + y^3", "x*y"}, {"x^2 - 3*x*y + y^2"}, {"x^3 - y^2", "x*y^2 + 2*x^2*y"}, {"x + y^2", "y^3 - x^2*y"}};
  for (const auto& a : gens) {
    Ideal ea = ideal(R, join(a, base));
    auto oa = sub(base, a);
    CHECK(length(ea).value == oa.colength());
    for (const char* g : {"x", "y", "x + 2*y", "x*y - y^2"}) {
      Ideal c = ideal_colon(ea, R->poly_ring().parse(g));
      CHECK(length(c).value == oracle::sub_colon(oa, oracle::parse_poly(g, xy)).colength());
    }
    for (const auto& b : gens) {
      Ideal eb = ideal(R, join(b, base));
      auto ob = sub(base, b);
      CHECK(length(ea + eb).value == oracle::sub_sum(oa, ob).colength());
      CHECK(length(ideal_intersect(ea, eb)).value == oracle::sub_intersect(oa, ob).colength());
    }
  }
}

TEST_CASE("length is additive along a chain") {
  auto R = plane();
  Ideal k = ideal(R, "x^4, y^4, x^2*y - x*y^2");
  Ideal i = k + ideal(R, "x^3, x*y^2");
  REQUIRE(i.contains(k));
  CHECK(length(k).value == length(i).value + quotient_length(i, k));
  Ideal s = ideal_colon(k, Ideal::maximal(R));
  CHECK(s.contains(k));
  CHECK(ideal_colon(s, Ideal::maximal(R)).contains(s));
}

TEST_CASE("colons agree with the subspace oracle as ideals") {
  auto R = plane();
  const auto& P = R->poly_ring();
  const std::string base = "x^6, x^5*y, x^4*y^2, x^3*y^3, x^2*y^4, x*y^5, y^6";
  for (const std::vector<std::string> a : {std::vector<std::string>{"x^2 + y^3", "x*y"},
                                            {"x^3 - y^2", "x*y^2 + 2*x^2*y"}, {"x^2 - 3*x*y + y^2"}}) {
    Ideal ea = ideal(R, join(a, base));
    auto oa = sub(base, a);
    for (const char* g : {"x", "x + 2*y", "x*y - y^2"}) {
      Ideal c = ideal_colon(ea, P.parse(g));
      auto oc = oracle::sub_colon(oa, oracle::parse_poly(g, xy));
      for (const auto& h : oc.generators()) CHECK(c.contains(from_oracle(P, h)));
      for (const Polynomial& h : c.groebner().elements()) CHECK(ea.contains(P.mul(h, P.parse(g))));
    }
  }
}

TEST_CASE("colon by an ideal is the intersection of element colons") {
  auto R = ring({"x", "y", "z"});
  const auto& P = R->poly_ring();
  Ideal i = ideal(R, "x^2 + y*z, y^2 - 3*x*z, z^3, x*y*z");
  for (const char* j : {"x, y", "x + y, z^2", "x*y - z^2, y + 2*z"}) {
    Ideal by = ideal(R, j);
    Ideal expect = Ideal::unit(R);
    for (const Polynomial& g : by.generators()) expect = ideal_intersect(expect, ideal_colon(i, g));
    CHECK(ideal_colon(i, by) == expect);
  }
  CHECK(ideal_colon(i, P.parse("x^2 + y*z")).is_unit());
}

TEST_CASE("colength of a sum by linear algebra") {
  auto R = ring({"x", "y", "z"});
  Ideal i = ideal(R, "x^3, y^3, z^3, x*y*z");
  for (const char* extra : {"x + 2*y - 7*z", "x*y - z^2, 3*x + y", "x^2 + y^2 + z^2", "1/2*x*z - y^2, x - z, y + z"}) {
    auto gens = R->poly_ring().parse_list(extra);
    auto c = colength_of_sum(i, gens);
    REQUIRE(c);
    CHECK(*c == length(i + Ideal(R, gens)).value);
  }
  CHECK_FALSE(colength_of_sum(ideal(R, "x, y"), {R->poly_ring().parse("x")}));
}

TEST_CASE("nil degree is the least power of m inside the ideal") {
  auto R = plane();
  Ideal m = Ideal::maximal(R);
  Ideal j = ideal(R, "x^2 + y^3, x*y");
  for (Ideal i : {j, j * j, ideal_power(j, 3), m * j, ideal(R, "x^4, y^2 - x*y^2")}) {
    auto n = i.nil_degree();
    REQUIRE(n);
    CHECK(i.contains(ideal_power(m, *n)));
    CHECK_FALSE(i.contains(ideal_power(m, *n - 1)));
  }
}

TEST_CASE("products over a quotient ring") {
  auto C = cusp();
  CHECK(ideal(C, "x, y") * ideal(C, "x, y") == ideal(C, "x^2, x*y, y^2"));
  CHECK(ideal(C, "x, y") * ideal(C, "x, y") == ideal(C, "x^2, x*y"));
  Ideal j = ideal(C, "x");
  CHECK(length(j * ideal(C, "x, y")).value == 3);
}
