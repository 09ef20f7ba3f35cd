#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("grevlex breaks degree ties on the last variable") {
  MonomialOrder o = MonomialOrder::grevlex();
  CHECK(o.compare(Monomial{2, 1}, Monomial{1, 2}) == std::strong_ordering::greater);
  CHECK(o.compare(Monomial{1, 2}, Monomial{2, 1}) == std::strong_ordering::less);
  CHECK(o.compare(Monomial{0, 3}, Monomial{2, 0}) == std::strong_ordering::greater);
  // tie on z; y decides, and the smaller y exponent wins
  CHECK(o.compare(Monomial{1, 1, 1}, Monomial{2, 0, 1}) == std::strong_ordering::less);
}

TEST_CASE("every order is reflexive") {
  Monomial m{3, 0, 2};
  for (auto o : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(1)})
    CHECK(o.compare(m, m) == std::strong_ordering::equal);
}

TEST_CASE("lex ignores degree") {
  CHECK(MonomialOrder::lex().compare(Monomial{0, 5}, Monomial{1, 0}) == std::strong_ordering::less);
}

TEST_CASE("block order eliminates the leading block") {
  MonomialOrder o = MonomialOrder::block(1);
  CHECK(o.compare(Monomial{1, 0, 0}, Monomial{0, 5, 5}) == std::strong_ordering::greater);
  CHECK(o.compare(Monomial{0, 2, 1}, Monomial{0, 1, 2}) == std::strong_ordering::greater);
  CHECK_THROWS_AS(o.compare(Monomial{1, 0}, Monomial{1, 0, 0}), StructuralError);
}

TEST_CASE("monomial arithmetic") {
  Monomial a{2, 1, 0}, b{1, 3, 1};
  CHECK(a * b == Monomial{3, 4, 1});
  CHECK(lcm(a, b) == Monomial{2, 3, 1});
  CHECK(gcd(a, b) == Monomial{1, 1, 0});
  CHECK(Monomial{1, 1, 0}.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK((a * b) / a == b);
  CHECK(a.degree() == 3);
  CHECK(Monomial{0, 1}.coprime(Monomial{3, 0}));
}

TEST_CASE("polynomial products") {
  PolyRing R(CoefField::rationals(), {"x", "y"});
  CHECK(R.mul(R.parse("x + y"), R.parse("x - y")) == R.parse("x^2 - y^2"));
  CHECK(R.mul(R.parse("3*x*y - 7"), R.zero()).is_zero());
  CHECK(R.pow(R.parse("x + y"), 3) == R.parse("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
  CHECK(R.divide_exact(R.parse("x^2 - y^2"), R.parse("x + y")) == R.parse("x - y"));
  CHECK_THROWS(R.divide_exact(R.parse("x^2 + y^2"), R.parse("x + y")));
}

TEST_CASE("arithmetic over a prime field") {
  PolyRing R(CoefField::prime(5), {"x"});
  CHECK(R.mul(R.parse("x + 2"), R.parse("x + 3")) == R.parse("x^2 + 1"));
  CHECK(R.parse("5*x + 1") == R.one());
  CHECK(R.to_string(R.parse("1/2*x")) == "3*x");
}

TEST_CASE("prime field scalars") {
  CoefField f = CoefField::prime(10007);
  CHECK(f.mul(f.inv(f.from_integer(2)), f.from_integer(2)) == 1);
  CHECK(f.from_integer(-1) == 10006);
  CHECK(f.from_rational(mpq_class(1, 2)) == 5004);
  CHECK_THROWS_AS(f.from_rational(mpq_class(1, 10007)), StructuralError);
  CHECK_THROWS_AS(CoefField::prime(91), StructuralError);
  CHECK_THROWS_AS(CoefField::prime(std::uint64_t{1} << 31), StructuralError);
  CHECK(is_prime_number(2147483647));
  CHECK_FALSE(is_prime_number(1));
  CHECK_FALSE(is_prime_number(10001));
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-3/6") == mpq_class(-1, 2));
  CHECK(parse_rational("12") == 12);
  CHECK(rational_to_string(parse_rational("-4/6")) == "-2/3");
  CHECK_THROWS_AS(parse_rational("1/0"), StructuralError);
  CHECK_THROWS_AS(parse_rational("x"), StructuralError);
}

TEST_CASE("polynomials round-trip through text") {
  PolyRing R(CoefField::rationals(), {"x", "y", "z"});
  for (const char* s : {"3*x^2*y - 1/2*y^3 + z", "-x", "x*y*z - 1", "0", "7"}) {
    Polynomial p = R.parse(s);
    CHECK(R.parse(R.to_string(p)) == p);
  }
  Polynomial p = R.parse("y + x^2 + x*z");
  CHECK(R.to_string(p.lead_monomial()) == "x^2");
  CHECK(p.is_homogeneous() == false);
  CHECK(R.parse("x*y + z^2").is_homogeneous());
  CHECK(R.parse("x + 2 - x").is_constant());
}

TEST_CASE("reordering keeps the polynomial") {
  PolyRing g(CoefField::rationals(), {"x", "y"});
  PolyRing l = g.with_order(MonomialOrder::lex());
  Polynomial p = g.parse("y^3 + x");
  CHECK(g.to_string(p.lead_monomial()) == "y^3");
  Polynomial q = l.reorder(p);
  CHECK(l.to_string(q.lead_monomial()) == "x");
  CHECK(g.reorder(q) == p);
}
