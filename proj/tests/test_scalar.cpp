#include <catch_amalgamated.hpp>

#include "cartankit/scalar.hpp"

using namespace cartankit;

TEST_CASE("rational arithmetic stays reduced", "[scalar]") {
  Rational a(6, 4);
  REQUIRE(a.num() == 3);
  REQUIRE(a.den() == 2);
  REQUIRE((a + Rational(1, 2)) == Rational(2));
  REQUIRE((a * Rational(2, 3)) == Rational(1));
  REQUIRE((Rational(1) / Rational(-2)) == Rational(-1, 2));
  REQUIRE_THROWS_AS(Rational(1, 0), ArithmeticError);
  REQUIRE(Rational(-4, -8) == Rational(1, 2));
}

TEST_CASE("gaussian rationals", "[scalar]") {
  GaussianRational i = GaussianRational::i();
  REQUIRE(i * i == GaussianRational(-1));
  GaussianRational z(Rational(1, 2), Rational(-3));
  REQUIRE(z * z.conj() == GaussianRational(Rational(37, 4)));
  REQUIRE((z / z) == GaussianRational(1));
  REQUIRE(GaussianRational(Rational(0)).str() == "0");
  REQUIRE(i.str() == "i");
  REQUIRE((-i).str() == "-i");
}

TEST_CASE("scalar polynomials in formal parameters", "[scalar]") {
  Scalar lam = Scalar::parameter("lambda");
  Scalar Lam = Scalar::parameter("Lambda");
  Scalar s = Scalar(2) * lam * lam - Scalar::i() * Lam;
  REQUIRE(!s.is_zero());
  REQUIRE(!s.is_constant());

  SECTION("addition merges identical monomials") {
    Scalar t = s + Scalar::i() * Lam;
    REQUIRE(t == Scalar(2) * lam * lam);
  }
  SECTION("zero scalar has no terms") {
    Scalar t = s - s;
    REQUIRE(t.is_zero());
    REQUIRE(t.terms().empty());
  }
  SECTION("substitution: contraction parameter to zero") {
    Scalar t = s.substituted("lambda", Scalar::zero());
    REQUIRE(t == -(Scalar::i() * Lam));
  }
  SECTION("substitution by a polynomial value") {
    // Lambda -> 3 lambda^2 turns the MacDowell-Mansouri combination into a
    // pure lambda polynomial
    Scalar t = s.substituted("Lambda", Scalar(3) * lam * lam);
    REQUIRE(t == (Scalar(2) - Scalar(3) * Scalar::i()) * lam * lam);
  }
  SECTION("constant extraction fails on parameters") {
    REQUIRE_THROWS_AS(s.constant_value(), ArithmeticError);
    REQUIRE(Scalar::rational(3, 4).constant_value() == GaussianRational(Rational(3, 4)));
  }
}
