#include <doctest.h>

#include <random>

#include "vgit/errors.hpp"
#include "vgit/rational.hpp"

using vgit::Rational;

TEST_CASE("rationals reduce to lowest terms with positive denominator") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(6, 3).str() == "2");
}

TEST_CASE("parsing accepts p/q and p, nothing else") {
  CHECK(Rational::parse("4/9") == Rational(4, 9));
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("+2/4") == Rational(1, 2));
  CHECK_THROWS_AS(Rational::parse("0.5"), vgit::ValidationError);
  CHECK_THROWS_AS(Rational::parse("1/0"), vgit::ValidationError);
  CHECK_THROWS_AS(Rational::parse(""), vgit::ValidationError);
  CHECK_THROWS_AS(Rational::parse("a/b"), vgit::ValidationError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), vgit::ValidationError);
}

TEST_CASE("floor and ceil are exact on reduced fractions") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(6).floor() == 6);
  CHECK(Rational(6).ceil() == 6);
  CHECK(Rational(94748, 94829).ceil() == 1);
}

TEST_CASE("arithmetic identities on random operands") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-300, 300), den(1, 200);
  for (int i = 0; i < 2000; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (b != Rational(0)) CHECK((a / b) * b == a);
    // floor/ceil bracket the value
    Rational fl(a.floor()), ce(a.ceil());
    CHECK(fl <= a);
    CHECK(a <= ce);
    CHECK(ce - fl <= Rational(1));
    CHECK((a.is_integer() ? fl == ce : ce - fl == Rational(1)));
    // round trip through the string form
    CHECK(Rational::parse(a.str()) == a);
  }
}
