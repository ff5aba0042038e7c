#include <doctest.h>

#include <cmath>

#include "limitlab/error.hpp"
#include "limitlab/rational.hpp"

using namespace limitlab;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
  CHECK(Rational(BigInt(2), BigInt(4)).str() == "1/2");
  CHECK(Rational(BigInt(-2), BigInt(4)).str() == "-1/2");
  CHECK(Rational(BigInt(2), BigInt(-4)).str() == "-1/2");
  CHECK(Rational(BigInt(-2), BigInt(-4)).str() == "1/2");
  CHECK(Rational(BigInt(0), BigInt(-7)).str() == "0/1");
  CHECK(Rational(42).str() == "42/1");
  CHECK_THROWS_WITH_AS(Rational(BigInt(1), BigInt(0)), "rational with zero denominator",
                       Error);
}

TEST_CASE("parsing accepts num/den and plain integers") {
  CHECK(Rational::parse("2/3") == Rational(BigInt(2), BigInt(3)));
  CHECK(Rational::parse("-6/4").str() == "-3/2");
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("0/9").str() == "0/1");
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("a/b"), Error);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), Error);
  for (const char* code : {"", "1/0", "x"}) {
    try {
      Rational::parse(code);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == "parse-error");
    }
  }
}

TEST_CASE("arithmetic is exact") {
  const Rational half(BigInt(1), BigInt(2)), third(BigInt(1), BigInt(3));
  CHECK((half + third).str() == "5/6");
  CHECK((half - third).str() == "1/6");
  CHECK((half * third).str() == "1/6");
  CHECK((half / third).str() == "3/2");
  CHECK((-half).str() == "-1/2");
  CHECK(half > third);
  CHECK(third < half);
  CHECK(half <= half);
  CHECK(half != third);
  CHECK(Rational(0).is_zero());
  CHECK(Rational(-3).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK_THROWS_AS(half / Rational(0), Error);
}

TEST_CASE("combinatorial helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(8, 3) == 56);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(5, 0) == 1);
  CHECK(falling_factorial(3, 5) == 0);
  CHECK(falling_factorial(20, 20) == factorial(20));
}

TEST_CASE("log2 survives values far outside double range") {
  CHECK(Rational(BigInt(1), BigInt(1) << 40).log2() == doctest::Approx(-40.0));
  CHECK(Rational(BigInt(1) << 100).log2() == doctest::Approx(100.0));
  // 2^-2000 underflows any double, but its log2 must still be right.
  const Rational tiny(BigInt(1), BigInt(1) << 2000);
  CHECK(tiny.to_double() == 0.0);
  CHECK(tiny.log2() == doctest::Approx(-2000.0));
  CHECK(Rational(BigInt(3), BigInt(4)).log2() ==
        doctest::Approx(std::log2(0.75)));
  CHECK_THROWS_AS(Rational(0).log2(), Error);
  CHECK_THROWS_AS(Rational(-2).log2(), Error);
}

TEST_CASE("to_double matches small fractions") {
  CHECK(Rational(BigInt(2), BigInt(3)).to_double() ==
        doctest::Approx(2.0 / 3.0));
  CHECK(Rational(-7).to_double() == -7.0);
}
