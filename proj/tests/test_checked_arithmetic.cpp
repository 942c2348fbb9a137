#include <catch2/catch_amalgamated.hpp>

#include "benesnet/checked_int.hpp"
#include "benesnet/rational.hpp"

using namespace benesnet;

TEST_CASE("Int128 basic arithmetic and printing") {
  Int128 a = 1234567890123456789ll;
  Int128 b = 987654321ll;
  CHECK((a + b).str() == "1234567891111111110");
  CHECK((a * b).str() == "1219326311248285321112635269");
  CHECK((-a).str() == "-1234567890123456789");
  CHECK(Int128(0).str() == "0");
  CHECK(Int128::pow2(100).str() == "1267650600228229401496703205376");
  CHECK((Int128(7) % Int128(3)) == Int128(1));
  CHECK(Int128(-5).abs() == Int128(5));
}

TEST_CASE("Int128 overflow is detected, never wrapped") {
  Int128 big = Int128::pow2(126);
  CHECK_THROWS_AS(big * Int128(4), std::overflow_error);
  CHECK_THROWS_AS(big + big, std::overflow_error);
  Int128 neg = -big - big;  // -2^127, the minimum
  CHECK_THROWS_AS(neg - Int128(1), std::overflow_error);
  CHECK_THROWS_AS(-neg, std::overflow_error);
  CHECK_THROWS_AS(Int128(1) / Int128(0), std::domain_error);
  CHECK_THROWS_AS(Int128::pow2(127), std::overflow_error);
}

TEST_CASE("Rational canonical form") {
  CHECK(Rational(Int128(2), Int128(4)) == Rational(Int128(1), Int128(2)));
  CHECK(Rational(Int128(-2), Int128(-4)) == Rational(Int128(1), Int128(2)));
  CHECK(Rational(Int128(3), Int128(-6)).str() == "-1/2");
  CHECK(Rational(Int128(0), Int128(7)).den() == Int128(1));
  CHECK_THROWS_AS(Rational(Int128(1), Int128(0)), std::domain_error);
}

TEST_CASE("Rational arithmetic") {
  Rational a(Int128(20096), Int128(27));
  Rational b(Int128(1288), Int128(27));
  CHECK((a + b).str() == "792");
  CHECK((a + b).is_integer());
  CHECK((a - b).str() == "18808/27");
  CHECK((a * Rational(27)).to_integer() == Int128(20096));
  CHECK(Rational(Int128(615), Int128(2)).decimal(1) == "307.5");
  CHECK(Rational(Int128(23), Int128(95)).decimal(4) == "0.2421");
  CHECK(Rational(Int128(-1), Int128(2)).decimal(2) == "-0.50");
  CHECK(Rational(5) < Rational(Int128(11), Int128(2)));
  CHECK(Rational(Int128(1), Int128(3)) > Rational(Int128(1), Int128(4)));
  CHECK_THROWS_AS(Rational(Int128(1), Int128(2)).to_integer(), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}
