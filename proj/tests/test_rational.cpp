#include <catch2/catch_amalgamated.hpp>

#include "seifert_cs/rational.hpp"

using namespace seifert_cs;

TEST_CASE("rationals are stored reduced with positive denominator") {
    Rational r = make_rational(4, -6);
    CHECK(numerator(r) == -2);
    CHECK(denominator(r) == 3);
    CHECK(r == Rational(-2, 3));
}

TEST_CASE("to_string renders p/q, integers as p") {
    CHECK(to_string(Rational(1, 18)) == "1/18");
    CHECK(to_string(Rational(-31, 30)) == "-31/30");
    CHECK(to_string(Rational(7)) == "7");
    CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("floor_int rounds toward minus infinity") {
    CHECK(floor_int(Rational(7, 2)) == 3);
    CHECK(floor_int(Rational(-7, 2)) == -4);
    CHECK(floor_int(Rational(-4, 2)) == -2);
    CHECK(floor_int(Rational(0)) == 0);
}

TEST_CASE("mod2 lands in [0,2)") {
    CHECK(mod2(Rational(4, 3)) == Rational(4, 3));
    CHECK(mod2(Rational(7, 3)) == Rational(1, 3));
    CHECK(mod2(Rational(-1, 3)) == Rational(5, 3));
    CHECK(mod2(Rational(2)) == 0);
    CHECK(mod2(Rational(-31, 4)) == Rational(1, 4));
}
