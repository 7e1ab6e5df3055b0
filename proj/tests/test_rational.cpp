#include <doctest.h>

#include <random>

#include "shtukacrit/rational.hpp"

using namespace shtk;

TEST_CASE("reduction and sign normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, 4) == Rational(1, -2));
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(3, -6).num() == -1);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), invalid_input);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), invalid_input);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5, 2) < Rational(-2));
}

TEST_CASE("floor") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(6, 3).floor() == 2);
    CHECK(Rational(-6, 3).floor() == -2);
    CHECK(Rational(0).floor() == 0);
}

TEST_CASE("serialization round trip") {
    CHECK(Rational(1, 2).str() == "1/2");
    CHECK(Rational(-3, 2).str() == "-3/2");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational::parse("2/4") == Rational(1, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("-1/2") == Rational(-1, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), invalid_input);
    CHECK_THROWS_AS(Rational::parse("a/b"), invalid_input);
    CHECK_THROWS_AS(Rational::parse(""), invalid_input);

    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> num(-50, 50), den(1, 20);
    for (int i = 0; i < 500; ++i) {
        Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("bracket is the representative in [0,1) and is periodic") {
    CHECK(bracket_q(Rational(1, 2)) == Rational(1, 2));
    CHECK(bracket_q(Rational(-1, 2)) == Rational(1, 2));
    CHECK(bracket_q(Rational(7, 3)) == Rational(1, 3));
    CHECK(bracket_q(Rational(4)) == Rational(0));

    std::mt19937 rng(11);
    std::uniform_int_distribution<long long> num(-60, 60), den(1, 12), shift(-5, 5);
    for (int i = 0; i < 500; ++i) {
        Rational r(num(rng), den(rng));
        Rational b = bracket_q(r);
        CHECK(b >= Rational(0));
        CHECK(b < Rational(1));
        CHECK((r - b).is_integer());
        CHECK(bracket_q(r + Rational(shift(rng))) == b);
    }
}

TEST_CASE("lcm of denominators") {
    CHECK(lcm_denominators({Rational(1, 2), Rational(1, 3)}) == 6);
    CHECK(lcm_denominators({Rational(3), Rational(-5)}) == 1);
    CHECK(lcm_denominators({Rational(5, 10)}) == 2);
    CHECK_THROWS_AS(lcm_denominators({}), invalid_input);
}

TEST_CASE("Q/Z classes") {
    QModZ half{Rational(1, 2)};
    CHECK(half.torsion_order() == 2);
    CHECK((half + half).is_zero());
    CHECK(QModZ{Rational(-1, 3)}.rep() == Rational(2, 3));
    CHECK(QModZ{Rational(5, 6)}.times(3).rep() == Rational(1, 2));
    CHECK((-QModZ{Rational(1, 4)}).rep() == Rational(3, 4));
    CHECK(QModZ{Rational(2)}.torsion_order() == 1);
}
