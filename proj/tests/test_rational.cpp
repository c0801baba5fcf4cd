#include <random>

#include "doctest.h"
#include "mtv/rational.hpp"

using mtv::Rational;

TEST_CASE("basic arithmetic and canonical form") {
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK(a.str() == "1/2");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(-6, 4)).str() == "-3/2");
    CHECK(Rational(7).str() == "7");
    CHECK_THROWS(Rational(1, 0));
    CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("parse") {
    CHECK(Rational::parse("13/11") == Rational(13, 11));
    CHECK(Rational::parse("-2") == Rational(-2));
    CHECK(Rational::parse("-917750647910294/1321840200143647").str() ==
          "-917750647910294/1321840200143647");
    CHECK_THROWS(Rational::parse("a/b"));
    CHECK_THROWS(Rational::parse("1/0"));
}

TEST_CASE("round trips on random values") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    for (int i = 0; i < 200; ++i) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
    }
}

TEST_CASE("pow") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK_THROWS(Rational(0).pow(-1));
}

TEST_CASE("factorial and binomial") {
    CHECK(mtv::factorial(0) == Rational(1));
    CHECK(mtv::factorial(5) == Rational(120));
    CHECK(mtv::binomial(5, 2) == Rational(10));
    CHECK(mtv::binomial(4, 0) == Rational(1));
    CHECK(mtv::binomial(3, 5) == Rational(0));
    CHECK(mtv::binomial(3, -1) == Rational(0));
}

TEST_CASE("bernoulli numbers") {
    CHECK(mtv::bernoulli(0) == Rational(1));
    CHECK(mtv::bernoulli(1) == Rational(-1, 2));
    CHECK(mtv::bernoulli(2) == Rational(1, 6));
    CHECK(mtv::bernoulli(3) == Rational(0));
    CHECK(mtv::bernoulli(4) == Rational(-1, 30));
    CHECK(mtv::bernoulli(10) == Rational(5, 66));
    CHECK(mtv::bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("euler numbers") {
    CHECK(mtv::euler_number(0) == Rational(1));
    CHECK(mtv::euler_number(1) == Rational(0));
    CHECK(mtv::euler_number(2) == Rational(-1));
    CHECK(mtv::euler_number(4) == Rational(5));
    CHECK(mtv::euler_number(6) == Rational(-61));
    CHECK(mtv::euler_number(8) == Rational(1385));
}
