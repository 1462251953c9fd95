#include <doctest.h>

#include "stabenv/rational.hpp"

using namespace stabenv;

TEST_CASE("rationals are canonical") {
    Rational a(2, 6);
    CHECK(a.numerator() == 1);
    CHECK(a.denominator() == 3);
    CHECK(Rational(-4, -6) == Rational(2, 3));
    Rational neg(3, -9);
    CHECK(neg.numerator() == -1);
    CHECK(neg.denominator() == 3);
    CHECK(Rational(0, 5).denominator() == 1);
    CHECK(Rational(0, 5).str() == "0");
}

TEST_CASE("parse and print round-trip") {
    CHECK(Rational("7/3").str() == "7/3");
    CHECK(Rational("-10/4") == Rational(-5, 2));
    CHECK(Rational("42").is_integer());
    CHECK_THROWS(Rational("1/0"));
    CHECK_THROWS(Rational("3.5"));
    CHECK_THROWS(Rational(""));
}

TEST_CASE("field arithmetic stays canonical") {
    RandomStream rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational a = rng.next_rational();
        const Rational b = rng.next_rational();
        const Rational c = rng.next_nonzero_rational();
        CHECK(a + b == b + a);
        CHECK((a - b) + b == a);
        CHECK(a * c / c == a);
        const Rational sum = a + b;
        CHECK(gcd(abs(sum.numerator()), sum.denominator()) == 1);
        CHECK(sum.denominator() > 0);
    }
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS(Rational(1) / Rational(0));
    CHECK_THROWS(Rational(3, 0));
}

TEST_CASE("random stream is deterministic") {
    RandomStream a(123), b(123);
    for (int i = 0; i < 32; ++i) CHECK(a.next_rational() == b.next_rational());
    CHECK(!RandomStream(5).next_nonzero_rational().is_zero());
}
