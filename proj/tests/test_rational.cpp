#include <doctest.h>

#include <random>

#include "distchrom/rational.hpp"

using namespace distchrom;

TEST_CASE("rational normalization") {
    Rational r(BigInt(6), BigInt(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(BigInt(0), BigInt(7)) == Rational(0));
    CHECK(Rational(0).den() == 1);
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), DomainError);
}

TEST_CASE("rational arithmetic and order") {
    const Rational a(BigInt(1), BigInt(3));
    const Rational b(BigInt(1), BigInt(6));
    CHECK(a + b == Rational(BigInt(1), BigInt(2)));
    CHECK(a - b == b);
    CHECK(a * b == Rational(BigInt(1), BigInt(18)));
    CHECK(a / b == Rational(2));
    CHECK(a > b);
    CHECK((-a) < b);
    CHECK_THROWS_AS(a / Rational(0), DomainError);
}

TEST_CASE("floor and ceil") {
    CHECK(Rational(BigInt(7), BigInt(2)).floor() == 3);
    CHECK(Rational(BigInt(7), BigInt(2)).ceil() == 4);
    CHECK(Rational(BigInt(-7), BigInt(2)).floor() == -4);
    CHECK(Rational(BigInt(-7), BigInt(2)).ceil() == -3);
    CHECK(Rational(5).floor() == 5);
    CHECK(Rational(5).ceil() == 5);
}

TEST_CASE("to_string") {
    CHECK(Rational(BigInt(-3), BigInt(2)).to_string() == "-3/2");
    CHECK(Rational(4).to_string() == "4");
}

TEST_CASE("field identities on random small rationals") {
    std::mt19937_64 rng(20240817);
    std::uniform_int_distribution<long long> num(-50, 50);
    std::uniform_int_distribution<long long> den(1, 20);
    for (int i = 0; i < 2000; ++i) {
        const Rational a(BigInt(num(rng)), BigInt(den(rng)));
        const Rational b(BigInt(num(rng)), BigInt(den(rng)));
        const Rational c(BigInt(num(rng)), BigInt(den(rng)));
        CHECK((a + b) - b == a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
        }
        // Order compatibility.
        if (a < b) {
            CHECK(a + c < b + c);
        }
    }
}
