#include <doctest.h>

#include <random>

#include "distchrom/distance_set.hpp"
#include "distchrom/quadext.hpp"

using namespace distchrom;

namespace {

QuadExt qe(long long p, long long q, int m = 2) {
    return QuadExt(Rational(p), Rational(q), m);
}

std::mt19937_64& rng() {
    static std::mt19937_64 r(987654321);
    return r;
}

QuadExt random_quad() {
    std::uniform_int_distribution<long long> num(-30, 30);
    std::uniform_int_distribution<long long> den(1, 12);
    return QuadExt(Rational(BigInt(num(rng())), BigInt(den(rng()))),
                   Rational(BigInt(num(rng())), BigInt(den(rng()))), 2);
}

} // namespace

TEST_CASE("arithmetic basics") {
    const QuadExt one_plus_s = qe(1, 1);
    CHECK(one_plus_s + one_plus_s == qe(2, 2));
    // Conjugate product: (1+s)(1-s) = 1 - 2 = -1.
    CHECK(one_plus_s * qe(1, -1) == qe(-1, 0));
    CHECK(qe(0, 2) / qe(0, 1) == qe(2, 0));
    CHECK_THROWS_AS(one_plus_s / qe(0, 0), DomainError);
}

TEST_CASE("mixed radicands rejected") {
    CHECK_THROWS_AS(qe(0, 1, 2) + qe(0, 1, 3), DomainError);
    // A rational operand is radicand-agnostic.
    CHECK(qe(2, 0, 2) + qe(0, 1, 3) == qe(2, 1, 3));
}

TEST_CASE("comparisons") {
    CHECK(qe(1, 1) < QuadExt(Rational(BigInt(5), BigInt(2)))); // 1+sqrt2 < 5/2
    CHECK(compare(qe(0, 0), qe(0, 0)) == 0);
    CHECK(qe(0, 2) > qe(1, 1)); // 2*sqrt2 > 1+sqrt2
    CHECK(qe(2, -1).sign() > 0);
    CHECK(qe(1, -1).sign() < 0);
    CHECK(qe(-1, 1).sign() > 0);
    CHECK(qe(-2, 1).sign() < 0);
}

TEST_CASE("ceil and floor division") {
    CHECK(quad_ceil_div(qe(0, 2), qe(1, 0)) == 3); // ceil(2*sqrt2) = 3
    CHECK(quad_ceil_div(qe(0, 5), qe(0, 5)) == 1);
    CHECK(quad_ceil_div(qe(1, 1), qe(0, 1)) == 2); // (1+sqrt2)/sqrt2 ~ 1.707
    CHECK(quad_floor_div(qe(0, 2), qe(1, 0)) == 2);
    CHECK(quad_floor_div(qe(-1, -1), qe(1, 0)) == -3); // floor(-2.414)
    CHECK(quad_floor_div(qe(6, 0), qe(2, 0)) == 3);
    CHECK_THROWS_AS(quad_ceil_div(qe(-1, 0), qe(1, 0)), DomainError);
    CHECK_THROWS_AS(quad_ceil_div(qe(1, 0), qe(0, 0)), DomainError);
}

TEST_CASE("radicand validation") {
    CHECK_NOTHROW(validate_radicand(2));
    CHECK_NOTHROW(validate_radicand(3));
    CHECK_NOTHROW(validate_radicand(30));
    CHECK_THROWS_AS(validate_radicand(1), DomainError);
    CHECK_THROWS_AS(validate_radicand(4), DomainError);
    CHECK_THROWS_AS(validate_radicand(12), DomainError);
    CHECK_THROWS_AS(validate_radicand(-2), DomainError);
}

TEST_CASE("canonical text round-trips") {
    const QuadExt samples[] = {qe(0, 0),  qe(2, 0),  qe(0, 1),  qe(0, -1), qe(1, 1),
                               qe(1, -1), qe(-3, 2), qe(0, -3),
                               QuadExt(Rational(BigInt(-3), BigInt(2)),
                                       Rational(BigInt(5), BigInt(4)), 2)};
    for (const QuadExt& v : samples) {
        CHECK(parse_quad_expr(v.to_string(), 2) == v);
    }
    for (int i = 0; i < 500; ++i) {
        const QuadExt v = random_quad();
        CHECK(parse_quad_expr(v.to_string(), 2) == v);
    }
}

TEST_CASE("order is total and compatible with arithmetic") {
    for (int i = 0; i < 3000; ++i) {
        const QuadExt a = random_quad();
        const QuadExt b = random_quad();
        const QuadExt c = random_quad();
        const int ab = compare(a, b);
        CHECK(compare(b, a) == -ab);
        if (ab == 0) CHECK(a == b);
        // transitivity through a sorted triple
        QuadExt lo = a, mid = b, hi = c;
        if (mid < lo) std::swap(lo, mid);
        if (hi < mid) std::swap(mid, hi);
        if (mid < lo) std::swap(lo, mid);
        CHECK(lo <= hi);
        // translation and positive scaling preserve order
        if (a < b) {
            CHECK(a + c < b + c);
        }
        if (a.sign() > 0 && b.sign() > 0) {
            CHECK((a * b).sign() > 0);
        }
    }
}

TEST_CASE("rational embedding agrees with plain rational arithmetic") {
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<long long> den(1, 15);
    for (int i = 0; i < 1000; ++i) {
        const Rational a(BigInt(num(rng())), BigInt(den(rng())));
        const Rational b(BigInt(num(rng())), BigInt(den(rng())));
        CHECK(QuadExt(a) + QuadExt(b) == QuadExt(a + b));
        CHECK(QuadExt(a) * QuadExt(b) == QuadExt(a * b));
        CHECK(compare(QuadExt(a), QuadExt(b)) == (a < b ? -1 : (a == b ? 0 : 1)));
        CHECK(compare(QuadExt(a), QuadExt(a)) == 0);
    }
}
