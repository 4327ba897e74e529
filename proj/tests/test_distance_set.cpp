#include <doctest.h>

#include <random>

#include "distchrom/distance_set.hpp"

using namespace distchrom;

namespace {

QuadExt qe(long long p, long long q, int m = 2) {
    return QuadExt(Rational(p), Rational(q), m);
}

} // namespace

TEST_CASE("parse the five-distance counterexample set") {
    const DistanceSet ds = parse_distance_set("1, 2, s, 2s, 1+s");
    REQUIRE(ds.size() == 5);
    CHECK(ds.elements[0] == qe(1, 0));
    CHECK(ds.elements[1] == qe(0, 1));
    CHECK(ds.elements[2] == qe(2, 0));
    CHECK(ds.elements[3] == qe(1, 1));
    CHECK(ds.elements[4] == qe(0, 2));
    CHECK(ds.rank == 2);
    CHECK(ds.basis == std::vector<QuadExt>{qe(1, 0), qe(0, 1)});
    CHECK(ds.lattice_coords ==
          std::vector<LatticeVector>{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}});
    CHECK(!ds.alpha.has_value());
    CHECK(ds.canonical_text() == "1, s, 2, 1+s, 2s");
}

TEST_CASE("singleton rational") {
    const DistanceSet ds = parse_distance_set("3/2");
    CHECK(ds.size() == 1);
    CHECK(ds.rank == 1);
    CHECK(*ds.integer_form == std::vector<long long>{1});
    CHECK(*ds.alpha == QuadExt(Rational(BigInt(2), BigInt(3))));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_distance_set("1+s-1-s"), ParseError); // evaluates to zero
    CHECK_THROWS_AS(parse_distance_set(""), ParseError);
    CHECK_THROWS_AS(parse_distance_set("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_distance_set("1/0"), ParseError);
    CHECK_THROWS_AS(parse_distance_set("2ss"), ParseError);
    CHECK_THROWS_AS(parse_distance_set("-1"), ParseError); // negative distance
    try {
        parse_distance_set("1, 2, x");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position() == 6);
    }
}

TEST_CASE("whitespace is ignored, duplicates merge") {
    const DistanceSet ds = parse_distance_set("  2 s ,1 + s, 2s ");
    CHECK(ds.size() == 2);
    CHECK(ds.elements[0] == qe(1, 1));
    CHECK(ds.elements[1] == qe(0, 2));
}

TEST_CASE("rational commensurable set") {
    const DistanceSet ds = parse_distance_set("3/2, 9/4");
    CHECK(ds.rank == 1);
    CHECK(*ds.alpha == QuadExt(Rational(BigInt(4), BigInt(3))));
    CHECK(*ds.integer_form == std::vector<long long>{2, 3});
}

TEST_CASE("quadratic commensurable set") {
    const DistanceSet ds = parse_distance_set("2+2s, 3+3s");
    CHECK(ds.rank == 1);
    CHECK(ds.basis == std::vector<QuadExt>{qe(1, 1)});
    CHECK(*ds.integer_form == std::vector<long long>{2, 3});
    // alpha = 1/(1+s) = s-1; alpha * (2+2s) = 2 exactly.
    CHECK(*ds.alpha == qe(-1, 1));
    CHECK(*ds.alpha * ds.elements[0] == qe(2, 0));
    CHECK(*ds.alpha * ds.elements[1] == qe(3, 0));
}

TEST_CASE("incommensurable pair") {
    const DistanceSet ds = parse_distance_set("1, s");
    CHECK(ds.rank == 2);
    CHECK(!ds.integer_form.has_value());
}

TEST_CASE("alpha times elements is the integer form, gcd one") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long long> num(1, 9);
    for (int iter = 0; iter < 200; ++iter) {
        // Random commensurable set: rational multiples of a random generator.
        const Rational scale(BigInt(num(rng)), BigInt(num(rng)));
        const QuadExt g = (iter % 2 == 0) ? QuadExt(scale) : QuadExt(scale, scale, 2);
        std::vector<QuadExt> elems;
        const int n = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < n; ++i) {
            elems.push_back(QuadExt(Rational(num(rng))) * g);
        }
        const DistanceSet ds = analyze_distance_set(elems, 2);
        REQUIRE(ds.rank == 1);
        BigInt gcd_acc = 0;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            CHECK(*ds.alpha * ds.elements[i] ==
                  QuadExt(Rational((*ds.integer_form)[i])));
            gcd_acc = boost::multiprecision::gcd(gcd_acc, BigInt((*ds.integer_form)[i]));
        }
        CHECK(gcd_acc == 1);
    }
}

TEST_CASE("theorem family") {
    CHECK_THROWS_AS(theorem_family(1), DomainError);

    const DistanceSet d2 = theorem_family(2);
    CHECK(d2.size() == 2);
    CHECK(d2.elements == std::vector<QuadExt>{qe(1, 0), qe(0, 1)});

    const DistanceSet d3 = theorem_family(3);
    CHECK(d3.size() == 5);
    CHECK(d3.canonical_text() == "1, s, 2, 1+s, 2s");
    CHECK(d3.canonical_text() == parse_distance_set("1,2,s,2s,1+s").canonical_text());

    const DistanceSet d4 = theorem_family(4);
    CHECK(d4.size() == 9);
    for (int t = 2; t <= 7; ++t) {
        CHECK(static_cast<long long>(theorem_family(t).size()) ==
              static_cast<long long>(t - 1) * (t + 2) / 2);
        // The integer members start 1, 2, ..., t-1.
        const DistanceSet dt = theorem_family(t);
        int integers = 0;
        for (const QuadExt& e : dt.elements) {
            if (e.is_rational()) {
                ++integers;
                CHECK(e.rat_part().den() == 1);
                CHECK(e.rat_part().num() <= t - 1);
            }
        }
        CHECK(integers == t - 1);
    }
}

TEST_CASE("scale invariance of the analysis") {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<long long> num(1, 8);
    const char* sets[] = {"1, 2, s, 2s, 1+s", "3/2, 9/4", "2+2s, 3+3s", "1, s", "5"};
    for (const char* text : sets) {
        const DistanceSet base = parse_distance_set(text);
        for (int iter = 0; iter < 20; ++iter) {
            const Rational alpha(BigInt(num(rng)), BigInt(num(rng)));
            std::vector<QuadExt> scaled;
            for (const QuadExt& e : base.elements) {
                scaled.push_back(QuadExt(alpha) * e);
            }
            const DistanceSet ds = analyze_distance_set(scaled, 2);
            CHECK(ds.rank == base.rank);
            if (base.rank == 1) {
                CHECK(*ds.integer_form == *base.integer_form);
            }
        }
    }
}

TEST_CASE("lattice coordinates regenerate the elements") {
    for (const char* text : {"1, 2, s, 2s, 1+s", "1+s, 2s, 3", "3/2, 9/4", "7s, 14s"}) {
        const DistanceSet ds = parse_distance_set(text);
        for (std::size_t i = 0; i < ds.size(); ++i) {
            CHECK(ds.value_of(ds.lattice_coords[i]) == ds.elements[i]);
        }
    }
}

TEST_CASE("other radicands") {
    const DistanceSet ds = parse_distance_set("1, s", 3);
    CHECK(ds.rank == 2);
    CHECK(ds.elements[1].radicand() == 3);
    CHECK_THROWS_AS(parse_distance_set("1, s", 4), DomainError);
}
