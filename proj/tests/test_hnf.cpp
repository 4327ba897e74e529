#include <doctest.h>

#include <random>
#include <set>

#include "distchrom/hnf.hpp"

using namespace distchrom;

namespace {

// Brute-force membership: v lies in the integer span of the basis, with
// small coefficients (enough for the test instances).
bool in_span(const LatticeVector& v, const std::vector<LatticeVector>& basis, int bound = 40) {
    if (basis.size() == 1) {
        for (int k = -bound; k <= bound; ++k) {
            if (k * basis[0].a == v.a && k * basis[0].b == v.b) return true;
        }
        return false;
    }
    for (int k1 = -bound; k1 <= bound; ++k1) {
        for (int k2 = -bound; k2 <= bound; ++k2) {
            if (k1 * basis[0].a + k2 * basis[1].a == v.a &&
                k1 * basis[0].b + k2 * basis[1].b == v.b) {
                return true;
            }
        }
    }
    return false;
}

} // namespace

TEST_CASE("unit vectors give the full lattice") {
    const std::vector<LatticeVector> in = {{1, 0}, {2, 0}, {0, 1}, {0, 2}, {1, 1}};
    const HnfResult r = lattice_hnf(in);
    CHECK(r.rank == 2);
    CHECK(r.basis == std::vector<LatticeVector>{{1, 0}, {0, 1}});
    CHECK(r.coords == in); // identity basis keeps coordinates
}

TEST_CASE("collinear integer multiples") {
    const HnfResult r = lattice_hnf({{6, 0}, {9, 0}});
    CHECK(r.rank == 1);
    CHECK(r.basis == std::vector<LatticeVector>{{3, 0}});
    CHECK(r.coords == std::vector<LatticeVector>{{2, 0}, {3, 0}});
}

TEST_CASE("collinear diagonal") {
    const HnfResult r = lattice_hnf({{2, 2}, {3, 3}});
    CHECK(r.rank == 1);
    CHECK(r.basis == std::vector<LatticeVector>{{1, 1}});
    CHECK(r.coords == std::vector<LatticeVector>{{2, 0}, {3, 0}});
}

TEST_CASE("zero inputs") {
    CHECK_THROWS_AS(lattice_hnf({}), DomainError);
    CHECK_THROWS_AS(lattice_hnf({{0, 0}, {0, 0}}), DomainError);
    // Mixed zero vectors are fine and get zero coordinates.
    const HnfResult r = lattice_hnf({{0, 0}, {2, 0}});
    CHECK(r.rank == 1);
    CHECK(r.coords.front() == LatticeVector{0, 0});
}

TEST_CASE("canonical form: lower triangular, positive diagonal, reduced off-diagonal") {
    const HnfResult r = lattice_hnf({{4, 6}, {10, 2}});
    CHECK(r.rank == 2);
    CHECK(r.basis[0].b == 0);
    CHECK(r.basis[0].a > 0);
    CHECK(r.basis[1].b > 0);
    CHECK(r.basis[1].a >= 0);
    CHECK(r.basis[1].a < r.basis[0].a);
}

TEST_CASE("membership both ways on random instances") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<long long> coef(-6, 6);
    for (int iter = 0; iter < 300; ++iter) {
        std::vector<LatticeVector> in;
        const int n = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < n; ++i) {
            in.push_back(LatticeVector{coef(rng), coef(rng)});
        }
        bool all_zero = true;
        for (const auto& v : in) {
            if (v.a != 0 || v.b != 0) all_zero = false;
        }
        if (all_zero) continue;
        const HnfResult r = lattice_hnf(in);

        // Every input re-expands exactly through its coordinates.
        for (std::size_t i = 0; i < in.size(); ++i) {
            LatticeVector acc{0, 0};
            acc.a += r.coords[i].a * r.basis[0].a;
            acc.b += r.coords[i].a * r.basis[0].b;
            if (r.rank == 2) {
                acc.a += r.coords[i].b * r.basis[1].a;
                acc.b += r.coords[i].b * r.basis[1].b;
            } else {
                CHECK(r.coords[i].b == 0);
            }
            CHECK(acc == in[i]);
        }
        // Every basis vector is an integer combination of the inputs:
        // enumerate all combinations with small coefficients.
        std::set<std::pair<long long, long long>> reachable;
        std::vector<int> ks(in.size(), -20);
        while (true) {
            long long a = 0, b = 0;
            for (std::size_t i = 0; i < in.size(); ++i) {
                a += ks[i] * in[i].a;
                b += ks[i] * in[i].b;
            }
            reachable.emplace(a, b);
            std::size_t pos = 0;
            while (pos < ks.size() && ks[pos] == 20) {
                ks[pos] = -20;
                ++pos;
            }
            if (pos == ks.size()) break;
            ++ks[pos];
        }
        for (const auto& b : r.basis) {
            CHECK(reachable.count({b.a, b.b}) == 1);
        }
        // And inputs lie in the span of the basis.
        for (const auto& v : in) {
            CHECK(in_span(v, r.basis));
        }
    }
}
