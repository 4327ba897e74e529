#include "distchrom/hnf.hpp"

#include <limits>
#include <utility>

namespace distchrom {

namespace {

BigInt floor_quot(const BigInt& a, const BigInt& b) {
    BigInt q = a / b; // truncated
    if ((a < 0) != (b < 0) && q * b != a) {
        --q;
    }
    return q;
}

} // namespace

long long checked_narrow(const BigInt& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
        throw DomainError("lattice coordinate exceeds supported range");
    }
    return v.convert_to<long long>();
}

HnfResultBig lattice_hnf_big(const std::vector<BigVector>& vectors) {
    if (vectors.empty()) {
        throw DomainError("lattice_hnf: empty input");
    }

    // Two running pivots: r1 with b == 0, r2 with b != 0. Row operations
    // preserve the integer span at every step.
    bool have_r1 = false, have_r2 = false;
    BigVector r1, r2;

    auto fold_a = [&](BigVector v) {
        // v has b == 0; Euclid on the a-components against r1.
        while (v.a != 0) {
            if (!have_r1) {
                r1 = v;
                have_r1 = true;
                return;
            }
            if (abs(v.a) >= abs(r1.a)) {
                BigInt q = v.a / r1.a;
                v.a -= q * r1.a;
            } else {
                std::swap(v, r1);
            }
        }
    };

    for (const BigVector& input : vectors) {
        BigVector v = input;
        while (v.b != 0) {
            if (!have_r2) {
                r2 = v;
                have_r2 = true;
                v = BigVector{};
                break;
            }
            if (abs(v.b) >= abs(r2.b)) {
                BigInt q = v.b / r2.b;
                v.a -= q * r2.a;
                v.b -= q * r2.b;
            } else {
                std::swap(v, r2);
            }
        }
        if (v.a != 0) {
            fold_a(std::move(v));
        }
    }

    HnfResultBig res;
    res.rank = (have_r1 ? 1 : 0) + (have_r2 ? 1 : 0);
    if (res.rank == 0) {
        throw DomainError("lattice_hnf: all input vectors are zero");
    }

    if (res.rank == 2) {
        if (r1.a < 0) r1.a = -r1.a;
        if (r2.b < 0) {
            r2.a = -r2.a;
            r2.b = -r2.b;
        }
        // Reduce the off-diagonal entry into [0, d1).
        BigInt q = floor_quot(r2.a, r1.a);
        r2.a -= q * r1.a;
        res.basis = {BigVector{r1.a, 0}, r2};
        for (const BigVector& v : vectors) {
            BigInt c2 = v.b / r2.b;
            BigInt c1 = (v.a - c2 * r2.a) / r1.a;
            res.coords.push_back(BigVector{c1, c2});
        }
    } else if (have_r1) {
        if (r1.a < 0) r1.a = -r1.a;
        res.basis = {BigVector{r1.a, 0}};
        for (const BigVector& v : vectors) {
            res.coords.push_back(BigVector{v.a / r1.a, 0});
        }
    } else {
        // Rank 1 along a direction with b != 0; sign convention: first
        // nonzero coordinate positive.
        const bool flip = (r2.a != 0) ? (r2.a < 0) : (r2.b < 0);
        if (flip) {
            r2.a = -r2.a;
            r2.b = -r2.b;
        }
        res.basis = {r2};
        for (const BigVector& v : vectors) {
            res.coords.push_back(BigVector{v.b / r2.b, 0});
        }
    }
    return res;
}

HnfResult lattice_hnf(const std::vector<LatticeVector>& vectors) {
    std::vector<BigVector> big;
    big.reserve(vectors.size());
    for (const LatticeVector& v : vectors) {
        big.push_back(BigVector{BigInt(v.a), BigInt(v.b)});
    }
    HnfResultBig rb = lattice_hnf_big(big);
    HnfResult res;
    res.rank = rb.rank;
    for (const BigVector& v : rb.basis) {
        res.basis.push_back(LatticeVector{checked_narrow(v.a), checked_narrow(v.b)});
    }
    for (const BigVector& v : rb.coords) {
        res.coords.push_back(LatticeVector{checked_narrow(v.a), checked_narrow(v.b)});
    }
    return res;
}

} // namespace distchrom
