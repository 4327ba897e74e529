#pragma once

#include <compare>
#include <vector>

#include "distchrom/rational.hpp"

namespace distchrom {

// Point of the coordinate lattice Z^2; (a, b) stands for a*g1 + b*g2 in a
// declared basis (for the default frame, a + b*sqrt(m)).
struct LatticeVector {
    long long a = 0;
    long long b = 0;

    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
};

struct BigVector {
    BigInt a;
    BigInt b;
};

// Canonical basis of the integer span of the inputs, in lower-triangular
// Hermite normal form with positive diagonal:
//   rank 2: basis = {(d1, 0), (e, d2)} with d1 > 0, d2 > 0, 0 <= e < d1,
//   rank 1: single generator with its first nonzero coordinate positive.
// coords re-express every input vector in the returned basis (rank-1 coords
// use the first slot, second slot 0).
struct HnfResult {
    int rank = 0;
    std::vector<LatticeVector> basis;
    std::vector<LatticeVector> coords;
};

struct HnfResultBig {
    int rank = 0;
    std::vector<BigVector> basis;
    std::vector<BigVector> coords;
};

// Throws DomainError when the input is empty or all-zero. Multipliers can
// exceed 64 bits, so the reduction runs over arbitrary-precision integers.
HnfResultBig lattice_hnf_big(const std::vector<BigVector>& vectors);
HnfResult lattice_hnf(const std::vector<LatticeVector>& vectors);

// Narrowing with an explicit failure mode instead of silent wraparound.
long long checked_narrow(const BigInt& v);

} // namespace distchrom
