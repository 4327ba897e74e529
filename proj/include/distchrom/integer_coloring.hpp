#pragma once

#include <optional>
#include <vector>

#include "distchrom/rational.hpp"

namespace distchrom {

// Proper periodic coloring of the integers: position x gets colors[x mod
// period]. Properness means colors[r] != colors[(r + d) mod period] for every
// residue r and every forbidden distance d.
struct PeriodicColoring {
    long long period = 0;
    std::vector<int> colors;
};

bool verify_periodic(const PeriodicColoring& pc, const std::vector<long long>& dprime);

// Decides whether the integers admit a proper t-coloring for the integer
// distance set dprime, via the transfer graph on color windows of length
// d_max: bi-infinite proper colorings correspond to bi-infinite walks, which
// exist iff the graph has a directed cycle; a cycle is read off as a
// PeriodicColoring witness.
//
// Refuses instances whose window space t^d_max exceeds state_budget, and
// also caps the states actually materialized at the same budget.
std::optional<PeriodicColoring> is_t_colorable_integer(const std::vector<long long>& dprime,
                                                       int t,
                                                       long long state_budget = 10'000'000);

struct IntegerChi {
    int chi = 0;
    PeriodicColoring witness;
};

// Smallest t admitting a proper coloring, scanning upward from the clique
// bound; always terminates since |dprime|+1 colors suffice greedily.
IntegerChi chi_integer(const std::vector<long long>& dprime, long long state_budget = 10'000'000);

struct IntegerClique {
    int size = 0;
    std::vector<long long> witness; // ascending, contains 0
};

// Maximum clique; members of a clique through 0 lie in dprime itself, so the
// exhaustive search runs over subsets of {0} + dprime.
IntegerClique clique_number_integer(const std::vector<long long>& dprime);

} // namespace distchrom
