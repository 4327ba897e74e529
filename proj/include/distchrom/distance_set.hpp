#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distchrom/hnf.hpp"
#include "distchrom/quadext.hpp"

namespace distchrom {

// A parsed, analyzed distance set: finitely many positive values from
// Q(sqrt(m)), sorted ascending with duplicates merged, together with the
// canonical lattice picture of the additive group they generate.
//
// rank 1 means all pairwise ratios are rational (commensurable); then alpha
// scales the set onto its minimal integer model (alpha * elements =
// integer_form with gcd 1). alpha = 1/basis[0] lives in Q(sqrt(m)), not
// necessarily in Q: {2+2s, 3+3s} has basis {1+s} and integer form {2, 3}.
struct DistanceSet {
    std::vector<QuadExt> elements;
    int radicand = 2;

    int rank = 0;                              // 1 or 2
    std::vector<QuadExt> basis;                // embedded HNF basis, all positive
    std::vector<LatticeVector> lattice_coords; // per element, in that basis
    std::optional<QuadExt> alpha;              // rank 1 only
    std::optional<std::vector<long long>> integer_form; // rank 1 only, gcd 1

    const QuadExt& d_min() const { return elements.front(); }
    const QuadExt& d_max() const { return elements.back(); }
    std::size_t size() const { return elements.size(); }

    // Embedded real value of a coordinate-lattice point. Rank-1 sets live on
    // a line; their points must have b == 0.
    QuadExt value_of(const LatticeVector& p) const;

    std::string canonical_text() const; // "1, 2, s, 2s, 1+s"
};

// Single expression in the distance grammar ("2-3/2s"); used for distances,
// slab breakpoints and report round-trips. Whitespace is ignored.
QuadExt parse_quad_expr(std::string_view text, int radicand = 2);

// Grammar (whitespace ignored):
//   set      := distance ("," distance)*
//   distance := term (("+" | "-") term)*
//   term     := rational | rational "s" | "s"
//   rational := ["-"] digits ["/" digits]
// Every distance must evaluate strictly positive. "s" is sqrt(radicand).
DistanceSet parse_distance_set(std::string_view text, int radicand = 2);

// Fills rank, basis, lattice coordinates and the rank-1 integer model.
DistanceSet analyze_distance_set(std::vector<QuadExt> elements, int radicand = 2);

// The family {a + b*sqrt(m) : a, b >= 0, 1 <= a+b <= t-1}; (t-1)(t+2)/2
// elements. Requires t >= 2.
DistanceSet theorem_family(int t, int radicand = 2);

} // namespace distchrom
