#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distchrom/distance_set.hpp"
#include "distchrom/integer_coloring.hpp"
#include "distchrom/lattice_graph.hpp"

namespace distchrom {

// Coloring of the line by finitely many half-open slabs [b_i, b_{i+1}),
// either repeated with a period or covering a window [L, R). A color class
// is a union of slabs; adjacent slabs may share a color.
struct SlabColoring {
    enum class Mode { periodic, windowed };

    Mode mode = Mode::periodic;
    std::vector<QuadExt> breakpoints; // strictly increasing; periodic: 0 = b_0 < ... < b_n = period
    std::vector<int> colors;          // one per slab
    int t = 0;

    const QuadExt& lo() const { return breakpoints.front(); }
    const QuadExt& hi() const { return breakpoints.back(); }

    void validate() const; // throws DomainError when malformed

    // Slab owning x; half-open, so a point exactly on a breakpoint belongs
    // to the right-hand slab. Windowed mode: -1 outside [L, R).
    int slab_index_at(const QuadExt& x) const;
    int color_at(const QuadExt& x) const;

    // Text form: header "period <expr>" or "window <expr> <expr>", then one
    // line per slab: "[<expr>, <expr>) <color>".
    std::string to_text() const;
    static SlabColoring from_text(std::string_view text, int radicand = 2);
};

struct SlabViolation {
    QuadExt x; // witness: x and x + d share a color
    QuadExt d;
    int slab_i = 0;
    int slab_j = 0;
};

// Exact checker: for each distance and slab, the shifted slab (reduced mod
// period, split at the wrap) is intersected with every same-colored slab;
// half-open overlap [x,y) n [u,v) != {} iff x < v and u < y, decided
// exactly. Returns the first violation in scan order, with the witness x
// chosen as the midpoint of the feasible range.
std::optional<SlabViolation> verify_slab(const SlabColoring& c, const DistanceSet& D);

// Width-d_min slabs cycling through ceil(d_max/d_min)+1 colors. Same-slab
// pairs are closer than d_min, same-color pairs in different slabs farther
// than d_max, so the checker accepts it for every valid D.
SlabColoring unit_slab_coloring(const DistanceSet& D);

// Assigns slab [n, n+1)/alpha the color of residue n: the slab transcription
// of a proper periodic coloring of the integers, rescaled by 1/alpha.
SlabColoring integer_slab_from_periodic(const PeriodicColoring& pc, const QuadExt& alpha);

// Two-sided bounds on the slab chromatic number with replayable evidence.
// Rank 1: equality via the integer solver and its slab transcription.
// Rank 2: lower from the window chromatic bound, raised by one when the
// no-t-slab certificate holds; upper from the verified unit-slab
// construction (the k+1 literature bound is reported without a witness).
struct ChiMBounds {
    int rank = 0;
    int lower = 0;
    int upper = 0;
    bool equal = false;

    std::optional<IntegerChi> integer_chi;
    std::optional<IntegerClique> integer_clique;
    bool lower_by_decision = false; // t-1 refuted by the transfer graph (vs clique bound)
    std::optional<SlabColoring> slab_witness;

    std::optional<WindowChromatic> window_chi;
    std::optional<NoSlabCertificate> certificate;
    std::optional<SlabColoring> unit_slab;
    int literature_upper = 0; // k+1, no witness
};

ChiMBounds chi_m_bounds(const DistanceSet& D, long long window_radius = 20,
                        long long state_budget = 10'000'000);

} // namespace distchrom
