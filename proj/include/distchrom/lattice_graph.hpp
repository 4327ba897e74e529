#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distchrom/distance_set.hpp"

namespace distchrom {

// Inclusive rectangle of coordinate-lattice points.
struct Window {
    long long a_lo = 0;
    long long a_hi = -1;
    long long b_lo = 0;
    long long b_hi = -1;

    static Window square(long long radius) { return Window{-radius, radius, -radius, radius}; }

    bool empty() const { return a_lo > a_hi || b_lo > b_hi; }
    long long size() const { return empty() ? 0 : (a_hi - a_lo + 1) * (b_hi - b_lo + 1); }
    bool contains(const LatticeVector& p) const {
        return p.a >= a_lo && p.a <= a_hi && p.b >= b_lo && p.b <= b_hi;
    }

    friend bool operator==(const Window&, const Window&) = default;
};

inline constexpr long long kMaxWindowPoints = 81 * 81;

// Rank-1 sets live on a line; their windows collapse to b = 0.
Window effective_window(const DistanceSet& D, Window w);

// Centered sub-window at half the side lengths; nested in the original.
Window half_window(const Window& w);

// Lexicographic (a, b) enumeration.
std::vector<LatticeVector> window_points(const Window& w);

// Finite map from lattice points to colors in {0, ..., t-1}; proper on its
// domain when no two assigned points at a forbidden distance share a color.
struct PartialColoring {
    int t = 0;
    std::map<LatticeVector, int> assignments;

    bool total_on(const Window& w) const;
};

// Exact adjacency: |value(x) - value(y)| is an element of D.
bool adjacent(const LatticeVector& x, const LatticeVector& y, const DistanceSet& D);

// Coordinate deltas of the elements and their negatives, sorted.
std::vector<LatticeVector> neighbor_deltas(const DistanceSet& D);

// Delta-based properness scan (complete, since the basis embedding is
// injective). Returns a conflicting pair if any.
std::optional<std::pair<LatticeVector, LatticeVector>> find_conflict(const DistanceSet& D,
                                                                     const PartialColoring& c);

// Exhaustive K_t search, translation-normalized: a clique through its own
// minimum lands on {0} + element coordinates, so those are the only
// candidates. Members come back sorted by embedded value, starting at the
// origin. Throws BudgetError past node_budget visited nodes.
std::optional<std::vector<LatticeVector>> find_clique(const DistanceSet& D, int t,
                                                      long long node_budget = 1'000'000);

// Exact chromatic number of the induced window graph by saturation-first
// backtracking (ties broken lexicographically). exceeded means chi > t_max.
struct WindowChromatic {
    int chi = 0;
    bool exceeded = false;
    PartialColoring witness;
};
WindowChromatic window_chromatic(const DistanceSet& D, Window w, int t_max,
                                 long long decision_budget = 10'000'000);

// Homomorphism coloring: point (a, b) gets (wa*a + wb*b) mod t. Proper for
// the whole lattice iff no element's coordinates hit 0 mod t.
struct LinearColoring {
    int t = 0;
    int wa = 0;
    int wb = 0;

    int color(const LatticeVector& p) const;
};
bool linear_coloring_valid(const DistanceSet& D, const LinearColoring& lc);
std::optional<LinearColoring> find_linear_coloring(const DistanceSet& D, int t);

// One forcing event: the point's colored neighbors carried t-1 distinct
// colors (the witnesses, one per color), so it received the remaining one.
struct ForcedStep {
    LatticeVector point;
    int color = 0;
    std::vector<std::pair<LatticeVector, int>> witnesses;
};

struct PropagationResult {
    PartialColoring result;
    bool fully_forced = false;
    bool contradiction = false; // some point saw all t colors: no proper extension
    LatticeVector contradiction_point{};
    std::vector<std::pair<LatticeVector, int>> contradiction_witnesses;
    std::vector<ForcedStep> transcript;
};

// Fixpoint of the forcing rule over the window, starting from a proper seed.
// The fixpoint is order-independent; shuffle_seed randomizes the processing
// order (used by the confluence tests) without changing the result.
PropagationResult propagate_forced(const DistanceSet& D, int t, const PartialColoring& seed,
                                   Window w,
                                   std::optional<unsigned long long> shuffle_seed = std::nullopt);

// Smallest ell such that every subinterval of length ell of the central half
// of the embedded span contains all t colors; realized as the worst same-
// missing-color gap, exact in Q(sqrt(m)).
struct DensityResult {
    QuadExt ell;
    int worst_color = -1;
    QuadExt gap_lo, gap_hi;   // realized gap
    QuadExt core_lo, core_hi; // central half of the span
    std::map<int, QuadExt> per_color_max_gap;
};
DensityResult density_gap(const DistanceSet& D, const PartialColoring& coloring, Window w);

// Window-scale evidence that no t-coloring of the line with monochromatic
// intervals exists: (1) a K_t justifies the seed, (2) propagation forces the
// whole window, (3) the forced coloring is a homomorphism coloring up to
// renaming, (4) the density bound strictly shrinks from the half window to
// the full window. All four must hold for "certified".
struct NoSlabCertificate {
    int t = 0;
    Window window;  // effective window
    Window half;    // nested half-size window

    bool clique_found = false;
    std::vector<LatticeVector> clique; // seed clique (size t when found)
    PartialColoring seed;

    bool contradiction = false;
    bool fully_forced = false;
    std::vector<ForcedStep> transcript;

    bool linear_matched = false;
    int wa = 0, wb = 0;
    std::vector<int> renaming; // forced color = renaming[linear color]

    bool density_ok = false;
    DensityResult density_full;
    DensityResult density_half;
    bool shrinks = false;

    bool certified = false;
    std::string interpretation;
};

NoSlabCertificate certify_no_t_slab(const DistanceSet& D, int t, Window w);

// Re-derives every component verdict from the payload alone: clique
// distances, each forcing step, the renamed linear agreement and the exact
// density bounds. Returns false (with a reason in *why) on any mismatch.
bool replay_no_slab_certificate(const NoSlabCertificate& cert, const DistanceSet& D,
                                std::string* why = nullptr);

// Point dump: "a,b,value,value_approx,color", rows in lexicographic (a, b)
// order, exact values in the fixed "p/q+r/s*s" shape.
void write_points_csv(std::ostream& os, const DistanceSet& D, const PartialColoring& coloring,
                      const Window& w);

} // namespace distchrom
