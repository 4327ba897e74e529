#include "distchrom/lattice_graph.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <ostream>
#include <random>
#include <set>

#include "distchrom/errors.hpp"

namespace distchrom {

namespace {

void ensure_window_budget(const Window& w) {
    if (w.size() > kMaxWindowPoints) {
        throw BudgetError("window holds " + std::to_string(w.size()) +
                          " points, above the limit of " + std::to_string(kMaxWindowPoints));
    }
}

std::string point_str(const LatticeVector& p) {
    return "(" + std::to_string(p.a) + "," + std::to_string(p.b) + ")";
}

// Index structure over the points of a window, lex order.
struct Grid {
    Window w;
    std::vector<LatticeVector> points;

    explicit Grid(const Window& win) : w(win), points(window_points(win)) {}

    long long b_span() const { return w.b_hi - w.b_lo + 1; }

    int index_of(const LatticeVector& p) const {
        if (!w.contains(p)) return -1;
        return static_cast<int>((p.a - w.a_lo) * b_span() + (p.b - w.b_lo));
    }
};

} // namespace

Window effective_window(const DistanceSet& D, Window w) {
    if (D.rank == 1) {
        w.b_lo = 0;
        w.b_hi = 0;
    }
    return w;
}

Window half_window(const Window& w) {
    if (w.empty()) return w;
    Window h = w;
    const long long da = (w.a_hi - w.a_lo + 2) / 4;
    const long long db = (w.b_hi - w.b_lo + 2) / 4;
    h.a_lo += da;
    h.a_hi -= da;
    h.b_lo += db;
    h.b_hi -= db;
    if (h.empty()) return w; // too small to halve
    return h;
}

std::vector<LatticeVector> window_points(const Window& w) {
    std::vector<LatticeVector> pts;
    if (w.empty()) return pts;
    pts.reserve(static_cast<std::size_t>(w.size()));
    for (long long a = w.a_lo; a <= w.a_hi; ++a) {
        for (long long b = w.b_lo; b <= w.b_hi; ++b) {
            pts.push_back(LatticeVector{a, b});
        }
    }
    return pts;
}

bool PartialColoring::total_on(const Window& w) const {
    if (w.empty()) return true;
    if (static_cast<long long>(assignments.size()) < w.size()) return false;
    for (long long a = w.a_lo; a <= w.a_hi; ++a) {
        for (long long b = w.b_lo; b <= w.b_hi; ++b) {
            if (!assignments.contains(LatticeVector{a, b})) return false;
        }
    }
    return true;
}

bool adjacent(const LatticeVector& x, const LatticeVector& y, const DistanceSet& D) {
    if (x == y) return false;
    const QuadExt diff = (D.value_of(x) - D.value_of(y)).abs();
    return std::binary_search(D.elements.begin(), D.elements.end(), diff);
}

std::vector<LatticeVector> neighbor_deltas(const DistanceSet& D) {
    std::vector<LatticeVector> deltas;
    deltas.reserve(2 * D.lattice_coords.size());
    for (const LatticeVector& c : D.lattice_coords) {
        deltas.push_back(c);
        deltas.push_back(LatticeVector{-c.a, -c.b});
    }
    std::sort(deltas.begin(), deltas.end());
    return deltas;
}

std::optional<std::pair<LatticeVector, LatticeVector>> find_conflict(const DistanceSet& D,
                                                                     const PartialColoring& c) {
    const auto deltas = neighbor_deltas(D);
    for (const auto& [p, color] : c.assignments) {
        for (const LatticeVector& d : deltas) {
            const LatticeVector q{p.a + d.a, p.b + d.b};
            if (q < p) continue; // each pair once
            auto it = c.assignments.find(q);
            if (it != c.assignments.end() && it->second == color) {
                return std::make_pair(p, q);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::vector<LatticeVector>> find_clique(const DistanceSet& D, int t,
                                                      long long node_budget) {
    if (t < 1) {
        throw DomainError("clique size must be at least 1");
    }
    const LatticeVector origin{0, 0};
    if (t == 1) return std::vector<LatticeVector>{origin};

    // Candidates in ascending embedded value = element order.
    const std::vector<LatticeVector>& cand = D.lattice_coords;
    std::vector<LatticeVector> cur{origin};
    long long visited = 0;

    std::vector<LatticeVector> found;
    const std::function<bool(std::size_t)> dfs = [&](std::size_t from) -> bool {
        if (cur.size() == static_cast<std::size_t>(t)) {
            found = cur;
            return true;
        }
        if (cur.size() + (cand.size() - from) < static_cast<std::size_t>(t)) return false;
        for (std::size_t i = from; i < cand.size(); ++i) {
            if (++visited > node_budget) {
                throw BudgetError("clique search exceeded its node budget");
            }
            const LatticeVector& v = cand[i];
            bool ok = true;
            for (const LatticeVector& u : cur) {
                if (!adjacent(u, v, D)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            cur.push_back(v);
            if (dfs(i + 1)) return true;
            cur.pop_back();
        }
        return false;
    };

    if (dfs(0)) return found;
    return std::nullopt;
}

int LinearColoring::color(const LatticeVector& p) const {
    const long long tt = t;
    long long r = ((p.a % tt) * wa + (p.b % tt) * wb) % tt;
    if (r < 0) r += tt;
    return static_cast<int>(r);
}

bool linear_coloring_valid(const DistanceSet& D, const LinearColoring& lc) {
    if (lc.t < 1) return false;
    for (const LatticeVector& c : D.lattice_coords) {
        if (lc.color(c) == 0) return false;
    }
    return true;
}

std::optional<LinearColoring> find_linear_coloring(const DistanceSet& D, int t) {
    if (t < 1) {
        throw DomainError("color count must be at least 1");
    }
    for (int wa = 0; wa < t; ++wa) {
        for (int wb = 0; wb < t; ++wb) {
            LinearColoring lc{t, wa, wb};
            if (linear_coloring_valid(D, lc)) return lc;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// window_chromatic

namespace {

class DsaturSolver {
public:
    DsaturSolver(const Grid& grid, const std::vector<std::vector<int>>& nbrs, int t,
                 long long budget, long long& decisions)
        : grid_(grid), nbrs_(nbrs), t_(t), budget_(budget), decisions_(decisions) {
        const std::size_t n = grid_.points.size();
        color_.assign(n, -1);
        cnt_.assign(n, std::vector<int>(static_cast<std::size_t>(t_), 0));
        satur_.assign(n, 0);
        usage_.assign(static_cast<std::size_t>(t_), 0);
    }

    bool solve() { return extend(); }

    const std::vector<int>& colors() const { return color_; }

private:
    const Grid& grid_;
    const std::vector<std::vector<int>>& nbrs_;
    int t_;
    long long budget_;
    long long& decisions_;

    std::vector<int> color_;
    std::vector<std::vector<int>> cnt_;
    std::vector<int> satur_;
    std::vector<int> usage_;

    int pick() const {
        int best = -1;
        for (std::size_t i = 0; i < color_.size(); ++i) {
            if (color_[i] >= 0) continue;
            if (best < 0 || satur_[i] > satur_[static_cast<std::size_t>(best)]) {
                best = static_cast<int>(i);
            }
        }
        return best; // lex tie-break: first index wins (points are in lex order)
    }

    void assign(int v, int c) {
        color_[static_cast<std::size_t>(v)] = c;
        ++usage_[static_cast<std::size_t>(c)];
        for (int u : nbrs_[static_cast<std::size_t>(v)]) {
            if (++cnt_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] == 1) {
                ++satur_[static_cast<std::size_t>(u)];
            }
        }
    }

    void unassign(int v, int c) {
        color_[static_cast<std::size_t>(v)] = -1;
        --usage_[static_cast<std::size_t>(c)];
        for (int u : nbrs_[static_cast<std::size_t>(v)]) {
            if (--cnt_[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] == 0) {
                --satur_[static_cast<std::size_t>(u)];
            }
        }
    }

    bool extend() {
        const int v = pick();
        if (v < 0) return true;
        // New colors are interchangeable: allow at most one fresh color.
        int hi = -1;
        for (int c = t_ - 1; c >= 0; --c) {
            if (usage_[static_cast<std::size_t>(c)] > 0) {
                hi = c;
                break;
            }
        }
        const int limit = std::min(hi + 1, t_ - 1);
        for (int c = 0; c <= limit; ++c) {
            if (cnt_[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)] > 0) continue;
            if (++decisions_ > budget_) {
                throw BudgetError("window chromatic search exceeded its decision budget");
            }
            assign(v, c);
            if (extend()) return true;
            unassign(v, c);
        }
        return false;
    }
};

} // namespace

WindowChromatic window_chromatic(const DistanceSet& D, Window w, int t_max,
                                 long long decision_budget) {
    if (t_max < 1) {
        throw DomainError("t_max must be at least 1");
    }
    const Window we = effective_window(D, w);
    if (we.empty()) {
        throw DomainError("window is empty");
    }
    ensure_window_budget(we);

    const Grid grid(we);
    const auto deltas = neighbor_deltas(D);
    std::vector<std::vector<int>> nbrs(grid.points.size());
    for (std::size_t i = 0; i < grid.points.size(); ++i) {
        for (const LatticeVector& d : deltas) {
            const LatticeVector q{grid.points[i].a + d.a, grid.points[i].b + d.b};
            const int j = grid.index_of(q);
            if (j >= 0) nbrs[i].push_back(j);
        }
    }

    // Clique lower bound, when the normalized witness fits in the window.
    int lb = 1;
    for (int t = 2; t <= t_max + 1; ++t) {
        auto cq = find_clique(D, t);
        if (!cq) break;
        bool inside = true;
        for (const LatticeVector& p : *cq) {
            if (!we.contains(p)) {
                inside = false;
                break;
            }
        }
        if (!inside) break;
        lb = t;
    }
    if (lb > t_max) {
        return WindowChromatic{t_max, true, PartialColoring{}};
    }

    long long decisions = 0;
    for (int t = lb; t <= t_max; ++t) {
        DsaturSolver solver(grid, nbrs, t, decision_budget, decisions);
        if (solver.solve()) {
            PartialColoring witness;
            witness.t = t;
            for (std::size_t i = 0; i < grid.points.size(); ++i) {
                witness.assignments.emplace(grid.points[i], solver.colors()[i]);
            }
            return WindowChromatic{t, false, std::move(witness)};
        }
    }
    return WindowChromatic{t_max, true, PartialColoring{}};
}

// ---------------------------------------------------------------------------
// propagate_forced

PropagationResult propagate_forced(const DistanceSet& D, int t, const PartialColoring& seed,
                                   Window w, std::optional<unsigned long long> shuffle_seed) {
    if (t < 1) {
        throw DomainError("color count must be at least 1");
    }
    if (seed.t != t) {
        throw DomainError("seed color count does not match t");
    }
    const Window we = effective_window(D, w);
    if (we.empty()) {
        throw DomainError("window is empty");
    }
    ensure_window_budget(we);

    for (const auto& [p, c] : seed.assignments) {
        if (c < 0 || c >= t) {
            throw DomainError("seed color out of range at " + point_str(p));
        }
        if (!we.contains(p)) {
            throw DomainError("seed point " + point_str(p) + " outside the window");
        }
    }
    // Seed properness is a precondition, checked exactly.
    for (auto it = seed.assignments.begin(); it != seed.assignments.end(); ++it) {
        for (auto jt = std::next(it); jt != seed.assignments.end(); ++jt) {
            if (it->second == jt->second && adjacent(it->first, jt->first, D)) {
                throw DomainError("seed is not proper: " + point_str(it->first) + " and " +
                                  point_str(jt->first) + " share color " +
                                  std::to_string(it->second));
            }
        }
    }

    const Grid grid(we);
    const auto deltas = neighbor_deltas(D);
    std::vector<int> color(grid.points.size(), -1);
    for (const auto& [p, c] : seed.assignments) {
        color[static_cast<std::size_t>(grid.index_of(p))] = c;
    }

    PropagationResult res;
    res.result.t = t;

    std::vector<int> order(grid.points.size());
    std::iota(order.begin(), order.end(), 0);
    std::mt19937_64 rng(shuffle_seed.value_or(0));

    std::vector<int> seen_color(static_cast<std::size_t>(t), -1);
    bool changed = true;
    int round = 0;
    while (changed) {
        changed = false;
        ++round;
        if (shuffle_seed) {
            std::shuffle(order.begin(), order.end(), rng);
        }
        for (int idx : order) {
            if (color[static_cast<std::size_t>(idx)] >= 0) continue;
            const LatticeVector p = grid.points[static_cast<std::size_t>(idx)];
            std::vector<std::pair<LatticeVector, int>> witnesses;
            std::fill(seen_color.begin(), seen_color.end(), -1);
            int distinct = 0;
            for (std::size_t di = 0; di < deltas.size(); ++di) {
                const LatticeVector q{p.a + deltas[di].a, p.b + deltas[di].b};
                const int j = grid.index_of(q);
                if (j < 0) continue;
                const int c = color[static_cast<std::size_t>(j)];
                if (c < 0 || seen_color[static_cast<std::size_t>(c)] >= 0) continue;
                seen_color[static_cast<std::size_t>(c)] = 1;
                witnesses.emplace_back(q, c);
                ++distinct;
            }
            if (distinct == t) {
                std::sort(witnesses.begin(), witnesses.end(),
                          [](const auto& x, const auto& y) { return x.second < y.second; });
                res.contradiction = true;
                res.contradiction_point = p;
                res.contradiction_witnesses = std::move(witnesses);
                for (std::size_t i = 0; i < grid.points.size(); ++i) {
                    if (color[i] >= 0) res.result.assignments.emplace(grid.points[i], color[i]);
                }
                res.fully_forced = false;
                return res;
            }
            if (distinct == t - 1) {
                int missing = -1;
                for (int c = 0; c < t; ++c) {
                    if (seen_color[static_cast<std::size_t>(c)] < 0) {
                        missing = c;
                        break;
                    }
                }
                std::sort(witnesses.begin(), witnesses.end(),
                          [](const auto& x, const auto& y) { return x.second < y.second; });
                color[static_cast<std::size_t>(idx)] = missing;
                res.transcript.push_back(ForcedStep{p, missing, std::move(witnesses)});
                changed = true;
            }
        }
    }

    bool total = true;
    for (std::size_t i = 0; i < grid.points.size(); ++i) {
        if (color[i] >= 0) {
            res.result.assignments.emplace(grid.points[i], color[i]);
        } else {
            total = false;
        }
    }
    res.fully_forced = total;
    return res;
}

// ---------------------------------------------------------------------------
// density_gap

DensityResult density_gap(const DistanceSet& D, const PartialColoring& coloring, Window w) {
    const Window we = effective_window(D, w);
    if (we.empty()) {
        throw DomainError("window is empty");
    }
    ensure_window_budget(we);
    if (coloring.t < 1) {
        throw DomainError("coloring has no colors");
    }
    if (!coloring.total_on(we)) {
        throw DomainError("density_gap requires a coloring total on the window");
    }

    std::vector<std::pair<QuadExt, int>> items;
    items.reserve(static_cast<std::size_t>(we.size()));
    std::set<int> present;
    for (const auto& p : window_points(we)) {
        const int c = coloring.assignments.at(p);
        items.emplace_back(D.value_of(p), c);
        present.insert(c);
    }
    if (static_cast<int>(present.size()) < coloring.t) {
        throw DomainError("fewer than t colors present in the window");
    }
    std::sort(items.begin(), items.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    const QuadExt lo = items.front().first;
    const QuadExt hi = items.back().first;
    const QuadExt quarter = (hi - lo) * QuadExt(Rational(BigInt(1), BigInt(4)));

    DensityResult res;
    res.core_lo = lo + quarter;
    res.core_hi = hi - quarter;

    bool have_ell = false;
    for (int c = 0; c < coloring.t; ++c) {
        QuadExt prev = res.core_lo;
        QuadExt best_gap(Rational(0));
        QuadExt best_lo = res.core_lo, best_hi = res.core_lo;
        bool have = false;
        for (const auto& [v, vc] : items) {
            if (vc != c || v < res.core_lo || v > res.core_hi) continue;
            const QuadExt gap = v - prev;
            if (!have || gap > best_gap) {
                best_gap = gap;
                best_lo = prev;
                best_hi = v;
                have = true;
            }
            prev = v;
        }
        const QuadExt tail = res.core_hi - prev;
        if (!have || tail > best_gap) {
            best_gap = tail;
            best_lo = prev;
            best_hi = res.core_hi;
        }
        res.per_color_max_gap.emplace(c, best_gap);
        if (!have_ell || best_gap > res.ell) {
            res.ell = best_gap;
            res.worst_color = c;
            res.gap_lo = best_lo;
            res.gap_hi = best_hi;
            have_ell = true;
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// certify_no_t_slab

namespace {

constexpr const char* kInterpretation =
    "Slab colorings are read with positive-length monochromatic intervals. Within the "
    "window core, every proper t-coloring of the lattice window extends the seed clique "
    "up to color names, and every interval of length ell meets all t colors, so no "
    "monochromatic interval of length >= ell survives; ell shrinking strictly with the "
    "window is the reported evidence trend.";

// Try to explain the forced coloring as a renamed homomorphism coloring.
bool match_linear(const DistanceSet& D, const PartialColoring& forced, int t, const Window& we,
                  int& out_wa, int& out_wb, std::vector<int>& out_renaming) {
    for (int wa = 0; wa < t; ++wa) {
        for (int wb = 0; wb < t; ++wb) {
            const LinearColoring lc{t, wa, wb};
            if (!linear_coloring_valid(D, lc)) continue;
            std::vector<int> ren(static_cast<std::size_t>(t), -1);
            bool ok = true;
            for (const auto& [p, fc] : forced.assignments) {
                if (!we.contains(p)) continue;
                const int c = lc.color(p);
                if (ren[static_cast<std::size_t>(c)] < 0) {
                    ren[static_cast<std::size_t>(c)] = fc;
                } else if (ren[static_cast<std::size_t>(c)] != fc) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            std::vector<bool> used(static_cast<std::size_t>(t), false);
            for (int r : ren) {
                if (r < 0 || used[static_cast<std::size_t>(r)]) {
                    ok = false;
                    break;
                }
                used[static_cast<std::size_t>(r)] = true;
            }
            if (ok) {
                out_wa = wa;
                out_wb = wb;
                out_renaming = std::move(ren);
                return true;
            }
        }
    }
    return false;
}

} // namespace

NoSlabCertificate certify_no_t_slab(const DistanceSet& D, int t, Window w) {
    if (t < 1) {
        throw DomainError("color count must be at least 1");
    }
    NoSlabCertificate cert;
    cert.t = t;
    cert.window = effective_window(D, w);
    cert.half = half_window(cert.window);
    cert.interpretation = kInterpretation;
    ensure_window_budget(cert.window);

    // Seed from a K_t when one exists; otherwise the largest clique found
    // (the follow-up components then record why certification fails).
    auto cq = find_clique(D, t);
    if (cq) {
        cert.clique_found = true;
        cert.clique = *cq;
    } else {
        for (int s = t - 1; s >= 1; --s) {
            auto smaller = find_clique(D, s);
            if (smaller) {
                cert.clique = *smaller;
                break;
            }
        }
    }
    for (const LatticeVector& p : cert.clique) {
        if (!cert.window.contains(p)) {
            throw DomainError("window too small to embed the seed clique");
        }
    }
    cert.seed.t = t;
    for (std::size_t i = 0; i < cert.clique.size(); ++i) {
        cert.seed.assignments.emplace(cert.clique[i], static_cast<int>(i));
    }

    PropagationResult prop = propagate_forced(D, t, cert.seed, cert.window);
    cert.contradiction = prop.contradiction;
    cert.fully_forced = prop.fully_forced;
    cert.transcript = std::move(prop.transcript);

    if (cert.fully_forced) {
        cert.linear_matched =
            match_linear(D, prop.result, t, cert.window, cert.wa, cert.wb, cert.renaming);

        cert.density_full = density_gap(D, prop.result, cert.window);
        PartialColoring on_half;
        on_half.t = t;
        for (const auto& p : window_points(cert.half)) {
            on_half.assignments.emplace(p, prop.result.assignments.at(p));
        }
        cert.density_half = density_gap(D, on_half, cert.half);
        cert.density_ok = true;
        cert.shrinks = cert.density_full.ell < cert.density_half.ell;
    }

    cert.certified =
        cert.clique_found && cert.fully_forced && cert.linear_matched && cert.shrinks;
    return cert;
}

// ---------------------------------------------------------------------------
// replay

namespace {

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

} // namespace

bool replay_no_slab_certificate(const NoSlabCertificate& cert, const DistanceSet& D,
                                std::string* why) {
    const Window we = cert.window;
    if (we != effective_window(D, we)) return fail(why, "window does not fit the set rank");
    if (cert.half != half_window(we)) return fail(why, "half window mismatch");
    ensure_window_budget(we);

    // Clique component.
    if (cert.clique_found && cert.clique.size() != static_cast<std::size_t>(cert.t)) {
        return fail(why, "claimed clique has the wrong size");
    }
    for (std::size_t i = 0; i < cert.clique.size(); ++i) {
        if (!we.contains(cert.clique[i])) return fail(why, "clique point outside the window");
        for (std::size_t j = i + 1; j < cert.clique.size(); ++j) {
            if (!adjacent(cert.clique[i], cert.clique[j], D)) {
                return fail(why, "clique pair not adjacent: " + point_str(cert.clique[i]) + " " +
                                     point_str(cert.clique[j]));
            }
        }
    }
    if (!cert.clique_found) {
        if (find_clique(D, cert.t)) return fail(why, "a K_t exists but was claimed absent");
    }

    // Seed = clique colored 0..size-1 in ascending value order.
    if (cert.seed.t != cert.t || cert.seed.assignments.size() != cert.clique.size()) {
        return fail(why, "seed does not match the clique");
    }
    for (std::size_t i = 0; i < cert.clique.size(); ++i) {
        auto it = cert.seed.assignments.find(cert.clique[i]);
        if (it == cert.seed.assignments.end() || it->second != static_cast<int>(i)) {
            return fail(why, "seed coloring is not the canonical clique seed");
        }
    }

    // Replay the transcript step by step.
    const Grid grid(we);
    std::vector<int> color(grid.points.size(), -1);
    for (const auto& [p, c] : cert.seed.assignments) {
        const int idx = grid.index_of(p);
        if (idx < 0) return fail(why, "seed point outside the window");
        color[static_cast<std::size_t>(idx)] = c;
    }
    std::vector<bool> seen(static_cast<std::size_t>(cert.t), false);
    for (const ForcedStep& step : cert.transcript) {
        const int idx = grid.index_of(step.point);
        if (idx < 0) return fail(why, "forced point outside the window");
        if (color[static_cast<std::size_t>(idx)] >= 0) {
            return fail(why, "forced point already colored: " + point_str(step.point));
        }
        std::fill(seen.begin(), seen.end(), false);
        int distinct = 0;
        for (const auto& [q, c] : step.witnesses) {
            const int qi = grid.index_of(q);
            if (qi < 0 || color[static_cast<std::size_t>(qi)] != c) {
                return fail(why, "witness not colored as claimed at " + point_str(q));
            }
            if (!adjacent(step.point, q, D)) {
                return fail(why, "witness not adjacent to " + point_str(step.point));
            }
            if (c < 0 || c >= cert.t || seen[static_cast<std::size_t>(c)]) {
                return fail(why, "witness colors not distinct");
            }
            seen[static_cast<std::size_t>(c)] = true;
            ++distinct;
        }
        if (distinct != cert.t - 1) {
            return fail(why, "forcing step lacks t-1 distinct witness colors");
        }
        if (seen[static_cast<std::size_t>(step.color)]) {
            return fail(why, "forced color appears among the witnesses");
        }
        color[static_cast<std::size_t>(idx)] = step.color;
    }

    // Properness of the rebuilt coloring (delta scan; deltas cross-checked
    // against the exact adjacency route).
    const auto deltas = neighbor_deltas(D);
    for (const LatticeVector& d : deltas) {
        if (!adjacent(LatticeVector{0, 0}, d, D)) {
            return fail(why, "internal delta/adjacency mismatch");
        }
    }
    PartialColoring rebuilt;
    rebuilt.t = cert.t;
    for (std::size_t i = 0; i < grid.points.size(); ++i) {
        if (color[i] >= 0) rebuilt.assignments.emplace(grid.points[i], color[i]);
    }
    if (auto conflict = find_conflict(D, rebuilt)) {
        return fail(why, "rebuilt coloring is improper at " + point_str(conflict->first));
    }

    const bool total = rebuilt.assignments.size() == grid.points.size();
    if (total != cert.fully_forced) {
        return fail(why, "fully_forced claim does not match the transcript");
    }

    if (cert.linear_matched) {
        const LinearColoring lc{cert.t, cert.wa, cert.wb};
        if (!linear_coloring_valid(D, lc)) return fail(why, "claimed weights are invalid");
        if (cert.renaming.size() != static_cast<std::size_t>(cert.t)) {
            return fail(why, "renaming has the wrong size");
        }
        std::vector<bool> used(static_cast<std::size_t>(cert.t), false);
        for (int r : cert.renaming) {
            if (r < 0 || r >= cert.t || used[static_cast<std::size_t>(r)]) {
                return fail(why, "renaming is not a bijection");
            }
            used[static_cast<std::size_t>(r)] = true;
        }
        for (const auto& [p, fc] : rebuilt.assignments) {
            if (cert.renaming[static_cast<std::size_t>(lc.color(p))] != fc) {
                return fail(why, "forced coloring deviates from the renamed linear coloring at " +
                                     point_str(p));
            }
        }
    }

    if (cert.density_ok) {
        if (!total) return fail(why, "density computed on a partial coloring");
        const DensityResult full = density_gap(D, rebuilt, we);
        if (full.ell != cert.density_full.ell) {
            return fail(why, "full-window density bound does not reproduce");
        }
        PartialColoring on_half;
        on_half.t = cert.t;
        for (const auto& p : window_points(cert.half)) {
            on_half.assignments.emplace(p, rebuilt.assignments.at(p));
        }
        const DensityResult halfd = density_gap(D, on_half, cert.half);
        if (halfd.ell != cert.density_half.ell) {
            return fail(why, "half-window density bound does not reproduce");
        }
        if (cert.shrinks != (full.ell < halfd.ell)) {
            return fail(why, "shrink verdict does not reproduce");
        }
    } else if (cert.shrinks) {
        return fail(why, "shrink claimed without density bounds");
    }

    const bool expect = cert.clique_found && cert.fully_forced && cert.linear_matched &&
                        cert.shrinks;
    if (cert.certified != expect) {
        return fail(why, "certified flag does not match the components");
    }
    return true;
}

void write_points_csv(std::ostream& os, const DistanceSet& D, const PartialColoring& coloring,
                      const Window& w) {
    os << "a,b,value,value_approx,color\n";
    char buf[64];
    for (const auto& [p, c] : coloring.assignments) {
        if (!w.contains(p)) continue;
        const QuadExt v = D.value_of(p);
        std::snprintf(buf, sizeof(buf), "%.12g", v.to_double());
        os << p.a << "," << p.b << "," << v.to_record() << "," << buf << "," << c << "\n";
    }
}

} // namespace distchrom
