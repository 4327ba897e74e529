#include "distchrom/integer_coloring.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <unordered_map>

#include "distchrom/errors.hpp"

namespace distchrom {

namespace {

std::vector<long long> normalized(const std::vector<long long>& dprime) {
    if (dprime.empty()) {
        throw DomainError("integer distance set must be nonempty");
    }
    std::vector<long long> ds = dprime;
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    if (ds.front() < 1) {
        throw DomainError("integer distances must be positive");
    }
    return ds;
}

// Transfer graph over windows of the last d_max colors, encoded base t with
// the oldest position in the least significant digit. Appending color c maps
// enc to enc/t + c*t^(d_max-1).
class TransferGraph {
public:
    TransferGraph(const std::vector<long long>& ds, int t, long long budget)
        : ds_(ds), t_(t), budget_(budget), d_max_(ds.back()) {
        top_ = 1;
        for (long long i = 1; i < d_max_; ++i) top_ *= static_cast<std::uint64_t>(t_);
    }

    std::optional<PeriodicColoring> find_cycle() {
        enumerate_canonical_starts();
        expand_all();
        prune();
        return walk_cycle();
    }

private:
    const std::vector<long long>& ds_;
    int t_;
    long long budget_;
    long long d_max_;
    std::uint64_t top_ = 1; // t^(d_max-1)

    std::vector<std::uint64_t> enc_;
    std::unordered_map<std::uint64_t, std::uint32_t> id_;
    std::vector<std::vector<std::uint32_t>> succ_;
    std::vector<std::vector<std::uint32_t>> pred_;
    std::deque<std::uint32_t> frontier_;

    int digit(std::uint64_t enc, long long pos) const {
        for (long long i = 0; i < pos; ++i) enc /= static_cast<std::uint64_t>(t_);
        return static_cast<int>(enc % static_cast<std::uint64_t>(t_));
    }

    std::uint32_t intern(std::uint64_t enc) {
        auto it = id_.find(enc);
        if (it != id_.end()) return it->second;
        if (static_cast<long long>(enc_.size()) >= budget_) {
            throw BudgetError("transfer graph exceeded the state budget of " +
                              std::to_string(budget_) + " states");
        }
        const std::uint32_t nid = static_cast<std::uint32_t>(enc_.size());
        id_.emplace(enc, nid);
        enc_.push_back(enc);
        succ_.emplace_back();
        pred_.emplace_back();
        frontier_.push_back(nid);
        return nid;
    }

    // Every cycle can be recolored so that one of its states lists colors in
    // first-occurrence order, so searching from all canonical windows loses
    // nothing while dividing the start set by up to t!.
    void enumerate_canonical_starts() {
        std::vector<int> win(static_cast<std::size_t>(d_max_), -1);
        enumerate_rec(win, 0, 0);
    }

    void enumerate_rec(std::vector<int>& win, long long pos, int used) {
        if (pos == d_max_) {
            std::uint64_t enc = 0;
            for (long long i = d_max_ - 1; i >= 0; --i) {
                enc = enc * static_cast<std::uint64_t>(t_) +
                      static_cast<std::uint64_t>(win[static_cast<std::size_t>(i)]);
            }
            intern(enc);
            return;
        }
        const int limit = std::min(used, t_ - 1);
        for (int c = 0; c <= limit; ++c) {
            bool ok = true;
            for (long long d : ds_) {
                if (d <= pos && win[static_cast<std::size_t>(pos - d)] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            win[static_cast<std::size_t>(pos)] = c;
            enumerate_rec(win, pos + 1, c == used ? used + 1 : used);
            win[static_cast<std::size_t>(pos)] = -1;
        }
    }

    void expand_all() {
        while (!frontier_.empty()) {
            const std::uint32_t s = frontier_.front();
            frontier_.pop_front();
            const std::uint64_t enc = enc_[s];
            for (int c = 0; c < t_; ++c) {
                bool ok = true;
                for (long long d : ds_) {
                    if (digit(enc, d_max_ - d) == c) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                const std::uint64_t next =
                    enc / static_cast<std::uint64_t>(t_) + static_cast<std::uint64_t>(c) * top_;
                const std::uint32_t nid = intern(next);
                succ_[s].push_back(nid);
                pred_[nid].push_back(s);
            }
        }
    }

    // Iteratively delete states with no successor or no predecessor; a cycle
    // exists iff something survives.
    void prune() {
        const std::size_t n = enc_.size();
        alive_.assign(n, true);
        std::vector<std::uint32_t> outdeg(n), indeg(n);
        std::deque<std::uint32_t> work;
        for (std::size_t i = 0; i < n; ++i) {
            outdeg[i] = static_cast<std::uint32_t>(succ_[i].size());
            indeg[i] = static_cast<std::uint32_t>(pred_[i].size());
            if (outdeg[i] == 0 || indeg[i] == 0) work.push_back(static_cast<std::uint32_t>(i));
        }
        while (!work.empty()) {
            const std::uint32_t s = work.front();
            work.pop_front();
            if (!alive_[s]) continue;
            alive_[s] = false;
            for (std::uint32_t p : pred_[s]) {
                if (alive_[p] && --outdeg[p] == 0) work.push_back(p);
            }
            for (std::uint32_t q : succ_[s]) {
                if (alive_[q] && --indeg[q] == 0) work.push_back(q);
            }
        }
    }

    std::optional<PeriodicColoring> walk_cycle() {
        // Deterministic: start from the alive state with the smallest
        // encoding and always follow the smallest alive successor.
        std::uint32_t start = 0;
        bool found = false;
        std::uint64_t best = 0;
        for (std::size_t i = 0; i < enc_.size(); ++i) {
            if (alive_[i] && (!found || enc_[i] < best)) {
                start = static_cast<std::uint32_t>(i);
                best = enc_[i];
                found = true;
            }
        }
        if (!found) return std::nullopt;

        std::unordered_map<std::uint32_t, std::size_t> seen_at;
        std::vector<std::uint32_t> path;
        std::uint32_t cur = start;
        while (true) {
            auto it = seen_at.find(cur);
            if (it != seen_at.end()) {
                std::vector<std::uint32_t> cycle(path.begin() + static_cast<std::ptrdiff_t>(it->second),
                                                 path.end());
                return read_colors(cycle);
            }
            seen_at.emplace(cur, path.size());
            path.push_back(cur);
            std::uint32_t next = 0;
            bool have = false;
            std::uint64_t best_next = 0;
            for (std::uint32_t q : succ_[cur]) {
                if (alive_[q] && (!have || enc_[q] < best_next)) {
                    next = q;
                    best_next = enc_[q];
                    have = true;
                }
            }
            // Pruning guarantees an alive successor.
            cur = next;
        }
    }

    PeriodicColoring read_colors(const std::vector<std::uint32_t>& cycle) const {
        PeriodicColoring pc;
        pc.period = static_cast<long long>(cycle.size());
        pc.colors.reserve(cycle.size());
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            const std::uint32_t to = cycle[(i + 1) % cycle.size()];
            pc.colors.push_back(digit(enc_[to], d_max_ - 1));
        }
        return pc;
    }

    std::vector<bool> alive_;
};

// Rotation + color renaming do not affect properness; pick the
// lexicographically least presentation for stable witnesses.
PeriodicColoring canonicalize(const PeriodicColoring& pc) {
    if (pc.period > 4096) return pc;
    const std::size_t p = pc.colors.size();
    std::vector<int> best;
    for (std::size_t r = 0; r < p; ++r) {
        std::vector<int> rot(p);
        std::vector<int> rename(pc.colors.size() + 1, -1);
        int next = 0;
        for (std::size_t i = 0; i < p; ++i) {
            const int c = pc.colors[(r + i) % p];
            if (rename[static_cast<std::size_t>(c)] < 0) rename[static_cast<std::size_t>(c)] = next++;
            rot[i] = rename[static_cast<std::size_t>(c)];
        }
        if (best.empty() || rot < best) best = std::move(rot);
    }
    return PeriodicColoring{pc.period, best};
}

} // namespace

bool verify_periodic(const PeriodicColoring& pc, const std::vector<long long>& dprime) {
    if (pc.period < 1 || pc.colors.size() != static_cast<std::size_t>(pc.period)) return false;
    for (long long r = 0; r < pc.period; ++r) {
        for (long long d : dprime) {
            if (pc.colors[static_cast<std::size_t>(r)] ==
                pc.colors[static_cast<std::size_t>((r + d) % pc.period)]) {
                return false;
            }
        }
    }
    return true;
}

std::optional<PeriodicColoring> is_t_colorable_integer(const std::vector<long long>& dprime,
                                                       int t, long long state_budget) {
    const std::vector<long long> ds = normalized(dprime);
    if (t < 1) {
        throw DomainError("color count must be at least 1");
    }
    if (t == 1) {
        return std::nullopt; // any forbidden distance kills the single color
    }

    const long long d_max = ds.back();
    BigInt space = 1;
    for (long long i = 0; i < d_max; ++i) space *= t;
    if (space > state_budget || space > (BigInt(1) << 62)) {
        throw BudgetError("window space t^d_max = " + std::to_string(t) + "^" +
                          std::to_string(d_max) + " exceeds the state budget of " +
                          std::to_string(state_budget));
    }

    TransferGraph g(ds, t, state_budget);
    auto pc = g.find_cycle();
    if (!pc) return std::nullopt;
    PeriodicColoring out = canonicalize(*pc);
    if (!verify_periodic(out, ds)) {
        throw DomainError("internal error: transfer-graph witness failed verification");
    }
    return out;
}

IntegerChi chi_integer(const std::vector<long long>& dprime, long long state_budget) {
    const std::vector<long long> ds = normalized(dprime);
    const int lower = clique_number_integer(ds).size;
    const int upper = static_cast<int>(ds.size()) + 1; // greedy bound
    for (int t = lower; t <= upper; ++t) {
        auto pc = is_t_colorable_integer(ds, t, state_budget);
        if (pc) {
            return IntegerChi{t, std::move(*pc)};
        }
    }
    throw DomainError("internal error: greedy upper bound violated");
}

IntegerClique clique_number_integer(const std::vector<long long>& dprime) {
    const std::vector<long long> ds = normalized(dprime);
    const auto is_dist = [&](long long v) {
        return std::binary_search(ds.begin(), ds.end(), v);
    };

    // Any clique translates to one whose minimum is 0; the other members are
    // then distances themselves.
    std::vector<long long> best{0};
    std::vector<long long> cur{0};

    const std::function<void(std::size_t)> dfs = [&](std::size_t from) {
        if (cur.size() + (ds.size() - from) <= best.size()) return;
        for (std::size_t i = from; i < ds.size(); ++i) {
            const long long v = ds[i];
            bool ok = true;
            for (long long u : cur) {
                if (u != v && !is_dist(v - u)) { // v > u for all current members
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            cur.push_back(v);
            if (cur.size() > best.size()) best = cur;
            dfs(i + 1);
            cur.pop_back();
        }
    };
    dfs(0);
    return IntegerClique{static_cast<int>(best.size()), best};
}

} // namespace distchrom
