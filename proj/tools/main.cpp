// distchrom CLI: exact chromatic and slab-chromatic analysis of distance
// graphs on the real line. Prints one deterministic JSON report per
// invocation.
//
// Exit codes: 0 success/verified, 1 negative verdict, 2 usage or parse
// error, 3 budget exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "distchrom/report.hpp"

namespace {

using namespace distchrom;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
    std::string distances;
    int family = 0;
    int radicand = 2;
    long long window = 20;
    int t = 0;
    long long budget_states = 10'000'000;
    std::string json_path;
    std::string points_path;
    std::string slab_path;
    std::string source = "forced";
};

void add_common(CLI::App* cmd, Options& opt, bool needs_set) {
    auto* d = cmd->add_option("-d,--distances", opt.distances,
                              "distance set, e.g. \"1, 2, s, 2s, 1+s\" (s = sqrt(radicand))");
    auto* f = cmd->add_option("--family", opt.family,
                              "use the built-in family with parameter t instead of -d");
    if (needs_set) {
        d->excludes(f);
        f->excludes(d);
    }
    cmd->add_option("--radicand", opt.radicand, "square-free radicand m for \"s\" (default 2)");
    cmd->add_option("--window", opt.window, "window radius W, lattice rectangle [-W, W]^2");
    cmd->add_option("--t", opt.t, "number of colors");
    cmd->add_option("--budget-states", opt.budget_states,
                    "state budget for the integer transfer graph");
    cmd->add_option("--json", opt.json_path, "also write the report to this file");
    cmd->add_option("--points", opt.points_path, "CSV output path (emit-points)");
    cmd->add_option("--slab", opt.slab_path, "slab coloring file (verify-slab, emit-points)");
}

DistanceSet load_set(const Options& opt) {
    if (opt.family > 0) {
        return theorem_family(opt.family, opt.radicand);
    }
    if (opt.distances.empty()) {
        throw DomainError("a distance set is required (-d or --family)");
    }
    return parse_distance_set(opt.distances, opt.radicand);
}

int require_t(const Options& opt) {
    if (opt.t < 1) {
        throw DomainError("this command needs --t >= 1");
    }
    return opt.t;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------------------

int cmd_analyze(const Options& opt, Json& result, Json& certs) {
    (void)certs;
    const DistanceSet ds = load_set(opt);
    result = to_json(ds);
    return kExitOk;
}

int cmd_chi(const Options& opt, Json& result, Json& certs) {
    const DistanceSet ds = load_set(opt);
    result["rank"] = ds.rank;
    if (ds.rank == 1) {
        const IntegerChi chi = chi_integer(*ds.integer_form, opt.budget_states);
        result["chi"] = chi.chi;
        put_exact(result, "alpha", *ds.alpha);
        result["integer_form"] = *ds.integer_form;
        result["clique"] = to_json(clique_number_integer(*ds.integer_form));
        Json w;
        w["kind"] = "periodic_coloring";
        w["coloring"] = to_json(chi.witness);
        w["verified"] = verify_periodic(chi.witness, *ds.integer_form);
        certs.push_back(std::move(w));
        return kExitOk;
    }
    const Window w = Window::square(opt.window);
    const WindowChromatic wc = window_chromatic(ds, w, static_cast<int>(ds.size()) + 1);
    result["chi_lower"] = wc.chi;
    result["chi_lower_window"] = to_json(effective_window(ds, w));
    std::optional<LinearColoring> linear;
    int upper = 0;
    for (int t = wc.chi; t <= static_cast<int>(ds.size()) + 1 && !linear; ++t) {
        linear = find_linear_coloring(ds, t);
        if (linear) upper = t;
    }
    if (linear) {
        result["chi_upper"] = upper;
        result["linear_weights"] = Json::array({linear->wa, linear->wb});
        if (upper == wc.chi) {
            result["chi"] = wc.chi;
        }
    }
    return kExitOk;
}

int cmd_chi_m(const Options& opt, Json& result, Json& certs) {
    const DistanceSet ds = load_set(opt);
    const ChiMBounds b = chi_m_bounds(ds, opt.window, opt.budget_states);
    result = to_json(b);
    if (b.certificate) {
        certs.push_back(to_json(*b.certificate));
    }
    if (b.slab_witness) {
        Json w;
        w["kind"] = "slab_witness";
        w["slab"] = to_json(*b.slab_witness);
        w["verified"] = !verify_slab(*b.slab_witness, ds).has_value();
        certs.push_back(std::move(w));
    }
    return kExitOk;
}

int cmd_clique(const Options& opt, Json& result, Json& certs) {
    (void)certs;
    const DistanceSet ds = load_set(opt);
    const int t = require_t(opt);
    auto cq = find_clique(ds, t);
    result["t"] = t;
    result["found"] = cq.has_value();
    if (!cq) {
        return kExitNegative;
    }
    Json pts = Json::array();
    for (const LatticeVector& p : *cq) pts.push_back(to_json(p));
    result["witness"] = std::move(pts);
    return kExitOk;
}

int cmd_propagate(const Options& opt, Json& result, Json& certs) {
    (void)certs;
    const DistanceSet ds = load_set(opt);
    const int t = require_t(opt);
    const Window w = effective_window(ds, Window::square(opt.window));

    // Canonical seed: the largest clique of size <= t, colored 0, 1, ...
    PartialColoring seed;
    seed.t = t;
    std::vector<LatticeVector> clique;
    for (int s = t; s >= 1; --s) {
        if (auto cq = find_clique(ds, s)) {
            clique = *cq;
            break;
        }
    }
    for (std::size_t i = 0; i < clique.size(); ++i) {
        seed.assignments.emplace(clique[i], static_cast<int>(i));
    }

    const PropagationResult pr = propagate_forced(ds, t, seed, w);
    result["t"] = t;
    result["window"] = to_json(w);
    result["seed"] = to_json(seed);
    result["fully_forced"] = pr.fully_forced;
    result["assigned"] = pr.result.assignments.size();
    result["window_points"] = w.size();
    result["contradiction"] = pr.contradiction;
    if (pr.contradiction) {
        Json c;
        c["point"] = to_json(pr.contradiction_point);
        Json ws = Json::array();
        for (const auto& [q, col] : pr.contradiction_witnesses) {
            ws.push_back(Json::array({q.a, q.b, col}));
        }
        c["witnesses"] = std::move(ws);
        result["contradiction_witness"] = std::move(c);
        return kExitNegative;
    }
    Json steps = Json::array();
    for (const ForcedStep& s : pr.transcript) steps.push_back(to_json(s));
    result["transcript"] = std::move(steps);
    return kExitOk;
}

int cmd_certify(const Options& opt, Json& result, Json& certs) {
    const DistanceSet ds = load_set(opt);
    const int t = require_t(opt);
    const NoSlabCertificate cert = certify_no_t_slab(ds, t, Window::square(opt.window));
    result["t"] = t;
    result["certified"] = cert.certified;
    result["clique_found"] = cert.clique_found;
    result["fully_forced"] = cert.fully_forced;
    result["linear_matched"] = cert.linear_matched;
    if (cert.density_ok) {
        put_exact(result, "ell", cert.density_full.ell);
        put_exact(result, "ell_half_window", cert.density_half.ell);
        result["shrinks"] = cert.shrinks;
    }
    certs.push_back(to_json(cert));
    return cert.certified ? kExitOk : kExitNegative;
}

int cmd_verify_slab(const Options& opt, Json& result, Json& certs) {
    (void)certs;
    const DistanceSet ds = load_set(opt);
    if (opt.slab_path.empty()) {
        throw DomainError("verify-slab needs --slab <file>");
    }
    const SlabColoring sc = SlabColoring::from_text(read_file(opt.slab_path), opt.radicand);
    result["slab"] = to_json(sc);
    auto violation = verify_slab(sc, ds);
    result["proper"] = !violation.has_value();
    if (violation) {
        result["violation"] = to_json(*violation);
        return kExitNegative;
    }
    return kExitOk;
}

int cmd_emit_points(const Options& opt, Json& result, Json& certs) {
    (void)certs;
    const DistanceSet ds = load_set(opt);
    if (opt.points_path.empty()) {
        throw DomainError("emit-points needs --points <path>");
    }
    std::ofstream out(opt.points_path);
    if (!out) {
        throw DomainError("cannot write " + opt.points_path);
    }

    long long rows = 0;
    if (opt.source == "slab") {
        if (opt.slab_path.empty()) {
            throw DomainError("--source slab needs --slab <file>");
        }
        const SlabColoring sc = SlabColoring::from_text(read_file(opt.slab_path), opt.radicand);
        // One row per slab, sampled at its midpoint.
        out << "a,b,value,value_approx,color\n";
        char buf[64];
        const Rational half(BigInt(1), BigInt(2));
        for (std::size_t i = 0; i < sc.colors.size(); ++i) {
            const QuadExt mid = (sc.breakpoints[i] + sc.breakpoints[i + 1]) * QuadExt(half);
            std::snprintf(buf, sizeof(buf), "%.12g", mid.to_double());
            out << i << ",0," << mid.to_record() << "," << buf << "," << sc.colors[i] << "\n";
            ++rows;
        }
    } else {
        const Window w = effective_window(ds, Window::square(opt.window));
        PartialColoring coloring;
        if (opt.source == "linear") {
            const int t = require_t(opt);
            auto lc = find_linear_coloring(ds, t);
            if (!lc) {
                result["rows"] = 0;
                result["note"] = "no linear coloring with t colors";
                return kExitNegative;
            }
            coloring.t = t;
            for (const auto& p : window_points(w)) {
                coloring.assignments.emplace(p, lc->color(p));
            }
        } else if (opt.source == "forced") {
            const int t = require_t(opt);
            PartialColoring seed;
            seed.t = t;
            std::vector<LatticeVector> clique;
            for (int s = t; s >= 1 && clique.empty(); --s) {
                if (auto cq = find_clique(ds, s)) clique = *cq;
            }
            for (std::size_t i = 0; i < clique.size(); ++i) {
                seed.assignments.emplace(clique[i], static_cast<int>(i));
            }
            if (!w.empty()) {
                coloring = propagate_forced(ds, t, seed, w).result;
            } else {
                coloring.t = t;
            }
        } else {
            throw DomainError("unknown --source (expected linear, forced or slab)");
        }
        write_points_csv(out, ds, coloring, w);
        rows = static_cast<long long>(coloring.assignments.size());
        if (w.empty()) rows = 0;
    }
    result["rows"] = rows;
    result["path"] = opt.points_path;
    return kExitOk;
}

// ---------------------------------------------------------------------------

int run(int argc, char** argv) {
    CLI::App app{"exact chromatic numbers and slab colorings of distance graphs on the line"};
    app.require_subcommand(1);

    Options opt;
    struct Sub {
        const char* name;
        const char* help;
        int (*fn)(const Options&, Json&, Json&);
        bool needs_set;
    };
    const Sub subs[] = {
        {"analyze", "parse a distance set and report its lattice structure", cmd_analyze, true},
        {"chi", "chromatic number of the distance graph", cmd_chi, true},
        {"chi-m", "bounds on the slab chromatic number with certificates", cmd_chi_m, true},
        {"clique", "search a K_t witness (--t)", cmd_clique, true},
        {"propagate", "forced-coloring fixpoint from the canonical clique seed (--t)",
         cmd_propagate, true},
        {"certify-no-slab", "window certificate that no t-slab coloring exists (--t)",
         cmd_certify, true},
        {"verify-slab", "check a slab coloring file against a distance set (--slab)",
         cmd_verify_slab, true},
        {"emit-points", "dump a colored point set as CSV (--points, --source)", cmd_emit_points,
         true},
    };
    for (const Sub& s : subs) {
        CLI::App* cmd = app.add_subcommand(s.name, s.help);
        add_common(cmd, opt, s.needs_set);
        if (std::string(s.name) == "emit-points") {
            cmd->add_option("--source", opt.source, "coloring source: linear, forced or slab");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help
        }
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    CLI::App* active = app.get_subcommands().front();
    int (*fn)(const Options&, Json&, Json&) = nullptr;
    for (const Sub& s : subs) {
        if (active->get_name() == s.name) fn = s.fn;
    }

    Json report;
    report["command"] = active->get_name();
    Json input;
    if (opt.family > 0) {
        input["family"] = opt.family;
    }
    input["radicand"] = opt.radicand;
    Json params;
    params["window"] = opt.window;
    if (opt.t > 0) params["t"] = opt.t;
    params["budget_states"] = opt.budget_states;

    int code = kExitOk;
    Json result;
    Json certs = Json::array();
    try {
        const DistanceSet echo = load_set(opt); // canonical input echo
        input["distances"] = echo.canonical_text();
        report["input"] = input;
        report["params"] = params;
        code = fn(opt, result, certs);
        report["result"] = std::move(result);
    } catch (const ParseError& e) {
        report["input"] = input;
        report["params"] = params;
        report["error"] = Json{{"kind", "parse"}, {"message", e.what()}, {"position", e.position()}};
        code = kExitUsage;
    } catch (const BudgetError& e) {
        report["input"] = input;
        report["params"] = params;
        report["error"] = Json{{"kind", "budget"}, {"message", e.what()}};
        code = kExitBudget;
    } catch (const DomainError& e) {
        report["input"] = input;
        report["params"] = params;
        report["error"] = Json{{"kind", "domain"}, {"message", e.what()}};
        code = kExitUsage;
    }
    report["certificates"] = std::move(certs);
    report["version"] = kVersionTag;

    const std::string text = report.dump(2);
    std::cout << text << "\n";
    if (!opt.json_path.empty()) {
        std::ofstream jf(opt.json_path);
        jf << text << "\n";
    }
    return code;
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
