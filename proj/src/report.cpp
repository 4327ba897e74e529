#include "distchrom/report.hpp"

namespace distchrom {

namespace {

QuadExt exact_from(const Json& j, int radicand) {
    return parse_quad_expr(j.get<std::string>(), radicand);
}

} // namespace

void put_exact(Json& obj, const std::string& key, const QuadExt& v) {
    obj[key] = v.to_string();
    obj[key + "_approx"] = v.to_double();
}

Json to_json(const LatticeVector& p) { return Json::array({p.a, p.b}); }

Json to_json(const Window& w) { return Json::array({w.a_lo, w.a_hi, w.b_lo, w.b_hi}); }

Window window_from_json(const Json& j) {
    return Window{j.at(0).get<long long>(), j.at(1).get<long long>(), j.at(2).get<long long>(),
                  j.at(3).get<long long>()};
}

Json to_json(const DistanceSet& ds) {
    Json j;
    j["text"] = ds.canonical_text();
    j["radicand"] = ds.radicand;
    j["rank"] = ds.rank;
    j["commensurable"] = ds.rank == 1;
    Json elems = Json::array();
    for (const QuadExt& e : ds.elements) {
        Json item;
        put_exact(item, "value", e);
        elems.push_back(std::move(item));
    }
    j["elements"] = std::move(elems);
    Json basis = Json::array();
    for (const QuadExt& b : ds.basis) {
        Json item;
        put_exact(item, "value", b);
        basis.push_back(std::move(item));
    }
    j["basis"] = std::move(basis);
    Json coords = Json::array();
    for (const LatticeVector& c : ds.lattice_coords) coords.push_back(to_json(c));
    j["lattice_coords"] = std::move(coords);
    if (ds.alpha) {
        put_exact(j, "alpha", *ds.alpha);
    }
    if (ds.integer_form) {
        j["integer_form"] = *ds.integer_form;
    }
    return j;
}

Json to_json(const PeriodicColoring& pc) {
    Json j;
    j["period"] = pc.period;
    j["colors"] = pc.colors;
    return j;
}

Json to_json(const IntegerClique& c) {
    Json j;
    j["size"] = c.size;
    j["witness"] = c.witness;
    return j;
}

Json to_json(const PartialColoring& c) {
    Json j;
    j["t"] = c.t;
    Json rows = Json::array();
    for (const auto& [p, color] : c.assignments) {
        rows.push_back(Json::array({p.a, p.b, color}));
    }
    j["assignments"] = std::move(rows);
    return j;
}

PartialColoring partial_coloring_from_json(const Json& j, int t) {
    PartialColoring c;
    c.t = j.contains("t") ? j.at("t").get<int>() : t;
    for (const Json& row : j.at("assignments")) {
        c.assignments.emplace(LatticeVector{row.at(0).get<long long>(), row.at(1).get<long long>()},
                              row.at(2).get<int>());
    }
    return c;
}

Json to_json(const ForcedStep& s) {
    Json j;
    j["point"] = to_json(s.point);
    j["color"] = s.color;
    Json ws = Json::array();
    for (const auto& [q, c] : s.witnesses) {
        ws.push_back(Json::array({q.a, q.b, c}));
    }
    j["witnesses"] = std::move(ws);
    return j;
}

Json to_json(const DensityResult& d) {
    Json j;
    put_exact(j, "ell", d.ell);
    j["worst_color"] = d.worst_color;
    put_exact(j, "gap_lo", d.gap_lo);
    put_exact(j, "gap_hi", d.gap_hi);
    put_exact(j, "core_lo", d.core_lo);
    put_exact(j, "core_hi", d.core_hi);
    Json gaps = Json::array();
    for (const auto& [c, g] : d.per_color_max_gap) {
        Json item;
        item["color"] = c;
        put_exact(item, "max_gap", g);
        gaps.push_back(std::move(item));
    }
    j["per_color_max_gap"] = std::move(gaps);
    return j;
}

namespace {

DensityResult density_from_json(const Json& j, int radicand) {
    DensityResult d;
    d.ell = exact_from(j.at("ell"), radicand);
    d.worst_color = j.at("worst_color").get<int>();
    d.gap_lo = exact_from(j.at("gap_lo"), radicand);
    d.gap_hi = exact_from(j.at("gap_hi"), radicand);
    d.core_lo = exact_from(j.at("core_lo"), radicand);
    d.core_hi = exact_from(j.at("core_hi"), radicand);
    for (const Json& item : j.at("per_color_max_gap")) {
        d.per_color_max_gap.emplace(item.at("color").get<int>(),
                                    exact_from(item.at("max_gap"), radicand));
    }
    return d;
}

} // namespace

Json to_json(const NoSlabCertificate& cert) {
    Json j;
    j["kind"] = "no_t_slab";
    j["t"] = cert.t;
    j["window"] = to_json(cert.window);
    j["half_window"] = to_json(cert.half);
    j["clique_found"] = cert.clique_found;
    Json cq = Json::array();
    for (const LatticeVector& p : cert.clique) cq.push_back(to_json(p));
    j["clique"] = std::move(cq);
    j["seed"] = to_json(cert.seed);
    j["contradiction"] = cert.contradiction;
    j["fully_forced"] = cert.fully_forced;
    Json steps = Json::array();
    for (const ForcedStep& s : cert.transcript) steps.push_back(to_json(s));
    j["transcript"] = std::move(steps);
    j["linear_matched"] = cert.linear_matched;
    if (cert.linear_matched) {
        j["weights"] = Json::array({cert.wa, cert.wb});
        j["renaming"] = cert.renaming;
    }
    j["density_ok"] = cert.density_ok;
    if (cert.density_ok) {
        j["density_full"] = to_json(cert.density_full);
        j["density_half"] = to_json(cert.density_half);
        j["shrinks"] = cert.shrinks;
    }
    j["certified"] = cert.certified;
    j["interpretation"] = cert.interpretation;
    return j;
}

NoSlabCertificate certificate_from_json(const Json& j, int radicand) {
    NoSlabCertificate cert;
    cert.t = j.at("t").get<int>();
    cert.window = window_from_json(j.at("window"));
    cert.half = window_from_json(j.at("half_window"));
    cert.clique_found = j.at("clique_found").get<bool>();
    for (const Json& p : j.at("clique")) {
        cert.clique.push_back(LatticeVector{p.at(0).get<long long>(), p.at(1).get<long long>()});
    }
    cert.seed = partial_coloring_from_json(j.at("seed"), cert.t);
    cert.contradiction = j.at("contradiction").get<bool>();
    cert.fully_forced = j.at("fully_forced").get<bool>();
    for (const Json& s : j.at("transcript")) {
        ForcedStep step;
        step.point = LatticeVector{s.at("point").at(0).get<long long>(),
                                   s.at("point").at(1).get<long long>()};
        step.color = s.at("color").get<int>();
        for (const Json& w : s.at("witnesses")) {
            step.witnesses.emplace_back(
                LatticeVector{w.at(0).get<long long>(), w.at(1).get<long long>()},
                w.at(2).get<int>());
        }
        cert.transcript.push_back(std::move(step));
    }
    cert.linear_matched = j.at("linear_matched").get<bool>();
    if (cert.linear_matched) {
        cert.wa = j.at("weights").at(0).get<int>();
        cert.wb = j.at("weights").at(1).get<int>();
        cert.renaming = j.at("renaming").get<std::vector<int>>();
    }
    cert.density_ok = j.at("density_ok").get<bool>();
    if (cert.density_ok) {
        cert.density_full = density_from_json(j.at("density_full"), radicand);
        cert.density_half = density_from_json(j.at("density_half"), radicand);
        cert.shrinks = j.at("shrinks").get<bool>();
    }
    cert.certified = j.at("certified").get<bool>();
    cert.interpretation = j.value("interpretation", "");
    return cert;
}

Json to_json(const SlabColoring& sc) {
    Json j;
    j["mode"] = sc.mode == SlabColoring::Mode::periodic ? "periodic" : "windowed";
    j["t"] = sc.t;
    Json bps = Json::array();
    for (const QuadExt& b : sc.breakpoints) bps.push_back(b.to_string());
    j["breakpoints"] = std::move(bps);
    j["colors"] = sc.colors;
    j["text"] = sc.to_text();
    return j;
}

SlabColoring slab_from_json(const Json& j, int radicand) {
    SlabColoring sc;
    sc.mode = j.at("mode").get<std::string>() == "periodic" ? SlabColoring::Mode::periodic
                                                            : SlabColoring::Mode::windowed;
    sc.t = j.at("t").get<int>();
    for (const Json& b : j.at("breakpoints")) {
        sc.breakpoints.push_back(exact_from(b, radicand));
    }
    sc.colors = j.at("colors").get<std::vector<int>>();
    sc.validate();
    return sc;
}

Json to_json(const SlabViolation& v) {
    Json j;
    put_exact(j, "x", v.x);
    put_exact(j, "d", v.d);
    j["slab_i"] = v.slab_i;
    j["slab_j"] = v.slab_j;
    return j;
}

Json to_json(const ChiMBounds& b) {
    Json j;
    j["rank"] = b.rank;
    j["lower"] = b.lower;
    j["upper"] = b.upper;
    j["equal"] = b.equal;
    if (b.rank == 1) {
        j["chi_integer"] = b.integer_chi->chi;
        j["integer_clique"] = to_json(*b.integer_clique);
        j["lower_by_decision"] = b.lower_by_decision;
        j["periodic_witness"] = to_json(b.integer_chi->witness);
        j["slab_witness"] = to_json(*b.slab_witness);
    } else {
        j["window_chi"] = b.window_chi->chi;
        j["certificate"] = to_json(*b.certificate);
        j["unit_slab"] = to_json(*b.unit_slab);
        j["literature_upper_no_witness"] = b.literature_upper;
    }
    return j;
}

} // namespace distchrom
