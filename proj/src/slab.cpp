#include "distchrom/slab.hpp"

#include <algorithm>
#include <sstream>

#include "distchrom/errors.hpp"

namespace distchrom {

void SlabColoring::validate() const {
    if (breakpoints.size() < 2) {
        throw DomainError("slab coloring needs at least one slab");
    }
    if (colors.size() + 1 != breakpoints.size()) {
        throw DomainError("slab coloring has " + std::to_string(colors.size()) + " colors for " +
                          std::to_string(breakpoints.size() - 1) + " slabs");
    }
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1])) {
            throw DomainError("slab breakpoints must be strictly increasing");
        }
    }
    if (mode == Mode::periodic && !breakpoints.front().is_zero()) {
        throw DomainError("periodic slab coloring must start at 0");
    }
    if (t < 1) {
        throw DomainError("slab coloring needs at least one color");
    }
    for (int c : colors) {
        if (c < 0 || c >= t) {
            throw DomainError("slab color out of range");
        }
    }
}

int SlabColoring::slab_index_at(const QuadExt& x) const {
    QuadExt y = x;
    if (mode == Mode::periodic) {
        const QuadExt period = hi();
        const BigInt k = quad_floor_div(x, period);
        y = x - QuadExt(Rational(k)) * period;
    } else if (x < lo() || !(x < hi())) {
        return -1;
    }
    // Largest i with b_i <= y; half-open slabs put breakpoints on the right.
    auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), y);
    return static_cast<int>(it - breakpoints.begin()) - 1;
}

int SlabColoring::color_at(const QuadExt& x) const {
    const int i = slab_index_at(x);
    return i < 0 ? -1 : colors[static_cast<std::size_t>(i)];
}

std::string SlabColoring::to_text() const {
    std::ostringstream os;
    if (mode == Mode::periodic) {
        os << "period " << hi().to_string() << "\n";
    } else {
        os << "window " << lo().to_string() << " " << hi().to_string() << "\n";
    }
    for (std::size_t i = 0; i < colors.size(); ++i) {
        os << "[" << breakpoints[i].to_string() << ", " << breakpoints[i + 1].to_string() << ") "
           << colors[i] << "\n";
    }
    return os.str();
}

SlabColoring SlabColoring::from_text(std::string_view text, int radicand) {
    std::istringstream is{std::string(text)};
    std::string line;
    SlabColoring sc;
    bool have_header = false;
    QuadExt declared_lo, declared_hi;
    std::size_t lineno = 0;

    while (std::getline(is, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (!have_header) {
            std::istringstream hs(line);
            std::string kind;
            hs >> kind;
            std::string a, b;
            if (kind == "period") {
                hs >> a;
                if (a.empty()) throw ParseError("period header needs an expression", lineno);
                sc.mode = Mode::periodic;
                declared_lo = QuadExt(Rational(0));
                declared_hi = parse_quad_expr(a, radicand);
            } else if (kind == "window") {
                hs >> a >> b;
                if (a.empty() || b.empty()) {
                    throw ParseError("window header needs two expressions", lineno);
                }
                sc.mode = Mode::windowed;
                declared_lo = parse_quad_expr(a, radicand);
                declared_hi = parse_quad_expr(b, radicand);
            } else {
                throw ParseError("expected 'period' or 'window' header", lineno);
            }
            have_header = true;
            continue;
        }
        const auto lb = line.find('[');
        const auto comma = line.find(',', lb);
        const auto rb = line.find(')', comma);
        if (lb == std::string::npos || comma == std::string::npos || rb == std::string::npos) {
            throw ParseError("slab line must look like \"[a, b) color\"", lineno);
        }
        const QuadExt from = parse_quad_expr(line.substr(lb + 1, comma - lb - 1), radicand);
        const QuadExt to = parse_quad_expr(line.substr(comma + 1, rb - comma - 1), radicand);
        int color = -1;
        try {
            color = std::stoi(line.substr(rb + 1));
        } catch (const std::exception&) {
            throw ParseError("slab line is missing its color index", lineno);
        }
        if (color < 0) {
            throw ParseError("slab color must be nonnegative", lineno);
        }
        if (sc.breakpoints.empty()) {
            sc.breakpoints.push_back(from);
        } else if (!(sc.breakpoints.back() == from)) {
            throw ParseError("slabs must be contiguous", lineno);
        }
        sc.breakpoints.push_back(to);
        sc.colors.push_back(color);
        sc.t = std::max(sc.t, color + 1);
    }
    if (!have_header || sc.colors.empty()) {
        throw ParseError("slab coloring needs a header and at least one slab", lineno);
    }
    if (!(sc.breakpoints.front() == declared_lo) || !(sc.breakpoints.back() == declared_hi)) {
        throw ParseError("slabs do not cover the declared span", lineno);
    }
    sc.validate();
    return sc;
}

std::optional<SlabViolation> verify_slab(const SlabColoring& c, const DistanceSet& D) {
    c.validate();
    const std::size_t n = c.colors.size();
    const QuadExt period = c.hi();
    const Rational half(BigInt(1), BigInt(2));

    struct Arc {
        QuadExt lo, hi;  // reduced coordinates
        QuadExt offset;  // original position = reduced + offset
    };

    for (const QuadExt& d : D.elements) {
        for (std::size_t i = 0; i < n; ++i) {
            const QuadExt s_lo = c.breakpoints[i] + d;
            const QuadExt s_hi = c.breakpoints[i + 1] + d;
            std::vector<Arc> arcs;
            if (c.mode == SlabColoring::Mode::periodic) {
                const BigInt k = quad_floor_div(s_lo, period);
                const QuadExt shift = QuadExt(Rational(k)) * period;
                const QuadExt lo1 = s_lo - shift;
                const QuadExt hi1 = s_hi - shift;
                if (!(period < hi1)) {
                    arcs.push_back(Arc{lo1, hi1, shift});
                } else {
                    arcs.push_back(Arc{lo1, period, shift});
                    arcs.push_back(Arc{QuadExt(Rational(0)), hi1 - period, shift + period});
                }
            } else {
                arcs.push_back(Arc{s_lo, s_hi, QuadExt(Rational(0))});
            }
            for (const Arc& arc : arcs) {
                for (std::size_t j = 0; j < n; ++j) {
                    if (c.colors[j] != c.colors[i]) continue;
                    // [x, y) n [u, v) nonempty iff x < v and u < y.
                    const QuadExt& u = c.breakpoints[j];
                    const QuadExt& v = c.breakpoints[j + 1];
                    if (!(arc.lo < v) || !(u < arc.hi)) continue;
                    const QuadExt ov_lo = std::max(arc.lo, u);
                    const QuadExt ov_hi = std::min(arc.hi, v);
                    const QuadExt y_mid = (ov_lo + ov_hi) * QuadExt(half);
                    const QuadExt x = y_mid + arc.offset - d;
                    SlabViolation viol{x, d, static_cast<int>(i), static_cast<int>(j)};
                    if (c.color_at(viol.x) != c.colors[i] ||
                        c.color_at(viol.x + d) != c.colors[j]) {
                        throw DomainError("internal error: slab violation witness failed lookup");
                    }
                    return viol;
                }
            }
        }
    }
    return std::nullopt;
}

SlabColoring unit_slab_coloring(const DistanceSet& D) {
    const QuadExt& width = D.d_min();
    const BigInt m = quad_ceil_div(D.d_max(), width) + 1;
    const long long mm = checked_narrow(m);
    SlabColoring sc;
    sc.mode = SlabColoring::Mode::periodic;
    sc.t = static_cast<int>(mm);
    for (long long j = 0; j <= mm; ++j) {
        sc.breakpoints.push_back(QuadExt(Rational(j)) * width);
    }
    for (long long j = 0; j < mm; ++j) {
        sc.colors.push_back(static_cast<int>(j));
    }
    sc.validate();
    return sc;
}

SlabColoring integer_slab_from_periodic(const PeriodicColoring& pc, const QuadExt& alpha) {
    if (alpha.sign() <= 0) {
        throw DomainError("scaling factor must be positive");
    }
    if (pc.period < 1 || pc.colors.size() != static_cast<std::size_t>(pc.period)) {
        throw DomainError("malformed periodic coloring");
    }
    const QuadExt width = QuadExt(Rational(1)) / alpha;
    SlabColoring sc;
    sc.mode = SlabColoring::Mode::periodic;
    for (long long n = 0; n <= pc.period; ++n) {
        sc.breakpoints.push_back(QuadExt(Rational(n)) * width);
    }
    sc.colors = pc.colors;
    sc.t = *std::max_element(pc.colors.begin(), pc.colors.end()) + 1;
    sc.validate();
    return sc;
}

ChiMBounds chi_m_bounds(const DistanceSet& D, long long window_radius, long long state_budget) {
    ChiMBounds out;
    out.rank = D.rank;

    if (D.rank == 1) {
        const std::vector<long long>& dprime = *D.integer_form;
        out.integer_clique = clique_number_integer(dprime);
        out.integer_chi = chi_integer(dprime, state_budget);
        out.lower_by_decision = out.integer_chi->chi > out.integer_clique->size;
        out.slab_witness = integer_slab_from_periodic(out.integer_chi->witness, *D.alpha);
        if (verify_slab(*out.slab_witness, D)) {
            throw DomainError("internal error: transcribed slab witness rejected");
        }
        out.lower = out.upper = out.integer_chi->chi;
        out.equal = true;
        return out;
    }

    const Window w = Window::square(window_radius);
    out.window_chi = window_chromatic(D, w, static_cast<int>(D.size()) + 1);
    out.certificate = certify_no_t_slab(D, out.window_chi->chi, w);
    out.lower = out.window_chi->chi + (out.certificate->certified ? 1 : 0);

    out.unit_slab = unit_slab_coloring(D);
    if (verify_slab(*out.unit_slab, D)) {
        throw DomainError("internal error: unit slab construction rejected");
    }
    out.upper = out.unit_slab->t;
    out.literature_upper = static_cast<int>(D.size()) + 1;
    out.equal = out.lower == out.upper;
    return out;
}

} // namespace distchrom
