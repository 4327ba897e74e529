// Python bindings for the distchrom core: exact values, distance-set
// analysis, the integer and lattice solvers, slab colorings and the
// no-t-slab certificate.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "distchrom/report.hpp"

namespace py = pybind11;
using namespace distchrom;

namespace {

QuadExt quad_from_str(const std::string& text, int radicand) {
    return parse_quad_expr(text, radicand);
}

py::object json_to_py(const Json& j) {
    py::module_ json = py::module_::import("json");
    return json.attr("loads")(j.dump());
}

std::pair<long long, long long> as_pair(const LatticeVector& p) { return {p.a, p.b}; }

LatticeVector to_vec(const std::pair<long long, long long>& p) {
    return LatticeVector{p.first, p.second};
}

} // namespace

PYBIND11_MODULE(_distchrom, m) {
    m.doc() = "Exact chromatic numbers and slab colorings of distance graphs on the real line";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    py::class_<QuadExt>(m, "QuadExt")
        .def(py::init([](const std::string& text, int radicand) {
                 return quad_from_str(text, radicand);
             }),
             py::arg("text"), py::arg("radicand") = 2)
        .def(py::init([](long long p, long long q, int radicand) {
                 return QuadExt(Rational(p), Rational(q), radicand);
             }),
             py::arg("rat_part"), py::arg("quad_part") = 0, py::arg("radicand") = 2)
        .def_property_readonly("radicand", &QuadExt::radicand)
        .def("__add__", [](const QuadExt& a, const QuadExt& b) { return a + b; })
        .def("__sub__", [](const QuadExt& a, const QuadExt& b) { return a - b; })
        .def("__mul__", [](const QuadExt& a, const QuadExt& b) { return a * b; })
        .def("__truediv__", [](const QuadExt& a, const QuadExt& b) { return a / b; })
        .def("__neg__", [](const QuadExt& a) { return -a; })
        .def("__abs__", &QuadExt::abs)
        .def("__eq__", [](const QuadExt& a, const QuadExt& b) { return a == b; })
        .def("__lt__", [](const QuadExt& a, const QuadExt& b) { return a < b; })
        .def("__le__", [](const QuadExt& a, const QuadExt& b) { return a <= b; })
        .def("__float__", &QuadExt::to_double)
        .def("__str__", &QuadExt::to_string)
        .def("__repr__",
             [](const QuadExt& a) { return "QuadExt('" + a.to_string() + "')"; })
        .def("sign", &QuadExt::sign);

    m.def(
        "ceil_div",
        [](const QuadExt& num, const QuadExt& den) {
            return quad_ceil_div(num, den).convert_to<long long>();
        },
        py::arg("num"), py::arg("den"), "Exact ceiling of num/den for positive arguments");

    py::class_<DistanceSet>(m, "DistanceSet")
        .def_property_readonly("rank", [](const DistanceSet& d) { return d.rank; })
        .def_property_readonly("radicand", [](const DistanceSet& d) { return d.radicand; })
        .def_property_readonly("elements",
                               [](const DistanceSet& d) { return d.elements; })
        .def_property_readonly("basis", [](const DistanceSet& d) { return d.basis; })
        .def_property_readonly("lattice_coords",
                               [](const DistanceSet& d) {
                                   std::vector<std::pair<long long, long long>> out;
                                   for (const auto& c : d.lattice_coords) out.push_back(as_pair(c));
                                   return out;
                               })
        .def_property_readonly("alpha",
                               [](const DistanceSet& d) -> py::object {
                                   return d.alpha ? py::cast(*d.alpha) : py::none();
                               })
        .def_property_readonly("integer_form",
                               [](const DistanceSet& d) -> py::object {
                                   return d.integer_form ? py::cast(*d.integer_form) : py::none();
                               })
        .def("value_of",
             [](const DistanceSet& d, long long a, long long b) {
                 return d.value_of(LatticeVector{a, b});
             })
        .def("__len__", [](const DistanceSet& d) { return d.elements.size(); })
        .def("__str__", &DistanceSet::canonical_text)
        .def("__repr__",
             [](const DistanceSet& d) { return "DistanceSet('" + d.canonical_text() + "')"; });

    m.def("parse_distance_set", &parse_distance_set, py::arg("text"), py::arg("radicand") = 2);
    m.def("theorem_family", &theorem_family, py::arg("t"), py::arg("radicand") = 2);

    py::class_<PeriodicColoring>(m, "PeriodicColoring")
        .def_readonly("period", &PeriodicColoring::period)
        .def_readonly("colors", &PeriodicColoring::colors)
        .def("__repr__", [](const PeriodicColoring& pc) {
            std::ostringstream os;
            os << "PeriodicColoring(period=" << pc.period << ")";
            return os.str();
        });

    m.def("verify_periodic", &verify_periodic, py::arg("coloring"), py::arg("dprime"));
    m.def(
        "is_t_colorable_integer",
        [](const std::vector<long long>& d, int t, long long budget) -> py::object {
            auto pc = is_t_colorable_integer(d, t, budget);
            return pc ? py::cast(*pc) : py::none();
        },
        py::arg("dprime"), py::arg("t"), py::arg("state_budget") = 10'000'000);
    m.def(
        "chi_integer",
        [](const std::vector<long long>& d, long long budget) {
            const IntegerChi r = chi_integer(d, budget);
            return py::make_tuple(r.chi, r.witness);
        },
        py::arg("dprime"), py::arg("state_budget") = 10'000'000);
    m.def(
        "clique_number_integer",
        [](const std::vector<long long>& d) {
            const IntegerClique r = clique_number_integer(d);
            return py::make_tuple(r.size, r.witness);
        },
        py::arg("dprime"));

    m.def(
        "find_clique",
        [](const DistanceSet& ds, int t) -> py::object {
            auto cq = find_clique(ds, t);
            if (!cq) return py::none();
            std::vector<std::pair<long long, long long>> out;
            for (const auto& p : *cq) out.push_back(as_pair(p));
            return py::cast(out);
        },
        py::arg("distance_set"), py::arg("t"));

    m.def(
        "find_linear_coloring",
        [](const DistanceSet& ds, int t) -> py::object {
            auto lc = find_linear_coloring(ds, t);
            if (!lc) return py::none();
            return py::make_tuple(lc->wa, lc->wb);
        },
        py::arg("distance_set"), py::arg("t"));

    m.def(
        "window_chromatic",
        [](const DistanceSet& ds, long long radius, int t_max) {
            const WindowChromatic wc = window_chromatic(ds, Window::square(radius), t_max);
            return py::make_tuple(wc.chi, wc.exceeded);
        },
        py::arg("distance_set"), py::arg("window_radius"), py::arg("t_max"));

    m.def(
        "propagate_forced",
        [](const DistanceSet& ds, int t,
           const std::vector<std::pair<std::pair<long long, long long>, int>>& seed,
           long long radius) {
            PartialColoring sc;
            sc.t = t;
            for (const auto& [p, c] : seed) sc.assignments.emplace(to_vec(p), c);
            const Window w = effective_window(ds, Window::square(radius));
            const PropagationResult pr = propagate_forced(ds, t, sc, w);
            std::vector<std::pair<std::pair<long long, long long>, int>> coloring;
            for (const auto& [p, c] : pr.result.assignments) coloring.emplace_back(as_pair(p), c);
            return py::make_tuple(pr.fully_forced, pr.contradiction, coloring);
        },
        py::arg("distance_set"), py::arg("t"), py::arg("seed"), py::arg("window_radius"));

    py::class_<NoSlabCertificate>(m, "NoSlabCertificate")
        .def_readonly("t", &NoSlabCertificate::t)
        .def_readonly("certified", &NoSlabCertificate::certified)
        .def_readonly("clique_found", &NoSlabCertificate::clique_found)
        .def_readonly("fully_forced", &NoSlabCertificate::fully_forced)
        .def_readonly("linear_matched", &NoSlabCertificate::linear_matched)
        .def_readonly("shrinks", &NoSlabCertificate::shrinks)
        .def_property_readonly("ell",
                               [](const NoSlabCertificate& c) -> py::object {
                                   if (!c.density_ok) return py::none();
                                   return py::cast(c.density_full.ell);
                               })
        .def("to_json", [](const NoSlabCertificate& c) { return json_to_py(to_json(c)); })
        .def("__repr__", [](const NoSlabCertificate& c) {
            std::ostringstream os;
            os << "NoSlabCertificate(t=" << c.t << ", certified="
               << (c.certified ? "True" : "False") << ")";
            return os.str();
        });

    m.def(
        "certify_no_t_slab",
        [](const DistanceSet& ds, int t, long long radius) {
            return certify_no_t_slab(ds, t, Window::square(radius));
        },
        py::arg("distance_set"), py::arg("t"), py::arg("window_radius") = 20);
    m.def(
        "replay_certificate",
        [](const NoSlabCertificate& cert, const DistanceSet& ds) {
            std::string why;
            const bool ok = replay_no_slab_certificate(cert, ds, &why);
            return py::make_tuple(ok, why);
        },
        py::arg("certificate"), py::arg("distance_set"));

    py::class_<SlabColoring>(m, "SlabColoring")
        .def_readonly("t", &SlabColoring::t)
        .def_readonly("colors", &SlabColoring::colors)
        .def_property_readonly("breakpoints",
                               [](const SlabColoring& s) { return s.breakpoints; })
        .def("color_at", &SlabColoring::color_at)
        .def("to_text", &SlabColoring::to_text)
        .def_static("from_text", &SlabColoring::from_text, py::arg("text"),
                    py::arg("radicand") = 2)
        .def("__repr__", [](const SlabColoring& s) {
            std::ostringstream os;
            os << "SlabColoring(t=" << s.t << ", slabs=" << s.colors.size() << ")";
            return os.str();
        });

    m.def(
        "verify_slab",
        [](const SlabColoring& sc, const DistanceSet& ds) -> py::object {
            auto v = verify_slab(sc, ds);
            if (!v) return py::none();
            return py::make_tuple(v->x, v->d, v->slab_i, v->slab_j);
        },
        py::arg("slab"), py::arg("distance_set"),
        "None when proper, otherwise the violation witness (x, d, slab_i, slab_j)");
    m.def("unit_slab_coloring", &unit_slab_coloring, py::arg("distance_set"));
    m.def("integer_slab_from_periodic", &integer_slab_from_periodic, py::arg("coloring"),
          py::arg("alpha"));

    m.def(
        "chi_m_bounds",
        [](const DistanceSet& ds, long long radius, long long budget) {
            const ChiMBounds b = chi_m_bounds(ds, radius, budget);
            return py::make_tuple(b.lower, b.upper, json_to_py(to_json(b)));
        },
        py::arg("distance_set"), py::arg("window_radius") = 20,
        py::arg("state_budget") = 10'000'000,
        "Returns (lower, upper, evidence) for the slab chromatic number");

    m.attr("__version__") = kVersionTag;
}
