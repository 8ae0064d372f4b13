#include "alcoved/errors.hpp"
#include "alcoved/polytope_file.hpp"
#include "alcoved/scan.hpp"
#include "alcoved/triangulation.hpp"
#include "alcoved/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace alcoved;

namespace {

py::int_ to_py(const Integer& v) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<Integer>& v) {
    py::list out;
    for (const auto& x : v) out.append(to_py(x));
    return out;
}

py::object fraction(const Rational& q) {
    static py::object Fraction = py::module_::import("fractions").attr("Fraction");
    return Fraction(to_py(q.get_num()), to_py(q.get_den()));
}

py::tuple point(const LatticePoint& p) {
    py::tuple t(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) t[k] = p[k];
    return t;
}

py::list cells(const Triangulation& t) {
    py::list out;
    for (const auto& s : t.maximal_simplices) {
        py::list vs;
        for (const auto& v : s.vertices) vs.append(point(v));
        out.append(vs);
    }
    return out;
}

std::vector<Constraint> triples(const std::vector<std::tuple<std::size_t, std::size_t, Coord>>& cs) {
    std::vector<Constraint> out;
    for (const auto& [i, j, k] : cs) out.push_back({i, j, k});
    return out;
}

py::tuple triple(const Constraint& c) { return py::make_tuple(c.i, c.j, c.bound); }

// Exception types, leaked on purpose so they outlive the translator.
py::handle error_type, hypothesis_type, theorem_type;

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Alcoved lattice polytopes: Ehrhart theory, triangulations and theorem scans";

    error_type = py::exception<Error>(m, "AlcovedError").release();
    hypothesis_type = py::exception<HypothesisViolated>(m, "HypothesisViolated", error_type).release();
    theorem_type = py::exception<TheoremViolation>(m, "TheoremViolation", error_type).release();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const HypothesisViolated& e) {
            py::object exc = py::reinterpret_borrow<py::object>(hypothesis_type)(e.what());
            exc.attr("facet") = triple(e.facet());
            exc.attr("distance") = e.distance();
            py::set_error(hypothesis_type, exc);
        } catch (const TheoremViolation& e) {
            py::set_error(theorem_type, e.what());
        } catch (const ParseError& e) {
            py::set_error(PyExc_ValueError, e.what());
        } catch (const Error& e) {
            py::set_error(error_type, e.what());
        }
    });

    py::class_<AlcovedPolytope>(m, "AlcovedPolytope")
        .def(py::init([](std::size_t dim, const std::vector<std::tuple<std::size_t, std::size_t, Coord>>& cs) {
                 return validate(triples(cs), dim);
             }),
             py::arg("dim"), py::arg("constraints"),
             "Validate x_i - x_j <= k triples (x_0 = 0) as a bounded full-dimensional polytope.")
        .def_property_readonly("dim", &AlcovedPolytope::dim)
        .def_property_readonly("constraints",
                               [](const AlcovedPolytope& p) {
                                   py::list out;
                                   for (const auto& c : p.hrep().constraints()) out.append(triple(c));
                                   return out;
                               })
        .def_property_readonly("bounds",
                               [](const AlcovedPolytope& p) {
                                   py::list out;
                                   for (const auto& b : p.bounds()) out.append(py::make_tuple(b.lo, b.hi));
                                   return out;
                               })
        .def("to_json",
             [](const AlcovedPolytope& p) { return serialize_polytope({p.hrep(), std::nullopt, std::nullopt, std::nullopt}); })
        .def("__eq__", [](const AlcovedPolytope& a, const AlcovedPolytope& b) { return a == b; })
        .def("__repr__", [](const AlcovedPolytope& p) {
            return "AlcovedPolytope(" + serialize_polytope({p.hrep(), std::nullopt, std::nullopt, std::nullopt}) + ")";
        });

    m.def("from_json", [](const std::string& line) { return validate(parse_polytope_line(line).hrep); });

    m.def("make_qd", &make_qd, py::arg("d"));
    m.def("make_hypersimplex", &make_hypersimplex, py::arg("d"), py::arg("k"));
    m.def(
        "make_order_polytope",
        [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& rel) {
            return make_order_polytope(n, rel);
        },
        py::arg("n"), py::arg("relations") = std::vector<std::pair<std::size_t, std::size_t>>{});
    m.def("make_scaled_chain_simplex", &make_scaled_chain_simplex, py::arg("d"), py::arg("scale") = 1);
    m.def("make_sharp_distance_example", &make_sharp_distance_example, py::arg("d"));
    m.def(
        "make_box",
        [](const std::vector<std::pair<Coord, Coord>>& sides) {
            std::vector<Interval> iv;
            for (auto [lo, hi] : sides) iv.push_back({lo, hi});
            return make_box(iv);
        },
        py::arg("sides"));
    m.def(
        "random_alcoved",
        [](std::size_t d, std::uint64_t seed, bool small) { return random_alcoved(d, Seed{seed}, small); },
        py::arg("d"), py::arg("seed"), py::arg("small") = false);
    m.def(
        "derive_seed", [](std::uint64_t base, std::uint64_t i) { return derive_seed(Seed{base}, i).value; },
        py::arg("base"), py::arg("index"));

    m.def("facets", [](const AlcovedPolytope& p) {
        py::list out;
        for (const auto& c : facets(p)) out.append(triple(c));
        return out;
    });
    m.def("lattice_points", [](const AlcovedPolytope& p) {
        py::list out;
        for (const auto& x : lattice_points(p).points) out.append(point(x));
        return out;
    });
    m.def("interior_lattice_points", [](const AlcovedPolytope& p) {
        py::list out;
        for (const auto& x : interior_lattice_points(p)) out.append(point(x));
        return out;
    });
    m.def(
        "count_dilate", [](const AlcovedPolytope& p, std::uint64_t t) { return to_py(count_dilate(p, t)); },
        py::arg("p"), py::arg("t") = 1);
    m.def(
        "count_interior_dilate",
        [](const AlcovedPolytope& p, std::uint64_t t) { return to_py(count_interior_dilate(p, t)); }, py::arg("p"),
        py::arg("t") = 1);

    m.def(
        "ehrhart_polynomial",
        [](const AlcovedPolytope& p) {
            py::list out;
            const Polynomial ehr = ehrhart_polynomial(p);
            for (const auto& c : ehr.coeffs()) out.append(fraction(c));
            return out;
        },
        "Coefficients c_0, c_1, ..., c_d of L(t) as Fractions.");
    m.def("hstar", [](const AlcovedPolytope& p) { return to_py(hstar(p).entries); });
    m.def("is_unimodal", [](const std::vector<long long>& v) {
        std::vector<Integer> xs;
        for (auto x : v) xs.emplace_back(static_cast<long>(x));
        const auto r = is_unimodal(xs);
        return py::make_tuple(r.unimodal, r.peak_indices);
    });

    m.def("facet_distances", [](const AlcovedPolytope& p) {
        py::dict out;
        for (const auto& fd : facet_distances(p).per_facet)
            out[triple(fd.facet)] = fd.distance ? py::object(py::int_(*fd.distance)) : py::none();
        return out;
    });
    m.def("max_facet_distance", [](const AlcovedPolytope& p) { return *max_facet_distance(p).max_distance; });
    m.def("main_theorem_hypothesis", [](const AlcovedPolytope& p) { return main_theorem_hypothesis(p); });
    m.def("is_reflexive", [](const AlcovedPolytope& p) { return is_reflexive(p); });
    m.def(
        "gorenstein_index", [](const AlcovedPolytope& p, std::size_t k_max) { return gorenstein_index(p, k_max); },
        py::arg("p"), py::arg("k_max"));

    m.def("alcove_triangulation", [](const AlcovedPolytope& p) { return cells(alcove_triangulation(p)); });
    m.def("boundary_compatible_triangulation",
          [](const AlcovedPolytope& p) { return cells(boundary_compatible_triangulation(p)); });
    m.def("f_vector", [](const AlcovedPolytope& p) { return f_vector(alcove_triangulation(p)).f; },
          "f-vector of the alcove triangulation.");
    m.def("h_vector", [](const AlcovedPolytope& p) { return h_vector(alcove_triangulation(p)).h; },
          "h-vector of the alcove triangulation.");

    m.def(
        "scan",
        [](std::size_t dim, std::size_t count, std::uint64_t seed, bool small, std::vector<std::string> checks,
           std::size_t jobs) {
            ScanConfig cfg;
            cfg.dim = dim;
            cfg.count = count;
            cfg.seed = seed;
            cfg.small = small;
            if (!checks.empty()) {
                cfg.checks.clear();
                for (const auto& c : checks) cfg.checks.insert(parse_check(c));
            }
            cfg.jobs = jobs;
            ScanReport report;
            {
                py::gil_scoped_release release;
                report = run_scan(cfg);
            }
            return py::module_::import("json").attr("loads")(scan_report_json(report));
        },
        py::arg("dim"), py::arg("count"), py::arg("seed") = 0, py::arg("small") = false,
        py::arg("checks") = std::vector<std::string>{}, py::arg("jobs") = 1,
        "Seeded scan; returns the JSON report as a dict.");

    m.def(
        "verify",
        [](std::size_t dim_max, std::size_t jobs) {
            std::vector<CriterionResult> results;
            {
                py::gil_scoped_release release;
                results = run_acceptance({dim_max, jobs});
            }
            py::list out;
            for (const auto& r : results) out.append(py::make_tuple(r.id, r.passed, format_result(r)));
            return out;
        },
        py::arg("dim_max") = 3, py::arg("jobs") = 1);
}
