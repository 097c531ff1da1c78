#include "netmap/errors.hpp"
#include "netmap/nonsep.hpp"
#include "netmap/obstruction.hpp"
#include "netmap/symmetry.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace netmap;

namespace {

std::tuple<i64, i64> pair_of(const IntVec2& v) { return {v.x, v.y}; }

py::dict summary_dict(const PullbackSummary& s) {
    py::dict d;
    d["slope"] = to_string(s.slope);
    d["d"] = s.d;
    d["d_prime"] = s.d_prime;
    d["coset_numbers"] = std::vector<i64>(s.coset_numbers.begin(), s.coset_numbers.end());
    d["essential"] = s.essential;
    d["peripheral"] = s.peripheral;
    d["null"] = s.null_homotopic;
    d["multiplier"] = to_string(s.multiplier);
    return d;
}

SymmetricFour four_of(const FinAbGroup& A, const std::vector<std::tuple<i64, i64>>& reps) {
    if (reps.size() != 4) throw std::invalid_argument("need four representatives");
    std::array<IntVec2, 4> r;
    for (int k = 0; k < 4; ++k) r[k] = {std::get<0>(reps[k]), std::get<1>(reps[k])};
    return make_symmetric_four(A, r);
}

} // namespace

PYBIND11_MODULE(_netmap, m) {
    m.doc() = "Slope functions, obstructions and functional equations of NET maps";

    py::register_exception<Error>(m, "NetmapError", PyExc_ValueError);

    py::class_<NetMapPresentation>(m, "Presentation")
        .def_readonly("name", &NetMapPresentation::name)
        .def_property_readonly("degree", [](const NetMapPresentation& p) { return degree(p); })
        .def_property_readonly("euclidean", [](const NetMapPresentation& p) { return is_euclidean(p); })
        .def("serialize", [](const NetMapPresentation& p) { return serialize(p); })
        .def("__repr__", [](const NetMapPresentation& p) {
            return "<Presentation " + p.name + " degree " + std::to_string(degree(p)) + ">";
        });

    m.def("load", &load_presentation, py::arg("path"));
    m.def("parse", [](const std::string& text) {
        auto p = parse_presentation(text);
        validate(p);
        return p;
    }, py::arg("text"));

    m.def("analyze", [](const NetMapPresentation& p, const std::string& s) {
        return summary_dict(analyze_slope(p, parse_slope(s)));
    }, py::arg("presentation"), py::arg("slope"));

    m.def("sigma", [](const NetMapPresentation& p, const std::string& s) {
        return to_string(sigma(p, parse_slope(s)));
    }, py::arg("presentation"), py::arg("slope"));

    m.def("find_segment", [](const NetMapPresentation& p, const std::string& s) {
        auto [v, w] = find_segment(p, parse_slope(s));
        return std::make_tuple(pair_of(v), pair_of(w));
    }, py::arg("presentation"), py::arg("slope"));

    m.def("halfspace", [](const NetMapPresentation& p, const std::string& s) -> py::object {
        auto h = halfspace_for(p, parse_slope(s));
        if (!h) return py::none();
        py::dict d;
        d["image"] = to_string(h->image);
        d["delta"] = to_string(h->delta);
        d["center"] = to_string(h->center);
        d["radius_squared"] = to_string(h->radius_squared());
        d["bounded"] = h->bounded();
        return d;
    }, py::arg("presentation"), py::arg("slope"));

    m.def("obstructions", [](const NetMapPresentation& p, i64 height, std::size_t budget) {
        auto v = obstruction_report(p, height, budget);
        std::vector<std::string> cert;
        for (const auto& h : v.certificate) cert.push_back(to_string(h.slope));
        return std::make_tuple(summary_line(v), cert, verify_certificate(p, v).empty());
    }, py::arg("presentation"), py::arg("height") = 20, py::arg("budget") = 8);

    m.def("twist_equation", [](const NetMapPresentation& p, const std::string& s) {
        auto e = twist_equation(p, parse_slope(s));
        return std::make_tuple(to_string(e), substituted(e));
    }, py::arg("presentation"), py::arg("slope"));

    m.def("affine_equation", [](const NetMapPresentation& p, const std::string& spec) {
        auto f = parse_affine(spec);
        return std::make_tuple(formula(sigma_delta2(f.linear)), formula(sigma_delta1(p, f)));
    }, py::arg("presentation"), py::arg("affine"));

    m.def("is_nonseparating", [](i64 mm, i64 nn, const std::vector<std::tuple<i64, i64>>& reps) {
        FinAbGroup A(mm, nn);
        return is_nonseparating(A, four_of(A, reps));
    }, py::arg("m"), py::arg("n"), py::arg("reps"));

    m.def("search_nonseparating", [](i64 mm, i64 nn) {
        FinAbGroup A(mm, nn);
        std::vector<std::vector<std::tuple<i64, i64>>> out;
        for (const auto& H : search_nonseparating(A)) {
            std::vector<std::tuple<i64, i64>> els;
            for (const auto& g : elements(A, H)) els.push_back(pair_of(g));
            out.push_back(els);
        }
        return out;
    }, py::arg("m"), py::arg("n"));

    m.def("constant_teich_check", &constant_teich_check, py::arg("presentation"));
}
