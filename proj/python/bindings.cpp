#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ribbonfold/analysis.hpp"
#include "ribbonfold/constructions.hpp"
#include "ribbonfold/pattern.hpp"

namespace py = pybind11;
using namespace ribbonfold;

namespace {

RibbonDiagram build_any(const std::string& family, double theta, double d, int n, int q) {
    switch (family_from_string(family)) {
        case Family::moebius: return build_moebius(FoldAngle(theta), d, n);
        case Family::torus2q: return build_torus(q, d);
        case Family::twist_odd: return build_twist(n, TwistParity::odd, d);
        case Family::twist_even: return build_twist(n, TwistParity::even, d);
    }
    throw DomainError("unknown family");
}

} // namespace

PYBIND11_MODULE(_ribbonfold, m) {
    m.doc() = "folded-ribbon knot constructions, ribbonlength formulas and crease patterns";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ConstraintError>(m, "ConstraintError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);

    py::class_<LedgerEntry>(m, "LedgerEntry")
        .def_readonly("name", &LedgerEntry::name)
        .def_readonly("length", &LedgerEntry::length);

    py::class_<ConstructionParams>(m, "ConstructionParams")
        .def_property_readonly("family",
                               [](const ConstructionParams& p) { return family_name(p.family); })
        .def_readonly("theta", &ConstructionParams::theta)
        .def_readonly("d", &ConstructionParams::d)
        .def_readonly("n", &ConstructionParams::n)
        .def_readonly("k", &ConstructionParams::k);

    py::class_<RibbonDiagram>(m, "RibbonDiagram")
        .def_property_readonly("params", [](const RibbonDiagram& d) { return d.params; })
        .def_property_readonly("landmarks", [](const RibbonDiagram& d) { return d.landmarks; })
        .def_property_readonly("ledger", [](const RibbonDiagram& d) { return d.ledger; })
        .def_property_readonly("vertices",
                               [](const RibbonDiagram& d) {
                                   std::vector<std::pair<double, double>> out;
                                   out.reserve(d.centerline.vertices.size());
                                   for (const auto& p : d.centerline.vertices) {
                                       out.emplace_back(p.x, p.y);
                                   }
                                   return out;
                               })
        .def("ribbonlength", [](const RibbonDiagram& d) { return ribbonlength(d); })
        .def("ledger_sum", &RibbonDiagram::ledger_sum)
        .def("fold_vertex_count", &RibbonDiagram::fold_vertex_count)
        .def("linking_number", [](const RibbonDiagram& d) { return ribbon_linking_number(d); })
        .def("band_type",
             [](const RibbonDiagram& d) {
                 return band_type(d) == BandType::moebius_band ? "moebius_band" : "annulus";
             })
        .def("to_document", [](const RibbonDiagram& d) { return to_document(d); });

    py::class_<CreasePattern>(m, "CreasePattern")
        .def_readonly("strip_length", &CreasePattern::strip_length)
        .def_property_readonly("creases", [](const CreasePattern& p) {
            std::vector<std::tuple<double, double, std::string>> out;
            out.reserve(p.creases.size());
            for (const auto& c : p.creases) {
                out.emplace_back(c.position, c.angle,
                                 c.parity == CreaseParity::mountain ? "mountain" : "valley");
            }
            return out;
        });

    m.def("build", &build_any, py::arg("family"), py::arg("theta") = std::acos(-1.0) / 3.0,
          py::arg("d") = 0.1, py::arg("n") = 1, py::arg("q") = 3,
          "build a diagram for one of moebius|torus2q|twist_odd|twist_even");
    m.def("escape_min_kd", [](double theta) { return escape_min_kd(FoldAngle(theta)); });
    m.def("v_unit_span", [](double theta, double d) { return v_unit_span(FoldAngle(theta), d); });
    m.def("moebius_rib_formula",
          [](double theta, double d, int n) { return moebius_rib_formula(FoldAngle(theta), d, n); });
    m.def("torus_rib_formula", &torus_rib_formula);
    m.def("twist_rib_formula", [](int n, const std::string& parity, double d) {
        return twist_rib_formula(n, parity == "odd" ? TwistParity::odd : TwistParity::even, d);
    });
    m.def("rib_theta_derivative",
          [](double theta) { return rib_theta_derivative(FoldAngle(theta)); });
    m.def("optimal_theta", [](double tol) {
        const OptimizeResult r = optimal_theta(tol);
        return py::make_tuple(r.theta_star, r.rib_value,
                              r.derivative_iterations + r.golden_iterations);
    });
    m.def("limit_rib", [](const std::string& family) { return limit_rib(family_from_string(family)); });
    m.def("torus_crossing_number", &torus_crossing_number);
    m.def("kny_bound", &kny_bound);
    m.def("comparison_table", [](const std::vector<int>& qs) {
        std::vector<std::tuple<int, int, double, double>> out;
        for (const auto& row : comparison_table(qs)) {
            out.emplace_back(row.q, row.crossing_number, row.construction_bound, row.kny_bound);
        }
        return out;
    });
    m.def("clasp_distances", []() {
        const ClaspDistances c = clasp_distances();
        return py::make_tuple(c.dK_MP, c.d_PM, c.d_JT);
    });
    m.def("reference_constants", []() {
        std::vector<std::tuple<std::string, double, std::string>> out;
        for (const auto& rc : reference_constants()) {
            out.emplace_back(rc.name, rc.value, rc.citation);
        }
        return out;
    });
    m.def("crease_pattern", [](const RibbonDiagram& d) { return crease_pattern(d); });
    m.def("render_diagram", [](const RibbonDiagram& d) { return render_diagram(d); });
    m.def("render_crease", [](const CreasePattern& p) { return render_crease(p); });
    m.def("from_document", [](const std::string& text) { return from_document(text).diagram; });
}
