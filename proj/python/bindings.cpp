#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ela/errors.hpp"
#include "ela/serialize.hpp"
#include "ela/verify.hpp"

namespace py = pybind11;
using namespace ela;

namespace {

DynkinDiagram diagram(const std::string& family, int rank) { return make_diagram(parse_family(family), rank); }

std::string table_json(const std::string& family, int rank) { return dump(to_json(build_table(diagram(family, rank)))); }

std::string dim_json(const std::string& family, int rank) {
    const auto d = diagram(family, rank);
    return dump(to_json(certify_dimension(d.family, d.rank)));
}

std::string verify_json(const std::string& suite, const std::string& family, int rank) {
    return dump(to_json(run_suite(suite, diagram(family, rank))));
}

std::string rep_json(const std::string& family, int rank) {
    return dump(to_json(faithful_representation(diagram(family, rank))));
}

// [x, y] in the table of the diagram, written over basis words
std::string bracket_text(const std::string& family, int rank, const std::string& x, const std::string& y) {
    const auto d = diagram(family, rank);
    const auto t = build_table(d);
    const auto v = t.evaluate(bracket(parse_element(d, x), parse_element(d, y)));
    LieElement out(d);
    for (const auto& [k, c] : v) out.add_term(t.words[k], c);
    return format_element(out);
}

}  // namespace

PYBIND11_MODULE(_ela, m) {
    py::register_exception<UnsupportedType>(m, "UnsupportedType", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ClosureDiverged>(m, "ClosureDiverged", PyExc_RuntimeError);
    m.def("table_json", &table_json, py::arg("family"), py::arg("rank"));
    m.def("dim_json", &dim_json, py::arg("family"), py::arg("rank"));
    m.def("verify_json", &verify_json, py::arg("suite"), py::arg("family"), py::arg("rank"));
    m.def("rep_json", &rep_json, py::arg("family"), py::arg("rank"));
    m.def("bracket", &bracket_text, py::arg("family"), py::arg("rank"), py::arg("x"), py::arg("y"));
    m.def("suites", &suite_names);
}
