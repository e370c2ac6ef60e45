#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pointmod/catalog.hpp"
#include "pointmod/error.hpp"
#include "pointmod/fforacle.hpp"
#include "pointmod/genfun.hpp"
#include "pointmod/io.hpp"
#include "pointmod/polyomino.hpp"
#include "pointmod/qseries.hpp"

namespace py = pybind11;
using namespace pointmod;

namespace {

std::vector<std::string> series_strings(const MotiveSeries& s) {
    std::vector<std::string> out;
    for (const auto& c : s.coefficients()) out.push_back(c.to_string());
    return out;
}

}  // namespace

PYBIND11_MODULE(_pointmod, m) {
    m.doc() = "Exact motivic series, module classification and polyomino counts";

    py::register_exception<Error>(m, "PointmodError", PyExc_ValueError);

    py::class_<Motive>(m, "Motive")
        .def(py::init([](const std::string& text) { return Motive::parse(text); }), py::arg("text"))
        .def(py::init<long>(), py::arg("value"))
        .def_static("L", &Motive::L)
        .def("specialize", [](const Motive& self, long q) { return self.specialize(mpq_class(q)).get_str(); }, py::arg("q"))
        .def("is_polynomial", &Motive::is_polynomial)
        .def("__add__", [](const Motive& a, const Motive& b) { return a + b; })
        .def("__sub__", [](const Motive& a, const Motive& b) { return a - b; })
        .def("__mul__", [](const Motive& a, const Motive& b) { return a * b; })
        .def("__truediv__", [](const Motive& a, const Motive& b) { return a / b; })
        .def("__pow__", [](const Motive& a, int e) { return a.pow(e); })
        .def("__eq__", [](const Motive& a, const Motive& b) { return a == b; })
        .def("__str__", &Motive::to_string)
        .def("__repr__", [](const Motive& a) { return "Motive('" + a.to_string() + "')"; });

    m.def("gl_class", &gl_class, py::arg("n"));
    m.def("punctual_series", [](int order) { return series_strings(punctual_series(order)); }, py::arg("order"));
    m.def("feit_fine_series", [](int order) { return series_strings(feit_fine_series(order)); }, py::arg("order"));
    m.def("hilb_punctual_series", [](int order) { return series_strings(hilb_punctual_series(order)); }, py::arg("order"));

    m.def("verify_stratification", [](int n) { return verify_stratification(n).ok; }, py::arg("n"));
    m.def("distinct_pair_contribution", [] { return distinct_pair_contribution().to_string(); });

    m.def("_classify_json",
          [](const std::string& doc) {
              Json parsed;
              try {
                  parsed = Json::parse(doc);
              } catch (const Json::parse_error& e) {
                  throw Error(ErrorCode::ParseError, e.what());
              }
              return classification_report(module_from_json(parsed)).dump();
          },
          py::arg("module_json"));

    m.def(
        "count_commuting_nilpotent_pairs",
        [](std::size_t n, std::uint32_t q, unsigned threads) {
            py::gil_scoped_release release;
            return count_commuting_nilpotent_pairs(n, q, OracleOptions{threads, OracleOptions{}.budget});
        },
        py::arg("n"), py::arg("q"), py::arg("threads") = 1);
    m.def("gl_order", [](unsigned n, std::uint64_t q) { return gl_order(n, q).get_str(); }, py::arg("n"), py::arg("q"));

    m.def(
        "enumerate_parallelogram",
        [](int area) {
            std::vector<std::vector<std::pair<int, int>>> out;
            for (const auto& d : enumerate_parallelogram(area)) {
                std::vector<std::pair<int, int>> rows;
                for (const auto& r : d.rows()) rows.emplace_back(r.first, r.last);
                out.push_back(std::move(rows));
            }
            return out;
        },
        py::arg("area"));
    m.def("fixed_module_count", [](int n) { return enumerate_fixed_modules(n).size(); }, py::arg("n"));
    m.def(
        "area_series",
        [](int max_area) {
            const QSeries s = specialize_t_one(parallelogram_gf(max_area, max_area));
            std::vector<std::string> out;
            for (const auto& c : s.coefficients()) out.push_back(c.get_str());
            return out;
        },
        py::arg("max_area"));
}
