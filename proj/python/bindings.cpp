#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sphlie/report.hpp"

namespace py = pybind11;
using namespace sphlie;

namespace {

std::string json_str(const Json& j) { return j.dump(2); }

Analysis analyze_text(const std::string& text) { return Analysis::run(parse_pair_text(text)); }

Analysis analyze_catalog(const std::string& name) {
  Json doc;
  doc["format"] = 1;
  doc["algebra"] = name;
  return Analysis::run(parse_pair_file(doc));
}

std::vector<std::string> spherical_root_names(const Analysis& an) {
  std::vector<std::string> out;
  for (int i = 0; i < an.srd.num_spherical(); ++i)
    out.push_back(root_name(an.sp.g->rs(), an.srd.spherical_root(i)));
  return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact structure theory of real spherical pairs";

  py::register_exception<Error>(m, "SphlieError");

  py::class_<Analysis>(m, "Analysis")
      .def_property_readonly("rank", [](const Analysis& an) { return an.sp.rank(); })
      .def_property_readonly("dim_g", [](const Analysis& an) { return an.sp.g->dim(); })
      .def_property_readonly("dim_h", [](const Analysis& an) { return an.sp.h.dim(); })
      .def_property_readonly("F_Q", [](const Analysis& an) { return an.sp.F_Q; })
      .def_property_readonly("spherical_roots", &spherical_root_names)
      .def_property_readonly("num_spherical",
                             [](const Analysis& an) { return an.srd.num_spherical(); })
      .def_property_readonly("edge_dim", [](const Analysis& an) { return an.srd.edge.cols(); })
      .def("is_wavefront", [](const Analysis& an) { return is_wavefront(an.sp, an.srd); })
      .def("is_unimodular",
           [](const Analysis& an) {
             return is_zero(unimodularity_functional(an.sp.h).coeffs);
           })
      .def("analyze_json", [](const Analysis& an) { return json_str(analyze_report(an)); })
      .def("wavefront_json", [](const Analysis& an) { return json_str(wavefront_json(an)); })
      .def("twists_json", [](const Analysis& an) { return json_str(twists_report(an)); })
      .def(
          "degenerate_json",
          [](const Analysis& an, const std::vector<int>& I) {
            return json_str(degenerate_report(an, I));
          },
          py::arg("I"))
      .def(
          "induce_json",
          [](const Analysis& an, const std::vector<int>& F) {
            return json_str(induce_report(an, F));
          },
          py::arg("F"))
      .def("exponents_json", [](const Analysis& an) { return json_str(exponents_report(an)); });

  m.def("analyze", &analyze_text, py::arg("pair_file_text"),
        "run the full analysis on a pair document (JSON text, format 1)");
  m.def("analyze_catalog", &analyze_catalog, py::arg("name"),
        "run the full analysis on a catalog entry");
  m.def("catalog", []() { return json_str(catalog_report("")); });
  m.def("catalog_pair_file", [](const std::string& name) { return json_str(catalog_report(name)); });
  m.def("selftest", []() {
    std::ostringstream ss;
    int failures = selftest(ss);
    return py::make_tuple(failures, ss.str());
  });
}
