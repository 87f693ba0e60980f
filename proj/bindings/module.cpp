// Thin python surface: algebras load from the line-oriented format and every
// report is handed over as a JSON string with stable key order, so the python
// side stays a plain json.loads away from dicts.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "homsuper/cli_format.hpp"
#include "homsuper/cli_reports.hpp"
#include "homsuper/core_algebra.hpp"
#include "homsuper/ideals.hpp"

namespace py = pybind11;
using namespace homsuper;

namespace {

// A seed is either a basis name or comma-separated rational coordinates.
std::pair<std::string, Vec> parse_seed(const HomLieSuperAlgebra& a, const std::string& text) {
  if (auto idx = a.basis_index(text)) return {text, unit_vec(a.dim(), *idx)};
  Vec v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(scalar_from_string(tok));
  if (v.size() != a.dim()) throw Error(Err::DimensionMismatch, "seed '" + text + "': expected " +
                                                                   std::to_string(a.dim()) +
                                                                   " coordinates");
  return {text, v};
}

IdealSide side_from_string(const std::string& s) {
  if (s == "left") return IdealSide::Left;
  if (s == "right") return IdealSide::Right;
  if (s == "two_sided") return IdealSide::TwoSided;
  throw std::invalid_argument("side must be left, right, or two_sided");
}

std::optional<Parity> parity_from_string(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  if (*s == "even") return Parity::Even;
  if (*s == "odd") return Parity::Odd;
  throw std::invalid_argument("parity must be even or odd");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-rational hom-lie superalgebra core";

  py::register_exception<Error>(m, "HomsuperError");

  py::class_<HomLieSuperAlgebra>(m, "Algebra")
      .def_property_readonly("name", &HomLieSuperAlgebra::name)
      .def_property_readonly("dim", &HomLieSuperAlgebra::dim)
      .def_property_readonly("even_dim", &HomLieSuperAlgebra::even_dim)
      .def_property_readonly("odd_dim", &HomLieSuperAlgebra::odd_dim)
      .def_property_readonly("basis_names", &HomLieSuperAlgebra::basis_names)
      .def("serialize", &serialize_algebra)
      .def("verify_json", [](const HomLieSuperAlgebra& a) { return verify_report(a).dump(); })
      .def("analyze_json", [](const HomLieSuperAlgebra& a) { return analyze_report(a).dump(); })
      .def("killing_json", [](const HomLieSuperAlgebra& a) { return killing_report(a).dump(); })
      .def("forms_json", [](const HomLieSuperAlgebra& a) { return forms_report(a).dump(); })
      .def(
          "ideals_json",
          [](const HomLieSuperAlgebra& a, const std::vector<std::string>& seeds,
             const std::string& side, bool graded, bool alpha_invariant) {
            std::vector<std::pair<std::string, Vec>> labeled;
            for (const auto& s : seeds) labeled.push_back(parse_seed(a, s));
            IdealSpec spec{side_from_string(side), graded, alpha_invariant};
            return ideals_report(a, labeled, spec).dump();
          },
          py::arg("seeds") = std::vector<std::string>{}, py::arg("side") = "two_sided",
          py::arg("graded") = false, py::arg("alpha_invariant") = false)
      .def("decompose_json",
           [](const HomLieSuperAlgebra& a) { return decompose_report(a).dump(); })
      .def(
          "derivations_json",
          [](const HomLieSuperAlgebra& a, long k, const std::optional<std::string>& parity) {
            return derivations_report(a, k, parity_from_string(parity)).dump();
          },
          py::arg("k"), py::arg("parity") = std::nullopt)
      .def("criterion_json",
           [](const HomLieSuperAlgebra& a) { return criterion_report(a).dump(); })
      .def("__repr__", [](const HomLieSuperAlgebra& a) {
        return "<Algebra '" + a.name() + "' dim " + std::to_string(a.even_dim()) + "|" +
               std::to_string(a.odd_dim()) + ">";
      });

  m.def("load", &load_algebra_file, py::arg("path"));
  m.def("parse", &parse_algebra_string, py::arg("text"));
}
