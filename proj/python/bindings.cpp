// Python bindings. Structured results cross the boundary as JSON text and
// are decoded on the Python side.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chamanara/json_io.hpp"
#include "chamanara/svg.hpp"

namespace py = pybind11;
using namespace chamanara;

namespace {

QuadRat q(const std::string& text) { return QuadRat::parse(text); }

}  // namespace

PYBIND11_MODULE(_chamanara, m) {
  m.doc() = "Exact computations on the Chamanara surface";

  // Translators run newest first, so the base class goes first.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("decompose_json", [](int n, int depth) { return to_json(decompose(n, depth)).dump(); }, py::arg("n"),
        py::arg("depth") = 8);
  m.def("decompose_csv", [](int n, int depth) { return to_csv(decompose(n, depth)); }, py::arg("n"),
        py::arg("depth") = 8);
  m.def("decompose_svg",
        [](int n, int depth) {
          const Surface s(depth);
          return decomposition_svg(s, decompose(s, n));
        },
        py::arg("n"), py::arg("depth") = 8);
  m.def("verify_json", [](int depth) { return to_json(verify_paper(depth)).dump(); }, py::arg("depth") = 8);
  m.def("reduce_json",
        [](const std::string& re, const std::string& im) {
          return to_json(reduce_to_domain(HPoint::interior(q(re), q(im)))).dump();
        },
        py::arg("re"), py::arg("im"));
  m.def("member_json",
        [](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
          return to_json(is_member(Mat2(q(a), q(b), q(c), q(d)))).dump();
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"));
  m.def("word_matrix_json", [](const std::string& word) { return to_json(Word::parse(word).matrix()).dump(); },
        py::arg("word"));
  m.def("surface_json", [](int depth) { return to_json(Surface(depth)).dump(); }, py::arg("depth") = 8);
  m.def("domain_svg",
        [](bool strip_only, bool annulus) {
          DomainSvgOptions o;
          o.strip_only = strip_only;
          o.annulus = annulus;
          return domain_svg(o);
        },
        py::arg("strip_only") = false, py::arg("annulus") = false);
  m.def("scan",
        [](int length) {
          const ParabolicScan s = parabolic_direction_scan(length);
          return py::dict(py::arg("words") = s.words_checked, py::arg("parabolics") = s.parabolics,
                          py::arg("counterexamples") = s.counterexamples.size());
        },
        py::arg("length") = 8);
}
