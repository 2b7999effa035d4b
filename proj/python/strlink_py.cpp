#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "strlink/algebra.hpp"
#include "strlink/builtins.hpp"
#include "strlink/classify.hpp"
#include "strlink/conway.hpp"
#include "strlink/error.hpp"
#include "strlink/json_io.hpp"
#include "strlink/milnor.hpp"

namespace py = pybind11;
using namespace strlink;

namespace {

// Results cross the boundary as JSON text and are decoded on the Python side.
std::string dump(const OrderedJson& j) { return j.dump(); }

ClassifyOptions opts(int magnus_cap, int crossing_cap) { return {magnus_cap, crossing_cap}; }

std::optional<AmbientPresentation> ambient_of(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  return load_ambient(*text);
}

}  // namespace

PYBIND11_MODULE(_strlink, m) {
  m.doc() = "Invariants of framed string links";

  static py::exception<Error> base(m, "StrlinkError", PyExc_ValueError);
  static py::exception<Error> input(m, "InputError", base.ptr());
  static py::exception<Error> resource(m, "ResourceLimitError", base.ptr());
  static py::exception<Error> precondition(m, "PreconditionError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      switch (e.kind()) {
        case ErrorKind::Input: py::set_error(input, e.what()); break;
        case ErrorKind::ResourceLimit: py::set_error(resource, e.what()); break;
        case ErrorKind::Precondition: py::set_error(precondition, e.what()); break;
      }
    }
  });

  m.def("normalize_tangle", [](const std::string& t) { return to_text(load_tangle(t)); },
        py::arg("tangle"), "Parse tangle text or JSON and print it back as text.");

  m.def("tau_json",
        [](const std::string& t, std::optional<std::string> ambient, int q, int cap) {
          const auto amb = ambient_of(ambient);
          return dump(to_json(tau(load_tangle(t), amb ? &*amb : nullptr, opts(q, cap))));
        },
        py::arg("tangle"), py::arg("ambient") = py::none(), py::arg("magnus_cap") = kDefaultMagnusCap,
        py::arg("crossing_cap") = 20);

  m.def("vassiliev_json",
        [](const std::string& t, int q, int cap) {
          return dump(to_json(vassiliev_vector(load_tangle(t), opts(q, cap))));
        },
        py::arg("tangle"), py::arg("magnus_cap") = kDefaultMagnusCap, py::arg("crossing_cap") = 20);

  m.def("mu3",
        [](const std::string& t, int i, int j, int k, int q) { return mu3(load_tangle(t), i, j, k, q); },
        py::arg("tangle"), py::arg("i"), py::arg("j"), py::arg("k"), py::arg("magnus_cap") = kDefaultMagnusCap);

  m.def("conway_coefficients",
        [](const std::string& t, std::optional<std::vector<int>> strands, int cap) {
          const LinkDiagram link = strands ? close(load_tangle(t), *strands) : load_link(t);
          return conway(link, {cap}).coefficients();
        },
        py::arg("diagram"), py::arg("strands") = py::none(), py::arg("crossing_cap") = 20);

  m.def("v2", [](const std::string& t, int cap) { return v2(load_tangle(t), {cap}); }, py::arg("tangle"),
        py::arg("crossing_cap") = 20);

  m.def("y2_equivalent",
        [](const std::string& a, const std::string& b, std::optional<std::string> amb_a,
           std::optional<std::string> amb_b) {
          return y2_equivalent({load_tangle(a), ambient_of(amb_a)}, {load_tangle(b), ambient_of(amb_b)});
        },
        py::arg("a"), py::arg("b"), py::arg("ambient_a") = py::none(), py::arg("ambient_b") = py::none());

  m.def("clasp_pass_equivalent",
        [](const std::string& a, const std::string& b) {
          return clasp_pass_equivalent(load_tangle(a), load_tangle(b));
        },
        py::arg("a"), py::arg("b"));

  m.def("normalize_json", [](const std::string& expr, int n) { return dump(to_json(normalize(parse_element(expr, n)))); },
        py::arg("expr"), py::arg("n"));

  m.def("mj_relabel",
        [](const std::string& expr, int genus, std::optional<std::vector<int>> perm) {
          const AlgebraElement x = parse_surface_element(expr, genus);
          return to_string(mj_relabel(x, perm ? *perm : default_mj_permutation(genus)));
        },
        py::arg("expr"), py::arg("genus"), py::arg("perm") = py::none());

  m.def("builtin",
        [](const std::string& name, int n, std::vector<int> indices) {
          const Builtin b = builtin(name, n, indices);
          if (const auto* d = std::get_if<StringLinkDiagram>(&b)) return to_text(*d);
          return dump(to_json(std::get<AmbientPresentation>(b)));
        },
        py::arg("name"), py::arg("n") = 1, py::arg("indices") = std::vector<int>{});
}
