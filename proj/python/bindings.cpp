#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tmcg/bv.hpp"
#include "tmcg/errors.hpp"
#include "tmcg/explorer.hpp"
#include "tmcg/suites.hpp"

namespace py = pybind11;
using namespace tmcg;

PYBIND11_MODULE(_tmcg, m) {
  m.doc() = "Thompson groups, braided tree pairs and the universal mapping class group";

  static py::exception<Error> base(m, "TmcgError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<NonConvergenceError>(m, "NonConvergenceError", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<AddressError>(m, "AddressError", base.ptr());

  py::class_<VElement>(m, "VElement")
      .def(py::init<>())
      .def_static("parse", [](std::string const& w) { return project_v(parse_word(w)); },
                  "Evaluate a word in t p b a in V.")
      .def_static("from_symbol", [](std::string const& s) { return reduce(Symbol::parse(s)); })
      .def("__mul__", &multiply_v)
      .def("inverse", &invert_v)
      .def("__pow__", &power_v)
      .def("is_identity", [](VElement const& x) { return is_identity(x); })
      .def("in_T", [](VElement const& x) { return classify(x).in_T; })
      .def("in_F", [](VElement const& x) { return classify(x).in_F; })
      .def("__eq__", [](VElement const& a, VElement const& b) { return a == b; })
      .def("__hash__", [](VElement const& x) { return VElementHash{}(x); })
      .def("__repr__", &VElement::to_string);

  py::class_<BElement>(m, "BElement")
      .def(py::init<>())
      .def_static("parse", &BElement::parse)
      .def_static("from_moves", py::overload_cast<std::string_view>(&eval_move_word))
      .def("__mul__", &b_multiply)
      .def("inverse", py::overload_cast<BElement const&>(&b_invert))
      .def("__pow__", &b_power)
      .def("is_identity", &b_is_identity)
      .def("normal_form", [](BElement const& x) { return x.normal_form().to_string(); })
      .def("project_v", py::overload_cast<BElement const&>(&project_v))
      .def("__eq__", &b_equal)
      .def("__repr__", &BElement::to_string);

  py::class_<BVElement>(m, "BVElement")
      .def(py::init<>())
      .def_static("parse", &bv_parse)
      .def("__mul__", &bv_multiply)
      .def("inverse", &bv_invert)
      .def("__pow__", &bv_power)
      .def("is_identity", &bv_is_identity)
      .def("reduced", &bv_reduce)
      .def("project_v", py::overload_cast<BVElement const&>(&project_v))
      .def("embed", &embed_bv)
      .def("__eq__", &bv_equal)
      .def("__repr__", &BVElement::to_string);

  m.def("t_section", &t_section);
  m.def("set_budget", &set_default_budget);
  m.def("psl2_probe", &psl2_probe);
  m.def(
      "cayley_ball",
      [](int radius, int jobs) {
        auto const b = cayley_ball(radius, 6, jobs);
        py::dict   d;
        d["radius"]  = b.radius;
        d["nodes"]   = b.nodes;
        d["edges"]   = b.edges;
        d["spheres"] = b.spheres;
        return d;
      },
      py::arg("radius"), py::arg("jobs") = 1);
  m.def("suite_names", [] {
    std::vector<std::string> names;
    for (auto const& s : load_suites()) {
      names.push_back(s.name);
    }
    return names;
  });
  m.def(
      "run_suite",
      [](std::string const& name, int jobs, long iters) {
        auto const suites = load_suites();
        auto const cert   = run_suite(find_suite(suites, name), {jobs, iters});
        return py::module_::import("json").attr("loads")(cert.to_json());
      },
      py::arg("name"), py::arg("jobs") = 1, py::arg("iters") = 1'000'000);
}
