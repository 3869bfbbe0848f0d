#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mvsr/cli.hpp"
#include "mvsr/error.hpp"
#include "mvsr/json_io.hpp"
#include "mvsr/reports.hpp"
#include "mvsr/tensor.hpp"

namespace py = pybind11;
using namespace mvsr;

namespace {

std::string laws_json(const AxiomReport& r) { return dump_json(axiom_report_json(r)); }

}  // namespace

PYBIND11_MODULE(_mvsr, m) {
  m.doc() = "Finite MV-algebras, idempotent semirings and semimodules";

  static py::exception<Error> error(m, "MvsrError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      PyErr_SetObject(error.ptr(), inst.ptr());
    }
  });

  py::class_<FiniteSemiring>(m, "Semiring")
      .def_property_readonly("size", &FiniteSemiring::size)
      .def_property_readonly("zero", &FiniteSemiring::zero)
      .def_property_readonly("one", &FiniteSemiring::one)
      .def("add", &FiniteSemiring::add)
      .def("mul", &FiniteSemiring::mul)
      .def("label", &FiniteSemiring::label)
      .def("to_json", [](const FiniteSemiring& s) { return dump_json(to_json(s)); })
      .def_static("from_json", [](const std::string& t) { return semiring_from_json(parse_json_text(t)); })
      .def("check_axioms", [](const FiniteSemiring& s) { return laws_json(check_semiring_axioms(s)); });

  py::class_<MvAlgebra>(m, "MvAlgebra")
      .def_property_readonly("size", &MvAlgebra::size)
      .def_property_readonly("zero", &MvAlgebra::zero)
      .def_property_readonly("one", &MvAlgebra::one)
      .def("oplus", &MvAlgebra::oplus)
      .def("odot", &MvAlgebra::odot)
      .def("star", &MvAlgebra::star)
      .def("vee", &MvAlgebra::vee)
      .def("wedge", &MvAlgebra::wedge)
      .def("leq", &MvAlgebra::leq)
      .def("label", &MvAlgebra::label)
      .def("to_json", [](const MvAlgebra& a) { return dump_json(to_json(a)); })
      .def_static("from_json", [](const std::string& t) { return mv_from_json(parse_json_text(t)); })
      .def("check_axioms", [](const MvAlgebra& a) { return laws_json(check_mv_axioms(a)); });

  py::class_<FiniteSemimodule>(m, "Semimodule")
      .def_property_readonly("size", &FiniteSemimodule::size)
      .def_property_readonly("zero", &FiniteSemimodule::zero)
      .def("add", &FiniteSemimodule::add)
      .def("act", &FiniteSemimodule::act)
      .def("to_json", [](const FiniteSemimodule& x) { return dump_json(to_json(x)); })
      .def_static("from_json", [](const std::string& t) { return semimodule_from_json(parse_json_text(t)); })
      .def("check_axioms", [](const FiniteSemimodule& x) { return laws_json(check_semimodule(x)); });

  m.def("lukasiewicz_chain", &lukasiewicz_chain, py::arg("k"));
  m.def("product", py::overload_cast<const MvAlgebra&, const MvAlgebra&>(&product));
  m.def("reduct_vee_odot", &reduct_vee_odot);
  m.def("reduct_wedge_oplus", &reduct_wedge_oplus);
  m.def("star_is_reduct_isomorphism", &star_is_reduct_isomorphism);
  m.def("regular_module", [](const FiniteSemiring& s) { return regular_module(make_semiring(s)); });
  m.def("free_module", [](const FiniteSemiring& s, std::size_t rank) {
    return free_semimodule(make_semiring(s), rank).module;
  });

  m.def("tensor_report",
        [](const FiniteSemimodule& a, const FiniteSemimodule& b, const std::string& method) {
          const TensorProduct t =
              tensor_product(a, b, method == "separating" ? TensorMethod::Separating : TensorMethod::Quotient);
          return dump_json(tensor_report(t, universal_property(t)));
        },
        py::arg("left"), py::arg("right"), py::arg("method") = "quotient");
  m.def("k0_report", [](const FiniteSemiring& s, std::size_t n_max) {
    return dump_json(k0_report(k0(make_semiring(s), n_max)));
  });
  m.def("projective_report", [](const FiniteSemimodule& x) { return dump_json(projective_report(x)); });
  m.def("gamma_report",
        [](const std::string& unit, std::uint64_t samples, std::uint64_t seed, bool nonnegative) {
          return dump_json(gamma_report(gamma_property_report(
              parse_rational(unit), samples, seed, nonnegative ? GammaDomain::NonNegative : GammaDomain::Full)));
        },
        py::arg("unit") = "1", py::arg("samples") = 10000, py::arg("seed") = 42, py::arg("nonnegative") = false);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
