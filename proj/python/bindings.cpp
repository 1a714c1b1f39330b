#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "su3sb/irreps.hpp"
#include "su3sb/su2.hpp"
#include "su3sb/suites.hpp"

namespace py = pybind11;
using namespace su3sb;

namespace {

// States and reports cross the boundary as JSON text; the Python side parses them.
std::string irrep_json(const std::vector<int>& upper, const std::vector<int>& lower, const std::string& method) {
  return irrep_state_json(build_irrep(IrrepRequest::make(upper, lower), parse_method(method))).dump();
}

std::string verify_json(const std::string& suite, int max_total) {
  VerifyOptions options;
  options.max_total = max_total;
  return run_suite(suite, options).to_json().dump();
}

std::string tower_json(const std::vector<int>& upper, const std::vector<int>& lower, int rho) {
  auto state = tower_state(IrrepRequest::make(upper, lower), rho);
  auto weight = sp2r_weight(state);
  Json j;
  j["rho"] = rho;
  j["k"] = weight.k.to_string();
  j["m_prime"] = weight.m_prime.to_string();
  j["terms"] = state_json(state);
  return j.dump();
}

std::string su2_json(const std::vector<int>& indices) {
  auto state = su2_irrep_state(indices);
  Json j;
  j["indices"] = state.indices;
  j["j"] = state.j().to_string();
  j["m"] = state.m().to_string();
  j["terms"] = state_json(state.vector);
  return j.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact SU(3) irreps from two-triplet Schwinger bosons";

  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  m.def("irrep_json", &irrep_json, py::arg("upper"), py::arg("lower"), py::arg("method") = "isb");
  m.def("verify_json", &verify_json, py::arg("suite"), py::arg("max_total") = 5);
  m.def("tower_json", &tower_json, py::arg("upper"), py::arg("lower"), py::arg("rho"));
  m.def("su2_irrep_json", &su2_json, py::arg("indices"));
  m.def("gram_rank", &gram_rank, py::arg("n"), py::arg("m"), py::arg("max_total") = 5);
  m.def("irrep_dimension", &irrep_dimension, py::arg("n"), py::arg("m"));
  m.def(
      "coefficient_l", [](int r, int n, int mm) { return coefficient_l(r, n, mm).to_string(); }, py::arg("r"),
      py::arg("n"), py::arg("m"));
  m.def(
      "coefficient_L", [](int r, int n, int mm) { return coefficient_L(r, n, mm).to_string(); }, py::arg("r"),
      py::arg("n"), py::arg("m"));
  m.attr("suite_names") = suite_names();
}
