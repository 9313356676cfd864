// Python bindings: the command layer of the descent calculator, with
// JSON strings as the exchange format (the package wraps them in dicts).

#include <pybind11/pybind11.h>

#include "galdesc/driver.hpp"

namespace py = pybind11;
using namespace galdesc;

namespace {

std::string run_verify(const std::string& problem) {
  return report_to_json(cmd_verify(problem_from_json(json::parse(problem)))).dump();
}

std::string run_descend(const std::string& problem) {
  return report_to_json(cmd_descend(problem_from_json(json::parse(problem)))).dump();
}

std::string run_artin(const std::string& problem) {
  return report_to_json(cmd_artin(problem_from_json(json::parse(problem)))).dump();
}

std::string run_exactseq(const std::string& pair) {
  std::shared_ptr<GroupRepSetting> p;
  if (pair == "s3")
    p = s3_pair();
  else if (pair == "d4")
    p = d4_pair();
  else {
    GroupFile gf = group_from_json(json::parse(pair));
    p = make_grouprep(std::move(gf.group), std::move(gf.normal), std::move(gf.field));
  }
  return report_to_json(cmd_exactseq(p)).dump();
}

std::string run_selftest(unsigned seed, int cases) {
  return report_to_json(cmd_selftest(seed, cases)).dump();
}

}  // namespace

PYBIND11_MODULE(_galdesc, m) {
  m.doc() = "exact Galois descent engine";
  m.attr("__version__") = kToolVersion;

  // translators run newest-first, so the base class goes in first
  py::register_exception<Error>(m, "EngineError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CocycleViolation>(m, "CocycleViolation", PyExc_ValueError);
  py::register_exception<NotArtin>(m, "NotArtin", PyExc_ValueError);

  m.def("verify", &run_verify, py::arg("problem"),
        "Validate a descent setting / datum; takes and returns JSON strings.");
  m.def("descend", &run_descend, py::arg("problem"),
        "Run descent on a datum; the report's artifact holds the result.");
  m.def("artin", &run_artin, py::arg("problem"),
        "Invert a finite-group representation to a downstairs object.");
  m.def("exactseq", &run_exactseq, py::arg("pair"),
        "Exact-sequence diagnostics: \"s3\", \"d4\", or a group-file JSON string.");
  m.def("selftest", &run_selftest, py::arg("seed") = 0, py::arg("cases") = 10,
        "Deterministic property suite over the shipped settings.");
}
