#include "seifert/cli.hpp"
#include "seifert/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace seifert;

namespace {

using IntMatrix = std::vector<std::vector<long long>>;

Mat2 to_mat2(IntMatrix const &m) {
  if (m.size() != 2 || m[0].size() != 2 || m[1].size() != 2)
    throw py::value_error("expected a 2x2 integer matrix");
  return Mat2(static_cast<long>(m[0][0]), static_cast<long>(m[0][1]), static_cast<long>(m[1][0]),
              static_cast<long>(m[1][1]));
}

std::vector<RotationPair> rotations(std::vector<std::string> const &gens) {
  std::vector<RotationPair> out;
  for (auto const &g : gens)
    out.push_back(parse_rotation(g));
  return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Seifert manifold invariants, group families and quotient data";
  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  m.def(
      "run_cli",
      [](std::vector<std::string> const &args, std::string const &stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int code = cli::run(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "", "Run the command-line front end; returns (exit code, stdout, stderr).");

  m.def(
      "normalize", [](std::string const &text) { return format_invariants(normalize(parse_invariants(text))); },
      py::arg("invariants"));
  m.def(
      "euler_class", [](std::string const &text) { return to_string(euler_class(parse_invariants(text))); },
      py::arg("invariants"), "Euler class as an exact fraction string.");
  m.def(
      "core_order", [](std::vector<std::string> const &gens) { return to_string(core_order(rotations(gens))); },
      py::arg("generators"), "Core order by enumerating the generated rotation group.");
  m.def(
      "core_order_formula",
      [](std::vector<std::string> const &gens) {
        return to_string(formula_core_order({rotations(gens), false}));
      },
      py::arg("generators"));
  m.def(
      "solve_conjugate",
      [](IntMatrix const &pt, IntMatrix const &d, IntMatrix const &pv) {
        return to_json(solve_conjugate(to_mat2(pt), to_mat2(d), to_mat2(pv))).dump();
      },
      py::arg("torus_projection"), py::arg("filling"), py::arg("boundary_projection"),
      "D' with pT d = D' pV, as a JSON matrix.");
  m.def(
      "quotient",
      [](std::string const &description) {
        auto in = quotient_input_from_json(Json::parse(description));
        Json j;
        j["schema"] = kSchemaVersion;
        j["quotient"] = to_json(assemble_quotient(in.invariants, in.action));
        return j.dump();
      },
      py::arg("description"), "Quotient descriptor of a JSON action description, as JSON.");

  py::register_exception<InvalidAction>(m, "InvalidAction", PyExc_ValueError);
  py::register_exception<ConstraintViolation>(m, "ConstraintViolation", PyExc_ValueError);
  py::register_exception<NonIntegralSolution>(m, "NonIntegralSolution", PyExc_ArithmeticError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidInvariants>(m, "InvalidInvariants", PyExc_ValueError);
}
