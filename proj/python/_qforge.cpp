#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qforge/dsl.hpp"
#include "qforge/error.hpp"
#include "qforge/report.hpp"

namespace py = pybind11;

namespace {

// Runs one report command on presentation text; returns the JSON report text.
std::string run(const std::string& command, const std::string& text, const std::string& file_name,
                std::optional<std::string> theta, std::optional<std::string> central, std::optional<std::size_t> maxdeg,
                std::optional<std::size_t> max_degree, std::size_t degree, int times, bool direct,
                bool skip_clifford_check, std::optional<std::uint64_t> resource_cap) {
  qforge::CommandOptions o;
  o.command = command;
  o.file_text = text;
  o.file_name = file_name;
  o.theta = std::move(theta);
  o.central = std::move(central);
  o.maxdeg = maxdeg;
  o.max_degree = max_degree;
  o.degree = degree;
  o.times = times;
  o.direct = direct;
  o.skip_clifford_check = skip_clifford_check;
  o.limits = qforge::Limits::from_env();
  if (resource_cap) o.limits.word_cap = *resource_cap;
  o.limits.degree_cap = max_degree;
  qforge::Json report;
  {
    py::gil_scoped_release release;
    report = qforge::run_command(o);
  }
  return qforge::emit_report(report, true);
}

}  // namespace

PYBIND11_MODULE(_qforge, m) {
  m.doc() = "Exact computations with quadratic algebras and Clifford deformations";

  static py::exception<qforge::Error> error(m, "QForgeError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const qforge::Error& e) {
      error((std::string(qforge::error_code_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  m.def("run", &run, py::arg("command"), py::arg("text"), py::arg("file_name") = "<string>",
        py::arg("theta") = py::none(), py::arg("central") = py::none(), py::arg("maxdeg") = py::none(),
        py::arg("max_degree") = py::none(), py::arg("degree") = 2, py::arg("times") = 1, py::arg("direct") = false,
        py::arg("skip_clifford_check") = false, py::arg("resource_cap") = py::none());

  m.def("exit_code", [](const std::string& report) { return qforge::exit_code(qforge::Json::parse(report)); });

  m.def("canonical", [](const std::string& text) { return qforge::print_presentation(qforge::parse_presentation(text)); },
        "Canonical printed form of a presentation file; raises QForgeError on bad input.");
}
