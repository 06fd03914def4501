#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lpadic/bernoulli.hpp"
#include "lpadic/cli.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_lpadic, m) {
  m.doc() = "p-adic L-functions via the Bernoulli measure";

  static py::exception<lpadic::Error> error(m, "LpadicError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const lpadic::Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        const lpadic::cli::Command command = lpadic::cli::parse_args(args);
        lpadic::cli::RunResult result;
        {
          py::gil_scoped_release release;
          result = lpadic::cli::run(command);
        }
        return py::make_tuple(result.exit_code, result.output.dump());
      },
      py::arg("args"),
      "Runs a command-line invocation; returns (exit code, JSON text).");

  m.def(
      "bernoulli", [](unsigned long n) { return lpadic::bernoulli(n).get_str(); }, py::arg("n"),
      "B_n as a string p/q, with B_1 = -1/2.");
}
