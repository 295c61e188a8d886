/*
   Copyright 2026 The cftk Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cftk/cli.hpp"
#include "cftk/factor.hpp"
#include "cftk/json_io.hpp"
#include "cftk/witness.hpp"

namespace py = pybind11;

namespace {

std::pair<int, std::string> run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = cftk::run_cli(args, out, err);
  }
  return {code, out.str()};
}

std::vector<std::pair<std::vector<std::string>, int>> factor_rational(const std::vector<std::string>& coeffs) {
  cftk::QPoly p;
  for (const auto& c : coeffs) p.push_back(cftk::rationals()->parse(c).rational());
  cftk::qp::trim(p);
  if (p.empty()) cftk::fail(cftk::ErrorKind::ZeroPolynomial, "zero polynomial");
  std::vector<std::pair<std::vector<std::string>, int>> out;
  for (const auto& [f, m] : cftk::factor_rational(p).factors) {
    std::vector<std::string> cs;
    for (const auto& c : f) cs.push_back(c.get_str());
    out.emplace_back(cs, m);
  }
  return out;
}

std::string diamond(const std::vector<std::size_t>& f, const std::vector<std::size_t>& g) {
  return cftk::io::dump(cftk::io::to_json(cftk::diamond_witness(f, g)));
}

}  // namespace

PYBIND11_MODULE(_cftk, m) {
  m.doc() = "Exact computations with explicit field towers";

  py::register_exception<cftk::Error>(m, "DomainError", PyExc_ValueError);

  m.def("run", &run, py::arg("args"),
        "Run one command line; returns the exit code and the JSON text written to standard output.");
  m.def("factor_rational", &factor_rational, py::arg("coeffs"),
        "Monic irreducible factors over Q of the polynomial with the given coefficients, constant first.");
  m.def("diamond_witness", &diamond, py::arg("f"), py::arg("g"), "Separation certificate as JSON text.");
}
