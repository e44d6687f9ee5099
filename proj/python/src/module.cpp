#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "latspec/cli.hpp"
#include "latspec/decomposition.hpp"
#include "latspec/instances.hpp"
#include "latspec/io.hpp"
#include "latspec/lattice.hpp"
#include "latspec/topology.hpp"

namespace py = pybind11;
using namespace latspec;

namespace {

std::vector<std::string> names(const IdealLattice& l, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (Element x : xs) out.push_back(l.name(x));
  return out;
}

std::vector<std::string> point_names(const FiniteSpace& x, PointSet s) {
  std::vector<std::string> out;
  for (Point p : s.to_vector()) out.push_back(x.name(p));
  return out;
}

py::dict decompose(const IdealLattice& l, const std::string& a) {
  const PrimeSpectrum spec(l);
  const Decomposition d = decompose_semiprime(spec, l.at(a));
  py::list supports;
  for (PointSet s : d.supports) supports.append(point_names(spec.dual(), s));
  py::dict out;
  out["blocks"] = names(l, d.blocks);
  out["supports"] = supports;
  out["join_matches"] = d.join_matches;
  out["meets_bottom"] = d.meets_bottom;
  out["meets_radical_only"] = d.meets_radical_only;
  out["degenerate"] = d.degenerate;
  return out;
}

}  // namespace

PYBIND11_MODULE(_latspec, m) {
  m.doc() = "Finite ideal lattices, their prime spectra and support data";

  static py::exception<Error> error(m, "Error");
  static py::exception<ParseError> parse_error(m, "ParseError", error.ptr());
  static py::exception<ValidationError> validation_error(m, "ValidationError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, ("line " + std::to_string(e.line()) + ": " + e.what()).c_str());
    } catch (const ValidationError& e) {
      py::set_error(validation_error, (e.check() + ": " + e.what()).c_str());
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<IdealLattice>(m, "IdealLattice")
      .def_static("parse", [](const std::string& text) { return IdealLattice::build(io::parse_lattice(text)); },
                  py::arg("text"))
      .def_static("divisors", &divisor_lattice, py::arg("n"))
      .def_static("residue_ideals", [](std::size_t n) { return semiring_ideal_lattice(residue_semiring(n)).lattice; },
                  py::arg("n"))
      .def("__len__", &IdealLattice::size)
      .def_property_readonly("names", &IdealLattice::names)
      .def_property_readonly("top", [](const IdealLattice& l) { return l.name(l.top()); })
      .def_property_readonly("bottom", [](const IdealLattice& l) { return l.name(l.bottom()); })
      .def("leq", [](const IdealLattice& l, const std::string& a, const std::string& b) { return l.leq(l.at(a), l.at(b)); })
      .def("mul", [](const IdealLattice& l, const std::string& a, const std::string& b) { return l.name(l.mul(l.at(a), l.at(b))); })
      .def("join", [](const IdealLattice& l, const std::string& a, const std::string& b) { return l.name(l.join(l.at(a), l.at(b))); })
      .def("meet", [](const IdealLattice& l, const std::string& a, const std::string& b) { return l.name(l.meet(l.at(a), l.at(b))); })
      .def("primes", [](const IdealLattice& l) { return names(l, spec_set(l)); })
      .def("is_prime", [](const IdealLattice& l, const std::string& a) { return is_prime(l, l.at(a)); })
      .def("is_semiprime", [](const IdealLattice& l, const std::string& a) { return is_semiprime(l, l.at(a)); })
      .def("radical", [](const IdealLattice& l, const std::string& a) { return l.name(radical(l, l.at(a))); })
      .def("supp", [](const IdealLattice& l, const std::string& a) { return names(l, d_set(l, l.at(a))); })
      .def("decompose", &decompose, py::arg("element"))
      .def("to_text", [](const IdealLattice& l) { return io::write_lattice(l.data()); })
      .def("to_json", [](const IdealLattice& l) { return io::to_json(l).dump(2); });

  m.def(
      "run",
      [](const std::vector<std::string>& args, const std::string& input) {
        std::istringstream in(input);
        std::ostringstream out, err;
        const int code = cli::run(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "",
      "Runs the command-line tool in process; returns (exit code, stdout, stderr).");
}
