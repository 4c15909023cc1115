// Python bindings. Matrices travel as lists of integer lists, polynomials
// and reports as JSON text in the same schemas the command-line tool uses.

#include "hkdisc/arrangement.hpp"
#include "hkdisc/degree.hpp"
#include "hkdisc/discop.hpp"
#include "hkdisc/error.hpp"
#include "hkdisc/io.hpp"
#include "hkdisc/lattice.hpp"
#include "hkdisc/staircase.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hkdisc;
using io::json;

namespace {

IntMatrix to_matrix(const std::vector<std::vector<long long>>& rows) {
  json j{{"rows", rows}};
  return io::matrix_from_json(j);
}

MPoly to_poly(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(e.what());
  }
  return io::poly_from_json(j);
}

std::vector<Point2> to_points(const std::vector<std::pair<long, long>>& pts) { return pts; }

} // namespace

PYBIND11_MODULE(_hkdisc, m) {
  m.doc() = "Discriminants of Horn-Kapranov parametrizations (compiled core)";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);

  m.def("implicitize", [](const std::vector<std::vector<long long>>& c, std::uint64_t seed) {
    return io::poly_to_json(implicitize_m2(ParamSpec::build(to_matrix(c)), seed)).dump();
  }, py::arg("c"), py::arg("seed") = 0);

  m.def("degree", [](const std::vector<std::vector<long long>>& c, std::uint64_t seed, int trials) {
    return io::degree_report_to_json(degree_uniform(to_matrix(c), seed, trials)).dump();
  }, py::arg("c"), py::arg("seed") = 0, py::arg("trials") = kDefaultTrials);

  m.def("transfer", [](const std::string& delta, const std::vector<std::vector<long long>>& mat) {
    auto r = transfer(to_poly(delta), to_matrix(mat));
    return json{{"polynomial", io::poly_to_json(r.delta)}, {"v", io::int_vector_to_json(r.v)}, {"sign", r.sign}}
        .dump();
  }, py::arg("delta"), py::arg("m"));

  m.def("group_product", [](const std::string& f, const std::vector<std::vector<long long>>& mat) {
    return io::poly_to_json(group_product(to_poly(f), to_matrix(mat))).dump();
  }, py::arg("f"), py::arg("m"));

  m.def("gauss_check", [](const std::vector<std::vector<long long>>& c, const std::string& delta, int trials,
                          std::uint64_t seed) {
    return gauss_inverse_check(ParamSpec::build(to_matrix(c)), to_poly(delta), trials, seed);
  }, py::arg("c"), py::arg("delta"), py::arg("trials") = 20, py::arg("seed") = 0);

  m.def("diagram_check", [](const std::vector<std::vector<long long>>& c1, const std::vector<std::vector<long long>>& c2,
                            const std::vector<std::vector<long long>>& mat, int trials, std::uint64_t seed) {
    return diagram_check(to_matrix(c1), to_matrix(c2), to_matrix(mat), trials, seed);
  }, py::arg("c1"), py::arg("c2"), py::arg("m"), py::arg("trials") = 20, py::arg("seed") = 0);

  m.def("defect", [](const std::vector<std::vector<long long>>& c, int trials, std::uint64_t seed) {
    return std::string(to_string(defect_test(ParamSpec::build(to_matrix(c)), trials, seed)));
  }, py::arg("c"), py::arg("trials") = kDefaultTrials, py::arg("seed") = 0);

  m.def("gcd_maximal_minors", [](const std::vector<std::vector<long long>>& c) {
    return to_string(gcd_maximal_minors(to_matrix(c)));
  }, py::arg("c"));

  m.def("homogenize", [](const std::string& delta, const std::vector<std::vector<long long>>& b) {
    return io::poly_to_json(homogenize_to_DA(to_poly(delta), to_matrix(b))).dump();
  }, py::arg("delta"), py::arg("b"));

  m.def("staircase_multiplicity", [](const std::vector<std::pair<long, long>>& gens) {
    return staircase_multiplicity(Staircase2(to_points(gens)));
  }, py::arg("gens"));

  m.def("colength", [](const std::vector<std::pair<long, long>>& gens) {
    return colength(Staircase2(to_points(gens)));
  }, py::arg("gens"));

  m.def("sparse_origin_multiplicity", [](const std::vector<std::pair<long, long>>& exps) {
    return sparse_origin_multiplicity(to_points(exps));
  }, py::arg("exponents"));
}
