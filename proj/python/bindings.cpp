#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "h2cert/cli.hpp"
#include "h2cert/construction.hpp"
#include "h2cert/homology.hpp"
#include "h2cert/json_io.hpp"
#include "h2cert/rank_analysis.hpp"
#include "h2cert/series_text.hpp"
#include "h2cert/sieve.hpp"

namespace py = pybind11;
using namespace h2cert;

namespace {

// Structured results cross the boundary as JSON, decoded by the stdlib.
py::object to_py(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_py(const py::object& o) {
  return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

ModBiSeries explicit_mod(std::uint64_t p, std::size_t nx, std::size_t ny, bool antisym) {
  ZBiSeries f = build_F(nx, ny);
  if (antisym) f = antisymmetrize(f);
  return reduce_mod(f, RingTag::prime_field(p));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact series, rank and sieve certificates";

  auto error = py::register_exception<AlgebraError>(m, "AlgebraError", PyExc_ValueError);
  (void)error;

  m.def("exponents", [](long i, long k) {
    const auto e = exponents(i, k);
    return py::make_tuple(e.s, e.t);
  }, py::arg("i"), py::arg("k"));

  m.def("exponent_chain_holds", &exponent_chain_holds, py::arg("d"));

  m.def("build_f", [](std::size_t nx, std::size_t ny, bool antisym) {
    ZBiSeries f = build_F(nx, ny);
    if (antisym) f = antisymmetrize(f);
    return to_py(bi_series_json(f));
  }, py::arg("nx") = 100, py::arg("ny") = 100, py::arg("antisym") = false);

  m.def("observed_rank", [](std::uint64_t p, std::size_t nx, std::size_t ny) {
    return to_py(rank_json(observed_rank(explicit_mod(p, nx, ny, false))));
  }, py::arg("p"), py::arg("nx") = 250, py::arg("ny") = 250);

  m.def("find_sieve", [](std::uint64_t p, std::size_t n, std::size_t d, std::size_t nx, long deg) {
    const auto f = explicit_mod(p, nx, nx, true);
    const auto s = find_sieve(f, n, d, default_m_max(nx, n, d), deg);
    if (!s.certificate) return py::object(py::none());
    return to_py(certificate_json(*s.certificate));
  }, py::arg("p"), py::arg("n"), py::arg("d"), py::arg("nx") = 300, py::arg("deg") = 4);

  m.def("verify_sieve", [](const py::object& certificate, std::size_t nx) {
    const auto cert = certificate_from_json(from_py(certificate));
    return verify_sieve(explicit_mod(cert.p, nx, nx, true), cert);
  }, py::arg("certificate"), py::arg("nx") = 300);

  m.def("powers_independent", [](const std::string& u, const std::string& v, std::uint64_t p, std::size_t n) {
    const auto r = powers_independent(parse_int_poly(u), parse_int_poly(v), p, n);
    return py::make_tuple(r.independent, r.relation);
  }, py::arg("u"), py::arg("v"), py::arg("p"), py::arg("n"));

  m.def("enumerate_rational", [](std::size_t n) { return to_string(enumerate_rationals(n)); }, py::arg("n"));

  m.def("coinvariants", [](const std::string& model, std::size_t window) {
    if (model != "group" && model != "completion") fail(ErrorCode::ParseError, "model must be group or completion");
    return to_py(presentation_json(lambda2_coinvariants(model == "group" ? WindowModel::Group : WindowModel::Completion, window)));
  }, py::arg("model"), py::arg("window"));

  m.def("h2hat_quotient", [](std::size_t n) { return to_py(presentation_json(h2hat_quotient_presentation(n))); },
        py::arg("n"));

  m.def("ce_h2_rank", [](std::size_t n) { return ce_h2(n).h2_rank; }, py::arg("n"));

  m.def("commands", &cli_commands);

  // Same contract as the command-line tool: (exit code, report or None, stderr text).
  m.def("run", [](const std::vector<std::string>& argv) {
    const auto o = run_cli(argv);
    py::object report = o.out.empty() ? py::object(py::none()) : to_py(Json::parse(o.out));
    return py::make_tuple(o.exit_code, report, o.err);
  }, py::arg("argv"));
}
