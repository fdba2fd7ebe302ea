// Python module: each entry point takes and returns JSON text so that the
// "-inf" and "a/b" encodings are shared with the command-line tool.

#include <pybind11/pybind11.h>

#include <string>

#include "tropt/io.hpp"

namespace py = pybind11;
using tropt::io::json;

namespace {

template <class S>
json spectral(const json& a) {
  const auto m = tropt::io::matrix_from_json<S>(a, "A");
  return json{{"spectralRadius", tropt::io::to_json(tropt::spectral_radius(m))}};
}

template <class S>
json star(const json& a) {
  const auto m = tropt::io::matrix_from_json<S>(a, "A");
  return json{{"star", tropt::io::to_json(tropt::kleene_star(m))}, {"Tr", tropt::io::to_json(tropt::big_tr(m))}};
}

template <class S>
json schedule(const json& doc, bool intermediates, double eps) {
  const auto spec = tropt::io::schedule_from_json<S>(doc);
  return tropt::io::schedule_result_to_json(spec, tropt::solve_schedule(spec, eps), intermediates, eps);
}

template <class S>
json problem(const json& doc, double eps) {
  return tropt::io::to_json(tropt::solve(tropt::io::problem_from_json<S>(doc), eps));
}

template <class F>
std::string dispatch(const std::string& text, bool exact, F&& run) {
  const json doc = json::parse(text);
  return (exact ? run(tropt::MaxPlusQ{}, doc) : run(tropt::MaxPlusD{}, doc)).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Max-plus linear algebra and closed-form tropical optimization";
  static py::exception<tropt::Error> error(m, "TropicalError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const tropt::Error& e) {
      PyErr_SetString(error.ptr(), (std::string(tropt::errc_name(e.code())) + ": " + e.what()).c_str());
    } catch (const json::exception& e) {
      PyErr_SetString(error.ptr(), (std::string("ParseError: ") + e.what()).c_str());
    }
  });

  m.def("spectral_radius_json", [](const std::string& a, bool exact) {
    return dispatch(a, exact, [](auto s, const json& d) { return spectral<decltype(s)>(d); });
  }, py::arg("matrix"), py::arg("exact") = false);
  m.def("kleene_star_json", [](const std::string& a, bool exact) {
    return dispatch(a, exact, [](auto s, const json& d) { return star<decltype(s)>(d); });
  }, py::arg("matrix"), py::arg("exact") = false);
  m.def("solve_schedule_json", [](const std::string& spec, bool exact, bool intermediates, double eps) {
    return dispatch(spec, exact, [&](auto s, const json& d) { return schedule<decltype(s)>(d, intermediates, eps); });
  }, py::arg("spec"), py::arg("exact") = false, py::arg("intermediates") = false, py::arg("eps") = tropt::kDefaultEps);
  m.def("solve_json", [](const std::string& pr, bool exact, double eps) {
    return dispatch(pr, exact, [&](auto s, const json& d) { return problem<decltype(s)>(d, eps); });
  }, py::arg("problem"), py::arg("exact") = false, py::arg("eps") = tropt::kDefaultEps);
}
