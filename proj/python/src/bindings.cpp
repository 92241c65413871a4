#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cesaro/analysis.hpp"
#include "cesaro/error.hpp"
#include "cesaro/estimates.hpp"
#include "cesaro/measures.hpp"
#include "cesaro/operators.hpp"
#include "cesaro/report.hpp"
#include "cesaro/specfun.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

cesaro::MethodChoice method_choice(const std::string& name) {
  if (name == "auto") return cesaro::MethodChoice::automatic;
  if (name == "power") return cesaro::MethodChoice::power_iteration;
  if (name == "dense") return cesaro::MethodChoice::dense_svd;
  throw cesaro::DomainError("method must be 'auto', 'power' or 'dense'");
}

cesaro::NormOptions norm_options(double tol, int max_iter, const std::string& method) {
  cesaro::NormOptions o;
  o.tol = tol;
  o.max_iter = max_iter;
  o.method = method_choice(method);
  return o;
}

py::dict estimate_dict(const cesaro::OpNormEstimate& e) {
  return py::dict("value"_a = e.value, "iterations"_a = e.iterations, "residual"_a = e.residual,
                  "method"_a = cesaro::to_string(e.method), "converged"_a = e.converged);
}

py::dict verdict_dict(const cesaro::Verdict& v) {
  py::list evidence;
  for (const auto& s : v.evidence) evidence.append(py::make_tuple(s.parameter, s.ratio));
  return py::dict("engine"_a = cesaro::to_string(v.engine), "verdict"_a = v.label(),
                  "fitted_slope"_a = v.fitted_slope, "slope_stderr"_a = v.slope_stderr, "evidence"_a = evidence);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Generalized Cesaro operators on Dirichlet-type spaces";

  py::register_exception<cesaro::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<cesaro::SemanticError>(m, "SemanticError", PyExc_ValueError);
  py::register_exception<cesaro::DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("log_gamma", [](double x) { return cesaro::log_gamma(x); }, "x"_a);
  m.def("beta", [](double u, double v) { return cesaro::beta(u, v); }, "u"_a, "v"_a);
  m.def("carleson_exponent", &cesaro::carleson_exponent, "alpha"_a, "beta"_a);

  py::class_<cesaro::Measure>(m, "Measure")
      .def(py::init([](const std::string& expr) { return cesaro::parse_measure(expr); }), "expr"_a)
      .def_static("lebesgue", &cesaro::Measure::lebesgue)
      .def_property_readonly("atoms",
                             [](const cesaro::Measure& self) {
                               py::list out;
                               for (const auto& a : self.atoms()) out.append(py::make_tuple(a.location, a.mass));
                               return out;
                             })
      .def_property_readonly("densities",
                             [](const cesaro::Measure& self) {
                               py::list out;
                               for (const auto& d : self.densities()) out.append(py::make_tuple(d.c, d.gamma, d.delta));
                               return out;
                             })
      .def("total_mass", &cesaro::Measure::total_mass)
      .def("tail", &cesaro::Measure::tail, "t"_a)
      .def("tail_gap", &cesaro::Measure::tail_gap, "w"_a)
      .def("moment", &cesaro::Measure::moment, "n"_a)
      .def("log_moment", &cesaro::Measure::log_moment, "n"_a)
      .def("moments", [](const cesaro::Measure& self, std::size_t count) { return self.moments(count).values(); },
           "count"_a)
      .def("moment_by_parts", &cesaro::moment_by_parts, "n"_a, "quad_points"_a = 32)
      .def("__str__", &cesaro::Measure::to_string)
      .def("__repr__", [](const cesaro::Measure& self) { return "Measure('" + self.to_string() + "')"; })
      .def("__eq__", [](const cesaro::Measure& a, const cesaro::Measure& b) { return a == b; })
      .def("__add__", [](const cesaro::Measure& a, const cesaro::Measure& b) { return a + b; });

  m.def(
      "apply",
      [](const cesaro::Measure& mu, double alpha, double beta, std::size_t size, std::vector<double> coeffs) {
        const cesaro::SectionOp op(mu, cesaro::SpaceIndex(alpha), cesaro::SpaceIndex(beta), size);
        const auto out = cesaro::apply(op, cesaro::CoeffVec(std::move(coeffs)));
        return std::vector<double>(out.values().begin(), out.values().end());
      },
      "measure"_a, "alpha"_a, "beta"_a, "size"_a, "coeffs"_a);

  m.def(
      "section_norm",
      [](const cesaro::Measure& mu, double alpha, double beta, std::size_t size, double tol, int max_iter,
         const std::string& method) {
        const auto opts = norm_options(tol, max_iter, method);
        cesaro::OpNormEstimate est;
        {
          py::gil_scoped_release release;
          est = cesaro::section_norm(cesaro::SectionOp(mu, cesaro::SpaceIndex(alpha), cesaro::SpaceIndex(beta), size),
                                     opts);
        }
        return estimate_dict(est);
      },
      "measure"_a, "alpha"_a, "beta"_a, "size"_a, "tol"_a = 1e-12, "max_iter"_a = 100000, "method"_a = "auto");

  m.def(
      "norm_growth_profile",
      [](const cesaro::Measure& mu, double alpha, double beta, std::vector<std::size_t> sizes, double tol) {
        std::vector<cesaro::ProfileEntry> profile;
        {
          py::gil_scoped_release release;
          profile = cesaro::norm_growth_profile(mu, cesaro::SpaceIndex(alpha), cesaro::SpaceIndex(beta), sizes,
                                                norm_options(tol, 100000, "auto"));
        }
        py::list out;
        for (const auto& e : profile) {
          py::dict row = estimate_dict(e.estimate);
          row["N"] = e.size;
          out.append(row);
        }
        return out;
      },
      "measure"_a, "alpha"_a, "beta"_a, "sizes"_a, "tol"_a = 1e-12);

  m.def(
      "classify_carleson",
      [](const cesaro::Measure& mu, double s, int grid_depth) {
        return verdict_dict(cesaro::classify_carleson(mu, s, grid_depth));
      },
      "measure"_a, "s"_a, "grid_depth"_a = 30);

  m.def(
      "classify_moments",
      [](const cesaro::Measure& mu, double s, std::size_t n_max) {
        return verdict_dict(cesaro::classify_moments(mu, s, n_max));
      },
      "measure"_a, "s"_a, "n_max"_a = std::size_t{1} << 20);

  m.def(
      "equivalence_report_json",
      [](const std::string& name, const cesaro::Measure& mu, double alpha, double beta) {
        std::vector<cesaro::EquivalenceReport> reports;
        {
          py::gil_scoped_release release;
          reports.push_back(cesaro::check_equivalence(cesaro::Subject::of(name, mu), alpha, beta));
        }
        std::ostringstream os;
        cesaro::write_report_json(os, reports);
        return os.str();
      },
      "name"_a, "measure"_a, "alpha"_a, "beta"_a);

  m.def("est_ratio", &cesaro::est_ratio, "c"_a, "t"_a, "n_max"_a);

  m.def(
      "prop1_bound_check",
      [](double alpha, std::size_t size) {
        const auto p = cesaro::prop1_bound_check(alpha, size);
        return py::dict("section_norm"_a = p.section_norm, "bound"_a = p.bound,
                        "partial_sum_violations"_a = p.partial_sum_violations,
                        "tail_sum_violations"_a = p.tail_sum_violations,
                        "tail_bound_violations"_a = p.tail_bound_violations);
      },
      "alpha"_a, "size"_a);
}
