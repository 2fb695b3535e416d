#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gaborform/circle.hpp"
#include "gaborform/error.hpp"
#include "gaborform/factor.hpp"
#include "gaborform/frame.hpp"
#include "gaborform/repro.hpp"
#include "gaborform/report.hpp"
#include "gaborform/toeplitz.hpp"

namespace py = pybind11;
using namespace gaborform;

namespace {

// Polynomials cross the boundary as text or as a list of (exponent, coefficient).
SparsePolynomial to_poly(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) return parse_polynomial(obj.cast<std::string>());
    std::vector<Term> terms;
    for (const auto& item : obj) {
        const auto t = item.cast<std::pair<std::int64_t, double>>();
        terms.push_back({t.first, t.second});
    }
    return SparsePolynomial(std::move(terms));
}

std::vector<std::pair<std::int64_t, double>> term_pairs(const SparsePolynomial& p) {
    std::vector<std::pair<std::int64_t, double>> out;
    for (const auto& t : p.terms()) out.emplace_back(t.exponent, t.coefficient);
    return out;
}

std::vector<double> band_values(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) {
        const auto band = parse_band(obj.cast<std::string>());
        return {band.values().begin(), band.values().end()};
    }
    return obj.cast<std::vector<double>>();
}

StepFunction to_step(const std::map<std::int64_t, double>& values, int resolution) {
    return StepFunction(resolution, values);
}

py::dict bounds_dict(const SpectralBounds& b) {
    py::dict d;
    d["c1"] = b.c1;
    d["c2"] = b.c2;
    d["theta_min"] = b.theta_min;
    d["theta_max"] = b.theta_max;
    return d;
}

py::object json_to_py(const json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "C++ core of gaborform";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
    py::register_exception<NotFactorableError>(m, "NotFactorableError", base.ptr());
    py::register_exception<IdentityViolation>(m, "IdentityViolation", base.ptr());
    py::register_exception<SizeError>(m, "SizeError", base.ptr());

    m.def("parse_polynomial",
          [](const std::string& text) {
              const auto p = parse_polynomial(text);
              return py::make_tuple(term_pairs(p), p.shift());
          },
          py::arg("text"), "Normalized (terms, shift) of a polynomial string.");
    m.def("autocorrelation",
          [](const py::object& p) {
              const auto b = autocorrelation(to_poly(p));
              return std::vector<double>(b.values().begin(), b.values().end());
          },
          py::arg("p"));
    m.def("symbol_eval",
          [](const py::object& band, double theta) {
              return symbol_eval(AutocorrSequence(band_values(band)), theta);
          },
          py::arg("band"), py::arg("theta"));
    m.def("circle_extrema",
          [](const py::object& p, double tol) { return bounds_dict(circle_extrema(to_poly(p), tol)); },
          py::arg("p"), py::arg("tol") = kDefaultExtremaTol);
    m.def("polynomial_roots",
          [](const py::object& p, double tol) { return polynomial_roots(to_poly(p), tol); },
          py::arg("p"), py::arg("tol") = 1e-10);
    m.def("spd_verdict",
          [](const py::object& p, double threshold) {
              const auto r = spd_verdict(to_poly(p), threshold);
              py::list roots;
              for (const auto& u : r.roots) {
                  py::dict d;
                  d["theta"] = u.theta;
                  d["residual"] = u.residual;
                  d["modulus"] = u.modulus;
                  roots.append(d);
              }
              py::dict out = bounds_dict(r.bounds);
              out["spd"] = r.spd;
              out["unit_roots"] = roots;
              return out;
          },
          py::arg("p"), py::arg("threshold") = kDefaultSpdThreshold);
    m.def("symmetric_eigenvalues",
          [](const std::vector<std::vector<double>>& rows, double tol) {
              Matrix mat(rows.size());
              for (std::size_t i = 0; i < rows.size(); ++i) {
                  if (rows[i].size() != rows.size()) throw std::invalid_argument("matrix must be square");
                  for (std::size_t j = 0; j < rows.size(); ++j) mat(i, j) = rows[i][j];
              }
              return symmetric_eigenvalues(mat, tol).eigenvalues;
          },
          py::arg("rows"), py::arg("tol") = kDefaultEigenTol);
    m.def("block_eigenvalues",
          [](const py::object& p, std::size_t dim) {
              return symmetric_eigenvalues(build_block(autocorrelation(to_poly(p)), dim)).eigenvalues;
          },
          py::arg("p"), py::arg("dim"));
    m.def("apply_quadratic_form",
          [](const py::object& p, const std::vector<double>& x, std::int64_t offset) {
              return apply_quadratic_form(to_poly(p), {offset, x});
          },
          py::arg("p"), py::arg("x"), py::arg("offset") = 0);
    m.def("matrix_quadratic_form",
          [](const py::object& band, const std::vector<double>& x) {
              return matrix_quadratic_form(AutocorrSequence(band_values(band)), {0, x});
          },
          py::arg("band"), py::arg("x"));
    m.def("factor",
          [](const py::object& band, double tol) {
              const auto f = fejer_riesz_factor(AutocorrSequence(band_values(band)), tol);
              py::dict d;
              d["polynomial"] = to_string(f.polynomial);
              d["terms"] = term_pairs(f.polynomial);
              d["residual"] = f.residual;
              d["warning"] = f.warning;
              return d;
          },
          py::arg("band"), py::arg("tol") = kDefaultFactorTol);
    m.def("h0_inner_product",
          [](const std::map<std::int64_t, double>& f, const std::vector<std::int64_t>& e,
             int resolution) { return h0_inner_product(to_step(f, resolution), IntervalSet(e)); },
          py::arg("f"), py::arg("e"), py::arg("resolution") = 1);
    m.def("frame_sum_lemma",
          [](const py::object& p, const std::map<std::int64_t, double>& f, int resolution) {
              return frame_sum_lemma(to_poly(p), to_step(f, resolution)).value;
          },
          py::arg("p"), py::arg("f"), py::arg("resolution") = 1);
    m.def("frame_sum_direct",
          [](const py::object& p, const std::map<std::int64_t, double>& f, int resolution,
             int m_max) { return frame_sum_direct(to_poly(p), to_step(f, resolution), m_max).value; },
          py::arg("p"), py::arg("f"), py::arg("resolution") = 1, py::arg("m_max") = kDefaultMMax);
    m.def("frame_verdict",
          [](const py::object& p) {
              const auto v = frame_verdict(to_poly(p));
              return py::make_tuple(v.is_mother_frame_wavelet, v.lower_bound, v.upper_bound);
          },
          py::arg("p"));
    m.def("empirical_frame_ratio",
          [](const py::object& p, int trials, int support, std::uint64_t seed) {
              const auto r = empirical_frame_ratio(to_poly(p), trials, support, seed);
              return py::make_tuple(r.min_ratio, r.max_ratio);
          },
          py::arg("p"), py::arg("trials") = 1000, py::arg("support") = 40, py::arg("seed") = 42);
    m.def("analyze",
          [](const py::object& p, std::vector<std::size_t> dims, bool factor) {
              AnalysisOptions opts;
              opts.dims = std::move(dims);
              opts.factor = factor;
              return json_to_py(json(analyze(to_poly(p), opts)));
          },
          py::arg("p"), py::arg("dims") = std::vector<std::size_t>{}, py::arg("factor") = false,
          "Full report as a dict with the same layout as the CLI's JSON output.");
    m.def("reproduce_examples", [] {
        py::list out;
        for (const auto& it : reproduce_examples()) {
            py::dict d;
            d["name"] = it.name;
            d["pass"] = it.pass;
            d["max_delta"] = it.max_delta;
            d["tolerance"] = it.tolerance;
            d["detail"] = it.detail;
            out.append(d);
        }
        return out;
    });
}
