#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "insitu/errors.hpp"
#include "insitu/factorize.hpp"
#include "insitu/io.hpp"
#include "insitu/online.hpp"
#include "insitu/penrose.hpp"
#include "insitu/profile.hpp"
#include "insitu/solve.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace insitu;

using ComplexArray = py::array_t<Complex, py::array::c_style | py::array::forcecast>;

namespace {

Matrix to_matrix(const ComplexArray& arr) {
  if (arr.ndim() == 1) {
    return Matrix(1, arr.shape(0), std::vector<Complex>(arr.data(), arr.data() + arr.size()));
  }
  if (arr.ndim() != 2) throw ArgumentError("expected a 2-D array");
  return Matrix(arr.shape(0), arr.shape(1),
                std::vector<Complex>(arr.data(), arr.data() + arr.size()));
}

Vector to_vector(const ComplexArray& arr) {
  if (arr.ndim() != 1) throw ArgumentError("expected a 1-D array");
  return Vector(std::vector<Complex>(arr.data(), arr.data() + arr.size()));
}

std::vector<Complex> to_entries(const ComplexArray& arr) {
  if (arr.ndim() != 1) throw ArgumentError("expected a 1-D array");
  return {arr.data(), arr.data() + arr.size()};
}

py::array_t<Complex> to_numpy(const Matrix& a) {
  py::array_t<Complex> out({a.rows(), a.cols()});
  std::copy(a.data().begin(), a.data().end(), out.mutable_data());
  return out;
}

py::array_t<Complex> to_numpy(std::span<const Complex> v) {
  py::array_t<Complex> out(v.size());
  std::copy(v.begin(), v.end(), out.mutable_data());
  return out;
}

py::object optional_matrix(const std::optional<Matrix>& a) {
  return a ? py::object(to_numpy(*a)) : py::object(py::none());
}

SolveOptions make_options(std::optional<double> tol, bool want_g, bool want_p, double verify_tol) {
  SolveOptions o;
  o.tol = tol;
  o.want_g = want_g;
  o.want_p = want_p;
  o.verify_tol = verify_tol;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Direct solvers for A x = b built on in-place Gram-Schmidt orthonormalization";

  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<StateError>(m, "StateError", PyExc_RuntimeError);
  py::register_exception<ComputationError>(m, "ComputationError", PyExc_ArithmeticError);

  py::class_<Factorization>(m, "Factorization")
      .def_property_readonly("a_prime", [](const Factorization& f) { return to_numpy(f.a_prime); })
      .def_property_readonly("m", [](const Factorization& f) { return to_numpy(f.m); })
      .def_property_readonly("s", [](const Factorization& f) { return f.s.members(); },
                             "0-based indices of the nonzero rows (row form) or columns")
      .def_property_readonly("orientation",
                             [](const Factorization& f) { return to_string(f.orientation); })
      .def_readonly("tol", &Factorization::tol)
      .def_property_readonly("rank", &Factorization::rank)
      .def("gen_inverse", [](const Factorization& f) {
        return to_numpy(f.orientation == Orientation::Row ? gen_inverse_row(f)
                                                           : gen_inverse_col(f));
      });

  m.def("row_orthonormalize",
        [](const ComplexArray& a, std::optional<double> tol) {
          return row_orthonormalize(to_matrix(a), tol);
        },
        "a"_a, "tol"_a = py::none());
  m.def("col_orthonormalize",
        [](const ComplexArray& a, std::optional<double> tol) {
          return col_orthonormalize(to_matrix(a), tol);
        },
        "a"_a, "tol"_a = py::none());

  py::class_<SolveResult>(m, "SolveResult")
      .def_property_readonly("x_p", [](const SolveResult& r) { return to_numpy(r.x_p.span()); })
      .def_property_readonly("g", [](const SolveResult& r) { return optional_matrix(r.g); })
      .def_property_readonly("p", [](const SolveResult& r) { return optional_matrix(r.p); })
      .def_readonly("rank", &SolveResult::rank)
      .def_readonly("residual_norm", &SolveResult::residual_norm)
      .def_readonly("b_projected_norm", &SolveResult::b_projected_norm)
      .def_readonly("inconsistent", &SolveResult::inconsistent)
      .def_readonly("tol", &SolveResult::tol)
      .def_readonly("verify_tol", &SolveResult::verify_tol);

  m.def("solve_row_minnorm",
        [](const ComplexArray& a, const ComplexArray& b, std::optional<double> tol, bool want_g,
           bool want_p, double verify_tol) {
          return solve_row_minnorm(to_matrix(a), to_vector(b),
                                   make_options(tol, want_g, want_p, verify_tol));
        },
        "a"_a, "b"_a, "tol"_a = py::none(), "want_g"_a = false, "want_p"_a = false,
        "verify_tol"_a = kDefaultVerifyTol, "Minimum-norm solution of A x = b.");
  m.def("solve_col_lsq",
        [](const ComplexArray& a, const ComplexArray& b, std::optional<double> tol, bool want_g,
           bool want_p, double verify_tol) {
          return solve_col_lsq(to_matrix(a), to_vector(b),
                               make_options(tol, want_g, want_p, verify_tol));
        },
        "a"_a, "b"_a, "tol"_a = py::none(), "want_g"_a = false, "want_p"_a = false,
        "verify_tol"_a = kDefaultVerifyTol, "Least-squares solution of A x = b.");
  m.def("solve_matrix_rhs",
        [](const ComplexArray& a, const ComplexArray& b, const std::string& mode,
           std::optional<double> tol) {
          const MatrixSolveResult r = solve_matrix_rhs(to_matrix(a), to_matrix(b),
                                                       parse_mode(mode), tol);
          return py::dict("x_p"_a = to_numpy(r.x_p), "g"_a = to_numpy(r.g),
                          "p"_a = to_numpy(r.p), "rank"_a = r.rank);
        },
        "a"_a, "b"_a, "mode"_a = "row", "tol"_a = py::none());
  m.def("null_projector",
        [](const ComplexArray& g, const ComplexArray& a) {
          return to_numpy(null_projector(to_matrix(g), to_matrix(a)));
        },
        "g"_a, "a"_a);

  py::class_<PenroseReport>(m, "PenroseReport")
      .def_readonly("holds", &PenroseReport::holds)
      .def_readonly("defects", &PenroseReport::defects)
      .def_readonly("class_label", &PenroseReport::class_label)
      .def_readonly("tol", &PenroseReport::tol)
      .def("__repr__", [](const PenroseReport& r) { return "<PenroseReport " + r.class_label + ">"; });

  m.def("penrose_check",
        [](const ComplexArray& a, const ComplexArray& g, std::optional<double> tol) {
          return penrose_check(to_matrix(a), to_matrix(g), tol);
        },
        "a"_a, "g"_a, "tol"_a = py::none());
  m.def("classify_row_method",
        [](const ComplexArray& a, std::optional<double> tol) {
          return classify_row_method(to_matrix(a), tol);
        },
        "a"_a, "tol"_a = py::none());
  m.def("classify_col_method",
        [](const ComplexArray& a, std::optional<double> tol) {
          return classify_col_method(to_matrix(a), tol);
        },
        "a"_a, "tol"_a = py::none());

  py::class_<StepReport>(m, "StepReport")
      .def_readonly("index", &StepReport::index)
      .def_property_readonly("increment",
                             [](const StepReport& s) { return to_numpy(s.increment.span()); })
      .def_readonly("was_dependent", &StepReport::was_dependent)
      .def_readonly("inconsistent", &StepReport::inconsistent)
      .def_readonly("ops_used", &StepReport::ops_used);

  py::class_<OnlineRowSolver>(m, "OnlineRowSolver")
      .def(py::init([](std::size_t n, std::optional<double> tol, bool accumulate_g) {
             return OnlineRowSolver(n, OnlineOptions{tol, accumulate_g, kDefaultVerifyTol});
           }),
           "n"_a, "tol"_a = py::none(), "accumulate_g"_a = false)
      .def("push",
           [](OnlineRowSolver& s, const ComplexArray& row, Complex b_i) {
             return s.push(to_entries(row), b_i);
           },
           "row"_a, "b_i"_a)
      .def("finalize", &OnlineRowSolver::finalize, "want_p"_a = false)
      .def_property_readonly("x_p", [](const OnlineRowSolver& s) { return to_numpy(s.x_p().span()); })
      .def_property_readonly("norm_history", &OnlineRowSolver::norm_history)
      .def_property_readonly("rows_seen", &OnlineRowSolver::rows_seen);

  py::class_<OnlineColSolver>(m, "OnlineColSolver")
      .def(py::init([](const ComplexArray& b, std::optional<double> tol, bool accumulate_g) {
             return OnlineColSolver(to_vector(b),
                                    OnlineOptions{tol, accumulate_g, kDefaultVerifyTol});
           }),
           "b"_a, "tol"_a = py::none(), "accumulate_g"_a = false)
      .def("push",
           [](OnlineColSolver& s, const ComplexArray& col) { return s.push(to_entries(col)); },
           "col"_a)
      .def("finalize", &OnlineColSolver::finalize, "want_p"_a = false)
      .def_property_readonly("x_p", [](const OnlineColSolver& s) { return to_numpy(s.x_p()); })
      .def_property_readonly("cols_seen", &OnlineColSolver::cols_seen);

  py::class_<ComplexityReport>(m, "ComplexityReport")
      .def_readonly("per_step", &ComplexityReport::per_step)
      .def_property_readonly("slope",
                             [](const ComplexityReport& r) { return r.per_step_fit.slope; })
      .def_readonly("slope_ratio", &ComplexityReport::slope_ratio)
      .def_readonly("lower_bound_ops", &ComplexityReport::lower_bound_ops)
      .def_readonly("upper_bound_ops", &ComplexityReport::upper_bound_ops)
      .def_readonly("upper_model", &ComplexityReport::upper_model)
      .def_readonly("deterministic", &ComplexityReport::deterministic)
      .def_readonly("model_consistent", &ComplexityReport::model_consistent);

  m.def("profile_row_solver", &profile_row_solver, "m"_a, "n"_a, "trials"_a = 1, "seed"_a = 1);
  m.def("profile_col_solver", &profile_col_solver, "m"_a, "n"_a, "trials"_a = 1, "seed"_a = 1);

  m.def("parse_matrix_market",
        [](const std::string& text) { return to_numpy(parse_matrix_market(text)); }, "text"_a);
  m.def("to_matrix_market",
        [](const ComplexArray& a) { return to_matrix_market(to_matrix(a)); }, "a"_a);
}
