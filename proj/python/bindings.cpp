#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qboole/bits.hpp"
#include "qboole/errors.hpp"
#include "qboole/expr.hpp"
#include "qboole/hamiltonian.hpp"
#include "qboole/matrix.hpp"
#include "qboole/minimize.hpp"
#include "qboole/pauli.hpp"
#include "qboole/synth.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

namespace {

py::array_t<std::complex<double>> to_numpy(const qboole::ComplexMatrix& m) {
  py::array_t<std::complex<double>> a({m.rows(), m.cols()});
  auto buf = a.mutable_unchecked<2>();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) buf(i, j) = m.at(i, j);
  return a;
}

qboole::ComplexMatrix from_numpy(
    const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2) throw py::value_error("expected a 2-D array");
  auto buf = a.unchecked<2>();
  qboole::ComplexMatrix m(static_cast<std::size_t>(a.shape(0)),
                          static_cast<std::size_t>(a.shape(1)));
  for (py::ssize_t i = 0; i < a.shape(0); ++i)
    for (py::ssize_t j = 0; j < a.shape(1); ++j)
      m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = buf(i, j);
  return m;
}

std::vector<std::pair<std::vector<int>, std::complex<double>>> terms_out(
    const std::vector<qboole::PauliTerm>& terms) {
  std::vector<std::pair<std::vector<int>, std::complex<double>>> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.emplace_back(t.word, t.coeff);
  return out;
}

std::vector<qboole::PauliTerm> terms_in(
    const std::vector<std::pair<std::vector<int>, std::complex<double>>>& pairs) {
  std::vector<qboole::PauliTerm> terms;
  terms.reserve(pairs.size());
  for (const auto& [word, coeff] : pairs) terms.push_back(qboole::PauliTerm{word, coeff});
  return terms;
}

}  // namespace

PYBIND11_MODULE(_qboole, mod) {
  mod.doc() = "boolean functions as quantum gate matrices";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const qboole::VerificationError& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    } catch (const qboole::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  mod.def(
      "encode", [](const std::string& bits) { return qboole::encode(qboole::BitVector::from_string(bits)); },
      "bits"_a, "index of a bit string, x1 most significant");
  mod.def(
      "decode",
      [](std::uint64_t index, std::size_t width) { return qboole::decode(index, width).str(); },
      "index"_a, "width"_a, "bit string of an index");

  py::class_<qboole::Expr>(mod, "Expr")
      .def_static("parse", [](const std::string& text) { return qboole::parse(text); }, "text"_a)
      .def("__str__", [](const qboole::Expr& e) { return qboole::format(e); })
      .def("__repr__",
           [](const qboole::Expr& e) { return "Expr(\"" + qboole::format(e) + "\")"; })
      .def("__eq__", [](const qboole::Expr& a, const qboole::Expr& b) { return a == b; },
           py::is_operator())
      .def("paper", &qboole::format_paper, "zero_based"_a = false,
           "sum-of-products text form")
      .def("arity", &qboole::Expr::arity)
      .def(
          "eval",
          [](const qboole::Expr& e, const std::string& bits) {
            return qboole::eval(e, qboole::BitVector::from_string(bits));
          },
          "bits"_a);

  py::class_<qboole::TruthTable>(mod, "TruthTable")
      .def_static("from_text", &qboole::table_from_text, "text"_a)
      .def_property_readonly("inputs", &qboole::TruthTable::inputs)
      .def_property_readonly("outputs", &qboole::TruthTable::outputs)
      .def("rows",
           [](const qboole::TruthTable& tt) {
             std::vector<std::string> rows;
             rows.reserve(tt.size());
             for (std::uint64_t k = 0; k < tt.size(); ++k) rows.push_back(tt.row(k).str());
             return rows;
           })
      .def("text", &qboole::table_to_text)
      .def("__eq__",
           [](const qboole::TruthTable& a, const qboole::TruthTable& b) { return a == b; },
           py::is_operator());

  mod.def(
      "truth_table",
      [](const std::vector<std::string>& exprs, std::size_t n) {
        std::vector<qboole::Expr> parsed;
        parsed.reserve(exprs.size());
        for (const std::string& text : exprs) parsed.push_back(qboole::parse(text));
        return qboole::truth_table(parsed, n);
      },
      "exprs"_a, "n"_a, "truth table of expression strings over n inputs");

  py::class_<qboole::PermutationSpec>(mod, "PermutationSpec")
      .def(py::init<std::vector<std::size_t>>(), "image"_a)
      .def_property_readonly("size", &qboole::PermutationSpec::size)
      .def_property_readonly("image",
                             [](const qboole::PermutationSpec& p) { return p.image(); })
      .def("__eq__",
           [](const qboole::PermutationSpec& a, const qboole::PermutationSpec& b) {
             return a == b;
           },
           py::is_operator());

  py::class_<qboole::ReversibleMap>(mod, "ReversibleMap")
      .def(py::init<std::size_t, std::vector<std::uint64_t>>(), "bits"_a, "perm"_a)
      .def_property_readonly("bits", &qboole::ReversibleMap::bits)
      .def_property_readonly("perm",
                             [](const qboole::ReversibleMap& m) { return m.perm(); })
      .def("apply", &qboole::ReversibleMap::apply, "k"_a);

  mod.def("map_from_truth_table", &qboole::map_from_truth_table, "tt"_a);
  mod.def("matrix_from_map", &qboole::matrix_from_map, "map"_a);
  mod.def("map_from_matrix", &qboole::map_from_matrix, "p"_a);
  mod.def("truth_table_from_map", &qboole::truth_table_from_map, "map"_a);
  mod.def("oracle_matrix", &qboole::oracle_matrix, "tt"_a);
  mod.def("to_dense", [](const qboole::PermutationSpec& p) { return to_numpy(qboole::to_dense(p)); },
          "p"_a);
  mod.def(
      "from_dense",
      [](const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& a,
         double tol) { return qboole::from_dense(from_numpy(a), tol); },
      "matrix"_a, "tol"_a = 1e-9);
  mod.def(
      "hadamard_conjugate",
      [](const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& a) {
        return to_numpy(qboole::hadamard_conjugate(from_numpy(a)));
      },
      "u"_a);

  mod.def("minimized_expr", &qboole::minimized_expr, "tt"_a, "output_index"_a,
          "resolution-minimized expression for one output column");
  mod.def("equivalent", &qboole::equivalent, "e"_a, "tt"_a, "output_index"_a);

  mod.def("cycles", [](const qboole::PermutationSpec& p) { return qboole::cycles(p); }, "p"_a);
  mod.def("eigenphases", &qboole::eigenphases, "p"_a);
  mod.def("skew_log",
          [](const qboole::PermutationSpec& p) { return to_numpy(qboole::skew_log(p)); }, "p"_a);
  mod.def(
      "matrix_exp",
      [](const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& a) {
        return to_numpy(qboole::matrix_exp(from_numpy(a)));
      },
      "m"_a);

  py::class_<qboole::HamiltonianResult>(mod, "HamiltonianResult")
      .def_property_readonly("k",
                             [](const qboole::HamiltonianResult& r) { return to_numpy(r.k); })
      .def_property_readonly("h",
                             [](const qboole::HamiltonianResult& r) { return to_numpy(r.h); })
      .def_readonly("residual", &qboole::HamiltonianResult::residual);

  mod.def("hamiltonian", &qboole::hamiltonian, "p"_a,
          "skew generator K with exp(K) = U, H = iK, and the residual");

  mod.def("sigma", [](int index) { return to_numpy(qboole::sigma(index)); }, "index"_a);
  mod.def("pauli_word_matrix",
          [](const std::vector<int>& word) { return to_numpy(qboole::pauli_word_matrix(word)); },
          "word"_a);
  mod.def(
      "pauli_decompose",
      [](const py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>& a,
         double drop_tol) { return terms_out(qboole::pauli_decompose(from_numpy(a), drop_tol)); },
      "m"_a, "drop_tol"_a = 1e-12, "list of (word, coefficient) pairs");
  mod.def(
      "pauli_reconstruct",
      [](const std::vector<std::pair<std::vector<int>, std::complex<double>>>& terms,
         std::size_t n) { return to_numpy(qboole::pauli_reconstruct(terms_in(terms), n)); },
      "terms"_a, "n"_a);
  mod.def(
      "spin_form",
      [](const std::vector<std::pair<std::vector<int>, std::complex<double>>>& terms) {
        return terms_out(qboole::spin_form(terms_in(terms)));
      },
      "terms"_a);
}
