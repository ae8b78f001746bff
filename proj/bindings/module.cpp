#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qti/altspace.hpp"
#include "qti/cli.hpp"
#include "qti/errors.hpp"
#include "qti/graph.hpp"
#include "qti/io.hpp"
#include "qti/qindep.hpp"
#include "qti/xqpoly.hpp"

namespace py = pybind11;

namespace {

using Edges = std::vector<std::pair<int, int>>;

qti::AltSpace space_from(int n, int q,
                         const std::vector<std::vector<std::vector<int>>>& gens) {
  const qti::Field& field = qti::Field::get(q);
  std::vector<qti::FqMatrix> ms;
  ms.reserve(gens.size());
  for (const auto& rows : gens) ms.push_back(qti::FqMatrix::from_rows(field, rows));
  return qti::altspace_make(n, field, ms);
}

std::vector<std::string> str_counts(const std::vector<mpz_class>& counts) {
  std::vector<std::string> out;
  out.reserve(counts.size());
  for (const auto& c : counts) out.push_back(c.get_str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact q-analogue independence polynomials I(G, x, q) and brute-force "
      "totally-isotropic polynomials TI(B, x).  Polynomials cross the "
      "boundary as JSON strings in the documented schema; the qti package "
      "wraps them as dicts.";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const qti::TooLarge& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    } catch (const qti::ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const qti::Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.attr("DEFAULT_GUARD") = qti::kDefaultGuard;

  m.def("supported_orders", [] { return qti::Field::supported_orders(); },
        "Field orders accepted by the brute-force side.");

  m.def(
      "independence_polynomial_json",
      [](int n, const Edges& edges) {
        return qti::poly_to_json(
            qti::independence_polynomial(qti::graph_make(n, edges)));
      },
      py::arg("n"), py::arg("edges"), "I(G, x) in the monomial basis.");

  m.def(
      "q_independence_polynomial_json",
      [](int n, const Edges& edges) {
        return qti::poly_to_json(
            qti::q_independence_polynomial(qti::graph_make(n, edges)));
      },
      py::arg("n"), py::arg("edges"),
      "I(G, x, q) in the q-falling basis with Z[q] coefficients.");

  m.def(
      "ti_polynomial_brute_json",
      [](int n, int q, const std::vector<std::vector<std::vector<int>>>& gens,
         long long guard) {
        return qti::poly_to_json(
            qti::ti_polynomial_brute(space_from(n, q, gens), guard));
      },
      py::arg("n"), py::arg("q"), py::arg("gens"),
      py::arg("guard") = qti::kDefaultGuard,
      "TI(B, x) of the span of the given alternating matrices.");

  m.def(
      "ti_polynomial_brute_graphical_json",
      [](int n, const Edges& edges, int q, long long guard) {
        return qti::poly_to_json(qti::ti_polynomial_brute(
            qti::graphical_space(qti::graph_make(n, edges), qti::Field::get(q)),
            guard));
      },
      py::arg("n"), py::arg("edges"), py::arg("q"),
      py::arg("guard") = qti::kDefaultGuard,
      "TI(B_G, x) of the graphical space of G over F_q.");

  m.def(
      "cross_validate",
      [](int n, const Edges& edges, int q, long long guard) {
        const qti::CrossValidateReport r =
            qti::cross_validate(qti::graph_make(n, edges), q, guard);
        py::dict out;
        out["pass"] = r.pass;
        out["q"] = r.q0;
        out["symbolic"] = str_counts(r.symbolic);
        out["brute"] = str_counts(r.brute);
        out["mismatches"] = r.mismatches;
        return out;
      },
      py::arg("n"), py::arg("edges"), py::arg("q"),
      py::arg("guard") = qti::kDefaultGuard,
      "Theorem 1.3 check of the symbolic polynomial against the oracle.");

  m.def(
      "rank_locus_counts",
      [](int n, int q, const std::vector<std::vector<std::vector<int>>>& gens,
         long long guard) {
        return str_counts(
            qti::rank_locus_counts(space_from(n, q, gens), guard));
      },
      py::arg("n"), py::arg("q"), py::arg("gens"),
      py::arg("guard") = qti::kDefaultGuard,
      "|{v : dim span{Bv} = e}| for e = 0, 1, ...");

  m.def(
      "gaussian_binomial",
      [](int n, int k) { return qti::gaussian_binomial(n, k).str(); },
      py::arg("n"), py::arg("k"),
      "[n choose k]_q as a text polynomial in q.");

  m.def(
      "render_text_from_json",
      [](const std::string& s) {
        return qti::render_text(qti::poly_from_json(s, "<json>"));
      },
      py::arg("poly_json"));

  m.def(
      "render_latex_from_json",
      [](const std::string& s) {
        return qti::render_latex(qti::poly_from_json(s, "<json>"));
      },
      py::arg("poly_json"));

  m.def(
      "to_monomial_json",
      [](const std::string& s) {
        return qti::poly_to_json(
            qti::to_monomial(qti::poly_from_json(s, "<json>")));
      },
      py::arg("poly_json"), "Change of basis into the monomial basis.");

  m.def(
      "specialize_q_json",
      [](const std::string& s, long q0) {
        return qti::poly_to_json(
            qti::poly_from_json(s, "<json>").specialize_q(mpz_class(q0)));
      },
      py::arg("poly_json"), py::arg("q0"),
      "Substitute q = q0 (q0 = 1 retags the q-falling basis as monomial).");

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = qti::cli_run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"),
      "Run one CLI invocation; returns (exit_code, stdout, stderr).");
}
