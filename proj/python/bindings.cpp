/*
*   Copyright 2026 The kapteyn-queue Authors
*
*   Licensed under the Apache License, Version 2.0 (the "License");
*   you may not use this file except in compliance with the License.
*   You may obtain a copy of the License at
*
*       http://www.apache.org/licenses/LICENSE-2.0
*
*   Unless required by applicable law or agreed to in writing, software
*   distributed under the License is distributed on an "AS IS" BASIS,
*   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
*   See the License for the specific language governing permissions and
*   limitations under the License.
*/

#include <algorithm>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kapteyn/bessel.hpp"
#include "kapteyn/closed_form.hpp"
#include "kapteyn/error.hpp"
#include "kapteyn/kapteyn_series.hpp"
#include "kapteyn/solver.hpp"
#include "kapteyn/verify.hpp"

namespace py = pybind11;
using namespace kapteyn;

namespace {

TruncationConfig truncation(double tol, long max_terms)
{
    TruncationConfig t;
    t.abs_tol = tol;
    t.max_terms = max_terms;
    return t;
}

BesselConfig bessel_for(long max_terms)
{
    BesselConfig b;
    b.max_order = static_cast<int>(std::max<long>(b.max_order, max_terms));
    return b;
}

py::dict series_dict(const SeriesValue& v)
{
    py::dict d;
    d["value"] = v.value;
    d["terms_used"] = v.terms_used;
    d["tail_bound"] = v.tail_bound;
    d["converged"] = v.converged;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Kapteyn series constants C(D), C1(D, a), C2(D, a)";

    // Messages start with the error code, e.g. "InvalidArgument: ...".
    py::register_exception<Error>(m, "KapteynError", PyExc_ValueError);

    m.def("bessel_j", [](int n, double x) { return bessel_j(n, x); }, py::arg("n"), py::arg("x"));
    m.def("bessel_j_prime", [](int n, double x) { return bessel_j_prime(n, x); }, py::arg("n"),
          py::arg("x"));
    m.def("kapteyn_coeff", [](int n, double eps) { return kapteyn_coeff(n, eps); }, py::arg("n"),
          py::arg("eps"));

    m.def("convergence_boundary",
          [](double D) { return convergence_boundary(Eccentricity::from_D(D)); }, py::arg("D"));
    m.def(
        "eval_series",
        [](double C, double D, double tol, long max_terms) {
            const SeriesTriple s = eval_all(C, Eccentricity::from_D(D), truncation(tol, max_terms),
                                            bessel_for(max_terms));
            py::dict d;
            d["F"] = series_dict(s.F);
            d["F1"] = series_dict(s.F1);
            d["F2"] = series_dict(s.F2);
            return d;
        },
        py::arg("C"), py::arg("D"), py::arg("tol") = 1e-12, py::arg("max_terms") = 200000);

    m.def("closed_C", &closed_C, py::arg("D"));
    m.def("closed_C1", &closed_C1, py::arg("D"), py::arg("a"));
    m.def("closed_C2_paper", &closed_C2_paper, py::arg("D"), py::arg("a"));
    m.def(
        "bound_interval",
        [](double D) {
            const BoundInterval b = bound_interval(D);
            return py::make_tuple(b.lo, b.hi);
        },
        py::arg("D"));

    m.def(
        "solve",
        [](double D, double a, double tol, long max_terms) {
            const SolveReport r =
                solve({D, a}, truncation(tol, max_terms), bessel_for(max_terms), tol);
            py::dict d;
            d["D"] = D;
            d["a"] = a;
            d["C"] = r.C_numeric;
            d["C1"] = r.C1_numeric;
            d["C2"] = r.C2_numeric;
            d["F"] = r.F;
            d["F1"] = r.F1;
            d["F2"] = r.F2;
            d["residuals"] = py::make_tuple(r.residual.r1, r.residual.r2, r.residual.r3);
            d["terms_used"] = r.terms_used;
            d["bracket"] = r.bracket;
            d["iterations"] = r.iterations;
            d["g"] = r.g;
            d["within_bound"] = r.within_bound;
            d["C_closed"] = r.closed.C;
            d["C1_closed"] = r.closed.C1;
            d["C2_paper"] = r.closed.C2_paper;
            d["converged"] = r.converged;
            return d;
        },
        py::arg("D"), py::arg("a") = 1.0, py::arg("tol") = 1e-12, py::arg("max_terms") = 200000);

    m.def(
        "identity_table",
        [](double eps, int points) {
            py::list rows;
            for (const IdentityRow& r : identity_table(eps, points)) {
                py::dict d;
                d["E"] = r.E;
                d["M"] = r.M;
                d["err0"] = r.err0;
                d["err1"] = r.err1;
                d["err2"] = r.err2;
                d["converged"] = r.converged;
                rows.append(d);
            }
            return rows;
        },
        py::arg("eps"), py::arg("points") = 25);

    m.def(
        "verify",
        [](long max_terms) {
            VerifyConfig cfg;
            cfg.max_terms = max_terms;
            VerifyReport r;
            {
                py::gil_scoped_release release;
                r = run_verification(cfg);
            }
            py::list checks;
            for (const Check& c : r.checks) {
                py::dict d;
                d["id"] = c.id;
                d["criterion"] = c.criterion;
                d["passed"] = c.passed;
                d["measured"] = c.measured;
                d["tolerance"] = c.tolerance;
                d["diagnostic"] = c.diagnostic;
                checks.append(d);
            }
            py::dict out;
            out["checks"] = checks;
            out["c2_closest"] = r.c2.closest;
            out["passed"] = r.passed;
            return out;
        },
        py::arg("max_terms") = 200000);
}
