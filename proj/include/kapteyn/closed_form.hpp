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

#ifndef KAPTEYN_CLOSED_FORM_HPP
#define KAPTEYN_CLOSED_FORM_HPP

#include <complex>

namespace kapteyn {

// Exact solutions of the Kapteyn transcendental equations and the quantities
// that go with them. All functions here are plain formulas: no series are
// summed. D must be positive and finite; a must be non-negative and finite.
// Violations throw Error(InvalidArgument).

// C(D) = exp(D / (2(D+1))) / sqrt(D+1)
double closed_C(double D);

// C1(D, a) = a D / (2 (D+1)^{3/2})
double closed_C1(double D, double a);

// C2 as it is printed alongside C and C1:
//   sqrt(D+1)/4 - (D + (D+1)^{3/2}) a^2 / (8 (D+1)^2).
// Kept verbatim so that it can be compared with the numeric solve; it is
// not what back-substitution into the second-order equation gives.
double closed_C2_paper(double D, double a);

// F, F1 and F2 at C = closed_C(D):
//   (2(D+1)/D, -4((D+1)/D)^2, 4(D+1)^{5/2}/D^2)
struct ExactSeriesValues {
    double F;
    double F1;
    double F2;
};
ExactSeriesValues exact_series_values(double D);

// (sqrt(D+1) - sqrt(D)) exp(sqrt(D/(D+1))) < C(D) < 1.
// The lower end coincides with the convergence boundary g(1/sqrt(D+1)).
struct BoundInterval {
    double lo;
    double hi;
};
BoundInterval bound_interval(double D);

// Leading-order approximants. The first three hold as D -> 0, the last as
// D -> infinity; callers pick whichever regime applies.
struct Asymptotics {
    double C_small;   // 1 - D^2/4
    double C1_small;  // a D / 2
    double C2_small;  // 1/4 - a^2/8
    double C_large;   // sqrt(e / D)
};
Asymptotics asymptotics(double D, double a);

struct ClosedForms {
    double C;
    double C1;
    double C2_paper;
    double F_at_root;
    double F1_at_root;
    double F2_at_root;
    double lower_bound;
};
ClosedForms closed_forms(double D, double a);

// Reconstruction of C through Kepler's equation continued to complex E:
// E = arccos((1 + eps^2) / (2 eps)) on the branch with Im E > 0,
// M = E - eps sin E (purely imaginary), C = exp(i M).
struct ProofTrace {
    double eps;
    std::complex<double> E;
    std::complex<double> M;
    double C_reconstructed;
    bool branch_ok;  // C_reconstructed < 1
};

// eps in (0, 1). Throws BranchViolation if |Re M| > 1e-12 or the
// reconstructed C falls outside (0, 1).
ProofTrace proof_trace(double eps);

} // namespace kapteyn

#endif // KAPTEYN_CLOSED_FORM_HPP
