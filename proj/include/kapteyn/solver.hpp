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

#ifndef KAPTEYN_SOLVER_HPP
#define KAPTEYN_SOLVER_HPP

#include <array>

#include "kapteyn/bessel.hpp"
#include "kapteyn/closed_form.hpp"
#include "kapteyn/kapteyn_series.hpp"

namespace kapteyn {

// The transcendental system
//   1 = D/(2(D+1)) F(C)
//   0 = a/(2 sqrt(D+1)) F(C) + C1 F1(C) / 2
//   0 = (1 - a^2/(2(D+1))) F2(C) / (4 sqrt(D+1)) + (a C1 / (4 sqrt(D+1)) + C2) F1(C)
// solved from the series alone. Nothing in this header consults the closed
// forms except SolveReport, which carries them for comparison.

struct Problem {
    double D;
    double a;

    // D > 0 and a > 0, both finite; throws Error(InvalidArgument).
    void validate() const;
};

struct RootResult {
    double C = 0.0;
    double h = 0.0;           // D/(2(D+1)) F(C) - 1 at the returned C
    double bracket_lo = 0.0;  // final bracket, h(lo) > 0 > h(hi)
    double bracket_hi = 1.0;
    int iterations = 0;
    long terms_used = 0;      // series length at the returned C
    bool converged = false;   // |h| within tolerance and every series converged
};

// Brackets the root of h(C) = D/(2(D+1)) F(C) - 1 by stepping in from C = 1
// towards the convergence boundary, then runs Newton with
// h'(C) = D/(2(D+1)) F1(C) / C, falling back to bisection whenever a step
// leaves the bracket. Throws NoBracket if h never turns positive.
RootResult solve_C_numeric(const Problem& p, const TruncationConfig& trunc = {},
                           const BesselConfig& bcfg = {}, double root_tol = 1e-12);

struct LinearSolve {
    double value = 0.0;
    long terms_used = 0;
    bool converged = false;  // the underlying series converged
};

// C1 = -a F(C) / (sqrt(D+1) F1(C)). Throws DegenerateF1 if |F1| < 1e-8.
LinearSolve solve_C1_numeric(const Problem& p, double C, const TruncationConfig& trunc = {},
                             const BesselConfig& bcfg = {});

// C2 = -(F2/F1) (1 - a^2/(2(D+1))) / (4 sqrt(D+1)) - a C1 / (4 sqrt(D+1)).
LinearSolve solve_C2_numeric(const Problem& p, double C, double C1,
                             const TruncationConfig& trunc = {}, const BesselConfig& bcfg = {});

// Left minus right side of each equation at (C, C1, C2). The first is
// reported as is; the other two are divided by max(|F1|, |F2|), which
// grows like D^-2 as D -> 0.
struct Residuals {
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;
};

Residuals residuals(const Problem& p, double C, double C1, double C2,
                    const TruncationConfig& trunc = {}, const BesselConfig& bcfg = {});

// Same, from already evaluated F, F1, F2.
Residuals residuals_from(const Problem& p, double C1, double C2, double F, double F1, double F2);

struct SolveReport {
    Problem problem{};
    double C_numeric = 0.0;
    double C1_numeric = 0.0;
    double C2_numeric = 0.0;
    double F = 0.0;
    double F1 = 0.0;
    double F2 = 0.0;
    Residuals residual;
    std::array<long, 3> terms_used{};
    std::array<double, 2> bracket{};
    int iterations = 0;
    double g = 0.0;          // convergence boundary
    bool within_bound = false;  // lower bound < C_numeric < 1
    ClosedForms closed{};
    bool converged = false;
};

// All three solves at one eccentricity, sharing a single coefficient table.
SolveReport solve(const Problem& p, const TruncationConfig& trunc = {},
                  const BesselConfig& bcfg = {}, double root_tol = 1e-12);

} // namespace kapteyn

#endif // KAPTEYN_SOLVER_HPP
