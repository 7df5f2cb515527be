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

#ifndef KAPTEYN_VERIFY_HPP
#define KAPTEYN_VERIFY_HPP

#include <string>
#include <vector>

#include "kapteyn/bessel.hpp"
#include "kapteyn/kapteyn_series.hpp"

namespace kapteyn {

// Trigonometric sums against their Kepler-orbit closed forms on a grid of
// eccentric anomalies E_i = 0.05 + (pi - 0.1)(i + 1/2)/points, i.e. the
// midpoints of a uniform partition of (0.05, pi - 0.05).
struct IdentityRow {
    double E;
    double M;
    double S0, R0, err0;
    double S1, R1, err1;
    double S2, R2, err2;
    long terms_used;
    bool converged;
};

std::vector<IdentityRow> identity_table(double eps, int points, const TruncationConfig& trunc = {},
                                        const BesselConfig& bcfg = {});

struct VerifyConfig {
    double abs_tol = 1e-12;
    long max_terms = 200000;
    // The D = 1e-3 check needs several million terms; it runs with
    // max_terms * small_d_term_factor.
    long small_d_term_factor = 50;

    void validate() const;
};

struct Check {
    std::string id;
    int criterion = 0;
    std::string description;
    bool passed = false;
    double measured = 0.0;   // worst observed error (or observed order)
    double tolerance = 0.0;
    std::string diagnostic;  // failure reason, or a note on a pass
};

struct IdentitySummary {
    int points = 0;
    double max_err_S0 = 0.0;
    double max_err_S1 = 0.0;
    double max_err_S2 = 0.0;
};

// Which expression for C2 the numeric solve agrees with. Reported only.
struct C2Adjudication {
    double D = 1.0;
    double a = 1.0;
    double numeric = 0.0;
    double paper_formula = 0.0;    // closed_C2_paper
    double derived_formula = 0.0;  // exact series values substituted into the C2 equation
    double distance_paper = 0.0;
    double distance_derived = 0.0;
    std::string closest;           // "paper_formula" or "derived_formula"
    double residual = 0.0;         // normalized residual of the numeric C2
};

struct VerifyReport {
    std::vector<Check> checks;
    IdentitySummary identity;
    C2Adjudication c2;
    bool passed = false;  // every check passed
};

VerifyReport run_verification(const VerifyConfig& cfg = {});

} // namespace kapteyn

#endif // KAPTEYN_VERIFY_HPP
