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

#ifndef KAPTEYN_KEPLER_HPP
#define KAPTEYN_KEPLER_HPP

namespace kapteyn {

// Point on a unit-semi-major-axis ellipse of eccentricity eps, described by
// its eccentric anomaly E. rho is the focal radius r / a.
struct OrbitState {
    double eps;
    double E;
    double M;      // mean anomaly, E - eps sin E
    double rho;    // 1 - eps cos E
    double sin_w;  // true anomaly
    double cos_w;
};

// Solves M = E - eps sin E for E, 0 <= eps < 1. Newton from
// E0 = M + eps sin M, confined to [M - eps, M + eps] with bisection as the
// fallback. Throws NoConvergence after 50 iterations.
double solve_kepler(double M, double eps, double tol = 1e-14);

OrbitState orbit_state(double E, double eps);

struct IdentityRhs {
    double R0;  // 1 / rho
    double R1;  // sin_w eps / (rho^2 sqrt(1 - eps^2))
    double R2;  // cos_w / rho^2
};

IdentityRhs identity_rhs(const OrbitState& state);

} // namespace kapteyn

#endif // KAPTEYN_KEPLER_HPP
