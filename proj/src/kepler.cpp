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

#include "kapteyn/kepler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "kapteyn/error.hpp"

namespace kapteyn {
namespace {

constexpr int kMaxIterations = 50;

// Root of E - eps sin E = M for M in [0, pi]; the root lies in [0, pi] too.
double solve_reduced(double M, double eps, double tol)
{
    double lo = std::max(0.0, M - eps);
    double hi = std::min(std::numbers::pi, M + eps);
    double E = M + eps * std::sin(M);
    E = std::clamp(E, lo, hi);
    for (int it = 0; it < kMaxIterations; ++it) {
        const double f = E - eps * std::sin(E) - M;
        if (std::abs(f) <= tol) {
            return E;
        }
        if (f > 0.0) {
            hi = E;
        } else {
            lo = E;
        }
        const double df = 1.0 - eps * std::cos(E);
        double next = E - f / df;
        if (!(next > lo && next < hi)) {
            next = 0.5 * (lo + hi);
        }
        if (next == E || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) {
            // No representable progress left; f is at rounding level.
            return E;
        }
        E = next;
    }
    throw Error(ErrorCode::NoConvergence,
                "Kepler iteration did not converge for M = " + std::to_string(M) +
                    ", eps = " + std::to_string(eps));
}

} // namespace

double solve_kepler(double M, double eps, double tol)
{
    if (!std::isfinite(M)) {
        throw Error(ErrorCode::NonFinite, "mean anomaly is not finite");
    }
    if (!(eps >= 0.0 && eps < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "eccentricity must lie in [0, 1)");
    }
    if (!(tol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
    }
    if (M == 0.0 || eps == 0.0) {
        return M;
    }
    // Reduce to (-pi, pi], then use oddness of the map.
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double turns = std::round(M / two_pi);
    const double reduced = M - turns * two_pi;
    const double E = reduced < 0.0 ? -solve_reduced(-reduced, eps, tol) : solve_reduced(reduced, eps, tol);
    return E + turns * two_pi;
}

OrbitState orbit_state(double E, double eps)
{
    if (!std::isfinite(E)) {
        throw Error(ErrorCode::NonFinite, "eccentric anomaly is not finite");
    }
    if (!(eps > 0.0 && eps < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "eccentricity must lie in (0, 1)");
    }
    const double sin_e = std::sin(E);
    const double cos_e = std::cos(E);
    const double s = std::sqrt((1.0 - eps) * (1.0 + eps));
    OrbitState st{};
    st.eps = eps;
    st.E = E;
    st.M = E - eps * sin_e;
    st.rho = 1.0 - eps * cos_e;
    st.sin_w = s * sin_e / st.rho;
    // Inverting rho (1 + eps cos w) = 1 - eps^2 gives ((1 - eps^2)/rho - 1)/eps,
    // which simplifies to (cos E - eps)/rho and has no singularity at eps = 0.
    st.cos_w = (cos_e - eps) / st.rho;
    return st;
}

IdentityRhs identity_rhs(const OrbitState& state)
{
    const double s = std::sqrt((1.0 - state.eps) * (1.0 + state.eps));
    const double inv_rho = 1.0 / state.rho;
    const double inv_rho2 = inv_rho * inv_rho;
    return {inv_rho, inv_rho2 * state.sin_w * state.eps / s, inv_rho2 * state.cos_w};
}

} // namespace kapteyn
