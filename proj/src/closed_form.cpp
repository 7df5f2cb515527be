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

#include "kapteyn/closed_form.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "kapteyn/error.hpp"

namespace kapteyn {
namespace {

void check_D(double D)
{
    if (!std::isfinite(D) || !(D > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "D must be positive and finite");
    }
}

void check_a(double a)
{
    if (!std::isfinite(a) || !(a >= 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "a must be non-negative and finite");
    }
}

} // namespace

double closed_C(double D)
{
    check_D(D);
    if (D > 1.0) {
        return std::exp(D / (2.0 * (D + 1.0))) / std::sqrt(D + 1.0);
    }
    // One exponential, so that C - 1 = O(D^2) is not buried under the
    // rounding of 1 + D.
    return std::exp(0.5 * (D / (D + 1.0) - std::log1p(D)));
}

double closed_C1(double D, double a)
{
    check_D(D);
    check_a(a);
    const double q = D + 1.0;
    return a * D / (2.0 * q * std::sqrt(q));
}

double closed_C2_paper(double D, double a)
{
    check_D(D);
    check_a(a);
    const double q = D + 1.0;
    const double rq = std::sqrt(q);
    return rq / 4.0 - (D + q * rq) * a * a / (8.0 * q * q);
}

ExactSeriesValues exact_series_values(double D)
{
    check_D(D);
    const double q = D + 1.0;
    const double r = q / D;
    return {2.0 * r, -4.0 * r * r, 4.0 * r * r * std::sqrt(q)};
}

BoundInterval bound_interval(double D)
{
    check_D(D);
    // sqrt(D+1) - sqrt(D) = 1 / (sqrt(D+1) + sqrt(D)), free of cancellation.
    const double lo = std::exp(std::sqrt(D / (D + 1.0))) / (std::sqrt(D + 1.0) + std::sqrt(D));
    return {lo, 1.0};
}

Asymptotics asymptotics(double D, double a)
{
    check_D(D);
    check_a(a);
    return {1.0 - D * D / 4.0, a * D / 2.0, 0.25 - a * a / 8.0, std::sqrt(std::numbers::e / D)};
}

ClosedForms closed_forms(double D, double a)
{
    const ExactSeriesValues f = exact_series_values(D);
    return {closed_C(D), closed_C1(D, a), closed_C2_paper(D, a), f.F, f.F1, f.F2,
            bound_interval(D).lo};
}

ProofTrace proof_trace(double eps)
{
    if (!std::isfinite(eps) || !(eps > 0.0 && eps < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "eps must lie in (0, 1)");
    }
    const std::complex<double> z((1.0 + eps * eps) / (2.0 * eps), 0.0);
    std::complex<double> E = std::acos(z);
    // arccos is two-valued here (+-i arccosh z); Im E > 0 is the branch
    // that lands inside the unit disc.
    if (E.imag() < 0.0) {
        E = -E;
    }
    const std::complex<double> M = E - eps * std::sin(E);
    const std::complex<double> C = std::exp(std::complex<double>(0.0, 1.0) * M);

    ProofTrace trace{eps, E, M, C.real(), C.real() < 1.0};
    if (std::abs(M.real()) > 1e-12) {
        throw Error(ErrorCode::BranchViolation,
                    "mean anomaly is not purely imaginary: Re M = " + std::to_string(M.real()));
    }
    if (!(trace.C_reconstructed > 0.0 && trace.C_reconstructed < 1.0)) {
        throw Error(ErrorCode::BranchViolation,
                    "reconstructed C = " + std::to_string(trace.C_reconstructed) +
                        " is outside (0, 1)");
    }
    return trace;
}

} // namespace kapteyn
