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

#ifndef KAPTEYN_KAPTEYN_SERIES_HPP
#define KAPTEYN_KAPTEYN_SERIES_HPP

#include "kapteyn/bessel.hpp"

namespace kapteyn {

// Eccentricity eps in (0, 1) together with s = sqrt(1 - eps^2) and the
// convergence boundary g = eps e^s / (1 + s) of the Kapteyn series.
class Eccentricity {
public:
    static Eccentricity from_eps(double eps);
    // eps = 1 / sqrt(D + 1), D > 0.
    static Eccentricity from_D(double D);

    double eps() const noexcept { return eps_; }
    double s() const noexcept { return s_; }
    double g() const noexcept { return g_; }
    double log_g() const noexcept { return log_g_; }

private:
    explicit Eccentricity(double eps);

    double eps_;
    double s_;
    double g_;
    double log_g_;
};

struct TruncationConfig {
    double abs_tol = 1e-12;
    long max_terms = 200000;
    // C must exceed g + safety_margin * (1 - g).
    double safety_margin = 1e-6;

    void validate() const;
};

struct SeriesValue {
    double value = 0.0;
    long terms_used = 0;
    double tail_bound = 0.0;   // estimate of the discarded tail
    bool converged = false;    // tail_bound <= abs_tol
    bool underflow = false;    // some coefficient fell below the double range
};

double convergence_boundary(const Eccentricity& ecc);

// F(C)  = 1 + 2 sum_{n>=1} J_n(n eps) cosh(n ln C)
// F1(C) = 2 sum_{n>=1} n J_n(n eps) sinh(n ln C)
// F2(C) = 2 sum_{n>=1} n J_n'(n eps) cosh(n ln C)
// i.e. the two-sided sums over n in Z folded with J_{-n}(-x) = J_n(x).
// Each term is formed as c_n C^{-n} (1 + C^{2n}) (or c_n C^{-n} expm1(2n ln C)
// for F1) so nothing overflows or cancels near C = 1. Summation stops once
// the geometric majorant of the tail drops below abs_tol (never before 10
// terms). Hitting max_terms returns the partial sum with converged = false.
//
// Throws OutOfRange for C outside (0, 1] and DivergentDomain when C is at or
// below the safety margin above g.
SeriesValue eval_F(double C, const Eccentricity& ecc, const TruncationConfig& trunc = {},
                   const BesselConfig& bcfg = {});
SeriesValue eval_F1(double C, const Eccentricity& ecc, const TruncationConfig& trunc = {},
                    const BesselConfig& bcfg = {});
SeriesValue eval_F2(double C, const Eccentricity& ecc, const TruncationConfig& trunc = {},
                    const BesselConfig& bcfg = {});

struct SeriesTriple {
    SeriesValue F;
    SeriesValue F1;
    SeriesValue F2;
};

// All three in a single pass over the coefficients.
SeriesTriple eval_all(double C, const Eccentricity& ecc, const TruncationConfig& trunc = {},
                      const BesselConfig& bcfg = {});

// Same, reusing coefficient setup across calls at the same eccentricity.
SeriesTriple eval_all(double C, const KapteynCoefficients& coeffs, const Eccentricity& ecc,
                      const TruncationConfig& trunc);

// Trigonometric forms on the unit circle, M = E - eps sin E:
//   S0 = 1 + 2 sum J_n(n eps) cos(nM)
//   S1 = 2 sum n J_n(n eps) sin(nM)
//   S2 = 2 sum n J_n'(n eps) cos(nM)
struct TrigSums {
    double S0 = 0.0;
    double S1 = 0.0;
    double S2 = 0.0;
    double M = 0.0;
    long terms_used = 0;
    double tail_bound = 0.0;  // largest of the three tail estimates
    bool converged = false;
};

// Requires endpoint_margin < E < pi - endpoint_margin (strict, margin >= 0).
TrigSums eval_trig_sums(double E, const Eccentricity& ecc, const TruncationConfig& trunc = {},
                        const BesselConfig& bcfg = {}, double endpoint_margin = 0.0);

} // namespace kapteyn

#endif // KAPTEYN_KAPTEYN_SERIES_HPP
