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

#include <gtest/gtest.h>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>

#include <boost/math/special_functions/bessel.hpp>

#include "kapteyn/bessel.hpp"
#include "kapteyn/error.hpp"
#include "oracle.hpp"

namespace {

using kapteyn::BesselConfig;
using kapteyn::BesselMethod;
using kapteyn::ErrorCode;
using kapteyn::KapteynCoefficients;
using oracle::mp;

constexpr double kRel = 1e-12;

double rel(double got, double want)
{
    return std::abs(got - want) / std::abs(want);
}

// Error scale for J_n(x): |J| itself, or the oscillation amplitude
// sqrt(2/(pi x)) once x is past the turning point.
double envelope(int n, double x, double value)
{
    return x > n ? std::max(std::abs(value), std::sqrt(2.0 / (M_PI * x))) : std::abs(value);
}

TEST(Bessel, ExampleValues)
{
    EXPECT_EQ(kapteyn::bessel_j(0, 0.0), 1.0);
    EXPECT_NEAR(kapteyn::bessel_j(1, 0.5), 0.24226845767487388, 1e-16);
    EXPECT_NEAR(kapteyn::bessel_j(0, 1.0), 0.76519768655796655, 1e-16);
    EXPECT_EQ(kapteyn::bessel_j_prime(0, 0.0), 0.0);
    EXPECT_EQ(kapteyn::bessel_j_prime(1, 0.0), 0.5);
    EXPECT_NEAR(kapteyn::bessel_j_prime(2, 1.0), 0.21024361588113255, 1e-16);
    EXPECT_NEAR(kapteyn::kapteyn_coeff(1, 0.5), 0.24226845767487388, 1e-16);
    EXPECT_NEAR(kapteyn::kapteyn_coeff_prime(2, 0.5), 0.21024361588113255, 1e-16);
}

TEST(Bessel, OracleValuesMatchLibrarySpotChecks)
{
    // Guards the oracle itself against the same textbook numbers.
    EXPECT_NEAR(oracle::J(1, 0.5), 0.24226845767487388, 1e-16);
    EXPECT_NEAR(oracle::J(0, 30.0), boost::math::cyl_bessel_j(0, 30.0), 1e-15);
    EXPECT_NEAR(oracle::J(5, 40.0), boost::math::cyl_bessel_j(5, 40.0), 1e-15);
}

TEST(Bessel, GeneralArgumentsAgainstOracle)
{
    for (int n : {0, 1, 2, 3, 5, 8, 13, 21, 34, 55, 60, 61, 89, 144, 300}) {
        for (double x : {1e-3, 0.1, 0.9, 2.0, 2.5, 5.0, 9.0, 17.0, 33.0, 77.0, 150.0, 400.0}) {
            const double want = oracle::J(n, x);
            const double wantp = oracle::Jp(n, x);
            if (std::abs(want) < DBL_MIN * 1e6) {
                continue;
            }
            const double got = kapteyn::bessel_j(n, x);
            const double gotp = kapteyn::bessel_j_prime(n, x);
            EXPECT_LE(std::abs(got - want), kRel * envelope(n, x, want)) << "n=" << n << " x=" << x;
            EXPECT_LE(std::abs(gotp - wantp), kRel * envelope(n, x, wantp))
                << "n=" << n << " x=" << x;
        }
    }
}

TEST(Bessel, HankelRegimeAgainstOracle)
{
    for (double x : {1.0e4, 2.5e4, 6.0e4}) {
        for (int n : {0, 1, 2, 7, 30, 50}) {
            const double want = oracle::J(n, x);
            const double wantp = oracle::Jp(n, x);
            const double amp = std::sqrt(2.0 / (M_PI * x));
            EXPECT_LE(std::abs(kapteyn::bessel_j(n, x) - want), kRel * amp) << n << " " << x;
            EXPECT_LE(std::abs(kapteyn::bessel_j_prime(n, x) - wantp), kRel * amp) << n << " " << x;
        }
    }
}

// Scaled diagonal values J_n(n eps) g^-n against the oracle, scaled in
// extended precision so that underflowed coefficients are still compared.
void expect_scaled_match(int n, double eps, double tol)
{
    const KapteynCoefficients k(eps, BesselConfig{}, n);
    const kapteyn::KapteynTerm t = k(n);
    const oracle::Pair ref = oracle::reference(n, n * eps);
    // g^-n with g taken from eps in extended precision; the double log_g
    // would contribute n * |log g| * 1e-16 of its own.
    const mp e(eps);
    const mp sq = sqrt(1 - e * e);
    const mp scale = exp(mp(n) * (atanh(sq) - sq));
    const double want = static_cast<double>(ref.j * scale);
    const double wantp = static_cast<double>(ref.jp * scale);
    EXPECT_LE(rel(t.j_scaled, want), tol) << "n=" << n << " eps=" << eps;
    EXPECT_LE(rel(t.jp_scaled, wantp), tol) << "n=" << n << " eps=" << eps;
}

TEST(Bessel, KapteynDiagonalAgainstOracle)
{
    for (double eps : {0.05, 0.1, 0.3, 0.5, 0.7, 0.9, 0.95}) {
        for (int n : {1, 2, 3, 4, 7, 12, 25, 59, 60, 61, 62, 90, 200, 450, 1000, 3000}) {
            expect_scaled_match(n, eps, kRel);
        }
    }
}

TEST(Bessel, KapteynDiagonalNearTurningPoint)
{
    // Orders where the large-order path switches between the uniform Airy
    // form and the Debye series, at eccentricities close to one.
    for (double eps : {0.98, 0.99, 0.995, 0.999, 0.9995}) {
        for (int n : {61, 100, 300, 1000, 5000, 20000}) {
            expect_scaled_match(n, eps, kRel);
        }
    }
}

TEST(Bessel, VeryLargeOrders)
{
    expect_scaled_match(100000, 0.5, kRel);
    expect_scaled_match(100000, 0.999, kRel);
    expect_scaled_match(150000, 0.9995, kRel);
}

TEST(Bessel, ExampleOrder100Derivative)
{
    const double want = oracle::Jp(100, 30.0);
    EXPECT_LE(rel(kapteyn::kapteyn_coeff_prime(100, 0.3), want), 1e-11);
}

TEST(Bessel, LeadingDebyeEstimateAtOrder200)
{
    const double eps = 0.5;
    const double s = std::sqrt(1.0 - eps * eps);
    const double g = eps * std::exp(s) / (1.0 + s);
    EXPECT_NEAR(g, 0.637035, 2e-6);
    const int n = 200;
    const double lead = std::pow(g, n) / std::sqrt(2.0 * M_PI * n * s);
    EXPECT_LE(std::abs(kapteyn::kapteyn_coeff(n, eps) / lead - 1.0), 1.0 / n);
}

TEST(Bessel, MethodSelection)
{
    EXPECT_EQ(kapteyn::kapteyn_coeff_eval(3, 0.5).method, BesselMethod::PowerSeries);
    EXPECT_EQ(kapteyn::kapteyn_coeff_eval(40, 0.5).method, BesselMethod::Miller);
    EXPECT_EQ(kapteyn::kapteyn_coeff_eval(500, 0.5).method, BesselMethod::Debye);
    EXPECT_EQ(kapteyn::kapteyn_coeff_eval(500, 0.999).method, BesselMethod::UniformAiry);
}

TEST(Bessel, UnderflowIsFlagged)
{
    const kapteyn::KapteynCoeffEval e = kapteyn::kapteyn_coeff_eval(100000, 0.05);
    EXPECT_EQ(e.value, 0.0);
    EXPECT_TRUE(e.underflow);
    EXPECT_FALSE(kapteyn::kapteyn_coeff_eval(10, 0.5).underflow);
    // The scaled form stays finite and positive.
    const KapteynCoefficients k(0.05);
    EXPECT_GT(k(100000).j_scaled, 0.0);
}

TEST(Bessel, SymmetryAgainstBoostNegativeOrder)
{
    for (int n = 0; n <= 20; ++n) {
        for (double x : {0.1, 0.5, 1.0, 2.0, 3.3, 4.5, 5.0}) {
            const double want = boost::math::cyl_bessel_j(static_cast<double>(-n), x);
            const double got = kapteyn::bessel_j(-n, x);
            EXPECT_LE(std::abs(got - want), 1e-12 * std::max(std::abs(want), 1e-300))
                << n << " " << x;
            EXPECT_EQ(got, (n % 2 ? -1.0 : 1.0) * kapteyn::bessel_j(n, x));
            // Both reflections together cancel.
            EXPECT_EQ(kapteyn::bessel_j(-n, -x), kapteyn::bessel_j(n, x));
        }
    }
}

TEST(Bessel, DerivativeParity)
{
    for (int n : {0, 1, 2, 5}) {
        const double x = 1.7;
        const double d = kapteyn::bessel_j_prime(n, x);
        EXPECT_EQ(kapteyn::bessel_j_prime(n, -x), (n % 2 ? 1.0 : -1.0) * d);
        EXPECT_EQ(kapteyn::bessel_j_prime(-n, x), (n % 2 ? -1.0 : 1.0) * d);
    }
}

TEST(Bessel, RecurrenceResidual)
{
    for (int n : {1, 2, 4, 9, 16, 30, 58, 60, 61, 63, 64, 100, 128, 257, 400, 500}) {
        for (double eps = 0.1; eps < 0.95; eps += 0.1) {
            const double x = n * eps;
            const double a = kapteyn::bessel_j(n - 1, x);
            const double b = kapteyn::bessel_j(n, x);
            const double c = kapteyn::bessel_j(n + 1, x);
            const double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
            EXPECT_LE(std::abs(a + c - 2.0 * n / x * b), 1e-10 * scale) << n << " " << eps;
        }
    }
}

TEST(Bessel, CrossoverConsistency)
{
    const BesselConfig cfg;
    for (double eps = 0.1; eps < 0.95; eps += 0.1) {
        const KapteynCoefficients k(eps, cfg);
        for (int n = cfg.crossover_order - 5; n <= cfg.crossover_order + 5; ++n) {
            const kapteyn::KapteynTerm a = k.small_order(n);
            const kapteyn::KapteynTerm b = k.large_order(n);
            EXPECT_LE(rel(b.j_scaled, a.j_scaled), 1e-10) << n << " " << eps;
            EXPECT_LE(rel(b.jp_scaled, a.jp_scaled), 1e-10) << n << " " << eps;
        }
    }
}

TEST(Bessel, CrossoverIsConfigurable)
{
    BesselConfig low;
    low.crossover_order = 20;
    for (int n : {21, 40, 80}) {
        EXPECT_LE(rel(kapteyn::kapteyn_coeff(n, 0.6, low), kapteyn::kapteyn_coeff(n, 0.6)), 1e-12);
    }
    EXPECT_NE(kapteyn::kapteyn_coeff_eval(40, 0.6, low).method,
              kapteyn::kapteyn_coeff_eval(40, 0.6).method);
}

TEST(Bessel, Positivity)
{
    for (double eps : {1e-3, 0.05, 0.2, 0.5, 0.8, 0.95, 0.99, 0.999}) {
        const KapteynCoefficients k(eps);
        for (int n : {1, 2, 3, 10, 59, 60, 61, 100, 1000, 10000, 100000}) {
            const kapteyn::KapteynTerm t = k(n);
            EXPECT_GT(t.j_scaled, 0.0) << n << " " << eps;
            EXPECT_GT(t.jp_scaled, 0.0) << n << " " << eps;
        }
        EXPECT_GT(kapteyn::kapteyn_coeff(5, eps), 0.0);
        EXPECT_GT(kapteyn::kapteyn_coeff_prime(5, eps), 0.0);
    }
}

TEST(Bessel, SmallEccentricityLimits)
{
    EXPECT_LT(kapteyn::kapteyn_coeff(1, 1e-9), 1e-9);
    EXPECT_NEAR(kapteyn::kapteyn_coeff_prime(1, 1e-9), 0.5, 1e-12);
}

TEST(Bessel, DerivativeMatchesCentralDifferenceToSecondOrder)
{
    for (int n : {0, 1, 3, 10, 70}) {
        for (double x : {0.7, 4.0, 30.0, 65.0}) {
            const double d = kapteyn::bessel_j_prime(n, x);
            double h = 1e-2;
            double prev = 0.0;
            for (int i = 0; i < 3; ++i, h /= 2) {
                const double fd = (kapteyn::bessel_j(n, x + h) - kapteyn::bessel_j(n, x - h)) / (2 * h);
                const double e = std::abs(fd - d);
                if (i > 0 && prev > 1e-11) {
                    EXPECT_NEAR(prev / e, 4.0, 0.3) << n << " " << x;
                }
                prev = e;
            }
        }
    }
}

TEST(Bessel, Errors)
{
    BesselConfig cfg;
    cfg.max_order = 100;
    try {
        kapteyn::bessel_j(101, 1.0, cfg);
        FAIL();
    } catch (const kapteyn::Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::OrderTooLarge);
    }
    try {
        kapteyn::bessel_j(1, std::numeric_limits<double>::infinity());
        FAIL();
    } catch (const kapteyn::Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonFinite);
    }
    try {
        kapteyn::bessel_j(1, std::nan(""));
        FAIL();
    } catch (const kapteyn::Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonFinite);
    }
    BesselConfig bad;
    bad.rel_tol = 1e-3;
    EXPECT_THROW(kapteyn::bessel_j(1, 1.0, bad), kapteyn::Error);
    EXPECT_THROW(kapteyn::kapteyn_coeff(0, 0.5), kapteyn::Error);
    EXPECT_THROW(kapteyn::kapteyn_coeff(1, 1.0), kapteyn::Error);
}

} // namespace
