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

#include <cmath>
#include <thread>
#include <vector>

#include "kapteyn/closed_form.hpp"
#include "kapteyn/error.hpp"
#include "kapteyn/solver.hpp"

namespace {

using kapteyn::ErrorCode;
using kapteyn::Problem;
using kapteyn::TruncationConfig;

constexpr double kGrid[] = {0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0, 100.0};

double rel(double a, double b)
{
    return std::abs(a - b) / std::abs(b);
}

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const kapteyn::Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no kapteyn::Error thrown";
    return ErrorCode::InvalidArgument;
}

TEST(SolveC, Examples)
{
    const kapteyn::RootResult one = kapteyn::solve_C_numeric({1.0, 1.0});
    EXPECT_TRUE(one.converged);
    EXPECT_NEAR(one.C, std::exp(0.25) / std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(kapteyn::solve_C_numeric({3.0, 1.0}).C, 0.727496, 1e-6);

    const kapteyn::RootResult tenth = kapteyn::solve_C_numeric({0.1, 1.0});
    EXPECT_GT(tenth.C, kapteyn::bound_interval(0.1).lo);
    EXPECT_LT(tenth.C, 1.0);
}

TEST(SolveC, AgreesWithClosedFormOnGrid)
{
    for (double D : kGrid) {
        const kapteyn::RootResult r = kapteyn::solve_C_numeric({D, 1.0});
        EXPECT_TRUE(r.converged) << D;
        EXPECT_LE(rel(r.C, kapteyn::closed_C(D)), 1e-10) << D;
        EXPECT_LE(std::abs(r.h), 1e-11) << D;
        EXPECT_GT(r.bracket_lo, kapteyn::Eccentricity::from_D(D).g());
        EXPECT_LE(r.bracket_hi, 1.0);
        EXPECT_LE(r.bracket_lo, r.C);
        EXPECT_GE(r.bracket_hi, r.C);
        EXPECT_LT(r.iterations, 15) << D;
    }
}

TEST(SolveC, RootIsUniqueOnFineGrid)
{
    for (double D : {0.1, 1.0, 10.0, 100.0}) {
        const kapteyn::Eccentricity ecc = kapteyn::Eccentricity::from_D(D);
        const kapteyn::KapteynCoefficients k(ecc.eps());
        const double g = ecc.g();
        const double scale = D / (2.0 * (D + 1.0));
        TruncationConfig t;
        int changes = 0;
        int prev = 0;
        for (int i = 0; i < 200; ++i) {
            const double C = g + (1.0 - g) * (1e-6 + (1.0 - 1e-6) * i / 199.0);
            const kapteyn::SeriesTriple s = kapteyn::eval_all(C, k, ecc, t);
            const double h = scale * s.F.value - 1.0;
            // Partial sums of F undershoot, so h > 0 holds even when truncated.
            ASSERT_TRUE(h > 0.0 || s.F.converged) << D << " " << C;
            const int sign = h > 0.0 ? 1 : -1;
            if (prev != 0 && sign != prev) {
                ++changes;
            }
            prev = sign;
        }
        EXPECT_EQ(changes, 1) << D;
    }
}

TEST(SolveC, ToleranceScaling)
{
    for (double D : {0.2, 3.0}) {
        const Problem p{D, 1.0};
        const kapteyn::Eccentricity ecc = kapteyn::Eccentricity::from_D(D);
        for (double tol : {1e-6, 1e-8, 1e-10}) {
            TruncationConfig t;
            t.abs_tol = tol;
            const kapteyn::RootResult a = kapteyn::solve_C_numeric(p, t, {}, tol);
            const kapteyn::SeriesTriple s = kapteyn::eval_all(a.C, ecc, t);
            const double k = D / (2.0 * (D + 1.0));
            const double slope = std::abs(k * s.F1.value / a.C);
            const double estimate = (std::abs(a.h) + k * s.F.tail_bound) / slope;
            t.abs_tol = tol / 2;
            const kapteyn::RootResult b = kapteyn::solve_C_numeric(p, t, {}, tol / 2);
            EXPECT_LE(std::abs(b.C - a.C), estimate + 4e-16) << D << " " << tol;
        }
    }
}

TEST(SolveC, TruncationIsReported)
{
    TruncationConfig t;
    t.max_terms = 100;
    EXPECT_EQ(code_of([&] { kapteyn::solve_C_numeric({0.1, 1.0}, t); }),
              ErrorCode::MaxTermsExceeded);

    // D = 1e-3 with the default cap: an answer comes back but is flagged.
    const kapteyn::SolveReport r = kapteyn::solve({1e-3, 1.0});
    EXPECT_FALSE(r.converged);
}

TEST(SolveC, InvalidProblem)
{
    EXPECT_EQ(code_of([] { kapteyn::solve_C_numeric({-1.0, 1.0}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { kapteyn::solve_C_numeric({1.0, 0.0}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { kapteyn::solve_C_numeric({NAN, 1.0}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(code_of([] { kapteyn::solve_C_numeric({1.0, 1.0}, {}, {}, 0.0); }),
              ErrorCode::InvalidArgument);
}

TEST(SolveC1, Examples)
{
    const double C = kapteyn::solve_C_numeric({1.0, 1.0}).C;
    const kapteyn::LinearSolve c1 = kapteyn::solve_C1_numeric({1.0, 1.0}, C);
    EXPECT_TRUE(c1.converged);
    EXPECT_NEAR(c1.value, 0.176777, 1e-6);
    EXPECT_LE(rel(c1.value, 1.0 / (2.0 * std::pow(2.0, 1.5))), 1e-12);
    // Linear in a.
    const double tiny = kapteyn::solve_C1_numeric({1.0, 1e-9}, C).value;
    EXPECT_LE(rel(tiny / 1e-9, c1.value), 1e-12);
}

TEST(SolveC1, MatchesClosedForm)
{
    for (double D : {0.5, 1.0, 2.0, 5.0}) {
        const double C = kapteyn::solve_C_numeric({D, 1.0}).C;
        for (double a : {0.5, 1.0, 2.0}) {
            EXPECT_LE(rel(kapteyn::solve_C1_numeric({D, a}, C).value, kapteyn::closed_C1(D, a)),
                      1e-9);
        }
    }
}

TEST(SolveC1, DegenerateAtUnitC)
{
    EXPECT_EQ(code_of([] { kapteyn::solve_C1_numeric({1.0, 1.0}, 1.0); }), ErrorCode::DegenerateF1);
}

TEST(SolveC2, VanishingScaleParameter)
{
    const Problem p{1.0, 1e-9};
    const double C = kapteyn::solve_C_numeric(p).C;
    const kapteyn::SeriesTriple s = kapteyn::eval_all(C, kapteyn::Eccentricity::from_D(1.0));
    const double C1 = kapteyn::solve_C1_numeric(p, C).value;
    const double want = -s.F2.value / (4.0 * std::sqrt(2.0) * s.F1.value);
    EXPECT_NEAR(kapteyn::solve_C2_numeric(p, C, C1).value, want, 1e-12);
}

TEST(SolveC2, BackSubstitution)
{
    for (double D : kGrid) {
        for (double a : {0.5, 1.0, 2.0}) {
            const kapteyn::SolveReport r = kapteyn::solve({D, a});
            ASSERT_TRUE(r.converged);
            const double scale = std::max(std::abs(r.F1), std::abs(r.F2));
            EXPECT_LE(std::abs(r.residual.r1), 10 * 1e-12 * 2.0) << D;
            EXPECT_LE(std::abs(r.residual.r2), 10 * 1e-12) << D;
            EXPECT_LE(std::abs(r.residual.r3), 10 * 1e-12) << D;
            const kapteyn::Residuals again =
                kapteyn::residuals({D, a}, r.C_numeric, r.C1_numeric, r.C2_numeric);
            EXPECT_LE(std::abs(again.r3 - r.residual.r3), 1e-15) << scale;
        }
    }
}

TEST(SolveC2, AgreesWithSubstitutedExactValues)
{
    // The numeric C2 coincides with substituting the exact F1, F2 into the
    // second-order equation, 1/4 - a^2 (2D + 1) / (8 (D+1)^2).
    for (double D : {0.5, 1.0, 5.0}) {
        for (double a : {0.5, 1.0, 2.0}) {
            const kapteyn::SolveReport r = kapteyn::solve({D, a});
            const double derived = 0.25 - a * a * (2 * D + 1) / (8 * (D + 1) * (D + 1));
            EXPECT_NEAR(r.C2_numeric, derived, 1e-11) << D << " " << a;
        }
    }
}

TEST(Residuals, Examples)
{
    for (double D : kGrid) {
        const kapteyn::Residuals r = kapteyn::residuals({D, 1.0}, kapteyn::closed_C(D),
                                                        kapteyn::closed_C1(D, 1.0), 0.0);
        EXPECT_LE(std::abs(r.r1), 1e-9) << D;
        EXPECT_LE(std::abs(r.r2), 1e-9) << D;
    }
    const kapteyn::Eccentricity e = kapteyn::Eccentricity::from_D(1.0);
    const kapteyn::Residuals off = kapteyn::residuals({1.0, 1.0}, 0.5 * (e.g() + 1.0), 0.1, 0.1);
    EXPECT_GT(std::abs(off.r1), 1e-3);

    // The printed C2 leaves a visible residual at D = a = 1.
    const kapteyn::Residuals paper = kapteyn::residuals(
        {1.0, 1.0}, kapteyn::closed_C(1.0), kapteyn::closed_C1(1.0, 1.0),
        kapteyn::closed_C2_paper(1.0, 1.0));
    EXPECT_GT(std::abs(paper.r3), 1e-3);
}

TEST(SolveReport, FieldsAndInvariants)
{
    const kapteyn::SolveReport r = kapteyn::solve({2.0, 1.5});
    EXPECT_TRUE(r.converged);
    EXPECT_TRUE(r.within_bound);
    EXPECT_GT(r.bracket[0], r.g);
    EXPECT_LE(r.bracket[1], 1.0);
    EXPECT_TRUE(std::isfinite(r.residual.r1) && std::isfinite(r.residual.r2) &&
                std::isfinite(r.residual.r3));
    EXPECT_EQ(r.closed.C, kapteyn::closed_C(2.0));
    EXPECT_GT(r.terms_used[0], 10);
    EXPECT_LT(r.F1, 0.0);
    EXPECT_GT(r.F2, 0.0);
}

TEST(SolveReport, DeterministicAcrossThreads)
{
    std::vector<double> Ds{0.3, 0.7, 1.5, 4.0, 9.0, 30.0};
    std::vector<kapteyn::SolveReport> seq;
    for (double D : Ds) {
        seq.push_back(kapteyn::solve({D, 1.0}));
    }
    std::vector<kapteyn::SolveReport> par(Ds.size());
    {
        std::vector<std::jthread> pool;
        for (std::size_t i = 0; i < Ds.size(); ++i) {
            pool.emplace_back([&, i] { par[i] = kapteyn::solve({Ds[i], 1.0}); });
        }
    }
    for (std::size_t i = 0; i < Ds.size(); ++i) {
        EXPECT_EQ(seq[i].C_numeric, par[i].C_numeric);
        EXPECT_EQ(seq[i].C2_numeric, par[i].C2_numeric);
    }
}

TEST(SmallD, AsymptoticRegime)
{
    TruncationConfig t;
    t.max_terms = 10000000;
    t.abs_tol = 1e-13;
    kapteyn::BesselConfig b;
    b.max_order = 10000000;
    const double D = 1e-3;
    const kapteyn::SolveReport r = kapteyn::solve({D, 1.0}, t, b);
    EXPECT_TRUE(r.converged);
    EXPECT_LE(rel(r.C_numeric, kapteyn::closed_C(D)), 1e-12);
    EXPECT_LE(rel(r.C1_numeric, D / 2), 5e-3);
    EXPECT_LE(std::abs(r.C1_numeric - D / 2), D * D);
    EXPECT_LE(std::abs(r.C2_numeric - 0.125), 1e-3);
}

} // namespace
