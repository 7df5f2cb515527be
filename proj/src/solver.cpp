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

#include "kapteyn/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kapteyn/error.hpp"

namespace kapteyn {
namespace {

constexpr double kBracketMargin = 1e-6;
constexpr double kWidenedMargin = 1e-7;
constexpr int kMaxIterations = 100;
constexpr double kMinAbsF1 = 1e-8;

struct Context {
    Problem p;
    Eccentricity ecc;
    KapteynCoefficients coeffs;
    TruncationConfig trunc;
    double k;  // D / (2(D+1))

    Context(const Problem& prob, const TruncationConfig& t, const BesselConfig& bcfg)
        : p(prob),
          ecc(Eccentricity::from_D(prob.D)),
          coeffs(ecc.eps(), bcfg),
          trunc(t),
          k(prob.D / (2.0 * (prob.D + 1.0)))
    {
        trunc.validate();
    }
};

struct Probe {
    double C;
    double h;
    double dh;
    SeriesTriple series;

    bool converged() const { return series.F.converged && series.F1.converged; }
};

Probe probe(const Context& ctx, double C, const TruncationConfig& trunc)
{
    const SeriesTriple s = eval_all(C, ctx.coeffs, ctx.ecc, trunc);
    return {C, ctx.k * s.F.value - 1.0, ctx.k * s.F1.value / C, s};
}

bool all_converged(const SeriesTriple& s)
{
    return s.F.converged && s.F1.converged && s.F2.converged;
}

// Walks C_j = g + (1 - g) max(2^-j, margin) in from C = 1 until h > 0.
// Partial sums of F undershoot (every term is positive), so a positive
// h from a truncated sum is still a certificate.
bool march(const Context& ctx, double margin, Probe& lo, Probe& hi)
{
    const double g = ctx.ecc.g();
    TruncationConfig t = ctx.trunc;
    t.safety_margin = std::min(t.safety_margin, margin);
    double frac = 1.0;
    while (frac > margin) {
        frac = std::max(0.5 * frac, margin);
        const double C = g + (1.0 - g) * frac;
        if (!(C > g) || !(C < hi.C)) {
            break;
        }
        Probe pr = probe(ctx, C, t);
        if (pr.h > 0.0) {
            lo = pr;
            return true;
        }
        hi = pr;
    }
    return false;
}

RootResult find_root(const Context& ctx, double root_tol, SeriesTriple& at_root)
{
    if (!(root_tol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "root_tol must be positive");
    }
    Probe hi = probe(ctx, 1.0, ctx.trunc);
    if (!(hi.h < 0.0)) {
        throw Error(ErrorCode::NoBracket, "h(1) = " + std::to_string(hi.h) + " is not negative");
    }
    Probe lo{};
    if (!march(ctx, kBracketMargin, lo, hi) && !march(ctx, kWidenedMargin, lo, hi)) {
        if (!hi.series.F.converged) {
            // A truncated F undershoots; the sign change may simply be out of reach.
            throw Error(ErrorCode::MaxTermsExceeded,
                        "F was truncated at " + std::to_string(hi.series.F.terms_used) +
                            " terms before h turned positive (D = " + std::to_string(ctx.p.D) +
                            ")");
        }
        throw Error(ErrorCode::NoBracket,
                    "h stays non-positive down to the convergence boundary (D = " +
                        std::to_string(ctx.p.D) + ")");
    }

    // h is convex and decreasing, so Newton started where h > 0 approaches
    // the root monotonically from the left.
    Probe x = lo;
    int it = 0;
    while (it < kMaxIterations && x.h != 0.0) {
        const double ulp = std::numeric_limits<double>::epsilon() * x.C;
        const double newton = -x.h / x.dh;
        if (std::isfinite(newton) && std::abs(newton) <= 4.0 * ulp) {
            break;
        }
        double next = x.C + newton;
        if (!std::isfinite(next) || !(next > lo.C && next < hi.C)) {
            next = 0.5 * (lo.C + hi.C);
        }
        ++it;
        x = probe(ctx, next, ctx.trunc);
        if (x.h > 0.0) {
            lo = x;
        } else if (x.h < 0.0) {
            hi = x;
        }
        if (hi.C - lo.C <= 4.0 * ulp) {
            break;
        }
    }

    RootResult r;
    r.C = x.C;
    r.h = x.h;
    r.bracket_lo = lo.C;
    r.bracket_hi = hi.C;
    r.iterations = it;
    r.terms_used = x.series.F.terms_used;
    r.converged = x.converged() &&
                  std::abs(x.h) <= std::max(root_tol, 10.0 * ctx.trunc.abs_tol);
    at_root = x.series;
    return r;
}

double c1_from(const Problem& p, double F, double F1)
{
    if (!(std::abs(F1) >= kMinAbsF1)) {
        throw Error(ErrorCode::DegenerateF1, "|F1| = " + std::to_string(std::abs(F1)) +
                                                 " is too small to solve for C1");
    }
    return -p.a * F / (std::sqrt(p.D + 1.0) * F1);
}

double c2_from(const Problem& p, double C1, double F1, double F2)
{
    if (!(std::abs(F1) >= kMinAbsF1)) {
        throw Error(ErrorCode::DegenerateF1, "|F1| = " + std::to_string(std::abs(F1)) +
                                                 " is too small to solve for C2");
    }
    const double q = p.D + 1.0;
    const double rq = std::sqrt(q);
    return -(F2 / F1) * (1.0 - p.a * p.a / (2.0 * q)) / (4.0 * rq) - p.a * C1 / (4.0 * rq);
}

} // namespace

void Problem::validate() const
{
    if (!std::isfinite(D) || !(D > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "D must be positive and finite");
    }
    if (!std::isfinite(a) || !(a > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "a must be positive and finite");
    }
}

RootResult solve_C_numeric(const Problem& p, const TruncationConfig& trunc,
                           const BesselConfig& bcfg, double root_tol)
{
    p.validate();
    const Context ctx(p, trunc, bcfg);
    SeriesTriple unused;
    return find_root(ctx, root_tol, unused);
}

LinearSolve solve_C1_numeric(const Problem& p, double C, const TruncationConfig& trunc,
                             const BesselConfig& bcfg)
{
    p.validate();
    const SeriesTriple s = eval_all(C, Eccentricity::from_D(p.D), trunc, bcfg);
    return {c1_from(p, s.F.value, s.F1.value), s.F.terms_used, s.F.converged && s.F1.converged};
}

LinearSolve solve_C2_numeric(const Problem& p, double C, double C1, const TruncationConfig& trunc,
                             const BesselConfig& bcfg)
{
    p.validate();
    const SeriesTriple s = eval_all(C, Eccentricity::from_D(p.D), trunc, bcfg);
    return {c2_from(p, C1, s.F1.value, s.F2.value), s.F.terms_used,
            s.F1.converged && s.F2.converged};
}

Residuals residuals_from(const Problem& p, double C1, double C2, double F, double F1, double F2)
{
    const double q = p.D + 1.0;
    const double rq = std::sqrt(q);
    const double scale = std::max(std::abs(F1), std::abs(F2));
    Residuals r;
    r.r1 = 1.0 - p.D / (2.0 * q) * F;
    r.r2 = -(p.a / (2.0 * rq) * F + 0.5 * C1 * F1) / scale;
    r.r3 = -((1.0 - p.a * p.a / (2.0 * q)) * F2 / (4.0 * rq) + (p.a * C1 / (4.0 * rq) + C2) * F1) /
           scale;
    return r;
}

Residuals residuals(const Problem& p, double C, double C1, double C2,
                    const TruncationConfig& trunc, const BesselConfig& bcfg)
{
    p.validate();
    const SeriesTriple s = eval_all(C, Eccentricity::from_D(p.D), trunc, bcfg);
    return residuals_from(p, C1, C2, s.F.value, s.F1.value, s.F2.value);
}

SolveReport solve(const Problem& p, const TruncationConfig& trunc, const BesselConfig& bcfg,
                  double root_tol)
{
    p.validate();
    const Context ctx(p, trunc, bcfg);
    SeriesTriple s;
    const RootResult root = find_root(ctx, root_tol, s);

    SolveReport rep;
    rep.problem = p;
    rep.C_numeric = root.C;
    rep.F = s.F.value;
    rep.F1 = s.F1.value;
    rep.F2 = s.F2.value;
    rep.C1_numeric = c1_from(p, rep.F, rep.F1);
    rep.C2_numeric = c2_from(p, rep.C1_numeric, rep.F1, rep.F2);
    rep.residual = residuals_from(p, rep.C1_numeric, rep.C2_numeric, rep.F, rep.F1, rep.F2);
    rep.terms_used = {s.F.terms_used, s.F1.terms_used, s.F2.terms_used};
    rep.bracket = {root.bracket_lo, root.bracket_hi};
    rep.iterations = root.iterations;
    rep.g = ctx.ecc.g();
    rep.closed = closed_forms(p.D, p.a);
    rep.within_bound = rep.closed.lower_bound < root.C && root.C < 1.0;
    rep.converged = root.converged && all_converged(s);
    return rep;
}

} // namespace kapteyn
