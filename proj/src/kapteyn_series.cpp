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

#include "kapteyn/kapteyn_series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "kapteyn/error.hpp"

namespace kapteyn {
namespace {

constexpr long kMinTerms = 10;

// Neumaier's variant of compensated summation.
class CompensatedSum {
public:
    explicit CompensatedSum(double start = 0.0) : sum_(start) {}

    void add(double x)
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    double value() const { return sum_ + carry_; }

private:
    double sum_;
    double carry_ = 0.0;
};

// Geometric majorant of sum_{k>n} t_k given t_n and a ratio bound rho.
// Weighted series (an extra factor n) pick up the (1 + j/n)^{1/2} growth
// of their coefficients, bounded by 1 + j/(2n).
double tail_estimate(double last_term, double rho, long n, bool weighted)
{
    const double q = 1.0 - rho;
    double tail = last_term * rho / q;
    if (weighted) {
        tail += last_term * rho / (2.0 * static_cast<double>(n) * q * q);
    }
    return tail;
}

void check_C(double C, const Eccentricity& ecc, const TruncationConfig& trunc)
{
    if (!std::isfinite(C)) {
        throw Error(ErrorCode::NonFinite, "C is not finite");
    }
    if (!(C > 0.0 && C <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "C must lie in (0, 1], got " + std::to_string(C));
    }
    const double floor = ecc.g() + trunc.safety_margin * (1.0 - ecc.g());
    if (C < floor) {
        throw Error(ErrorCode::DivergentDomain,
                    "C = " + std::to_string(C) + " is not above the convergence boundary g = " +
                        std::to_string(ecc.g()) + " plus the safety margin");
    }
}

enum Want : unsigned { kWantF = 1u, kWantF1 = 2u, kWantF2 = 4u, kWantAll = 7u };

SeriesTriple sum_series(double C, const KapteynCoefficients& coeffs, const Eccentricity& ecc,
                        const TruncationConfig& trunc, unsigned want)
{
    const double log_c = std::log(C);
    const double log_rho = ecc.log_g() - log_c;
    const double rho = std::exp(log_rho);

    CompensatedSum f(1.0);
    CompensatedSum f1;
    CompensatedSum f2;
    double tail_f = 0.0, tail_f1 = 0.0, tail_f2 = 0.0;
    bool underflow = false;
    long n = 0;
    bool done = false;
    while (n < trunc.max_terms) {
        ++n;
        const KapteynTerm t = coeffs(static_cast<int>(n));
        const double nd = static_cast<double>(n);
        // J_n C^{-n} with the scale g^n folded in: j_scaled * rho^n
        const double base = std::exp(nd * log_rho);
        if (base == 0.0) {
            underflow = true;
        }
        const double two_n_logc = 2.0 * nd * log_c;
        const double even = 1.0 + std::exp(two_n_logc);  // 1 + C^{2n}
        const double odd = std::expm1(two_n_logc);        // C^{2n} - 1

        const double tf = t.j_scaled * base * even;
        const double tf1 = nd * t.j_scaled * base * odd;
        const double tf2 = nd * t.jp_scaled * base * even;
        f.add(tf);
        f1.add(tf1);
        f2.add(tf2);

        // The majorant uses the C^{-n} branch (factor 2 >= even).
        const double mag_f = 2.0 * std::abs(t.j_scaled) * base;
        const double mag_f2 = 2.0 * nd * std::abs(t.jp_scaled) * base;
        tail_f = tail_estimate(mag_f, rho, n, false);
        tail_f1 = log_c == 0.0 ? 0.0 : tail_estimate(nd * mag_f, rho, n, true);
        tail_f2 = tail_estimate(mag_f2, rho, n, true);

        if (n >= kMinTerms) {
            done = (!(want & kWantF) || tail_f <= trunc.abs_tol) &&
                   (!(want & kWantF1) || tail_f1 <= trunc.abs_tol) &&
                   (!(want & kWantF2) || tail_f2 <= trunc.abs_tol);
            if (done) {
                break;
            }
        }
    }
    auto make = [&](const CompensatedSum& s, double tail) {
        SeriesValue v;
        v.value = s.value();
        v.terms_used = n;
        v.tail_bound = tail;
        v.converged = tail <= trunc.abs_tol;
        v.underflow = underflow;
        return v;
    };
    return {make(f, tail_f), make(f1, tail_f1), make(f2, tail_f2)};
}

SeriesTriple evaluate(double C, const Eccentricity& ecc, const TruncationConfig& trunc,
                      const BesselConfig& bcfg, unsigned want)
{
    trunc.validate();
    check_C(C, ecc, trunc);
    const KapteynCoefficients coeffs(ecc.eps(), bcfg);
    return sum_series(C, coeffs, ecc, trunc, want);
}

} // namespace

Eccentricity::Eccentricity(double eps) : eps_(eps)
{
    if (!std::isfinite(eps)) {
        throw Error(ErrorCode::NonFinite, "eccentricity is not finite");
    }
    if (!(eps > 0.0 && eps < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "eccentricity must lie in (0, 1)");
    }
    s_ = std::sqrt((1.0 - eps) * (1.0 + eps));
    log_g_ = -debye_exponent(eps);
    g_ = std::exp(log_g_);
}

Eccentricity Eccentricity::from_eps(double eps)
{
    return Eccentricity(eps);
}

Eccentricity Eccentricity::from_D(double D)
{
    if (!std::isfinite(D) || !(D > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "D must be positive and finite");
    }
    return Eccentricity(1.0 / std::sqrt(D + 1.0));
}

void TruncationConfig::validate() const
{
    if (!(abs_tol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "abs_tol must be positive");
    }
    if (max_terms < 1) {
        throw Error(ErrorCode::InvalidArgument, "max_terms must be at least 1");
    }
    if (!(safety_margin > 0.0 && safety_margin < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "safety_margin must lie in (0, 1)");
    }
}

double convergence_boundary(const Eccentricity& ecc)
{
    return ecc.g();
}

SeriesValue eval_F(double C, const Eccentricity& ecc, const TruncationConfig& trunc,
                   const BesselConfig& bcfg)
{
    return evaluate(C, ecc, trunc, bcfg, kWantF).F;
}

SeriesValue eval_F1(double C, const Eccentricity& ecc, const TruncationConfig& trunc,
                    const BesselConfig& bcfg)
{
    return evaluate(C, ecc, trunc, bcfg, kWantF1).F1;
}

SeriesValue eval_F2(double C, const Eccentricity& ecc, const TruncationConfig& trunc,
                    const BesselConfig& bcfg)
{
    return evaluate(C, ecc, trunc, bcfg, kWantF2).F2;
}

SeriesTriple eval_all(double C, const Eccentricity& ecc, const TruncationConfig& trunc,
                      const BesselConfig& bcfg)
{
    return evaluate(C, ecc, trunc, bcfg, kWantAll);
}

SeriesTriple eval_all(double C, const KapteynCoefficients& coeffs, const Eccentricity& ecc,
                      const TruncationConfig& trunc)
{
    trunc.validate();
    check_C(C, ecc, trunc);
    if (coeffs.eps() != ecc.eps()) {
        throw Error(ErrorCode::InvalidArgument, "coefficient table built for a different eccentricity");
    }
    return sum_series(C, coeffs, ecc, trunc, kWantAll);
}

TrigSums eval_trig_sums(double E, const Eccentricity& ecc, const TruncationConfig& trunc,
                        const BesselConfig& bcfg, double endpoint_margin)
{
    trunc.validate();
    if (!std::isfinite(E)) {
        throw Error(ErrorCode::NonFinite, "eccentric anomaly is not finite");
    }
    if (!(endpoint_margin >= 0.0) || !(E > endpoint_margin && E < std::numbers::pi - endpoint_margin)) {
        throw Error(ErrorCode::OutOfRange, "E must lie strictly inside (margin, pi - margin)");
    }
    const double eps = ecc.eps();
    const double M = E - eps * std::sin(E);
    const KapteynCoefficients coeffs(eps, bcfg);
    const double rho = ecc.g();

    CompensatedSum s0(1.0);
    CompensatedSum s1;
    CompensatedSum s2;
    double tail = 0.0;
    long n = 0;
    while (n < trunc.max_terms) {
        ++n;
        const KapteynTerm t = coeffs(static_cast<int>(n));
        const double nd = static_cast<double>(n);
        const double gn = std::exp(nd * ecc.log_g());
        const double c0 = 2.0 * t.j_scaled * gn;
        const double c1 = nd * c0;
        const double c2 = 2.0 * nd * t.jp_scaled * gn;
        const double angle = nd * M;
        const double cs = std::cos(angle);
        const double sn = std::sin(angle);
        s0.add(c0 * cs);
        s1.add(c1 * sn);
        s2.add(c2 * cs);
        tail = std::max({tail_estimate(std::abs(c0), rho, n, false),
                         tail_estimate(std::abs(c1), rho, n, true),
                         tail_estimate(std::abs(c2), rho, n, true)});
        if (n >= kMinTerms && tail <= trunc.abs_tol) {
            break;
        }
    }
    TrigSums out;
    out.S0 = s0.value();
    out.S1 = s1.value();
    out.S2 = s2.value();
    out.M = M;
    out.terms_used = n;
    out.tail_bound = tail;
    out.converged = tail <= trunc.abs_tol;
    return out;
}

} // namespace kapteyn
