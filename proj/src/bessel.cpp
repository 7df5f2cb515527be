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

#include "kapteyn/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "airy_table.hpp"
#include "debye_polynomials.hpp"
#include "kapteyn/error.hpp"

namespace kapteyn {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kDebyeTerms = 12;
constexpr int kOlverTerms = 3;
// Below this s = sqrt(1 - eps^2) the Olver coefficients lose too many digits
// to cancellation even in extended precision; Miller takes over.
constexpr double kMinUniformS = 1e-4;
constexpr double kHankelMin = 1e4;
constexpr double kRescale = 1e250;
constexpr double kLogRescale = 575.6462732485114;  // 250 ln 10

using Extended = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<120>>;

const detail::DebyePolynomials<Extended>& extended_polynomials()
{
    static const auto polys = detail::make_debye_polynomials<Extended>(kDebyeTerms);
    return polys;
}

const detail::DebyePolynomials<double>& double_polynomials()
{
    static const auto polys = [] {
        const auto& ext = extended_polynomials();
        detail::DebyePolynomials<double> out;
        for (const auto& c : ext.u) {
            out.u.emplace_back(c.begin(), c.end());
        }
        for (const auto& c : ext.v) {
            out.v.emplace_back(c.begin(), c.end());
        }
        for (std::size_t k = 0; k < ext.u.size(); ++k) {
            for (std::size_t j = 0; j < ext.u[k].size(); ++j) {
                out.u[k][j] = static_cast<double>(ext.u[k][j]);
            }
            for (std::size_t j = 0; j < ext.v[k].size(); ++j) {
                out.v[k][j] = static_cast<double>(ext.v[k][j]);
            }
        }
        return out;
    }();
    return polys;
}

void check_order(int n, const BesselConfig& cfg)
{
    if (n < 0) {
        throw Error(ErrorCode::InvalidArgument, "negative order " + std::to_string(n));
    }
    if (n > cfg.max_order) {
        throw Error(ErrorCode::OrderTooLarge,
                    "order " + std::to_string(n) + " exceeds max_order " +
                        std::to_string(cfg.max_order));
    }
}

void check_eps(double eps)
{
    if (!std::isfinite(eps)) {
        throw Error(ErrorCode::NonFinite, "eccentricity is not finite");
    }
    if (!(eps > 0.0 && eps < 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "eccentricity must lie in (0, 1)");
    }
}

// Ascending series. Each factor of the leading term (x/2)^n / n! is
// multiplied by `factor_scale`, i.e. the result is J_n(x) * factor_scale^n.
double power_series(int n, double x, double tol, double factor_scale = 1.0)
{
    const double half = 0.5 * x;
    double lead = 1.0;
    for (int k = 1; k <= n; ++k) {
        lead *= half * factor_scale / k;
    }
    if (lead == 0.0) {
        return 0.0;
    }
    const double q = -half * half;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 1000; ++k) {
        term *= q / (static_cast<double>(k) * (n + k));
        sum += term;
        if (std::abs(term) <= 0.01 * tol * std::abs(sum)) {
            break;
        }
    }
    return lead * sum;
}

// J_{n-1}, J_n, J_{n+1}; each true value is mantissa * exp(log_scale).
struct Neighbours {
    double below;
    double at;
    double above;
    double log_below;
    double log_at;
    double log_above;
};

Neighbours miller(int n, double x, double tol)
{
    // Run a dominant solution forward from the turning point until it has
    // grown past 1/tol^2; the backward recurrence started there has decayed
    // its error by the same factor by the time it reaches order n.
    const double target = std::max(1e20, 1.0 / (tol * tol));
    int k = std::max(n, static_cast<int>(std::ceil(x))) + 1;
    double y_prev = 0.0;
    double y = 1.0;
    while (std::abs(y) < target) {
        const double y_next = 2.0 * k / x * y - y_prev;
        y_prev = y;
        y = y_next;
        ++k;
    }
    int m = k + 10;
    if (m % 2 != 0) {
        ++m;
    }

    double next = 0.0;
    double cur = 1.0;
    double sum = 0.0;
    int rescales = 0;
    double rec_below = 0.0, rec_at = 0.0, rec_above = 0.0;
    int res_below = 0, res_at = 0, res_above = 0;
    for (int kk = m; kk >= 1; --kk) {
        if (kk == n + 1) {
            rec_above = cur;
            res_above = rescales;
        } else if (kk == n) {
            rec_at = cur;
            res_at = rescales;
        } else if (kk == n - 1) {
            rec_below = cur;
            res_below = rescales;
        }
        if (kk % 2 == 0) {
            sum += 2.0 * cur;
        }
        const double prev = 2.0 * kk / x * cur - next;
        next = cur;
        cur = prev;
        if (std::abs(cur) > kRescale) {
            cur /= kRescale;
            next /= kRescale;
            sum /= kRescale;
            ++rescales;
        }
    }
    if (n == 0) {
        rec_at = cur;
        res_at = rescales;
    } else if (n == 1) {
        rec_below = cur;
        res_below = rescales;
    }
    sum += cur;

    Neighbours out{};
    out.above = rec_above / sum;
    out.at = rec_at / sum;
    out.log_above = -kLogRescale * (rescales - res_above);
    out.log_at = -kLogRescale * (rescales - res_at);
    if (n == 0) {
        out.below = -out.above;
        out.log_below = out.log_above;
    } else {
        out.below = rec_below / sum;
        out.log_below = -kLogRescale * (rescales - res_below);
    }
    return out;
}

double hankel(int n, double x, double tol)
{
    const double mu = 4.0 * n * n;
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    double prev_abs = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 500; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (8.0 * k * x);
        const double a = std::abs(term);
        if (a > prev_abs) {
            break;
        }
        switch (k % 4) {
            case 1: q += term; break;
            case 2: p -= term; break;
            case 3: q -= term; break;
            default: p += term; break;
        }
        prev_abs = a;
        if (a < 0.01 * tol) {
            break;
        }
    }
    // chi = x - (2n+1) pi / 4, expanded so that x is reduced by the library.
    constexpr double r = std::numbers::sqrt2 / 2.0;
    double cphi = r;
    double sphi = r;
    switch ((2 * n + 1) % 8) {
        case 3: cphi = -r; break;
        case 5: cphi = -r; sphi = -r; break;
        case 7: sphi = -r; break;
        default: break;
    }
    const double cx = std::cos(x);
    const double sx = std::sin(x);
    const double cchi = cx * cphi + sx * sphi;
    const double schi = sx * cphi - cx * sphi;
    return std::sqrt(2.0 / (kPi * x)) * (p * cchi - q * schi);
}

KapteynCoefficients::OlverCoeffs compute_olver(double eps)
{
    using std::sqrt;
    const auto& polys = extended_polynomials();
    const Extended e = eps;
    const Extended s = sqrt((1 - e) * (1 + e));
    const Extended p = 1 / s;
    const Extended w = log((1 + s) / e) - s;  // (2/3) zeta^{3/2}
    const Extended zeta = cbrt(Extended(1.5) * w * Extended(1.5) * w);

    constexpr int kMax = 2 * kOlverTerms + 1;
    std::array<Extended, kMax + 1> lambda;
    std::array<Extended, kMax + 1> mu;
    lambda[0] = 1;
    mu[0] = 1;
    for (int j = 1; j <= kMax; ++j) {
        Extended num = 1;
        for (int i = 2 * j + 1; i <= 6 * j - 1; i += 2) {
            num *= i;
        }
        Extended den = 1;
        for (int i = 1; i <= j; ++i) {
            den *= 216 * i;
        }
        lambda[j] = num / den;
        mu[j] = -Extended(6 * j + 1) / Extended(6 * j - 1) * lambda[j];
    }
    std::array<Extended, kMax + 1> up;
    std::array<Extended, kMax + 1> vp;
    std::array<Extended, kMax + 1> winv;
    winv[0] = 1;
    for (int m = 0; m <= kMax; ++m) {
        up[m] = detail::horner(polys.u[m], p);
        vp[m] = detail::horner(polys.v[m], p);
        if (m > 0) {
            winv[m] = winv[m - 1] / w;
        }
    }
    const Extended rz = sqrt(zeta);

    KapteynCoefficients::OlverCoeffs out;
    for (int k = 0; k <= kOlverTerms; ++k) {
        Extended a = 0, b = 0, c = 0, d = 0;
        for (int j = 0; j <= 2 * k; ++j) {
            a += mu[j] * winv[j] * up[2 * k - j];
            d += lambda[j] * winv[j] * vp[2 * k - j];
        }
        for (int j = 0; j <= 2 * k + 1; ++j) {
            b += lambda[j] * winv[j] * up[2 * k + 1 - j];
            c += mu[j] * winv[j] * vp[2 * k + 1 - j];
        }
        out.a[k] = static_cast<double>(a);
        out.b[k] = static_cast<double>(-b / rz);
        out.c[k] = static_cast<double>(-c * rz);
        out.d[k] = static_cast<double>(d);
    }
    const Extended ratio = 4 * zeta / (s * s);
    out.zeta = static_cast<double>(zeta);
    out.pref_j = static_cast<double>(sqrt(sqrt(ratio)));
    out.pref_jp = static_cast<double>(-2 / e / sqrt(sqrt(ratio)));
    return out;
}

} // namespace

std::string_view to_string(BesselMethod method) noexcept
{
    switch (method) {
        case BesselMethod::Trivial: return "trivial";
        case BesselMethod::PowerSeries: return "power_series";
        case BesselMethod::Miller: return "miller";
        case BesselMethod::Hankel: return "hankel";
        case BesselMethod::Debye: return "debye";
        case BesselMethod::UniformAiry: return "uniform_airy";
    }
    return "unknown";
}

void BesselConfig::validate() const
{
    if (!(rel_tol > 0.0 && rel_tol < 1e-6)) {
        throw Error(ErrorCode::InvalidArgument, "rel_tol must lie in (0, 1e-6)");
    }
    if (max_order < 1 || crossover_order < 1 || crossover_order > max_order) {
        throw Error(ErrorCode::InvalidArgument, "require 1 <= crossover_order <= max_order");
    }
}

double debye_exponent(double eps)
{
    const double s = std::sqrt((1.0 - eps) * (1.0 + eps));
    if (s < 0.6) {
        const double s2 = s * s;
        double power = s * s2;
        double sum = 0.0;
        for (int k = 1; k < 200; ++k) {
            const double term = power / (2 * k + 1);
            sum += term;
            if (term <= 1e-17 * sum) {
                break;
            }
            power *= s2;
        }
        return sum;
    }
    return std::log1p(s) - std::log(eps) - s;
}

KapteynCoefficients::KapteynCoefficients(double eps, const BesselConfig& cfg)
    : KapteynCoefficients(eps, cfg, 0)
{
}

KapteynCoefficients::KapteynCoefficients(double eps, const BesselConfig& cfg, int only_order)
    : eps_(eps), cfg_(cfg)
{
    cfg_.validate();
    check_eps(eps);
    s_ = std::sqrt((1.0 - eps) * (1.0 + eps));
    const double w = debye_exponent(eps);
    log_g_ = -w;
    // Near the turning point the Debye terms behave like c_k / x^k with
    // c_13 ~ 1.2e4; stop trusting the series before that term reaches rel_tol.
    debye_threshold_ = std::max(12.0, std::pow(1.2e5 / cfg_.rel_tol, 1.0 / 13.0));
    if (s_ >= kMinUniformS) {
        const auto& polys = double_polynomials();
        const double p = 1.0 / s_;
        for (int k = 0; k <= kDebyeTerms; ++k) {
            debye_.u[k] = detail::horner(polys.u[k], p);
            debye_.v[k] = detail::horner(polys.v[k], p);
        }
        const int first = only_order > 0 ? only_order : cfg_.crossover_order + 1;
        const bool needs_uniform = only_order > 0
                                       ? (only_order > cfg_.crossover_order && first * w < debye_threshold_)
                                       : first * w < debye_threshold_;
        if (needs_uniform) {
            olver_ = compute_olver(eps);
        }
    }
}

KapteynTerm KapteynCoefficients::operator()(int n) const
{
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "Kapteyn coefficients start at n = 1");
    }
    check_order(n, cfg_);
    return n <= cfg_.crossover_order ? small_order(n) : large_order(n);
}

KapteynTerm KapteynCoefficients::small_order(int n) const
{
    const double x = n * eps_;
    const double w = -log_g_;
    if (x <= 2.0 || x * x <= n + 1.0) {
        const double inv_g = std::exp(w);
        const double tol = cfg_.rel_tol;
        const double j = power_series(n, x, tol, inv_g);
        // J_{n-1} g^{-n} and J_{n+1} g^{-n}
        const double jm = power_series(n - 1, x, tol, inv_g) * inv_g;
        const double jp = power_series(n + 1, x, tol, inv_g) / inv_g;
        return {j, 0.5 * (jm - jp), BesselMethod::PowerSeries};
    }
    const Neighbours nb = miller(n, x, cfg_.rel_tol);
    const double shift = n * w;
    const double j = nb.at * std::exp(nb.log_at + shift);
    const double jm = nb.below * std::exp(nb.log_below + shift);
    const double jp = nb.above * std::exp(nb.log_above + shift);
    return {j, 0.5 * (jm - jp), BesselMethod::Miller};
}

KapteynTerm KapteynCoefficients::large_order(int n) const
{
    if (s_ < kMinUniformS) {
        KapteynTerm t = small_order(n);
        return t;
    }
    if (n * (-log_g_) >= debye_threshold_) {
        return debye(n);
    }
    return uniform_airy(n);
}

KapteynTerm KapteynCoefficients::debye(int n) const
{
    const double inv = 1.0 / n;
    double su = 0.0;
    double sv = 0.0;
    for (int k = kDebyeTerms; k >= 0; --k) {
        su = su * inv + debye_.u[k];
        sv = sv * inv + debye_.v[k];
    }
    const double j = su / std::sqrt(2.0 * kPi * n * s_);
    const double jp = std::sqrt(s_ / (2.0 * kPi * n)) / eps_ * sv;
    return {j, jp, BesselMethod::Debye};
}

KapteynTerm KapteynCoefficients::uniform_airy(int n) const
{
    const OlverCoeffs oc = olver_ ? *olver_ : compute_olver(eps_);
    const double nu = n;
    const double c = std::cbrt(nu);
    const double c2 = c * c;
    const auto [ai, aip] = detail::airy(c2 * oc.zeta);
    const double inv2 = 1.0 / (nu * nu);
    double sa = 0.0, sb = 0.0, sc = 0.0, sd = 0.0;
    for (int k = kOlverTerms; k >= 0; --k) {
        sa = sa * inv2 + oc.a[k];
        sb = sb * inv2 + oc.b[k];
        sc = sc * inv2 + oc.c[k];
        sd = sd * inv2 + oc.d[k];
    }
    const double j = oc.pref_j * (ai / c * sa + aip / (nu * c2) * sb);
    const double jp = oc.pref_jp * (ai / (nu * c) * sc + aip / c2 * sd);
    const double scale = std::exp(-n * log_g_);
    return {j * scale, jp * scale, BesselMethod::UniformAiry};
}

namespace {

enum class Regime { Zero, Series, Miller, Hankel, LargeOrder };

Regime choose_regime(int n, double x, const BesselConfig& cfg)
{
    if (x == 0.0) {
        return Regime::Zero;
    }
    if (n > cfg.crossover_order && x < n && x > 1e-280 * n) {
        return Regime::LargeOrder;
    }
    if (x <= 2.0 || x * x <= n + 1.0) {
        return Regime::Series;
    }
    if (x >= kHankelMin && x >= 4.0 * static_cast<double>(n) * n) {
        return Regime::Hankel;
    }
    return Regime::Miller;
}

struct ValueAndSlope {
    double j;
    double jp;
};

// J_n(x), J_n'(x) for x > 0.
ValueAndSlope evaluate_positive(int n, double x, const BesselConfig& cfg, bool need_slope)
{
    const double tol = cfg.rel_tol;
    switch (choose_regime(n, x, cfg)) {
        case Regime::Zero:
            return {n == 0 ? 1.0 : 0.0, n == 1 ? 0.5 : 0.0};
        case Regime::Series: {
            const double j = power_series(n, x, tol);
            if (!need_slope) {
                return {j, 0.0};
            }
            const double jm = n == 0 ? -power_series(1, x, tol) : power_series(n - 1, x, tol);
            return {j, 0.5 * (jm - power_series(n + 1, x, tol))};
        }
        case Regime::Hankel: {
            const double j = hankel(n, x, tol);
            if (!need_slope) {
                return {j, 0.0};
            }
            const double jm = n == 0 ? -hankel(1, x, tol) : hankel(n - 1, x, tol);
            return {j, 0.5 * (jm - hankel(n + 1, x, tol))};
        }
        case Regime::Miller: {
            const Neighbours nb = miller(n, x, tol);
            const double j = nb.at * std::exp(nb.log_at);
            const double jm = nb.below * std::exp(nb.log_below);
            const double jp = nb.above * std::exp(nb.log_above);
            return {j, 0.5 * (jm - jp)};
        }
        case Regime::LargeOrder: {
            const double eps = x / n;
            const KapteynCoefficients coeffs(eps, cfg, n);
            const KapteynTerm t = coeffs.large_order(n);
            const double scale = std::exp(n * coeffs.log_g());
            return {t.j_scaled * scale, t.jp_scaled * scale};
        }
    }
    return {0.0, 0.0};
}

void check_argument(double x)
{
    if (!std::isfinite(x)) {
        throw Error(ErrorCode::NonFinite, "argument is not finite");
    }
}

KapteynCoeffEval finish(double scaled, double log_g, int n, BesselMethod method)
{
    const double value = scaled * std::exp(n * log_g);
    if (scaled != 0.0 && std::abs(value) < std::numeric_limits<double>::min()) {
        return {0.0, method, true};
    }
    return {value, method, false};
}

} // namespace

double bessel_j(int n, double x, const BesselConfig& cfg)
{
    cfg.validate();
    check_argument(x);
    // J_{-n} = (-1)^n J_n and J_n(-x) = (-1)^n J_n(x).
    const int m = n < 0 ? -n : n;
    check_order(m, cfg);
    const bool flip = (m % 2 == 1) && ((n < 0) != (x < 0.0));
    const double v = evaluate_positive(m, std::abs(x), cfg, false).j;
    return flip ? -v : v;
}

double bessel_j_prime(int n, double x, const BesselConfig& cfg)
{
    cfg.validate();
    check_argument(x);
    // J_n' is odd in x when n is even and even when n is odd.
    const int m = n < 0 ? -n : n;
    check_order(m, cfg);
    const bool flip = ((m % 2 == 1) && n < 0) != ((m % 2 == 0) && x < 0.0);
    const double v = evaluate_positive(m, std::abs(x), cfg, true).jp;
    return flip ? -v : v;
}

KapteynCoeffEval kapteyn_coeff_eval(int n, double eps, const BesselConfig& cfg)
{
    cfg.validate();
    check_eps(eps);
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "Kapteyn coefficients start at n = 1");
    }
    check_order(n, cfg);
    const KapteynCoefficients coeffs(eps, cfg, n);
    const KapteynTerm t = coeffs(n);
    return finish(t.j_scaled, coeffs.log_g(), n, t.method);
}

KapteynCoeffEval kapteyn_coeff_prime_eval(int n, double eps, const BesselConfig& cfg)
{
    cfg.validate();
    check_eps(eps);
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "Kapteyn coefficients start at n = 1");
    }
    check_order(n, cfg);
    const KapteynCoefficients coeffs(eps, cfg, n);
    const KapteynTerm t = coeffs(n);
    return finish(t.jp_scaled, coeffs.log_g(), n, t.method);
}

double kapteyn_coeff(int n, double eps, const BesselConfig& cfg)
{
    return kapteyn_coeff_eval(n, eps, cfg).value;
}

double kapteyn_coeff_prime(int n, double eps, const BesselConfig& cfg)
{
    return kapteyn_coeff_prime_eval(n, eps, cfg).value;
}

} // namespace kapteyn
