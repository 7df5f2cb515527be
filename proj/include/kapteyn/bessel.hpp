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

#ifndef KAPTEYN_BESSEL_HPP
#define KAPTEYN_BESSEL_HPP

#include <array>
#include <optional>
#include <string_view>

namespace kapteyn {

// Integer-order Bessel functions of the first kind, J_n(x) and J_n'(x),
// with emphasis on the large-order diagonal J_n(n*eps), 0 < eps < 1, that
// appears as the coefficient of a Kapteyn series.
//
// Algorithms, by regime:
//   * ascending power series        x <= 2, or x^2 <= n+1
//   * Miller backward recurrence     moderate x, normalized by
//                                    J_0 + 2 sum_k J_2k = 1
//   * Hankel asymptotic expansion    x >> n^2
//   * Debye expansion of J_nu(nu sech a), twelve correction polynomials,
//     used above the crossover order once nu*(atanh s - s) is large enough
//     that the expansion has converged to the requested accuracy
//   * Olver's uniform Airy-type expansion (k <= 3) for large orders close
//     to the turning point, where the Debye series is useless.
//
// Everything here is a pure function of its arguments.

struct BesselConfig {
    double rel_tol = 1e-13;      // target relative accuracy
    int crossover_order = 60;    // orders above this use the large-order path
    int max_order = 200000;      // hard cap on supported order

    // Throws Error(InvalidArgument) when an invariant is violated.
    void validate() const;
};

enum class BesselMethod { Trivial, PowerSeries, Miller, Hankel, Debye, UniformAiry };

std::string_view to_string(BesselMethod method) noexcept;

// Any integer order and real argument; negative orders and arguments are
// reduced by J_{-n}(x) = (-1)^n J_n(x) = J_n(-x). |n| <= cfg.max_order.
double bessel_j(int n, double x, const BesselConfig& cfg = {});

// J_n'(x) = (J_{n-1}(x) - J_{n+1}(x)) / 2 with J_{-1} = -J_1.
double bessel_j_prime(int n, double x, const BesselConfig& cfg = {});

// J_n(n*eps) for n >= 1, 0 < eps < 1. Returns 0.0 when the value is below
// the double range (see kapteyn_coeff_eval for the underflow flag).
double kapteyn_coeff(int n, double eps, const BesselConfig& cfg = {});
double kapteyn_coeff_prime(int n, double eps, const BesselConfig& cfg = {});

struct KapteynCoeffEval {
    double value;
    BesselMethod method;
    bool underflow;
};
KapteynCoeffEval kapteyn_coeff_eval(int n, double eps, const BesselConfig& cfg = {});
KapteynCoeffEval kapteyn_coeff_prime_eval(int n, double eps, const BesselConfig& cfg = {});

// One Kapteyn coefficient pair in scaled form:
//   J_n(n eps)  = j_scaled  * exp(n * log_g)
//   J_n'(n eps) = jp_scaled * exp(n * log_g)
// where g = eps e^s / (1 + s), s = sqrt(1 - eps^2). Both scaled values are
// O(n^{-1/2}), which keeps series terms representable long after the raw
// coefficients have underflowed.
struct KapteynTerm {
    double j_scaled;
    double jp_scaled;
    BesselMethod method;
};

// Precomputes everything that depends on eps alone (Debye polynomial
// values, Olver coefficients) so that a Kapteyn sum costs O(1) per term
// above the crossover order.
class KapteynCoefficients {
public:
    KapteynCoefficients(double eps, const BesselConfig& cfg = {});

    // As above, but only prepares what order `only_order` needs; used for
    // one-off evaluations where the extended-precision Olver setup would be
    // wasted.
    KapteynCoefficients(double eps, const BesselConfig& cfg, int only_order);

    // n >= 1. Throws Error(OrderTooLarge) above cfg.max_order.
    KapteynTerm operator()(int n) const;

    double eps() const noexcept { return eps_; }
    double s() const noexcept { return s_; }
    double log_g() const noexcept { return log_g_; }
    const BesselConfig& config() const noexcept { return cfg_; }

    // Exponent n*(atanh s - s) above which the Debye series is trusted.
    double debye_threshold() const noexcept { return debye_threshold_; }

    // Large-order path irrespective of the crossover order; exposed so the
    // crossover can be validated against the small-order path.
    KapteynTerm large_order(int n) const;
    KapteynTerm small_order(int n) const;

    struct DebyeSums {
        std::array<double, 13> u{};  // U_k(p), p = 1/s
        std::array<double, 13> v{};  // V_k(p)
    };
    struct OlverCoeffs {
        double zeta = 0;
        double pref_j = 0;    // (4 zeta / (1 - eps^2))^{1/4}
        double pref_jp = 0;   // -(2 / eps) ((1 - eps^2) / (4 zeta))^{1/4}
        std::array<double, 4> a{}, b{}, c{}, d{};
    };

private:
    KapteynTerm debye(int n) const;
    KapteynTerm uniform_airy(int n) const;

    double eps_;
    double s_;
    double log_g_;
    double debye_threshold_;
    BesselConfig cfg_;
    DebyeSums debye_;
    std::optional<OlverCoeffs> olver_;
};

// atanh(s) - s with s = sqrt(1 - eps^2), evaluated without cancellation;
// equals -log g(eps).
double debye_exponent(double eps);

} // namespace kapteyn

#endif // KAPTEYN_BESSEL_HPP
