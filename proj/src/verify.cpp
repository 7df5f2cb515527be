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

#include "kapteyn/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <string>

#include "kapteyn/closed_form.hpp"
#include "kapteyn/error.hpp"
#include "kapteyn/kepler.hpp"
#include "kapteyn/solver.hpp"

namespace kapteyn {
namespace {

constexpr std::array<double, 8> kGridD{0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0, 100.0};
constexpr std::array<double, 4> kExactD{0.5, 1.0, 2.0, 5.0};
constexpr std::array<double, 3> kScaleA{0.5, 1.0, 2.0};
constexpr std::array<double, 7> kIdentityEps{0.05, 0.1, 0.2, 0.35, 0.5, 0.65, 0.8};
constexpr std::array<double, 9> kEpsGrid{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
constexpr int kIdentityPoints = 25;
constexpr double kEndpoint = 0.05;

double rel_err(double x, double ref)
{
    return std::abs(x - ref) / std::abs(ref);
}

// Records the first truncation failure seen by a check.
struct Tracker {
    Check& c;
    bool truncated = false;

    void series(const SeriesValue& v, const char* what)
    {
        if (!v.converged && !truncated) {
            truncated = true;
            c.diagnostic = std::string(to_string(ErrorCode::MaxTermsExceeded)) + ": " + what +
                           " stopped after " + std::to_string(v.terms_used) +
                           " terms with tail bound " + std::to_string(v.tail_bound);
        }
    }

    void flag(bool ok, const std::string& what)
    {
        if (!ok && !truncated) {
            truncated = true;
            c.diagnostic = std::string(to_string(ErrorCode::MaxTermsExceeded)) + ": " + what;
        }
    }

    void worst(double e) { c.measured = std::max(c.measured, e); }

    // Pass iff the worst error is within tolerance and nothing was cut short.
    void settle() { c.passed = !truncated && c.measured <= c.tolerance; }
};

class Battery {
public:
    void run(std::string id, int criterion, std::string description, double tolerance,
             const std::function<void(Tracker&)>& body)
    {
        Check c;
        c.id = std::move(id);
        c.criterion = criterion;
        c.description = std::move(description);
        c.tolerance = tolerance;
        try {
            Tracker t{c};
            body(t);
        } catch (const Error& e) {
            c.passed = false;
            c.diagnostic = e.what();
        }
        checks_.push_back(std::move(c));
    }

    std::vector<Check> take() { return std::move(checks_); }

private:
    std::vector<Check> checks_;
};

} // namespace

void VerifyConfig::validate() const
{
    if (!(abs_tol > 0.0)) {
        throw Error(ErrorCode::InvalidArgument, "abs_tol must be positive");
    }
    if (max_terms < 10) {
        throw Error(ErrorCode::InvalidArgument, "max_terms must be at least 10");
    }
    if (small_d_term_factor < 1) {
        throw Error(ErrorCode::InvalidArgument, "small_d_term_factor must be at least 1");
    }
}

std::vector<IdentityRow> identity_table(double eps, int points, const TruncationConfig& trunc,
                                        const BesselConfig& bcfg)
{
    if (points < 1) {
        throw Error(ErrorCode::InvalidArgument, "need at least one E point");
    }
    const Eccentricity ecc = Eccentricity::from_eps(eps);
    const double span = std::numbers::pi - 2.0 * kEndpoint;
    std::vector<IdentityRow> rows;
    rows.reserve(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double E = kEndpoint + span * (i + 0.5) / points;
        const TrigSums s = eval_trig_sums(E, ecc, trunc, bcfg, kEndpoint);
        const IdentityRhs r = identity_rhs(orbit_state(E, eps));
        rows.push_back({E, s.M, s.S0, r.R0, std::abs(s.S0 - r.R0), s.S1, r.R1,
                        std::abs(s.S1 - r.R1), s.S2, r.R2, std::abs(s.S2 - r.R2), s.terms_used,
                        s.converged});
    }
    return rows;
}

VerifyReport run_verification(const VerifyConfig& cfg)
{
    cfg.validate();
    TruncationConfig trunc;
    trunc.abs_tol = cfg.abs_tol;
    trunc.max_terms = cfg.max_terms;
    BesselConfig bcfg;
    bcfg.max_order = static_cast<int>(std::max<long>(bcfg.max_order, cfg.max_terms));

    VerifyReport rep;
    Battery b;

    b.run("closed_form_exactness", 1, "|D/(2(D+1)) F(closed C) - 1| on the D grid", 1e-9,
          [&](Tracker& t) {
              for (double D : kGridD) {
                  const SeriesValue F = eval_F(closed_C(D), Eccentricity::from_D(D), trunc, bcfg);
                  t.series(F, "F");
                  t.worst(std::abs(D / (2.0 * (D + 1.0)) * F.value - 1.0));
              }
              t.settle();
          });

    b.run("numeric_closed_agreement", 2, "relative gap between solved and closed-form C", 1e-10,
          [&](Tracker& t) {
              for (double D : kGridD) {
                  const RootResult r = solve_C_numeric({D, 1.0}, trunc, bcfg);
                  t.flag(r.converged, "root solve at D = " + std::to_string(D));
                  t.worst(rel_err(r.C, closed_C(D)));
              }
              t.settle();
          });

    b.run("bound_interval", 3,
          "lo < C < 1 on a 50-point log grid in [1e-2, 1e4]; lo matches g relatively", 1e-14,
          [&](Tracker& t) {
              bool inside = true;
              for (int i = 0; i < 50; ++i) {
                  const double D = std::pow(10.0, -2.0 + 6.0 * i / 49.0);
                  const BoundInterval bi = bound_interval(D);
                  const double C = closed_C(D);
                  inside = inside && bi.lo < C && C < bi.hi;
                  t.worst(rel_err(bi.lo, convergence_boundary(Eccentricity::from_D(D))));
              }
              t.settle();
              if (!inside) {
                  t.c.passed = false;
                  t.c.diagnostic = "closed-form C left the bound interval";
              }
          });

    // Small D: the series needs millions of terms.
    TruncationConfig small = trunc;
    small.max_terms = cfg.max_terms * cfg.small_d_term_factor;
    small.abs_tol = std::min(cfg.abs_tol, 1e-13);
    BesselConfig small_b = bcfg;
    small_b.max_order = static_cast<int>(std::max<long>(small_b.max_order, small.max_terms));
    const double d_small = 1e-3;

    b.run("small_D_closed_C", 4, "|closed C - (1 - D^2/4)| at D = 1e-3", 2e-9, [&](Tracker& t) {
        t.worst(std::abs(closed_C(d_small) - (1.0 - d_small * d_small / 4.0)));
        t.settle();
    });

    SolveReport small_rep;
    std::optional<Error> small_err;
    try {
        small_rep = solve({d_small, 1.0}, small, small_b);
    } catch (const Error& e) {
        small_err = e;
    }
    auto small_check = [&](const char* id, const char* desc, double tol, auto measure) {
        b.run(id, 4, desc, tol, [&](Tracker& t) {
            if (small_err) {
                throw *small_err;
            }
            t.flag(small_rep.converged, "solve at D = 1e-3 did not converge");
            t.worst(measure());
            t.settle();
        });
    };
    small_check("small_D_C1", "|numeric C1 - D/2| at D = 1e-3, a = 1", d_small * d_small,
                [&] { return std::abs(small_rep.C1_numeric - d_small / 2.0); });
    small_check("small_D_C2", "|numeric C2 - 1/8| at D = 1e-3, a = 1", 1e-3,
                [&] { return std::abs(small_rep.C2_numeric - 0.125); });

    b.run("large_D_ratio", 5, "|closed C / sqrt(e/D) - 1| at D = 1e4", 1e-3, [&](Tracker& t) {
        const double D = 1e4;
        const double ratio = closed_C(D) / asymptotics(D, 1.0).C_large;
        t.worst(std::abs(ratio - 1.0));
        t.settle();
        // Both factors of the ratio are below one, so the approach is from below.
        t.c.diagnostic = ratio < 1.0 ? "ratio approaches 1 from below" : "ratio approaches 1 from above";
    });

    b.run("large_D_numeric", 5, "relative gap between solved and closed-form C at D = 100",
          1e-10, [&](Tracker& t) {
              const RootResult r = solve_C_numeric({100.0, 1.0}, trunc, bcfg);
              t.flag(r.converged, "root solve at D = 100");
              t.worst(rel_err(r.C, closed_C(100.0)));
              t.settle();
          });

    b.run("exact_series_values", 6, "relative error of F1, F2 at the closed-form root", 1e-8,
          [&](Tracker& t) {
              for (double D : kExactD) {
                  const SeriesTriple s = eval_all(closed_C(D), Eccentricity::from_D(D), trunc, bcfg);
                  const ExactSeriesValues ex = exact_series_values(D);
                  t.series(s.F1, "F1");
                  t.series(s.F2, "F2");
                  t.worst(std::max(rel_err(s.F1.value, ex.F1), rel_err(s.F2.value, ex.F2)));
              }
              t.settle();
          });

    b.run("c1_closed_form", 7, "relative gap between solved and closed-form C1", 1e-9,
          [&](Tracker& t) {
              for (double D : kExactD) {
                  const RootResult r = solve_C_numeric({D, 1.0}, trunc, bcfg);
                  t.flag(r.converged, "root solve at D = " + std::to_string(D));
                  for (double a : kScaleA) {
                      const LinearSolve c1 = solve_C1_numeric({D, a}, r.C, trunc, bcfg);
                      t.flag(c1.converged, "C1 series at D = " + std::to_string(D));
                      t.worst(rel_err(c1.value, closed_C1(D, a)));
                  }
              }
              t.settle();
          });

    b.run("c2_residual", 8, "normalized residual of the C2 equation at the numeric solution",
          1e-10, [&](Tracker& t) {
              TruncationConfig tight = trunc;
              tight.abs_tol = std::min(cfg.abs_tol, 1e-14);
              const Problem p{1.0, 1.0};
              const SolveReport s = solve(p, tight, bcfg);
              t.flag(s.converged, "solve at D = 1, a = 1");
              t.worst(std::abs(s.residual.r3));
              for (double D : kExactD) {
                  const SolveReport o = solve({D, 1.0}, trunc, bcfg);
                  t.flag(o.converged, "solve at D = " + std::to_string(D));
                  t.worst(std::abs(o.residual.r3));
              }
              t.settle();

              C2Adjudication& adj = rep.c2;
              adj.D = p.D;
              adj.a = p.a;
              adj.numeric = s.C2_numeric;
              adj.paper_formula = closed_C2_paper(p.D, p.a);
              const ExactSeriesValues ex = exact_series_values(p.D);
              const double q = p.D + 1.0;
              const double rq = std::sqrt(q);
              adj.derived_formula = -(ex.F2 / ex.F1) * (1.0 - p.a * p.a / (2.0 * q)) / (4.0 * rq) -
                                    p.a * closed_C1(p.D, p.a) / (4.0 * rq);
              adj.distance_paper = std::abs(adj.numeric - adj.paper_formula);
              adj.distance_derived = std::abs(adj.numeric - adj.derived_formula);
              adj.closest = adj.distance_derived <= adj.distance_paper ? "derived_formula"
                                                                       : "paper_formula";
              adj.residual = s.residual.r3;
          });

    {
        IdentitySummary& id = rep.identity;
        std::optional<Error> failure;
        bool truncated = false;
        try {
            for (double eps : kIdentityEps) {
                for (const IdentityRow& r : identity_table(eps, kIdentityPoints, trunc, bcfg)) {
                    ++id.points;
                    truncated = truncated || !r.converged;
                    id.max_err_S0 = std::max(id.max_err_S0, r.err0);
                    id.max_err_S1 = std::max(id.max_err_S1, r.err1);
                    id.max_err_S2 = std::max(id.max_err_S2, r.err2);
                }
            }
        } catch (const Error& e) {
            failure = e;
        }
        auto identity_check = [&](const char* idn, const char* desc, double tol, double err) {
            b.run(idn, 9, desc, tol, [&](Tracker& t) {
                if (failure) {
                    throw *failure;
                }
                t.flag(!truncated, "trigonometric sums were truncated");
                t.worst(err);
                t.settle();
            });
        };
        identity_check("identity_S0", "max |S0 - 1/rho|", 1e-10, id.max_err_S0);
        identity_check("identity_S1", "max |S1 - sin(w) eps / (rho^2 sqrt(1 - eps^2))|", 1e-9,
                       id.max_err_S1);
        identity_check("identity_S2", "max |S2 - cos(w) / rho^2|", 1e-9, id.max_err_S2);
    }

    b.run("proof_trace", 10, "complex Kepler reconstruction of C on 19 eccentricities", 1e-13,
          [&](Tracker& t) {
              for (int i = 0; i < 19; ++i) {
                  const double eps = 0.05 + 0.05 * i;
                  const ProofTrace pt = proof_trace(eps);
                  t.worst(std::abs(pt.C_reconstructed - eps * std::exp((1.0 - eps * eps) / 2.0)));
                  t.worst(std::abs(pt.M.real()));
              }
              t.settle();
          });

    b.run("bessel_recurrence", 11, "three-term recurrence residual along x = n eps", 1e-10,
          [&](Tracker& t) {
              for (int n : {1, 2, 3, 5, 10, 20, 40, 55, 59, 60, 61, 62, 65, 80, 100, 200, 350, 500}) {
                  for (double eps : kEpsGrid) {
                      const double x = n * eps;
                      const double jm = bessel_j(n - 1, x, bcfg);
                      const double j0 = bessel_j(n, x, bcfg);
                      const double jp = bessel_j(n + 1, x, bcfg);
                      const double scale = std::max({std::abs(jm), std::abs(j0), std::abs(jp)});
                      if (scale > 0.0) {
                          t.worst(std::abs(jm + jp - 2.0 * n / x * j0) / scale);
                      }
                  }
              }
              t.settle();
          });

    b.run("bessel_symmetry", 11, "J_{-n}(x) against (-1)^n J_n(x), n <= 20, x in (0, 5]", 1e-12,
          [&](Tracker& t) {
              for (int n = 0; n <= 20; ++n) {
                  for (double x : {0.25, 1.0, 2.5, 4.0, 5.0}) {
                      const double direct = bessel_j(-n, x, bcfg);
                      const double reflected = (n % 2 == 0 ? 1.0 : -1.0) * bessel_j(n, x, bcfg);
                      const double scale = std::max(std::abs(reflected), 1e-300);
                      t.worst(std::abs(direct - reflected) / scale);
                  }
              }
              t.settle();
          });

    b.run("bessel_crossover", 11, "small- and large-order paths around the crossover order",
          1e-10, [&](Tracker& t) {
              for (double eps : kEpsGrid) {
                  const KapteynCoefficients k(eps, bcfg);
                  for (int n = bcfg.crossover_order - 5; n <= bcfg.crossover_order + 5; ++n) {
                      const KapteynTerm lo = k.small_order(n);
                      const KapteynTerm hi = k.large_order(n);
                      t.worst(rel_err(hi.j_scaled, lo.j_scaled));
                      t.worst(rel_err(hi.jp_scaled, lo.jp_scaled));
                  }
              }
              t.settle();
          });

    b.run("kepler_round_trip", 11, "|E - eps sin E - M| after solving for E", 1e-12,
          [&](Tracker& t) {
              for (double eps : {0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
                  for (int i = 0; i <= 40; ++i) {
                      const double M = -std::numbers::pi + 2.0 * std::numbers::pi * i / 40.0;
                      const double E = solve_kepler(M, eps);
                      t.worst(std::abs(E - eps * std::sin(E) - M));
                  }
              }
              t.settle();
          });

    b.run("series_monotonicity_signs", 11, "F decreasing in C, F1 <= 0, F2 > 0", 0.0,
          [&](Tracker& t) {
              bool ok = true;
              for (double D : {0.5, 1.0, 5.0}) {
                  const Eccentricity ecc = Eccentricity::from_D(D);
                  double prev = INFINITY;
                  for (int i = 0; i <= 20; ++i) {
                      const double C = ecc.g() + (1.0 - ecc.g()) * (0.02 + 0.98 * i / 20.0);
                      const SeriesTriple s = eval_all(C, ecc, trunc, bcfg);
                      t.series(s.F, "F");
                      ok = ok && s.F.value < prev && s.F1.value <= 0.0 && s.F2.value > 0.0;
                      prev = s.F.value;
                  }
              }
              t.c.measured = ok ? 0.0 : 1.0;
              t.settle();
          });

    b.run("f1_derivative", 11, "F1 = C dF/dC by central differences, observed order", 0.2,
          [&](Tracker& t) {
              const double D = 1.0;
              const Eccentricity ecc = Eccentricity::from_D(D);
              const double C = closed_C(D);
              const SeriesValue F1 = eval_F1(C, ecc, trunc, bcfg);
              t.series(F1, "F1");
              std::array<double, 3> err{};
              double h = 2e-3;
              for (double& e : err) {
                  const double fp = eval_F(C + h, ecc, trunc, bcfg).value;
                  const double fm = eval_F(C - h, ecc, trunc, bcfg).value;
                  e = std::abs(C * (fp - fm) / (2.0 * h) - F1.value);
                  h /= 2.0;
              }
              const double order = std::log2(std::sqrt((err[0] / err[1]) * (err[1] / err[2])));
              t.worst(std::abs(order - 2.0));
              t.settle();
          });

    b.run("fold_equivalence", 11, "two-sided sums against folded sums at N = 30", 1e-13,
          [&](Tracker& t) {
              TruncationConfig thirty = trunc;
              thirty.max_terms = 30;
              thirty.abs_tol = 1e-300;
              for (double eps : {0.3, 0.6, 0.9}) {
                  const Eccentricity ecc = Eccentricity::from_eps(eps);
                  const double C = 0.5 * (ecc.g() + 1.0);
                  double two_f = 0.0, two_f1 = 0.0, two_f2 = 0.0;
                  for (int n = -30; n <= 30; ++n) {
                      const double cn = std::pow(C, n);
                      two_f += bessel_j(n, n * eps, bcfg) * cn;
                      two_f1 += n * bessel_j(n, n * eps, bcfg) * cn;
                      two_f2 += n * bessel_j_prime(n, n * eps, bcfg) * cn;
                  }
                  const SeriesTriple s = eval_all(C, ecc, thirty, bcfg);
                  t.worst(rel_err(s.F.value, two_f));
                  t.worst(rel_err(s.F1.value, two_f1));
                  t.worst(rel_err(s.F2.value, two_f2));
              }
              t.settle();
          });

    rep.checks = b.take();
    rep.passed = std::all_of(rep.checks.begin(), rep.checks.end(),
                             [](const Check& c) { return c.passed; });
    return rep;
}

} // namespace kapteyn
