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

#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <climits>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kapteyn/closed_form.hpp"
#include "kapteyn/error.hpp"
#include "kapteyn/solver.hpp"
#include "kapteyn/verify.hpp"

namespace kapteyn::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr double kDefaultTol = 1e-12;
constexpr long kDefaultMaxTerms = 200000;

enum class Format { Text, Json, Csv };

struct RunConfig {
    double tol = kDefaultTol;
    long max_terms = kDefaultMaxTerms;
    Format format = Format::Text;
    std::string format_name = "text";
    std::string out_path;
    bool timing = false;

    TruncationConfig trunc() const
    {
        TruncationConfig t;
        t.abs_tol = tol;
        t.max_terms = max_terms;
        return t;
    }

    BesselConfig bessel() const
    {
        BesselConfig b;
        b.max_order = static_cast<int>(std::max<long>(b.max_order, max_terms));
        return b;
    }
};

// Bad input detected by the front end itself.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Outcome {
    std::string body;
    int status = kExitOk;
    std::string warning;
};

bool is_usage(ErrorCode code)
{
    return code == ErrorCode::InvalidArgument || code == ErrorCode::NonFinite ||
           code == ErrorCode::OutOfRange;
}

json num(double x)
{
    // nlohmann writes non-finite values as null, which is what we want.
    return json(x);
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') {
            q += '"';
        }
        q += c;
    }
    return q + '"';
}

std::string csv_num(double x)
{
    return std::isfinite(x) ? format_double(x) : std::string();
}

template <class... T>
std::string csv_row(const T&... fields)
{
    std::string line;
    bool first = true;
    auto add = [&](const std::string& f) {
        if (!first) {
            line += ',';
        }
        first = false;
        line += f;
    };
    (add(fields), ...);
    return line + "\n";
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

json envelope(json params, const RunConfig& cfg)
{
    json doc;
    doc["params"] = std::move(params);
    doc["results"] = nullptr;
    doc["residuals"] = nullptr;
    doc["bounds"] = nullptr;
    doc["identity_battery"] = nullptr;
    doc["c2_adjudication"] = nullptr;
    doc["config"] = {{"tol", cfg.tol}, {"max_terms", cfg.max_terms}, {"format", cfg.format_name}};
    doc["runtime_ms"] = nullptr;
    return doc;
}

std::string finish_json(json& doc, const RunConfig& cfg, double ms)
{
    if (cfg.timing) {
        doc["runtime_ms"] = ms;
    }
    return doc.dump(2) + "\n";
}

class Stopwatch {
public:
    double ms() const
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// ---------------------------------------------------------------- solve

Outcome cmd_solve(double D, double a, const RunConfig& cfg)
{
    const Problem p{D, a};
    p.validate();
    const Stopwatch sw;
    const SolveReport r = solve(p, cfg.trunc(), cfg.bessel());
    const double ms = sw.ms();

    Outcome o;
    if (!r.converged) {
        o.status = kExitNumeric;
        o.warning = "series or root iteration did not converge within max_terms = " +
                    std::to_string(cfg.max_terms) + "; values are not reliable";
    }
    const double diff = std::abs(r.C_numeric - r.closed.C);

    switch (cfg.format) {
    case Format::Json: {
        json doc = envelope({{"command", "solve"}, {"D", D}, {"a", a}}, cfg);
        doc["results"] = {
            {"C_numeric", num(r.C_numeric)},
            {"C_closed", num(r.closed.C)},
            {"C_abs_diff", num(diff)},
            {"C1_numeric", num(r.C1_numeric)},
            {"C1_closed", num(r.closed.C1)},
            {"C2_numeric", num(r.C2_numeric)},
            {"C2_paper", num(r.closed.C2_paper)},
            {"F", num(r.F)},
            {"F1", num(r.F1)},
            {"F2", num(r.F2)},
            {"terms_used", r.terms_used},
            {"iterations", r.iterations},
            {"bracket", {num(r.bracket[0]), num(r.bracket[1])}},
            {"converged", r.converged},
        };
        doc["residuals"] = {{"r1", num(r.residual.r1)},
                            {"r2", num(r.residual.r2)},
                            {"r3", num(r.residual.r3)}};
        doc["bounds"] = {{"lower", num(r.closed.lower_bound)},
                         {"upper", 1.0},
                         {"g", num(r.g)},
                         {"within", r.within_bound}};
        o.body = finish_json(doc, cfg, ms);
        break;
    }
    case Format::Csv:
        o.body = csv_row("D", "a", "C_numeric", "C_closed", "abs_diff", "lower_bound", "C1_numeric",
                         "C1_closed", "C2_numeric", "C2_paper", "F", "F1", "F2", "r1", "r2", "r3",
                         "terms_used", "converged") +
                 csv_row(csv_num(D), csv_num(a), csv_num(r.C_numeric), csv_num(r.closed.C),
                         csv_num(diff), csv_num(r.closed.lower_bound), csv_num(r.C1_numeric),
                         csv_num(r.closed.C1), csv_num(r.C2_numeric), csv_num(r.closed.C2_paper),
                         csv_num(r.F), csv_num(r.F1), csv_num(r.F2), csv_num(r.residual.r1),
                         csv_num(r.residual.r2), csv_num(r.residual.r3),
                         std::to_string(r.terms_used[0]), r.converged ? "true" : "false");
        break;
    case Format::Text: {
        std::ostringstream s;
        auto line = [&](const std::string& k, const std::string& v1, const std::string& v2 = "") {
            s << std::left << std::setw(16) << k << std::setw(26) << v1 << v2 << "\n";
        };
        s << "D = " << format_double(D) << ", a = " << format_double(a) << "\n\n";
        line("", "numeric", "closed form");
        line("C", format_double(r.C_numeric), format_double(r.closed.C));
        line("C1", format_double(r.C1_numeric), format_double(r.closed.C1));
        line("C2", format_double(r.C2_numeric), format_double(r.closed.C2_paper) + "  (as printed)");
        line("F", format_double(r.F), format_double(r.closed.F_at_root));
        line("F1", format_double(r.F1), format_double(r.closed.F1_at_root));
        line("F2", format_double(r.F2), format_double(r.closed.F2_at_root));
        s << "\n";
        line("|C - closed|", format_double(diff));
        line("residuals", format_double(r.residual.r1) + " " + format_double(r.residual.r2) + " " +
                              format_double(r.residual.r3));
        line("terms used", std::to_string(r.terms_used[0]));
        line("iterations", std::to_string(r.iterations));
        line("lower bound", format_double(r.closed.lower_bound),
             "within (lo, 1): " + yes_no(r.within_bound));
        line("converged", yes_no(r.converged));
        if (cfg.timing) {
            line("runtime ms", format_double(ms));
        }
        o.body = s.str();
        break;
    }
    }
    return o;
}

// ---------------------------------------------------------------- sweep

struct SweepRow {
    double D = NAN;
    double C_numeric = NAN;
    double C_closed = NAN;
    double diff = NAN;
    double lower = NAN;
    double C1 = NAN;
    double C2_numeric = NAN;
    double C2_paper = NAN;
    Residuals res{NAN, NAN, NAN};
    bool converged = false;
    std::string error;
};

SweepRow sweep_row(double D, double a, const RunConfig& cfg)
{
    SweepRow row;
    row.D = D;
    try {
        const SolveReport r = solve({D, a}, cfg.trunc(), cfg.bessel());
        row.C_numeric = r.C_numeric;
        row.C_closed = r.closed.C;
        row.diff = std::abs(r.C_numeric - r.closed.C);
        row.lower = r.closed.lower_bound;
        row.C1 = r.C1_numeric;
        row.C2_numeric = r.C2_numeric;
        row.C2_paper = r.closed.C2_paper;
        row.res = r.residual;
        row.converged = r.converged;
        if (!r.converged) {
            row.error = std::string(to_string(ErrorCode::MaxTermsExceeded)) +
                        ": not converged within max_terms";
        }
    } catch (const Error& e) {
        row.error = e.what();
    }
    return row;
}

std::vector<double> sweep_grid(double d_min, double d_max, int points, bool log_spacing)
{
    std::vector<double> ds(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        const double t = static_cast<double>(i) / (points - 1);
        ds[static_cast<std::size_t>(i)] =
            log_spacing ? std::exp(std::log(d_min) + t * (std::log(d_max) - std::log(d_min)))
                        : d_min + t * (d_max - d_min);
    }
    ds.front() = d_min;
    ds.back() = d_max;
    return ds;
}

Outcome cmd_sweep(double d_min, double d_max, int points, bool log_spacing, double a,
                  const RunConfig& cfg)
{
    if (!std::isfinite(d_min) || !std::isfinite(d_max) || !(d_min > 0.0) || !(d_min < d_max)) {
        throw UsageError("sweep needs 0 < d-min < d-max");
    }
    if (points < 2) {
        throw UsageError("sweep needs at least 2 points");
    }
    Problem{d_min, a}.validate();

    const Stopwatch sw;
    const std::vector<double> ds = sweep_grid(d_min, d_max, points, log_spacing);
    std::vector<SweepRow> rows(ds.size());
    {
        // Rows are independent; each lands in its own slot, so the output
        // order never depends on scheduling.
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < ds.size();) {
                rows[i] = sweep_row(ds[i], a, cfg);
            }
        };
        const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
        const auto n_threads = std::min<std::size_t>(hw, ds.size());
        std::vector<std::jthread> pool;
        for (std::size_t t = 1; t < n_threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }
    const double ms = sw.ms();

    Outcome o;
    const auto failed = std::count_if(rows.begin(), rows.end(),
                                      [](const SweepRow& r) { return !r.error.empty(); });
    if (failed > 0) {
        o.status = kExitNumeric;
        o.warning = std::to_string(failed) + " of " + std::to_string(rows.size()) +
                    " rows failed; see the error column";
    }

    switch (cfg.format) {
    case Format::Json: {
        json doc = envelope({{"command", "sweep"},
                             {"d_min", d_min},
                             {"d_max", d_max},
                             {"points", points},
                             {"log", log_spacing},
                             {"a", a}},
                            cfg);
        json arr = json::array();
        for (const SweepRow& r : rows) {
            arr.push_back({{"D", num(r.D)},
                           {"C_numeric", num(r.C_numeric)},
                           {"C_closed", num(r.C_closed)},
                           {"abs_diff", num(r.diff)},
                           {"lower_bound", num(r.lower)},
                           {"C1_numeric", num(r.C1)},
                           {"C2_numeric", num(r.C2_numeric)},
                           {"C2_paper", num(r.C2_paper)},
                           {"r1", num(r.res.r1)},
                           {"r2", num(r.res.r2)},
                           {"r3", num(r.res.r3)},
                           {"converged", r.converged},
                           {"error", r.error.empty() ? json(nullptr) : json(r.error)}});
        }
        doc["results"] = {{"rows", std::move(arr)}};
        o.body = finish_json(doc, cfg, ms);
        break;
    }
    case Format::Csv:
        o.body = csv_row("D", "C_numeric", "C_closed", "abs_diff", "lower_bound", "C1_numeric",
                         "C2_numeric", "C2_paper", "r1", "r2", "r3", "error");
        for (const SweepRow& r : rows) {
            o.body += csv_row(csv_num(r.D), csv_num(r.C_numeric), csv_num(r.C_closed),
                              csv_num(r.diff), csv_num(r.lower), csv_num(r.C1),
                              csv_num(r.C2_numeric), csv_num(r.C2_paper), csv_num(r.res.r1),
                              csv_num(r.res.r2), csv_num(r.res.r3), csv_field(r.error));
        }
        break;
    case Format::Text: {
        std::ostringstream s;
        s << std::left;
        for (const char* h : {"D", "C_numeric", "C_closed", "|diff|", "lower", "C1", "C2_numeric",
                              "C2_paper"}) {
            s << std::setw(24) << h;
        }
        s << "error\n";
        for (const SweepRow& r : rows) {
            for (double v : {r.D, r.C_numeric, r.C_closed, r.diff, r.lower, r.C1, r.C2_numeric,
                             r.C2_paper}) {
                s << std::setw(24) << format_double(v);
            }
            s << r.error << "\n";
        }
        if (cfg.timing) {
            s << "runtime ms: " << format_double(ms) << "\n";
        }
        o.body = s.str();
        break;
    }
    }
    return o;
}

// ---------------------------------------------------------------- verify

json check_json(const Check& c)
{
    return {{"id", c.id},
            {"criterion", c.criterion},
            {"description", c.description},
            {"passed", c.passed},
            {"measured", num(c.measured)},
            {"tolerance", num(c.tolerance)},
            {"diagnostic", c.diagnostic}};
}

Outcome cmd_verify(const RunConfig& cfg)
{
    VerifyConfig vc;
    vc.abs_tol = cfg.tol;
    vc.max_terms = cfg.max_terms;
    const Stopwatch sw;
    const VerifyReport rep = run_verification(vc);
    const double ms = sw.ms();

    Outcome o;
    o.status = rep.passed ? kExitOk : kExitCheckFailed;
    const C2Adjudication& c2 = rep.c2;

    switch (cfg.format) {
    case Format::Json: {
        json doc = envelope({{"command", "verify"}}, cfg);
        json checks = json::array();
        for (const Check& c : rep.checks) {
            checks.push_back(check_json(c));
        }
        doc["results"] = {{"passed", rep.passed}, {"checks", std::move(checks)}};
        doc["identity_battery"] = {{"points", rep.identity.points},
                                   {"max_err_S0", num(rep.identity.max_err_S0)},
                                   {"max_err_S1", num(rep.identity.max_err_S1)},
                                   {"max_err_S2", num(rep.identity.max_err_S2)}};
        doc["c2_adjudication"] = {
            {"D", c2.D},
            {"a", c2.a},
            {"numeric", num(c2.numeric)},
            {"paper_formula", num(c2.paper_formula)},
            {"derived_formula", num(c2.derived_formula)},
            {"closest", c2.closest},
            {"distances",
             {{"paper_formula", num(c2.distance_paper)},
              {"derived_formula", num(c2.distance_derived)}}},
            {"residual", num(c2.residual)},
        };
        o.body = finish_json(doc, cfg, ms);
        break;
    }
    case Format::Csv:
        o.body = csv_row("id", "criterion", "passed", "measured", "tolerance", "diagnostic");
        for (const Check& c : rep.checks) {
            o.body += csv_row(c.id, std::to_string(c.criterion), c.passed ? "true" : "false",
                              csv_num(c.measured), csv_num(c.tolerance), csv_field(c.diagnostic));
        }
        break;
    case Format::Text: {
        std::ostringstream s;
        for (const Check& c : rep.checks) {
            s << (c.passed ? "PASS " : "FAIL ") << std::left << std::setw(5)
              << ("[" + std::to_string(c.criterion) + "]") << std::setw(28) << c.id
              << "measured " << std::setw(24) << format_double(c.measured) << "tolerance "
              << format_double(c.tolerance);
            if (!c.diagnostic.empty()) {
                s << "  (" << c.diagnostic << ")";
            }
            s << "\n";
        }
        s << "\nidentity battery: " << rep.identity.points << " points, max errors "
          << format_double(rep.identity.max_err_S0) << " / "
          << format_double(rep.identity.max_err_S1) << " / "
          << format_double(rep.identity.max_err_S2) << "\n";
        s << "C2 at D = " << format_double(c2.D) << ", a = " << format_double(c2.a)
          << ": numeric " << format_double(c2.numeric) << ", printed formula "
          << format_double(c2.paper_formula) << " (distance " << format_double(c2.distance_paper)
          << "), derived formula " << format_double(c2.derived_formula) << " (distance "
          << format_double(c2.distance_derived) << "); closest: " << c2.closest << "\n";
        s << (rep.passed ? "all checks passed\n" : "some checks FAILED\n");
        if (cfg.timing) {
            s << "runtime ms: " << format_double(ms) << "\n";
        }
        o.body = s.str();
        break;
    }
    }
    return o;
}

// ---------------------------------------------------------------- identity

Outcome cmd_identity(double eps, int e_points, const RunConfig& cfg)
{
    if (!std::isfinite(eps) || !(eps > 0.0 && eps < 1.0)) {
        throw UsageError("--eps must lie in the open interval (0, 1)");
    }
    if (e_points < 1) {
        throw UsageError("--e-points must be at least 1");
    }
    const Stopwatch sw;
    const std::vector<IdentityRow> rows = identity_table(eps, e_points, cfg.trunc(), cfg.bessel());
    const double ms = sw.ms();

    Outcome o;
    double m0 = 0, m1 = 0, m2 = 0;
    bool converged = true;
    for (const IdentityRow& r : rows) {
        m0 = std::max(m0, r.err0);
        m1 = std::max(m1, r.err1);
        m2 = std::max(m2, r.err2);
        converged = converged && r.converged;
    }
    if (!converged) {
        o.status = kExitNumeric;
        o.warning = "trigonometric sums did not converge within max_terms = " +
                    std::to_string(cfg.max_terms);
    }

    switch (cfg.format) {
    case Format::Json: {
        json doc = envelope({{"command", "identity"}, {"eps", eps}, {"e_points", e_points}}, cfg);
        json arr = json::array();
        for (const IdentityRow& r : rows) {
            arr.push_back({{"E", num(r.E)},   {"M", num(r.M)},       {"S0", num(r.S0)},
                           {"R0", num(r.R0)}, {"err0", num(r.err0)}, {"S1", num(r.S1)},
                           {"R1", num(r.R1)}, {"err1", num(r.err1)}, {"S2", num(r.S2)},
                           {"R2", num(r.R2)}, {"err2", num(r.err2)}, {"converged", r.converged}});
        }
        doc["results"] = {{"rows", std::move(arr)}};
        doc["identity_battery"] = {{"points", static_cast<int>(rows.size())},
                                   {"max_err_S0", num(m0)},
                                   {"max_err_S1", num(m1)},
                                   {"max_err_S2", num(m2)}};
        o.body = finish_json(doc, cfg, ms);
        break;
    }
    case Format::Csv:
        o.body = csv_row("E", "M", "S0", "R0", "err0", "S1", "R1", "err1", "S2", "R2", "err2");
        for (const IdentityRow& r : rows) {
            o.body += csv_row(csv_num(r.E), csv_num(r.M), csv_num(r.S0), csv_num(r.R0),
                              csv_num(r.err0), csv_num(r.S1), csv_num(r.R1), csv_num(r.err1),
                              csv_num(r.S2), csv_num(r.R2), csv_num(r.err2));
        }
        break;
    case Format::Text: {
        std::ostringstream s;
        s << std::left;
        for (const char* h : {"E", "M", "S0", "|S0-R0|", "S1", "|S1-R1|", "S2", "|S2-R2|"}) {
            s << std::setw(24) << h;
        }
        s << "\n";
        for (const IdentityRow& r : rows) {
            for (double v : {r.E, r.M, r.S0, r.err0, r.S1, r.err1, r.S2, r.err2}) {
                s << std::setw(24) << format_double(v);
            }
            s << "\n";
        }
        s << "max errors: " << format_double(m0) << " / " << format_double(m1) << " / "
          << format_double(m2) << "\n";
        if (cfg.timing) {
            s << "runtime ms: " << format_double(ms) << "\n";
        }
        o.body = s.str();
        break;
    }
    }
    return o;
}

// ---------------------------------------------------------------- plumbing

void add_common(CLI::App* sub, RunConfig& cfg, std::optional<long>& max_terms)
{
    sub->add_option("--tol", cfg.tol, "absolute truncation tolerance of the series")
        ->capture_default_str();
    sub->add_option("--max-terms", max_terms,
                    "maximum number of series terms (default 200000, or KAPTEYN_MAX_TERMS)");
    sub->add_option("--format", cfg.format_name, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out_path, "write the report to this file instead of stdout");
    sub->add_flag("--timing", cfg.timing, "include wall-clock time in the report");
}

long parse_env_max_terms(const char* text)
{
    long value = 0;
    const char* end = text + std::char_traits<char>::length(text);
    const auto [ptr, ec] = std::from_chars(text, end, value);
    if (ec != std::errc() || ptr != end) {
        throw UsageError(std::string("KAPTEYN_MAX_TERMS is not an integer: '") + text + "'");
    }
    return value;
}

void finalize(RunConfig& cfg, const std::optional<long>& max_terms)
{
    if (max_terms) {
        cfg.max_terms = *max_terms;
    } else if (const char* env = std::getenv("KAPTEYN_MAX_TERMS"); env != nullptr && *env) {
        cfg.max_terms = parse_env_max_terms(env);
    }
    if (!std::isfinite(cfg.tol) || !(cfg.tol > 0.0)) {
        throw UsageError("--tol must be positive");
    }
    if (cfg.max_terms < 10 || cfg.max_terms > INT_MAX) {
        throw UsageError("--max-terms must lie in [10, " + std::to_string(INT_MAX) + "]");
    }
    cfg.format = cfg.format_name == "json" ? Format::Json
                 : cfg.format_name == "csv" ? Format::Csv
                                            : Format::Text;
}

} // namespace

std::string format_double(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Kapteyn series and the constants C, C1, C2 of the associated transcendental "
                 "equations"};
    app.name("kapteyn");
    app.require_subcommand(1);

    RunConfig cfg;
    std::optional<long> max_terms;
    double D = NAN, a = 1.0;
    double d_min = 0.1, d_max = 100.0;
    int points = 31;
    bool log_spacing = false;
    double eps = NAN;
    int e_points = 25;

    CLI::App* solve_cmd = app.add_subcommand("solve", "solve for C, C1, C2 at one D");
    solve_cmd->add_option("--d", D, "model parameter D > 0")->required();
    solve_cmd->add_option("--a", a, "scale parameter a > 0")->capture_default_str();
    add_common(solve_cmd, cfg, max_terms);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "solve over a range of D");
    sweep_cmd->add_option("--d-min", d_min, "smallest D")->capture_default_str();
    sweep_cmd->add_option("--d-max", d_max, "largest D")->capture_default_str();
    sweep_cmd->add_option("--points", points, "number of D values")->capture_default_str();
    sweep_cmd->add_flag("--log", log_spacing, "space D logarithmically");
    sweep_cmd->add_option("--a", a, "scale parameter a > 0")->capture_default_str();
    add_common(sweep_cmd, cfg, max_terms);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the verification battery");
    add_common(verify_cmd, cfg, max_terms);

    CLI::App* identity_cmd =
        app.add_subcommand("identity", "compare trigonometric sums with Kepler-orbit identities");
    identity_cmd->add_option("--eps", eps, "eccentricity in (0, 1)")->required();
    identity_cmd->add_option("--e-points", e_points, "number of eccentric anomalies")
        ->capture_default_str();
    add_common(identity_cmd, cfg, max_terms);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e, out, err);
        }
        err << "kapteyn: " << e.what() << "\n";
        return kExitUsage;
    }

    Outcome outcome;
    try {
        finalize(cfg, max_terms);
        if (solve_cmd->parsed()) {
            outcome = cmd_solve(D, a, cfg);
        } else if (sweep_cmd->parsed()) {
            outcome = cmd_sweep(d_min, d_max, points, log_spacing, a, cfg);
        } else if (verify_cmd->parsed()) {
            outcome = cmd_verify(cfg);
        } else {
            outcome = cmd_identity(eps, e_points, cfg);
        }
    } catch (const UsageError& e) {
        err << "kapteyn: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "kapteyn: " << e.what() << "\n";
        return is_usage(e.code()) ? kExitUsage : kExitNumeric;
    }

    if (cfg.out_path.empty()) {
        out << outcome.body;
        out.flush();
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!(file << outcome.body) || !file.flush()) {
            err << "kapteyn: cannot write " << cfg.out_path << "\n";
            return kExitUsage;
        }
    }
    if (!outcome.warning.empty()) {
        err << "kapteyn: " << outcome.warning << "\n";
    }
    return outcome.status;
}

} // namespace kapteyn::cli
