// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "qgk/cm_engine.hpp"
#include "qgk/report_io.hpp"
#include "qgk/specfun.hpp"

namespace fs = std::filesystem;
namespace sf = qgk::specfun;
using qgk::QParam;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

char buf[512];

template <class... A>
std::string format(const char* f, A... a)
{
    std::snprintf(buf, sizeof buf, f, a...);
    return buf;
}

int failures = 0;

void criterion(int n, const char* title, double budget_s, const std::function<Outcome()>& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget_s) {
        o.ok = false;
        o.detail += format(" [over the %.0f s budget]", budget_s);
    }
    failures += o.ok ? 0 : 1;
    std::printf("criterion %d %s: %s (%s; %.2f s)\n", n, o.ok ? "PASS" : "FAIL", title, o.detail.c_str(), secs);
    std::fflush(stdout);
}

Outcome golden()
{
    const double pi = std::numbers::pi;
    const double zeta3 = 1.2020569031595942854;
    struct Item {
        const char* name;
        double got;
        double want;
        double tol;
    } items[] = {
        {"psi'(1)", sf::polygamma(1, 1.0).value, pi * pi / 6, 1e-12},
        {"psi''(1)", sf::polygamma(2, 1.0).value, -2 * zeta3, 1e-11},
        {"lnGamma(5)", sf::ln_gamma(5.0).value, std::log(24.0), 1e-13},
        {"Omega_2", sf::unit_ball_volume(2).value, pi, 1e-13},
        {"Omega_3", sf::unit_ball_volume(3).value, 4 * pi / 3, 1e-13},
    };
    Outcome o;
    for (const auto& it : items) {
        const double err = std::abs(it.got - it.want);
        o.ok = o.ok && err <= it.tol;
        o.detail += format("%s%s err %.1e", o.detail.empty() ? "" : ", ", it.name, err);
    }
    return o;
}

Outcome functional_equations()
{
    double worst_q = 0.0;
    int count = 0;
    for (int i = 1; i <= 9; ++i) {
        const double q = 0.1 * i;
        for (int j = 0; j < 190; ++j) {
            const double x = 0.1 + (20.0 - 0.1) * j / 189.0;
            const double lhs = sf::q_gamma(x + 1.0, QParam(q)).value;
            const double rhs = -std::expm1(x * std::log(q)) / (1.0 - q) * sf::q_gamma(x, QParam(q)).value;
            worst_q = std::max(worst_q, std::abs(lhs - rhs) / std::abs(rhs));
            ++count;
        }
    }
    double worst_psi = 0.0;
    for (int n = 0; n <= 6; ++n) {
        double fact = 1.0;
        for (int k = 2; k <= n; ++k) {
            fact *= k;
        }
        for (int j = 1; j <= 100; ++j) {
            const double x = 0.1 * j;
            const double d = sf::psi_q(n, x + 1.0, 1.0).value - sf::psi_q(n, x, 1.0).value;
            const double want = (n % 2 == 0 ? 1.0 : -1.0) * fact / std::pow(x, n + 1);
            worst_psi = std::max(worst_psi, std::abs(d - want) / std::abs(want));
        }
    }
    return {worst_q <= 1e-12 && worst_psi <= 1e-11,
            format("%d Gamma_q residuals, worst %.1e; recurrence n <= 6 on (0, 10], worst %.1e", count, worst_q,
                   worst_psi)};
}

Outcome limits()
{
    const QParam q(0.9999);
    double worst_g = 0.0;
    double worst_p = 0.0;
    for (int j = 0; j < 20; ++j) {
        const double x = 0.5 + 4.5 * j / 19.0;
        const double g = sf::gamma(x).value;
        worst_g = std::max(worst_g, std::abs(sf::q_gamma(x, q).value - g) / g);
        worst_p = std::max(worst_p, std::abs(sf::q_digamma(x, q).value - sf::digamma(x).value));
    }
    return {worst_g <= 1e-3 && worst_p <= 1e-3,
            format("q = 0.9999, 20 points on [0.5, 5]: Gamma rel %.1e, psi abs %.1e", worst_g, worst_p)};
}

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int verify_all(int jobs, const fs::path& out)
{
    std::ostringstream o;
    std::ostringstream e;
    const int code = qgk::cli::run({"verify", "--suite", "all", "--jobs", std::to_string(jobs), "--out", out.string()},
                                   o, e);
    if (code != 0) {
        std::fputs(o.str().c_str(), stdout);
        std::fputs(e.str().c_str(), stdout);
    }
    return code;
}

const fs::path report_1 = fs::temp_directory_path() / "qgk_acceptance_jobs1.json";
const fs::path report_8 = fs::temp_directory_path() / "qgk_acceptance_jobs8.json";

Outcome full_suite()
{
    const int code = verify_all(1, report_1);
    const auto doc = qgk::report::from_json(slurp(report_1));
    const auto unexpected = qgk::report::unexpected_outcomes(doc);
    std::int64_t points = 0;
    for (const auto& en : doc.entries) {
        points += en.report.points_checked;
    }
    return {code == 0 && unexpected == 0,
            format("%zu entries, %lld points; pass %lld, fail %lld, inconclusive %lld; unexpected %lld",
                   doc.entries.size(), static_cast<long long>(points), static_cast<long long>(doc.summary.pass),
                   static_cast<long long>(doc.summary.fail), static_cast<long long>(doc.summary.inconclusive),
                   static_cast<long long>(unexpected))};
}

Outcome sharpness()
{
    const auto doc = qgk::report::from_json(slurp(report_1));
    Outcome o;
    for (const char* id : {"eq14-sharp-u", "eq14-sharp-v", "lem-thm11-onlyif", "gc-onlyif"}) {
        std::size_t found = 0;
        bool in_range = true;
        for (const auto& en : doc.entries) {
            if (en.report.claim_id != id) {
                continue;
            }
            found = en.report.violations.size();
            for (const auto& v : en.report.violations) {
                if (std::string(id).rfind("eq14", 0) == 0) {
                    in_range = in_range && v.point > 0.0 && v.point <= 0.5 && v.params.at("q") == 0.5 &&
                               v.params.at("s") == 0.5;
                } else if (std::string(id) == "lem-thm11-onlyif") {
                    in_range = in_range && v.point > 0.0 && v.point <= 50.0;
                }
            }
        }
        o.ok = o.ok && found >= 1 && in_range;
        o.detail += format("%s%s %zu violations", o.detail.empty() ? "" : ", ", id, found);
    }
    return o;
}

Outcome cross_path()
{
    int disagreements = 0;
    double worst_ratio = 0.0;
    for (int i = 1; i <= 100; ++i) {
        const double x = 0.5 + 49.5 * i / 100.0;
        for (int n = 0; n <= 4; ++n) {
            const auto rec = n == 0 ? sf::digamma(x) : sf::polygamma(n, x);
            const auto ser = n == 0 ? sf::digamma_series(x) : sf::polygamma_series(n, x);
            const double gap = std::abs(rec.value - ser.value);
            const double cert = rec.abs_error + ser.abs_error;
            worst_ratio = std::max(worst_ratio, gap / cert);
            disagreements += gap <= cert ? 0 : 1;
        }
    }
    return {disagreements == 0,
            format("500 comparisons on (0.5, 50], %d outside the summed certificates, worst gap/cert %.2f",
                   disagreements, worst_ratio)};
}

Outcome determinism()
{
    const int code = verify_all(8, report_8);
    const bool same = slurp(report_1) == slurp(report_8);
    return {code == 0 && same, same ? "jobs 1 and jobs 8 reports are byte-identical" : "reports differ"};
}

Outcome negative_control()
{
    qgk::cm::Target t;
    t.name = "sin(x)+2";
    t.scalar = [](double x) { return std::sin(x) + 2.0; };
    const auto r = qgk::cm::check_sign_pattern(t, 8, qgk::cm::GridSpec::logarithmic(1e-2, 100.0, 64),
                                               qgk::cm::ClaimKind::completely_monotonic);
    return {r.status == qgk::cm::Status::fail,
            format("status %s, %zu violations", std::string(qgk::cm::to_string(r.status)).c_str(), r.violations.size())};
}

} // namespace

int main()
{
    criterion(1, "golden values", 1.0, golden);
    criterion(2, "functional-equation residuals", 5.0, functional_equations);
    criterion(3, "q -> 1 limit consistency", 10.0, limits);
    criterion(4, "full corpus suite", 300.0, full_suite);
    criterion(5, "sharpness and only-if checks record violations", 5.0, sharpness);
    criterion(6, "series vs recurrence cross-path agreement", 5.0, cross_path);
    criterion(7, "determinism across job counts", 300.0, determinism);
    criterion(8, "negative control", 5.0, negative_control);
    fs::remove(report_1);
    fs::remove(report_8);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
