#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgk/bounds.hpp"
#include "qgk/corpus.hpp"
#include "qgk/errors.hpp"
#include "qgk/report_io.hpp"
#include "qgk/specfun.hpp"

namespace qgk::cli {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string g17(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int parse_int(std::string_view s, std::string_view what)
{
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw UsageError(std::string(what) + ": expected an integer, got '" + std::string(s) + "'");
    }
    return v;
}

double parse_real(std::string_view s, std::string_view what)
{
    const std::string str(s);
    char* end = nullptr;
    const double v = std::strtod(str.c_str(), &end);
    if (str.empty() || end != str.c_str() + str.size()) {
        throw UsageError(std::string(what) + ": expected a number, got '" + str + "'");
    }
    return v;
}

// ---- eval -----------------------------------------------------------------

struct EvalArgs {
    std::string fn;
    double x = 0.0;
    double y = 0.0;
    double q = 1.0;
    double eps = 1e-16;
    bool json = false;
    CLI::Option* x_opt = nullptr;
    CLI::Option* y_opt = nullptr;
    CLI::Option* q_opt = nullptr;
};

Enclosure rounded(double v) { return {v, 4 * 2.220446049250313e-16 * std::abs(v), 0, false}; }

Enclosure evaluate(const EvalArgs& a)
{
    const auto colon = a.fn.find(':');
    const std::string name = a.fn.substr(0, colon);
    const std::string arg = colon == std::string::npos ? std::string() : a.fn.substr(colon + 1);
    const bool has_arg = colon != std::string::npos;
    const bool wants_arg = name == "polygamma" || name == "qpolygamma" || name == "logmean" || name == "ball";
    if (wants_arg != has_arg || (has_arg && arg.empty())) {
        throw UsageError("--fn " + a.fn + ": " + (wants_arg ? "missing ':<arg>'" : "takes no ':<arg>'"));
    }
    if (name == "ball") {
        return specfun::unit_ball_volume(parse_int(arg, "ball"));
    }
    if (!*a.x_opt) {
        throw UsageError("--fn " + name + " needs --x");
    }
    const bool q_fn = name == "qgamma" || name == "qdigamma" || name == "qpolygamma";
    if (q_fn && !*a.q_opt) {
        throw UsageError("--fn " + name + " needs --q");
    }
    if (!q_fn && *a.q_opt) {
        throw UsageError("--fn " + name + " does not take --q");
    }
    TruncationPolicy policy;
    policy.eps = a.eps;
    policy.validate();
    const double x = a.x;
    if (name == "gamma") {
        return specfun::gamma(x, policy);
    }
    if (name == "lngamma") {
        return specfun::ln_gamma(x, policy);
    }
    if (name == "digamma") {
        return specfun::digamma(x, policy);
    }
    if (name == "polygamma") {
        const int n = parse_int(arg, "polygamma");
        return n == 0 ? specfun::digamma(x, policy) : specfun::polygamma(n, x, policy);
    }
    if (name == "qgamma") {
        return a.q == 1.0 ? specfun::gamma(x, policy) : specfun::q_gamma(x, QParam(a.q), policy);
    }
    if (name == "qdigamma") {
        return specfun::psi_q(0, x, a.q, policy);
    }
    if (name == "qpolygamma") {
        return specfun::psi_q(parse_int(arg, "qpolygamma"), x, a.q, policy);
    }
    if (name == "logmean") {
        if (!*a.y_opt) {
            throw UsageError("--fn logmean needs --y");
        }
        return rounded(specfun::log_mean({parse_real(arg, "logmean")}, x, a.y));
    }
    if (name == "kernel") {
        return rounded(specfun::kernel_h(x));
    }
    throw UsageError("unknown function '" + name + "'");
}

int cmd_eval(const EvalArgs& a, std::ostream& out)
{
    const Enclosure e = evaluate(a);
    if (a.json) {
        nlohmann::json j;
        j["fn"] = a.fn;
        j["value"] = e.value;
        j["abs_error"] = e.abs_error;
        j["terms_used"] = e.terms_used;
        out << j.dump() << '\n';
    } else {
        out << "value     " << g17(e.value) << '\n' << "abs_error " << g17(e.abs_error) << '\n';
    }
    return exit_ok;
}

// ---- bounds ---------------------------------------------------------------

struct Row {
    std::string label;
    double lower;
    double exact;
    double upper;
};

struct BoundsArgs {
    double x = 1.0;
    double s = 0.5;
    double q = 1.0;
    std::string method;
    int n_max = 1;
    double a = 1.0;
    double b = 2.0;
    bool csv = false;
};

bool bracket_holds(const Row& r)
{
    const double tol = cm::default_tolerance;
    return r.lower - r.exact <= cm::tolerance_scale(tol, r.lower, r.exact) &&
           r.exact - r.upper <= cm::tolerance_scale(tol, r.exact, r.upper);
}

int print_rows(const std::vector<Row>& rows, bool csv, std::ostream& out, std::ostream& err)
{
    if (csv) {
        out << "row,lower,exact,upper\n";
    } else {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-14s %-24s %-24s %-24s\n", "row", "lower", "exact", "upper");
        out << buf;
    }
    bool ok = true;
    for (const auto& r : rows) {
        if (csv) {
            out << r.label << ',' << g17(r.lower) << ',' << g17(r.exact) << ',' << g17(r.upper) << '\n';
        } else {
            char buf[160];
            std::snprintf(buf, sizeof buf, "%-14s %-24.17g %-24.17g %-24.17g\n", r.label.c_str(), r.lower, r.exact,
                          r.upper);
            out << buf;
        }
        if (!bracket_holds(r)) {
            err << "bracket violated at " << r.label << '\n';
            ok = false;
        }
    }
    return ok ? exit_ok : exit_failure;
}

std::vector<Row> ratio_rows(const BoundsArgs& a)
{
    const auto method = bounds::parse_method(a.method);
    if (!bounds::method_accepts(method, a.q)) {
        throw UsageError("method " + std::string(bounds::to_string(method)) + " does not accept q = " + g17(a.q));
    }
    const auto b = bounds::ratio_bounds(a.x, a.s, a.q, method);
    const double exact = std::exp(bounds::ln_gamma_ratio(a.x, a.s, a.q).value);
    return {{"ratio", b.lower, exact, b.upper}};
}

std::vector<Row> ball_rows(const BoundsArgs& a)
{
    if (a.n_max < 1) {
        throw UsageError("--n-max must be at least 1");
    }
    std::vector<Row> rows;
    for (int n = 1; n <= a.n_max; ++n) {
        const auto b = bounds::ball_ratio_bounds(n);
        rows.push_back({"thm51 n=" + std::to_string(n), b.thm51.lower, b.thm51_exact, b.thm51.upper});
        if (b.eq13 && b.eq13_exact) {
            rows.push_back({"eq13 n=" + std::to_string(n), b.eq13->lower, *b.eq13_exact, b.eq13->upper});
        }
    }
    return rows;
}

std::vector<Row> kv_rows(const BoundsArgs& a)
{
    const auto b = bounds::keckic_vasic_bounds(a.a, a.b);
    const double exact = std::exp(specfun::ln_gamma(a.b).value - specfun::ln_gamma(a.a).value);
    return {{"kv", b.lower, exact, b.upper}};
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string suite = "all";
    int grid_points = 0;
    int max_order = 0;
    double tol = cm::default_tolerance;
    std::string out;
    std::string format = "json";
    int jobs = 1;
    CLI::Option* grid_opt = nullptr;
    CLI::Option* order_opt = nullptr;
    CLI::Option* jobs_opt = nullptr;
};

std::vector<std::string> suite_ids(const std::string& suite)
{
    std::vector<std::string> ids;
    if (suite == "all") {
        for (const auto& d : corpus::list_properties()) {
            ids.push_back(d.id);
        }
        return ids;
    }
    if (suite.empty() || suite.back() == ',') {
        throw UsageError("--suite: empty id");
    }
    std::stringstream ss(suite);
    std::string id;
    while (std::getline(ss, id, ',')) {
        if (id.empty()) {
            throw UsageError("--suite: empty id");
        }
        corpus::find_property(id); // unknown ids fail before any work starts
        ids.push_back(id);
    }
    if (ids.empty()) {
        throw UsageError("--suite: no ids given");
    }
    return ids;
}

int jobs_setting(const VerifyArgs& a)
{
    if (*a.jobs_opt) {
        return a.jobs;
    }
    const char* env = std::getenv("QGK_JOBS");
    if (env == nullptr || *env == '\0') {
        return 1;
    }
    const int j = parse_int(env, "QGK_JOBS");
    if (j < 1) {
        throw UsageError("QGK_JOBS must be a positive integer");
    }
    return j;
}

// Everything that can change the report, and nothing else (jobs is excluded).
std::string canonical_config(const VerifyArgs& a, const std::vector<std::string>& ids)
{
    std::string s = "suite=";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        s += (i ? "," : "") + ids[i];
    }
    s += ";grid_points=" + (*a.grid_opt ? std::to_string(a.grid_points) : std::string("default"));
    s += ";max_order=" + (*a.order_opt ? std::to_string(a.max_order) : std::string("default"));
    s += ";tol=" + report::format_double(a.tol);
    return s;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    f << text;
    f.close();
    if (!f) {
        throw IoError("write to '" + path + "' failed");
    }
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err)
{
    if (!(a.tol > 0.0 && std::isfinite(a.tol))) {
        throw UsageError("--tol must be positive");
    }
    const auto ids = suite_ids(a.suite);
    corpus::BuildOptions build;
    if (*a.grid_opt) {
        build.grid_points = a.grid_points;
    }
    if (*a.order_opt) {
        build.max_order = a.max_order;
    }
    const corpus::RunOptions run{a.tol, jobs_setting(a)};

    std::vector<report::Entry> entries;
    for (const auto& id : ids) {
        const auto inst = corpus::instantiate(id, {}, build);
        entries.push_back({corpus::run(inst, run), inst.expected});
    }
    const auto doc = report::make_document(a.suite, report::config_digest(canonical_config(a, ids)), entries);
    const std::string text = a.format == "csv" ? report::to_csv(doc) : report::to_json(doc);
    const auto unexpected = report::unexpected_outcomes(doc);

    std::ostream& log = a.out.empty() ? err : out;
    if (a.out.empty()) {
        out << text;
    } else {
        write_file(a.out, text);
    }
    for (const auto& e : doc.entries) {
        if (!corpus::as_expected(e.report.status, e.expected)) {
            log << "unexpected: " << e.report.claim_id << " status " << cm::to_string(e.report.status) << ", expected "
                << corpus::to_string(e.expected) << '\n';
        }
    }
    log << "pass " << doc.summary.pass << ", fail " << doc.summary.fail << ", inconclusive "
        << doc.summary.inconclusive << ", unexpected " << unexpected << '\n';
    return unexpected == 0 ? exit_ok : exit_failure;
}

// ---- roots ----------------------------------------------------------------

struct RootsArgs {
    int m = 0;
    int n = 0;
    double c = 0.0;
};

int cmd_roots(const RootsArgs& a, std::ostream& out)
{
    if (!(a.m > a.n && a.n >= 1)) {
        throw UsageError("roots: requires m > n >= 1");
    }
    if (!(a.c > 0.0 && a.c < 1.0)) {
        throw UsageError("roots: requires 0 < c < 1");
    }
    const double root = bounds::a_poly_root(a.m, a.n, a.c);
    const double hi = 2.0 * root;
    const int points = 2001;
    const int changes = bounds::a_poly_sign_changes(a.m, a.n, a.c, 1.0, hi, points);
    out << "root         " << g17(root) << '\n';
    out << "sign_changes " << changes << " (" << points << " nodes on [1, " << g17(hi) << "])\n";
    return exit_ok;
}

int cmd_list(std::ostream& out)
{
    for (const auto& d : corpus::list_properties()) {
        out << corpus::manifest_line(d) << '\n';
    }
    return exit_ok;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Gamma, q-gamma and polygamma evaluation with a verification suite for their inequalities", "qgk"};
    app.require_subcommand(1);

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "Evaluate one function with its error bound");
    eval->add_option("--fn", ev.fn,
                     "gamma|lngamma|digamma|polygamma:<n>|qgamma|qdigamma|qpolygamma:<n>|logmean:<r>|ball:<n>|kernel")
        ->required();
    ev.x_opt = eval->add_option("--x", ev.x, "Argument");
    ev.y_opt = eval->add_option("--y", ev.y, "Second argument of logmean");
    ev.q_opt = eval->add_option("--q", ev.q, "Deformation parameter, q > 0");
    eval->add_option("--eps", ev.eps, "Series stopping tolerance");
    eval->add_flag("--json", ev.json, "Print a JSON object");

    BoundsArgs bd;
    auto* bnd = app.add_subcommand("bounds", "Print lower, exact and upper values of a bound");
    bnd->require_subcommand(1);
    auto* ratio = bnd->add_subcommand("ratio", "Bounds on Gamma_q(x+1)/Gamma_q(x+s)");
    ratio->add_option("--x", bd.x)->required();
    ratio->add_option("--s", bd.s)->required();
    ratio->add_option("--q", bd.q)->required();
    ratio->add_option("--method", bd.method)->required();
    ratio->add_flag("--csv", bd.csv);
    auto* ball = bnd->add_subcommand("ball", "Unit-ball volume ratio brackets for n = 1..n_max");
    ball->add_option("--n-max", bd.n_max)->required();
    ball->add_flag("--csv", bd.csv);
    auto* kv = bnd->add_subcommand("kv", "Bounds on Gamma(b)/Gamma(a), b > a > 0");
    kv->add_option("--a", bd.a)->required();
    kv->add_option("--b", bd.b)->required();
    kv->add_flag("--csv", bd.csv);

    VerifyArgs vf;
    auto* verify = app.add_subcommand("verify", "Run corpus entries and write a report");
    verify->add_option("--suite", vf.suite, "all, or comma-separated ids");
    vf.grid_opt = verify->add_option("--grid-points", vf.grid_points)->check(CLI::PositiveNumber);
    vf.order_opt = verify->add_option("--max-order", vf.max_order)->check(CLI::NonNegativeNumber);
    verify->add_option("--tol", vf.tol);
    verify->add_option("--out", vf.out, "Report path; stdout when absent");
    verify->add_option("--format", vf.format)->check(CLI::IsMember({"json", "csv"}));
    vf.jobs_opt = verify->add_option("--jobs", vf.jobs, "Worker threads (default QGK_JOBS or 1)")
                      ->check(CLI::PositiveNumber);

    RootsArgs rt;
    auto* roots = app.add_subcommand("roots", "Root of t^(m-n) + t^n - c(1 + t^m) on t >= 1");
    roots->add_option("--m", rt.m)->required();
    roots->add_option("--n", rt.n)->required();
    roots->add_option("--c", rt.c)->required();

    auto* list = app.add_subcommand("list", "Print the corpus manifest");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*eval) {
            return cmd_eval(ev, out);
        }
        if (*ratio) {
            return print_rows(ratio_rows(bd), bd.csv, out, err);
        }
        if (*ball) {
            return print_rows(ball_rows(bd), bd.csv, out, err);
        }
        if (*kv) {
            return print_rows(kv_rows(bd), bd.csv, out, err);
        }
        if (*verify) {
            return cmd_verify(vf, out, err);
        }
        if (*roots) {
            return cmd_roots(rt, out);
        }
        if (*list) {
            return cmd_list(out);
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return exit_domain;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return exit_io;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}

} // namespace qgk::cli
