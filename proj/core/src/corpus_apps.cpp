// Consequences of the difference lemma, the Stirling-remainder families,
// unit-ball volumes and the auxiliary lemmas.

#include <cmath>
#include <numbers>

#include "corpus_util.hpp"
#include "qgk/bounds.hpp"
#include "qgk/specfun.hpp"

namespace qgk::corpus {

namespace {

using namespace detail;

const std::vector<double> q_sub_one{0.3, 0.5, 0.7, 0.9};

Jet classical_lg(double y, int order) { return ln_gamma_jet(y, 1.0, order); }

// ---- g13 ----------------------------------------------------------------

// ln f1: -1/2 ln(1 - 1/(2x+1/2)) + 2 ln Gamma(x+1/2) - ln Gamma(x) - ln Gamma(x+1).
Jet cor4_f1(double x, int order)
{
    return (log_jet(x - 0.25, order) - log_jet(x + 0.25, order)) * -0.5 + classical_lg(x + 0.5, order) * 2.0 -
           classical_lg(x, order) - classical_lg(x + 1.0, order);
}

// ln f2: -1/2 ln(1 + 1/(2x)) + ln Gamma(x) + ln Gamma(x+1) - 2 ln Gamma(x+1/2).
Jet cor4_f2(double x, int order)
{
    return (log_jet(x + 0.5, order) - log_jet(x, order)) * -0.5 + classical_lg(x, order) +
           classical_lg(x + 1.0, order) - classical_lg(x + 0.5, order) * 2.0;
}

// ln of (1 - 1/(2x))^{-1/2} Gamma(x+1/2)^2/(Gamma(x) Gamma(x+1)).
Jet cor4_orig_jet(double x, int order)
{
    return (log_jet(x - 0.5, order) - log_jet(x, order)) * -0.5 + classical_lg(x + 0.5, order) * 2.0 -
           classical_lg(x, order) - classical_lg(x + 1.0, order);
}

PropertyDescriptor cor4_lcm()
{
    auto d = descriptor("cor4-lcm", "g13", ClaimKind::log_completely_monotonic,
                        "(1 - 1/(2x+1/2))^(-1/2) Gamma(x+1/2)^2/(Gamma(x) Gamma(x+1)) is logarithmically completely "
                        "monotonic on (1/4, inf), and (1 + 1/(2x))^(-1/2) Gamma(x) Gamma(x+1)/Gamma(x+1/2)^2 on "
                        "(0, inf)",
                        "The first function is checked above 1/4, the second above 0.");
    d.domains = {{"x_offset", positive()}};
    d.grid_variable = "x_offset";
    d.default_order = 8;
    d.build = [](const ParamValues&, const BuildOptions& o) {
        Instance inst;
        const int K = order_or(8, o);
        inst.cases.push_back(sign_case(make_target("cor4 f1", cor4_f1, 0.25, Target::Form::log), K,
                                       with_points(shifted_log_grid(0.25), o), ClaimKind::log_completely_monotonic,
                                       {{"variant", 1}}));
        inst.cases.push_back(sign_case(make_target("cor4 f2", cor4_f2, 0.0, Target::Form::log), K,
                                       with_points(default_log_grid(), o), ClaimKind::log_completely_monotonic,
                                       {{"variant", 2}}));
        return inst;
    };
    return d;
}

PropertyDescriptor cor4_orig()
{
    auto d = descriptor("cor4-orig-cm", "g13", ClaimKind::completely_monotonic,
                        "(1 - 1/(2x))^(-1/2) Gamma(x+1/2)^2/(Gamma(x) Gamma(x+1)) is completely monotonic on "
                        "(1/2, inf)",
                        "Registered next to cor4-lcm since the two variants differ in prefactor and interval.");
    d.domains = {{"x_offset", positive()}};
    d.grid_variable = "x_offset";
    d.default_order = 8;
    d.build = family_builder([](const ParamMap&) { return make_target("cor4 original", cor4_orig_jet, 0.5, Target::Form::log); },
                             family_spec(ClaimKind::completely_monotonic, 8, false, {},
                              [](const ParamMap&) { return shifted_log_grid(0.5); }));
    return d;
}

// ---- g14 ----------------------------------------------------------------

// ln(x^alpha Gamma(x) (e/x)^x)
Jet ln_ilm(double x, double alpha, int order)
{
    const Jet X = Jet::variable(x, order);
    const Jet L = log_jet(x, order);
    return L * alpha + classical_lg(x, order) + X - X * L;
}

PropertyDescriptor ilm(bool reciprocal)
{
    auto d = descriptor(reciprocal ? "ilm-recip-lcm" : "ilm-lcm", "g14", ClaimKind::log_completely_monotonic,
                        reciprocal ? "1/(x^alpha Gamma(x) (e/x)^x) is logarithmically completely monotonic on (0, inf) "
                                     "for alpha >= 1"
                                   : "x^alpha Gamma(x) (e/x)^x is logarithmically completely monotonic on (0, inf) for "
                                     "alpha <= 1/2");
    d.domains = {{"x", positive()},
                 {"alpha", reciprocal ? ParamDomain{1.0, inf, true, false, false}
                                      : ParamDomain{-inf, 0.5, false, true, false}}};
    d.defaults = {{"alpha", reciprocal ? std::vector<double>{1.0, 1.5} : std::vector<double>{0.5, 0.25}}};
    d.default_order = 8;
    const double sign = reciprocal ? -1.0 : 1.0;
    d.build = family_builder(
        [sign](const ParamMap& pm) {
            const double alpha = pm.at("alpha");
            return make_target(label("ln f_ILM", pm),
                               [alpha, sign](double x, int order) { return ln_ilm(x, alpha, order) * sign; }, 0.0,
                               Target::Form::log);
        },
        family_spec(ClaimKind::log_completely_monotonic));
    return d;
}

PropertyDescriptor kv_bounds()
{
    auto d = descriptor("kv-bounds", "g14", ClaimKind::chain_le,
                        "b^(b-1)/a^(a-1) e^(a-b) <= Gamma(b)/Gamma(a) <= b^(b-1/2)/a^(a-1/2) e^(a-b) for b > a > 0",
                        "b = a + d; compared in log space.");
    d.domains = {{"a", positive()}, {"d", positive()}};
    d.defaults = {{"a", {0.1, 0.5, 1.0, 2.0, 5.0}}, {"d", {0.1, 0.5, 1.0, 3.0, 10.0}}};
    d.default_grid = GridSpec::logarithmic(0.1, 5.0, 5);
    d.grid_variable = "a";
    d.build = [](const ParamValues& v, const BuildOptions&) {
        Instance inst;
        std::vector<ParamPoint> pts;
        for (double a : values(v, "a")) {
            for (double dd : values(v, "d")) {
                pts.push_back({a, {{"d", dd}}});
            }
        }
        auto lower = [](const ParamPoint& p) {
            return exact(bounds::keckic_vasic_log_bounds(p.point, p.point + param(p, "d")).lower);
        };
        auto mid = [](const ParamPoint& p) {
            const auto lb = specfun::ln_gamma(p.point + param(p, "d"));
            const auto la = specfun::ln_gamma(p.point);
            return Enclosure{lb.value - la.value, lb.abs_error + la.abs_error, 1, false};
        };
        auto upper = [](const ParamPoint& p) {
            return exact(bounds::keckic_vasic_log_bounds(p.point, p.point + param(p, "d")).upper);
        };
        inst.cases.push_back(ChainCase{{lower, mid, upper}, ClaimKind::chain_le, pts, {}});
        return inst;
    };
    return d;
}

// ---- g15 ----------------------------------------------------------------

PropertyDescriptor qpow()
{
    auto d = descriptor("qpow-lcm", "g15", ClaimKind::log_completely_monotonic,
                        "(1-q)^x Gamma_q(x) is logarithmically completely monotonic on (0, inf) for 0 < q < 1");
    d.domains = {{"x", positive()}, {"q", open_interval(0, 1)}};
    d.defaults = {{"q", q_sub_one}};
    d.default_order = 8;
    d.build = family_builder(
        [](const ParamMap& pm) {
            const double q = pm.at("q");
            return make_target(label("ln (1-q)^x Gamma_q", pm),
                               [q](double x, int order) {
                                   return Jet::variable(x, order) * std::log1p(-q) + ln_gamma_jet(x, q, order);
                               },
                               0.0, Target::Form::log);
        },
        family_spec(ClaimKind::log_completely_monotonic));
    return d;
}

PropertyDescriptor ag_gx()
{
    auto d = descriptor("ag-gx", "g15", ClaimKind::chain_le,
                        "g(x) = Gamma_q(x) Gamma_q(x+2a)/Gamma_q(x+a)^2 >= 1 on (0, inf) for a > 0, 0 < q < 1",
                        "Compared as 0 <= ln g.");
    d.domains = {{"x", positive()}, {"a", positive()}, {"q", open_interval(0, 1)}};
    d.defaults = {{"a", {0.25, 0.5, 1.0, 2.0}}, {"q", q_sub_one}};
    d.build = [](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        auto g = [](const ParamPoint& p) { return exact(bounds::ln_g_ag(p.point, param(p, "a"), param(p, "q"))); };
        inst.cases.push_back(ChainCase{{constant(0.0), g}, ClaimKind::chain_le,
                                       cross(with_points(default_log_grid(), o), all_combos(v)), {}});
        return inst;
    };
    return d;
}

PropertyDescriptor ag_lcm()
{
    auto d = descriptor("ag-lcm", "g15", ClaimKind::log_completely_monotonic,
                        "g(x) = Gamma_q(x) Gamma_q(x+2a)/Gamma_q(x+a)^2 is logarithmically completely monotonic "
                        "on (0, inf) for a > 0, 0 < q < 1");
    d.domains = {{"x", positive()}, {"a", positive()}, {"q", open_interval(0, 1)}};
    d.defaults = {{"a", {0.25, 0.5, 1.0, 2.0}}, {"q", q_sub_one}};
    d.default_order = 8;
    d.build = family_builder(
        [](const ParamMap& pm) {
            const double a = pm.at("a");
            const double q = pm.at("q");
            return make_target(label("ln g", pm),
                               [a, q](double x, int order) {
                                   return ln_gamma_sum(x, q, order, {{1.0, 0.0}, {-2.0, a}, {1.0, 2.0 * a}});
                               },
                               0.0, Target::Form::log);
        },
        family_spec(ClaimKind::log_completely_monotonic));
    return d;
}

// ---- g16 ----------------------------------------------------------------

// ln Gamma_q(x) - (1/beta) ln Gamma_{q^{1/beta}}(beta x)
Jet ln_beta_jet(double x, double beta, double q, int order)
{
    const double qb = q == 1.0 ? 1.0 : std::exp(std::log(q) / beta);
    return ln_gamma_jet(x, q, order) - ln_gamma_jet(beta * x, qb, order).scaled(beta) * (1.0 / beta);
}

PropertyDescriptor beta_lcm(bool reciprocal)
{
    auto d = descriptor(
        reciprocal ? "beta-recip-lcm" : "beta-lcm", "g16", ClaimKind::log_completely_monotonic,
        reciprocal ? "Gamma_{q^(1/beta)}(beta x)^(1/beta)/Gamma_q(x) is logarithmically completely monotonic on "
                     "(0, inf) for 0 < beta < 1, q > 0"
                   : "Gamma_q(x)/Gamma_{q^(1/beta)}(beta x)^(1/beta) is logarithmically completely monotonic on "
                     "(0, inf) for beta > 1, q > 0");
    d.domains = {{"x", positive()},
                 {"beta", reciprocal ? open_interval(0, 1) : open_interval(1, inf)},
                 {"q", positive()}};
    d.defaults = {{"beta", reciprocal ? std::vector<double>{0.5, 0.25} : std::vector<double>{2.0, 3.0}},
                  {"q", {0.5, 1.0, 2.0}}};
    d.default_order = 8;
    const double sign = reciprocal ? -1.0 : 1.0;
    d.build = family_builder(
        [sign](const ParamMap& pm) {
            const double beta = pm.at("beta");
            const double q = pm.at("q");
            return make_target(label("ln beta-scaled", pm),
                               [beta, q, sign](double x, int order) { return ln_beta_jet(x, beta, q, order) * sign; },
                               0.0, Target::Form::log);
        },
        family_spec(ClaimKind::log_completely_monotonic));
    return d;
}

PropertyDescriptor cor5()
{
    auto d = descriptor("cor5-ineq", "g16", ClaimKind::chain_le,
                        "(Gamma_{q^alpha}(z+x) Gamma_{q^alpha}(z+y)/(Gamma_{q^alpha}(x+y+z) Gamma_{q^alpha}(z)))^alpha "
                        "<= Gamma_q(alpha(z+x)) Gamma_q(alpha(z+y))/(Gamma_q(alpha z) Gamma_q(alpha(x+y+z))) for "
                        "alpha > 1, reversed for 0 < alpha < 1; q, x, y, z > 0",
                        "Both sides compared in log space; the chain direction follows alpha.");
    d.domains = {{"x", positive()}, {"y", positive()}, {"z", positive()}, {"alpha", positive()}, {"q", positive()}};
    d.defaults = {{"x", {0.5, 1.0, 2.0}},
                  {"y", {0.5, 1.0, 2.0}},
                  {"z", {0.5, 1.0, 2.0}},
                  {"alpha", {2.0, 3.0, 0.5, 0.25}},
                  {"q", {0.5, 1.0, 2.0}}};
    d.default_grid = GridSpec::linear(0.5, 2.0, 3);
    d.build = [](const ParamValues& v, const BuildOptions&) {
        Instance inst;
        std::vector<ParamPoint> above;
        std::vector<ParamPoint> below;
        ParamValues rest = v;
        rest.erase("x");
        for (const auto& pm : all_combos(rest)) {
            if (pm.at("alpha") == 1.0) {
                throw UsageError("cor5-ineq: alpha = 1 is the trivial equality");
            }
            for (double x : values(v, "x")) {
                (pm.at("alpha") > 1.0 ? above : below).push_back({x, pm});
            }
        }
        auto side = [](bool left) {
            return [left](const ParamPoint& p) {
                const auto s = bounds::cor5_log_sides(p.point, param(p, "y"), param(p, "z"), param(p, "alpha"),
                                                      param(p, "q"));
                return exact(left ? s.lhs : s.rhs);
            };
        };
        if (!above.empty()) {
            inst.cases.push_back(ChainCase{{side(true), side(false)}, ClaimKind::chain_le, above, {}});
        }
        if (!below.empty()) {
            inst.cases.push_back(ChainCase{{side(false), side(true)}, ClaimKind::chain_le, below, {}});
        }
        return inst;
    };
    return d;
}

// ---- g17, g18 ------------------------------------------------------------

// f_alpha'(x) = -psi(x) + ln x - 1/(2x) + psi''(x+alpha)/12
Jet falpha_prime(double x, double alpha, int order)
{
    return -psi_jet(0, x, 1.0, order) + log_jet(x, order) - power_jet(x, -1.0, order) * 0.5 +
           psi_jet(2, x + alpha, 1.0, order) * (1.0 / 12.0);
}

// G_c(x) = ln Gamma(x) - x ln x + x - ln(2 pi)/2 + psi(x+c)/2
Jet gc_jet(double x, double c, int order)
{
    const Jet X = Jet::variable(x, order);
    return classical_lg(x, order) - X * log_jet(x, order) + X +
           (-0.5 * std::log(2.0 * std::numbers::pi)) + psi_jet(0, x + c, 1.0, order) * 0.5;
}

enum class Variant { positive, negated, only_if };

PropertyDescriptor falpha(Variant var)
{
    const char* id = var == Variant::positive ? "falpha-cm" : var == Variant::negated ? "falpha-neg-cm" : "falpha-onlyif";
    const char* ref = var == Variant::positive
                          ? "f_alpha'(x) = -psi(x) + ln x - 1/(2x) + psi''(x+alpha)/12 is strictly completely "
                            "monotonic on (0, inf) for alpha >= 1/2"
                      : var == Variant::negated
                          ? "-f_0'(x) = psi(x) - ln x + 1/(2x) - psi''(x)/12 is strictly completely monotonic on (0, inf)"
                          : "f_alpha'(x) is not completely monotonic on (0, inf) for alpha < 1/2";
    auto d = descriptor(id, "g17", ClaimKind::completely_monotonic, ref,
                        "f_alpha(x) = -ln Gamma(x) + (x-1/2) ln x - x + psi'(x+alpha)/12; the derivative of the "
                        "correction term is read as psi'' of x+alpha.");
    d.domains = {{"x", positive()}, {"alpha", nonnegative()}};
    if (var == Variant::positive) {
        d.domains["alpha"] = {0.5, inf, true, false, false};
    } else if (var == Variant::negated) {
        d.domains["alpha"] = closed_interval(0, 0);
    } else {
        d.domains["alpha"] = {0.0, 0.5, true, false, false};
        d.expected = Expectation::violation;
    }
    d.defaults = {{"alpha", var == Variant::positive ? std::vector<double>{0.5, 1.0}
                                                     : var == Variant::negated ? std::vector<double>{0.0}
                                                                               : std::vector<double>{0.4}}};
    d.default_order = 8;
    d.strict = var != Variant::only_if;
    const double sign = var == Variant::negated ? -1.0 : 1.0;
    d.build = family_builder(
        [sign](const ParamMap& pm) {
            const double alpha = pm.at("alpha");
            return make_target(label(sign < 0 ? "-f_alpha'" : "f_alpha'", pm),
                               [alpha, sign](double x, int order) { return falpha_prime(x, alpha, order) * sign; },
                               0.0);
        },
        family_spec(ClaimKind::completely_monotonic, 8, d.strict, {}));
    return d;
}

PropertyDescriptor gc(Variant var)
{
    const char* id = var == Variant::positive ? "gc-cm" : var == Variant::negated ? "gc-neg-cm" : "gc-onlyif";
    const char* ref = var == Variant::positive
                          ? "G_c(x) = ln Gamma(x) - x ln x + x - ln(2 pi)/2 + psi(x+c)/2 is completely monotonic "
                            "on (0, inf) for c >= 1/3"
                      : var == Variant::negated ? "-G_0(x) is completely monotonic on (0, inf)"
                                                : "G_c is not completely monotonic on (0, inf) for 0 < c < 1/3";
    auto d = descriptor(id, "g18", ClaimKind::completely_monotonic, ref);
    d.domains = {{"x", positive()}};
    if (var == Variant::positive) {
        d.domains["c"] = {1.0 / 3.0, inf, true, false, false};
    } else if (var == Variant::negated) {
        d.domains["c"] = closed_interval(0, 0);
    } else {
        d.domains["c"] = open_interval(0, 1.0 / 3.0);
        d.expected = Expectation::violation;
    }
    d.defaults = {{"c", var == Variant::positive ? std::vector<double>{1.0 / 3.0, 0.5}
                                                 : var == Variant::negated ? std::vector<double>{0.0}
                                                                           : std::vector<double>{0.2}}};
    d.default_order = 8;
    const double sign = var == Variant::negated ? -1.0 : 1.0;
    d.build = family_builder(
        [sign](const ParamMap& pm) {
            const double c = pm.at("c");
            return make_target(label(sign < 0 ? "-G_c" : "G_c", pm),
                               [c, sign](double x, int order) { return gc_jet(x, c, order) * sign; }, 0.0);
        },
        family_spec(ClaimKind::completely_monotonic));
    return d;
}

// ---- g26 ----------------------------------------------------------------

ChainExpr bracket_side(bool eq13, int side)
{
    return [eq13, side](const ParamPoint& p) {
        const auto b = eq13 ? bounds::ball_eq13_log(int(p.point)) : bounds::ball_thm51_log(int(p.point));
        return exact(side == 0 ? b.lower : side == 1 ? b.value : b.upper);
    };
}

int n_max(const ParamValues& v)
{
    const auto n = int_values(v, "n_max");
    if (n.size() != 1) {
        throw UsageError("n_max takes a single value");
    }
    return n.front();
}

PropertyDescriptor ball_thm51()
{
    auto d = descriptor("ball-thm51", "g26", ClaimKind::chain_le,
                        "(1 + 1/(n+1))^(1/2) <= Omega_n^2/(Omega_{n-1} Omega_{n+1}) <= (1 + 1/(n+1/2))^(1/2) for "
                        "n >= 1, Omega_n the volume of the unit ball in R^n",
                        "One chain per n = 1..n_max; compared in log space.");
    d.domains = {{"n", integers(1, inf)}, {"n_max", integers(1, 100000)}};
    d.defaults = {{"n_max", {200}}};
    d.default_grid = GridSpec::linear(1, 200, 200);
    d.grid_variable = "n";
    d.build = [](const ParamValues& v, const BuildOptions&) {
        Instance inst;
        for (int n = 1; n <= n_max(v); ++n) {
            inst.cases.push_back(ChainCase{{bracket_side(false, 0), bracket_side(false, 1), bracket_side(false, 2)},
                                           ClaimKind::chain_le,
                                           {{double(n), {}}},
                                           {}});
        }
        return inst;
    };
    return d;
}

PropertyDescriptor ball_eq13()
{
    auto d = descriptor("ball-eq13", "g26", ClaimKind::chain_lt,
                        "exp(1/n + psi(n))/(2 pi) < (Omega_{n-1}/Omega_n)^2 <= exp(beta/n + psi(n))/(2 pi) for n >= 2, "
                        "beta = 2(ln(8/pi) + gamma - 1)",
                        "Lower side strict, upper side non-strict (equality holds at n = 2).");
    d.domains = {{"n", integers(2, inf)}, {"n_max", integers(2, 100000)}};
    d.defaults = {{"n_max", {200}}};
    d.default_grid = GridSpec::linear(2, 200, 199);
    d.grid_variable = "n";
    d.strict = true;
    d.build = [](const ParamValues& v, const BuildOptions&) {
        Instance inst;
        std::vector<ParamPoint> pts;
        for (int n = 2; n <= n_max(v); ++n) {
            pts.push_back({double(n), {}});
        }
        inst.cases.push_back(ChainCase{{bracket_side(true, 0), bracket_side(true, 1)}, ClaimKind::chain_lt, pts, {}});
        inst.cases.push_back(ChainCase{{bracket_side(true, 1), bracket_side(true, 2)}, ClaimKind::chain_le, pts, {}});
        return inst;
    };
    return d;
}

PropertyDescriptor dup_psi()
{
    auto d = descriptor("dup-psi", "g26", ClaimKind::chain_le,
                        "psi(2x) = psi(x)/2 + psi(x+1/2)/2 + ln 2 for x > 0",
                        "Equality checked as a two-sided chain.");
    d.domains = {{"x", positive()}};
    d.build = [](const ParamValues&, const BuildOptions& o) {
        Instance inst;
        auto lhs = [](const ParamPoint& p) { return specfun::digamma(2.0 * p.point); };
        auto rhs = [](const ParamPoint& p) {
            const auto a = specfun::digamma(p.point);
            const auto b = specfun::digamma(p.point + 0.5);
            const double v = 0.5 * a.value + 0.5 * b.value + std::numbers::ln2;
            return Enclosure{v, 0.5 * (a.abs_error + b.abs_error) + 4 * qgk::detail::mach_eps * (std::abs(v) + 1.0),
                             1, false};
        };
        inst.cases.push_back(
            ChainCase{{lhs, rhs, lhs}, ClaimKind::chain_le, cross(with_points(default_log_grid(), o), {ParamMap{}}), {}});
        return inst;
    };
    return d;
}

// ---- g27 ----------------------------------------------------------------

PropertyDescriptor lem5()
{
    auto d = descriptor("lem5-root", "g27", ClaimKind::chain_le,
                        "a(t;m,n,c) = t^(m-n) + t^n - c(1 + t^m) has exactly one root for t >= 1 when m > n >= 1, "
                        "0 < c < 1",
                        "Encoded as 1 <= (sign changes of a on a 2001-point grid over [1, 2 t*]) <= 1, with t* the "
                        "bisection root.");
    d.domains = {{"m", integers(2, 64)}, {"n", integers(1, 63)}, {"c", open_interval(0, 1)}};
    d.defaults = {{"m", int_range(2, 6)}, {"n", int_range(1, 5)}, {"c", {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}}};
    d.default_grid = GridSpec::linear(0.1, 0.9, 9);
    d.grid_variable = "c";
    d.build = [](const ParamValues& v, const BuildOptions&) {
        Instance inst;
        std::vector<ParamPoint> pts;
        for (int m : int_values(v, "m")) {
            for (int n : int_values(v, "n")) {
                if (n >= m) {
                    continue;
                }
                for (double c : values(v, "c")) {
                    pts.push_back({c, {{"m", double(m)}, {"n", double(n)}}});
                }
            }
        }
        if (pts.empty()) {
            return inst;
        }
        auto changes = [](const ParamPoint& p) {
            const int m = int(param(p, "m"));
            const int n = int(param(p, "n"));
            const double root = bounds::a_poly_root(m, n, p.point);
            return Enclosure{double(bounds::a_poly_sign_changes(m, n, p.point, 1.0, 2.0 * root, 2001)), 0.0, 1, false};
        };
        inst.cases.push_back(ChainCase{{constant(1.0), changes, constant(1.0)}, ClaimKind::chain_le, pts, {}});
        return inst;
    };
    return d;
}

PropertyDescriptor lem6()
{
    auto d = descriptor("lem6-kernel", "g27", ClaimKind::chain_le,
                        "s/(1-e^(-s)) (t-s)/(1-e^(-(t-s))) >= t/(1-e^(-t)) for t >= s >= 0",
                        "s = frac t with frac strictly inside (0, 1), so every kernel argument is positive.");
    d.domains = {{"x", positive()}, {"frac", open_interval(0, 1)}};
    d.defaults = {{"frac", {0.1, 0.25, 0.5, 0.75, 0.9}}};
    d.default_grid = GridSpec::logarithmic(1e-2, 40.0, 64);
    d.build = [](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        auto whole = [](const ParamPoint& p) { return exact(specfun::kernel_h(p.point)); };
        auto split = [](const ParamPoint& p) {
            const double s = param(p, "frac") * p.point;
            return exact(specfun::kernel_h(s) * specfun::kernel_h(p.point - s));
        };
        inst.cases.push_back(ChainCase{{whole, split}, ClaimKind::chain_le,
                                       cross(with_points(GridSpec::logarithmic(1e-2, 40.0, 64), o), all_combos(v)),
                                       {}});
        return inst;
    };
    return d;
}

PropertyDescriptor lem4()
{
    auto d = descriptor("lem4-lr", "g27", ClaimKind::chain_lt,
                        "r -> L_r(a,b) is strictly increasing for a, b > 0, a != b",
                        "Chain over r = -2, -1, 0, 1, 2, 3; b = a * ratio.");
    d.domains = {{"a", positive()}, {"ratio", positive()}};
    d.defaults = {{"a", {0.5, 1.0, 2.0, 7.0}}, {"ratio", {0.1, 0.5, 1.01, 2.0, 10.0}}};
    d.default_grid = GridSpec::logarithmic(0.5, 7.0, 4);
    d.grid_variable = "a";
    d.strict = true;
    d.build = [](const ParamValues& v, const BuildOptions&) {
        Instance inst;
        std::vector<ParamPoint> pts;
        for (double a : values(v, "a")) {
            for (double ratio : values(v, "ratio")) {
                if (ratio == 1.0) {
                    throw UsageError("lem4-lr: ratio 1 makes the means coincide");
                }
                pts.push_back({a, {{"ratio", ratio}}});
            }
        }
        std::vector<ChainExpr> exprs;
        for (int r = -2; r <= 3; ++r) {
            exprs.push_back([r](const ParamPoint& p) {
                return exact(specfun::log_mean({double(r)}, p.point, p.point * param(p, "ratio")));
            });
        }
        inst.cases.push_back(ChainCase{std::move(exprs), ClaimKind::chain_lt, pts, {}});
        return inst;
    };
    return d;
}

} // namespace

void register_application_entries(std::vector<PropertyDescriptor>& out)
{
    out.push_back(cor4_lcm());
    out.push_back(cor4_orig());
    out.push_back(ilm(false));
    out.push_back(ilm(true));
    out.push_back(kv_bounds());
    out.push_back(qpow());
    out.push_back(ag_gx());
    out.push_back(ag_lcm());
    out.push_back(beta_lcm(false));
    out.push_back(beta_lcm(true));
    out.push_back(cor5());
    out.push_back(falpha(Variant::positive));
    out.push_back(falpha(Variant::negated));
    out.push_back(falpha(Variant::only_if));
    out.push_back(gc(Variant::positive));
    out.push_back(gc(Variant::negated));
    out.push_back(gc(Variant::only_if));
    out.push_back(ball_thm51());
    out.push_back(ball_eq13());
    out.push_back(dup_psi());
    out.push_back(lem5());
    out.push_back(lem6());
    out.push_back(lem4());
}

} // namespace qgk::corpus
