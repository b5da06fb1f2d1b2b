// Polygamma products and ratios, the Clark-Ismail kernel, and the
// monotone families built from x^n psi^(n).

#include <cmath>

#include "corpus_util.hpp"
#include "qgk/bounds.hpp"
#include "qgk/specfun.hpp"

namespace qgk::corpus {

namespace {

using namespace detail;

double alt(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

// psi^(k)(x + t), with psi^(0) read as the constant -1.
Jet poly_factor(int k, double x, int order)
{
    return k == 0 ? Jet::constant(-1.0, order) : psi_jet(k, x, 1.0, order);
}

struct Tuple {
    int p, m, n, q;
};

const std::vector<Tuple> thm4_tuples{{3, 2, 2, 1}, {4, 3, 2, 1}, {2, 1, 1, 0}};

Jet thm4_jet(const Tuple& t, double c, double x, int order)
{
    return poly_factor(t.m, x, order) * poly_factor(t.n, x, order) * alt(t.m + t.n) -
           poly_factor(t.p, x, order) * poly_factor(t.q, x, order) * (c * alt(t.p + t.q));
}

PropertyDescriptor thm4(bool negated)
{
    auto d = descriptor(
        negated ? "thm4-neg-cm" : "thm4-cm", "g19", ClaimKind::completely_monotonic,
        negated ? "-F_{p,m,n,q}(x; d) with d = m! n!/(p! q!) is completely monotonic on (0, inf) for integers "
                  "p > m >= n > q > 0, m + n = p + q"
                : "F_{p,m,n,q}(x; c) = (-1)^(m+n) psi^(m) psi^(n) - c (-1)^(p+q) psi^(p) psi^(q), psi^(0) = -1, "
                  "with c = (m-1)!(n-1)!/((p-1)!(q-1)!) (q >= 1) or (m-1)!(n-1)!/(p-1)! (q = 0), is completely "
                  "monotonic on (0, inf) for integers p > m >= n > q >= 0, m + n = p + q",
        negated ? "tuple 0 = (3,2,2,1), 1 = (4,3,2,1); the q = 0 tuple has no d-claim."
                : "tuple 0 = (3,2,2,1), 1 = (4,3,2,1), 2 = (2,1,1,0).");
    d.domains = {{"x", positive()}, {"tuple", integers(0, negated ? 1 : 2)}};
    d.defaults = {{"tuple", negated ? std::vector<double>{0, 1} : std::vector<double>{0, 1, 2}}};
    d.default_order = 8;
    d.build = family_builder(
        [negated](const ParamMap& pm) {
            const Tuple t = thm4_tuples.at(std::size_t(pm.at("tuple")));
            const auto k = bounds::poly_constants(t.p, t.m, t.n, t.q);
            const double c = negated ? k.d : k.c;
            const double sign = negated ? -1.0 : 1.0;
            return make_target(label(negated ? "-F(d)" : "F(c)", pm),
                               [t, c, sign](double x, int order) { return thm4_jet(t, c, x, order) * sign; }, 0.0);
        },
        family_spec(ClaimKind::completely_monotonic));
    return d;
}

Enclosure combine(double v, std::initializer_list<double> errs)
{
    double e = 0.0;
    for (double x : errs) {
        e += x;
    }
    return {v, e + 8 * qgk::detail::mach_eps * std::abs(v), 1, false};
}

PropertyDescriptor eq42()
{
    auto d = descriptor("eq42-nonneg", "g20", ClaimKind::chain_le, "(psi'(x))^2 + psi''(x) > 0 for x > 0",
                        "Checked as 0 <= (psi')^2 + psi''.");
    d.domains = {{"x", positive()}};
    d.build = [](const ParamValues&, const BuildOptions& o) {
        Instance inst;
        auto expr = [](const ParamPoint& p) {
            const auto d1 = specfun::polygamma(1, p.point);
            const auto d2 = specfun::polygamma(2, p.point);
            return combine(d1.value * d1.value + d2.value, {2 * std::abs(d1.value) * d1.abs_error, d2.abs_error});
        };
        inst.cases.push_back(ChainCase{{constant(0.0), expr}, ClaimKind::chain_le,
                                       cross(with_points(default_log_grid(), o), {ParamMap{}}), {}});
        return inst;
    };
    return d;
}

// ---- g21 ----------------------------------------------------------------

ChainExpr pair_side(bounds::PsiPairVariant variant, int side)
{
    return [variant, side](const ParamPoint& p) {
        std::optional<double> q;
        if (variant == bounds::PsiPairVariant::q_analogue) {
            q = param(p, "q");
        }
        const auto v = bounds::psi_pair_inequality(p.point, param(p, "c"), variant, q);
        return exact(side == 0 ? v.lhs : side == 1 ? v.mid : v.rhs);
    };
}

// Ascending order: (rhs, mid, lhs) for c < 1, (lhs, mid, rhs) for c > 1.
std::vector<Case> pair_cases(bounds::PsiPairVariant variant, const std::vector<ParamMap>& params, const GridSpec& g,
                             const std::vector<double>& spots)
{
    std::vector<ParamMap> below;
    std::vector<ParamMap> above;
    for (const auto& pm : params) {
        const double c = pm.at("c");
        if (c == 1.0) {
            throw UsageError("c = 1 makes the three sides coincide");
        }
        (c < 1.0 ? below : above).push_back(pm);
    }
    auto points = [&](const std::vector<ParamMap>& ps) {
        auto pts = cross(g, ps);
        for (const auto& pm : ps) {
            for (double x : spots) {
                pts.push_back({x, pm});
            }
        }
        return pts;
    };
    std::vector<Case> out;
    if (!below.empty()) {
        out.push_back(ChainCase{{pair_side(variant, 2), pair_side(variant, 1), pair_side(variant, 0)},
                                ClaimKind::chain_lt, points(below), spots});
    }
    if (!above.empty()) {
        out.push_back(ChainCase{{pair_side(variant, 0), pair_side(variant, 1), pair_side(variant, 2)},
                                ClaimKind::chain_lt, points(above), spots});
    }
    return out;
}

const std::vector<double> pair_cs{0.25, 0.5, 0.75, 1.5, 2.0, 3.0};

PropertyDescriptor prop51()
{
    auto d = descriptor("prop51-chain", "g21", ClaimKind::chain_lt,
                        "(psi(x+c) - psi(x))^2/c > psi'(x) - psi'(x+c) > (psi(x+c) - psi(x))^2 for x > 0, 0 < c < 1, "
                        "with both inequalities reversed for c > 1");
    d.domains = {{"x", positive()}, {"c", positive()}};
    d.defaults = {{"c", pair_cs}};
    d.strict = true;
    d.build = [](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        inst.cases = pair_cases(bounds::PsiPairVariant::classical, all_combos(v), with_points(default_log_grid(), o), {});
        return inst;
    };
    return d;
}

PropertyDescriptor thm52()
{
    auto d = descriptor("thm52-chain", "g21", ClaimKind::chain_lt,
                        "(1-q)/(1-q^c) (psi_q(x+c) - psi_q(x))^2 > q^x (psi_q'(x) - psi_q'(x+c)) > (psi_q(x+c) - "
                        "psi_q(x))^2 for x > 0, 0 < q < 1, 0 < c < 1, reversed for c > 1",
                        "Strictness is probed at x = 0.1, 0.5, 1, where the sides are well above rounding level.");
    d.domains = {{"x", positive()}, {"c", positive()}, {"q", open_interval(0, 1)}};
    d.defaults = {{"c", pair_cs}, {"q", {0.3, 0.5, 0.7, 0.9}}};
    d.strict = true;
    d.build = [](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        inst.cases = pair_cases(bounds::PsiPairVariant::q_analogue, all_combos(v), with_points(default_log_grid(), o),
                                {0.1, 0.5, 1.0});
        return inst;
    };
    return d;
}

PropertyDescriptor cor51()
{
    auto d = descriptor("cor51-nonneg", "g21", ClaimKind::chain_le,
                        "(psi_q'(x))^2 + ln(1/q) q^x/(1-q) psi_q''(x) >= 0 for 0 < q < 1, x > 0");
    d.domains = {{"x", positive()}, {"q", open_interval(0, 1)}};
    d.defaults = {{"q", {0.3, 0.5, 0.7, 0.9}}};
    d.build = [](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        auto expr = [](const ParamPoint& p) { return exact(bounds::cor51_expr(p.point, param(p, "q"))); };
        inst.cases.push_back(ChainCase{{constant(0.0), expr}, ClaimKind::chain_le,
                                       cross(with_points(default_log_grid(), o), all_combos(v)), {}});
        return inst;
    };
    return d;
}

// ---- g22 ----------------------------------------------------------------

// f_{a,n}(x) = x^n (-1)^(n+1) psi^(n)(x+a)
Jet f_an(double a, int n, double x, int order)
{
    return power_jet(x, n, order) * psi_jet(n, x + a, 1.0, order) * alt(n + 1);
}

Target f_an_target(double a, int n)
{
    return make_target(label("f_{a,n}", {{"a", a}, {"n", double(n)}}),
                       [a, n](double x, int order) { return f_an(a, n, x, order); }, -a);
}

enum class Lem11 { inc, dec, only_if };

PropertyDescriptor lem11(Lem11 kind)
{
    const char* id = kind == Lem11::inc ? "lem-thm11-inc" : kind == Lem11::dec ? "lem-thm11-dec" : "lem-thm11-onlyif";
    const char* ref = kind == Lem11::inc ? "f_{a,n}(x) = x^n (-1)^(n+1) psi^(n)(x+a) is increasing on [0, inf) for "
                                           "a >= 1/2, n >= 1"
                      : kind == Lem11::dec ? "f_{0,n}(x) = x^n (-1)^(n+1) psi^(n)(x) is decreasing on (0, inf)"
                                           : "f_{a,n} is not increasing on [0, inf) when 0 <= a < 1/2";
    auto d = descriptor(id, "g22", kind == Lem11::dec ? ClaimKind::decreasing : ClaimKind::increasing, ref);
    d.domains = {{"x", nonnegative()}, {"n", integers(1, 64)}};
    switch (kind) {
    case Lem11::inc:
        d.domains["a"] = {0.5, inf, true, false, false};
        d.defaults = {{"a", {0.5, 1.0}}, {"n", {1, 2, 3}}};
        d.default_grid = GridSpec::linear(0.0, 20.0, 64);
        break;
    case Lem11::dec:
        d.domains["x"] = positive();
        d.defaults = {{"n", {1, 2, 3}}};
        d.default_grid = GridSpec::linear(0.0, 20.0, 64, true);
        break;
    case Lem11::only_if:
        d.domains["a"] = {0.0, 0.5, true, false, false};
        d.defaults = {{"a", {0.4}}, {"n", {1}}};
        d.default_grid = GridSpec::linear(0.0, 50.0, 64, true);
        d.expected = Expectation::violation;
        break;
    }
    const GridSpec grid = d.default_grid;
    const ClaimKind claim = d.claim;
    d.build = [grid, claim](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        for (const auto& pm : all_combos(v)) {
            const double a = pm.count("a") ? pm.at("a") : 0.0;
            const int n = int(pm.at("n"));
            inst.cases.push_back(MonotoneCase{f_an_target(a, n), with_points(grid, o), claim, pm, std::nullopt, false});
        }
        return inst;
    };
    return d;
}

PropertyDescriptor lem11_cm()
{
    auto d = descriptor("lem-thm11-cm", "g22", ClaimKind::completely_monotonic,
                        "x psi'(x) and psi'(x+a) + x psi''(x+a), a >= 1/2, are completely monotonic on (0, inf)");
    d.domains = {{"x", positive()}, {"a", {0.5, inf, true, false, false}}};
    d.defaults = {{"a", {0.5, 1.0}}};
    d.default_order = 8;
    d.build = [](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        const int K = order_or(8, o);
        const auto grid = with_points(default_log_grid(), o);
        inst.cases.push_back(sign_case(make_target("x psi'(x)",
                                                   [](double x, int order) {
                                                       return Jet::variable(x, order) * psi_jet(1, x, 1.0, order);
                                                   },
                                                   0.0),
                                       K, grid, ClaimKind::completely_monotonic, {}));
        for (double a : values(v, "a")) {
            inst.cases.push_back(sign_case(
                make_target(label("psi'(x+a) + x psi''(x+a)", {{"a", a}}),
                            [a](double x, int order) {
                                return psi_jet(1, x + a, 1.0, order) +
                                       Jet::variable(x, order) * psi_jet(2, x + a, 1.0, order);
                            },
                            0.0),
                K, grid, ClaimKind::completely_monotonic, {{"a", a}}));
        }
        return inst;
    };
    return d;
}

// ---- g23 ----------------------------------------------------------------

PropertyDescriptor eq43()
{
    auto d = descriptor("eq43-range", "g23", ClaimKind::decreasing,
                        "-x psi^(n+1)(x)/psi^(n)(x) is strictly decreasing from [0, inf) onto (n, n+1] for n >= 1");
    d.domains = {{"x", positive()}, {"n", integers(1, 64)}};
    d.defaults = {{"n", {1, 2, 3}}};
    d.strict = true;
    d.build = [](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        for (int n : int_values(v, "n")) {
            auto target = make_target(label("-x psi^(n+1)/psi^(n)", {{"n", double(n)}}),
                                      [n](double x, int order) {
                                          return -(Jet::variable(x, order) * psi_jet(n + 1, x, 1.0, order)) /
                                                 psi_jet(n, x, 1.0, order);
                                      },
                                      0.0);
            inst.cases.push_back(MonotoneCase{std::move(target), with_points(default_log_grid(), o),
                                              ClaimKind::decreasing,
                                              {{"n", double(n)}},
                                              cm::RangeClaim{double(n), double(n + 1), true, false},
                                              true});
        }
        return inst;
    };
    return d;
}

Jet r_na(int n, double a, double x, int order)
{
    return Jet::variable(x, order) * psi_jet(n + 1, x + a, 1.0, order) / psi_jet(n, x + a, 1.0, order);
}

PropertyDescriptor cor45()
{
    auto d = descriptor("prop-cor45", "g23", ClaimKind::decreasing,
                        "r_{n,a}(x) = x psi^(n+1)(x+a)/psi^(n)(x+a) is decreasing on [0, inf) for a >= 1/2, n >= 1");
    d.domains = {{"x", nonnegative()}, {"a", {0.5, inf, true, false, false}}, {"n", integers(1, 64)}};
    d.defaults = {{"a", {0.5, 1.0}}, {"n", {1, 2, 3}}};
    d.default_grid = GridSpec::linear(0.0, 20.0, 64);
    d.build = [](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        for (const auto& pm : all_combos(v)) {
            const double a = pm.at("a");
            const int n = int(pm.at("n"));
            auto target = make_target(label("r_{n,a}", pm), [n, a](double x, int order) { return r_na(n, a, x, order); },
                                      -a);
            inst.cases.push_back(MonotoneCase{std::move(target), with_points(GridSpec::linear(0.0, 20.0, 64), o),
                                              ClaimKind::decreasing, pm, std::nullopt, false});
        }
        return inst;
    };
    return d;
}

PropertyDescriptor cor45_limit()
{
    auto d = descriptor("prop-cor45-limit", "g23", ClaimKind::chain_le,
                        "r_{n,a}(x) -> -n as x -> inf, with r_{n,a}(x) >= -n",
                        "Encoded as -n <= r_{n,a}(X) <= -n + 0.01 at X = 1e3, 1e4, 1e5.");
    d.domains = {{"x", {1e3, inf, true, false, false}}, {"a", {0.5, inf, true, false, false}}, {"n", integers(1, 64)}};
    d.defaults = {{"a", {0.5, 1.0}}, {"n", {1, 2, 3}}};
    d.default_grid = GridSpec::logarithmic(1e3, 1e5, 3);
    d.build = [](const ParamValues& v, const BuildOptions&) {
        Instance inst;
        const auto pts = cross(GridSpec::logarithmic(1e3, 1e5, 3), all_combos(v));
        auto lo = [](const ParamPoint& p) { return exact(-param(p, "n")); };
        auto hi = [](const ParamPoint& p) { return exact(-param(p, "n") + 0.01); };
        auto r = [](const ParamPoint& p) {
            return r_na(int(param(p, "n")), param(p, "a"), p.point, 0).derivative_at(0);
        };
        inst.cases.push_back(ChainCase{{lo, r, hi}, ClaimKind::chain_le, pts, {}});
        return inst;
    };
    return d;
}

// ---- g24 ----------------------------------------------------------------

PropertyDescriptor ci_kernel()
{
    auto d = descriptor("ci-kernel", "g24", ClaimKind::chain_lt,
                        "d^n/dt^n [t^n/(1-e^(-t))] > 0 for t > 0, 1 <= n <= 16",
                        "Sampled on a log grid over [1e-2, 40]; n = 16 uses 32 points.");
    d.domains = {{"x", positive()}, {"n", integers(1, 20)}};
    d.defaults = {{"n", int_range(1, 16)}};
    d.default_grid = GridSpec::logarithmic(1e-2, 40.0, 64);
    d.strict = true;
    d.build = [](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        for (int n : int_values(v, "n")) {
            auto g = with_points(GridSpec::logarithmic(1e-2, 40.0, 64), o);
            if (n == 16 && !o.grid_points) {
                g.points = 32;
            }
            auto k = [n](const ParamPoint& p) { return specfun::kernel_derivative(n, n, p.point); };
            inst.cases.push_back(
                ChainCase{{constant(0.0), k}, ClaimKind::chain_lt, cross(g, {ParamMap{{"n", double(n)}}}), {}});
        }
        return inst;
    };
    return d;
}

PropertyDescriptor f0n_cm()
{
    auto d = descriptor("f0n-cm", "g24", ClaimKind::completely_monotonic,
                        "f_{0,n}(x) = (-1)^(n+1) x^n psi^(n)(x) is completely monotonic on (0, inf) for 1 <= n <= 16",
                        "Derivatives up to order 6.");
    d.domains = {{"x", positive()}, {"n", integers(1, 16)}};
    d.defaults = {{"n", int_range(1, 16)}};
    d.default_order = 6;
    d.build = family_builder(
        [](const ParamMap& pm) {
            const int n = int(pm.at("n"));
            return make_target(label("f_{0,n}", pm), [n](double x, int order) { return f_an(0.0, n, x, order); }, 0.0);
        },
        family_spec(ClaimKind::completely_monotonic, 6));
    return d;
}

PropertyDescriptor xf01_cm()
{
    auto d = descriptor("xf01-cm", "g24", ClaimKind::completely_monotonic,
                        "(x f_{0,1}(x))'' = (x^2 psi'(x))'' is strictly completely monotonic on (0, inf)",
                        "Strictness probed at x = 0.1, 0.5, 1.");
    d.domains = {{"x", positive()}};
    d.default_order = 8;
    d.strict = true;
    d.build = family_builder(
        [](const ParamMap&) {
            return make_target("(x^2 psi')''",
                               [](double x, int order) {
                                   // x^2 psi'(x) = 1 + x^2 psi'(x+1): the pole would cancel at small x
                                   return (power_jet(x, 2.0, order + 2) * psi_jet(1, x + 1.0, 1.0, order + 2))
                                       .derivative()
                                       .derivative();
                               },
                               0.0);
        },
        family_spec(ClaimKind::completely_monotonic, 8, true, {0.1, 0.5, 1.0}));
    return d;
}

// ---- g25 ----------------------------------------------------------------

PropertyDescriptor qthm()
{
    auto d = descriptor("qthm-monotone", "g25", ClaimKind::decreasing,
                        "f_n(x;q) = (1-q^x)^n (-1)^(n+1) psi_q^(n)(x) is decreasing on (0, inf) for n >= 1, "
                        "0 < q < 1");
    d.domains = {{"x", positive()}, {"n", integers(1, 64)}, {"q", open_interval(0, 1)}};
    d.defaults = {{"n", {1, 2, 3}}, {"q", {0.3, 0.7}}};
    d.build = [](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        for (const auto& pm : all_combos(v)) {
            const int n = int(pm.at("n"));
            const double q = pm.at("q");
            auto target = make_target(label("f_n(x;q)", pm),
                                      [n, q](double x, int order) {
                                          const Jet one_minus = exp(log_q_bracket_jet(x, q, order)) * (1.0 - q);
                                          return pow(one_minus, n) * psi_jet(n, x, q, order) * alt(n + 1);
                                      },
                                      0.0);
            inst.cases.push_back(MonotoneCase{std::move(target), with_points(default_log_grid(), o),
                                              ClaimKind::decreasing, pm, std::nullopt, false});
        }
        return inst;
    };
    return d;
}

} // namespace

void register_polygamma_entries(std::vector<PropertyDescriptor>& out)
{
    out.push_back(thm4(false));
    out.push_back(thm4(true));
    out.push_back(eq42());
    out.push_back(prop51());
    out.push_back(thm52());
    out.push_back(cor51());
    out.push_back(lem11(Lem11::inc));
    out.push_back(lem11(Lem11::dec));
    out.push_back(lem11(Lem11::only_if));
    out.push_back(lem11_cm());
    out.push_back(eq43());
    out.push_back(cor45());
    out.push_back(cor45_limit());
    out.push_back(ci_kernel());
    out.push_back(f0n_cm());
    out.push_back(xf01_cm());
    out.push_back(qthm());
}

} // namespace qgk::corpus
