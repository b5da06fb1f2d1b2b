// Gamma-ratio claims: the g_q family, the q-power bounds, the psi bounds
// and their refinements.

#include <cmath>

#include "corpus_util.hpp"
#include "qgk/bounds.hpp"
#include "qgk/specfun.hpp"

namespace qgk::corpus {

namespace {

using namespace detail;
using bounds::RatioBoundMethod;

const std::vector<double> q_sub_one{0.3, 0.5, 0.7, 0.9};
const std::vector<double> q_with_one{0.3, 0.5, 0.7, 0.9, 1.0};
const std::vector<double> s_ninths{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

GridSpec ratio_grid() { return GridSpec::logarithmic(0.1, 10.0, 30); }

Enclosure psi_enc(double x) { return specfun::digamma(x); }

Enclosure sum(Enclosure a, const Enclosure& b, double wb = 1.0)
{
    a.value += wb * b.value;
    a.abs_error += std::abs(wb) * b.abs_error + qgk::detail::mach_eps * std::abs(a.value);
    return a;
}

Enclosure scale(Enclosure a, double w)
{
    a.value *= w;
    a.abs_error *= std::abs(w);
    return a;
}

// ln of the ratio and its two log bounds for one method.
std::vector<ChainExpr> ratio_chain(RatioBoundMethod m)
{
    auto lower = [m](const ParamPoint& p) {
        return exact(bounds::ratio_log_bounds(p.point, param(p, "s"), param(p, "q"), m).lower);
    };
    auto mid = [](const ParamPoint& p) { return bounds::ln_gamma_ratio(p.point, param(p, "s"), param(p, "q")); };
    auto upper = [m](const ParamPoint& p) {
        return exact(bounds::ratio_log_bounds(p.point, param(p, "s"), param(p, "q"), m).upper);
    };
    return {lower, mid, upper};
}

ChainCase ratio_case(RatioBoundMethod m, ClaimKind claim, const GridSpec& g, const std::vector<ParamMap>& params)
{
    return {ratio_chain(m), claim, cross(g, params), {}};
}

PropertyDescriptor ratio_descriptor(std::string id, std::string group, ClaimKind claim, std::string reference,
                                    RatioBoundMethod m, std::vector<double> qs, ParamDomain qdom,
                                    std::string notes = {})
{
    auto d = descriptor(std::move(id), std::move(group), claim, std::move(reference), std::move(notes));
    d.domains = {{"x", positive()}, {"s", open_interval(0, 1)}, {"q", qdom}};
    d.defaults = {{"q", std::move(qs)}, {"s", s_ninths}};
    d.default_grid = ratio_grid();
    d.strict = claim == ClaimKind::chain_lt;
    d.build = [m, claim](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        inst.cases.push_back(
            ratio_case(m, claim, with_points(ratio_grid(), o), combos({{"q", values(v, "q")}, {"s", values(v, "s")}})));
        return inst;
    };
    return d;
}

// ---- g01 ----------------------------------------------------------------

struct GqTriple {
    double a;
    double b;
    double c;
};

// Admissible (a, b, c) for one branch; the identity b = a + 1, c = a
// (where g is constant) is left out.
std::vector<GqTriple> gq_triples(const ParamValues& v, bool reciprocal)
{
    std::vector<GqTriple> out;
    for (double a : values(v, "a")) {
        for (double b : values(v, "b")) {
            if (!(b > a && a + 1.0 >= b)) {
                continue;
            }
            for (double c : values(v, "c")) {
                const bool ok = reciprocal ? c >= a : c <= (a + b - 1.0) / 2.0;
                const bool identity = b == a + 1.0 && c == a;
                if (ok && !identity) {
                    out.push_back({a, b, c});
                }
            }
        }
    }
    return out;
}

Jet ln_gq_jet(double x, double a, double b, double c, double q, int order)
{
    return log_q_bracket_jet(x + c, q, order) * (a - b) + ln_gamma_jet(x + b, q, order) -
           ln_gamma_jet(x + a, q, order);
}

PropertyDescriptor thm5_descriptor(bool reciprocal)
{
    auto d = descriptor(
        reciprocal ? "thm5-recip-lcm" : "thm5-lcm", "g01", ClaimKind::log_completely_monotonic,
        reciprocal ? "1/g_q(x;a,b,c) is logarithmically completely monotonic on (max(-a,-c), inf) when c >= a, "
                     "a+1 >= b > a, q > 0"
                   : "g_q(x;a,b,c) = ((1-q^(x+c))/(1-q))^(a-b) Gamma_q(x+b)/Gamma_q(x+a) is logarithmically "
                     "completely monotonic on (max(-a,-c), inf) when c <= (a+b-1)/2, a+1 >= b > a, q > 0",
        "Triples violating a+1 >= b > a or the branch condition are skipped; the constant case b = a+1, c = a "
        "is skipped as well. Grid points are offsets x - max(-a,-c), recorded with x_shift.");
    d.domains = {{"x_offset", positive()},
                 {"a", {-inf, inf, false, false, false}},
                 {"b", {-inf, inf, false, false, false}},
                 {"c", {-inf, inf, false, false, false}},
                 {"q", positive()}};
    d.defaults = {{"a", {0.0, 0.3}},
                  {"b", {1.0, 1.1}},
                  {"c", reciprocal ? std::vector<double>{0.3, 0.5, 1.0} : std::vector<double>{-0.5, -0.25, 0.0, 0.2}},
                  {"q", {0.5, 1.0}}};
    d.default_order = 8;
    d.default_grid = GridSpec::logarithmic(1e-2, 100.0, 64);
    d.grid_variable = "x_offset";
    d.build = [reciprocal](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        const int K = order_or(8, o);
        for (const auto& t : gq_triples(v, reciprocal)) {
            for (double q : values(v, "q")) {
                const double lo = std::max(-t.a, -t.c);
                const double sign = reciprocal ? -1.0 : 1.0;
                // Sampled in y = x - lo so that lo <= 0 still gets a log grid.
                auto target = make_target(
                    label("ln g_q", {{"a", t.a}, {"b", t.b}, {"c", t.c}, {"q", q}}),
                    [t, q, sign, lo](double y, int order) {
                        return ln_gq_jet(y + lo, t.a, t.b, t.c, q, order) * sign;
                    },
                    0.0, Target::Form::log);
                inst.cases.push_back(sign_case(std::move(target), K, with_points(default_log_grid(), o),
                                               ClaimKind::log_completely_monotonic,
                                               {{"a", t.a}, {"b", t.b}, {"c", t.c}, {"q", q}, {"x_shift", lo}}));
            }
        }
        return inst;
    };
    return d;
}

// ---- g02 ----------------------------------------------------------------

// ln of the q-power lower (or upper) bound with a shifted exponent.
ChainExpr shifted_alzer(bool upper, double delta)
{
    return [upper, delta](const ParamPoint& p) {
        const double q = param(p, "q");
        const double s = param(p, "s");
        const double shift = upper ? bounds::alzer_v(q, s) - delta : bounds::alzer_u(q, s) + delta;
        return exact((1.0 - s) * bounds::ln_q_bracket(p.point + shift, q));
    };
}

PropertyDescriptor sharp_descriptor(bool upper)
{
    auto d = descriptor(
        upper ? "eq14-sharp-v" : "eq14-sharp-u", "g02", ClaimKind::chain_le,
        upper ? "Gamma_q(x+1)/Gamma_q(x+s) <= ((1-q^(x+v-delta))/(1-q))^(1-s) fails for some x in (0, 0.5] "
                "when delta > 0, since v(q,s) is best possible"
              : "((1-q^(x+u+delta))/(1-q))^(1-s) <= Gamma_q(x+1)/Gamma_q(x+s) fails for some x in (0, 0.5] "
                "when delta > 0, since u(q,s) is best possible",
        "Expected to record violations.");
    d.expected = Expectation::violation;
    d.domains = {{"x", half_open(0, 0.5)}, {"q", open_interval(0, 1)}, {"s", open_interval(0, 1)},
                 {"delta", positive()}};
    d.defaults = {{"q", {0.5}}, {"s", {0.5}}, {"delta", {0.05}}};
    d.default_grid = GridSpec::linear(0.0, 0.5, 50, true);
    d.build = [upper](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        const auto grid = with_points(GridSpec::linear(0.0, 0.5, 50, true), o);
        for (double delta : values(v, "delta")) {
            auto mid = [](const ParamPoint& p) {
                return bounds::ln_gamma_ratio(p.point, param(p, "s"), param(p, "q"));
            };
            std::vector<ChainExpr> exprs = upper ? std::vector<ChainExpr>{mid, shifted_alzer(true, delta)}
                                                 : std::vector<ChainExpr>{shifted_alzer(false, delta), mid};
            inst.cases.push_back(ChainCase{std::move(exprs), ClaimKind::chain_le,
                                           cross(grid, combos({{"q", values(v, "q")}, {"s", values(v, "s")}})),
                                           {}});
        }
        return inst;
    };
    return d;
}

// ---- g03 ----------------------------------------------------------------

PropertyDescriptor thm30_descriptor()
{
    auto d = descriptor("thm30-lcm", "g03", ClaimKind::log_completely_monotonic,
                        "F_n(x,q) = prod over subsets S of {1..n} of Gamma_q(x + sum_{k in S} a_k)^((-1)^|S|) is "
                        "logarithmically completely monotonic on (0, inf) for a_k > 0, 0 < q <= 1",
                        "a lists the a_k; each n uses its first n entries.");
    d.domains = {{"x", positive()}, {"n", integers(1, 3)}, {"a", positive()}, {"q", half_open(0, 1)}};
    d.defaults = {{"n", {1, 2, 3}}, {"a", {0.5, 1.0, 1.5}}, {"q", q_with_one}};
    d.default_order = 8;
    d.build = [](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        const auto& a = values(v, "a");
        for (int n : int_values(v, "n")) {
            if (n > static_cast<int>(a.size())) {
                throw UsageError("thm30-lcm: n exceeds the number of a values");
            }
            std::vector<std::pair<double, double>> terms;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                double shift = 0.0;
                int bits = 0;
                for (int k = 0; k < n; ++k) {
                    if (mask & (1u << k)) {
                        shift += a[static_cast<std::size_t>(k)];
                        ++bits;
                    }
                }
                terms.push_back({bits % 2 == 0 ? 1.0 : -1.0, shift});
            }
            for (double q : values(v, "q")) {
                auto target = make_target(
                    label("ln F_n", {{"n", double(n)}, {"q", q}}),
                    [terms, q](double x, int order) { return ln_gamma_sum(x, q, order, terms); }, 0.0,
                    Target::Form::log);
                inst.cases.push_back(sign_case(std::move(target), order_or(8, o), with_points(default_log_grid(), o),
                                               ClaimKind::log_completely_monotonic, {{"n", double(n)}, {"q", q}}));
            }
        }
        return inst;
    };
    return d;
}

// ---- g04, g05 -------------------------------------------------------------

struct MajorizedPair {
    std::vector<double> a;
    std::vector<double> b;
};

// Nondecreasing, nonnegative, prefix sums of a below those of b.
const std::vector<MajorizedPair> majorized_pairs{
    {{0.0, 0.5, 1.0}, {0.25, 0.5, 1.5}},
    {{0.0, 1.0}, {0.5, 0.5}},
    {{0.2, 0.4}, {0.3, 0.6}},
    {{0.0, 0.0, 2.0}, {0.5, 0.5, 3.0}},
};

using ScalarFamily = std::function<Jet(double, int)>; // jet of f(y + t) at y

std::vector<std::pair<double, double>> majorized_terms(const MajorizedPair& p)
{
    std::vector<std::pair<double, double>> terms;
    for (std::size_t i = 0; i < p.a.size(); ++i) {
        terms.push_back({1.0, p.a[i]});
        terms.push_back({-1.0, p.b[i]});
    }
    return terms;
}

Jet family_sum(const ScalarFamily& f, double x, int order, const std::vector<std::pair<double, double>>& terms)
{
    Jet out = Jet::constant(0.0, order);
    for (const auto& [w, shift] : terms) {
        out += f(x + shift, order) * w;
    }
    return out;
}

Jet x_log_x(double y, int order) { return Jet::variable(y, order) * log_jet(y, order); }
Jet neg_log(double y, int order) { return -log_jet(y, order); }

PropertyDescriptor majorization_descriptor(bool generic)
{
    auto d = descriptor(
        generic ? "thm1-lcm" : "cor1-lcm", generic ? "g04" : "g05", ClaimKind::log_completely_monotonic,
        generic ? "exp(sum_i f(x+a_i) - f(x+b_i)) is logarithmically completely monotonic on (0, inf) when f'' is "
                  "completely monotonic and (a_i), (b_i) are nondecreasing, nonnegative, with prefix sums of a "
                  "below those of b"
                : "prod_i Gamma_q(x+a_i)/Gamma_q(x+b_i) is logarithmically completely monotonic on (0, inf) for "
                  "nondecreasing nonnegative (a_i), (b_i) with prefix sums of a below those of b",
        generic ? "f runs over ln Gamma_q (q = 0.5, 1), x ln x and -ln x; the sequence pairs are checked for "
                  "majorization first."
                : "The sequence pairs are checked for majorization first.");
    d.domains = {{"x", positive()}, {"q", half_open(0, 1)}};
    d.defaults = {{"q", generic ? std::vector<double>{0.5, 1.0} : q_with_one}};
    d.default_order = 8;
    d.build = [generic](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        const int K = order_or(8, o);
        const auto grid = with_points(default_log_grid(), o);
        for (std::size_t i = 0; i < majorized_pairs.size(); ++i) {
            const auto& pair = majorized_pairs[i];
            inst.cases.push_back(MajorizationCase{pair.a, pair.b});
            const auto terms = majorized_terms(pair);
            std::vector<std::pair<std::string, ScalarFamily>> fams;
            for (double q : values(v, "q")) {
                fams.push_back({"lngamma_q q=" + fmt(q),
                                [q](double y, int order) { return ln_gamma_jet(y, q, order); }});
            }
            if (generic) {
                fams.push_back({"x ln x", x_log_x});
                fams.push_back({"-ln x", neg_log});
            }
            for (auto& [name, f] : fams) {
                auto target = make_target(
                    "pair " + std::to_string(i) + " f=" + name,
                    [f, terms](double x, int order) { return family_sum(f, x, order, terms); }, 0.0,
                    Target::Form::log);
                inst.cases.push_back(sign_case(std::move(target), K, grid, ClaimKind::log_completely_monotonic,
                                               {{"pair", double(i)}}));
            }
        }
        return inst;
    };
    return d;
}

// ---- g06 ----------------------------------------------------------------

struct Family {
    std::string name;
    ScalarFamily f;  // f(y + t)
    ScalarFamily fp; // f'(y + t)
};

// Midpoint form: -(f(x+1) - f(x+s) - (1-s) f'(x+(1+s)/2)).
// Trapezoid form: f(x+1) - f(x+s) - (1-s)/2 (f'(x+1) + f'(x+s)).
Jet hadamard_jet(const Family& fam, bool midpoint, double s, double x, int order)
{
    Jet diff = fam.f(x + 1.0, order) - fam.f(x + s, order);
    if (midpoint) {
        return -(diff - fam.fp(x + (1.0 + s) / 2.0, order) * (1.0 - s));
    }
    return diff - (fam.fp(x + 1.0, order) + fam.fp(x + s, order)) * ((1.0 - s) / 2.0);
}

PropertyDescriptor hadamard_descriptor(bool generic)
{
    auto d = descriptor(
        generic ? "thm2-lcm" : "cor2-lcm", "g06", ClaimKind::log_completely_monotonic,
        generic ? "exp(-(f(x+1) - f(x+s) - (1-s) f'(x+(1+s)/2))) and exp(f(x+1) - f(x+s) - (1-s)/2 (f'(x+1) + "
                  "f'(x+s))) are logarithmically completely monotonic on (0, inf) when f'' is completely "
                  "monotonic, 0 <= s <= 1"
                : "Gamma_q(x+s)/Gamma_q(x+1) exp((1-s) psi_q(x+(1+s)/2)) and Gamma_q(x+1)/Gamma_q(x+s) "
                  "exp(-(1-s)/2 (psi_q(x+1) + psi_q(x+s))) are logarithmically completely monotonic on (0, inf)",
        generic ? "f runs over x ln x and -ln x." : "");
    d.domains = {{"x", positive()}, {"s", {0.0, 1.0, true, false, false}}};
    d.defaults = {{"s", {0.0, 0.25, 0.5, 0.75}}};
    if (!generic) {
        d.domains["q"] = half_open(0, 1);
        d.defaults["q"] = q_with_one;
    }
    d.default_order = 8;
    d.build = [generic](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        std::vector<Family> fams;
        if (generic) {
            fams.push_back({"x ln x", x_log_x, [](double y, int order) { return log_jet(y, order) + 1.0; }});
            fams.push_back({"-ln x", neg_log, [](double y, int order) { return -power_jet(y, -1.0, order); }});
        } else {
            for (double q : values(v, "q")) {
                fams.push_back({"lngamma_q q=" + fmt(q),
                                [q](double y, int order) { return ln_gamma_jet(y, q, order); },
                                [q](double y, int order) { return psi_jet(0, y, q, order); }});
            }
        }
        for (const auto& fam : fams) {
            for (double s : values(v, "s")) {
                for (bool midpoint : {true, false}) {
                    auto target = make_target(
                        fam.name + (midpoint ? " midpoint" : " trapezoid") + " s=" + fmt(s),
                        [fam, midpoint, s](double x, int order) { return hadamard_jet(fam, midpoint, s, x, order); },
                        0.0, Target::Form::log);
                    inst.cases.push_back(sign_case(std::move(target), order_or(8, o),
                                                   with_points(default_log_grid(), o),
                                                   ClaimKind::log_completely_monotonic,
                                                   {{"s", s}, {"midpoint", midpoint ? 1.0 : 0.0}}));
                }
            }
        }
        return inst;
    };
    return d;
}

// ---- g09, g11 -------------------------------------------------------------

PropertyDescriptor psi_geo_concave()
{
    auto d = descriptor("psi-geo-concave", "g09", ClaimKind::chain_le,
                        "psi(x+1) + psi(x+s) <= 2 psi(sqrt((x+1)(x+s))) for x > 0, 0 < s < 1");
    d.domains = {{"x", positive()}, {"s", open_interval(0, 1)}};
    d.defaults = {{"s", s_ninths}};
    d.default_grid = ratio_grid();
    d.build = [](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        auto lhs = [](const ParamPoint& p) { return sum(psi_enc(p.point + 1.0), psi_enc(p.point + param(p, "s"))); };
        auto rhs = [](const ParamPoint& p) {
            return scale(psi_enc(std::sqrt((p.point + 1.0) * (p.point + param(p, "s")))), 2.0);
        };
        inst.cases.push_back(
            ChainCase{{lhs, rhs}, ClaimKind::chain_le, cross(with_points(ratio_grid(), o), combos({{"s", values(v, "s")}})), {}});
        return inst;
    };
    return d;
}

PropertyDescriptor noncompare()
{
    auto d = descriptor("noncompare", "g11", ClaimKind::chain_lt,
                        "psi(1) + psi(s) < 2 psi(sqrt(s)) for 0 < s < 1, while psi(x+1) + psi(x+s) - "
                        "2 psi(x+sqrt(s)) > 0 for x > 1",
                        "The first chain is indexed by s, the second by x with s as a parameter.");
    d.domains = {{"s", open_interval(0, 1)}, {"x", open_interval(1, inf)}};
    d.defaults = {{"s", s_ninths}, {"x", {1.5, 2.0, 5.0}}};
    d.default_grid = GridSpec::linear(0.1, 0.9, 9);
    d.grid_variable = "s";
    d.strict = true;
    d.build = [](const ParamValues& v, const BuildOptions&) {
        Instance inst;
        std::vector<ParamPoint> by_s;
        for (double s : values(v, "s")) {
            by_s.push_back({s, {}});
        }
        auto a_lhs = [](const ParamPoint& p) { return sum(psi_enc(1.0), psi_enc(p.point)); };
        auto a_rhs = [](const ParamPoint& p) { return scale(psi_enc(std::sqrt(p.point)), 2.0); };
        inst.cases.push_back(ChainCase{{a_lhs, a_rhs}, ClaimKind::chain_lt, by_s, {}});

        std::vector<ParamPoint> by_x;
        for (double x : values(v, "x")) {
            for (double s : values(v, "s")) {
                by_x.push_back({x, {{"s", s}}});
            }
        }
        auto b_lhs = [](const ParamPoint& p) { return scale(psi_enc(p.point + std::sqrt(param(p, "s"))), 2.0); };
        auto b_rhs = [](const ParamPoint& p) { return sum(psi_enc(p.point + 1.0), psi_enc(p.point + param(p, "s"))); };
        inst.cases.push_back(ChainCase{{b_lhs, b_rhs}, ClaimKind::chain_lt, by_x, {}});
        return inst;
    };
    return d;
}

// ---- g12 ----------------------------------------------------------------

PropertyDescriptor thm8_descriptor()
{
    auto d = descriptor("thm8-lcm", "g12", ClaimKind::log_completely_monotonic,
                        "g_q(x; s, 1, u(q,s)) is logarithmically completely monotonic on (0, inf) for 0 < s < 1, "
                        "0 < q < 1, with u(q,s) = ln((q^s - q)/((1-s)(1-q)))/ln q");
    d.domains = {{"x", positive()}, {"q", open_interval(0, 1)}, {"s", open_interval(0, 1)}};
    d.defaults = {{"q", q_sub_one}, {"s", {0.1, 0.3, 0.5, 0.7, 0.9}}};
    d.default_order = 8;
    d.build = [](const ParamValues& v, const BuildOptions& o) {
        Instance inst;
        for (const auto& pm : combos({{"q", values(v, "q")}, {"s", values(v, "s")}})) {
            const double q = pm.at("q");
            const double s = pm.at("s");
            const double u = bounds::alzer_u(q, s);
            auto target = make_target(
                label("ln g_q(x;s,1,u)", pm),
                [q, s, u](double x, int order) { return ln_gq_jet(x, s, 1.0, u, q, order); }, 0.0,
                Target::Form::log);
            inst.cases.push_back(sign_case(std::move(target), order_or(8, o), with_points(default_log_grid(), o),
                                           ClaimKind::log_completely_monotonic, pm));
        }
        return inst;
    };
    return d;
}

std::vector<ParamPoint> by_n(const ParamValues& v)
{
    std::vector<ParamPoint> pts;
    for (const auto& pm : combos({{"q", values(v, "q")}, {"s", values(v, "s")}})) {
        for (int n : int_values(v, "n")) {
            pts.push_back({double(n), pm});
        }
    }
    return pts;
}

PropertyDescriptor lemma10_descriptor()
{
    auto d = descriptor("lemma10-ineq", "g12", ClaimKind::chain_le,
                        "((q^s - q)/((1-s)(1-q)))^n >= (q^(ns) - q^n)/((1-s)(1-q^n)) for 0 < s, q < 1, n >= 1");
    d.domains = {{"n", integers(1, inf)}, {"q", open_interval(0, 1)}, {"s", open_interval(0, 1)}};
    d.defaults = {{"n", int_range(1, 20)}, {"q", s_ninths}, {"s", s_ninths}};
    d.default_grid = GridSpec::linear(1, 20, 20);
    d.grid_variable = "n";
    d.build = [](const ParamValues& v, const BuildOptions&) {
        Instance inst;
        auto rhs = [](const ParamPoint& p) {
            return exact(bounds::lemma10_lhs_rhs(param(p, "s"), param(p, "q"), int(p.point)).lower);
        };
        auto lhs = [](const ParamPoint& p) {
            return exact(bounds::lemma10_lhs_rhs(param(p, "s"), param(p, "q"), int(p.point)).upper);
        };
        inst.cases.push_back(ChainCase{{rhs, lhs}, ClaimKind::chain_le, by_n(v), {}});
        return inst;
    };
    return d;
}

PropertyDescriptor wqn_descriptor()
{
    auto d = descriptor("wqn-nonneg", "g12", ClaimKind::chain_le,
                        "w_{q,n}(s) = q^n - q^(ns) + (1-s) q^(n u(q,s)) (1-q^n) >= 0 for 0 < s, q < 1, n >= 1");
    d.domains = {{"n", integers(1, inf)}, {"q", open_interval(0, 1)}, {"s", open_interval(0, 1)}};
    d.defaults = {{"n", int_range(1, 20)}, {"q", s_ninths}, {"s", s_ninths}};
    d.default_grid = GridSpec::linear(1, 20, 20);
    d.grid_variable = "n";
    d.build = [](const ParamValues& v, const BuildOptions&) {
        Instance inst;
        auto w = [](const ParamPoint& p) { return exact(bounds::w_qn(param(p, "s"), param(p, "q"), int(p.point))); };
        inst.cases.push_back(ChainCase{{constant(0.0), w}, ClaimKind::chain_le, by_n(v), {}});
        return inst;
    };
    return d;
}

} // namespace

void register_ratio_entries(std::vector<PropertyDescriptor>& out)
{
    out.push_back(thm5_descriptor(false));
    out.push_back(thm5_descriptor(true));
    out.push_back(ratio_descriptor("im-bounds", "g01", ClaimKind::chain_lt,
                                   "((1-q^(x+s/2))/(1-q))^(1-s) < Gamma_q(x+1)/Gamma_q(x+s) < "
                                   "((1-q^(x+s))/(1-q))^(1-s) for 0 < q < 1, 0 < s < 1, x > 0",
                                   RatioBoundMethod::im_midpoint, q_sub_one, open_interval(0, 1),
                                   "Compared in log space."));
    out.push_back(ratio_descriptor(
        "eq14-bounds", "g02", ClaimKind::chain_lt,
        "((1-q^(x+u))/(1-q))^(1-s) < Gamma_q(x+1)/Gamma_q(x+s) < ((1-q^(x+v))/(1-q))^(1-s) with "
        "u = ln((q^s-q)/((1-s)(1-q)))/ln q and v = ln(1-(1-q) Gamma_q(s)^(1/(s-1)))/ln q",
        RatioBoundMethod::alzer_uv, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}, open_interval(0, 1),
        "Compared in log space over the 9 x 9 x 30 (q, s, x) grid."));
    out.push_back(sharp_descriptor(false));
    out.push_back(sharp_descriptor(true));
    out.push_back(thm30_descriptor());
    out.push_back(majorization_descriptor(true));
    out.push_back(majorization_descriptor(false));
    out.push_back(hadamard_descriptor(true));
    out.push_back(hadamard_descriptor(false));
    out.push_back(ratio_descriptor("thm3-chain", "g07", ClaimKind::chain_le,
                                   "exp((1-s)/2 (psi_q(x+1) + psi_q(x+s))) <= Gamma_q(x+1)/Gamma_q(x+s) <= "
                                   "exp((1-s) psi_q(x+(1+s)/2)) for x > 0, 0 <= s <= 1",
                                   RatioBoundMethod::psi_average, q_with_one, positive()));
    out.push_back(ratio_descriptor("merkle-chain", "g08", ClaimKind::chain_lt,
                                   "exp((1-s)/2 (psi(x+1) + psi(x+s))) < Gamma(x+1)/Gamma(x+s) < "
                                   "exp((1-s) psi(x+(1+s)/2)) for x > 0, 0 < s < 1",
                                   RatioBoundMethod::merkle, {1.0}, closed_interval(1, 1)));
    out.push_back(ratio_descriptor("refined-chain", "g09", ClaimKind::chain_le,
                                   "exp((1-s) psi(sqrt((x+1)(x+s)))) <= Gamma(x+1)/Gamma(x+s) <= "
                                   "exp((1-s) psi(x+(1+s)/2)), and the same with psi at L_0(x+1,x+s) and "
                                   "L_1(x+1,x+s)",
                                   RatioBoundMethod::geomean_refined, {1.0}, closed_interval(1, 1),
                                   "The logarithmic-mean chain is a second case of this entry."));
    {
        auto& d = out.back();
        d.build = [](const ParamValues& v, const BuildOptions& o) {
            Instance inst;
            const auto grid = with_points(ratio_grid(), o);
            const auto params = combos({{"q", values(v, "q")}, {"s", values(v, "s")}});
            inst.cases.push_back(ratio_case(RatioBoundMethod::geomean_refined, ClaimKind::chain_le, grid, params));
            inst.cases.push_back(ratio_case(RatioBoundMethod::logmean_refined, ClaimKind::chain_le, grid, params));
            return inst;
        };
    }
    out.push_back(psi_geo_concave());
    out.push_back(ratio_descriptor("kershaw-chain", "g10", ClaimKind::chain_le,
                                   "exp((1-s) psi(x+sqrt(s))) <= Gamma(x+1)/Gamma(x+s) <= exp((1-s) psi(x+(1+s)/2)) "
                                   "for x > 0, 0 <= s <= 1",
                                   RatioBoundMethod::kershaw, {1.0}, closed_interval(1, 1)));
    out.push_back(noncompare());
    out.push_back(thm8_descriptor());
    out.push_back(lemma10_descriptor());
    out.push_back(wqn_descriptor());
}

} // namespace qgk::corpus
