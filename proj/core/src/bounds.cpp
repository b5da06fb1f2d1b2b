#include "qgk/bounds.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qgk/errors.hpp"
#include "qgk/specfun.hpp"
#include "series.hpp"

namespace qgk::bounds {

namespace sf = qgk::specfun;

namespace {

constexpr std::array<std::pair<RatioBoundMethod, std::string_view>, 7> method_names{{
    {RatioBoundMethod::alzer_uv, "alzer_uv"},
    {RatioBoundMethod::im_midpoint, "im_midpoint"},
    {RatioBoundMethod::psi_average, "psi_average"},
    {RatioBoundMethod::merkle, "merkle"},
    {RatioBoundMethod::kershaw, "kershaw"},
    {RatioBoundMethod::logmean_refined, "logmean_refined"},
    {RatioBoundMethod::geomean_refined, "geomean_refined"},
}};

constexpr std::array<std::pair<AuxFunction, std::string_view>, 6> aux_names{{
    {AuxFunction::f_alpha, "f_alpha"},
    {AuxFunction::G_c, "G_c"},
    {AuxFunction::f_ILM, "f_ILM"},
    {AuxFunction::f_qpow, "f_qpow"},
    {AuxFunction::g_AG, "g_AG"},
    {AuxFunction::beta_scaled, "beta_scaled"},
}};

double psi(double x, double q) { return sf::psi_q(0, x, q).value; }
double lgq(double x, double q) { return sf::ln_gamma_q(x, q).value; }

void require_q(double q)
{
    if (!(q > 0.0) || !std::isfinite(q)) {
        throw DomainError("q must be positive and finite");
    }
}

void require_unit_open(double s, const char* what)
{
    if (!(s > 0.0 && s < 1.0)) {
        throw DomainError(std::string(what) + " must lie in (0, 1)");
    }
}

double factorial(int n)
{
    double f = 1.0;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

double param(const ParamMap& params, const char* name)
{
    auto it = params.find(name);
    if (it == params.end()) {
        throw UsageError(std::string("missing parameter '") + name + "'");
    }
    return it->second;
}

} // namespace

std::string_view to_string(RatioBoundMethod m)
{
    for (const auto& [k, v] : method_names) {
        if (k == m) {
            return v;
        }
    }
    return "unknown";
}

RatioBoundMethod parse_method(std::string_view name)
{
    for (const auto& [k, v] : method_names) {
        if (v == name) {
            return k;
        }
    }
    throw UsageError("unknown ratio bound method '" + std::string(name) + "'");
}

std::string_view to_string(AuxFunction f)
{
    for (const auto& [k, v] : aux_names) {
        if (k == f) {
            return v;
        }
    }
    return "unknown";
}

AuxFunction parse_aux(std::string_view name)
{
    for (const auto& [k, v] : aux_names) {
        if (v == name) {
            return k;
        }
    }
    throw UsageError("unknown auxiliary function '" + std::string(name) + "'");
}

double ln_q_bracket(double y, double q)
{
    require_q(q);
    if (!(y > 0.0)) {
        throw DomainError("ln_q_bracket: argument must be positive");
    }
    if (q == 1.0) {
        return std::log(y);
    }
    const double L = std::log(q);
    if (q < 1.0) {
        return sf::log1mexp(y * L) - sf::log1mexp(L);
    }
    return std::log(std::expm1(y * L)) - std::log(std::expm1(L));
}

double alzer_u(double q, double s)
{
    require_unit_open(s, "s");
    if (!(q > 0.0 && q <= 1.0)) {
        throw DomainError("alzer_u: q must lie in (0, 1]");
    }
    if (q == 1.0) {
        return 0.5 * s;
    }
    // (q^s - q)/((1-s)(1-q)) = q^s expm1((1-s)L) / ((1-s) expm1(L))
    const double L = std::log(q);
    const double r = std::expm1((1.0 - s) * L) / ((1.0 - s) * std::expm1(L));
    if (!(r > 0.0)) {
        throw DomainError("alzer_u: non-positive logarithm argument");
    }
    return s + std::log(r) / L;
}

double alzer_v(double q, double s)
{
    require_unit_open(s, "s");
    if (!(q > 0.0 && q <= 1.0)) {
        throw DomainError("alzer_v: q must lie in (0, 1]");
    }
    if (q == 1.0) {
        return std::exp(sf::ln_gamma(s).value / (s - 1.0));
    }
    const double L = std::log(q);
    const double G = std::exp(sf::ln_q_gamma(s, QParam(q)).value / (s - 1.0));
    const double arg = 1.0 + std::expm1(L) * G;
    if (!(arg > 0.0)) {
        throw DomainError("alzer_v: non-positive logarithm argument");
    }
    return std::log(arg) / L;
}

Enclosure ln_gamma_ratio(double x, double s, double q)
{
    const Enclosure a = sf::ln_gamma_q(x + 1.0, q);
    const Enclosure b = sf::ln_gamma_q(x + s, q);
    Enclosure e;
    e.value = a.value - b.value;
    e.abs_error = a.abs_error + b.abs_error + detail::mach_eps * (std::abs(a.value) + std::abs(b.value));
    e.terms_used = a.terms_used + b.terms_used;
    return e;
}

bool method_accepts(RatioBoundMethod method, double q)
{
    switch (method) {
    case RatioBoundMethod::alzer_uv:
    case RatioBoundMethod::im_midpoint:
        return q > 0.0 && q <= 1.0;
    case RatioBoundMethod::psi_average:
        return q > 0.0 && std::isfinite(q);
    case RatioBoundMethod::merkle:
    case RatioBoundMethod::kershaw:
    case RatioBoundMethod::logmean_refined:
    case RatioBoundMethod::geomean_refined:
        return q == 1.0;
    }
    return false;
}

BoundPair ratio_log_bounds(double x, double s, double q, RatioBoundMethod method)
{
    if (!method_accepts(method, q)) {
        throw UsageError("method " + std::string(to_string(method)) + " does not accept q = " +
                         std::to_string(q));
    }
    detail::require_positive_finite(x, "ratio_bounds");
    require_unit_open(s, "s");
    const double w = 1.0 - s;
    BoundPair b;
    b.method = method;
    switch (method) {
    case RatioBoundMethod::alzer_uv:
        b.lower = w * ln_q_bracket(x + alzer_u(q, s), q);
        b.upper = w * ln_q_bracket(x + alzer_v(q, s), q);
        break;
    case RatioBoundMethod::im_midpoint:
        b.lower = w * ln_q_bracket(x + 0.5 * s, q);
        b.upper = w * ln_q_bracket(x + s, q);
        break;
    case RatioBoundMethod::psi_average:
    case RatioBoundMethod::merkle:
        b.lower = 0.5 * w * (psi(x + 1.0, q) + psi(x + s, q));
        b.upper = w * psi(x + 0.5 * (1.0 + s), q);
        break;
    case RatioBoundMethod::kershaw:
        b.lower = w * psi(x + std::sqrt(s), 1.0);
        b.upper = w * psi(x + 0.5 * (1.0 + s), 1.0);
        break;
    case RatioBoundMethod::logmean_refined:
        b.lower = w * psi(sf::log_mean({0.0}, x + 1.0, x + s), 1.0);
        b.upper = w * psi(sf::log_mean({1.0}, x + 1.0, x + s), 1.0);
        break;
    case RatioBoundMethod::geomean_refined:
        b.lower = w * psi(std::sqrt((x + 1.0) * (x + s)), 1.0);
        b.upper = w * psi(x + 0.5 * (1.0 + s), 1.0);
        break;
    }
    return b;
}

BoundPair ratio_bounds(double x, double s, double q, RatioBoundMethod method)
{
    BoundPair b = ratio_log_bounds(x, s, q, method);
    b.lower = std::exp(b.lower);
    b.upper = std::exp(b.upper);
    return b;
}

double ln_g_q_function(double x, double a, double b, double c, double q)
{
    require_q(q);
    if (!(x > std::max(-a, -c))) {
        throw DomainError("g_q: x must exceed max(-a, -c)");
    }
    return (a - b) * ln_q_bracket(x + c, q) + lgq(x + b, q) - lgq(x + a, q);
}

double g_q_function(double x, double a, double b, double c, double q)
{
    return std::exp(ln_g_q_function(x, a, b, c, q));
}

BoundPair keckic_vasic_log_bounds(double a, double b)
{
    detail::require_positive_finite(a, "keckic_vasic_bounds");
    if (!(b > a) || !std::isfinite(b)) {
        throw UsageError("keckic_vasic_bounds: requires b > a");
    }
    const double la = std::log(a);
    const double lb = std::log(b);
    BoundPair p;
    p.lower = (b - 1.0) * lb - (a - 1.0) * la + a - b;
    p.upper = (b - 0.5) * lb - (a - 0.5) * la + a - b;
    return p;
}

BoundPair keckic_vasic_bounds(double a, double b)
{
    BoundPair p = keckic_vasic_log_bounds(a, b);
    p.lower = std::exp(p.lower);
    p.upper = std::exp(p.upper);
    return p;
}

Bracket ball_thm51_log(int n)
{
    if (n < 1) {
        throw UsageError("ball bounds: n must be at least 1");
    }
    Bracket r;
    r.value = 2.0 * sf::ln_unit_ball_volume(n).value - sf::ln_unit_ball_volume(n - 1).value -
              sf::ln_unit_ball_volume(n + 1).value;
    r.lower = 0.5 * std::log1p(1.0 / (n + 1.0));
    r.upper = 0.5 * std::log1p(1.0 / (n + 0.5));
    return r;
}

Bracket ball_eq13_log(int n)
{
    if (n < 2) {
        throw UsageError("ball bounds: the psi(n) bracket needs n >= 2");
    }
    const double alpha = 1.0;
    const double beta = 2.0 * (std::log(8.0 / std::numbers::pi) + sf::euler_gamma - 1.0);
    const double base = -std::log(2.0 * std::numbers::pi) + sf::digamma(n).value;
    Bracket r;
    r.value = 2.0 * (sf::ln_unit_ball_volume(n - 1).value - sf::ln_unit_ball_volume(n).value);
    r.lower = base + alpha / n;
    r.upper = base + beta / n;
    return r;
}

BallRatioBounds ball_ratio_bounds(int n)
{
    BallRatioBounds out;
    const Bracket t = ball_thm51_log(n);
    out.thm51 = {std::exp(t.lower), std::exp(t.upper), std::nullopt};
    out.thm51_exact = std::exp(t.value);
    if (n >= 2) {
        const Bracket e = ball_eq13_log(n);
        out.eq13 = BoundPair{std::exp(e.lower), std::exp(e.upper), std::nullopt};
        out.eq13_exact = std::exp(e.value);
    }
    return out;
}

double f_alpha(double x, double alpha)
{
    detail::require_positive_finite(x, "f_alpha");
    if (!(alpha >= 0.0)) {
        throw DomainError("f_alpha: alpha must be nonnegative");
    }
    return -sf::ln_gamma(x).value + (x - 0.5) * std::log(x) - x +
           sf::polygamma(1, x + alpha).value / 12.0;
}

double G_c(double x, double c)
{
    detail::require_positive_finite(x, "G_c");
    if (!(c >= 0.0)) {
        throw DomainError("G_c: c must be nonnegative");
    }
    return sf::ln_gamma(x).value - x * std::log(x) + x - 0.5 * std::log(2.0 * std::numbers::pi) +
           0.5 * sf::digamma(x + c).value;
}

double ln_f_ilm(double x, double alpha)
{
    detail::require_positive_finite(x, "f_ILM");
    return alpha * std::log(x) + sf::ln_gamma(x).value + x - x * std::log(x);
}

double ln_f_qpow(double x, double q)
{
    if (!(q > 0.0 && q < 1.0)) {
        throw DomainError("f_qpow: q must lie in (0, 1)");
    }
    return x * std::log1p(-q) + sf::ln_q_gamma(x, QParam(q)).value;
}

double ln_g_ag(double x, double a, double q)
{
    if (!(q > 0.0 && q <= 1.0)) {
        throw DomainError("g_AG: q must lie in (0, 1]");
    }
    detail::require_positive_finite(a, "g_AG");
    // the (1-q)^x factors cancel
    return lgq(x, q) + lgq(x + 2.0 * a, q) - 2.0 * lgq(x + a, q);
}

double ln_beta_scaled(double x, double beta, double q)
{
    require_q(q);
    detail::require_positive_finite(beta, "beta_scaled");
    const double qb = q == 1.0 ? 1.0 : std::exp(std::log(q) / beta);
    return lgq(x, q) - lgq(beta * x, qb) / beta;
}

double auxiliary_function(AuxFunction f, double x, const ParamMap& params)
{
    switch (f) {
    case AuxFunction::f_alpha:
        return f_alpha(x, param(params, "alpha"));
    case AuxFunction::G_c:
        return G_c(x, param(params, "c"));
    case AuxFunction::f_ILM:
        return std::exp(ln_f_ilm(x, param(params, "alpha")));
    case AuxFunction::f_qpow:
        return std::exp(ln_f_qpow(x, param(params, "q")));
    case AuxFunction::g_AG:
        return std::exp(ln_g_ag(x, param(params, "a"), param(params, "q")));
    case AuxFunction::beta_scaled:
        return std::exp(ln_beta_scaled(x, param(params, "beta"), param(params, "q")));
    }
    throw UsageError("unknown auxiliary function");
}

void PolyProductSpec::validate() const
{
    if (!(p > m && m >= n && n > q_idx && q_idx >= 0)) {
        throw UsageError("poly_product: indices must satisfy p > m >= n > q_idx >= 0");
    }
    if (m + n != p + q_idx) {
        throw UsageError("poly_product: indices must satisfy m + n = p + q_idx");
    }
}

PolyConstants poly_constants(int p, int m, int n, int q_idx)
{
    PolyProductSpec{p, m, n, q_idx, 0.0}.validate();
    PolyConstants k;
    const double num = factorial(m - 1) * factorial(n - 1);
    k.c = q_idx >= 1 ? num / (factorial(p - 1) * factorial(q_idx - 1)) : num / factorial(p - 1);
    k.d = factorial(m) * factorial(n) / (factorial(p) * factorial(q_idx));
    return k;
}

double poly_product(const PolyProductSpec& spec, double x)
{
    spec.validate();
    detail::require_positive_finite(x, "poly_product");
    auto psi_n = [x](int k) { return k == 0 ? -1.0 : sf::polygamma(k, x).value; };
    const double sign_mn = ((spec.m + spec.n) % 2 == 0) ? 1.0 : -1.0;
    const double sign_pq = ((spec.p + spec.q_idx) % 2 == 0) ? 1.0 : -1.0;
    return sign_mn * psi_n(spec.m) * psi_n(spec.n) -
           spec.c * sign_pq * psi_n(spec.p) * psi_n(spec.q_idx);
}

double w_qn(double s, double q, int n)
{
    require_unit_open(s, "s");
    require_unit_open(q, "q");
    if (n < 1) {
        throw DomainError("w_qn: n must be at least 1");
    }
    const double u = alzer_u(q, s);
    return std::pow(q, n) - std::pow(q, n * s) + (1.0 - s) * std::pow(q, n * u) * (1.0 - std::pow(q, n));
}

BoundPair lemma10_lhs_rhs(double s, double q, int n)
{
    require_unit_open(s, "s");
    require_unit_open(q, "q");
    if (n < 1) {
        throw DomainError("lemma10: n must be at least 1");
    }
    const double L = std::log(q);
    // (q^s - q)/((1-s)(1-q)) in the cancellation-free form used by alzer_u
    const double base = std::pow(q, s) * std::expm1((1.0 - s) * L) / ((1.0 - s) * std::expm1(L));
    const double lhs = std::pow(base, n);
    const double rhs = std::pow(q, n * s) * std::expm1(n * (1.0 - s) * L) / ((1.0 - s) * std::expm1(n * L));
    return {rhs, lhs, std::nullopt};
}

double a_poly(double t, int m, int n, double c)
{
    if (!(m > n && n >= 1)) {
        throw UsageError("a_poly: requires m > n >= 1");
    }
    if (!(c > 0.0 && c < 1.0)) {
        throw UsageError("a_poly: requires 0 < c < 1");
    }
    if (!(t >= 1.0)) {
        throw DomainError("a_poly: requires t >= 1");
    }
    return std::pow(t, m - n) + std::pow(t, n) - c * (1.0 + std::pow(t, m));
}

double a_poly_root(int m, int n, double c)
{
    double lo = 1.0;
    double hi = 2.0;
    if (!(a_poly(lo, m, n, c) > 0.0)) {
        throw ConvergenceError("a_poly_root: a(1) is not positive");
    }
    while (a_poly(hi, m, n, c) >= 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 0x1p60) {
            throw ConvergenceError("a_poly_root: bracket growth exceeded 2^60");
        }
    }
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (a_poly(mid, m, n, c) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

int a_poly_sign_changes(int m, int n, double c, double lo, double hi, int points)
{
    if (points < 2 || !(hi > lo)) {
        throw UsageError("a_poly_sign_changes: need at least 2 points on a nonempty interval");
    }
    int changes = 0;
    int prev = 0;
    for (int i = 0; i < points; ++i) {
        const double t = lo + (hi - lo) * i / (points - 1);
        const double v = a_poly(t, m, n, c);
        const int sgn = v > 0.0 ? 1 : (v < 0.0 ? -1 : 0);
        if (sgn != 0) {
            if (prev != 0 && sgn != prev) {
                ++changes;
            }
            prev = sgn;
        }
    }
    return changes;
}

PsiPairValues psi_pair_inequality(double x, double c, PsiPairVariant variant, std::optional<double> q)
{
    detail::require_positive_finite(x, "psi_pair_inequality");
    detail::require_positive_finite(c, "psi_pair_inequality");
    if (c == 1.0) {
        throw DomainError("psi_pair_inequality: c = 1 is excluded");
    }
    PsiPairValues v;
    if (variant == PsiPairVariant::classical) {
        const double d = sf::digamma(x + c).value - sf::digamma(x).value;
        v.lhs = d * d / c;
        v.mid = sf::polygamma(1, x).value - sf::polygamma(1, x + c).value;
        v.rhs = d * d;
        return v;
    }
    if (!q) {
        throw UsageError("psi_pair_inequality: the q variant needs q");
    }
    require_unit_open(*q, "q");
    const QParam qp(*q);
    const double d = sf::q_polygamma_difference(0, x, c, qp).value;
    const double d1 = sf::q_polygamma_difference(1, x, c, qp).value;
    const double L = std::log(*q);
    v.lhs = std::expm1(L) / std::expm1(c * L) * d * d;
    v.mid = -std::exp(x * L) * d1;
    v.rhs = d * d;
    return v;
}

double cor51_expr(double x, double q)
{
    detail::require_positive_finite(x, "cor51_expr");
    require_unit_open(q, "q");
    const double L = std::log(q);
    const double px = std::exp(x * L);
    if (px > 0.05) {
        const auto ps = sf::q_polygamma_all(2, x, QParam(q));
        return ps[1].value * ps[1].value + (-L * px / -std::expm1(L)) * ps[2].value;
    }
    // L^4 sum_{N>=4} p^{Nx} c_N, c_N = sum_i i(N-i)/((1-p^i)(1-p^{N-i})) - (N-1)^2/((1-p)(1-p^{N-1}))
    auto om = [L](int k) { return -std::expm1(k * L); };
    detail::SeriesSum s;
    for (int N = 4; N < 400; ++N) {
        double cn = 0.0;
        for (int i = 1; i < N; ++i) {
            cn += static_cast<double>(i) * (N - i) / (om(i) * om(N - i));
        }
        cn -= static_cast<double>(N - 1) * (N - 1) / (om(1) * om(N - 1));
        const double t = std::exp(N * x * L) * cn;
        s.add(t);
        const double rho = std::pow((N + 1.0) / N, 3) * px;
        const double bound = std::exp(N * x * L) * std::pow(N, 3) / (om(1) * om(1)) * rho / (1.0 - rho);
        if (bound <= 1e-16 * std::abs(s.value())) {
            break;
        }
    }
    return L * L * L * L * s.value();
}

LogSides cor5_log_sides(double x, double y, double z, double alpha, double q)
{
    if (alpha == 1.0) {
        throw UsageError("cor5: alpha = 1 makes both sides equal");
    }
    detail::require_positive_finite(alpha, "cor5");
    detail::require_positive_finite(x, "cor5");
    detail::require_positive_finite(y, "cor5");
    detail::require_positive_finite(z, "cor5");
    require_q(q);
    const double qa = q == 1.0 ? 1.0 : std::exp(alpha * std::log(q));
    LogSides r;
    r.lhs = alpha * (lgq(z + x, qa) + lgq(z + y, qa) - lgq(x + y + z, qa) - lgq(z, qa));
    r.rhs = lgq(alpha * (z + x), q) + lgq(alpha * (z + y), q) - lgq(alpha * z, q) -
            lgq(alpha * (x + y + z), q);
    return r;
}

LogSides cor5_inequality(double x, double y, double z, double alpha, double q)
{
    LogSides r = cor5_log_sides(x, y, z, alpha, q);
    r.lhs = std::exp(r.lhs);
    r.rhs = std::exp(r.rhs);
    return r;
}

} // namespace qgk::bounds
