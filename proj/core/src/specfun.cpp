#include "qgk/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qgk/errors.hpp"
#include "series.hpp"

namespace qgk {

void TruncationPolicy::validate() const
{
    if (!(eps > 0.0 && eps < 1.0)) {
        throw UsageError("TruncationPolicy: eps must lie in (0, 1)");
    }
    if (max_terms < 1) {
        throw UsageError("TruncationPolicy: max_terms must be at least 1");
    }
}

} // namespace qgk

namespace qgk::specfun {

using detail::mach_eps;
using detail::SeriesSum;

namespace {

constexpr double half_ln_2pi = 0.91893853320467274178;

int shift_count(double x, double zmin)
{
    return x < zmin ? static_cast<int>(std::ceil(zmin - x)) : 0;
}

void check_finite(const Enclosure& e, const char* fn)
{
    if (!std::isfinite(e.value) || !std::isfinite(e.abs_error)) {
        throw DomainError(std::string(fn) + ": result not representable in double precision");
    }
}

// Orders 0..max_order at x, shifting up to z >= zmin first.
std::vector<Enclosure> shifted_polygamma(int max_order, double x, double zmin,
                                         const TruncationPolicy& policy)
{
    const int N = shift_count(x, zmin);
    const double z = x + N;
    const double zinv = 1.0 / z;
    const double z2inv = zinv * zinv;

    std::vector<Enclosure> out(static_cast<std::size_t>(max_order) + 1);

    // sum_{k<N} (x+k)^{-n-1} for every n, accumulated per order.
    std::vector<SeriesSum> shift(out.size());
    for (int k = 0; k < N; ++k) {
        const double inv = 1.0 / (x + k);
        double p = inv;
        for (int n = 0; n <= max_order; ++n) {
            shift[static_cast<std::size_t>(n)].add(p);
            p *= inv;
        }
    }

    // digamma at z: ln z - 1/(2z) - sum B_2k / (2k z^2k)
    {
        const double main = std::log(z) - 0.5 * zinv;
        SeriesSum corr;
        double pw = z2inv;
        double tail = 0.0;
        int k = 1;
        for (; k <= 30; ++k) {
            const double t = -detail::bernoulli_2k[k - 1] / (2.0 * k) * pw;
            if (std::abs(t) <= policy.eps * std::abs(main)) {
                tail = std::abs(t);
                break;
            }
            corr.add(t);
            pw *= z2inv;
        }
        if (k > 30) {
            detail::throw_convergence("digamma asymptotic series", 30);
        }
        const double sh = shift[0].value();
        const double value = main + corr.value() - sh;
        const double abs_sum = std::abs(main) + corr.abs_sum() + shift[0].abs_sum();
        out[0] = detail::make_enclosure(value, tail, N + k, abs_sum);
    }

    double fact_nm1 = 1.0; // (n-1)!
    for (int n = 1; n <= max_order; ++n) {
        if (n > 1) {
            fact_nm1 *= (n - 1);
        }
        const double fact_n = fact_nm1 * n;
        // (n-1)!/z^n
        double lead = fact_nm1 * std::pow(zinv, n);
        // 1 + n/(2z) + sum_k B_2k C(2k+n-1, n-1) z^-2k
        SeriesSum series;
        series.add(1.0);
        series.add(0.5 * n * zinv);
        double binom = 1.0;
        double pw = 1.0;
        double tail = 0.0;
        int k = 1;
        for (; k <= 30; ++k) {
            binom *= static_cast<double>(n + 2 * k - 2) * (n + 2 * k - 1) / ((2.0 * k - 1) * (2.0 * k));
            pw *= z2inv;
            const double t = detail::bernoulli_2k[k - 1] * binom * pw;
            if (std::abs(t) <= policy.eps) {
                tail = std::abs(t);
                break;
            }
            series.add(t);
        }
        if (k > 30) {
            detail::throw_convergence("polygamma asymptotic series", 30);
        }
        const double sign = (n % 2 == 1) ? 1.0 : -1.0; // (-1)^{n+1}
        const auto& sh = shift[static_cast<std::size_t>(n)];
        const double pos = fact_n * sh.value() + lead * series.value();
        const double abs_sum = fact_n * sh.abs_sum() + lead * series.abs_sum();
        out[static_cast<std::size_t>(n)] =
            detail::make_enclosure(sign * pos, lead * tail, N + k + 1, abs_sum);
    }
    for (const auto& e : out) {
        check_finite(e, "polygamma");
    }
    return out;
}

// Tail bracket for sum_{j>=K} f(j) with f completely monotonic in j:
// the sum lies in [I + f(K)/2, I + f(K)/2 + |f'(K)|/12] where I is the
// integral of f over [K, inf). Returns {midpoint, half width}.
struct TailBracket {
    double estimate;
    double half_width;
};

TailBracket cm_tail(double integral, double fK, double dfK)
{
    const double w = std::abs(dfK) / 24.0;
    return {integral + 0.5 * fK + w, w};
}

} // namespace

Enclosure ln_gamma(double x, const TruncationPolicy& policy)
{
    policy.validate();
    detail::require_positive_finite(x, "ln_gamma");
    if (x == 1.0 || x == 2.0) {
        return {};
    }
    const int N = shift_count(x, 20.0);
    const double z = x + N;
    double prod = 1.0;
    for (int k = 0; k < N; ++k) {
        prod *= x + k;
    }
    const double ln_prod = std::log(prod);

    const double main = (z - 0.5) * std::log(z) - z + half_ln_2pi;
    const double zinv = 1.0 / z;
    const double z2inv = zinv * zinv;
    SeriesSum corr;
    double pw = zinv;
    double tail = 0.0;
    int k = 1;
    for (; k <= 30; ++k) {
        const double t = detail::bernoulli_2k[k - 1] / ((2.0 * k) * (2.0 * k - 1)) * pw;
        if (std::abs(t) <= policy.eps * std::abs(main)) {
            tail = std::abs(t);
            break;
        }
        corr.add(t);
        pw *= z2inv;
    }
    if (k > 30) {
        detail::throw_convergence("ln_gamma asymptotic series", 30);
    }
    const double value = main + corr.value() - ln_prod;
    const double abs_sum = std::abs(main) + corr.abs_sum() + std::abs(ln_prod);
    return detail::make_enclosure(value, tail, N + k, abs_sum);
}

Enclosure gamma(double x, const TruncationPolicy& policy)
{
    const Enclosure lg = ln_gamma(x, policy);
    Enclosure e;
    e.value = std::exp(lg.value);
    e.abs_error = e.value * (std::expm1(lg.abs_error) + 2.0 * mach_eps);
    e.terms_used = lg.terms_used;
    check_finite(e, "gamma");
    return e;
}

Enclosure digamma(double x, const TruncationPolicy& policy)
{
    policy.validate();
    detail::require_positive_finite(x, "digamma");
    return shifted_polygamma(0, x, 20.0, policy)[0];
}

Enclosure digamma_series(double x, const TruncationPolicy& policy)
{
    policy.validate();
    detail::require_positive_finite(x, "digamma_series");
    // f(k) = 1/(k+1) - 1/(x+k) = (x-1)/((k+1)(x+k)); |f| is completely
    // monotonic in k, so the bracket applies to |f| with the sign of x-1.
    SeriesSum s;
    s.add(-euler_gamma);
    const double sgn = x >= 1.0 ? 1.0 : -1.0;
    for (std::int64_t K = 1;; ++K) {
        const double k = static_cast<double>(K - 1);
        s.add((x - 1.0) / ((k + 1.0) * (x + k)));
        const double Kd = static_cast<double>(K);
        const double fK = std::abs(x - 1.0) / ((Kd + 1.0) * (x + Kd));
        const double dfK = 1.0 / ((Kd + 1.0) * (Kd + 1.0)) - 1.0 / ((x + Kd) * (x + Kd));
        const double integral = std::abs(std::log1p((x - 1.0) / (Kd + 1.0)));
        const TailBracket tb = cm_tail(integral, fK, dfK);
        const double scale = std::max(std::abs(s.value()), s.abs_sum());
        if (tb.half_width <= policy.eps * scale) {
            const double value = s.value() + sgn * tb.estimate;
            return detail::make_enclosure(value, tb.half_width, K, s.abs_sum());
        }
        if (K >= policy.max_terms) {
            detail::throw_convergence("digamma_series", policy.max_terms);
        }
    }
}

Enclosure polygamma(int n, double x, const TruncationPolicy& policy)
{
    policy.validate();
    if (n < 1) {
        throw DomainError("polygamma: order must be at least 1");
    }
    detail::require_positive_finite(x, "polygamma");
    return shifted_polygamma(n, x, 10.0 + n, policy)[static_cast<std::size_t>(n)];
}

std::vector<Enclosure> polygamma_all(int max_order, double x, const TruncationPolicy& policy)
{
    policy.validate();
    if (max_order < 0) {
        throw DomainError("polygamma_all: order must be nonnegative");
    }
    detail::require_positive_finite(x, "polygamma_all");
    return shifted_polygamma(max_order, x, std::max(20.0, 10.0 + max_order), policy);
}

Enclosure polygamma_series(int n, double x, const TruncationPolicy& policy)
{
    policy.validate();
    if (n < 1) {
        throw DomainError("polygamma_series: order must be at least 1");
    }
    detail::require_positive_finite(x, "polygamma_series");
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) {
        fact *= i;
    }
    SeriesSum s;
    for (std::int64_t K = 1;; ++K) {
        s.add(std::pow(x + static_cast<double>(K - 1), -(n + 1)));
        const double y = x + static_cast<double>(K);
        const double fK = std::pow(y, -(n + 1));
        const double dfK = (n + 1) * fK / y;
        const double integral = std::pow(y, -n) / n;
        const TailBracket tb = cm_tail(integral, fK, dfK);
        if (tb.half_width <= policy.eps * s.value()) {
            const double sign = (n % 2 == 1) ? 1.0 : -1.0;
            Enclosure e = detail::make_enclosure(fact * (s.value() + tb.estimate),
                                                 fact * tb.half_width, K, fact * s.abs_sum());
            e.value *= sign;
            check_finite(e, "polygamma_series");
            return e;
        }
        if (K >= policy.max_terms) {
            detail::throw_convergence("polygamma_series", policy.max_terms);
        }
    }
}

double log_mean(LogMeanOrder order, double a, double b)
{
    detail::require_positive_finite(a, "log_mean");
    detail::require_positive_finite(b, "log_mean");
    const double r = order.r;
    if (!std::isfinite(r)) {
        throw DomainError("log_mean: order must be finite");
    }
    if (a == b) {
        return a;
    }
    const double d = std::log(a / b);
    if (r == 0.0) {
        return b * std::expm1(d) / d;
    }
    if (r == 1.0) {
        return std::exp(std::log(b) + d * std::exp(d) / std::expm1(d) - 1.0);
    }
    // a^r - b^r = b^r expm1(r d), a - b = b expm1(d)
    const double ratio = std::expm1(r * d) / (r * std::expm1(d));
    return b * std::exp(std::log(ratio) / (r - 1.0));
}

Enclosure ln_unit_ball_volume(int n)
{
    if (n < 0) {
        throw DomainError("unit_ball_volume: dimension must be nonnegative");
    }
    const Enclosure lg = ln_gamma(1.0 + 0.5 * n);
    const double head = 0.5 * n * std::log(std::numbers::pi);
    Enclosure e;
    e.value = head - lg.value;
    e.abs_error = lg.abs_error + mach_eps * (std::abs(head) + std::abs(lg.value));
    e.terms_used = lg.terms_used;
    return e;
}

Enclosure unit_ball_volume(int n)
{
    if (n < 0) {
        throw DomainError("unit_ball_volume: dimension must be nonnegative");
    }
    if (n == 0) {
        return {1.0, 0.0, 0, false};
    }
    if (n == 1) {
        return {2.0, 0.0, 0, false};
    }
    if (n == 2) {
        return {std::numbers::pi, 0.0, 0, false};
    }
    const Enclosure lv = ln_unit_ball_volume(n);
    Enclosure e;
    e.value = std::exp(lv.value);
    e.abs_error = e.value * (std::expm1(lv.abs_error) + mach_eps);
    e.terms_used = lv.terms_used;
    return e;
}

} // namespace qgk::specfun
