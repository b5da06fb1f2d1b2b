#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "qgk/errors.hpp"
#include "qgk/specfun.hpp"
#include "series.hpp"

namespace qgk {

QParam::QParam(double q) : q_(q)
{
    if (!(q > 0.0) || !std::isfinite(q) || q == 1.0) {
        throw DomainError("q must be positive, finite and different from 1 (use the classical functions for q = 1)");
    }
}

double QParam::log_base() const
{
    return q_ < 1.0 ? std::log(q_) : -std::log(q_);
}

} // namespace qgk

namespace qgk::specfun {

using detail::mach_eps;
using detail::SeriesSum;

namespace {

constexpr int eulerian_rows = 48;

using EulerianTable = std::array<std::array<double, eulerian_rows>, eulerian_rows>;

const EulerianTable& eulerian()
{
    static const EulerianTable table = [] {
        EulerianTable a{};
        a[0][0] = 1.0;
        for (int n = 1; n < eulerian_rows; ++n) {
            for (int i = 0; i < n; ++i) {
                const double left = i > 0 ? a[n - 1][i - 1] : 0.0;
                a[n][i] = (i + 1) * a[n - 1][i] + (n - i) * left;
            }
        }
        return a;
    }();
    return table;
}

void check_order(int n, const char* fn)
{
    if (n < 0 || n >= eulerian_rows - 1) {
        throw DomainError(std::string(fn) + ": derivative order out of supported range");
    }
}

// psi_p^(0..J)(x) for 0 < p < 1 given L = ln p.
std::vector<Enclosure> sub_one_polygamma(int J, double x, double L, const TruncationPolicy& policy,
                                         bool shift)
{
    const auto nj = static_cast<std::size_t>(J) + 1;
    int M = 0;
    if (shift) {
        const double threshold = std::log(0.5) / L;
        if (x < threshold) {
            M = static_cast<int>(std::min(64.0, std::ceil(threshold - x)));
        }
    }
    const double z = x + M;
    const double absL = -L;

    std::vector<double> Lpow(nj); // L^{j+1}
    Lpow[0] = L;
    for (std::size_t j = 1; j < nj; ++j) {
        Lpow[j] = Lpow[j - 1] * L;
    }

    std::vector<SeriesSum> sh(nj);
    for (int i = 0; i < M; ++i) {
        const double y = (x + i) * L;
        const double w = std::exp(y);
        const double omw = -std::expm1(y);
        for (std::size_t j = 0; j < nj; ++j) {
            sh[j].add(Lpow[j] * polylog_neg(static_cast<int>(j), w, omw));
        }
    }

    // For j = 0 the value carries the constant -ln(1-p).
    const double c0 = -log1mexp(L);

    std::vector<SeriesSum> S(nj);
    std::vector<double> tail(nj, 0.0);
    std::vector<bool> done(nj, false);
    std::size_t remaining = nj;
    const double pz = std::exp(z * L);
    const double lambda = -z * L;
    std::int64_t k = 1;
    for (;; ++k) {
        const double kd = static_cast<double>(k);
        const double a = std::exp(kd * z * L) / (-std::expm1(kd * L));
        double kp = 1.0;
        for (std::size_t j = 0; j < nj; ++j, kp *= kd) {
            if (done[j]) {
                continue;
            }
            const double t = kp * a;
            S[j].add(t);
            const double scale = std::max(S[j].value(),
                                          (sh[j].abs_sum() + (j == 0 ? std::abs(c0) : 0.0)) /
                                              std::pow(absL, static_cast<double>(j) + 1.0));
            if (t > policy.eps * scale) {
                continue;
            }
            double bound = -1.0;
            if (policy.tail_strategy == TailStrategy::geometric_ratio) {
                const double rho = std::pow((kd + 1.0) / kd, static_cast<double>(j)) * pz;
                if (rho < 1.0) {
                    bound = t * rho / (1.0 - rho);
                }
            } else {
                const double y0 = kd + 1.0;
                if (y0 * lambda >= static_cast<double>(j)) {
                    // g(y0) + int_{y0}^inf t^j e^{-lambda t} dt, over (1 - p^{y0})
                    const double ly = std::log(y0);
                    double integral = 0.0;
                    double lfact_ratio = 0.0; // ln(j!/i!)
                    for (int i = static_cast<int>(j); i >= 0; --i) {
                        integral += std::exp(-lambda * y0 + lfact_ratio + i * std::log(lambda * y0) -
                                             (static_cast<double>(j) + 1.0) * std::log(lambda));
                        if (i > 0) {
                            lfact_ratio += std::log(static_cast<double>(i));
                        }
                    }
                    const double g = std::exp(static_cast<double>(j) * ly - lambda * y0);
                    bound = (g + integral) / (-std::expm1(y0 * L));
                }
            }
            if (bound >= 0.0 && bound <= policy.eps * scale) {
                tail[j] = bound;
                done[j] = true;
                --remaining;
            }
        }
        if (remaining == 0) {
            break;
        }
        if (k >= policy.max_terms) {
            detail::throw_convergence("q-polygamma series", policy.max_terms);
        }
    }

    std::vector<Enclosure> out(nj);
    for (std::size_t j = 0; j < nj; ++j) {
        const double head = (j == 0 ? c0 : 0.0);
        const double value = head + Lpow[j] * S[j].value() + sh[j].value();
        const double abs_sum = std::abs(head) + std::abs(Lpow[j]) * S[j].abs_sum() + sh[j].abs_sum();
        out[j] = detail::make_enclosure(value, std::abs(Lpow[j]) * tail[j], S[j].count() + M, abs_sum);
    }
    return out;
}

} // namespace

double log1mexp(double y)
{
    return y > -0.6931471805599453 ? std::log(-std::expm1(y)) : std::log1p(-std::exp(y));
}

double polylog_neg(int j, double w, double one_minus_w)
{
    check_order(j, "polylog_neg");
    if (j == 0) {
        return w / one_minus_w;
    }
    const auto& row = eulerian()[static_cast<std::size_t>(j)];
    double poly = 0.0;
    for (int i = j - 1; i >= 0; --i) {
        poly = poly * w + row[static_cast<std::size_t>(i)];
    }
    return w * poly / std::pow(one_minus_w, j + 1);
}

Enclosure ln_q_gamma(double x, QParam q, const TruncationPolicy& policy)
{
    policy.validate();
    detail::require_positive_finite(x, "ln_q_gamma");
    if (x == 1.0 || x == 2.0) {
        return {};
    }
    const double L = q.log_base();
    const double p = std::exp(L);

    double head = 0.0;
    if (q.branch() == QBranch::sub_one) {
        head = (1.0 - x) * log1mexp(L);
    } else {
        const double lnQ = std::log(q.value());
        head = (1.0 - x) * std::log(q.value() - 1.0) + 0.5 * x * (x - 1.0) * lnQ;
    }

    // Each term is ln(1 - p^{n+1}) - ln(1 - p^{n+x}); by the mean value
    // theorem it is at most p^n |p - p^x| / (1 - p^n max(p, p^x)).
    const double D = p * std::abs(std::expm1((x - 1.0) * L));
    const double pmax = std::max(p, std::exp(x * L));
    SeriesSum s;
    for (std::int64_t n = 0;; ++n) {
        const double nd = static_cast<double>(n);
        const double t = log1mexp((nd + 1.0) * L) - log1mexp((nd + x) * L);
        s.add(t);
        const double scale = std::max(std::abs(head + s.value()), std::abs(head) + s.abs_sum());
        if (std::abs(t) <= policy.eps * scale) {
            const double pN = std::exp((nd + 1.0) * L);
            const double denom = 1.0 - pN * pmax;
            double bound = D * pN / denom;
            if (policy.tail_strategy == TailStrategy::geometric_ratio) {
                bound /= (1.0 - p);
            } else {
                bound *= (1.0 + 1.0 / -L);
            }
            if (bound <= policy.eps * scale) {
                return detail::make_enclosure(head + s.value(), bound, n + 1,
                                              std::abs(head) + s.abs_sum());
            }
        }
        if (n + 1 >= policy.max_terms) {
            detail::throw_convergence("ln_q_gamma", policy.max_terms);
        }
    }
}

Enclosure q_gamma(double x, QParam q, const TruncationPolicy& policy)
{
    const Enclosure lg = ln_q_gamma(x, q, policy);
    Enclosure e = lg;
    e.value = std::exp(lg.value);
    e.abs_error = e.value * (std::expm1(lg.abs_error) + 2.0 * mach_eps);
    if (!std::isfinite(e.value)) {
        throw DomainError("q_gamma: result overflows");
    }
    return e;
}

std::vector<Enclosure> q_polygamma_all(int max_order, double x, QParam q,
                                       const TruncationPolicy& policy, bool shift)
{
    policy.validate();
    check_order(max_order, "q_polygamma_all");
    detail::require_positive_finite(x, "q_polygamma_all");
    auto out = sub_one_polygamma(max_order, x, q.log_base(), policy, shift);
    if (q.branch() == QBranch::super_one) {
        const double lnQ = std::log(q.value());
        const double a0 = (x - 1.5) * lnQ;
        out[0].value += a0;
        out[0].abs_error += mach_eps * std::abs(a0);
        if (max_order >= 1) {
            out[1].value += lnQ;
            out[1].abs_error += mach_eps * lnQ;
        }
    }
    return out;
}

Enclosure q_digamma(double x, QParam q, const TruncationPolicy& policy)
{
    return q_polygamma_all(0, x, q, policy)[0];
}

Enclosure q_polygamma(int n, double x, QParam q, const TruncationPolicy& policy)
{
    if (n < 1) {
        throw DomainError("q_polygamma: order must be at least 1");
    }
    return q_polygamma_all(n, x, q, policy)[static_cast<std::size_t>(n)];
}

Enclosure q_polygamma_difference(int n, double x, double c, QParam q,
                                 const TruncationPolicy& policy)
{
    policy.validate();
    check_order(n, "q_polygamma_difference");
    detail::require_positive_finite(x, "q_polygamma_difference");
    detail::require_positive_finite(c, "q_polygamma_difference");
    const double L = q.log_base();
    const double Lp = std::pow(L, n + 1);

    int M = 0;
    const double threshold = std::log(0.5) / L;
    if (x < threshold) {
        M = static_cast<int>(std::min(64.0, std::ceil(threshold - x)));
    }
    const double z = x + M;
    SeriesSum sh;
    for (int i = 0; i < M; ++i) {
        const double y0 = (x + i) * L;
        const double y1 = (x + c + i) * L;
        sh.add(Lp * polylog_neg(n, std::exp(y1), -std::expm1(y1)));
        sh.add(-Lp * polylog_neg(n, std::exp(y0), -std::expm1(y0)));
    }

    // sum k^n p^{kz} (1 - p^{kc}) / (1 - p^k), all terms positive
    const double pz = std::exp(z * L);
    SeriesSum S;
    for (std::int64_t k = 1;; ++k) {
        const double kd = static_cast<double>(k);
        const double t = std::pow(kd, n) * std::exp(kd * z * L) * (-std::expm1(kd * c * L)) /
                         (-std::expm1(kd * L));
        S.add(t);
        const double scale = std::max(S.value(), sh.abs_sum() / std::abs(Lp));
        if (t <= policy.eps * scale) {
            const double rho = std::pow((kd + 1.0) / kd, n + 1) * pz;
            if (rho < 1.0) {
                const double bound = t * rho / (1.0 - rho);
                if (bound <= policy.eps * scale) {
                    double value = -Lp * S.value() + sh.value();
                    double abs_sum = std::abs(Lp) * S.abs_sum() + sh.abs_sum();
                    if (q.branch() == QBranch::super_one && n == 0) {
                        const double extra = c * std::log(q.value());
                        value += extra;
                        abs_sum += std::abs(extra);
                    }
                    return detail::make_enclosure(value, std::abs(Lp) * bound, k + M, abs_sum);
                }
            }
        }
        if (k >= policy.max_terms) {
            detail::throw_convergence("q_polygamma_difference", policy.max_terms);
        }
    }
}

Enclosure ln_gamma_q(double x, double q, const TruncationPolicy& policy)
{
    if (q == 1.0) {
        return ln_gamma(x, policy);
    }
    return ln_q_gamma(x, QParam(q), policy);
}

Enclosure psi_q(int n, double x, double q, const TruncationPolicy& policy)
{
    if (q == 1.0) {
        return n == 0 ? digamma(x, policy) : polygamma(n, x, policy);
    }
    return q_polygamma_all(n, x, QParam(q), policy)[static_cast<std::size_t>(n)];
}

std::vector<Enclosure> psi_q_all(int max_order, double x, double q, const TruncationPolicy& policy)
{
    if (q == 1.0) {
        return polygamma_all(max_order, x, policy);
    }
    return q_polygamma_all(max_order, x, QParam(q), policy);
}

} // namespace qgk::specfun
