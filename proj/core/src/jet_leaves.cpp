#include <cmath>

#include "qgk/errors.hpp"
#include "qgk/jet.hpp"
#include "qgk/specfun.hpp"
#include "series.hpp"

namespace qgk::cm {

namespace sf = qgk::specfun;
using detail::mach_eps;

Jet ln_gamma_jet(double x, double q, int order)
{
    std::vector<Enclosure> d;
    d.reserve(order + 1);
    d.push_back(sf::ln_gamma_q(x, q));
    if (order >= 1) {
        auto psi = sf::psi_q_all(order - 1, x, q);
        d.insert(d.end(), psi.begin(), psi.end());
    }
    return Jet::from_derivatives(d);
}

Jet psi_jet(int n, double x, double q, int order)
{
    if (n < 0) {
        throw UsageError("psi_jet: negative order");
    }
    auto psi = sf::psi_q_all(n + order, x, q);
    return Jet::from_derivatives({psi.begin() + n, psi.end()});
}

Jet log_jet(double x, int order)
{
    if (!(x > 0.0)) {
        throw DomainError("log_jet: argument must be positive");
    }
    Jet j(order);
    j.set(0, std::log(x), mach_eps * std::abs(std::log(x)));
    double p = 1.0;
    for (int k = 1; k <= order; ++k) {
        p /= x;
        const double c = (k % 2 == 1 ? 1.0 : -1.0) * p / k;
        j.set(k, c, 2 * mach_eps * k * std::abs(c));
    }
    return j;
}

Jet power_jet(double x, double p, int order)
{
    Jet j(order);
    const bool integer = p == std::round(p);
    if (x == 0.0) {
        if (!(integer && p >= 0.0)) {
            throw DomainError("power_jet: non-integer or negative power at 0");
        }
        const int pi = static_cast<int>(p);
        if (pi <= order) {
            j.set(pi, 1.0, 0.0);
        }
        return j;
    }
    if (x < 0.0 && !integer) {
        throw DomainError("power_jet: non-integer power of a negative number");
    }
    double binom = 1.0;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) {
            binom *= (p - k + 1) / k;
        }
        const double c = binom * std::pow(x, p - k);
        j.set(k, c, mach_eps * (k + 2) * std::abs(c));
    }
    return j;
}

Jet exp_linear_jet(double lambda, double x, int order)
{
    Jet j(order);
    double c = std::exp(lambda * x);
    for (int k = 0; k <= order; ++k) {
        if (k > 0) {
            c *= lambda / k;
        }
        j.set(k, c, mach_eps * (k + 2) * std::abs(c) * (1.0 + std::abs(lambda * x)));
    }
    return j;
}

Jet log_q_bracket_jet(double x, double q, int order)
{
    if (!(q > 0.0) || !std::isfinite(q)) {
        throw DomainError("log_q_bracket_jet: q must be positive");
    }
    if (q == 1.0) {
        return log_jet(x, order);
    }
    if (!(x > 0.0)) {
        throw DomainError("log_q_bracket_jet: argument must be positive");
    }
    // For q > 1: ln((Q^y - 1)/(Q - 1)) = (y - 1) ln Q + ln((1 - p^y)/(1 - p)), p = 1/Q.
    const QParam qp(q);
    const double L = qp.log_base();
    const double w = std::exp(x * L);
    const double one_minus_w = -std::expm1(x * L);
    Jet j(order);
    double c0 = sf::log1mexp(x * L) - sf::log1mexp(L);
    if (qp.branch() == QBranch::super_one) {
        c0 += (x - 1.0) * -L;
    }
    j.set(0, c0, 4 * mach_eps * (std::abs(c0) + 1.0));
    double lk = 1.0;
    double inv_fact = 1.0;
    for (int k = 1; k <= order; ++k) {
        lk *= L;
        inv_fact /= k;
        double c = -lk * sf::polylog_neg(k - 1, w, one_minus_w) * inv_fact;
        if (k == 1 && qp.branch() == QBranch::super_one) {
            c += -L;
        }
        j.set(k, c, mach_eps * (2 * k + 4) * std::abs(c));
    }
    return j;
}

} // namespace qgk::cm
