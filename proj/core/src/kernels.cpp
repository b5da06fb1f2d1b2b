#include <cmath>
#include <string>
#include <vector>

#include "qgk/errors.hpp"
#include "qgk/specfun.hpp"
#include "series.hpp"

namespace qgk::specfun {

double kernel_h(double t)
{
    detail::require_positive_finite(t, "kernel_h");
    return t / -std::expm1(-t);
}

Enclosure kernel_derivative(int n, int k, double t, const TruncationPolicy& policy, int max_k)
{
    policy.validate();
    if (n < 1) {
        throw DomainError("kernel_derivative: n must be at least 1");
    }
    if (k < 0) {
        throw DomainError("kernel_derivative: k must be nonnegative");
    }
    if (k > max_k) {
        throw UsageError("kernel_derivative: order " + std::to_string(k) + " exceeds cap " +
                         std::to_string(max_k));
    }
    detail::require_positive_finite(t, "kernel_derivative");

    // d^k/dt^k [t^n e^{-mt}] = e^{-mt} sum_j c_j m^{k-j}, with
    // c_j = C(k,j) n!/(n-j)! t^{n-j} (-1)^{k-j}, j = 0..min(k,n).
    const int jmax = std::min(k, n);
    std::vector<double> c(static_cast<std::size_t>(jmax) + 1);
    {
        double binom = 1.0;   // C(k, j)
        double falling = 1.0; // n!/(n-j)!
        for (int j = 0; j <= jmax; ++j) {
            if (j > 0) {
                binom = binom * (k - j + 1) / j;
                falling *= (n - j + 1);
            }
            const double sign = ((k - j) % 2 == 0) ? 1.0 : -1.0;
            c[static_cast<std::size_t>(j)] = sign * binom * falling * std::pow(t, n - j);
        }
    }

    detail::SeriesSum s;
    // Every term is an alternating polynomial in m, so rounding scales with
    // sum |c_j| m^{k-j} e^{-mt} rather than with the terms themselves. The
    // per-term factor counts the ulps of the powers, the polynomial sum and
    // exp(-mt), whose argument carries a relative error of order m t eps.
    double mass = 0.0;
    if (k <= n) {
        s.add(c[static_cast<std::size_t>(k)]); // m = 0
        mass += (k + jmax + 4) * std::abs(c[static_cast<std::size_t>(k)]);
    }
    const double r = std::exp(-t);
    for (std::int64_t m = 1;; ++m) {
        const double md = static_cast<double>(m);
        const double em = std::exp(-md * t);
        double poly = 0.0;
        double apoly = 0.0;
        double mp = 1.0; // m^{k-j}, built from j = jmax down
        for (int j = jmax; j >= 0; --j) {
            if (j == jmax) {
                mp = std::pow(md, k - jmax);
            } else {
                mp *= md;
            }
            poly += c[static_cast<std::size_t>(j)] * mp;
            apoly += std::abs(c[static_cast<std::size_t>(j)]) * mp;
        }
        const double term = em * poly;
        const double aterm = em * apoly;
        s.add(term);
        mass += (k + jmax + md * t + 4) * aterm;
        const double scale = std::abs(s.value()) + detail::mach_eps * s.abs_sum();
        if (aterm <= policy.eps * scale) {
            const double rho = std::pow((md + 1.0) / md, k) * r;
            if (rho < 1.0) {
                const double bound = aterm * rho / (1.0 - rho);
                if (bound <= policy.eps * scale) {
                    const double rounding = detail::mach_eps * mass;
                    return detail::make_enclosure(s.value(), bound + rounding, m + 1, s.abs_sum());
                }
            }
        }
        if (m >= policy.max_terms) {
            detail::throw_convergence("kernel_derivative", policy.max_terms);
        }
    }
}

} // namespace qgk::specfun
