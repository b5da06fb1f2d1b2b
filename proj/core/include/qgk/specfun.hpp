#pragma once

#include <vector>

#include "qgk/enclosure.hpp"

namespace qgk::specfun {

inline constexpr double euler_gamma = 0.57721566490153286061;

// Classical gamma family. All return enclosures. `x` must be positive
// and finite; otherwise DomainError.
Enclosure ln_gamma(double x, const TruncationPolicy& policy = {});
Enclosure gamma(double x, const TruncationPolicy& policy = {});

// Recurrence shift to x >= 20 followed by the asymptotic series.
Enclosure digamma(double x, const TruncationPolicy& policy = {});
// Direct series -gamma + sum (1/(k+1) - 1/(x+k)), tail bracketed by integrals.
Enclosure digamma_series(double x, const TruncationPolicy& policy = {});

// psi^(n)(x), n >= 1, sign convention (-1)^(n+1) psi^(n) > 0.
Enclosure polygamma(int n, double x, const TruncationPolicy& policy = {});
// Direct series n! sum (x+k)^(-n-1) with integral tail bracket.
Enclosure polygamma_series(int n, double x, const TruncationPolicy& policy = {});
// psi^(0..max_order)(x) from a single shift; element 0 is digamma.
std::vector<Enclosure> polygamma_all(int max_order, double x, const TruncationPolicy& policy = {});

// q-deformed family. For q > 1 the sub-one series is run on 1/q and
// mapped back through the reflection of the base.
Enclosure ln_q_gamma(double x, QParam q, const TruncationPolicy& policy = {});
Enclosure q_gamma(double x, QParam q, const TruncationPolicy& policy = {});

Enclosure q_digamma(double x, QParam q, const TruncationPolicy& policy = {});
Enclosure q_polygamma(int n, double x, QParam q, const TruncationPolicy& policy = {});
// psi_q^(0..max_order)(x). With `shift` the argument is first moved up
// by the q-recurrence until q^x <= 1/2 (at most 64 steps); without it the
// series is summed as is, which is slow for small x and q near 1.
std::vector<Enclosure> q_polygamma_all(int max_order, double x, QParam q,
                                       const TruncationPolicy& policy = {}, bool shift = true);

// psi_q^(n)(x+c) - psi_q^(n)(x) for 0 < q < 1, c > 0, summed without
// forming the two values separately.
Enclosure q_polygamma_difference(int n, double x, double c, QParam q,
                                 const TruncationPolicy& policy = {});

// Dispatch helpers: q == 1 selects the classical functions.
Enclosure ln_gamma_q(double x, double q, const TruncationPolicy& policy = {});
Enclosure psi_q(int n, double x, double q, const TruncationPolicy& policy = {});
std::vector<Enclosure> psi_q_all(int max_order, double x, double q,
                                 const TruncationPolicy& policy = {});

// Li_{-j}(w) = sum m^j w^m for 0 <= w < 1, via Eulerian polynomials.
// one_minus_w is passed separately so callers can supply it exactly.
double polylog_neg(int j, double w, double one_minus_w);

// ln(1 - e^y) for y < 0, accurate on both ends.
double log1mexp(double y);

struct LogMeanOrder {
    double r;
};

// Generalized logarithmic mean L_r(a, b); L_r(a, a) = a.
double log_mean(LogMeanOrder r, double a, double b);

// t / (1 - e^{-t}), t > 0.
double kernel_h(double t);

inline constexpr int kernel_derivative_cap = 20;

// d^k/dt^k [t^n / (1 - e^{-t})] from the term-wise differentiated
// geometric expansion. k above `max_k` is a UsageError.
Enclosure kernel_derivative(int n, int k, double t, const TruncationPolicy& policy = {},
                            int max_k = kernel_derivative_cap);

// Volume of the unit ball in R^n, and its logarithm.
Enclosure unit_ball_volume(int n);
Enclosure ln_unit_ball_volume(int n);

} // namespace qgk::specfun
