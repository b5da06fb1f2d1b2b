#include "qgk/jet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qgk/errors.hpp"
#include "series.hpp"

namespace qgk::cm {

using detail::mach_eps;

namespace {

int common_order(const Jet& a, const Jet& b) { return std::min(a.order(), b.order()); }

double factorial(int k)
{
    double f = 1.0;
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

} // namespace

Jet::Jet(int order)
{
    if (order < 0) {
        throw UsageError("Jet: negative order");
    }
    c_.assign(order + 1, 0.0);
    e_.assign(order + 1, 0.0);
}

Jet Jet::constant(double c, int order, double err)
{
    Jet j(order);
    j.c_[0] = c;
    j.e_[0] = err;
    return j;
}

Jet Jet::variable(double x, int order)
{
    Jet j(order);
    j.c_[0] = x;
    if (order >= 1) {
        j.c_[1] = 1.0;
    }
    return j;
}

Jet Jet::from_derivatives(const std::vector<Enclosure>& d)
{
    if (d.empty()) {
        throw UsageError("Jet: no derivatives given");
    }
    Jet j(static_cast<int>(d.size()) - 1);
    double inv_fact = 1.0;
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (k > 0) {
            inv_fact /= static_cast<double>(k);
        }
        j.c_[k] = d[k].value * inv_fact;
        j.e_[k] = d[k].abs_error * inv_fact + mach_eps * std::abs(j.c_[k]);
    }
    return j;
}

void Jet::set(int k, double c, double err)
{
    c_.at(k) = c;
    e_.at(k) = err;
}

Enclosure Jet::derivative_at(int k) const
{
    const double f = factorial(k);
    Enclosure out;
    out.value = c_.at(k) * f;
    out.abs_error = e_.at(k) * f + mach_eps * std::abs(out.value);
    out.terms_used = order() + 1;
    return out;
}

Jet Jet::derivative() const
{
    if (order() < 1) {
        throw UsageError("Jet: cannot differentiate an order-0 jet");
    }
    Jet d(order() - 1);
    for (int k = 0; k <= d.order(); ++k) {
        d.c_[k] = (k + 1) * c_[k + 1];
        d.e_[k] = (k + 1) * e_[k + 1];
    }
    return d;
}

Jet Jet::scaled(double beta) const
{
    Jet s = *this;
    double b = 1.0;
    for (int k = 0; k <= order(); ++k) {
        s.c_[k] *= b;
        s.e_[k] = s.e_[k] * std::abs(b) + mach_eps * std::abs(s.c_[k]);
        b *= beta;
    }
    return s;
}

Jet& Jet::operator+=(const Jet& o)
{
    const int n = common_order(*this, o);
    c_.resize(n + 1);
    e_.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        const double s = c_[k] + o.c_[k];
        e_[k] += o.e_[k] + mach_eps * std::max(std::abs(c_[k]), std::abs(o.c_[k]));
        c_[k] = s;
    }
    return *this;
}

Jet& Jet::operator-=(const Jet& o)
{
    const int n = common_order(*this, o);
    c_.resize(n + 1);
    e_.resize(n + 1);
    for (int k = 0; k <= n; ++k) {
        const double s = c_[k] - o.c_[k];
        e_[k] += o.e_[k] + mach_eps * std::max(std::abs(c_[k]), std::abs(o.c_[k]));
        c_[k] = s;
    }
    return *this;
}

Jet& Jet::operator*=(double s)
{
    for (int k = 0; k <= order(); ++k) {
        c_[k] *= s;
        e_[k] = e_[k] * std::abs(s) + mach_eps * std::abs(c_[k]);
    }
    return *this;
}

Jet& Jet::operator+=(double s)
{
    if (!c_.empty()) {
        e_[0] += mach_eps * std::max(std::abs(c_[0]), std::abs(s));
        c_[0] += s;
    }
    return *this;
}

Jet operator*(const Jet& a, const Jet& b)
{
    const int n = common_order(a, b);
    Jet r(n);
    for (int k = 0; k <= n; ++k) {
        double s = 0.0;
        double mag = 0.0;
        double err = 0.0;
        for (int i = 0; i <= k; ++i) {
            const double p = a.c_[i] * b.c_[k - i];
            s += p;
            mag += std::abs(p);
            err += std::abs(a.c_[i]) * b.e_[k - i] + a.e_[i] * std::abs(b.c_[k - i]) +
                   a.e_[i] * b.e_[k - i];
        }
        r.c_[k] = s;
        r.e_[k] = err + mach_eps * (k + 2) * mag;
    }
    return r;
}

Jet operator/(const Jet& a, const Jet& b)
{
    const int n = common_order(a, b);
    const double b0 = b.c_[0];
    const double rel0 = b.e_[0] / std::abs(b0);
    if (!(std::abs(b0) > b.e_[0]) || b0 == 0.0) {
        throw DomainError("Jet: division by a jet whose constant term is not separated from 0");
    }
    const double denom_err = 1.0 / (1.0 - rel0);
    Jet r(n);
    for (int k = 0; k <= n; ++k) {
        double s = a.c_[k];
        double mag = std::abs(a.c_[k]);
        double err = a.e_[k];
        for (int j = 1; j <= k; ++j) {
            const double p = b.c_[j] * r.c_[k - j];
            s -= p;
            mag += std::abs(p);
            err += b.e_[j] * std::abs(r.c_[k - j]) + std::abs(b.c_[j]) * r.e_[k - j];
        }
        r.c_[k] = s / b0;
        r.e_[k] = (err / std::abs(b0) + std::abs(r.c_[k]) * rel0) * denom_err +
                  mach_eps * (k + 2) * mag / std::abs(b0);
    }
    return r;
}

Jet exp(const Jet& a)
{
    const int n = a.order();
    Jet r(n);
    r.c_[0] = std::exp(a.c_[0]);
    r.e_[0] = r.c_[0] * std::expm1(a.e_[0]) + mach_eps * r.c_[0];
    for (int k = 1; k <= n; ++k) {
        double s = 0.0;
        double mag = 0.0;
        double err = 0.0;
        for (int j = 1; j <= k; ++j) {
            const double p = j * a.c_[j] * r.c_[k - j];
            s += p;
            mag += std::abs(p);
            err += j * (a.e_[j] * std::abs(r.c_[k - j]) + std::abs(a.c_[j]) * r.e_[k - j] +
                        a.e_[j] * r.e_[k - j]);
        }
        r.c_[k] = s / k;
        r.e_[k] = err / k + mach_eps * (k + 2) * mag / k;
    }
    return r;
}

Jet log(const Jet& a)
{
    const int n = a.order();
    const double a0 = a.c_[0];
    if (!(a0 > 0.0)) {
        throw DomainError("Jet: log of a jet with non-positive constant term");
    }
    const double rel0 = a.e_[0] / a0;
    if (!(rel0 < 1.0)) {
        throw DomainError("Jet: log argument not separated from 0");
    }
    const double denom_err = 1.0 / (1.0 - rel0);
    Jet r(n);
    r.c_[0] = std::log(a0);
    r.e_[0] = -std::log1p(-rel0) + mach_eps * std::abs(r.c_[0]);
    for (int k = 1; k <= n; ++k) {
        double s = a.c_[k];
        double mag = std::abs(s);
        double err = a.e_[k];
        for (int j = 1; j < k; ++j) {
            const double p = static_cast<double>(j) / k * r.c_[j] * a.c_[k - j];
            s -= p;
            mag += std::abs(p);
            err += static_cast<double>(j) / k *
                   (r.e_[j] * std::abs(a.c_[k - j]) + std::abs(r.c_[j]) * a.e_[k - j]);
        }
        r.c_[k] = s / a0;
        r.e_[k] = (err / a0 + std::abs(r.c_[k]) * rel0) * denom_err + mach_eps * (k + 2) * mag / a0;
    }
    return r;
}

Jet pow(const Jet& a, double p)
{
    if (p == std::round(p) && std::abs(p) <= 64.0) {
        const bool negative = p < 0.0;
        long e = std::lround(std::abs(p));
        Jet result = Jet::constant(1.0, a.order());
        Jet base = a;
        while (e > 0) {
            if (e & 1) {
                result = result * base;
            }
            e >>= 1;
            if (e > 0) {
                base = base * base;
            }
        }
        return negative ? Jet::constant(1.0, a.order()) / result : result;
    }
    return exp(log(a) * p);
}

} // namespace qgk::cm
