#include <algorithm>
#include <cmath>
#include <vector>

#include "qgk/cm_engine.hpp"
#include "qgk/errors.hpp"
#include "series.hpp"

namespace qgk::cm {

namespace {

// h^{-k} sum_j (-1)^j C(k,j) f(x + (k/2 - j) h); the error expands in h^2.
double central_stencil(const std::function<double(double)>& f, int k, double x, double h, double& mag)
{
    double s = 0.0;
    double binom = 1.0;
    mag = 0.0;
    for (int j = 0; j <= k; ++j) {
        if (j > 0) {
            binom = binom * (k - j + 1) / j;
        }
        const double v = f(x + (0.5 * k - j) * h);
        const double t = (j % 2 == 0 ? 1.0 : -1.0) * binom * v;
        s += t;
        mag += std::abs(t);
    }
    const double hk = std::pow(h, k);
    mag /= hk;
    return s / hk;
}

} // namespace

// Ridders' scheme: a Neville tableau of central differences at steps
// h0, h0/1.4, ...; stops once the extrapolation error starts growing.
Enclosure finite_difference(const std::function<double(double)>& f, int k, double x, double lo, double hi)
{
    if (k < 0) {
        throw UsageError("finite_difference: negative order");
    }
    if (!(x > lo && x < hi)) {
        throw DomainError("finite_difference: point outside the domain");
    }
    if (k == 0) {
        const double v = f(x);
        return {v, detail::mach_eps * std::abs(v), 1, false};
    }
    constexpr int ntab = 14;
    constexpr double con = 1.4;
    constexpr double con2 = con * con;
    const double room = std::min(x - lo, hi - x);
    double h = std::min(0.2 * std::max(std::abs(x), 1.0), room / k);

    std::vector<std::vector<double>> a(ntab, std::vector<double>(ntab, 0.0));
    double mag = 0.0;
    a[0][0] = central_stencil(f, k, x, h, mag);
    double best = a[0][0];
    double err = std::numeric_limits<double>::infinity();
    double best_mag = mag;
    int evaluations = k + 1;
    for (int i = 1; i < ntab; ++i) {
        h /= con;
        a[0][i] = central_stencil(f, k, x, h, mag);
        evaluations += k + 1;
        double fac = con2;
        for (int j = 1; j <= i; ++j) {
            a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
            fac *= con2;
            const double e = std::max(std::abs(a[j][i] - a[j - 1][i]), std::abs(a[j][i] - a[j - 1][i - 1]));
            if (e <= err) {
                err = e;
                best = a[j][i];
                best_mag = mag;
            }
        }
        if (std::abs(a[i][i] - a[i - 1][i - 1]) >= 2.0 * err) {
            break;
        }
    }
    Enclosure out;
    out.value = best;
    out.abs_error = 2.0 * err + 4.0 * detail::mach_eps * best_mag;
    out.terms_used = evaluations;
    return out;
}

} // namespace qgk::cm
