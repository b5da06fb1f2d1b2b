#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "oracle_values.hpp"
#include "qgk/errors.hpp"
#include "qgk/specfun.hpp"

using namespace qgk;
namespace sf = qgk::specfun;

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

// The certificate must cover the true value, up to the rounding of the
// decimal inputs and output.
bool covers(const Enclosure& e, double truth, double slack_rel = 4 * eps)
{
    return std::abs(e.value - truth) <= e.abs_error + slack_rel * std::max(1.0, std::abs(truth));
}

bool near_rel(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(1.0, std::abs(b)); }

} // namespace

TEST_SUITE("specfun")
{
    TEST_CASE("ln_gamma and gamma match mpmath")
    {
        for (const auto& r : oracle::lngamma_rows) {
            CAPTURE(r.x);
            const auto e = sf::ln_gamma(r.x);
            CHECK(covers(e, r.value));
            CHECK(near_rel(e.value, r.value, 1e-14));
        }
        for (const auto& r : oracle::gamma_rows) {
            CAPTURE(r.x);
            const auto e = sf::gamma(r.x);
            CHECK(std::abs(e.value - r.value) <= e.abs_error + 8 * eps * std::abs(r.value));
            CHECK(std::abs(e.value - r.value) <= 1e-13 * std::abs(r.value));
        }
    }

    TEST_CASE("digamma and polygamma match mpmath on both paths")
    {
        for (const auto& r : oracle::psi_rows) {
            CAPTURE(r.n);
            CAPTURE(r.x);
            const auto rec = r.n == 0 ? sf::digamma(r.x) : sf::polygamma(r.n, r.x);
            CHECK(covers(rec, r.value));
            CHECK(std::abs(rec.value - r.value) <= 1e-13 * std::max(1.0, std::abs(r.value)));
            if (r.x >= 0.5) {
                const auto ser = r.n == 0 ? sf::digamma_series(r.x) : sf::polygamma_series(r.n, r.x);
                CHECK(covers(ser, r.value));
            }
            const auto all = sf::polygamma_all(r.n, r.x);
            CHECK(covers(all.at(std::size_t(r.n)), r.value));
        }
    }

    TEST_CASE("golden values")
    {
        CHECK(std::abs(sf::polygamma(1, 1.0).value - std::numbers::pi * std::numbers::pi / 6) <= 1e-12);
        CHECK(std::abs(sf::polygamma(2, 1.0).value + 2 * 1.2020569031595942854) <= 1e-11);
        CHECK(std::abs(sf::ln_gamma(5.0).value - std::log(24.0)) <= 1e-13);
        CHECK(std::abs(sf::digamma(1.0).value + sf::euler_gamma) <= 1e-15);
        CHECK(sf::gamma(1.0).value == doctest::Approx(1.0).epsilon(1e-15));
    }

    TEST_CASE("q-gamma matches mpmath on both branches")
    {
        for (const auto& r : oracle::lnqgamma_rows) {
            CAPTURE(r.q);
            CAPTURE(r.x);
            const auto e = sf::ln_q_gamma(r.x, QParam(r.q));
            CHECK(covers(e, r.value, 1e-14));
            CHECK(near_rel(e.value, r.value, 1e-12));
        }
    }

    TEST_CASE("q-polygamma matches mpmath")
    {
        for (const auto& r : oracle::qpsi_rows) {
            CAPTURE(r.n);
            CAPTURE(r.q);
            CAPTURE(r.x);
            const auto e = r.n == 0 ? sf::q_digamma(r.x, QParam(r.q)) : sf::q_polygamma(r.n, r.x, QParam(r.q));
            // mpmath's numerical differentiation is good to ~1e-30 here
            CHECK(near_rel(e.value, r.value, 1e-12));
            CHECK(covers(e, r.value, 1e-13));
        }
    }

    TEST_CASE("q = 1 dispatch selects the classical functions")
    {
        CHECK(sf::ln_gamma_q(3.7, 1.0).value == sf::ln_gamma(3.7).value);
        CHECK(sf::psi_q(2, 3.7, 1.0).value == sf::polygamma(2, 3.7).value);
        CHECK(sf::psi_q(0, 3.7, 1.0).value == sf::digamma(3.7).value);
    }

    TEST_CASE("q-gamma functional equation and normalisation")
    {
        for (double q : {0.2, 0.5, 0.95, 1.5, 4.0}) {
            CAPTURE(q);
            CHECK(sf::q_gamma(1.0, QParam(q)).value == doctest::Approx(1.0).epsilon(1e-14));
            CHECK(sf::q_gamma(2.0, QParam(q)).value == doctest::Approx(1.0).epsilon(1e-14));
            for (double x : {0.3, 1.7, 6.0}) {
                const double lhs = sf::q_gamma(x + 1, QParam(q)).value;
                const double rhs = (1 - std::pow(q, x)) / (1 - q) * sf::q_gamma(x, QParam(q)).value;
                CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(rhs));
            }
        }
    }

    TEST_CASE("q-polygamma difference agrees with the plain difference")
    {
        for (int n : {0, 1, 3}) {
            const QParam q(0.6);
            const auto d = sf::q_polygamma_difference(n, 0.8, 0.4, q);
            const auto a = sf::psi_q(n, 1.2, 0.6);
            const auto b = sf::psi_q(n, 0.8, 0.6);
            CHECK(std::abs(d.value - (a.value - b.value)) <= d.abs_error + a.abs_error + b.abs_error + 1e-15);
        }
    }

    TEST_CASE("generalized logarithmic mean")
    {
        for (const auto& r : oracle::logmean_rows) {
            CAPTURE(r.r);
            CAPTURE(r.a);
            CAPTURE(r.b);
            CHECK(near_rel(sf::log_mean({r.r}, r.a, r.b), r.value, 1e-12));
        }
        CHECK(sf::log_mean({2.0}, 3.0, 3.0) == 3.0);
    }

    TEST_CASE("unit-ball volumes")
    {
        for (const auto& r : oracle::ball_rows) {
            CAPTURE(r.n);
            const auto e = sf::unit_ball_volume(r.n);
            CHECK(covers(e, r.value, 8 * eps));
            CHECK(std::abs(sf::ln_unit_ball_volume(r.n).value - std::log(r.value)) <= 1e-13);
        }
        CHECK(std::abs(sf::unit_ball_volume(2).value - std::numbers::pi) <= 1e-13);
        CHECK(std::abs(sf::unit_ball_volume(3).value - 4 * std::numbers::pi / 3) <= 1e-13);
    }

    TEST_CASE("kernel and its derivatives")
    {
        for (const auto& r : oracle::kernelh_rows) {
            CHECK(near_rel(sf::kernel_h(r.t), r.value, 1e-15));
        }
        for (const auto& r : oracle::kernelderiv_rows) {
            CAPTURE(r.n);
            CAPTURE(r.k);
            CAPTURE(r.t);
            const auto e = sf::kernel_derivative(r.n, r.k, r.t);
            CHECK(std::abs(e.value - r.value) <= e.abs_error + 1e-14 * std::abs(r.value));
            // the alternating expansion loses about 7 digits at n = k = 16, t = 0.01
            CHECK(std::abs(e.value - r.value) <= 1e-8 * std::max(1.0, std::abs(r.value)));
            CHECK(e.abs_error <= 1e-6 * std::abs(e.value));
        }
        CHECK_THROWS_AS(sf::kernel_derivative(2, 21, 1.0), UsageError);
    }

    TEST_CASE("polylog of negative order")
    {
        // Li_0(w) = w/(1-w), Li_{-1}(w) = w/(1-w)^2
        CHECK(sf::polylog_neg(0, 0.25, 0.75) == doctest::Approx(1.0 / 3));
        CHECK(sf::polylog_neg(1, 0.25, 0.75) == doctest::Approx(0.25 / 0.5625));
        CHECK(sf::log1mexp(-1e-20) == doctest::Approx(std::log(1e-20)));
    }

    TEST_CASE("domain and usage errors")
    {
        CHECK_THROWS_AS(sf::ln_gamma(0.0), DomainError);
        CHECK_THROWS_AS(sf::ln_gamma(-1.0), DomainError);
        CHECK_THROWS_AS(sf::digamma(std::numeric_limits<double>::quiet_NaN()), DomainError);
        CHECK_THROWS_AS(sf::polygamma(0, 1.0), DomainError);
        CHECK_THROWS_AS(QParam(1.0), DomainError);
        CHECK_THROWS_AS(QParam(-0.5), DomainError);
        CHECK_THROWS_AS(sf::unit_ball_volume(-1), DomainError);
        TruncationPolicy bad;
        bad.eps = 2.0;
        CHECK_THROWS_AS(sf::ln_gamma(2.0, bad), UsageError);
    }

    TEST_CASE("term cap surfaces as a convergence error")
    {
        TruncationPolicy tight;
        tight.max_terms = 3;
        CHECK_THROWS_AS(sf::digamma_series(3.0, tight), ConvergenceError);
    }
}
