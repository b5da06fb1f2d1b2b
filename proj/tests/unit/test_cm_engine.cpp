#include <atomic>
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "qgk/cm_engine.hpp"
#include "qgk/errors.hpp"

using namespace qgk;
using namespace qgk::cm;

namespace {

Target exp_neg()
{
    Target t;
    t.name = "exp(-x)";
    t.jet = [](double x, int order) { return exp_linear_jet(-1.0, x, order); };
    return t;
}

Target power(double p)
{
    Target t;
    t.name = "x^p";
    t.jet = [p](double x, int order) { return power_jet(x, p, order); };
    return t;
}

Target sin_plus_two()
{
    Target t;
    t.name = "sin(x)+2";
    t.scalar = [](double x) { return std::sin(x) + 2.0; };
    return t;
}

ChainExpr value_of(double (*f)(double))
{
    return [f](const ParamPoint& p) { return Enclosure{f(p.point), 0.0, 1, false}; };
}

std::vector<ParamPoint> points_of(const GridSpec& g)
{
    std::vector<ParamPoint> out;
    for (double x : g.nodes()) {
        out.push_back({x, {}});
    }
    return out;
}

} // namespace

TEST_SUITE("cm_engine")
{
    TEST_CASE("grids")
    {
        const auto lg = GridSpec::logarithmic(1e-2, 100.0, 5).nodes();
        REQUIRE(lg.size() == 5);
        CHECK(lg.front() == doctest::Approx(1e-2));
        CHECK(lg[2] == doctest::Approx(1.0));
        CHECK(lg.back() == doctest::Approx(100.0));
        const auto open = GridSpec::linear(0.0, 1.0, 4, true).nodes();
        CHECK(open.front() == doctest::Approx(0.25));
        CHECK(open.back() == 1.0);
        CHECK_THROWS_AS(GridSpec::logarithmic(0.0, 1.0, 5).validate(), UsageError);
        CHECK_THROWS_AS(GridSpec::linear(1.0, 1.0, 5).validate(), UsageError);
        CHECK_THROWS_AS(GridSpec::linear(0.0, 1.0, 1).validate(), UsageError);
    }

    TEST_CASE("exp(-x) and 1/x are completely monotonic")
    {
        const auto r = check_sign_pattern(exp_neg(), 8, GridSpec{}, ClaimKind::completely_monotonic);
        CHECK(r.status == Status::pass);
        CHECK(r.orders_checked == 9);
        CHECK(r.points_checked == 64);
        CHECK(r.violations.empty());
        CHECK(check_sign_pattern(power(-1.0), 10, GridSpec{}, ClaimKind::completely_monotonic).status ==
              Status::pass);
        CHECK(check_sign_pattern(power(-2.0), 8, GridSpec{}, ClaimKind::log_completely_monotonic).status ==
              Status::pass);
    }

    TEST_CASE("x is not completely monotonic, the first derivative flags it")
    {
        const auto r = check_sign_pattern(power(1.0), 4, GridSpec{}, ClaimKind::completely_monotonic);
        CHECK(r.status == Status::fail);
        REQUIRE_FALSE(r.violations.empty());
        CHECK(r.violations.front().order == 1);
        CHECK(r.worst_margin < 0.0);
    }

    TEST_CASE("negative control: sin(x) + 2 fails")
    {
        const auto r = check_sign_pattern(sin_plus_two(), 4, GridSpec::linear(0.1, 20.0, 64),
                                          ClaimKind::completely_monotonic, {.claim_id = "sin"});
        CHECK(r.status == Status::fail);
        CHECK(r.claim_id == "sin");
        CHECK_FALSE(r.violations.empty());
    }

    TEST_CASE("violations come out sorted")
    {
        const auto r = check_sign_pattern(sin_plus_two(), 4, GridSpec::linear(0.1, 20.0, 64),
                                          ClaimKind::completely_monotonic);
        for (std::size_t i = 1; i < r.violations.size(); ++i) {
            const auto& a = r.violations[i - 1];
            const auto& b = r.violations[i];
            CHECK((a.point < b.point || (a.point == b.point && a.order <= b.order)));
        }
    }

    TEST_CASE("reports do not depend on the worker count")
    {
        CheckOptions one;
        one.jobs = 1;
        CheckOptions many;
        many.jobs = 6;
        const auto g = GridSpec::linear(0.1, 20.0, 101);
        CHECK(check_sign_pattern(sin_plus_two(), 4, g, ClaimKind::completely_monotonic, one) ==
              check_sign_pattern(sin_plus_two(), 4, g, ClaimKind::completely_monotonic, many));
        CHECK(check_sign_pattern(exp_neg(), 8, GridSpec{}, ClaimKind::completely_monotonic, one) ==
              check_sign_pattern(exp_neg(), 8, GridSpec{}, ClaimKind::completely_monotonic, many));
    }

    TEST_CASE("analytic and finite-difference derivatives agree")
    {
        const Target t = exp_neg();
        for (int k = 0; k <= 6; ++k) {
            const auto a = nth_derivative(t, k, 1.3);
            const auto f = nth_derivative(t, k, 1.3, DerivativeSource::finite_difference());
            CAPTURE(k);
            CHECK(std::abs(a.value - f.value) <= a.abs_error + f.abs_error);
            CHECK(std::abs(f.value - a.value) <= 1e-5 * std::abs(a.value));
        }
        // sin'''' = sin
        const auto d4 = finite_difference([](double x) { return std::sin(x); }, 4, 0.7, -10.0);
        CHECK(d4.value == doctest::Approx(std::sin(0.7)).epsilon(1e-5));
        CHECK(std::abs(d4.value - std::sin(0.7)) <= d4.abs_error + 1e-12);
    }

    TEST_CASE("finite-difference stencils stay inside the domain")
    {
        Target t;
        t.scalar = [](double x) {
            if (x <= 0.0) {
                throw std::domain_error("outside");
            }
            return std::sqrt(x);
        };
        const auto d = nth_derivative(t, 2, 1e-3, DerivativeSource::finite_difference());
        CHECK(std::isfinite(d.value));
        CHECK(d.value == doctest::Approx(-0.25 * std::pow(1e-3, -1.5)).epsilon(1e-4));
    }

    TEST_CASE("order caps and argument checks")
    {
        CHECK_THROWS_AS(nth_derivative(exp_neg(), analytic_order_cap + 1, 1.0), UsageError);
        CHECK_THROWS_AS(nth_derivative(sin_plus_two(), 9, 1.0, DerivativeSource::finite_difference()), UsageError);
        CHECK_THROWS_AS(nth_derivative(sin_plus_two(), 1, 1.0, DerivativeSource::analytic()), UsageError);
        CHECK_THROWS_AS(nth_derivative(exp_neg(), 1, -1.0), DomainError);
        CHECK_THROWS_AS(check_sign_pattern(Target{}, 2, GridSpec{}, ClaimKind::completely_monotonic), UsageError);
    }

    TEST_CASE("chains")
    {
        const auto g = GridSpec::linear(0.1, 3.0, 30);
        auto zero = [](const ParamPoint&) { return Enclosure{}; };
        auto id = value_of([](double x) { return x; });
        auto sq = value_of([](double x) { return x * x; });
        CHECK(check_chain({zero, id}, ClaimKind::chain_le, points_of(g)).status == Status::pass);
        const auto bad = check_chain({zero, id, sq}, ClaimKind::chain_le, points_of(g));
        CHECK(bad.status == Status::fail);
        for (const auto& v : bad.violations) {
            CHECK(v.order == 1);
            CHECK(v.point < 1.0);
        }
        // equal sides satisfy <= but not the strict version
        CHECK(check_chain({id, id}, ClaimKind::chain_le, points_of(g)).status == Status::pass);
        // strictness that cannot be confirmed at the spot points is left undecided
        CHECK(check_chain({id, id}, ClaimKind::chain_lt, points_of(g)).status == Status::inconclusive);
        CHECK(check_chain({zero, id}, ClaimKind::chain_lt, points_of(g)).status == Status::pass);
    }

    TEST_CASE("wide certificates make a point inconclusive, not a pass")
    {
        auto zero = [](const ParamPoint&) { return Enclosure{}; };
        auto fuzzy = [](const ParamPoint& p) { return Enclosure{1e-3 * p.point, 1.0, 1, false}; };
        const auto r = check_chain({zero, fuzzy}, ClaimKind::chain_le, points_of(GridSpec::linear(0.1, 1.0, 10)));
        CHECK(r.status == Status::inconclusive);
        CHECK(r.inconclusive_points == 10);
        auto nan = [](const ParamPoint&) { return Enclosure{std::nan(""), 0.0, 1, false}; };
        CHECK(check_chain({zero, nan}, ClaimKind::chain_le, {{1.0, {}}}).status == Status::inconclusive);
    }

    TEST_CASE("usage errors propagate while other exceptions mark points inconclusive")
    {
        auto zero = [](const ParamPoint&) { return Enclosure{}; };
        auto usage = [](const ParamPoint&) -> Enclosure { throw UsageError("bad"); };
        auto other = [](const ParamPoint&) -> Enclosure { throw std::runtime_error("boom"); };
        CHECK_THROWS_AS(check_chain({zero, usage}, ClaimKind::chain_le, {{1.0, {}}}), UsageError);
        CHECK(check_chain({zero, other}, ClaimKind::chain_le, {{1.0, {}}}).status == Status::inconclusive);
    }

    TEST_CASE("strict claims probe spot points")
    {
        // x^{-12} is CM, but far out it falls below the tolerance scale
        CheckOptions o;
        o.strict = true;
        o.spot_points = {0.5};
        CHECK(check_sign_pattern(power(-12.0), 4, GridSpec::logarithmic(0.5, 1e3, 16), ClaimKind::completely_monotonic,
                                 o)
                  .status == Status::pass);
        o.spot_points = {1e3};
        CHECK(check_sign_pattern(power(-12.0), 4, GridSpec::logarithmic(0.5, 1e3, 16), ClaimKind::completely_monotonic,
                                 o)
                  .status == Status::inconclusive);
    }

    TEST_CASE("monotonicity probe")
    {
        const auto g = GridSpec::linear(0.1, 6.0, 60);
        CHECK(monotonicity_probe(exp_neg(), g, ClaimKind::decreasing).status == Status::pass);
        CHECK(monotonicity_probe(sin_plus_two(), g, ClaimKind::increasing).status == Status::fail);
        CHECK(monotonicity_probe(exp_neg(), g, ClaimKind::decreasing, {}, RangeClaim{0.0, 1.0, true, false}).status ==
              Status::pass);
        const auto r = monotonicity_probe(exp_neg(), g, ClaimKind::decreasing, {}, RangeClaim{0.5, 1.0, true, false});
        CHECK(r.status == Status::fail);
        for (const auto& v : r.violations) {
            CHECK(v.order == 2);
        }
    }

    TEST_CASE("majorization")
    {
        CHECK(check_majorization({0.0, 0.5, 1.0}, {0.25, 0.5, 1.5}));
        CHECK_FALSE(check_majorization({0.5, 0.5}, {0.0, 1.0}));
        CHECK_THROWS_AS(check_majorization({0.0, 1.0}, {0.0}), UsageError);
        CHECK_THROWS_AS(check_majorization({1.0, 0.0}, {0.0, 1.0}), PreconditionError);
    }

    TEST_CASE("merging reports")
    {
        const auto a = check_sign_pattern(exp_neg(), 4, GridSpec{}, ClaimKind::completely_monotonic);
        const auto b = check_sign_pattern(power(1.0), 4, GridSpec{}, ClaimKind::completely_monotonic);
        const auto m = merge_reports("m", {a, b});
        CHECK(m.claim_id == "m");
        CHECK(m.status == Status::fail);
        CHECK(m.points_checked == a.points_checked + b.points_checked);
        CHECK(m.violations.size() == b.violations.size());
        CHECK(m.grid == a.grid);
    }

    TEST_CASE("status and claim names")
    {
        for (Status s : {Status::pass, Status::fail, Status::inconclusive}) {
            CHECK(parse_status(to_string(s)) == s);
        }
        CHECK(parse_claim(to_string(ClaimKind::chain_lt)) == ClaimKind::chain_lt);
        CHECK(tolerance_scale(1e-12, -3.0, 2.0) == doctest::Approx(3e-12));
        CHECK(tolerance_scale(1e-12, 0.1, 0.2) == doctest::Approx(1e-12));
    }

    TEST_CASE("parallel_for runs every index and rethrows the first failure")
    {
        std::vector<int> hit(50, 0);
        parallel_for(hit.size(), 4, [&](std::size_t i) { hit[i] = int(i); });
        for (std::size_t i = 0; i < hit.size(); ++i) {
            CHECK(hit[i] == int(i));
        }
        try {
            parallel_for(20, 4, [](std::size_t i) {
                if (i == 7 || i == 13) {
                    throw std::runtime_error(std::to_string(i));
                }
            });
            FAIL("expected an exception");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()) == "7");
        }
    }
}
